import random
from fractions import Fraction

import pytest

from pseudoalg import (
    PseudoAlgebra,
    SubmoduleBasis,
    change_basis,
    check,
    check_jacobi,
    check_skew,
    classify,
    derived_series,
)
from pseudoalg.algebra import bracket_submodules
from pseudoalg.catalog import build
from pseudoalg.hopf import HPoly
from pseudoalg.solver import coboundary
from pseudoalg.tensor import ALPHA, Tensor2, beta, t2_swap

VIRASORO = PseudoAlgebra(1, {(0, 0): {0: ALPHA}}, name="virasoro")
X34 = Tensor2({(3, 4): 1, (4, 3): -1})


def rank_two(lam, alpha_prime):
    b = beta(lam)
    return PseudoAlgebra(
        2, {(0, 0): {0: ALPHA, 1: alpha_prime}, (0, 1): {1: b}, (1, 0): {1: -t2_swap(b)}}
    )


def test_virasoro_is_lie():
    assert check_skew(VIRASORO).skew_pass
    assert check_jacobi(VIRASORO).jacobi_pass
    assert classify(VIRASORO) == "lie"


def test_zero_algebra_passes():
    Z = PseudoAlgebra(3, {})
    assert check(Z).ok
    assert classify(Z) == "lie"


def test_type_12_needs_lambda_minus_5():
    assert check_jacobi(rank_two(-5, X34)).jacobi_pass
    bad = check_jacobi(rank_two(-4, X34))
    assert not bad.jacobi_pass
    first = bad.failures[0]
    assert (first.indices, first.component) == ((0, 0, 0), 1)
    assert classify(rank_two(-4, X34)) == "not-leibniz"


def test_type_15_is_leibniz_not_lie():
    A = build("thm27-15", {"x00": 2})
    assert classify(A) == "leibniz-not-lie"


def test_type_14_fails_skew_at_one_zero():
    A = build("thm27-14", {"lambda": 2, "kappa": 3})
    rep = check_skew(A)
    assert not rep.skew_pass
    assert any(f.indices == (1, 0) for f in rep.failures)
    assert check_jacobi(A).jacobi_pass


def test_bracket_submodules_virasoro():
    full = SubmoduleBasis.full(1)
    gens = bracket_submodules(VIRASORO, full, full).generators
    assert (-HPoly.basis(1),) in gens
    assert (HPoly({0: 2}),) in gens


def test_bracket_submodules_abelian():
    full = SubmoduleBasis.full(2)
    assert len(bracket_submodules(PseudoAlgebra(2, {}), full, full)) == 0


def test_derived_series_examples():
    solvable = build("lem22-i", {"alpha_prime": ALPHA})
    assert [r for r, _ in derived_series(solvable, 5)] == [2, 1, 0]
    assert derived_series(VIRASORO, 5) == [(1, False)] * 6
    assert derived_series(PseudoAlgebra(3, {}), 5) == [(3, False), (0, True)]
    with pytest.raises(ValueError):
        derived_series(VIRASORO, 0)


def test_gauge_change_adds_a_coboundary():
    lam = Fraction(3)
    A = build("thm27-8", {"lambda": lam})
    shift = HPoly({0: 1, 2: Fraction(1, 2), 3: -2})
    B = change_basis(A, [[HPoly.one(), shift], [HPoly.zero(), HPoly.one()]])
    assert check(B).ok
    assert B.gamma(0, 0, 0) == ALPHA
    assert B.gamma(0, 0, 1) == A.gamma(0, 0, 1) + coboundary("lie", lam, 0, shift)
    assert B.gamma(0, 1, 1) == A.gamma(0, 1, 1)


def test_change_basis_rejects_singular_matrix():
    s = HPoly.basis(1)
    with pytest.raises(ValueError):
        change_basis(VIRASORO, [[s]])


def mutate(A: PseudoAlgebra, rng: random.Random) -> PseudoAlgebra:
    """Perturb one coefficient of one nonzero structure constant."""
    i, j, k, t = rng.choice(list(A.nonzero()))
    keys = list(t.terms) + [(rng.randint(0, 3), rng.randint(0, 3))]
    key = rng.choice(keys)
    delta = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return A.with_gamma(i, j, k, t + Tensor2({key: delta}))


@pytest.mark.parametrize("family", ["thm27-12", "mtype-B", "mtype-E", "e14", "tsv"])
def test_mutations_are_detected(family):
    from pseudoalg.catalog import sample_params

    rng = random.Random(family)
    A = build(family, sample_params(family, rng))
    for _ in range(5):
        assert not check(mutate(A, rng)).ok
