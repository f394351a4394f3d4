from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pseudoalg import PseudoAlgebra, check
from pseudoalg.hopf import HPoly
from pseudoalg.solver import (
    NonlinearOccurrence,
    UnknownTemplate,
    UnknownTensor,
    coboundary,
    cohomology,
    enumerate_mtype,
    residual_as_linear_map,
    same_class,
    solve_eta,
    template_residual,
)
from pseudoalg.tensor import ALPHA, Tensor2, beta, t2_swap

F = Fraction


def _span_contains(basis, t):
    from pseudoalg.linalg import rank

    keys = sorted({k for b in basis + [t] for k in b.terms})
    idx = {k: n for n, k in enumerate(keys)}
    rows = [{idx[k]: v for k, v in b.items()} for b in basis]
    return rank(rows) == rank(rows + [{idx[k]: v for k, v in t.items()}])


def test_aa1_kernel_contains_alpha():
    eta1 = beta(0, 0)
    known = {"eta1": eta1, "eta2": -t2_swap(eta1)}
    system = residual_as_linear_map("aa1", known, UnknownTensor("alpha_p", 4, 4))
    assert system.is_homogeneous()
    assert _span_contains(system.kernel(), ALPHA)


def test_kernel_vectors_satisfy_the_template():
    eta1 = beta(-2, 0)
    known = {"eta1": eta1, "eta2": -t2_swap(eta1)}
    for t in residual_as_linear_map("aa1", known, UnknownTensor("alpha_p", 4, 4)).kernel():
        assert all(r.is_zero() for r in template_residual("aa1", {**known, "alpha_p": t}))


def test_quadratic_unknown_is_rejected():
    with pytest.raises(NonlinearOccurrence):
        residual_as_linear_map("eq212", {"eta12": Tensor2(), "eta21": Tensor2()}, UnknownTensor("eta11", 2, 2))
    with pytest.raises(UnknownTemplate):
        residual_as_linear_map("nope", {}, UnknownTensor("x", 1, 1))


def test_antisymmetric_unknown_needs_square_box():
    with pytest.raises(ValueError):
        UnknownTensor("x", 2, 3, "antisymmetric")


def test_cohomology_examples():
    rep = cohomology("lie", -7, 0, 12)
    assert rep.h2_dim == 1
    x36 = Tensor2({(3, 6): 1, (6, 3): -1, (4, 5): -3, (5, 4): 3})
    assert same_class("lie", -7, 0, 12, rep.basis, [x36])

    rep = cohomology("leibniz", -3, 0, 12)
    assert rep.h2_dim == 1
    x23 = Tensor2({(2, 3): F(1, 5), (3, 2): F(4, 5), (4, 1): F(2, 5)})
    assert same_class("leibniz", -3, 0, 12, rep.basis, [x23])

    assert cohomology("lie", 5, 1, 12).h2_dim == 0


def test_printed_representatives_are_solutions():
    # The representatives feed rank-two algebras that must be Lie or Leibniz.
    for lam, rep in [(-5, Tensor2({(3, 4): 1, (4, 3): -1})), (-1, Tensor2({(1, 2): 1, (2, 1): -1}))]:
        b = beta(lam)
        A = PseudoAlgebra(2, {(0, 0): {0: ALPHA, 1: rep}, (0, 1): {1: b}, (1, 0): {1: -t2_swap(b)}})
        assert check(A).ok


@settings(max_examples=25)
@given(
    st.sampled_from(["lie", "leibniz"]),
    st.integers(-6, 3),
    st.integers(0, 2),
    st.dictionaries(st.integers(0, 5), st.integers(-5, 5), min_size=1, max_size=3),
)
def test_coboundaries_solve_the_identity(variant, lam, kappa, coeffs):
    A = HPoly(coeffs)
    t = coboundary(variant, lam, kappa, A)
    eta1 = beta(lam, kappa)
    eta2 = -t2_swap(eta1) if variant == "lie" else Tensor2()
    template = "aa1" if variant == "lie" else "L8"
    assert all(r.is_zero() for r in template_residual(template, {"eta1": eta1, "eta2": eta2, "alpha_p": t}))


def test_cohomology_report_json():
    data = cohomology("lie", 0, 0, 6).to_json()
    assert data["kind"] == "cohomology"
    assert data["h2_dim"] == 1


def test_enumerate_mtype_examples():
    rows = {(r.m, r.lambda1): r for r in enumerate_mtype(4, 12, [F(2, 3), F(1, 3), F(3)])}
    b = rows[(1, F(3))]
    assert b.solvable and b.lambda2 == 5
    assert len(b.basis) == 1
    assert b.basis[0] == ALPHA.scale(b.basis[0][(1, 0)])
    assert rows[(3, F(2, 3))].solvable
    assert not rows[(3, F(1, 3))].solvable
    assert not any(rows[(4, l)].solvable for l in (F(2, 3), F(1, 3), F(3)))


def test_solve_eta_examples():
    sol = solve_eta(8, 0, 0)
    assert sol.dim == 1
    assert sol.basis[0] == Tensor2({(0, 0): sol.basis[0][(0, 0)]})
    assert solve_eta(8, F(1, 2), 0).dim == 0
    assert solve_eta(8, 0, 3).dim == 0


@pytest.mark.parametrize("variant,lam", [("lie", 0), ("lie", -1), ("lie", -2), ("lie", -5), ("lie", -7),
                                         ("leibniz", 1), ("leibniz", -1), ("leibniz", -2), ("leibniz", -3)])
def test_every_representative_builds_an_algebra(variant, lam):
    b = beta(lam)
    partner = {(1, 0): {1: -t2_swap(b)}} if variant == "lie" else {}
    for rep in cohomology(variant, lam, 0, 12).basis:
        A = PseudoAlgebra(2, {(0, 0): {0: ALPHA, 1: rep}, (0, 1): {1: b}, **partner})
        assert check(A).jacobi_pass
        assert check(A).ok == (variant == "lie")


def test_cohomology_is_stable_in_the_degree_bound():
    for lam in (-7, -2, 0, 3):
        dims = {cohomology("lie", lam, 0, bound).h2_dim for bound in (10, 12, 14)}
        assert len(dims) == 1
