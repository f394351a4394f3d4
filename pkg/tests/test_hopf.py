from fractions import Fraction

from hypothesis import given

from pseudoalg.hopf import HPoly, hp_antipode, hp_coproduct, hp_counit, hp_mul
from pseudoalg.tensor import Tensor2, t2_mul

from conftest import hpolys


def s(n, c=1):
    return HPoly.basis(n, c)


def test_divided_power_products():
    assert hp_mul(s(1), s(1)) == s(2, 2)
    assert hp_mul(s(2), s(3)) == s(5, 10)
    assert hp_mul(HPoly.zero(), s(4)).is_zero()


def test_coproduct_examples():
    assert hp_coproduct(s(2)) == Tensor2({(0, 2): 1, (1, 1): 1, (2, 0): 1})
    assert hp_coproduct(HPoly.one()) == Tensor2({(0, 0): 1})
    assert hp_coproduct(s(1) + s(0)) == Tensor2({(0, 1): 1, (1, 0): 1, (0, 0): 1})


def test_counit_and_antipode_examples():
    assert hp_counit(s(3)) == 0
    assert hp_counit(HPoly({0: Fraction(5, 2)})) == Fraction(5, 2)
    assert hp_counit(HPoly({0: 2, 1: 3})) == 2
    assert hp_antipode(s(3)) == -s(3)
    assert hp_antipode(s(2)) == s(2)
    assert hp_antipode(HPoly.one()) == HPoly.one()


def test_monomial_basis_round_trip():
    h = HPoly({0: 1, 2: 3, 5: Fraction(-1, 2)})
    assert HPoly.from_monomial(h.to_monomial()) == h
    # s^2 = 2 s^(2)
    assert HPoly.from_monomial([0, 0, 1]) == s(2, 2)


def _apply_each_slot(t: Tensor2, f) -> dict:
    """Apply ``f`` to the first slot and multiply into the second, summing: m(f (x) id)."""
    out = HPoly.zero()
    for (a, b), c in t.items():
        out = out + hp_mul(f(HPoly.basis(a)), HPoly.basis(b)).scale(c)
    return out


def _coassoc_sides(h: HPoly):
    left, right = {}, {}
    for (a, b), c in hp_coproduct(h).items():
        for (x, y), d in hp_coproduct(HPoly.basis(a)).items():
            left[(x, y, b)] = left.get((x, y, b), 0) + c * d
        for (x, y), d in hp_coproduct(HPoly.basis(b)).items():
            right[(a, x, y)] = right.get((a, x, y), 0) + c * d
    return left, right


def test_hopf_axioms_through_degree_8():
    for n in range(9):
        h = s(n)
        left, right = _coassoc_sides(h)
        assert left == right
        counit_left = HPoly.zero()
        counit_right = HPoly.zero()
        for (a, b), c in hp_coproduct(h).items():
            counit_left = counit_left + HPoly.basis(b).scale(c * hp_counit(HPoly.basis(a)))
            counit_right = counit_right + HPoly.basis(a).scale(c * hp_counit(HPoly.basis(b)))
        assert counit_left == h and counit_right == h
        assert _apply_each_slot(hp_coproduct(h), hp_antipode) == HPoly({0: hp_counit(h)})


@given(hpolys(), hpolys())
def test_coproduct_is_multiplicative(a, b):
    assert hp_coproduct(hp_mul(a, b)) == t2_mul(hp_coproduct(a), hp_coproduct(b))


@given(hpolys(), hpolys())
def test_antipode_is_an_algebra_map(a, b):
    # H is commutative, so the antipode is multiplicative
    assert hp_antipode(hp_mul(a, b)) == hp_mul(hp_antipode(a), hp_antipode(b))


@given(hpolys(), hpolys(), hpolys())
def test_ring_axioms(a, b, c):
    assert hp_mul(a, b) == hp_mul(b, a)
    assert hp_mul(a, hp_mul(b, c)) == hp_mul(hp_mul(a, b), c)
    assert hp_mul(a, b + c) == hp_mul(a, b) + hp_mul(a, c)
