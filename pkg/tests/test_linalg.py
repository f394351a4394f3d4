from fractions import Fraction

from hypothesis import given, strategies as st

from pseudoalg.hopf import HPoly
from pseudoalg.linalg import Echelon, integer_normalize, nullspace, poly_rank, rank

from conftest import rationals

rows_strategy = st.lists(
    st.dictionaries(st.integers(0, 5), rationals.filter(bool), min_size=1, max_size=4),
    max_size=6,
)


def dot(r, v):
    return sum(c * v.get(k, 0) for k, c in r.items())


def test_small_system():
    rows = [{0: Fraction(1), 1: Fraction(-1)}, {1: Fraction(2), 2: Fraction(-2)}]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    assert integer_normalize(basis[0]) == {0: 1, 1: 1, 2: 1}
    assert rank(rows) == 2


def test_integer_normalize_sign_and_order():
    v = {0: Fraction(-1, 2), 3: Fraction(3, 4)}
    assert integer_normalize(v) == {0: 2, 3: -3}
    assert integer_normalize(v, order=[3, 0]) == {0: -2, 3: 3}
    assert integer_normalize({}) == {}


def test_echelon_reports_dependence():
    e = Echelon()
    assert e.add({0: Fraction(1), 1: Fraction(1)})
    assert not e.add({0: Fraction(2), 1: Fraction(2)})
    assert e.rank == 1


@given(rows_strategy)
def test_nullspace_is_annihilated_and_complementary(rows):
    basis = nullspace(rows, 6)
    for v in basis:
        assert all(dot(r, v) == 0 for r in rows)
    assert len(basis) + rank(rows) == 6


def test_poly_rank_over_fraction_field():
    s = HPoly.basis(1)
    one = HPoly.one()
    # (s, 1) and (s^2, s) are proportional over k(s)
    s2 = s * s
    assert poly_rank([[s, one], [s2, s]]) == 1
    assert poly_rank([[s, one], [one, s]]) == 2
    assert poly_rank([[HPoly.zero(), HPoly.zero()]]) == 0
