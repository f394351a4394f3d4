from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pseudoalg import PseudoAlgebra, change_basis
from pseudoalg.annihilation import (
    CLOSED_FORM_NORMALIZATION,
    Current,
    CurrentTable,
    RhoShift,
    UnknownClosedForm,
    closed_form_bracket,
    closed_form_families,
    closed_form_jacobi,
    compare,
    fb,
    generic_bracket,
    window_jacobi,
)
from pseudoalg.catalog import build
from pseudoalg.hopf import HPoly
from pseudoalg.tensor import ALPHA, Tensor2

F = Fraction
VIRASORO = PseudoAlgebra(1, {(0, 0): {0: ALPHA}}, name="virasoro")
SV = {"lambda1": F(1, 2), "kappa1": 0, "a": 0, "w01": -1}


@given(st.integers(-30, 30), st.integers(1, 8))
def test_generalized_binomial_pascal(p, a):
    assert fb(p + 1, a) == fb(p, a) + fb(p, a - 1)


def test_generalized_binomial_values():
    assert fb(5, 0) == 1
    assert fb(-1, 3) == -1
    assert fb(4, 2) == 6
    assert fb(3, -1) == 0


def test_witt_relation():
    assert generic_bracket(VIRASORO, Current(0, 2), Current(0, 0)) == {Current(0, 1): 2}


def test_y_y_bracket_of_sv():
    A = build("mtype-B", SV)
    for p in range(-3, 4):
        for q in range(-3, 4):
            got = generic_bracket(A, Current(1, p + 1), Current(1, q + 1))
            assert got == ({Current(2, p + q + 1): F(p - q)} if p != q else {})


def test_zero_components_give_zero():
    A = PseudoAlgebra(2, {(0, 0): {0: ALPHA}})
    assert generic_bracket(A, Current(1, 3), Current(0, -2)) == {}


def test_rho_shift_labels():
    shift = RhoShift(F(1, 3))
    c = shift.to_current("M", F(2, 3) + 4)
    assert c == Current(2, 5)
    assert shift.label(c) == ("M", F(14, 3))
    with pytest.raises(ValueError):
        shift.to_current("Y", 1)


def test_closed_form_spot_values():
    got = closed_form_bracket("mtype-B", {"lambda1": F(1, 2), "kappa1": 0}, F(1, 2), ("L", 0), ("Y", F(1, 2)))
    assert got == {("Y", F(1, 2)): F(-1, 2)}
    got = closed_form_bracket("e14", {"lambda1": F(1, 2), "a00": 1}, 0, ("M", 2), ("N", 3))
    assert got == {("M", F(6)): F(2)}
    # reversed pair via antisymmetry
    got = closed_form_bracket("e14", {"lambda1": F(1, 2), "a00": 1}, 0, ("N", 3), ("M", 2))
    assert got == {("M", F(6)): F(-2)}
    with pytest.raises(UnknownClosedForm):
        closed_form_bracket("thm27-1", {}, 0, ("L", 0), ("L", 1))


def test_closed_form_e_has_quadratic_coefficient():
    p, q, r = F(1), F(3), F(0)
    got = closed_form_bracket("mtype-E", {"kappa1": 0}, r, ("Y", p), ("Y", q))
    expected = (q - p) / 2 * (2 * p * p + 3 * p * q + 2 * q * q + (p + q) + 1)
    assert got == {("M", p + q - 2): expected}


def test_generic_sv_spot_value_matches_substitution():
    A = build("mtype-B", SV)
    shift = RhoShift(F(1, 2))
    got = generic_bracket(A, shift.to_current("L", 0), shift.to_current("Y", F(1, 2)))
    assert got == {shift.to_current("Y", F(1, 2)): F(-1, 2)}


@pytest.mark.parametrize(
    "family,params",
    [
        ("mtype-B", SV),
        ("mtype-C", {"w02": 1, "kappa1": F(2, 3)}),
        ("mtype-D", {"w12": 1, "kappa1": F(-1, 2)}),
    ],
)
@pytest.mark.parametrize("rho", [F(0), F(1, 2), F(1, 3)])
def test_compare_matches(family, params, rho):
    rep = compare(family, params, rho, (-4, 4))
    assert rep.ok, rep.mismatches[0].describe()
    assert rep.pairs > 0


def test_compare_c_spec_window():
    assert compare("mtype-C", {"w02": 1, "kappa1": 0}, F(1, 3), (-4, 4)).ok


def test_compare_b_opposite_sign_differs_only_in_y_y():
    rep = compare("mtype-B", {**SV, "w01": 1}, F(1, 2), (-3, 3))
    assert not rep.ok
    assert {(m.x[0], m.y[0]) for m in rep.mismatches} == {("Y", "Y")}
    for m in rep.mismatches:
        assert m.generic == {k: -v for k, v in m.printed.items()}


def test_compare_rejects_wide_window():
    with pytest.raises(ValueError):
        compare("mtype-B", SV, 0, (-13, 0))


def test_normalizations_cover_closed_forms():
    assert set(CLOSED_FORM_NORMALIZATION) == set(closed_form_families())


@pytest.mark.parametrize("family", ["mtype-B", "mtype-C", "mtype-D"])
def test_printed_forms_that_match_are_themselves_lie(family):
    params = {"lambda1": F(1, 2), "kappa1": F(1, 3)}
    assert closed_form_jacobi(family, params, F(1, 3), (-2, 2)).jacobi_pass


def test_window_jacobi_virasoro_and_e():
    assert window_jacobi(VIRASORO, 0, (-5, 5)).ok
    E = build("mtype-E", {"w03": 1, "kappa1": 0})
    assert window_jacobi(E, 0, (-3, 3)).ok


def test_window_jacobi_detects_a_broken_algebra():
    E = build("mtype-E", {"w03": 1, "kappa1": 0})
    broken = E.with_gamma(1, 1, 2, E.gamma(1, 1, 2) + Tensor2({(2, 0): 1, (0, 2): -1}), name="broken")
    rep = window_jacobi(broken, 0, (-2, 2), skew=False)
    assert not rep.jacobi_pass


def test_window_jacobi_is_invariant_under_constant_basis_change():
    A = build("mtype-B", SV)
    one, zero = HPoly.one(), HPoly.zero()
    M = [[one, zero, zero], [zero, HPoly({0: 2}), zero], [zero, HPoly({0: 3}), one]]
    B = change_basis(A, M)
    assert window_jacobi(B, F(1, 2), (-2, 2)).ok


def test_current_table_json():
    data = CurrentTable(VIRASORO).to_json((-1, 1), family="virasoro")
    assert data["kind"] == "annihilation"
    assert data["brackets"]


def _catalog_sample():
    import random

    from pseudoalg.catalog import CORRECTIONS, list_families, sample_params

    rng = random.Random(3)
    for spec in list_families():
        if CORRECTIONS.get(spec.id, {}).get("kind") != "empty":
            yield spec.id, build(spec.id, sample_params(spec.id, rng))


def test_every_catalog_instance_passes_window_jacobi():
    from pseudoalg import classify

    for fid, A in _catalog_sample():
        rep = window_jacobi(A, 0, (-2, 2), skew=classify(A) == "lie")
        assert rep.ok, fid
