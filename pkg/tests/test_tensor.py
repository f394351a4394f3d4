from hypothesis import given

from pseudoalg.hopf import HPoly
from pseudoalg.tensor import (
    ALPHA,
    CanonicalPair,
    Tensor2,
    Tensor3,
    beta,
    comp_left,
    comp_right,
    normal_form,
    partial_counit,
    reconstruct,
    right_delta_action,
    t2_mul,
    t2_swap,
    t3_swap12,
)

from conftest import hpolys, tensors

import pytest


def test_swap_examples():
    assert t2_swap(ALPHA) == -ALPHA
    assert t3_swap12(Tensor3({(2, 1, 0): 1})) == Tensor3({(1, 2, 0): 1})
    ss = Tensor2({(1, 1): 1})
    assert t2_swap(ss) == ss


def test_slot_products():
    assert t2_mul(Tensor2({(1, 0): 1}), Tensor2({(0, 1): 1})) == Tensor2({(1, 1): 1})
    expected = Tensor2({(2, 0): 2, (0, 2): -2})
    assert right_delta_action(ALPHA, HPoly.basis(1)) == expected
    assert right_delta_action(ALPHA, HPoly.one()) == ALPHA
    assert right_delta_action(Tensor2({(0, 0): 1}), HPoly.basis(1)) == Tensor2({(1, 0): 1, (0, 1): 1})
    y = Tensor2({(3, 1): 2, (0, 4): -1})
    assert t2_mul(Tensor2({(0, 0): 1}), y) == y


def test_comp_left_examples():
    delta = Tensor2({(2, 3): 1})
    expected = Tensor3({(i, 2 - i, 3): 1 for i in range(3)})
    assert comp_left(Tensor2({(0, 0): 1}), delta) == expected
    assert comp_left(ALPHA, ALPHA) == Tensor3({(2, 0, 0): 2, (0, 2, 0): -2, (1, 0, 1): -1, (0, 1, 1): 1})
    assert comp_left(Tensor2(), delta).is_zero()


def test_comp_right_examples():
    delta = Tensor2({(2, 3): 1})
    expected = Tensor3({(2, i, 3 - i): 1 for i in range(4)})
    assert comp_right(Tensor2({(0, 0): 1}), delta) == expected
    # (1 (x) alpha Delta)(s(x)1 - 1(x)s), expanded by hand
    hand = Tensor3({(1, 1, 0): 1, (1, 0, 1): -1, (0, 2, 0): -2, (0, 0, 2): 2})
    assert comp_right(ALPHA, ALPHA) == hand
    assert comp_right(ALPHA, Tensor2()).is_zero()


def test_partial_counit():
    assert partial_counit(Tensor3({(1, 2, 0): 1}), 1).is_zero()
    assert partial_counit(Tensor3({(0, 2, 1): 1}), 1) == Tensor2({(2, 1): 1})
    embedded = Tensor3({(1, 0, 0): 1, (0, 1, 0): -1})
    assert partial_counit(embedded, 3) == ALPHA
    with pytest.raises(ValueError):
        partial_counit(embedded, 4)


def test_normal_form_examples():
    assert normal_form(Tensor2({(0, 1): 1})).terms == ((0, HPoly.basis(1)), (1, -HPoly.one()))
    assert normal_form(Tensor2({(4, 0): 1})).terms == ((4, HPoly.one()),)
    assert normal_form(ALPHA).terms == ((0, -HPoly.basis(1)), (1, HPoly({0: 2})))


def test_canonical_pair_validation():
    with pytest.raises(ValueError):
        CanonicalPair(((1, HPoly.one()), (0, HPoly.one())))
    with pytest.raises(ValueError):
        CanonicalPair(((0, HPoly.zero()),))


def test_beta_shape():
    assert beta(2, 3) == Tensor2({(1, 0): 2, (0, 1): -1, (0, 0): 3})


@given(tensors())
def test_normal_form_reconstructs(t):
    assert reconstruct(normal_form(t)) == t


@given(tensors(max_degree=4), tensors(max_degree=4), tensors(max_degree=4))
def test_comp_left_is_bilinear(g, d1, d2):
    assert comp_left(g, d1 + d2) == comp_left(g, d1) + comp_left(g, d2)
    assert comp_left(d1 + d2, g) == comp_left(d1, g) + comp_left(d2, g)


@given(tensors(max_degree=4), hpolys(max_degree=3))
def test_delta_action_commutes_with_swap(t, h):
    # Delta(h) is symmetric, so right multiplication commutes with (12)
    assert t2_swap(right_delta_action(t, h)) == right_delta_action(t2_swap(t), h)
