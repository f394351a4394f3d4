"""Exact computations with Lie and Leibniz pseudoalgebras over H = k[s]."""

from .algebra import (
    CheckReport,
    PseudoAlgebra,
    SubmoduleBasis,
    change_basis,
    check,
    check_jacobi,
    check_skew,
    classify,
    derived_series,
)
from .hopf import HPoly, Rat, hp_antipode, hp_coproduct, hp_counit, hp_mul
from .tensor import ALPHA, Tensor2, Tensor3, beta, comp_left, comp_right, normal_form, reconstruct

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "CheckReport",
    "HPoly",
    "PseudoAlgebra",
    "Rat",
    "SubmoduleBasis",
    "Tensor2",
    "Tensor3",
    "beta",
    "change_basis",
    "check",
    "check_jacobi",
    "check_skew",
    "classify",
    "comp_left",
    "comp_right",
    "derived_series",
    "hp_antipode",
    "hp_coproduct",
    "hp_counit",
    "hp_mul",
    "normal_form",
    "reconstruct",
]
