from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from pseudoalg.hopf import HPoly
from pseudoalg.tensor import Tensor2

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def hpolys(draw, max_degree: int = 6):
    coeffs = draw(st.dictionaries(st.integers(0, max_degree), rationals, max_size=4))
    return HPoly(coeffs)


@st.composite
def tensors(draw, max_degree: int = 8, max_size: int = 6):
    keys = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree))
    return Tensor2(draw(st.dictionaries(keys, rationals, max_size=max_size)))


def frac(x) -> Fraction:
    return Fraction(x)
