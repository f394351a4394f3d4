"""Exact arithmetic in the Hopf algebra H = k[s] over the rationals.

Polynomials are stored in the divided-power basis s^(n) = s^n / n!, so that

    s^(i) * s^(j) = C(i+j, i) s^(i+j)
    Delta(s^(n))  = sum_i s^(i) (x) s^(n-i)
    eps(s^(n))    = [n == 0]
    S(s^(n))      = (-1)^n s^(n)

Scalars are :class:`fractions.Fraction`, exported here as ``Rat``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Union

Rat = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rat",
    "HPoly",
    "to_rat",
    "hp_mul",
    "hp_coproduct",
    "hp_counit",
    "hp_antipode",
]


def to_rat(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-5/3"`` to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class HPoly:
    """Element of k[s] written as ``sum c_n s^(n)``.

    Instances are immutable and hashable.  Zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for n, v in coeffs.items():
                if n < 0:
                    raise ValueError(f"negative divided-power degree {n}")
                v = to_rat(v)
                if v:
                    c[int(n)] = c.get(int(n), Fraction(0)) + v
                    if not c[int(n)]:
                        del c[int(n)]
        self._c = c
        self._hash = None

    # constructors
    @classmethod
    def zero(cls) -> HPoly:
        return cls()

    @classmethod
    def one(cls) -> HPoly:
        return cls({0: 1})

    @classmethod
    def basis(cls, n: int, coeff: Scalar = 1) -> HPoly:
        """Return ``coeff * s^(n)``."""
        return cls({n: coeff})

    @classmethod
    def from_monomial(cls, coeffs: Iterable[Scalar]) -> HPoly:
        """Build from ordinary monomial coefficients ``[a_0, a_1, ...]`` of ``sum a_n s^n``."""
        return cls({n: to_rat(a) * factorial(n) for n, a in enumerate(coeffs)})

    def to_monomial(self) -> list[Fraction]:
        """Ordinary monomial coefficients, lowest degree first."""
        if not self._c:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for n, v in self._c.items():
            out[n] = v / factorial(n)
        return out

    # mapping-like access
    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, n: int) -> Fraction:
        return self._c.get(n, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def degree(self) -> int:
        """Largest stored degree, or -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    # arithmetic
    def __add__(self, other) -> HPoly:
        other = _as_hpoly(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for n, v in other._c.items():
            c[n] = c.get(n, 0) + v
        return HPoly(c)

    __radd__ = __add__

    def __neg__(self) -> HPoly:
        return HPoly({n: -v for n, v in self._c.items()})

    def __sub__(self, other) -> HPoly:
        other = _as_hpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> HPoly:
        return (-self) + other

    def __mul__(self, other) -> HPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, HPoly):
            return hp_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, k: Scalar) -> HPoly:
        k = to_rat(k)
        if not k:
            return HPoly()
        return HPoly({n: k * v for n, v in self._c.items()})

    def __eq__(self, other) -> bool:
        other = _as_hpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"HPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for n, v in sorted(self._c.items()):
            mono = "1" if n == 0 else ("s" if n == 1 else f"s({n})")
            if v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v}*{mono}" if n else f"{v}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_hpoly(x):
    if isinstance(x, HPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return HPoly({0: x})
    return NotImplemented


def hp_mul(a: HPoly, b: HPoly) -> HPoly:
    """Product in k[s]: ``s^(i) s^(j) = C(i+j, i) s^(i+j)``."""
    out: dict[int, Fraction] = {}
    for i, u in a._c.items():
        for j, v in b._c.items():
            out[i + j] = out.get(i + j, 0) + comb(i + j, i) * u * v
    return HPoly(out)


def hp_coproduct(a: HPoly):
    """Coproduct ``Delta(s^(n)) = sum_i s^(i) (x) s^(n-i)``, returned as a Tensor2."""
    from .tensor import Tensor2

    out: dict[tuple[int, int], Fraction] = {}
    for n, v in a._c.items():
        for i in range(n + 1):
            out[(i, n - i)] = out.get((i, n - i), 0) + v
    return Tensor2(out)


def hp_counit(a: HPoly) -> Fraction:
    return a[0]


def hp_antipode(a: HPoly) -> HPoly:
    return HPoly({n: (-v if n % 2 else v) for n, v in a._c.items()})
