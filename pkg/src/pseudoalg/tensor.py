"""Sparse elements of H (x) H and H (x) H (x) H, and the operators built on them.

A :class:`Tensor2` maps ``(a, b)`` to the coefficient of ``s^(a) (x) s^(b)``.
The two composition operators encode the basis form of the Jacobi identity:

* ``comp_left(g, d)``  is ``(g Delta (x) 1) d``: the H(x)3 coefficient of
  ``[g (x)_H u, v]`` when ``[u, v] = d (x)_H w``;
* ``comp_right(g, d)`` is ``(1 (x) g Delta) d``: the coefficient of
  ``[u, g (x)_H v]`` when ``[u, v] = d (x)_H w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Mapping

from .hopf import HPoly, Scalar, hp_coproduct, to_rat

__all__ = [
    "Tensor2",
    "Tensor3",
    "CanonicalPair",
    "t2_swap",
    "t3_swap12",
    "t2_mul",
    "t3_mul",
    "right_delta_action",
    "comp_left",
    "comp_right",
    "partial_counit",
    "normal_form",
    "reconstruct",
    "ALPHA",
    "beta",
]


class _Sparse:
    __slots__ = ("_t", "_hash")
    arity = 0

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        t: dict[tuple, Fraction] = {}
        if terms:
            for k, v in terms.items():
                k = tuple(int(x) for x in k)
                if len(k) != self.arity or min(k) < 0:
                    raise ValueError(f"bad degree tuple {k} for arity {self.arity}")
                v = to_rat(v)
                if v:
                    t[k] = v
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict):
        obj = cls.__new__(cls)
        obj._t = {k: v for k, v in t.items() if v}
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._t)

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(sorted(self._t.items()))

    def __getitem__(self, key) -> Fraction:
        return self._t.get(tuple(key), Fraction(0))

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def max_degree(self, slot: int) -> int:
        """Largest degree appearing in ``slot`` (0-based), -1 when zero."""
        return max((k[slot] for k in self._t), default=-1)

    def __add__(self, other):
        if type(other) is not type(self):
            if other == 0:
                return self
            return NotImplemented
        t = dict(self._t)
        for k, v in other._t.items():
            t[k] = t.get(k, 0) + v
        return type(self)._raw(t)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        c = to_rat(c)
        return type(self)._raw({k: c * v for k, v in self._t.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is type(self):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._t.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for k, v in sorted(self._t.items()):
            mono = "⊗".join(_mono(n) for n in k)
            parts.append(mono if v == 1 else f"-{mono}" if v == -1 else f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


def _mono(n: int) -> str:
    return "1" if n == 0 else "s" if n == 1 else f"s({n})"


class Tensor2(_Sparse):
    """Element of H (x) H."""

    __slots__ = ()
    arity = 2

    @classmethod
    def simple(cls, f: HPoly, g: HPoly) -> Tensor2:
        """The pure tensor ``f (x) g``."""
        return cls._raw({(a, b): u * v for a, u in f.items() for b, v in g.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            return t2_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def is_antisymmetric(self) -> bool:
        return t2_swap(self) == -self


class Tensor3(_Sparse):
    """Element of H (x) H (x) H."""

    __slots__ = ()
    arity = 3

    def __mul__(self, other):
        if isinstance(other, Tensor3):
            return t3_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented


def t2_swap(x: Tensor2) -> Tensor2:
    return Tensor2._raw({(b, a): v for (a, b), v in x._t.items()})


def t3_swap12(x: Tensor3) -> Tensor3:
    return Tensor3._raw({(b, a, c): v for (a, b, c), v in x._t.items()})


def _slot_mul(x, y, cls):
    out: dict[tuple, Fraction] = {}
    for k1, u in x._t.items():
        for k2, v in y._t.items():
            w = u * v
            for i, j in zip(k1, k2):
                w *= comb(i + j, i)
            key = tuple(i + j for i, j in zip(k1, k2))
            out[key] = out.get(key, 0) + w
    return cls._raw(out)


def t2_mul(x: Tensor2, y: Tensor2) -> Tensor2:
    """Slotwise product ``(f (x) g)(f' (x) g') = ff' (x) gg'``."""
    return _slot_mul(x, y, Tensor2)


def t3_mul(x: Tensor3, y: Tensor3) -> Tensor3:
    return _slot_mul(x, y, Tensor3)


def right_delta_action(x: Tensor2, h: HPoly) -> Tensor2:
    """Return ``x * Delta(h)``."""
    return t2_mul(x, hp_coproduct(h))


def comp_left(gamma: Tensor2, delta: Tensor2) -> Tensor3:
    """``(gamma Delta (x) 1) delta``; see the module docstring."""
    out: dict[tuple, Fraction] = {}
    for (a, b), u in gamma._t.items():
        for (c, d), v in delta._t.items():
            w = u * v
            for t in range(c + 1):
                key = (a + t, b + c - t, d)
                out[key] = out.get(key, 0) + w * comb(a + t, t) * comb(b + c - t, b)
    return Tensor3._raw(out)


def comp_right(gamma: Tensor2, delta: Tensor2) -> Tensor3:
    """``(1 (x) gamma Delta) delta``; ``gamma`` is the inner bracket."""
    out: dict[tuple, Fraction] = {}
    for (a, b), u in gamma._t.items():
        for (c, d), v in delta._t.items():
            w = u * v
            for t in range(d + 1):
                key = (c, a + t, b + d - t)
                out[key] = out.get(key, 0) + w * comb(a + t, t) * comb(b + d - t, b)
    return Tensor3._raw(out)


def partial_counit(x: Tensor3, slot: int) -> Tensor2:
    """Apply the counit to ``slot`` (1, 2 or 3) and keep the other two slots in order."""
    if slot not in (1, 2, 3):
        raise ValueError("slot must be 1, 2 or 3")
    i = slot - 1
    out: dict[tuple, Fraction] = {}
    for k, v in x._t.items():
        if k[i] == 0:
            key = k[:i] + k[i + 1:]
            out[key] = out.get(key, 0) + v
    return Tensor2._raw(out)


@dataclass(frozen=True)
class CanonicalPair:
    """``sum_i (s^(d_i) (x) 1) (x)_H (h_i . e)`` with strictly increasing ``d_i``."""

    terms: tuple[tuple[int, HPoly], ...]

    def __post_init__(self):
        degs = [d for d, _ in self.terms]
        if degs != sorted(set(degs)):
            raise ValueError("lambda degrees must be strictly increasing")
        if any(h.is_zero() for _, h in self.terms):
            raise ValueError("actions must be nonzero")

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def normal_form(
    x: Tensor2,
    module_action: Callable[[HPoly, int], HPoly] | None = None,
) -> CanonicalPair:
    """Rewrite ``x (x)_H e`` in the free basis ``{s^(d) (x) 1}`` over ``Delta(H)``.

    ``s^(a) (x) s^(b)`` becomes ``sum_t (-1)^t C(a+t, t) (s^(a+t) (x) 1) (x)_H s^(b-t) e``.
    ``module_action(h, d)`` may post-process each action (identity by default).
    """
    acc: dict[int, dict[int, Fraction]] = {}
    for (a, b), v in x._t.items():
        for t in range(b + 1):
            c = v * comb(a + t, t) * (-1 if t % 2 else 1)
            slot = acc.setdefault(a + t, {})
            slot[b - t] = slot.get(b - t, 0) + c
    terms = []
    for d in sorted(acc):
        h = HPoly(acc[d])
        if module_action is not None:
            h = module_action(h, d)
        if not h.is_zero():
            terms.append((d, h))
    return CanonicalPair(tuple(terms))


def reconstruct(cp: CanonicalPair) -> Tensor2:
    """Inverse of :func:`normal_form`: ``sum_i (s^(d_i) (x) 1) Delta(h_i)``."""
    total = Tensor2()
    for d, h in cp.terms:
        total = total + t2_mul(Tensor2({(d, 0): 1}), hp_coproduct(h))
    return total


ALPHA = Tensor2({(1, 0): 1, (0, 1): -1})


def beta(lam: Scalar, kappa: Scalar = 0) -> Tensor2:
    """``lam s (x) 1 - 1 (x) s + kappa 1 (x) 1``, the bracket of a rank-one Virasoro module."""
    return Tensor2({(1, 0): lam, (0, 1): -1, (0, 0): kappa})
