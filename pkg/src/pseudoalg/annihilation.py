"""Annihilation Lie algebras over Laurent currents.

With ``A = k[t, 1/t]`` and ``s`` acting as ``d/dt``, the current ``t^p (x)_H e_k``
brackets as

    [t^p e_i, t^q e_j] = sum_k sum_{a,b} c_ab fb(p, a) fb(q, b) t^(p+q-a-b) e_k

for ``gamma_ij^k = sum c_ab s^(a) (x) s^(b)``, where ``fb(p, a) = C(p, a)`` is the
generalized binomial (valid for negative ``p``).  Every pairwise bracket is a finite
sum, so windowed checks are exact.

Labels follow the usual SV conventions: ``L_n = t^(n+1) e0``,
``Y_(p+rho) = t^(p+1) e1``, ``M_(k+2rho) = t^(k+1) e2`` and ``N_m = t^(m+1) e3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterable, Mapping

from .algebra import PseudoAlgebra
from .hopf import Scalar, to_rat

__all__ = [
    "Current",
    "Combination",
    "RhoShift",
    "UnknownClosedForm",
    "fb",
    "generic_bracket",
    "CurrentTable",
    "closed_form_bracket",
    "closed_form_families",
    "CompareReport",
    "compare",
    "WindowReport",
    "window_jacobi",
    "closed_form_jacobi",
    "CLOSED_FORM_NORMALIZATION",
]

Combination = dict["Current", Fraction]


class UnknownClosedForm(KeyError):
    """No printed closed form exists for the requested family."""


@dataclass(frozen=True, order=True)
class Current:
    """``t^exponent (x)_H e_component``."""

    component: int
    exponent: int

    def __str__(self) -> str:
        return f"t^{self.exponent}.e{self.component}"


def fb(p: int, a: int) -> Fraction:
    """``p (p-1) ... (p-a+1) / a!``, the coefficient of ``t^(p-a)`` in ``s^(a) t^p``."""
    if a < 0:
        return Fraction(0)
    num = 1
    for i in range(a):
        num *= p - i
    return Fraction(num, factorial(a))


def _add(acc: dict, key, v) -> None:
    nv = acc.get(key, 0) + v
    if nv:
        acc[key] = nv
    else:
        acc.pop(key, None)


def generic_bracket(A: PseudoAlgebra, x: Current, y: Current) -> dict[Current, Fraction]:
    """Bracket of two basis currents in the annihilation algebra of ``A``."""
    out: dict[Current, Fraction] = {}
    for k, g in A.bracket_of(x.component, y.component).items():
        for (a, b), c in g.items():
            v = c * fb(x.exponent, a) * fb(y.exponent, b)
            if v:
                _add(out, Current(k, x.exponent + y.exponent - a - b), v)
    return out


class CurrentTable:
    """Memoized brackets of ``A``'s currents, extended bilinearly to combinations."""

    def __init__(self, A: PseudoAlgebra):
        self.algebra = A
        self._memo: dict[tuple[Current, Current], dict[Current, Fraction]] = {}

    def basis(self, x: Current, y: Current) -> dict[Current, Fraction]:
        key = (x, y)
        r = self._memo.get(key)
        if r is None:
            r = self._memo[key] = generic_bracket(self.algebra, x, y)
        return r

    def bracket(self, u: Mapping[Current, Fraction], v: Mapping[Current, Fraction]) -> dict[Current, Fraction]:
        out: dict[Current, Fraction] = {}
        for x, a in u.items():
            for y, b in v.items():
                for z, c in self.basis(x, y).items():
                    _add(out, z, a * b * c)
        return out

    def currents(self, window: tuple[int, int], components: Iterable[int] | None = None) -> list[Current]:
        """Basis currents ``t^(n+1) e_k`` for shifts ``n`` in the window.

        ``components`` filters the generators, e.g. ``(1, 2)`` for the subalgebra
        spanned by the Y and M currents.
        """
        lo, hi = window
        comps = range(self.algebra.rank) if components is None else components
        return [Current(k, n + 1) for k in comps for n in range(lo, hi + 1)]

    def to_json(self, window: tuple[int, int], *, family: str = "", params=None, rho: Scalar = 0,
                components: Iterable[int] | None = None) -> dict:
        cur = self.currents(window, components)
        rows = []
        for x, y in product(cur, repeat=2):
            terms = self.basis(x, y)
            if terms:
                rows.append(
                    {
                        "x": {"component": x.component, "exponent": x.exponent},
                        "y": {"component": y.component, "exponent": y.exponent},
                        "terms": [
                            {"coeff": str(c), "component": z.component, "exponent": z.exponent}
                            for z, c in sorted(terms.items())
                        ],
                    }
                )
        return {
            "kind": "annihilation",
            "family": family or self.algebra.name,
            "params": {k: str(v) for k, v in (params or {}).items()},
            "rho": str(to_rat(rho)),
            "window": [window[0], window[1]],
            "brackets": rows,
        }


# Labels and the rho shift


@dataclass(frozen=True)
class RhoShift:
    """Index offsets of the labeled currents: L and N in Z, Y in rho + Z, M in 2 rho + Z."""

    rho: Fraction
    letters: tuple[str, ...] = ("L", "Y", "M", "N")

    def offset(self, letter: str) -> Fraction:
        return {"L": Fraction(0), "Y": self.rho, "M": 2 * self.rho, "N": Fraction(0)}[letter]

    def component(self, letter: str) -> int:
        return self.letters.index(letter)

    def to_current(self, letter: str, index: Scalar) -> Current:
        shift = to_rat(index) - self.offset(letter)
        if shift.denominator != 1:
            raise ValueError(f"{letter}_{index} is not a valid label for rho = {self.rho}")
        return Current(self.component(letter), int(shift) + 1)

    def label(self, c: Current) -> tuple[str, Fraction]:
        letter = self.letters[c.component]
        return letter, c.exponent - 1 + self.offset(letter)


Labeled = tuple[str, Fraction]
LabeledCombination = dict[Labeled, Fraction]


# Printed closed forms.  Each rule maps (x index, y index, params, rho) to a list
# of (coefficient, letter, index) terms and is evaluated literally.

Rule = Callable[[Fraction, Fraction, Mapping[str, Fraction], Fraction], list[tuple[Fraction, str, Fraction]]]


def _witt(n, n2, P, r):
    return [(n - n2, "L", n + n2)]


def _ly_general(n, p, P, r):
    return [(P["lambda1"] * (n + 1) - p + r - 1, "Y", n + p), (P["kappa1"], "Y", n + p + 1)]


def _lm_general(n, k, P, r):
    return [((2 * P["lambda1"] - 1) * (n + 1) - k + 2 * r - 1, "M", n + k), (2 * P["kappa1"], "M", n + k + 1)]


def _yy_simple(p, q, P, r):
    return [(p - q, "M", p + q)]


_CLOSED_FORMS: dict[str, tuple[dict[str, Fraction], dict[tuple[str, str], Rule]]] = {
    "mtype-B": (
        {"lambda1": Fraction(0), "kappa1": Fraction(0)},
        {("L", "L"): _witt, ("Y", "Y"): _yy_simple, ("L", "Y"): _ly_general, ("L", "M"): _lm_general},
    ),
    "mtype-C": (
        {"kappa1": Fraction(0)},
        {
            ("L", "L"): _witt,
            ("L", "Y"): lambda n, p, P, r: [((n - 1) / Fraction(2) - p + r, "Y", n + p), (P["kappa1"], "Y", n + p + 1)],
            ("L", "M"): lambda n, k, P, r: [(2 * r - 2 - n - k, "M", n + k), (2 * P["kappa1"], "M", n + k + 1)],
            ("Y", "Y"): lambda p, q, P, r: [
                ((p - q) * P["kappa1"], "M", p + q),
                (-(p - q) * (p + q - 2 * r + 1) / 2, "M", p + q - 1),
            ],
        },
    ),
    "mtype-D": (
        {"kappa1": Fraction(0)},
        {
            ("L", "L"): _witt,
            ("L", "Y"): lambda n, p, P, r: [(r - 1 - p, "Y", n + p), (P["kappa1"], "Y", n + p + 1)],
            ("L", "M"): lambda n, k, P, r: [(2 * r - 4 - 3 * n - k, "M", n + k), (2 * P["kappa1"], "M", n + k + 1)],
            ("Y", "Y"): lambda p, q, P, r: [
                ((p - q) * P["kappa1"] / 2 * (p + q + 1 - 2 * r), "M", p + q - 1),
                (-(p - q) * (p + 1 - r) * (q + 1 - r) / 2, "M", p + q - 2),
                (-(p - q) * P["kappa1"] ** 2 / 2, "M", p + q),
            ],
        },
    ),
    "mtype-E": (
        {"kappa1": Fraction(0)},
        {
            ("L", "L"): _witt,
            ("L", "Y"): lambda n, p, P, r: [((2 * n - 1) / Fraction(3) - p + r, "Y", n + p), (P["kappa1"], "Y", n + p + 1)],
            ("L", "M"): lambda n, k, P, r: [(2 * r - (5 * n + 8) / Fraction(3) - k, "M", n + k), (2 * P["kappa1"], "M", n + k + 1)],
            ("Y", "Y"): lambda p, q, P, r: [
                ((q - p) * Fraction(3, 4) * P["kappa1"] ** 2, "M", p + q),
                (-(q - p) * Fraction(3, 2) * P["kappa1"] * (p + q - 2 * r + 1), "M", p + q - 1),
                (
                    (q - p) / 2 * (2 * p * p + 3 * p * q + 2 * q * q + (1 - 7 * r) * (p + q) + 11 * r * r - 2 * r + 1),
                    "M",
                    p + q - 2,
                ),
            ],
        },
    ),
    "e14": (
        {"lambda1": Fraction(0), "kappa1": Fraction(0), "a00": Fraction(0)},
        {
            ("L", "L"): _witt,
            ("Y", "Y"): _yy_simple,
            ("L", "Y"): lambda n, p, P, r: [(P["lambda1"] * (n + 1) - p + r - 1, "Y", n + p)],
            ("L", "M"): lambda n, k, P, r: [((2 * P["lambda1"] - 1) * (n + 1) - k + 2 * r - 1, "M", n + k)],
            ("L", "N"): lambda n, m, P, r: [(-m, "M", n + m)],
            ("Y", "N"): lambda p, m, P, r: [(P["a00"], "Y", p + m + 1)],
            ("M", "N"): lambda k, m, P, r: [(2 * P["a00"], "M", k + m + 1)],
        },
    ),
    "e15": (
        {"kappa1": Fraction(0), "a00": Fraction(0)},
        {
            ("L", "L"): _witt,
            ("L", "Y"): lambda n, p, P, r: [(r - 1 - p, "Y", n + p)],
            ("L", "M"): lambda n, k, P, r: [(2 * r - 2 - n - k, "M", n + k)],
            ("M", "N"): lambda k, m, P, r: [(2 * P["a00"], "M", k + m + 1)],
            ("L", "N"): lambda n, m, P, r: [(r - m - 1, "N", n + m)],
            ("Y", "Y"): _yy_simple,
            ("Y", "N"): lambda p, m, P, r: [
                (P["a00"] * P["kappa1"], "Y", p + m + 1 + r),
                (p + 2 * m + 3 - r, "M", p + m + r),
            ],
        },
    ),
}

# Builder parameters under which each printed display is stated.  With the
# builder's alpha'_1 = w01 (1(x)s - s(x)1), [Y_p, Y_q] = (p - q) M_(p+q) needs w01 = -1.
CLOSED_FORM_NORMALIZATION: dict[str, dict[str, Fraction]] = {
    "mtype-B": {"w01": Fraction(-1), "a": Fraction(0)},
    "mtype-C": {"w02": Fraction(1)},
    "mtype-D": {"w12": Fraction(1)},
    "mtype-E": {"w03": Fraction(1)},
    "e14": {"w01": Fraction(-1)},
    "e15": {},
}


def closed_form_families() -> list[str]:
    return sorted(_CLOSED_FORMS)


def closed_form_bracket(
    family: str,
    params: Mapping[str, Scalar],
    rho: Scalar,
    x: tuple[str, Scalar],
    y: tuple[str, Scalar],
) -> LabeledCombination:
    """Evaluate the printed bracket ``[x, y]`` of labeled currents such as ``("Y", 1/2)``.

    Pairs that are only printed in the opposite order use antisymmetry; unprinted
    pairs are zero.  Labels in the result are not validated against ``rho``.
    """
    if family not in _CLOSED_FORMS:
        raise UnknownClosedForm(family)
    defaults, rules = _CLOSED_FORMS[family]
    P = {**defaults, **{k: to_rat(v) for k, v in params.items()}}
    r = to_rat(rho)
    (lx, ix), (ly, iy) = (x[0], to_rat(x[1])), (y[0], to_rat(y[1]))
    out: LabeledCombination = {}
    if (lx, ly) in rules:
        terms, sign = rules[(lx, ly)](ix, iy, P, r), 1
    elif (ly, lx) in rules:
        terms, sign = rules[(ly, lx)](iy, ix, P, r), -1
    else:
        return out
    for c, letter, idx in terms:
        if c:
            _add(out, (letter, to_rat(idx)), sign * to_rat(c))
    return out


@dataclass
class Mismatch:
    x: Labeled
    y: Labeled
    generic: LabeledCombination
    printed: LabeledCombination

    def describe(self) -> str:
        def fmt(d):
            return " + ".join(f"{c}*{l}_{i}" for (l, i), c in sorted(d.items())) or "0"

        return f"[{self.x[0]}_{self.x[1]}, {self.y[0]}_{self.y[1]}]: generic {fmt(self.generic)}, printed {fmt(self.printed)}"


@dataclass
class CompareReport:
    family: str
    rho: Fraction
    window: tuple[int, int]
    pairs: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "kind": "compare",
            "family": self.family,
            "rho": str(self.rho),
            "window": list(self.window),
            "pairs": self.pairs,
            "ok": self.ok,
            "mismatches": [m.describe() for m in self.mismatches],
        }


def compare(
    family: str,
    params: Mapping[str, Scalar],
    rho: Scalar,
    window: tuple[int, int],
    algebra: PseudoAlgebra | None = None,
) -> CompareReport:
    """Check the printed closed form against the generic construction on a window.

    ``params`` are the catalog builder parameters; the family instance is built
    (or ``algebra`` is used directly) and every pair of labeled currents with
    integer shifts in ``window`` is compared after relabeling.
    """
    lo, hi = window
    if max(abs(lo), abs(hi)) > 12:
        raise ValueError("window bounds must satisfy |index| <= 12")
    if family not in _CLOSED_FORMS:
        raise UnknownClosedForm(family)
    if algebra is None:
        from .catalog import build

        algebra = build(family, dict(params))
    shift = RhoShift(to_rat(rho))
    table = CurrentTable(algebra)
    rep = CompareReport(family, shift.rho, (lo, hi))
    cur = table.currents((lo, hi), range(min(algebra.rank, 4)))
    for x, y in product(cur, repeat=2):
        gen: LabeledCombination = {}
        for z, c in table.basis(x, y).items():
            _add(gen, shift.label(z), c)
        lx, ly = shift.label(x), shift.label(y)
        printed = closed_form_bracket(family, params, shift.rho, lx, ly)
        rep.pairs += 1
        if gen != printed:
            rep.mismatches.append(Mismatch(lx, ly, gen, printed))
    return rep


@dataclass
class WindowReport:
    window: tuple[int, int]
    rho: Fraction
    triples: int = 0
    jacobi_failures: list[tuple[Current, Current, Current]] = field(default_factory=list)
    skew_failures: list[tuple[Current, Current]] = field(default_factory=list)

    @property
    def jacobi_pass(self) -> bool:
        return not self.jacobi_failures

    @property
    def skew_pass(self) -> bool:
        return not self.skew_failures

    @property
    def ok(self) -> bool:
        return self.jacobi_pass and self.skew_pass

    def to_json(self) -> dict:
        return {
            "kind": "window-jacobi",
            "rho": str(self.rho),
            "window": list(self.window),
            "triples": self.triples,
            "jacobi_pass": self.jacobi_pass,
            "skew_pass": self.skew_pass,
            "jacobi_failures": [[str(c) for c in t] for t in self.jacobi_failures[:20]],
            "skew_failures": [[str(c) for c in t] for t in self.skew_failures[:20]],
        }


def window_jacobi(
    A: PseudoAlgebra,
    rho: Scalar = 0,
    window: tuple[int, int] = (-4, 4),
    *,
    skew: bool = True,
    components: Iterable[int] | None = None,
    table: CurrentTable | None = None,
) -> WindowReport:
    """Exact Leibniz identity ``[x,[y,z]] = [[x,y],z] + [y,[x,z]]`` on a window.

    Currents are ``t^(n+1) e_k`` with ``n`` in ``window``.  ``rho`` only labels the
    report; the generic construction does not depend on it.  With ``skew`` the
    antisymmetry ``[x,y] + [y,x] = 0`` is checked as well.
    """
    lo, hi = window
    if max(abs(lo), abs(hi)) > 12:
        raise ValueError("window bounds must satisfy |index| <= 12")
    table = table or CurrentTable(A)
    cur = table.currents((lo, hi), components)
    rep = WindowReport((lo, hi), to_rat(rho))
    one = Fraction(1)
    if skew:
        for i, x in enumerate(cur):
            for y in cur[i:]:
                s = dict(table.basis(x, y))
                for z, c in table.basis(y, x).items():
                    _add(s, z, c)
                if s:
                    rep.skew_failures.append((x, y))
    for x, y, z in product(cur, repeat=3):
        rep.triples += 1
        lhs = table.bracket({x: one}, table.basis(y, z))
        rhs = table.bracket(table.basis(x, y), {z: one})
        for w, c in table.bracket({y: one}, table.basis(x, z)).items():
            _add(rhs, w, c)
        if lhs != rhs:
            rep.jacobi_failures.append((x, y, z))
    return rep


def closed_form_jacobi(
    family: str,
    params: Mapping[str, Scalar],
    rho: Scalar,
    window: tuple[int, int] = (-3, 3),
    letters: str = "LYMN",
) -> WindowReport:
    """Leibniz identity of the printed closed form itself, on labeled currents.

    Independent of the generic construction: a printed display that fails here is
    internally inconsistent, whatever the underlying pseudoalgebra.
    """
    if family not in _CLOSED_FORMS:
        raise UnknownClosedForm(family)
    shift = RhoShift(to_rat(rho))
    used = {l for pair in _CLOSED_FORMS[family][1] for l in pair}
    labs = [(l, n + shift.offset(l)) for l in letters if l in used for n in range(window[0], window[1] + 1)]

    def br(u, v):
        out: LabeledCombination = {}
        for x, a in u.items():
            for y, b in v.items():
                for z, c in closed_form_bracket(family, params, shift.rho, x, y).items():
                    _add(out, z, a * b * c)
        return out

    rep = WindowReport(tuple(window), shift.rho)
    for x, y, z in product(labs, repeat=3):
        rep.triples += 1
        lhs = br({x: 1}, closed_form_bracket(family, params, shift.rho, y, z))
        rhs = br(closed_form_bracket(family, params, shift.rho, x, y), {z: 1})
        for w, c in br({y: 1}, closed_form_bracket(family, params, shift.rho, x, z)).items():
            _add(rhs, w, c)
        if lhs != rhs:
            rep.jacobi_failures.append((x, y, z))
    return rep
