"""λ-bracket presentation of a pseudoalgebra.

Every ``gamma (x)_H e_k`` has a unique canonical form
``sum_d (s^(d) (x) 1) (x)_H h_d e_k``; reading the first slot ``s^(d)`` as
``λ^(d) = λ^d / d!`` and ``h_d`` as a polynomial in ``∂`` acting on ``e_k`` gives
``[e_i λ e_j]``.  This is the ``internal`` convention and ``to_lambda`` /
``from_lambda`` are exact inverses under it.

The ``paper-reverse`` convention substitutes ``λ -> -λ`` (degree ``d`` terms pick up
``(-1)^d``), which is the form used in much of the conformal-algebra literature
where ``[∂a λ b] = -λ [a λ b]``.  The convention in force travels with every
:class:`LambdaBracket`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Literal

from .algebra import PseudoAlgebra
from .hopf import HPoly
from .tensor import CanonicalPair, Tensor2, normal_form, reconstruct

__all__ = ["SignConvention", "LambdaTerm", "LambdaBracket", "to_lambda", "from_lambda", "times_lambda", "derivation_factor", "pretty"]

SignConvention = Literal["internal", "paper-reverse"]
CONVENTIONS = ("internal", "paper-reverse")


@dataclass(frozen=True)
class LambdaTerm:
    """``λ^(degree) * action(∂) e_target``."""

    degree: int
    action: HPoly
    target: int


@dataclass
class LambdaBracket:
    rank: int
    brackets: dict[tuple[int, int], tuple[LambdaTerm, ...]] = field(default_factory=dict)
    convention: SignConvention = "internal"
    name: str = ""

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown sign convention {self.convention!r}")
        for key, terms in self.brackets.items():
            last: dict[int, int] = {}
            for t in terms:
                if t.action.is_zero():
                    raise ValueError(f"zero action in {key}")
                if t.degree <= last.get(t.target, -1):
                    raise ValueError(f"degrees must increase per target in {key}")
                last[t.target] = t.degree

    def __eq__(self, other):
        if not isinstance(other, LambdaBracket):
            return NotImplemented
        a = {k: v for k, v in self.brackets.items() if v}
        b = {k: v for k, v in other.brackets.items() if v}
        return (self.rank, self.convention, a) == (other.rank, other.convention, b)

    def to_json(self) -> dict:
        return {
            "kind": "lambda",
            "name": self.name,
            "rank": self.rank,
            "sign_convention": self.convention,
            "brackets": [
                {
                    "i": i,
                    "j": j,
                    "terms": [
                        {"degree": t.degree, "target": t.target, "action": {str(n): str(c) for n, c in t.action.items()}}
                        for t in terms
                    ],
                }
                for (i, j), terms in sorted(self.brackets.items())
            ],
        }


def _flip(h: HPoly, d: int, convention: SignConvention) -> HPoly:
    return -h if convention == "paper-reverse" and d % 2 else h


def to_lambda(A: PseudoAlgebra, sign_convention: SignConvention = "internal") -> LambdaBracket:
    out: dict[tuple[int, int], list[LambdaTerm]] = {}
    for i, j, k, t in A.nonzero():
        for d, h in normal_form(t):
            out.setdefault((i, j), []).append(LambdaTerm(d, _flip(h, d, sign_convention), k))
    brackets = {key: tuple(sorted(v, key=lambda t: (t.target, t.degree))) for key, v in out.items()}
    return LambdaBracket(A.rank, brackets, sign_convention, A.name)


def from_lambda(L: LambdaBracket) -> PseudoAlgebra:
    gamma: dict[tuple[int, int], dict[int, Tensor2]] = {}
    for (i, j), terms in L.brackets.items():
        per_target: dict[int, list[tuple[int, HPoly]]] = {}
        for t in terms:
            per_target.setdefault(t.target, []).append((t.degree, _flip(t.action, t.degree, L.convention)))
        for k, pairs in per_target.items():
            gamma.setdefault((i, j), {})[k] = reconstruct(CanonicalPair(tuple(sorted(pairs, key=lambda p: p[0]))))
    return PseudoAlgebra(L.rank, gamma, name=L.name)


def times_lambda(L: LambdaBracket, i: int | None = None, factor: int = 1) -> LambdaBracket:
    """Multiply each λ-polynomial by ``factor * λ`` (all pairs, or those with first index ``i``).

    With ``λ^(d)`` divided powers, ``λ * λ^(d) = (d+1) λ^(d+1)``.
    """
    out = {}
    for (a, b), terms in L.brackets.items():
        if i is None or a == i:
            terms = tuple(LambdaTerm(t.degree + 1, t.action.scale(factor * (t.degree + 1)), t.target) for t in terms)
        out[(a, b)] = terms
    return LambdaBracket(L.rank, out, L.convention, L.name)


def derivation_factor(convention: SignConvention) -> int:
    """Sign ``c`` in ``[∂a λ b] = c λ [a λ b]`` under the given convention."""
    return 1 if convention == "internal" else -1


def _fmt_coeff_mono(c: Fraction, mono: str, first: bool) -> str:
    mag = abs(c)
    body = mono if mono and mag == 1 else (f"{mag}{mono}" if mono else f"{mag}")
    if first:
        return f"-{body}" if c < 0 else body
    return f"- {body}" if c < 0 else f"+ {body}"


def pretty(L: LambdaBracket, ascii: bool = False) -> str:
    """Lines such as ``[e0 _λ e0] = (2λ - ∂) e0`` using ordinary powers of λ and ∂."""
    lam, dd = ("lam", "d") if ascii else ("λ", "∂")
    lines = [f"# sign convention: {L.convention}"]

    def power(sym: str, n: int) -> str:
        return "" if n == 0 else sym if n == 1 else f"{sym}^{n}"

    for (i, j), terms in sorted(L.brackets.items()):
        by_target: dict[int, dict[tuple[int, int], Fraction]] = {}
        for t in terms:
            acc = by_target.setdefault(t.target, {})
            for n, c in t.action.items():
                key = (t.degree, n)
                acc[key] = acc.get(key, 0) + c / (factorial(t.degree) * factorial(n))
        parts = []
        for k in sorted(by_target):
            monos = [(key, c) for key, c in sorted(by_target[k].items(), key=lambda kv: (-kv[0][0], -kv[0][1])) if c]
            if not monos:
                continue
            text = " ".join(
                _fmt_coeff_mono(c, power(lam, d) + power(dd, n), idx == 0) for idx, ((d, n), c) in enumerate(monos)
            )
            parts.append(f"({text}) e{k}" if len(monos) > 1 else f"{text} e{k}")
        rhs = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        lines.append(f"[e{i} _{lam} e{j}] = {rhs}")
    return "\n".join(lines)
