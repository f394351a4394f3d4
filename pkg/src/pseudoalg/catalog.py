"""Constructors for the classified families of pseudoalgebras over k[s].

Every family is registered under a stable id (``thm27-12``, ``mtype-B``, ``a3``,
``e14``, ``tsv`` ...).  A family knows its rank, its parameters with their
domain constraints, whether it is expected to be Lie or only Leibniz, and a
builder that transcribes the printed structure constants.

Some printed displays do not satisfy the Jacobi identity.  For those the
registry also holds a corrected builder; the delta between the two is recorded
in ``corrections.json`` (shipped with the package) and attached to the
metadata of every algebra built with the correction.  ``build(..., corrected=False)``
uses the printed coefficients verbatim and raises :class:`PaperFormulaFails`
when they fail.

Rank-four algebras use the basis ``e0, e1, e2, e3`` with

    [e0, e0] = alpha e0,           [e0, ei] = beta_i ei,
    [e1, e1] = alpha'_m e2,        [e1, e2] = eta e2,
    [e1, e3] = eta11 e1 + eta12 e2, [e2, e3] = eta21 e1 + eta22 e2,

and the remaining brackets fixed by skew-symmetry.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from typing import Any, Callable, Mapping

from .algebra import CheckReport, PseudoAlgebra, check, classify
from .hopf import HPoly, to_rat
from .tensor import ALPHA, Tensor2, t2_mul, t2_swap

__all__ = [
    "Param",
    "Constraint",
    "FamilySpec",
    "UnknownFamily",
    "ParamDomainViolation",
    "PaperFormulaFails",
    "EmptyFamily",
    "CORRECTIONS",
    "list_families",
    "get_family",
    "build",
    "sample_params",
    "verify_all",
    "VerifyReport",
    "families_markdown",
]


class UnknownFamily(KeyError):
    pass


class ParamDomainViolation(ValueError):
    pass


class EmptyFamily(ParamDomainViolation):
    """No parameter value gives an algebra of the family's printed shape."""


class PaperFormulaFails(RuntimeError):
    def __init__(self, family: str, report: CheckReport):
        self.family = family
        self.report = report
        first = report.failures[0].describe() if report.failures else ""
        super().__init__(f"{family}: printed structure constants fail the axioms ({first})")


@dataclass(frozen=True)
class Param:
    name: str
    kind: str = "rat"  # rat | nonzero | hpoly | tensor2 | choice
    choices: tuple[str, ...] = ()
    default: Any = None
    doc: str = ""


@dataclass(frozen=True)
class Constraint:
    text: str
    holds: Callable[[Mapping[str, Any]], bool]


@dataclass(frozen=True)
class FamilySpec:
    id: str
    rank: int
    params: tuple[Param, ...]
    constraints: tuple[Constraint, ...]
    expected: str  # "lie" | "leibniz" | "lie-iff-antisymmetric"
    label: str
    builder: Callable[[dict], dict] = field(repr=False)
    corrected: Callable[[dict], dict] | None = field(default=None, repr=False)
    fix: Callable[[dict, random.Random], None] | None = field(default=None, repr=False)
    doc: str = ""
    corrected_constraints: tuple[Constraint, ...] = ()
    corrected_fix: Callable[[dict, random.Random], None] | None = field(default=None, repr=False)
    corrected_replaces: bool = False

    def constraints_for(self, corrected: bool) -> tuple[Constraint, ...]:
        if corrected and self.corrected is not None:
            if self.corrected_replaces:
                return self.corrected_constraints
            return self.constraints + self.corrected_constraints
        return self.constraints

    def summary(self) -> dict:
        return {
            "id": self.id,
            "rank": self.rank,
            "label": self.label,
            "expected": self.expected,
            "params": [{"name": p.name, "kind": p.kind, **({"choices": list(p.choices)} if p.choices else {})} for p in self.params],
            "constraints": [c.text for c in self.constraints],
            "corrected": self.corrected is not None,
        }


_REGISTRY: dict[str, FamilySpec] = {}


def _load_corrections() -> dict[str, dict]:
    text = resources.files("pseudoalg").joinpath("data/corrections.json").read_text(encoding="utf-8")
    return json.loads(text)


CORRECTIONS: dict[str, dict] = _load_corrections()


# ---------------------------------------------------------------- tensor helpers

def _t(*terms) -> Tensor2:
    """``sum c s^(a) (x) s^(b)`` from ``(c, a, b)`` triples."""
    out: dict[tuple[int, int], Fraction] = {}
    for c, a, b in terms:
        c = to_rat(c)
        out[(a, b)] = out.get((a, b), Fraction(0)) + c
    return Tensor2(out)


def _beta(lam, kappa=0) -> Tensor2:
    return _t((lam, 1, 0), (-1, 0, 1), (kappa, 0, 0))


def _anti(i: int, j: int) -> Tensor2:
    """``s^(i) (x) s^(j) - s^(j) (x) s^(i)``."""
    return _t((1, i, j), (-1, j, i))


def alpha1(w01) -> Tensor2:
    return _anti(0, 1).scale(w01)


def alpha2pp(w02, k1) -> Tensor2:
    return (_anti(0, 2) - _anti(0, 1).scale(k1)).scale(w02)


def alpha2p(w12, k1) -> Tensor2:
    return (_anti(0, 2).scale(k1) - _anti(1, 2) - _anti(0, 1).scale(Fraction(k1) ** 2 / 2)).scale(-to_rat(w12))


def alpha3(w03, k1) -> Tensor2:
    k1 = to_rat(k1)
    return (
        _anti(0, 3) + _anti(1, 2).scale(Fraction(1, 2)) - _anti(0, 2).scale(3 * k1 / 2) + _anti(0, 1).scale(3 * k1**2 / 4)
    ).scale(w03)


# lambda1, lambda2 required by each alpha'_m shape (kappa2 = 2 kappa1 always)
_ALPHA_SHAPES: dict[str, tuple[Callable, Fraction | None, Fraction | None]] = {
    "alpha1": (alpha1, None, None),
    "alpha2pp": (alpha2pp, Fraction(1, 2), Fraction(-1)),
    "alpha2p": (alpha2p, Fraction(0), Fraction(-3)),
    "alpha3": (alpha3, Fraction(2, 3), Fraction(-5, 3)),
}


def _alpha_for(shape: str, w, lam1, lam2, k1, k2) -> Tensor2:
    """The alpha'_m of the given shape, after checking it is compatible with beta_1, beta_2."""
    fn, l1, l2 = _ALPHA_SHAPES[shape]
    if k2 != 2 * k1:
        raise ParamDomainViolation(f"{shape} requires kappa2 = 2 kappa1 (got kappa1={k1}, kappa2={k2})")
    if shape == "alpha1":
        if lam2 != 2 * lam1 - 1:
            raise ParamDomainViolation(f"alpha1 requires lambda2 = 2 lambda1 - 1 (got {lam1}, {lam2})")
        return fn(w)
    if (lam1, lam2) != (l1, l2):
        raise ParamDomainViolation(f"{shape} requires (lambda1, lambda2) = ({l1}, {l2}) (got ({lam1}, {lam2}))")
    return fn(w, k1)


def _sv(
    rank: int,
    b1: Tensor2 | None = None,
    b2: Tensor2 | None = None,
    b3: Tensor2 | None = None,
    alpha_m: Tensor2 | None = None,
    eta: Tensor2 | None = None,
    e11: Tensor2 | None = None,
    e12: Tensor2 | None = None,
    e21: Tensor2 | None = None,
    e22: Tensor2 | None = None,
) -> dict:
    """Structure constants of a Virasoro extension in the standard basis, skew-completed."""
    g: dict[tuple[int, int], dict[int, Tensor2]] = {(0, 0): {0: ALPHA}}

    def put(i, j, comps):
        comps = {k: t for k, t in comps.items() if t is not None and not t.is_zero()}
        if not comps:
            return
        g[(i, j)] = comps
        if i != j:
            g[(j, i)] = {k: -t2_swap(t) for k, t in comps.items()}

    for i, b in enumerate((b1, b2, b3), start=1):
        if b is not None and i < rank:
            put(0, i, {i: b})
    if alpha_m is not None:
        put(1, 1, {2: alpha_m})
    if eta is not None:
        put(1, 2, {2: eta})
    if rank >= 4:
        put(1, 3, {1: e11, 2: e12})
        put(2, 3, {1: e21, 2: e22})
    return g


# ---------------------------------------------------------------- registration

def _p(*names: str, nonzero: tuple[str, ...] = ()) -> tuple[Param, ...]:
    return tuple(Param(n, "nonzero" if n in nonzero else "rat") for n in names)


def _nz(name: str) -> Constraint:
    return Constraint(f"requires {name} != 0", lambda p, n=name: p[n] != 0)


def _family(
    fid: str,
    rank: int,
    params: tuple[Param, ...],
    *,
    label: str,
    expected: str = "lie",
    constraints: tuple[Constraint, ...] = (),
    fix: Callable[[dict, random.Random], None] | None = None,
    doc: str = "",
):
    def deco(fn):
        nz = tuple(_nz(p.name) for p in params if p.kind == "nonzero")
        _REGISTRY[fid] = FamilySpec(
            fid, rank, params, nz + constraints, expected, label, fn, None, fix, doc or (fn.__doc__ or "").strip()
        )
        return fn

    return deco


def _corrects(fid: str, constraints: tuple[Constraint, ...] = (), fix=None, *, replaces: bool = False):
    """Register the corrected builder of ``fid``.

    ``constraints`` apply only to the corrected builder, on top of the printed
    ones or instead of them when ``replaces`` is set.
    """

    def deco(fn):
        _REGISTRY[fid] = replace(
            _REGISTRY[fid], corrected=fn, corrected_constraints=constraints, corrected_fix=fix, corrected_replaces=replaces
        )
        return fn

    return deco


def _pin(**values) -> tuple[tuple[Constraint, ...], Callable]:
    """Constraints and a sampler fix forcing each named parameter to a value."""
    cons = tuple(
        Constraint(f"requires {k} = {v}", lambda p, k=k, v=Fraction(v): p[k] == v) for k, v in values.items()
    )

    def fix(p, rng):
        p.update({k: Fraction(v) for k, v in values.items()})

    return cons, fix


def _empty(fid: str, reason: str):
    """Mark ``fid`` as having no members once corrected; building it raises :class:`EmptyFamily`."""

    def fn(p):
        raise EmptyFamily(f"{fid}: {reason}")

    _REGISTRY[fid] = replace(_REGISTRY[fid], corrected=fn)


def _ak(p) -> bool:
    return p["a"] * p["lambda1"] == 0 and p["a"] * p["kappa1"] == 0


_A_LAMBDA_KAPPA = Constraint("requires a*lambda1 = a*kappa1 = 0", _ak)


def _fix_ak(p, rng):
    if rng.random() < 0.5:
        p["a"] = Fraction(0)
    else:
        p["lambda1"] = Fraction(0)
        p["kappa1"] = Fraction(0)


# ---------------------------------------------------------------- rank two

@_family("thm27-1", 2, (), label="rank two (1)")
def _thm27_1(p):
    """Direct sum of two Virasoro algebras."""
    return {(0, 0): {0: ALPHA}, (1, 1): {1: ALPHA}}


@_family("thm27-2", 2, (), label="rank two (2)")
def _thm27_2(p):
    """Abelian algebra of rank two."""
    return {}


@_family(
    "thm27-3",
    2,
    (Param("alpha_prime", "tensor2"),),
    label="rank two (3)",
    expected="lie-iff-antisymmetric",
    constraints=(Constraint("requires alpha_prime != 0", lambda p: not p["alpha_prime"].is_zero()),),
)
def _thm27_3(p):
    """``[e0, e0] = alpha' e1``; every other bracket is zero (the [e1, e1] = 0 reading)."""
    return {(0, 0): {1: p["alpha_prime"]}}


@_family(
    "thm27-4",
    2,
    (Param("A", "hpoly"),),
    label="rank two (4)",
    constraints=(Constraint("requires A != 0", lambda p: not p["A"].is_zero()),),
)
def _thm27_4(p):
    t = Tensor2.simple(p["A"], HPoly.one())
    return {(0, 1): {1: t}, (1, 0): {1: -t2_swap(t)}}


@_family(
    "thm27-5",
    2,
    (Param("A", "hpoly"),),
    label="rank two (5)",
    expected="leibniz",
    constraints=(Constraint("requires A != 0", lambda p: not p["A"].is_zero()),),
)
def _thm27_5(p):
    return {(0, 1): {1: Tensor2.simple(p["A"], HPoly.one())}}


@_family("thm27-6", 2, (), label="rank two (6)")
def _thm27_6(p):
    """Virasoro plus an abelian summand."""
    return {(0, 0): {0: ALPHA}}


@_family("thm27-7", 2, _p("lambda", "kappa", nonzero=("kappa",)), label="rank two (7)")
def _thm27_7(p):
    return _sv(2, _beta(p["lambda"], p["kappa"]))


_BAD_LIE_LAMBDAS = {0, -1, -2, -5, -7}


@_family(
    "thm27-8",
    2,
    _p("lambda"),
    label="rank two (8)",
    constraints=(Constraint("requires lambda not in {0,-1,-2,-5,-7}", lambda p: p["lambda"] not in _BAD_LIE_LAMBDAS),),
)
def _thm27_8(p):
    return _sv(2, _beta(p["lambda"]))


def _rank2_ext(lam, alpha_p: Tensor2, lie: bool = True) -> dict:
    b = _beta(lam)
    g = {(0, 0): {0: ALPHA}, (0, 1): {1: b}}
    if not alpha_p.is_zero():
        g[(0, 0)][1] = alpha_p
    if lie:
        g[(1, 0)] = {1: -t2_swap(b)}
    return g


@_family("thm27-9", 2, _p("x10"), label="rank two (9)")
def _thm27_9(p):
    return _rank2_ext(0, ALPHA.scale(p["x10"]))


@_family("thm27-10", 2, _p("x12", "x20"), label="rank two (10)")
def _thm27_10(p):
    return _rank2_ext(-1, _anti(1, 2).scale(p["x12"]) + _anti(2, 0).scale(p["x20"]))


@_family("thm27-11", 2, _p("x13", "x30"), label="rank two (11)")
def _thm27_11(p):
    """The printed display multiplies the bracket by a trailing alpha."""
    inner = _anti(1, 3).scale(p["x13"]) + _anti(3, 0).scale(p["x30"])
    return _rank2_ext(-2, t2_mul(inner, ALPHA))


@_corrects("thm27-11")
def _thm27_11_fixed(p):
    return _rank2_ext(-2, _anti(1, 3).scale(p["x13"]) + _anti(3, 0).scale(p["x30"]))


@_family("thm27-12", 2, _p("x34"), label="rank two (12)")
def _thm27_12(p):
    return _rank2_ext(-5, _anti(3, 4).scale(p["x34"]))


@_family("thm27-13", 2, _p("x36"), label="rank two (13)")
def _thm27_13(p):
    return _rank2_ext(-7, (_anti(3, 6) - _anti(4, 5).scale(3)).scale(p["x36"]))


def _thm27_14_ok(p) -> bool:
    return p["kappa"] != 0 or p["lambda"] not in {1, -1, -2, -3}


@_family(
    "thm27-14",
    2,
    _p("lambda", "kappa"),
    label="rank two (14)",
    expected="leibniz",
    constraints=(Constraint("requires kappa != 0 or lambda not in {1,-1,-2,-3}", _thm27_14_ok),),
)
def _thm27_14(p):
    return _rank2_ext(p["lambda"], Tensor2(), lie=False) | {(0, 1): {1: _beta(p["lambda"], p["kappa"])}}


@_family("thm27-15", 2, _p("x00"), label="rank two (15)", expected="leibniz")
def _thm27_15(p):
    return _rank2_ext(1, _t((p["x00"], 0, 0)), lie=False)


@_family("thm27-16", 2, _p("x30"), label="rank two (16)", expected="leibniz")
def _thm27_16(p):
    return _rank2_ext(-1, _t((p["x30"], 3, 0)), lie=False)


@_family("thm27-17", 2, _p("x22"), label="rank two (17)", expected="leibniz")
def _thm27_17(p):
    return _rank2_ext(-2, _t((1, 2, 2), (Fraction(3, 2), 3, 1)).scale(p["x22"]), lie=False)


@_family("thm27-18", 2, _p("x23"), label="rank two (18)", expected="leibniz")
def _thm27_18(p):
    return _rank2_ext(-3, _t((1, 2, 3), (4, 3, 2), (2, 4, 1)).scale(p["x23"]), lie=False)


@_family(
    "lem22-i",
    2,
    (Param("alpha_prime", "tensor2"),),
    label="solvable (i)",
    expected="lie-iff-antisymmetric",
    constraints=(Constraint("requires alpha_prime != 0", lambda p: not p["alpha_prime"].is_zero()),),
)
def _lem22_i(p):
    """``[e1, e1] = alpha' e2`` in the basis (e1, e2) = (e0, e1) of this package."""
    return {(0, 0): {1: p["alpha_prime"]}}


@_family(
    "lem22-ii",
    2,
    (Param("A", "hpoly"),),
    label="solvable (ii)",
    constraints=(Constraint("requires A != 0", lambda p: not p["A"].is_zero()),),
)
def _lem22_ii(p):
    t = Tensor2.simple(p["A"], HPoly.one())
    return {(0, 1): {1: t}, (1, 0): {1: -t2_swap(t)}}


@_family(
    "lem22-iii",
    2,
    (Param("A", "hpoly"),),
    label="solvable (iii)",
    expected="leibniz",
    constraints=(Constraint("requires A != 0", lambda p: not p["A"].is_zero()),),
)
def _lem22_iii(p):
    return {(0, 1): {1: Tensor2.simple(p["A"], HPoly.one())}}


# ---------------------------------------------------------------- rank three (m-type)

@_family(
    "mtype-A",
    3,
    _p("lambda1", "kappa1", "lambda2", "kappa2", "a"),
    label="m-type (A)",
    constraints=(_A_LAMBDA_KAPPA,),
    fix=_fix_ak,
)
def _mtype_a(p):
    return _sv(3, _beta(p["lambda1"], p["kappa1"]), _beta(p["lambda2"], p["kappa2"]), eta=_t((p["a"], 0, 0)))


@_family(
    "mtype-B",
    3,
    _p("lambda1", "kappa1", "w01", "a", nonzero=("w01",)),
    label="m-type (B)",
    constraints=(_A_LAMBDA_KAPPA,),
    fix=_fix_ak,
)
def _mtype_b(p):
    l1, k1 = p["lambda1"], p["kappa1"]
    return _sv(3, _beta(l1, k1), _beta(2 * l1 - 1, 2 * k1), alpha_m=alpha1(p["w01"]), eta=_t((p["a"], 0, 0)))


@_family("mtype-C", 3, _p("w02", "kappa1", nonzero=("w02",)), label="m-type (C)")
def _mtype_c(p):
    k1 = p["kappa1"]
    return _sv(3, _beta(Fraction(1, 2), k1), _beta(-1, 2 * k1), alpha_m=alpha2pp(p["w02"], k1))


@_family("mtype-D", 3, _p("w12", "kappa1", nonzero=("w12",)), label="m-type (D)")
def _mtype_d(p):
    k1 = p["kappa1"]
    return _sv(3, _beta(0, k1), _beta(-3, 2 * k1), alpha_m=alpha2p(p["w12"], k1))


@_family("mtype-E", 3, _p("w03", "kappa1", nonzero=("w03",)), label="m-type (E)")
def _mtype_e(p):
    k1 = p["kappa1"]
    return _sv(3, _beta(Fraction(2, 3), k1), _beta(Fraction(-5, 3), 2 * k1), alpha_m=alpha3(p["w03"], k1))


@_family("tsv", 3, _p("c"), label="TSV(c)")
def _tsv(p):
    """TSV(c): the m-type (C) algebra with w02 = -2 and kappa1 = -c."""
    c = p["c"]
    return _sv(
        3,
        _beta(Fraction(1, 2), -c),
        _beta(-1, -2 * c),
        alpha_m=(_anti(2, 0) + _anti(1, 0).scale(c)).scale(2),
    )


@_family("t-ab", 3, _p("a", "b"), label="T(a,b)")
def _t_ab(p):
    """T(a, b): the m-type (B) algebra with lambda1 = a - 1, kappa1 = b and alpha'_1 = s(x)1 - 1(x)s."""
    a, b = p["a"], p["b"]
    return _sv(3, _beta(a - 1, b), _beta(2 * a - 3, 2 * b), alpha_m=_anti(1, 0))


@_family("dsv", 3, (), label="DSV")
def _dsv(p):
    """DSV = T(0, 0)."""
    return _sv(3, _beta(-1), _beta(-3), alpha_m=_anti(1, 0))


@_family("sv-conformal", 3, (), label="SV")
def _sv_conformal(p):
    """Schrodinger-Virasoro conformal algebra in the basis e0 = -L, e1 = -Y, e2 = M.

    This is ``mtype-B`` at lambda1 = 1/2, kappa1 = 0, a = 0 and w01 = -1.  Replacing
    e2 by -e2 turns it into ``mtype-B`` with w01 = 1.
    """
    return _sv(3, _beta(Fraction(1, 2)), _beta(0), alpha_m=_anti(1, 0))


@_family("extended-sv", 4, (), label="extended SV")
def _extended_sv(p):
    """Extended Schrodinger-Virasoro algebra: ``e14`` at w01 = -1, lambda1 = 1/2, kappa1 = 0, a00 = 1."""
    return _sv(
        4, _beta(Fraction(1, 2)), _beta(0), _beta(0), alpha_m=_anti(1, 0), e11=_t((1, 0, 0)), e22=_t((2, 0, 0))
    )


# ---------------------------------------------------------------- rank four, eta_ij = 0

@_family(
    "z1",
    4,
    _p("lambda1", "kappa1", "lambda2", "kappa2", "lambda3", "kappa3", "a"),
    label="(Z1)",
    constraints=(_A_LAMBDA_KAPPA,),
    fix=_fix_ak,
)
def _z1(p):
    return _sv(
        4, _beta(p["lambda1"], p["kappa1"]), _beta(p["lambda2"], p["kappa2"]), _beta(p["lambda3"], p["kappa3"]),
        eta=_t((p["a"], 0, 0)),
    )


@_family(
    "z2",
    4,
    _p("lambda1", "kappa1", "lambda3", "kappa3", "w01", "a", nonzero=("w01",)),
    label="(Z2)",
    constraints=(_A_LAMBDA_KAPPA,),
    fix=_fix_ak,
)
def _z2(p):
    l1, k1 = p["lambda1"], p["kappa1"]
    return _sv(
        4, _beta(l1, k1), _beta(2 * l1 - 1, 2 * k1), _beta(p["lambda3"], p["kappa3"]),
        alpha_m=alpha1(p["w01"]), eta=_t((p["a"], 0, 0)),
    )


@_family("z3", 4, _p("w12", "kappa1", "lambda3", "kappa3", nonzero=("w12",)), label="(Z3)")
def _z3(p):
    k1 = p["kappa1"]
    return _sv(4, _beta(0, k1), _beta(-3, 2 * k1), _beta(p["lambda3"], p["kappa3"]), alpha_m=alpha2p(p["w12"], k1))


@_family("z4", 4, _p("w02", "kappa1", "lambda3", "kappa3", nonzero=("w02",)), label="(Z4)")
def _z4(p):
    k1 = p["kappa1"]
    return _sv(
        4, _beta(Fraction(1, 2), k1), _beta(-1, 2 * k1), _beta(p["lambda3"], p["kappa3"]), alpha_m=alpha2pp(p["w02"], k1)
    )


@_family("z5", 4, _p("w03", "kappa1", "kappa3", nonzero=("w03",)), label="(Z5)")
def _z5(p):
    k1 = p["kappa1"]
    return _sv(
        4, _beta(Fraction(2, 3), k1), _beta(Fraction(-5, 3), 2 * k1), _beta(Fraction(2, 3), p["kappa3"]),
        alpha_m=alpha3(p["w03"], k1),
    )


# ---------------------------------------------------------------- (A) list: only eta21, eta11, eta22

@_family("a1", 4, _p("c01", "lambda1", "kappa1", "kappa3", nonzero=("c01",)), label="(A1)")
def _a1(p):
    l1, k1, k3 = p["lambda1"], p["kappa1"], p["kappa3"]
    return _sv(4, _beta(l1, k1), _beta(l1 + 1, k1 - k3), _beta(0, k3), e21=_t((-k3, 0, 0), (1, 0, 1)).scale(p["c01"]))


@_family("a2", 4, _p("c00", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("c00",)), label="(A2)")
def _a2(p):
    l1, l2, k1, k2 = p["lambda1"], p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l1 - l2, k1 - k2), e21=_t((p["c00"], 0, 0)))


def _a3_tensor(l2, k1, k2, k3) -> Tensor2:
    # l2 is the lambda of beta_2; k3 is whatever the display writes as kappa_3
    return _t(
        (k2 * (k1 - k2) + l2 * (k1 - k2) ** 2, 0, 0),
        (-(k2 + 2 * l2 * (k1 - k3)), 0, 1),
        (2 * l2, 0, 2),
        (-(k1 - k2), 1, 0),
        (1, 1, 1),
    )


@_family("a3", 4, _p("c11", "lambda1", "kappa1", "kappa2", nonzero=("c11",)), label="(A3)")
def _a3(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    k3 = k1 - k2
    return _sv(
        4, _beta(l1, k1), _beta(l1 + 2, k2), _beta(0, k3), e21=_a3_tensor(l1 + 2, k1, k2, k3).scale(p["c11"])
    )


@_corrects("a3")
def _a3_fixed(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(l1, k1), _beta(l1 + 2, k2), _beta(0, k1 - k2), e21=_a3_tensor(l1 + 2, k1, k2, k2).scale(p["c11"])
    )


@_family("a4", 4, _p("c11", "lambda1", "kappa1", "kappa2", nonzero=("c11",)), label="(A4)")
def _a4(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    e21 = _t((k2 * (k1 - k2), 0, 0), (-(k1 - k2), 1, 0), (-k2, 0, 1), (1, 1, 1)).scale(p["c11"])
    return _sv(4, _beta(l1, k1), _beta(-2, k2), _beta(0, k1 - k2), e21=e21)


@_corrects("a4", *_pin(lambda1=-2))
def _a4_fixed(p):
    """(A3) at lambda1 = -2: beta_1 carries the -2 and beta_2 has lambda 0."""
    k1, k2 = p["kappa1"], p["kappa2"]
    e21 = _t((k2 * (k1 - k2), 0, 0), (-(k1 - k2), 1, 0), (-k2, 0, 1), (1, 1, 1)).scale(p["c11"])
    return _sv(4, _beta(-2, k1), _beta(0, k2), _beta(0, k1 - k2), e21=e21)


@_family("a5", 4, _p("c11", "lambda1", "kappa1", "kappa2", nonzero=("c11",)), label="(A5)")
def _a5(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    e21 = _t((-(k1 - k2), 1, 0), (1, 1, 1)).scale(p["c11"])
    return _sv(4, _beta(l1, k1), _beta(l1 + 2, k2), _beta(0, k1 - k2), e21=e21)


@_corrects("a5", *_pin(lambda1=-2, kappa2=0))
def _a5_fixed(p):
    return _a5(p)


def _a6_ok(p) -> bool:
    return p["lambda2"] * p["c10"] + (p["lambda1"] - p["lambda2"] + 1) * p["c01"] == 0


def _fix_a6(p, rng):
    d = p["lambda1"] - p["lambda2"] + 1
    if d == 0:
        p["lambda2"] = Fraction(0)
        d = p["lambda1"] + 1
        if d == 0:
            p["lambda1"] = Fraction(1, 2)
            d = Fraction(3, 2)
    p["c01"] = -p["lambda2"] * p["c10"] / d


@_family(
    "a6",
    4,
    _p("c10", "c01", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("c10",)),
    label="(A6)",
    constraints=(Constraint("requires lambda2*c10 + (lambda1 - lambda2 + 1)*c01 = 0", _a6_ok),),
    fix=_fix_a6,
)
def _a6(p):
    l1, l2, k1, k2, c10, c01 = (p[n] for n in ("lambda1", "lambda2", "kappa1", "kappa2", "c10", "c01"))
    e21 = _t((-(k2 * c10 + (k1 - k2) * c01), 0, 0), (c10, 1, 0), (c01, 0, 1))
    return _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l1 - l2 + 1, k1 - k2), e21=e21)


@_family("a7", 4, _p("c10", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("c10",)), label="(A7)")
def _a7(p):
    l1, l2, k1, k2 = p["lambda1"], p["lambda2"], p["kappa1"], p["kappa2"]
    e21 = _t((-k2, 0, 0), (1, 1, 0)).scale(p["c10"])
    return _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l1 + 1, k1 - k2), e21=e21)


@_corrects("a7", *_pin(lambda2=0))
def _a7_fixed(p):
    return _a7(p)


def _a8_tensor(l, k_near, k_far) -> Tensor2:
    # shape shared by (A8) and (B8): l is the free lambda, k_near the kappa of the
    # beta with lambda 0, k_far the other kappa
    d = k_far - k_near
    return _t(
        (k_near * ((l + 2) * k_near + d), 0, 0),
        (-k_near, 0, 1),
        (-(2 * (l + 2) * k_near + d), 1, 0),
        (1, 1, 1),
        (2 * (l + 2), 2, 0),
    ).scale(Fraction(1) / (2 * (l + 2)))


_L1_NOT_M2 = Constraint("requires lambda1 != -2 (the display divides by lambda1 + 2)", lambda p: p["lambda1"] != -2)


@_family(
    "a8",
    4,
    _p("c20", "lambda1", "kappa1", "kappa2", nonzero=("c20",)),
    label="(A8)",
    constraints=(_L1_NOT_M2,),
)
def _a8(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(l1, k1), _beta(0, k2), _beta(l1 + 2, k1 - k2), e21=_a8_tensor(l1, k2, k1).scale(p["c20"])
    )


def _a9_tensor(l, k_near, k_far) -> Tensor2:
    # shape shared by (A9) and (B9): l is the free lambda, k_near its kappa
    d = k_far - k_near
    return _t(
        (l / (2 * l - 2) * d**2 + (1 - 2 * l) / (2 - 2 * l) * k_near * d + k_near**2 / 2, 0, 0),
        ((2 * l - 1) * d / (2 - 2 * l) - k_near, 1, 0),
        (((2 * l - 1) * k_near + 2 * l * d) / (2 - 2 * l), 0, 1),
        (-l / (1 - l), 0, 2),
        ((1 - 2 * l) / (2 - 2 * l), 1, 1),
        (1, 2, 0),
    )


@_family(
    "a9",
    4,
    _p("c20", "lambda2", "kappa1", "kappa2", nonzero=("c20",)),
    label="(A9)",
    constraints=(Constraint("requires lambda2 != 1 (the display divides by 1 - lambda2)", lambda p: p["lambda2"] != 1),),
)
def _a9(p):
    l2, k1, k2 = p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(-1, k1), _beta(l2, k2), _beta(1 - l2, k1 - k2), e21=_a9_tensor(l2, k2, k1).scale(p["c20"])
    )


def _a10_tensor(k_near, k_far) -> Tensor2:
    # (A10)/(B10) shape; k_near is the kappa of the beta with lambda 0
    a, b = k_far, k_near
    return _t(
        (1, 3, 0),
        (-Fraction(1, 2) * (a + b), 2, 0),
        (Fraction(1, 2), 2, 1),
        (Fraction(1, 12) * (a * a + 4 * a * b + b * b), 1, 0),
        (-Fraction(1, 6) * (2 * b + a), 1, 1),
        (Fraction(1, 6), 1, 2),
        (-Fraction(1, 12) * (a * b * b + a * a * b), 0, 0),
        (Fraction(1, 12) * (b * b + 2 * a * b), 0, 1),
        (-Fraction(1, 6) * b, 0, 2),
    )


@_family("a10", 4, _p("c30", "kappa1", "kappa2", nonzero=("c30",)), label="(A10)")
def _a10(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(1, k1), _beta(0, k2), _beta(2, k1 - k2), e21=_a10_tensor(k2, k1).scale(p["c30"]))


@_corrects("a10")
def _a10_fixed(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(-1, k1), _beta(0, k2), _beta(2, k1 - k2), e21=_a10_tensor(k2, k1).scale(p["c30"]))


def _a11_tensor(k_a, k_b) -> Tensor2:
    # (A11) with (k_a, k_b) = (kappa1, kappa2); (B11) swaps them
    a, b = k_a, k_b
    return (
        _anti(3, 0)
        + _anti(2, 1).scale(Fraction(1, 2))
        + _t(
            (-Fraction(1, 2) * (a + b), 2, 0),
            (Fraction(1, 2) * (2 * a - b), 0, 2),
            (-Fraction(1, 4) * (a * a - 4 * a * b + b * b), 1, 0),
            (Fraction(1, 4) * (b * b + 2 * a * b - 2 * a * a), 0, 1),
            (Fraction(1, 2) * (a - 2 * b), 1, 1),
            (Fraction(1, 12) * (2 * b - a) * (b * b - a * b - 2 * a * a), 0, 0),
        )
    )


@_family("a11", 4, _p("c30", "kappa1", "kappa2", nonzero=("c30",)), label="(A11)")
def _a11(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(Fraction(2, 3), k1), _beta(Fraction(-5, 3), k2), _beta(Fraction(2, 3), k2 - k1),
        e21=_a11_tensor(k1, k2).scale(p["c30"]),
    )


@_corrects("a11")
def _a11_fixed(p):
    """beta_1 and beta_2 trade their lambdas; kappa_3 follows the (A) pattern kappa1 - kappa2."""
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(Fraction(-5, 3), k1), _beta(Fraction(2, 3), k2), _beta(Fraction(2, 3), k1 - k2),
        e21=_a11_tensor(k1, k2).scale(p["c30"]),
    )


def _a12_tensor(k_far, k_near, printed_a12: bool = False) -> Tensor2:
    # (A12)/(B12) shape; k_near is the kappa of the beta with lambda 0
    a, b = k_far, k_near
    d = a - b
    return _t(
        (1, 2, 1),
        (-1, 1, 2),
        (b, 0, 2),
        (-d, 2, 0),
        (Fraction(1, 2) * d * (3 * b - a), 1, 0),
        (Fraction(1, 2) * b * ((3 * a - 2 * a) if printed_a12 else (3 * b - 2 * a)), 0, 1),
        (a - 2 * b, 1, 1),
        (Fraction(1, 2) * b * d * (a - 2 * b), 0, 0),
    )


@_family("a12", 4, _p("c21", "lambda1", "kappa1", "kappa2", nonzero=("c21",)), label="(A12)")
def _a12(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(l1, k1), _beta(0, k2), _beta(l1 + 3, k1 - k2), e21=_a12_tensor(k1, k2, printed_a12=True).scale(p["c21"]))


@_corrects("a12", *_pin(lambda1=-3))
def _a12_fixed(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(-3, k1), _beta(0, k2), _beta(0, k1 - k2), e21=_a12_tensor(k1, k2).scale(p["c21"]))


def _a13_tensor(k_far, k_near, printed: bool = True) -> Tensor2:
    # (A13) with (k_far, k_near) = (kappa1, kappa2); (B13) swaps the roles
    a, b = k_far, k_near
    return _t(
        (1, 2, 1),
        (3, 1, 2),
        (-(a - b), 2, 0),
        (-3 * (2 * a - b), 0, 2),
        (-(3 * a - 2 * b), 1, 1),
        (Fraction(1, 2) * (b * b - 4 * a * b + 3 * a * a), 1, 0),
        (Fraction(1, 2) * (b * b - 6 * a * b + 6 * a * a), 0, 1),
        (
            Fraction(1, 2) * (3 * b**3 - 6 * b * b * a - 3 * b * a * a - 2 * a**3)
            if printed
            else -Fraction(1, 2) * a * (2 * a - b) * (a - b),
            0,
            0,
        ),
        (6, 0, 3),
    )


@_family("a13", 4, _p("c21", "kappa1", "kappa2", nonzero=("c21",)), label="(A13)")
def _a13(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(-1, k1), _beta(2, k2), _beta(0, k1 - k2), e21=_a13_tensor(k1, k2).scale(p["c21"]))


@_corrects("a13")
def _a13_fixed(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(-1, k1), _beta(2, k2), _beta(0, k1 - k2), e21=_a13_tensor(k1, k2, printed=False).scale(p["c21"]))


@_family("a14", 4, _p("a00", "c00", "lambda1", "kappa1", nonzero=("a00", "c00")), label="(A14)")
def _a14(p):
    b = _beta(p["lambda1"], p["kappa1"])
    a00 = _t((p["a00"], 0, 0))
    return _sv(4, b, b, _beta(0), e11=a00, e21=_t((p["c00"], 0, 0)), e22=a00)


@_family(
    "a15",
    4,
    _p("a00", "d00", "c00", "lambda1", "kappa1", nonzero=("c00",)),
    label="(A15)",
    constraints=(Constraint("requires a00 != d00", lambda p: p["a00"] != p["d00"]),),
)
def _a15(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(4, b, b, _beta(0), e11=_t((p["a00"], 0, 0)), e21=_t((p["c00"], 0, 0)), e22=_t((p["d00"], 0, 0)))


def _fix_a16(p, rng):
    while p["a00"] == p["d00"]:
        p["d00"] = p["d00"] + 1


_A_NE_D = Constraint("requires a00 != d00 (the display divides by d00 - a00)", lambda p: p["a00"] != p["d00"])


@_family(
    "a16",
    4,
    _p("a00", "d00", "c10", "kappa1", nonzero=("c10",)),
    label="(A16)",
    constraints=(_A_NE_D,),
    fix=_fix_a16,
)
def _a16(p):
    k1, a, d = p["kappa1"], p["a00"], p["d00"]
    e21 = _t((-k1, 0, 0), (1, 1, 0), (d / (d - a), 0, 1)).scale(p["c10"])
    return _sv(4, _beta(-1, k1), _beta(0, k1), _beta(0), e11=_t((a, 0, 0)), e21=e21, e22=_t((d, 0, 0)))


# ---------------------------------------------------------------- (B) list: only eta12, eta11, eta22

@_family("b1", 4, _p("b01", "lambda1", "kappa1", "kappa3", nonzero=("b01",)), label="(B1)")
def _b1(p):
    l1, k1, k3 = p["lambda1"], p["kappa1"], p["kappa3"]
    return _sv(4, _beta(l1, k1), _beta(l1 - 1, k1 + k3), _beta(0, k3), e12=_t((-k3, 0, 0), (1, 0, 1)).scale(p["b01"]))


@_family("b2", 4, _p("b00", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("b00",)), label="(B2)")
def _b2(p):
    l1, l2, k1, k2 = p["lambda1"], p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l2 - l1, k2 - k1), e12=_t((p["b00"], 0, 0)))


@_family("b3", 4, _p("b11", "lambda1", "kappa1", "kappa2", nonzero=("b11",)), label="(B3)")
def _b3(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    d = k2 - k1
    e12 = _t(
        (k1 * d + l1 * d**2, 0, 0), (-(k1 + 2 * l1 * d), 0, 1), (2 * l1, 0, 2), (-d, 1, 0), (1, 1, 1)
    ).scale(p["b11"])
    return _sv(4, _beta(l1, k1), _beta(l1 - 2, k2), _beta(0, d), e12=e12)


@_family("b4", 4, _p("b11", "kappa1", "kappa2", nonzero=("b11",)), label="(B4)")
def _b4(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    d = k2 - k1
    e12 = _t((k1 * d, 0, 0), (-d, 1, 0), (-k1, 0, 1), (1, 1, 1)).scale(p["b11"])
    return _sv(4, _beta(0, k1), _beta(-2, k2), _beta(0, d), e12=e12)


@_family("b5", 4, _p("b11", "lambda1", "kappa1", "kappa2", nonzero=("b11",)), label="(B5)")
def _b5(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    k3 = k2 - k1
    return _sv(4, _beta(l1, k1), _beta(l1 - 2, k2), _beta(0, k3), e12=_t((-k3, 1, 0), (1, 1, 1)).scale(p["b11"]))


@_corrects("b5", *_pin(lambda1=0, kappa1=0))
def _b5_fixed(p):
    return _b5(p)


def _b6_ok(p) -> bool:
    return p["lambda1"] * p["b10"] + (p["lambda2"] - p["lambda1"] + 1) * p["b01"] == 0


def _fix_b6(p, rng):
    d = p["lambda2"] - p["lambda1"] + 1
    if d == 0:
        p["lambda1"] = Fraction(0)
        d = p["lambda2"] + 1
        if d == 0:
            p["lambda2"] = Fraction(1, 2)
            d = Fraction(3, 2)
    p["b01"] = -p["lambda1"] * p["b10"] / d


@_family(
    "b6",
    4,
    _p("b10", "b01", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("b10",)),
    label="(B6)",
    constraints=(Constraint("requires lambda1*b10 + (lambda2 - lambda1 + 1)*b01 = 0", _b6_ok),),
    fix=_fix_b6,
)
def _b6(p):
    l1, l2, k1, k2, b10, b01 = (p[n] for n in ("lambda1", "lambda2", "kappa1", "kappa2", "b10", "b01"))
    e12 = _t((-(k1 * b10 + (k2 - k1) * b01), 0, 0), (b10, 1, 0), (b01, 0, 1))
    return _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l2 - l1 + 1, k2 - k1), e12=e12)


@_family("b7", 4, _p("b10", "lambda2", "kappa1", "kappa2", nonzero=("b10",)), label="(B7)")
def _b7(p):
    l2, k1, k2 = p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(0, k1), _beta(l2, k2), _beta(l2 + 1, k2 - k1), e12=_t((-k1, 0, 0), (1, 1, 0)).scale(p["b10"]))


@_family(
    "b8",
    4,
    _p("b20", "lambda2", "kappa1", "kappa2", nonzero=("b20",)),
    label="(B8)",
    constraints=(Constraint("requires lambda2 != -2 (the display divides by lambda2 + 2)", lambda p: p["lambda2"] != -2),),
)
def _b8(p):
    l2, k1, k2 = p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(0, k1), _beta(l2, k2), _beta(l2 + 2, k2 - k1), e12=_a8_tensor(l2, k1, k2).scale(p["b20"]))


_L1_NOT_1 = Constraint("requires lambda1 != 1 (the display divides by 1 - lambda1)", lambda p: p["lambda1"] != 1)


@_family("b9", 4, _p("b20", "lambda1", "kappa1", "kappa2", nonzero=("b20",)), label="(B9)", constraints=(_L1_NOT_1,))
def _b9(p):
    l1, k1, k2 = p["lambda1"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(l1, k1), _beta(-1, k2), _beta(1 - l1, k2 - k1), e12=_a9_tensor(l1, k1, k2).scale(p["b20"]))


@_family("b10", 4, _p("b30", "kappa1", "kappa2", nonzero=("b30",)), label="(B10)")
def _b10(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(0, k1), _beta(1, k2), _beta(2, k2 - k1), e12=_a10_tensor(k1, k2).scale(p["b30"]))


@_corrects("b10")
def _b10_fixed(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(0, k1), _beta(-1, k2), _beta(2, k2 - k1), e12=_a10_tensor(k1, k2).scale(p["b30"]))


@_family("b11", 4, _p("b30", "kappa1", "kappa2", nonzero=("b30",)), label="(B11)")
def _b11(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(
        4, _beta(Fraction(2, 3), k1), _beta(Fraction(-5, 3), k2), _beta(Fraction(2, 3), k2 - k1),
        e12=_a11_tensor(k2, k1).scale(p["b30"]),
    )


@_family("b12", 4, _p("b21", "lambda2", "kappa1", "kappa2", nonzero=("b21",)), label="(B12)")
def _b12(p):
    l2, k1, k2 = p["lambda2"], p["kappa1"], p["kappa2"]
    return _sv(4, _beta(0, k1), _beta(l2, k2), _beta(l2 + 3, k2 - k1), e12=_a12_tensor(k2, k1).scale(p["b21"]))


@_corrects("b12", *_pin(lambda2=-3))
def _b12_fixed(p):
    return _b12(p)


@_family("b13", 4, _p("b21", "kappa1", "kappa2", nonzero=("b21",)), label="(B13)")
def _b13(p):
    """The display writes the lambda of beta_1 as ``2 lambda1`` but lists no lambda1 parameter; read as 2."""
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(2, k1), _beta(-1, k2), _beta(0, k2 - k1), e12=_a13_tensor(k2, k1).scale(p["b21"]))


@_corrects("b13")
def _b13_fixed(p):
    k1, k2 = p["kappa1"], p["kappa2"]
    return _sv(4, _beta(2, k1), _beta(-1, k2), _beta(0, k2 - k1), e12=_a13_tensor(k2, k1, printed=False).scale(p["b21"]))


@_family("b14", 4, _p("a00", "b00", "lambda1", "kappa1", nonzero=("a00", "b00")), label="(B14)")
def _b14(p):
    b = _beta(p["lambda1"], p["kappa1"])
    a00 = _t((p["a00"], 0, 0))
    return _sv(4, b, b, _beta(0), e11=a00, e12=_t((p["b00"], 0, 0)), e22=a00)


@_family(
    "b15",
    4,
    _p("a00", "d00", "b00", "lambda1", "kappa1"),
    label="(B15)",
    constraints=(Constraint("requires a00 != d00", lambda p: p["a00"] != p["d00"]),),
    fix=_fix_a16,
)
def _b15(p):
    """The printed beta_1 = beta_2 omits the s in ``lambda1 s (x) 1``."""
    b = _t((p["lambda1"], 0, 0), (-1, 0, 1), (p["kappa1"], 0, 0))
    return _sv(4, b, b, _beta(0), e11=_t((p["a00"], 0, 0)), e12=_t((p["b00"], 0, 0)), e22=_t((p["d00"], 0, 0)))


@_corrects("b15")
def _b15_fixed(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(4, b, b, _beta(0), e11=_t((p["a00"], 0, 0)), e12=_t((p["b00"], 0, 0)), e22=_t((p["d00"], 0, 0)))


@_family(
    "b16",
    4,
    _p("a00", "d00", "b10", "kappa1"),
    label="(B16)",
    constraints=(_A_NE_D,),
    fix=_fix_a16,
)
def _b16(p):
    k1, a, d = p["kappa1"], p["a00"], p["d00"]
    e12 = _t((-k1, 0, 0), (1, 1, 0), (d / (d - a), 0, 1)).scale(p["b10"])
    return _sv(4, _beta(0, k1), _beta(-1, k1), _beta(0), e11=_t((a, 0, 0)), e12=e12, e22=_t((d, 0, 0)))


@_corrects("b16")
def _b16_fixed(p):
    k1, a, d = p["kappa1"], p["a00"], p["d00"]
    e12 = _t((-k1, 0, 0), (1, 1, 0), (a / (a - d), 0, 1)).scale(p["b10"])
    return _sv(4, _beta(0, k1), _beta(-1, k1), _beta(0), e11=_t((a, 0, 0)), e12=e12, e22=_t((d, 0, 0)))


# ---------------------------------------------------------------- (C) list: eta12 and eta21 both nonzero

_BC = ("b00", "c00")


@_family("c1", 4, _p("b00", "c00", "d00", "lambda1", "kappa1", nonzero=_BC), label="(C1)")
def _c1(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(4, b, b, _beta(0), e12=_t((p["b00"], 0, 0)), e21=_t((p["c00"], 0, 0)), e22=_t((p["d00"], 0, 0)))


@_family("c2", 4, _p("a00", "b00", "c00", "lambda1", "kappa1", nonzero=_BC), label="(C2)")
def _c2(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(4, b, b, _beta(0), e11=_t((p["a00"], 0, 0)), e12=_t((p["b00"], 0, 0)), e21=_t((p["c00"], 0, 0)))


@_family("c3", 4, _p("b01", "c01", "lambda1", "kappa1", nonzero=("b01", "c01")), label="(C3)")
def _c3(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(4, b, b, _beta(1), e12=_t((p["b01"], 0, 1)), e21=_t((p["c01"], 0, 1)))


_empty(
    "c3",
    "eta12 = b01 1(x)s needs lambda2 = lambda1 - 1 while eta21 = c01 1(x)s needs lambda1 = lambda2 - 1; "
    "with beta1 = beta2 and beta3 = s(x)1 - 1(x)s both kernels are spanned by -kappa1 + s(x)1 - lambda1 1(x)s, "
    "and then the quadratic identity forces b01*c01 = 0",
)


@_family(
    "c4", 4, _p("a00", "b00", "c00", "d00", "lambda1", "kappa1", nonzero=("a00", "b00", "c00", "d00")), label="(C4)"
)
def _c4(p):
    b = _beta(p["lambda1"], p["kappa1"])
    return _sv(
        4, b, b, _beta(0),
        e11=_t((p["a00"], 0, 0)), e12=_t((p["b00"], 0, 0)), e21=_t((p["c00"], 0, 0)), e22=_t((p["d00"], 0, 0)),
    )


def _c_shape(base: Tensor2, a, b):
    """eta11 = a*base, eta12 = b*base, eta21 = -(a^2/b)*base, eta22 = -a*base."""
    a, b = to_rat(a), to_rat(b)
    return dict(e11=base.scale(a), e12=base.scale(b), e21=base.scale(-a * a / b), e22=base.scale(-a))


@_family("c5", 4, _p("a10", "b10", "lambda1", "kappa1", nonzero=("a10", "b10")), label="(C5)")
def _c5(p):
    l1, k1 = p["lambda1"], p["kappa1"]
    b = _beta(l1, k1)
    base = _t((-k1, 0, 0), (1, 1, 0), (-l1, 0, 1))
    return _sv(4, b, b, _beta(1), **_c_shape(base, p["a10"], p["b10"]))


@_family("c6", 4, _p("a20", "b20", "kappa1", nonzero=("a20", "b20")), label="(C6)")
def _c6(p):
    k1 = p["kappa1"]
    b = _beta(0, k1)
    base = _t((2 * k1 * k1, 0, 0), (-k1, 0, 1), (-4 * k1, 1, 0), (1, 1, 1), (4, 2, 0)).scale(Fraction(1, 4))
    return _sv(4, b, b, _beta(2), **_c_shape(base, p["a20"], p["b20"]))


@_family("c7", 4, _p("a20", "b20", "kappa1", nonzero=("a20", "b20")), label="(C7)")
def _c7(p):
    k1 = p["kappa1"]
    b = _beta(-1, k1)
    base = _t(
        (k1 * k1 / 2, 0, 0), (-k1, 1, 0), (-Fraction(3, 4) * k1, 0, 1), (Fraction(3, 4), 1, 1),
        (Fraction(1, 2), 0, 2), (1, 2, 0),
    )
    return _sv(4, b, b, _beta(2), **_c_shape(base, p["a20"], p["b20"]))


@_family("c8", 4, _p("a21", "b21", "kappa1", nonzero=("a21", "b21")), label="(C8)")
def _c8(p):
    k1 = p["kappa1"]
    b = _beta(0, k1)
    base = _anti(2, 1) + _t((k1, 0, 2), (k1 * k1 / 2, 1, 0), (-k1, 1, 1))
    return _sv(4, b, b, _beta(3), **_c_shape(base, p["a21"], p["b21"]))


_empty(
    "c8",
    "with beta1 = beta2 and beta3 = 3s(x)1 - 1(x)s the linear identity for eta11 has no cubic solution for any lambda1, kappa1",
)


# ---------------------------------------------------------------- (D) list: eta != 0

@_family("d1", 4, _p("a", "b00", "d00", nonzero=("b00", "d00")), label="(D1)")
def _d1(p):
    b = _beta(0)
    return _sv(4, b, b, b, eta=_t((p["a"], 0, 0)), e12=_t((p["b00"], 0, 0)), e22=_t((p["d00"], 0, 0)))


def _d2_ok(p) -> bool:
    return p["lambda2"] * p["w01"] == 0 and p["kappa2"] * p["w01"] == 0


def _fix_d2(p, rng):
    if rng.random() < 0.5:
        p["w01"] = Fraction(0)
    else:
        p["lambda2"] = Fraction(0)
        p["kappa2"] = Fraction(0)


@_family(
    "d2",
    4,
    _p("a", "b00", "w01", "lambda2", "kappa2", nonzero=("b00",)),
    label="(D2)",
    constraints=(Constraint("requires lambda2*w01 = kappa2*w01 = 0", _d2_ok),),
    fix=_fix_d2,
)
def _d2(p):
    b = _beta(p["lambda2"], p["kappa2"])
    return _sv(4, _beta(0), b, b, alpha_m=alpha1(p["w01"]), eta=_t((p["a"], 0, 0)), e12=_t((p["b00"], 0, 0)))


def _d2_fixed_ok(p) -> bool:
    return (p["lambda2"] + 1) * p["w01"] == 0 and p["kappa2"] * p["w01"] == 0


def _fix_d2_fixed(p, rng):
    if p["w01"] != 0:
        p["lambda2"] = Fraction(-1)
        p["kappa2"] = Fraction(0)


@_corrects(
    "d2",
    (Constraint("requires (lambda2 + 1)*w01 = kappa2*w01 = 0", _d2_fixed_ok),),
    _fix_d2_fixed,
    replaces=True,
)
def _d2_fixed(p):
    return _d2(p)


@_family("d3", 4, _p("a", "d00", "lambda2", "kappa2", nonzero=("d00",)), label="(D3)")
def _d3(p):
    return _sv(
        4, _beta(0), _beta(p["lambda2"], p["kappa2"]), _beta(0), eta=_t((p["a"], 0, 0)), e22=_t((p["d00"], 0, 0))
    )


# ---------------------------------------------------------------- (E) list: alpha'_m != 0

_SHAPE = Param("alpha", "choice", tuple(_ALPHA_SHAPES), doc="shape of alpha'_m")
_W = Param("w", "nonzero", doc="coefficient of alpha'_m")

# An admissible table maps each alpha'_m shape compatible with a family's betas
# to a function that moves a random draw onto the compatible parameter locus.
Admissible = Mapping[str, Callable[[dict], None]]


def _set(**values) -> Callable[[dict], None]:
    def go(p):
        p.update({k: Fraction(v) for k, v in values.items()})
        if "kappa2" in p and "kappa2" not in values:
            p["kappa2"] = 2 * p["kappa1"]

    return go


def _shape_fix(admissible: Admissible):
    def fix(p, rng):
        if admissible:
            shape = rng.choice(sorted(admissible))
            p["alpha"] = shape
            admissible[shape](p)

    return fix


def _e_family(fid: str, extra: tuple[Param, ...], admissible: Admissible, constraints=(), base_fix=None):
    """Register an (E) family: a (B)-list eta12 together with a nonzero alpha'_m.

    The shape of alpha'_m pins lambda1, lambda2 (and kappa2 = 2 kappa1); a
    parameter record whose betas do not match the chosen shape is rejected.
    """
    shape_fix = _shape_fix(admissible)

    def fix(p, rng):
        shape_fix(p, rng)
        if base_fix is not None:
            base_fix(p, rng)

    return _family(fid, 4, (_SHAPE, _W) + extra, label=f"({fid.upper()})", constraints=constraints, fix=fix)


def _with_alpha(g: dict, p, lam1, lam2, k1, k2) -> dict:
    """Add ``[e1, e1] = alpha'_m e2`` to a (B)-list algebra."""
    g = {k: dict(v) for k, v in g.items()}
    g[(1, 1)] = {2: _alpha_for(p["alpha"], p["w"], lam1, lam2, k1, k2)}
    return g


def _e_corrects(fid: str, admissible: Admissible, constraints: tuple[Constraint, ...] = ()):
    return _corrects(fid, constraints, fix=_shape_fix(admissible))


def _e_empty(fid: str, lam1, lam2):
    _empty(
        fid,
        f"the betas have (lambda1, lambda2) = ({lam1}, {lam2}), which matches no alpha'_m shape "
        "(alpha1 needs lambda2 = 2 lambda1 - 1; alpha2pp, alpha2p, alpha3 need (1/2, -1), (0, -3), (2/3, -5/3))",
    )


_ANY_SHAPE: Admissible = {
    "alpha1": lambda p: p.update(lambda2=2 * p["lambda1"] - 1, kappa2=2 * p["kappa1"]),
    "alpha2pp": _set(lambda1=Fraction(1, 2), lambda2=-1),
    "alpha2p": _set(lambda1=0, lambda2=-3),
    "alpha3": _set(lambda1=Fraction(2, 3), lambda2=Fraction(-5, 3)),
}


def _e1_betas(p, shift: int):
    l1, k1, k3 = p["lambda1"], p["kappa1"], p["kappa3"]
    return l1, l1 + shift, k1, k1 + k3


@_e_family(
    "e1",
    _p("b01", "lambda1", "kappa1", "kappa3", nonzero=("b01",)),
    {"alpha1": lambda p: p.update(lambda1=Fraction(2), kappa3=p["kappa1"])},
)
def _e1(p):
    """Printed with beta_2 = (lambda1 + 1) s(x)1 - ..., unlike (B1)."""
    l1, l2, k1, k2 = _e1_betas(p, 1)
    k3 = p["kappa3"]
    g = _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(0, k3), e12=_t((-k3, 0, 0), (1, 0, 1)).scale(p["b01"]))
    return _with_alpha(g, p, l1, l2, k1, k2)


@_e_corrects("e1", {"alpha1": lambda p: p.update(lambda1=Fraction(0), kappa3=p["kappa1"])})
def _e1_fixed(p):
    l1, l2, k1, k2 = _e1_betas(p, -1)
    k3 = p["kappa3"]
    g = _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(0, k3), e12=_t((-k3, 0, 0), (1, 0, 1)).scale(p["b01"]))
    return _with_alpha(g, p, l1, l2, k1, k2)


@_e_family("e2", _p("b00", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("b00",)), _ANY_SHAPE)
def _e2(p):
    l1, l2, k1, k2 = p["lambda1"], p["lambda2"], p["kappa1"], p["kappa2"]
    g = _sv(4, _beta(l1, k1), _beta(l2, k2), _beta(l2 - l1, k2 - k1), e12=_t((p["b00"], 0, 0)))
    return _with_alpha(g, p, l1, l2, k1, k2)


@_e_family("e3", _p("b11", "lambda1", "kappa1", "kappa2", nonzero=("b11",)), {"alpha1": _set(lambda1=-1)})
def _e3(p):
    l1 = p["lambda1"]
    return _with_alpha(_b3(p), p, l1, l1 - 2, p["kappa1"], p["kappa2"])


@_e_family("e4", _p("b11", "kappa1", "kappa2", nonzero=("b11",)), {})
def _e4(p):
    return _with_alpha(_b4(p), p, 0, -2, p["kappa1"], p["kappa2"])


_e_empty("e4", 0, -2)


@_e_family("e5", _p("b11", "lambda1", "kappa1", "kappa2", nonzero=("b11",)), {"alpha1": _set(lambda1=-1)})
def _e5(p):
    l1 = p["lambda1"]
    return _with_alpha(_b5(p), p, l1, l1 - 2, p["kappa1"], p["kappa2"])


_empty(
    "e5",
    "the (B5) eta12 needs lambda1 = kappa1 = 0, so (lambda1, lambda2) = (0, -2), which matches no alpha'_m shape",
)


@_e_family(
    "e6",
    _p("b10", "b01", "lambda1", "lambda2", "kappa1", "kappa2", nonzero=("b10",)),
    _ANY_SHAPE,
    constraints=(Constraint("requires lambda1*b10 + (lambda2 - lambda1 + 1)*b01 = 0", _b6_ok),),
    base_fix=_fix_b6,
)
def _e6(p):
    return _with_alpha(_b6(p), p, p["lambda1"], p["lambda2"], p["kappa1"], p["kappa2"])


_L1_ZERO_SHAPES: Admissible = {"alpha1": _set(lambda2=-1), "alpha2p": _set(lambda2=-3)}


@_e_family("e7", _p("b10", "lambda2", "kappa1", "kappa2", nonzero=("b10",)), _L1_ZERO_SHAPES)
def _e7(p):
    return _with_alpha(_b7(p), p, 0, p["lambda2"], p["kappa1"], p["kappa2"])


@_e_family(
    "e8",
    _p("b20", "lambda2", "kappa1", "kappa2", nonzero=("b20",)),
    _L1_ZERO_SHAPES,
    constraints=(Constraint("requires lambda2 != -2 (the display divides by lambda2 + 2)", lambda p: p["lambda2"] != -2),),
)
def _e8(p):
    """The display lists eta12 among the zero brackets and then defines it; eta21 is the zero one."""
    return _with_alpha(_b8(p), p, 0, p["lambda2"], p["kappa1"], p["kappa2"])


@_e_family(
    "e9",
    _p("b20", "lambda1", "kappa1", "kappa2", nonzero=("b20",)),
    {"alpha1": _set(lambda1=0), "alpha2pp": _set(lambda1=Fraction(1, 2))},
    constraints=(_L1_NOT_1,),
)
def _e9(p):
    return _with_alpha(_b9(p), p, p["lambda1"], -1, p["kappa1"], p["kappa2"])


@_e_family("e10", _p("b30", "kappa1", "kappa2", nonzero=("b30",)), {})
def _e10(p):
    return _with_alpha(_b10(p), p, 0, 1, p["kappa1"], p["kappa2"])


@_e_corrects("e10", {"alpha1": _set()})
def _e10_fixed(p):
    return _with_alpha(_b10_fixed(p), p, 0, -1, p["kappa1"], p["kappa2"])


@_e_family("e11", _p("b30", "kappa1", "kappa2", nonzero=("b30",)), {"alpha3": _set()})
def _e11(p):
    return _with_alpha(_b11(p), p, Fraction(2, 3), Fraction(-5, 3), p["kappa1"], p["kappa2"])


@_e_family("e12", _p("b21", "lambda2", "kappa1", "kappa2", nonzero=("b21",)), _L1_ZERO_SHAPES)
def _e12(p):
    return _with_alpha(_b12(p), p, 0, p["lambda2"], p["kappa1"], p["kappa2"])


@_e_corrects("e12", {"alpha2p": _set(lambda2=-3)}, _pin(lambda2=-3)[0])
def _e12_fixed(p):
    return _e12(p)


@_e_family("e13", _p("b21", "kappa1", "kappa2", nonzero=("b21",)), {})
def _e13(p):
    return _with_alpha(_b13(p), p, 2, -1, p["kappa1"], p["kappa2"])


_e_empty("e13", 2, -1)


@_family(
    "e14",
    4,
    _p("w01", "lambda1", "kappa1", "a00", nonzero=("w01", "a00")),
    label="(E14)",
)
def _e14(p):
    l1, k1, a = p["lambda1"], p["kappa1"], p["a00"]
    return _sv(
        4, _beta(l1, k1), _beta(2 * l1 - 1, 2 * k1), _beta(0),
        alpha_m=alpha1(p["w01"]), e11=_t((a, 0, 0)), e22=_t((2 * a, 0, 0)),
    )


@_family("e15", 4, _p("w01", "a00", "b00", nonzero=("w01", "a00", "b00")), label="(E15)")
def _e15(p):
    a = p["a00"]
    return _sv(
        4, _beta(1), _beta(1), _beta(0),
        alpha_m=alpha1(p["w01"]), e11=_t((a, 0, 0)), e12=_t((p["b00"], 0, 0)), e22=_t((2 * a, 0, 0)),
    )


@_family("e16", 4, _p("w01", "a00", "b10", nonzero=("w01", "a00", "b10")), label="(E16)")
def _e16(p):
    a = p["a00"]
    return _sv(
        4, _beta(0), _beta(-1), _beta(0),
        alpha_m=alpha1(p["w01"]), e11=_t((a, 0, 0)), e12=_t((1, 1, 0), (2, 0, 1)).scale(p["b10"]), e22=_t((2 * a, 0, 0)),
    )


@_corrects("e16")
def _e16_fixed(p):
    a = p["a00"]
    return _sv(
        4, _beta(0), _beta(-1), _beta(0),
        alpha_m=alpha1(p["w01"]), e11=_t((a, 0, 0)), e12=_t((1, 1, 0), (-1, 0, 1)).scale(p["b10"]), e22=_t((2 * a, 0, 0)),
    )


# ---------------------------------------------------------------- public API

def _sort_key(fid: str):
    import re

    m = re.match(r"([a-z\-]+?)(\d*)(?:-(\w+))?$", fid)
    head, num, tail = (m.group(1), m.group(2), m.group(3)) if m else (fid, "", None)
    return (head, int(num) if num else -1, tail or "", fid)


def list_families() -> list[FamilySpec]:
    """All registered families, sorted by id (numeric suffixes compare as numbers)."""
    return [_REGISTRY[k] for k in sorted(_REGISTRY, key=_sort_key)]


def get_family(fid: str) -> FamilySpec:
    try:
        return _REGISTRY[fid]
    except KeyError:
        raise UnknownFamily(fid) from None


def _coerce(param: Param, value):
    if param.kind in ("rat", "nonzero"):
        return to_rat(value) if not isinstance(value, float) else _float_error(param)
    if param.kind == "choice":
        if value not in param.choices:
            raise ParamDomainViolation(f"{param.name} must be one of {', '.join(param.choices)}")
        return value
    if param.kind == "hpoly":
        if isinstance(value, HPoly):
            return value
        if isinstance(value, str):
            from .io import parse_hpoly

            return parse_hpoly(value)
        return HPoly({0: to_rat(value)})
    if param.kind == "tensor2":
        if isinstance(value, Tensor2):
            return value
        if isinstance(value, str):
            from .io import parse_tensor

            return parse_tensor(value)
    raise ParamDomainViolation(f"cannot interpret {value!r} as {param.kind} for {param.name}")


def _float_error(param: Param):
    raise ParamDomainViolation(f"{param.name}: floats are not exact; pass an int, Fraction or 'p/q' string")


def _normalize(spec: FamilySpec, params: Mapping[str, Any] | None, corrected: bool = True) -> dict:
    params = dict(params or {})
    known = {p.name for p in spec.params}
    extra = set(params) - known
    if extra:
        raise ParamDomainViolation(f"{spec.id}: unknown parameter(s) {', '.join(sorted(extra))}")
    out = {}
    for p in spec.params:
        if p.name in params:
            out[p.name] = _coerce(p, params[p.name])
        elif p.default is not None:
            out[p.name] = p.default
        else:
            raise ParamDomainViolation(f"{spec.id}: missing parameter {p.name}")
    for c in spec.constraints_for(corrected):
        if not c.holds(out):
            raise ParamDomainViolation(f"{spec.id}: {c.text}")
    return out


def build(
    fid: str,
    params: Mapping[str, Any] | None = None,
    *,
    corrected: bool = True,
    verify: bool = True,
) -> PseudoAlgebra:
    """Build family ``fid`` at ``params``.

    With ``corrected=True`` (default) families listed in :data:`CORRECTIONS` use
    the corrected structure constants.  When ``verify`` is set the skew and
    Jacobi checks run and the report is stored as ``metadata["check"]``;
    a Jacobi failure raises :class:`PaperFormulaFails`.
    """
    spec = get_family(fid)
    p = _normalize(spec, params, corrected)
    use_fix = corrected and spec.corrected is not None
    gamma = (spec.corrected if use_fix else spec.builder)(p)
    meta: dict[str, Any] = {"family": fid, "label": spec.label, "params": p, "expected": spec.expected}
    if use_fix:
        meta["corrections"] = CORRECTIONS.get(fid, {})
    A = PseudoAlgebra(spec.rank, gamma, name=fid, metadata=meta)
    if verify:
        report = check(A)
        A.metadata["check"] = report
        if not report.jacobi_pass:
            raise PaperFormulaFails(fid, report)
    return A


def _draw_rat(rng: random.Random, nonzero: bool = False, avoid: tuple = ()) -> Fraction:
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if (nonzero and x == 0) or x in avoid:
            continue
        return x


def _draw_hpoly(rng: random.Random) -> HPoly:
    while True:
        h = HPoly({n: _draw_rat(rng) for n in range(rng.randint(0, 3) + 1)})
        if not h.is_zero():
            return h


def _draw_tensor(rng: random.Random, antisymmetric: bool) -> Tensor2:
    while True:
        t = Tensor2({(a, b): _draw_rat(rng) for a in range(3) for b in range(3) if rng.random() < 0.5})
        if antisymmetric:
            t = t - t2_swap(t)
        if not t.is_zero():
            return t


def _builds(spec: FamilySpec, p: dict, corrected: bool) -> bool:
    """True when the builder accepts ``p`` (it may reject combinations no constraint names)."""
    fn = spec.corrected if corrected and spec.corrected is not None else spec.builder
    try:
        fn(p)
    except EmptyFamily:
        raise
    except (ParamDomainViolation, ZeroDivisionError):
        return False
    return True


def sample_params(
    fid: str, rng: random.Random, *, zeros: bool = False, corrected: bool = True, tries: int = 200
) -> dict:
    """A random admissible parameter record for ``fid``.

    Rationals have numerators in [-9, 9] and denominators in [1, 9]; lambda
    parameters avoid 1 unless a constraint pins them.  With ``zeros=True`` each
    rational parameter is then set to 0 whenever the constraints still hold.
    """
    spec = get_family(fid)
    for _ in range(tries):
        p: dict[str, Any] = {}
        for prm in spec.params:
            if prm.kind == "choice":
                p[prm.name] = rng.choice(prm.choices)
            elif prm.kind == "hpoly":
                p[prm.name] = _draw_hpoly(rng)
            elif prm.kind == "tensor2":
                p[prm.name] = _draw_tensor(rng, antisymmetric=rng.random() < 0.5)
            else:
                avoid = (Fraction(1),) if prm.name.startswith("lambda") else ()
                p[prm.name] = _draw_rat(rng, nonzero=prm.kind == "nonzero", avoid=avoid)
        if spec.fix is not None:
            spec.fix(p, rng)
        if corrected and spec.corrected_fix is not None:
            spec.corrected_fix(p, rng)
        cons = spec.constraints_for(corrected)
        if all(c.holds(p) for c in cons) and _builds(spec, p, corrected):
            if zeros:
                for prm in spec.params:
                    if prm.kind == "rat" and p[prm.name] != 0:
                        q = dict(p, **{prm.name: Fraction(0)})
                        if all(c.holds(q) for c in cons) and _builds(spec, q, corrected):
                            p = q
            return p
    raise ParamDomainViolation(f"{fid}: could not draw admissible parameters")


@dataclass
class VerifyReport:
    """Outcome of :func:`verify_all`; ``rows`` holds one entry per (family, draw)."""

    rows: list[dict]

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.rows)

    def failures(self) -> list[dict]:
        return [r for r in self.rows if not r["pass"]]

    def by_family(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for r in self.rows:
            out[r["family"]] = out.get(r["family"], True) and r["pass"]
        return out

    def to_json(self) -> dict:
        return {"kind": "catalog-verify", "ok": self.ok, "rows": self.rows}


def expected_class(spec: FamilySpec, A: PseudoAlgebra) -> str:
    if spec.expected == "lie":
        return "lie"
    if spec.expected == "leibniz":
        return "leibniz-not-lie"
    t = A.metadata["params"]["alpha_prime"]
    return "lie" if t2_swap(t) == -t else "leibniz-not-lie"


def verify_all(draws: int = 5, seed: int = 0, *, corrected: bool = True, zeros: bool = False) -> VerifyReport:
    """Build every family at ``draws`` random points and compare ``classify`` with the expectation."""
    rng = random.Random(seed)
    rows = []
    for spec in list_families():
        for d in range(draws):
            row: dict[str, Any] = {"family": spec.id, "draw": d}
            try:
                p = sample_params(spec.id, rng, zeros=zeros, corrected=corrected)
            except ParamDomainViolation as exc:
                row.update({"pass": False, "class": None, "error": str(exc)})
                rows.append(row)
                continue
            row["params"] = {k: str(v) for k, v in p.items()}
            try:
                A = build(spec.id, p, corrected=corrected)
            except (PaperFormulaFails, ParamDomainViolation) as exc:
                row.update({"pass": False, "class": "not-leibniz", "error": str(exc)})
            else:
                cls = classify(A, A.metadata["check"])
                row.update({"pass": cls == expected_class(spec, A), "class": cls})
                if "corrections" in A.metadata:
                    row["correction"] = A.metadata["corrections"].get("summary", "")
            rows.append(row)
    return VerifyReport(rows)


def families_markdown() -> str:
    """Reference page listing every family id, its parameters and constraints."""
    lines = ["# Family reference", "", "Generated by `pseudoalg.catalog.families_markdown()`.", ""]
    lines.append("| id | label | rank | parameters | constraints | expected | corrected |")
    lines.append("|---|---|---|---|---|---|---|")
    for s in list_families():
        params = ", ".join(f"`{p.name}`" + (f" ({'/'.join(p.choices)})" if p.choices else f" ({p.kind})") for p in s.params)
        cons = "; ".join(c.text for c in s.constraints) or "none"
        lines.append(f"| `{s.id}` | {s.label} | {s.rank} | {params or 'none'} | {cons} | {s.expected} | {'yes' if s.corrected else 'no'} |")
    lines.append("")
    if CORRECTIONS:
        lines += ["## Corrections", ""]
        for fid in sorted(CORRECTIONS, key=_sort_key):
            c = CORRECTIONS[fid]
            lines.append(f"- `{fid}`: {c.get('summary', '')}")
        lines.append("")
    return "\n".join(lines)
