"""Linear systems from bracket identities, solution spaces, and cohomology.

An identity is ``sum(lhs) = sum(rhs)`` over terms built from two compositions:

=======  ==========================================
``L``    ``(x Delta (x) 1) y``
``Ls``   ``(x Delta (x) 1) ((12) y)``
``R``    ``(1 (x) x Delta) y``
``sR``   ``(12) (1 (x) x Delta) y``
``sRs``  ``(12) (1 (x) x Delta) ((12) y)``
=======  ==========================================

Operands are referred to by name (``alpha`` is always ``s(x)1 - 1(x)s``).  With
one operand declared unknown, the residual is affine in its coefficients as long
as no single term contains it twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Literal, Mapping, Sequence

from .hopf import HPoly, Scalar, to_rat
from .linalg import Echelon, Row, integer_normalize, nullspace
from .tensor import (
    ALPHA,
    Tensor2,
    Tensor3,
    beta,
    comp_left,
    comp_right,
    right_delta_action,
    t2_mul,
    t2_swap,
    t3_swap12,
)

__all__ = [
    "NonlinearOccurrence",
    "UnknownTemplate",
    "UnknownTensor",
    "LinearSystem",
    "TEMPLATES",
    "template_residual",
    "residual_as_linear_map",
    "CohomologyReport",
    "coboundary",
    "cohomology",
    "MTypeRow",
    "enumerate_mtype",
    "solve_eta",
    "EtaSolution",
]


class NonlinearOccurrence(ValueError):
    """The unknown appears in both operands of a single term."""


class UnknownTemplate(KeyError):
    pass


Op = Literal["L", "Ls", "R", "sR", "sRs"]
Term = tuple[int, Op, str, str]


@dataclass(frozen=True)
class Identity:
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]


def _id(lhs: Sequence[Term], rhs: Sequence[Term]) -> Identity:
    return Identity(tuple(lhs), tuple(rhs))


# Identity templates of the Jacobi system for rank-two and rank-four algebras.
TEMPLATES: dict[str, tuple[Identity, ...]] = {
    "aa1": (
        _id(
            [(1, "L", "alpha", "alpha_p"), (1, "L", "alpha_p", "eta2")],
            [
                (1, "R", "alpha", "alpha_p"),
                (-1, "sR", "alpha", "alpha_p"),
                (1, "R", "alpha_p", "eta1"),
                (-1, "sR", "alpha_p", "eta1"),
            ],
        ),
    ),
    "aa2": (_id([(1, "L", "alpha", "eta1")], [(1, "R", "eta1", "eta1"), (-1, "sR", "eta1", "eta1")]),),
    "aa3": (_id([(1, "L", "eta2", "eta2")], [(1, "R", "alpha", "eta2"), (-1, "sR", "eta2", "eta1")]),),
    "aa4": (_id([(1, "L", "eta1", "eta2")], [(1, "R", "eta2", "eta1"), (-1, "sR", "alpha", "eta2")]),),
    "L8": (
        _id(
            [(1, "L", "alpha", "alpha_p")],
            [
                (1, "R", "alpha", "alpha_p"),
                (-1, "sR", "alpha", "alpha_p"),
                (1, "R", "alpha_p", "eta1"),
                (-1, "sR", "alpha_p", "eta1"),
            ],
        ),
    ),
    "L15": (
        _id([(1, "L", "alpha", "alpha_p")], [(1, "R", "alpha", "alpha_p"), (-1, "sR", "alpha", "alpha_p")]),
    ),
    "eq21a": (
        _id([(1, "L", "beta1", "gamma")], [(1, "R", "gamma", "beta2"), (-1, "sR", "beta3", "gamma")]),
    ),
    "eq25": (
        _id([(1, "L", "alpha_m", "eta21")], []),
        _id([(1, "L", "eta", "eta21")], []),
    ),
    "eq26": (
        _id(
            [(1, "L", "alpha_m", "eta22")],
            [
                (1, "R", "eta11", "alpha_m"),
                (-1, "sR", "eta11", "alpha_m"),
                (1, "R", "eta12", "eta"),
                (-1, "sR", "eta12", "eta"),
            ],
        ),
    ),
    "eq27": (
        _id(
            [(1, "L", "eta", "eta22")],
            [(1, "R", "eta21", "alpha_m"), (1, "R", "eta22", "eta"), (1, "sRs", "eta11", "eta")],
        ),
    ),
    "eq28": (_id([(1, "L", "beta1", "eta11")], [(1, "R", "eta11", "beta1"), (-1, "sR", "beta3", "eta11")]),),
    "eq29": (_id([(1, "L", "beta1", "eta12")], [(1, "R", "eta12", "beta2"), (-1, "sR", "beta3", "eta12")]),),
    "eq210": (_id([(1, "L", "beta2", "eta21")], [(1, "R", "eta21", "beta1"), (-1, "sR", "beta3", "eta21")]),),
    "eq211": (_id([(1, "L", "beta2", "eta22")], [(1, "R", "eta22", "beta2"), (-1, "sR", "beta3", "eta22")]),),
    "eq212": (
        _id(
            [(1, "L", "eta11", "eta11"), (1, "L", "eta12", "eta21")],
            [(1, "sRs", "eta11", "eta11"), (1, "sRs", "eta12", "eta21")],
        ),
    ),
    "eq213": (
        _id(
            [(1, "L", "eta11", "eta12"), (1, "L", "eta12", "eta22")],
            [(1, "sRs", "eta11", "eta12"), (1, "sRs", "eta12", "eta22")],
        ),
    ),
    "eq214": (
        _id(
            [(1, "L", "eta21", "eta11"), (1, "L", "eta22", "eta21")],
            [(1, "sRs", "eta21", "eta11"), (1, "sRs", "eta22", "eta21")],
        ),
    ),
    "eq215": (
        _id(
            [(1, "L", "eta21", "eta12"), (1, "L", "eta22", "eta22")],
            [(1, "sRs", "eta21", "eta12"), (1, "sRs", "eta22", "eta22")],
        ),
    ),
    "eq216": (_id([(1, "Rs", "eta21", "eta")], [(1, "sRs", "eta21", "eta")]),),
    "eq217": (_id([(1, "L", "beta1", "eta")], [(1, "R", "eta", "beta2"), (-1, "sR", "beta2", "eta")]),),
    "eq218": (
        _id([(1, "L", "beta1", "alpha_m")], [(1, "R", "alpha_m", "beta2"), (-1, "sR", "beta1", "alpha_m")]),
    ),
    "eq219": (
        _id([(-1, "Ls", "alpha_m", "eta")], [(1, "R", "alpha_m", "eta"), (-1, "sR", "alpha_m", "eta")]),
    ),
    "eq220": (_id([(1, "R", "eta", "eta")], [(1, "sR", "eta", "eta")]),),
    "eq221": (
        _id([(1, "L", "eta", "eta22")], [(1, "R", "eta22", "eta"), (1, "sRs", "eta11", "eta")]),
    ),
}


def _apply(op: str, x: Tensor2, y: Tensor2) -> Tensor3:
    if op == "L":
        return comp_left(x, y)
    if op == "Ls":
        return comp_left(x, t2_swap(y))
    if op == "R":
        return comp_right(x, y)
    if op == "Rs":
        return comp_right(x, t2_swap(y))
    if op == "sR":
        return t3_swap12(comp_right(x, y))
    if op == "sRs":
        return t3_swap12(comp_right(x, t2_swap(y)))
    raise ValueError(f"unknown operator {op}")


def _lookup(values: Mapping[str, Tensor2], name: str) -> Tensor2:
    if name == "alpha":
        return ALPHA
    return values.get(name, Tensor2())


def template_residual(template: str, values: Mapping[str, Tensor2]) -> list[Tensor3]:
    """Evaluate ``lhs - rhs`` of every identity in a template; absent operands are zero."""
    try:
        ids = TEMPLATES[template]
    except KeyError:
        raise UnknownTemplate(template) from None
    out = []
    for ident in ids:
        r = Tensor3()
        for sign, terms in ((1, ident.lhs), (-1, ident.rhs)):
            for c, op, x, y in terms:
                r = r + _apply(op, _lookup(values, x), _lookup(values, y)).scale(sign * c)
        out.append(r)
    return out


@dataclass(frozen=True)
class UnknownTensor:
    """Unknown element of H(x)H with slot degrees bounded by ``max_a`` and ``max_b``."""

    name: str
    max_a: int
    max_b: int
    symmetry: Literal["none", "antisymmetric"] = "none"

    def __post_init__(self):
        if self.symmetry == "antisymmetric" and self.max_a != self.max_b:
            raise ValueError("an antisymmetric unknown needs a square degree box")

    def coordinates(self) -> list[tuple[int, int]]:
        """One ``(a, b)`` per free coefficient (``a < b`` when antisymmetric)."""
        if self.symmetry == "antisymmetric":
            return [(a, b) for a in range(self.max_a + 1) for b in range(a + 1, self.max_b + 1)]
        return [(a, b) for a in range(self.max_a + 1) for b in range(self.max_b + 1)]

    def basis_tensor(self, coord: tuple[int, int]) -> Tensor2:
        a, b = coord
        if self.symmetry == "antisymmetric":
            return Tensor2({(a, b): 1, (b, a): -1})
        return Tensor2({(a, b): 1})

    def tensor(self, vec: Mapping[int, Scalar]) -> Tensor2:
        coords = self.coordinates()
        total = Tensor2()
        for c, v in vec.items():
            total = total + self.basis_tensor(coords[c]).scale(v)
        return total


@dataclass
class LinearSystem:
    """Rows ``sum_j A[r][j] x_j = b_r``; one row per residual monomial."""

    unknown: UnknownTensor
    rows: list[Row]
    rhs: list[Fraction]
    provenance: list[tuple[str, int, tuple[int, int, int]]] = field(default_factory=list)

    @property
    def ncols(self) -> int:
        return len(self.unknown.coordinates())

    def is_homogeneous(self) -> bool:
        return not any(self.rhs)

    def kernel(self) -> list[Tensor2]:
        return [self.unknown.tensor(v) for v in nullspace(self.rows, self.ncols)]

    def kernel_vectors(self) -> list[Row]:
        return nullspace(self.rows, self.ncols)

    def solve(self) -> tuple[Tensor2 | None, list[Tensor2]]:
        """Particular solution (None when inconsistent) and a kernel basis."""
        n = self.ncols
        aug = [dict(r, **{n: -b}) if b else dict(r) for r, b in zip(self.rows, self.rhs)]
        e = Echelon()
        for r in aug:
            e.add(r)
        if n in e.rows:
            return None, self.kernel()
        part = {}
        for p, r in e.rows.items():
            v = r.get(n)
            if v:
                part[p] = -v
        return self.unknown.tensor(part), self.kernel()


def residual_as_linear_map(
    template: str, known: Mapping[str, Tensor2], unknown: UnknownTensor
) -> LinearSystem:
    """Linear system for the unknown's coefficients from a template.

    Raises :class:`NonlinearOccurrence` when a term contains the unknown twice.
    """
    try:
        ids = TEMPLATES[template]
    except KeyError:
        raise UnknownTemplate(template) from None
    for ident in ids:
        for _, _, x, y in ident.lhs + ident.rhs:
            if x == unknown.name and y == unknown.name:
                raise NonlinearOccurrence(f"{unknown.name} occurs quadratically in {template}")
    base = dict(known)
    base[unknown.name] = Tensor2()
    const = template_residual(template, base)
    coords = unknown.coordinates()
    cols: list[list[Tensor3]] = []
    for c in coords:
        vals = dict(base)
        vals[unknown.name] = unknown.basis_tensor(c)
        res = template_residual(template, vals)
        cols.append([r - k for r, k in zip(res, const)])
    rows: list[Row] = []
    rhs: list[Fraction] = []
    prov = []
    for idx in range(len(ids)):
        by_mono: dict[tuple, Row] = {}
        for j, col in enumerate(cols):
            for mono, c in col[idx].terms.items():
                by_mono.setdefault(mono, {})[j] = c
        for mono in const[idx].terms:
            by_mono.setdefault(mono, {})
        for mono in sorted(by_mono):
            rows.append(by_mono[mono])
            rhs.append(-const[idx][mono])
            prov.append((template, idx, mono))
    return LinearSystem(unknown, rows, rhs, prov)


# Cohomology of rank-two extensions of the Virasoro algebra

Variant = Literal["lie", "leibniz", "trivial"]

_VARIANT_TEMPLATE = {"lie": "aa1", "leibniz": "L8", "trivial": "L15"}


def _etas(variant: Variant, lam: Fraction, kappa: Fraction) -> tuple[Tensor2, Tensor2]:
    if variant == "trivial":
        return Tensor2(), Tensor2()
    eta1 = beta(lam, kappa)
    eta2 = -t2_swap(eta1) if variant == "lie" else Tensor2()
    return eta1, eta2


def coboundary(variant: Variant, lam: Scalar, kappa: Scalar, A: HPoly) -> Tensor2:
    """``(1(x)A) eta1 + (A(x)1) eta2 - alpha Delta(A)``: the change of ``e0 -> e0 + A e1``."""
    eta1, eta2 = _etas(variant, to_rat(lam), to_rat(kappa))
    one = HPoly.one()
    return (
        t2_mul(Tensor2.simple(one, A), eta1)
        + t2_mul(Tensor2.simple(A, one), eta2)
        - right_delta_action(ALPHA, A)
    )


@dataclass
class CohomologyReport:
    variant: Variant
    lam: Fraction
    kappa: Fraction
    degree_bound: int
    solution_dim: int
    coboundary_dim: int
    basis: list[Tensor2]

    @property
    def h2_dim(self) -> int:
        return self.solution_dim - self.coboundary_dim

    def to_json(self) -> dict:
        return {
            "kind": "cohomology",
            "variant": self.variant,
            "lambda": str(self.lam),
            "kappa": str(self.kappa),
            "degree_bound": self.degree_bound,
            "solution_dim": self.solution_dim,
            "coboundary_dim": self.coboundary_dim,
            "h2_dim": self.h2_dim,
            "basis": [tensor_to_json(t) for t in self.basis],
        }


def tensor_to_json(t: Tensor2) -> list[dict]:
    return [{"a": a, "b": b, "coeff": str(c)} for (a, b), c in t.items()]


def _rep_priority(bound: int) -> list[tuple[int, int]]:
    # Coboundaries are used to clear the columns with a low slot first, so the
    # surviving representatives live on "interior" monomials.
    cells = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    return sorted(cells, key=lambda ab: (min(ab), -max(ab), ab[0]))


def _box_index(bound: int) -> dict[tuple[int, int], int]:
    return {(a, b): a * (bound + 1) + b for a in range(bound + 1) for b in range(bound + 1)}


def coboundary_space(variant: Variant, lam: Scalar, kappa: Scalar, bound: int) -> list[Row]:
    """Basis (as box-coordinate rows) of the coboundaries whose support fits the box."""
    idx = _box_index(bound)
    # A of degree up to 2*bound + 2 covers every coboundary that can land in the box.
    top = 2 * bound + 2
    images = [coboundary(variant, lam, kappa, HPoly.basis(n)) for n in range(top + 1)]
    out_cols: dict[tuple[int, int], int] = {}
    for t in images:
        for key in t.terms:
            if key not in idx and key not in out_cols:
                out_cols[key] = len(out_cols)
    # kernel of the out-of-box projection, over combination coefficients of the images
    constraints: dict[int, Row] = {}
    for n, t in enumerate(images):
        for key, c in t.terms.items():
            if key in out_cols:
                constraints.setdefault(out_cols[key], {})[n] = c
    combos = nullspace(list(constraints.values()), len(images))
    e = Echelon()
    for comb_vec in combos:
        v: Row = {}
        for n, c in comb_vec.items():
            for key, x in images[n].terms.items():
                j = idx[key]
                v[j] = v.get(j, 0) + c * x
        v = {j: x for j, x in v.items() if x}
        if v:
            e.add(v)
    return list(e.rows.values())


@lru_cache(maxsize=None)
def _cohomology_parts(variant: Variant, degree_bound: int) -> tuple[list[Row], list[Row], list[Row]]:
    # The identity is affine in (lam, kappa): rows = R0 + lam * Rl + kappa * Rk.
    unknown = UnknownTensor("alpha_p", degree_bound, degree_bound)
    template = _VARIANT_TEMPLATE[variant]

    def rows_at(lam, kappa):
        eta1, eta2 = _etas(variant, to_rat(lam), to_rat(kappa))
        system = residual_as_linear_map(template, {"eta1": eta1, "eta2": eta2}, unknown)
        return {p[2]: r for p, r in zip(system.provenance, system.rows)}

    r0, rl, rk = rows_at(0, 0), rows_at(1, 0), rows_at(0, 1)
    monos = sorted(set(r0) | set(rl) | set(rk))
    empty: Row = {}

    def diff(a: Row, b: Row) -> Row:
        out = dict(a)
        for j, v in b.items():
            out[j] = out.get(j, 0) - v
        return {j: v for j, v in out.items() if v}

    return (
        [r0.get(m, empty) for m in monos],
        [diff(rl.get(m, empty), r0.get(m, empty)) for m in monos],
        [diff(rk.get(m, empty), r0.get(m, empty)) for m in monos],
    )


def _cohomology_rows(variant: Variant, lam: Fraction, kappa: Fraction, degree_bound: int) -> list[Row]:
    out = []
    for a, b, c in zip(*_cohomology_parts(variant, degree_bound)):
        row = dict(a)
        for part, k in ((b, lam), (c, kappa)):
            if k:
                for j, v in part.items():
                    row[j] = row.get(j, 0) + k * v
        out.append({j: v for j, v in row.items() if v})
    return out


def cohomology(variant: Variant, lam: Scalar, kappa: Scalar, degree_bound: int = 12) -> CohomologyReport:
    """Second cohomology of the rank-two extension with parameters ``(lam, kappa)``.

    Solutions of the Jacobi identity for ``[e0, e0]``'s e1 component in the box
    ``a, b <= degree_bound`` modulo the coboundaries that fit the same box.
    """
    if variant not in _VARIANT_TEMPLATE:
        raise ValueError(f"unknown variant {variant!r}")
    lam, kappa = to_rat(lam), to_rat(kappa)
    unknown = UnknownTensor("alpha_p", degree_bound, degree_bound)
    sols = nullspace(_cohomology_rows(variant, lam, kappa, degree_bound), len(unknown.coordinates()))
    coords = unknown.coordinates()
    idx = _box_index(degree_bound)
    # unknown coordinates coincide with the box layout
    assert all(idx[c] == i for i, c in enumerate(coords))
    cob = coboundary_space(variant, lam, kappa, degree_bound)
    prio = [idx[c] for c in _rep_priority(degree_bound)]
    ecob = Echelon(order=prio)
    for r in cob:
        ecob.add(r)
    equot = Echelon(order=prio)
    for v in sols:
        equot.add(ecob.reduce(v))
    lex = sorted(range(len(coords)), key=lambda j: coords[j])
    basis = []
    for p in equot.pivots():
        vec = integer_normalize(equot.rows[p], order=lex)
        basis.append(unknown.tensor(vec))
    basis.sort(key=lambda t: (max(a + b for a, b in t.terms), min(t.terms)))
    return CohomologyReport(variant, lam, kappa, degree_bound, len(sols), len(cob), basis)


def same_class(
    variant: Variant, lam: Scalar, kappa: Scalar, bound: int, xs: Sequence[Tensor2], ys: Sequence[Tensor2]
) -> bool:
    """Whether ``xs`` and ``ys`` span the same subspace modulo coboundaries in the box."""
    idx = _box_index(bound)
    cob = coboundary_space(variant, lam, kappa, bound)

    def span(ts):
        e = Echelon()
        for r in cob:
            e.add(r)
        for t in ts:
            e.add({idx[k]: c for k, c in t.terms.items()})
        return e

    ex, ey = span(xs), span(ys)
    if ex.rank != ey.rank:
        return False
    return not any(ex.add({idx[k]: c for k, c in t.terms.items()}) for t in ys)


# m-type enumeration and eta rigidity


@dataclass
class MTypeRow:
    m: int
    lambda1: Fraction
    solvable: bool
    lambda2: Fraction | None
    basis: list[Tensor2]


def _mtype_system(m: int, lam1: Fraction, lam2: Fraction, kappa1: Fraction):
    unknown = UnknownTensor("alpha_m", m, m, "antisymmetric")
    known = {"beta1": beta(lam1, kappa1), "beta2": beta(lam2, 2 * kappa1)}
    return residual_as_linear_map("eq218", known, unknown)


def enumerate_mtype(
    m_max: int = 6,
    degree_bound: int = 12,
    lambda_grid: Iterable[Scalar] = (),
    kappa1: Scalar = 0,
) -> list[MTypeRow]:
    """Search for antisymmetric ``alpha'_m`` of top degree exactly ``m``.

    For each ``(m, lambda1)`` the candidate ``lambda2 = 2 lambda1 - d`` runs over the
    weights ``d = 1 .. 2m - 1`` that a homogeneous top part can carry, with
    ``kappa2 = 2 kappa1``.  A solution has top degree ``m`` when the kernel grows
    from degree box ``m - 1`` to ``m``.
    """
    if m_max > 8:
        raise ValueError("m_max must be at most 8")
    m_max = min(m_max, degree_bound)
    kappa1 = to_rat(kappa1)
    table = []
    for m in range(1, m_max + 1):
        for lam1 in map(to_rat, lambda_grid):
            found = None
            for d in range(1, 2 * m):
                lam2 = 2 * lam1 - d
                top = _mtype_system(m, lam1, lam2, kappa1).kernel()
                lower = _mtype_system(m - 1, lam1, lam2, kappa1).kernel() if m > 1 else []
                if len(top) > len(lower):
                    fresh = [t for t in top if max(max(k) for k in t.terms) == m] or top
                    found = (lam2, top if not fresh else fresh)
                    break
            table.append(
                MTypeRow(m, lam1, found is not None, found[0] if found else None, found[1] if found else [])
            )
    return table


@dataclass
class EtaSolution:
    lambda1: Fraction
    kappa1: Fraction
    linear_dim: int
    basis: list[Tensor2]

    @property
    def dim(self) -> int:
        return len(self.basis)


def solve_eta(
    degree_bound: int,
    lambda1: Scalar,
    kappa1: Scalar,
    lambda2: Scalar | None = None,
    kappa2: Scalar | None = None,
) -> EtaSolution:
    """Brackets ``[e1, e2] = eta (x)_H e2`` compatible with the Virasoro action.

    The linear identity is solved exactly in the degree box.  The quadratic one is
    imposed by keeping the largest subspace on which its polarisation vanishes.
    ``lambda2``/``kappa2`` default to ``2 lambda1 - 1`` and ``2 kappa1``.
    """
    lam1, k1 = to_rat(lambda1), to_rat(kappa1)
    lam2 = 2 * lam1 - 1 if lambda2 is None else to_rat(lambda2)
    k2 = 2 * k1 if kappa2 is None else to_rat(kappa2)
    unknown = UnknownTensor("eta", degree_bound, degree_bound)
    known = {"beta1": beta(lam1, k1), "beta2": beta(lam2, k2)}
    lin = residual_as_linear_map("eq217", known, unknown).kernel()
    if not lin:
        return EtaSolution(lam1, k1, 0, [])

    def quad(x: Tensor2, y: Tensor2) -> Tensor3:
        # polarisation of (1(x)eta Delta)eta - (12)(1(x)eta Delta)eta
        r = comp_right(x, y) + comp_right(y, x)
        return r - t3_swap12(r)

    # v = sum c_i lin_i lies in the radical iff quad(v, lin_j) = 0 for every j
    monos: dict[tuple, dict[int, Fraction]] = {}
    for i, u in enumerate(lin):
        for j, w in enumerate(lin):
            for key, c in quad(u, w).terms.items():
                monos.setdefault((j,) + key, {})[i] = c
    kern = nullspace(list(monos.values()), len(lin))
    basis = []
    for v in kern:
        t = Tensor2()
        for i, c in v.items():
            t = t + lin[i].scale(c)
        basis.append(t)
    return EtaSolution(lam1, k1, len(lin), basis)
