"""Pseudoalgebras over k[s]: structure constants, axiom checks, derived series."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Literal, Mapping, Sequence

from .hopf import HPoly, hp_coproduct
from .linalg import poly_rank
from .tensor import (
    Tensor2,
    Tensor3,
    comp_left,
    comp_right,
    normal_form,
    t2_mul,
    t2_swap,
    t3_swap12,
)

__all__ = [
    "PseudoAlgebra",
    "CKParams",
    "Failure",
    "CheckReport",
    "SubmoduleBasis",
    "check_skew",
    "check_jacobi",
    "check",
    "classify",
    "bracket",
    "bracket_submodules",
    "derived_series",
    "change_basis",
]

Classification = Literal["lie", "leibniz-not-lie", "not-leibniz"]


@dataclass(frozen=True)
class CKParams:
    """Parameters of ``[e0, e] = (lam s(x)1 - 1(x)s + kappa 1(x)1) (x)_H e``."""

    lam: Fraction
    kappa: Fraction

    @property
    def irreducible(self) -> bool:
        return self.lam != 1


class PseudoAlgebra:
    """Free H-module of finite rank with structure constants ``gamma[(i, j)][k]``.

    ``gamma[(i, j)][k]`` is the e_k component of ``[e_i, e_j]``.  Missing pairs
    and zero components are the zero bracket.  Instances are treated as immutable.
    """

    def __init__(
        self,
        rank: int,
        gamma: Mapping[tuple[int, int], Mapping[int, Tensor2] | Sequence[Tensor2]] | None = None,
        name: str = "",
        metadata: Mapping[str, Any] | None = None,
    ):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        self.rank = rank
        self.name = name
        self.metadata = dict(metadata or {})
        g: dict[tuple[int, int], dict[int, Tensor2]] = {}
        for (i, j), comps in (gamma or {}).items():
            if not (0 <= i < rank and 0 <= j < rank):
                raise IndexError(f"bracket index ({i},{j}) out of range for rank {rank}")
            items = comps.items() if isinstance(comps, Mapping) else enumerate(comps)
            for k, t in items:
                if not 0 <= k < rank:
                    raise IndexError(f"component e{k} out of range for rank {rank}")
                if not isinstance(t, Tensor2):
                    raise TypeError("structure constants must be Tensor2")
                if not t.is_zero():
                    prev = g.setdefault((i, j), {}).get(k)
                    g[(i, j)][k] = t if prev is None else prev + t
                    if g[(i, j)][k].is_zero():
                        del g[(i, j)][k]
            if (i, j) in g and not g[(i, j)]:
                del g[(i, j)]
        self._gamma = g

    def gamma(self, i: int, j: int, k: int) -> Tensor2:
        return self._gamma.get((i, j), {}).get(k, Tensor2())

    def bracket_of(self, i: int, j: int) -> dict[int, Tensor2]:
        return dict(self._gamma.get((i, j), {}))

    def nonzero(self):
        """Iterate ``(i, j, k, tensor)`` over nonzero structure constants in index order."""
        for (i, j) in sorted(self._gamma):
            for k in sorted(self._gamma[(i, j)]):
                yield i, j, k, self._gamma[(i, j)][k]

    def with_gamma(self, i: int, j: int, k: int, t: Tensor2, name: str | None = None) -> PseudoAlgebra:
        """Copy with one structure constant replaced."""
        g = {key: dict(v) for key, v in self._gamma.items()}
        g.setdefault((i, j), {})[k] = t
        return PseudoAlgebra(self.rank, g, name=self.name if name is None else name, metadata=self.metadata)

    def __eq__(self, other):
        if not isinstance(other, PseudoAlgebra):
            return NotImplemented
        return self.rank == other.rank and self._gamma == other._gamma

    def __repr__(self):
        n = sum(1 for _ in self.nonzero())
        return f"PseudoAlgebra(name={self.name!r}, rank={self.rank}, nonzero_constants={n})"


@dataclass(frozen=True)
class Failure:
    kind: Literal["skew", "jacobi"]
    indices: tuple[int, ...]
    component: int
    residual: Tensor2 | Tensor3

    def describe(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.kind} ({idx}) component e{self.component}: residual {self.residual}"


@dataclass
class CheckReport:
    skew_pass: bool = True
    jacobi_pass: bool = True
    failures: list[Failure] = field(default_factory=list)
    skew_checked: bool = False
    jacobi_checked: bool = False

    def merge(self, other: CheckReport) -> CheckReport:
        return CheckReport(
            skew_pass=self.skew_pass and other.skew_pass,
            jacobi_pass=self.jacobi_pass and other.jacobi_pass,
            failures=self.failures + other.failures,
            skew_checked=self.skew_checked or other.skew_checked,
            jacobi_checked=self.jacobi_checked or other.jacobi_checked,
        )

    @property
    def ok(self) -> bool:
        return self.skew_pass and self.jacobi_pass


def check_skew(A: PseudoAlgebra) -> CheckReport:
    """Skew-symmetry: ``gamma_ji^k + (12) gamma_ij^k = 0`` for all i, j, k."""
    fails = []
    for i in range(A.rank):
        for j in range(i, A.rank):
            for k in range(A.rank):
                r = A.gamma(j, i, k) + t2_swap(A.gamma(i, j, k))
                if not r.is_zero():
                    fails.append(Failure("skew", (j, i), k, r))
    return CheckReport(skew_pass=not fails, failures=fails, skew_checked=True)


def jacobi_residual(A: PseudoAlgebra, i: int, j: int, l: int, m: int) -> Tensor3:
    """e_m component of ``[[e_i,e_j],e_l] - [e_i,[e_j,e_l]] + (12)[e_j,[e_i,e_l]]``."""
    n = A.rank
    left = Tensor3()
    mid = Tensor3()
    right = Tensor3()
    for k in range(n):
        g = A.gamma(i, j, k)
        if g:
            d = A.gamma(k, l, m)
            if d:
                left = left + comp_left(g, d)
        g = A.gamma(j, l, k)
        if g:
            d = A.gamma(i, k, m)
            if d:
                mid = mid + comp_right(g, d)
        g = A.gamma(i, l, k)
        if g:
            d = A.gamma(j, k, m)
            if d:
                right = right + comp_right(g, d)
    return left - mid + t3_swap12(right)


def _jacobi_block(args):
    A, triples = args
    out = []
    for i, j, l in triples:
        for m in range(A.rank):
            r = jacobi_residual(A, i, j, l, m)
            if not r.is_zero():
                out.append(Failure("jacobi", (i, j, l), m, r))
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PSEUDOALG_THREADS", "1")))
    except ValueError:
        return 1


def check_jacobi(A: PseudoAlgebra, workers: int | None = None) -> CheckReport:
    """Left Jacobi identity on every basis triple, residuals reported per (i,j,l,m).

    ``workers`` (default: the ``PSEUDOALG_THREADS`` environment variable, else 1)
    caps the number of worker processes; the report order is always by index.
    """
    triples = list(product(range(A.rank), repeat=3))
    workers = _threads() if workers is None else max(1, workers)
    if workers == 1 or len(triples) < 64:
        fails = _jacobi_block((A, triples))
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [triples[c::workers] for c in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_jacobi_block, [(A, c) for c in chunks]))
        fails = sorted((f for p in parts for f in p), key=lambda f: (f.indices, f.component))
    return CheckReport(jacobi_pass=not fails, failures=fails, jacobi_checked=True)


def check(A: PseudoAlgebra) -> CheckReport:
    return check_skew(A).merge(check_jacobi(A))


def classify(A: PseudoAlgebra, report: CheckReport | None = None) -> Classification:
    rep = report if report is not None and report.skew_checked and report.jacobi_checked else check(A)
    if not rep.jacobi_pass:
        return "not-leibniz"
    return "lie" if rep.skew_pass else "leibniz-not-lie"


# Submodules and the derived series


@dataclass(frozen=True)
class SubmoduleBasis:
    """Generators of an H-submodule, each a coordinate vector in the e-basis."""

    generators: tuple[tuple[HPoly, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if all(h.is_zero() for h in g):
                raise ValueError("generators must be nonzero")

    @classmethod
    def full(cls, rank: int) -> SubmoduleBasis:
        return cls(tuple(tuple(HPoly.one() if k == i else HPoly() for k in range(rank)) for i in range(rank)))

    def rank_over_fraction_field(self) -> int:
        return poly_rank(self.generators)

    def __len__(self):
        return len(self.generators)


def bracket(A: PseudoAlgebra, x: Sequence[HPoly], y: Sequence[HPoly]) -> dict[int, Tensor2]:
    """``[x, y]`` for module elements given by coordinates: e_k -> H (x) H coefficient."""
    out: dict[int, Tensor2] = {}
    for i, a in enumerate(x):
        if a.is_zero():
            continue
        for j, b in enumerate(y):
            if b.is_zero():
                continue
            ab = Tensor2.simple(a, b)
            for k, g in A.bracket_of(i, j).items():
                out[k] = out.get(k, Tensor2()) + t2_mul(ab, g)
    return {k: v for k, v in out.items() if not v.is_zero()}


def bracket_submodules(A: PseudoAlgebra, X: SubmoduleBasis, Y: SubmoduleBasis) -> SubmoduleBasis:
    """Generators of the H-submodule ``[X, Y]``.

    Each bracket of generators is put in canonical form
    ``sum_d (s^(d) (x) 1) (x)_H c_d``; the coefficients ``c_d`` generate the image.
    """
    gens: list[tuple[HPoly, ...]] = []
    seen = set()
    for x in X.generators:
        for y in Y.generators:
            comps = bracket(A, x, y)
            per_degree: dict[int, list[HPoly]] = {}
            for k, t in comps.items():
                for d, h in normal_form(t):
                    per_degree.setdefault(d, [HPoly()] * A.rank)[k] = h
            for d in sorted(per_degree):
                v = tuple(per_degree[d])
                if v not in seen and any(not h.is_zero() for h in v):
                    seen.add(v)
                    gens.append(v)
    return SubmoduleBasis(tuple(gens))


def derived_series(A: PseudoAlgebra, max_steps: int) -> list[tuple[int, bool]]:
    """Ranks of ``A, A^(1), A^(2), ...`` over k(s).

    Returns ``(rank, is_zero)`` for ``A^(0) = A`` and at most ``max_steps``
    further terms, stopping early after the first zero term.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    cur = SubmoduleBasis.full(A.rank)
    out = [(cur.rank_over_fraction_field(), len(cur) == 0)]
    for _ in range(max_steps):
        if out[-1][1]:
            break
        cur = _prune(bracket_submodules(A, cur, cur))
        out.append((cur.rank_over_fraction_field(), len(cur) == 0))
    return out


def _prune(S: SubmoduleBasis) -> SubmoduleBasis:
    # Drop generators that are k-linear combinations of earlier ones, to keep
    # the pairwise bracket count small.  This never changes the H-span.
    from .linalg import Echelon

    e = Echelon()
    keep = []
    for g in S.generators:
        row = {}
        for k, h in enumerate(g):
            for d, c in h.items():
                row[k * 10_000 + d] = c
        if e.add(row):
            keep.append(g)
    return SubmoduleBasis(tuple(keep))


# Change of basis


def _det(M: list[list[HPoly]]) -> HPoly:
    n = len(M)
    if n == 0:
        return HPoly.one()
    if n == 1:
        return M[0][0]
    total = HPoly()
    for c in range(n):
        if M[0][c].is_zero():
            continue
        minor = [row[:c] + row[c + 1:] for row in M[1:]]
        term = M[0][c] * _det(minor)
        total = total + (term if c % 2 == 0 else -term)
    return total


def _inverse(M: list[list[HPoly]]) -> list[list[HPoly]]:
    n = len(M)
    det = _det(M)
    if det.degree() != 0:
        raise ValueError("change of basis must be invertible over H (constant nonzero determinant)")
    inv_det = 1 / det[0]
    out = [[HPoly()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(M) if k != j]
            c = _det(minor).scale(inv_det)
            out[i][j] = c if (i + j) % 2 == 0 else -c
    return out


def change_basis(A: PseudoAlgebra, M: Sequence[Sequence[HPoly]], name: str | None = None) -> PseudoAlgebra:
    """Rewrite A in the basis ``f_i = sum_j M[i][j] e_j``.

    ``M`` must be invertible over H.  Brackets are recomputed by H-bilinearity:
    ``[f_i, f_j] = sum (M_ip (x) M_jq) gamma_pq^k (x)_H e_k`` and
    ``T (x)_H (h e') = T Delta(h) (x)_H e'``.
    """
    n = A.rank
    Mm = [list(r) for r in M]
    if len(Mm) != n or any(len(r) != n for r in Mm):
        raise ValueError("matrix size must match the rank")
    N = _inverse(Mm)  # e_k = sum_l N[k][l] f_l
    gamma: dict[tuple[int, int], dict[int, Tensor2]] = {}
    for i in range(n):
        for j in range(n):
            comps = bracket(A, Mm[i], Mm[j])
            out: dict[int, Tensor2] = {}
            for k, t in comps.items():
                for l in range(n):
                    h = N[k][l]
                    if not h.is_zero():
                        out[l] = out.get(l, Tensor2()) + t2_mul(t, hp_coproduct(h))
            gamma[(i, j)] = out
    return PseudoAlgebra(n, gamma, name=A.name if name is None else name, metadata=A.metadata)
