"""Exact sparse linear algebra over Q and rank computations over k(s).

Rows are ``dict[int, Fraction]`` (column -> nonzero entry).  Elimination is
deterministic: rows are processed in input order and each row pivots on its
lowest remaining column (or on the column order supplied by the caller).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .hopf import HPoly

Row = dict[int, Fraction]

__all__ = ["Row", "Echelon", "nullspace", "rank", "reduce_vector", "poly_rank", "integer_normalize"]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``order`` gives the column priority: a row pivots on the first column of
    ``order`` in which it is nonzero.  Columns missing from ``order`` rank after
    all listed ones, by index.
    """

    def __init__(self, order: Sequence[int] | None = None):
        self._prio = {c: i for i, c in enumerate(order)} if order is not None else None
        self.rows: dict[int, Row] = {}  # pivot column -> row normalised to 1 at the pivot

    def _key(self, c: int):
        if self._prio is None:
            return (0, c)
        return (0, self._prio[c]) if c in self._prio else (1, c)

    def reduce(self, row: Row) -> Row:
        """Reduce ``row`` against the stored pivots (full reduction)."""
        r = dict(row)
        # stored rows are fully reduced, so one pass over the pivots suffices
        for c in [c for c in r if c in self.rows]:
            f = r.get(c)
            if not f:
                continue
            for cc, v in self.rows[c].items():
                nv = r.get(cc, 0) - f * v
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: Row) -> bool:
        """Insert a row; return True when it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r, key=self._key)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for cc, v in r.items():
                    nv = other.get(cc, 0) - f * v
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        self.rows[p] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows, key=self._key)


def rank(rows: Iterable[Row]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[Row], ncols: int) -> list[Row]:
    """Basis of ``{x : row . x = 0 for every row}`` in ``Q^ncols``.

    One basis vector per free column, with a 1 in that column; free columns are
    taken in increasing order.
    """
    e = Echelon()
    for r in rows:
        e.add(r)
    free = [c for c in range(ncols) if c not in e.rows]
    basis = []
    for f in free:
        v: Row = {f: Fraction(1)}
        for p, r in e.rows.items():
            x = r.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def reduce_vector(e: Echelon, v: Row) -> Row:
    return e.reduce(v)


def integer_normalize(v: Row, order: Sequence[int] | None = None) -> Row:
    """Scale to coprime integers with a positive leading entry.

    The leading entry is the first nonzero one in ``order`` (default: by column index).
    """
    if not v:
        return {}
    from math import gcd, lcm

    den = 1
    for x in v.values():
        den = lcm(den, x.denominator)
    ints = {c: x * den for c, x in v.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, int(x))
    cols = [c for c in order if c in v] if order is not None else sorted(v)
    sign = -1 if ints[cols[0]] < 0 else 1
    return {c: Fraction(int(x) // g * sign) for c, x in ints.items()}


def poly_rank(vectors: Sequence[Sequence[HPoly]]) -> int:
    """Rank over the fraction field k(s) of a list of HPoly vectors.

    Fraction-free elimination: ``r <- p_c * r - r_c * p`` keeps entries polynomial.
    """
    rows = [list(v) for v in vectors if any(not h.is_zero() for h in v)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            q = rows[i]
            if q[col].is_zero():
                continue
            a, b = p[col], q[col]
            rows[i] = [a * qq - b * pp for pp, qq in zip(p, q)]
            rows[i] = _primitive(rows[i])
        r += 1
        if r == len(rows):
            break
    return r


def _primitive(v: list[HPoly]) -> list[HPoly]:
    # Rescale by a rational constant to keep coefficient sizes small.
    for h in v:
        if not h.is_zero():
            lead = h[h.degree()]
            return [x.scale(1 / lead) for x in v]
    return v
