"""The ``.pa`` text format for concrete pseudoalgebras.

Example::

    # Virasoro
    algebra virasoro
    rank 1
    bracket e0 e0 : e0 <- s|1 - 1|s

A term is ``[RATIONAL ["*"]] mono "|" mono`` where a mono is ``1``, ``s`` or
``s(n)`` (the divided power ``s^(n)``).  ``⊗`` may be used in place of ``|``.
Repeated ``(i, j, k)`` lines are summed.  The printer emits one line per nonzero
structure constant, ordered by ``(i, j, k)``, with terms ordered by ``(a, b)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PseudoAlgebra
from .hopf import HPoly
from .tensor import Tensor2

__all__ = [
    "ParseError",
    "AlgebraFile",
    "parse",
    "dumps",
    "load",
    "parse_tensor",
    "parse_hpoly",
    "format_tensor",
    "format_hpoly",
]


class ParseError(ValueError):
    """Syntax or validation error with a 1-based position."""

    def __init__(self, line: int, column: int, message: str, token: str = ""):
        self.line = line
        self.column = column
        self.message = message
        self.token = token
        near = f" near {token!r}" if token else ""
        super().__init__(f"line {line}, column {column}: {message}{near}")


@dataclass
class AlgebraFile:
    name: str
    rank: int
    brackets: dict[tuple[int, int, int], Tensor2] = field(default_factory=dict)

    def add(self, i: int, j: int, k: int, t: Tensor2) -> None:
        key = (i, j, k)
        total = self.brackets.get(key, Tensor2()) + t
        if total.is_zero():
            self.brackets.pop(key, None)
        else:
            self.brackets[key] = total

    def normalized(self) -> AlgebraFile:
        return AlgebraFile(self.name, self.rank, {k: self.brackets[k] for k in sorted(self.brackets) if self.brackets[k]})

    def to_algebra(self) -> PseudoAlgebra:
        gamma: dict[tuple[int, int], dict[int, Tensor2]] = {}
        for (i, j, k), t in self.brackets.items():
            gamma.setdefault((i, j), {})[k] = t
        return PseudoAlgebra(self.rank, gamma, name=self.name)

    @classmethod
    def from_algebra(cls, A: PseudoAlgebra, name: str | None = None) -> AlgebraFile:
        nm = re.sub(r"[^A-Za-z0-9_.\-]+", "_", name or A.name or "algebra").strip("_") or "algebra"
        out = cls(nm, A.rank)
        for i, j, k, t in A.nonzero():
            out.add(i, j, k, t)
        return out.normalized()

    def __eq__(self, other):
        if not isinstance(other, AlgebraFile):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return (a.name, a.rank, a.brackets) == (b.name, b.rank, b.brackets)


# Tokenizer

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<num>\d+)
  | (?P<dpow>s\()
  | (?P<s>s(?![A-Za-z0-9_]))
  | (?P<basis>e\d+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_.\-]*)
  | (?P<sym><-|[|⊗+\-*/:()])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int  # 1-based


def _tokens(text: str, line: int, col0: int = 1) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(line, col0 + pos, "unexpected character", text[pos])
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Tok(kind, m.group(), col0 + pos))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, toks: list[_Tok], line: int, end_col: int):
        self.toks = toks
        self.i = 0
        self.line = line
        self.end_col = end_col

    def peek(self, off: int = 0) -> _Tok | None:
        j = self.i + off
        return self.toks[j] if j < len(self.toks) else None

    def next(self) -> _Tok:
        t = self.peek()
        if t is None:
            raise ParseError(self.line, self.end_col, "unexpected end of line")
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.next()
        if t.text != text and not (text == "|" and t.text == "⊗"):
            raise ParseError(self.line, t.col, f"expected {text!r}", t.text)
        return t

    def fail(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        if tok is None:
            raise ParseError(self.line, self.end_col, msg)
        raise ParseError(self.line, tok.col, msg, tok.text)

    def done(self) -> bool:
        return self.i >= len(self.toks)


def _rational(c: _Cursor) -> Fraction:
    t = c.next()
    if t.kind != "num":
        c.fail("expected a rational number", t)
    num = int(t.text)
    if c.peek() is not None and c.peek().text == "/":
        c.next()
        d = c.next()
        if d.kind != "num" or int(d.text) == 0:
            c.fail("expected a positive denominator", d)
        return Fraction(num, int(d.text))
    return Fraction(num)


def _mono(c: _Cursor) -> int:
    t = c.next()
    if t.kind == "num":
        if t.text != "1":
            c.fail("a monomial must be 1, s or s(n)", t)
        return 0
    if t.kind == "s":
        return 1
    if t.kind == "dpow":
        if c.peek() is not None and c.peek().text == "-":
            c.fail("divided-power index must be non-negative")
        n = c.next()
        if n.kind != "num":
            c.fail("expected a divided-power index", n)
        c.expect(")")
        return int(n.text)
    c.fail("a monomial must be 1, s or s(n)", t)
    raise AssertionError  # unreachable


def _starts_mono(c: _Cursor, off: int = 0) -> bool:
    t = c.peek(off)
    return t is not None and (t.kind in ("s", "dpow") or t.text == "1")


def _coefficient(c: _Cursor) -> Fraction:
    """Optional leading coefficient; a bare ``1`` directly before ``|`` is the monomial."""
    t = c.peek()
    if t is None or t.kind != "num":
        return Fraction(1)
    nxt = c.peek(1)
    if t.text == "1" and nxt is not None and nxt.text in ("|", "⊗"):
        return Fraction(1)
    coeff = _rational(c)
    if c.peek() is not None and c.peek().text == "*":
        c.next()
    return coeff


def _signed_terms(c: _Cursor, term) -> None:
    sign = 1
    first = True
    while True:
        t = c.peek()
        if t is not None and t.text in ("+", "-"):
            c.next()
            sign = -1 if t.text == "-" else 1
        elif not first:
            c.fail("expected '+' or '-'")
        term(sign)
        first = False
        if c.done():
            return


def _tensor_expr(c: _Cursor) -> Tensor2:
    acc: dict[tuple[int, int], Fraction] = {}

    def term(sign: int):
        coeff = _coefficient(c)
        a = _mono(c)
        c.expect("|")
        b = _mono(c)
        acc[(a, b)] = acc.get((a, b), 0) + sign * coeff

    if c.done():
        c.fail("empty expression")
    if c.i == len(c.toks) - 1 and c.peek().text == "0":
        c.next()
        return Tensor2()
    _signed_terms(c, term)
    return Tensor2(acc)


def parse_tensor(text: str) -> Tensor2:
    """Parse a Tensor2 literal such as ``"1/2 s|1 - 1|s + 3 1|1"``."""
    c = _Cursor(_tokens(text, 1), 1, len(text) + 1)
    return _tensor_expr(c)


def parse_hpoly(text: str) -> HPoly:
    """Parse an element of H such as ``"2 + 3 s - s(4)"``; a bare rational is a constant."""
    c = _Cursor(_tokens(text, 1), 1, len(text) + 1)
    if c.done():
        c.fail("empty expression")
    acc: dict[int, Fraction] = {}

    def term(sign: int):
        t = c.peek()
        if t is not None and t.kind == "num":
            coeff = _rational(c)
            if c.peek() is not None and c.peek().text == "*":
                c.next()
            n = _mono(c) if _starts_mono(c) and c.peek().kind != "num" else 0
        else:
            coeff = Fraction(1)
            n = _mono(c)
        acc[n] = acc.get(n, 0) + sign * coeff

    _signed_terms(c, term)
    return HPoly(acc)


def _basis(c: _Cursor, rank: int) -> int:
    t = c.next()
    if t.kind != "basis":
        c.fail("expected a basis element eN", t)
    k = int(t.text[1:])
    if k >= rank:
        c.fail(f"basis index {k} out of range for rank {rank}", t)
    return k


def parse(text: str) -> AlgebraFile:
    """Parse a ``.pa`` file.  Raises :class:`ParseError` with a 1-based position."""
    name: str | None = None
    rank: int | None = None
    out: AlgebraFile | None = None
    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        c = _Cursor(_tokens(body, lineno), lineno, len(body.rstrip()) + 1)
        head = c.next()
        if name is None:
            if head.text != "algebra":
                c.fail("file must start with 'algebra NAME'", head)
            nm = c.next()
            if nm.kind not in ("word", "s", "basis"):
                c.fail("expected an algebra name", nm)
            name = nm.text
        elif rank is None:
            if head.text != "rank":
                c.fail("expected 'rank INT'", head)
            r = c.next()
            if r.kind != "num":
                c.fail("expected a non-negative integer rank", r)
            rank = int(r.text)
            out = AlgebraFile(name, rank)
        else:
            if head.text != "bracket":
                c.fail("expected 'bracket'", head)
            i = _basis(c, rank)
            j = _basis(c, rank)
            c.expect(":")
            k = _basis(c, rank)
            c.expect("<-")
            out.add(i, j, k, _tensor_expr(c))
            continue
        if not c.done():
            c.fail("unexpected trailing input")
    if out is None:
        raise ParseError(last_line, 1, "missing 'algebra' and 'rank' header lines")
    return out


def load(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _fmt_mono(n: int) -> str:
    return "1" if n == 0 else "s" if n == 1 else f"s({n})"


def _fmt_terms(pairs: list[tuple[str, Fraction]]) -> str:
    if not pairs:
        return "0"
    parts = []
    for idx, (mono, v) in enumerate(pairs):
        mag = abs(v)
        body = mono if mag == 1 else f"{mag} {mono}"
        if idx == 0:
            parts.append(f"-{body}" if v < 0 else body)
        else:
            parts.append(f"- {body}" if v < 0 else f"+ {body}")
    return " ".join(parts)


def format_tensor(t: Tensor2) -> str:
    """Canonical text for a Tensor2, terms ordered by ``(a, b)``."""
    return _fmt_terms([(f"{_fmt_mono(a)}|{_fmt_mono(b)}", v) for (a, b), v in t.items()])


def format_hpoly(h: HPoly) -> str:
    pairs = []
    for n, v in h.items():
        if n == 0:
            pairs.append((str(abs(v)), v / abs(v)))  # constant carries its own magnitude
        else:
            pairs.append((_fmt_mono(n), v))
    return _fmt_terms(pairs)


def dumps(f: AlgebraFile | PseudoAlgebra) -> str:
    """Normalized file text; ``parse(dumps(x)) == x``."""
    if isinstance(f, PseudoAlgebra):
        f = AlgebraFile.from_algebra(f)
    f = f.normalized()
    lines = [f"algebra {f.name}", f"rank {f.rank}"]
    for (i, j, k), t in f.brackets.items():
        lines.append(f"bracket e{i} e{j} : e{k} <- {format_tensor(t)}")
    return "\n".join(lines) + "\n"
