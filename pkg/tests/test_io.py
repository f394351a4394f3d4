import random
from fractions import Fraction

import pytest
from hypothesis import given

from pseudoalg import PseudoAlgebra
from pseudoalg.catalog import build, list_families, sample_params
from pseudoalg.io import AlgebraFile, ParseError, dumps, format_hpoly, format_tensor, parse, parse_hpoly, parse_tensor
from pseudoalg.tensor import ALPHA, beta

from conftest import hpolys, tensors

HEADER = "algebra test\nrank 2\n"


def test_parse_examples():
    f = parse(HEADER + "bracket e0 e0 : e0 <- 1 s|1 - 1 1|s\n")
    assert f.brackets[(0, 0, 0)] == ALPHA
    f = parse(HEADER + "bracket e0 e1 : e1 <- 1/2 s|1 - 1|s + 3 1|1\n")
    assert f.brackets[(0, 1, 1)] == beta(Fraction(1, 2), 3)


def test_comments_unicode_and_repeats():
    text = "# header\nalgebra v\nrank 1\nbracket e0 e0 : e0 <- s⊗1  # first\nbracket e0 e0 : e0 <- -1|s\n"
    assert parse(text).brackets[(0, 0, 0)] == ALPHA


def test_cancelling_lines_leave_nothing():
    text = HEADER + "bracket e0 e0 : e0 <- s|1\nbracket e0 e0 : e0 <- -s|1\n"
    assert parse(text).brackets == {}


@pytest.mark.parametrize(
    "line,column",
    [
        ("bracket e0 e0 : e0 <- s(-1)|1", 25),
        ("bracket e0 e2 : e0 <- s|1", 12),
        ("bracket e0 e0 : e0 <- 2|s", 24),
        ("bracket e0 e0 e0 <- s|1", 15),
    ],
)
def test_parse_errors_have_positions(line, column):
    with pytest.raises(ParseError) as exc:
        parse(HEADER + line + "\n")
    assert exc.value.line == 3
    assert exc.value.column == column


def test_missing_header():
    with pytest.raises(ParseError):
        parse("rank 1\n")
    with pytest.raises(ParseError):
        parse("")


def test_print_virasoro():
    text = dumps(PseudoAlgebra(1, {(0, 0): {0: ALPHA}}, name="virasoro"))
    assert text == "algebra virasoro\nrank 1\nbracket e0 e0 : e0 <- -1|s + s|1\n"


@given(tensors())
def test_tensor_text_round_trip(t):
    assert parse_tensor(format_tensor(t)) == t


@given(hpolys())
def test_hpoly_text_round_trip(h):
    assert parse_hpoly(format_hpoly(h)) == h


def test_catalog_files_round_trip():
    rng = random.Random(11)
    for spec in list_families():
        try:
            A = build(spec.id, sample_params(spec.id, rng))
        except ValueError:
            continue
        f = AlgebraFile.from_algebra(A)
        assert parse(dumps(f)) == f
        assert f.to_algebra().gamma(0, 0, 0) == A.gamma(0, 0, 0)
