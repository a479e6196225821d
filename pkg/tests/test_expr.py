import pytest
from hypothesis import given, settings, strategies as st

from negacyclic.errors import ParseError
from negacyclic.expr import format_components, parse_components, parse_poly
from negacyclic.fieldpoly import FpPoly, PrimeField


def test_examples():
    assert parse_poly("1+2x+x^3", 5).coeffs == (1, 2, 0, 1)
    assert parse_poly("(x+1)^4", 5).coeffs == (1, 4, 1, 4, 1)
    assert parse_poly("3x^2-1", 5).coeffs == (4, 0, 3)


def test_juxtaposition_and_reduction():
    assert parse_poly("2(x+1)^2(x+4)", 5) == parse_poly("2*(x+1)*(x+1)*(x+4)", 5)
    assert parse_poly("12x", 5).coeffs == (0, 2)
    assert parse_poly("-x", 3).coeffs == (0, 2)


@pytest.mark.parametrize("text,pos", [("x+", 2), ("x^", 2), ("(x+1", 4), ("x$1", 1), ("", 0), (")", 0)])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, 5)
    assert info.value.position == pos


def test_components():
    parts = parse_components("(x+1)^4;(x+1)^3;0;2", 5)
    assert [str(p) for p in parts] == ["x^4+4x^3+x^2+4x+1", "x^3+3x^2+3x+1", "0", "2"]
    assert [str(p) for p in parse_components("x", 5)] == ["x", "0", "0", "0"]
    assert [str(p) for p in parse_components(";;1", 5)] == ["0", "0", "1", "0"]


def test_components_error_offsets():
    with pytest.raises(ParseError) as info:
        parse_components("x;x+*", 5)
    assert info.value.position == 4
    with pytest.raises(ParseError):
        parse_components("1;2;3;4;5", 5)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=9))
def test_round_trip(coeffs):
    F = PrimeField(7)
    f = FpPoly(coeffs, F)
    assert parse_poly(str(f), F) == f


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), max_size=5), min_size=4, max_size=4))
def test_components_round_trip(rows):
    F = PrimeField(3)
    parts = tuple(FpPoly(r, F) for r in rows)
    assert parse_components(format_components(parts), F) == parts
