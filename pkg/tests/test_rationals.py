from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lotpref.rationals import format_rational, parse_rational


def test_parse_integer_forms():
    assert parse_rational("0") == Fraction(0)
    assert parse_rational("7") == Fraction(7)
    assert parse_rational("-3") == Fraction(-3)


def test_parse_fraction_forms():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2/5") == Fraction(-2, 5)
    assert parse_rational("6/4") == Fraction(3, 2)


def test_format_is_canonical():
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(0)) == "0"


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1E3", "", ".", "1/0", "x", "1/2/3"])
def test_parse_rejects_non_canonical(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize("bad", [0.5, 1, None, Fraction(1, 2)])
def test_parse_rejects_non_strings(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_round_trip(num, den):
    value = Fraction(num, den)
    assert parse_rational(format_rational(value)) == value
