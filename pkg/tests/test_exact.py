from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pythapotent.exact import PythaError, format_rational, is_perfect_square, isqrt, parse_rational, rational_sqrt


@pytest.mark.parametrize("n, root", [(0, 0), (968256, 984), (2, 1), (10**80, 10**40), (10**80 - 1, 10**40 - 1)])
def test_isqrt(n, root):
    assert isqrt(n) == root


def test_isqrt_negative():
    with pytest.raises(PythaError, match="negative radicand"):
        isqrt(-1)


@pytest.mark.parametrize("n, expected", [(18496, True), (4176, False), (-4, False), (0, True), (1, True)])
def test_is_perfect_square(n, expected):
    assert is_perfect_square(n) is expected


def test_square_examples_by_hand():
    assert 136 * 136 == 18496
    assert 24**2 + 60**2 == 4176 and 64**2 < 4176 < 65**2


@pytest.mark.parametrize(
    "x, root",
    [(Fraction(14400), Fraction(120)), (Fraction(831744, 121), Fraction(912, 11)), (Fraction(2), None), (Fraction(-4), None)],
)
def test_rational_sqrt(x, root):
    assert rational_sqrt(x) == root


@given(st.integers(min_value=0, max_value=10**60))
def test_isqrt_brackets(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=10**30))
def test_rational_sqrt_iff_both_squares(p, q):
    x = Fraction(p, q)
    root = rational_sqrt(x)
    both = is_perfect_square(x.numerator) and is_perfect_square(x.denominator)
    assert (root is not None) == both
    if root is not None:
        assert root * root == x and root >= 0


@given(st.integers(min_value=1, max_value=10**20), st.integers(min_value=1, max_value=10**20))
def test_rational_sqrt_of_square(g, f):
    assert rational_sqrt(Fraction(g * g, f * f)) == Fraction(g, f)


@given(st.integers(), st.integers(min_value=1), st.integers().filter(bool))
def test_reduction_idempotent(p, q, k):
    assert Fraction(k * p, k * q) == Fraction(p, q)
    x = Fraction(k * p, k * q)
    assert x.denominator >= 1


@pytest.mark.parametrize("text, value", [("-3888", Fraction(-3888)), ("46022656/9", Fraction(46022656, 9)), ("-6/4", Fraction(-3, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions())
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x
