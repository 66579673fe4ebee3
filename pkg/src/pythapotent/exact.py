"""Exact integer and rational helpers.

Integers are plain ``int`` and rationals are ``fractions.Fraction``; both are
arbitrary precision and ``Fraction`` is always kept in lowest terms with a
positive denominator.  Nothing here touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction


class PythaError(ValueError):
    """A mathematical precondition failed (not pythagorean, off-curve, ...)."""


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) for a nonnegative integer ``n``."""
    if n < 0:
        raise PythaError("negative radicand")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def rational_sqrt(x: Fraction | int) -> Fraction | None:
    """Positive square root of ``x`` if it is the square of a rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    num = math.isqrt(x.numerator)
    if num * num != x.numerator:
        return None
    den = math.isqrt(x.denominator)
    if den * den != x.denominator:
        return None
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` (decimal integers only)."""
    num, sep, den = text.strip().partition("/")
    try:
        n = int(num, 10)
        d = int(den, 10) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
