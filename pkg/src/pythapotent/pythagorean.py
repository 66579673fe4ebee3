"""Pythagorean pairs and their (m, n) parametrization."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact import PythaError, is_perfect_square, isqrt


@dataclass(frozen=True)
class PythagoreanPair:
    """Ordered pair (a, b) of positive integers with a^2 + b^2 = c^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise PythaError("nonpositive")
        if self.a * self.a + self.b * self.b != self.c * self.c or self.c < 1:
            raise PythaError("not pythagorean")


@dataclass(frozen=True)
class MnParams:
    m: int
    n: int

    @property
    def primitive(self) -> bool:
        return gcd(self.m, self.n) == 1 and (self.m - self.n) % 2 == 1


def make_pair(a: int, b: int) -> PythagoreanPair:
    if a < 1 or b < 1:
        raise PythaError("nonpositive")
    s = a * a + b * b
    if not is_perfect_square(s):
        raise PythaError("not pythagorean")
    return PythagoreanPair(a, b, isqrt(s))


def check_mn(m: int, n: int) -> None:
    if n < 1 or m < 1:
        raise PythaError("nonpositive")
    if m == n:
        raise PythaError("degenerate")
    if m < n:
        raise PythaError("need m > n")


def pair_from_mn(params: MnParams | tuple[int, int]) -> PythagoreanPair:
    m, n = (params.m, params.n) if isinstance(params, MnParams) else params
    check_mn(m, n)
    return PythagoreanPair(m * m - n * n, 2 * m * n, m * m + n * n)


def decompose_primitive(k: int, l: int) -> tuple[int, int, bool]:
    """Write a primitive pythagorean pair as (r^2 - s^2, 2rs).

    Returns ``(r, s, swapped)`` where ``swapped`` is True when ``k`` is the
    even member, i.e. ``k = 2rs`` and ``l = r^2 - s^2``.
    """
    if k < 1 or l < 1:
        raise PythaError("nonpositive")
    if gcd(k, l) != 1:
        raise PythaError("not primitive")
    c2 = k * k + l * l
    if not is_perfect_square(c2):
        raise PythaError("not pythagorean")
    c = isqrt(c2)
    swapped = k % 2 == 0
    odd, even = (l, k) if swapped else (k, l)
    if even % 2 or c % 2 == 0:
        raise PythaError("no decomposition")
    # r^2 = (c + odd) / 2, s^2 = (c - odd) / 2
    r2, s2 = (c + odd) // 2, (c - odd) // 2
    if not (is_perfect_square(r2) and is_perfect_square(s2)):
        raise PythaError("no decomposition")
    r, s = isqrt(r2), isqrt(s2)
    if s < 1 or 2 * r * s != even:
        raise PythaError("no decomposition")
    return r, s, swapped


def oriented_mn(pair: PythagoreanPair) -> tuple[int, int, int, bool]:
    """Return ``(m, n, d, swapped)`` with (a, b) = d * (m^2 - n^2, 2mn), legs swapped if flagged."""
    d = gcd(pair.a, pair.b)
    r, s, swapped = decompose_primitive(pair.a // d, pair.b // d)
    return r, s, d, swapped
