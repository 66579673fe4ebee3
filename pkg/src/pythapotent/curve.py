"""The curve y^2 = x^3 + A x^2 + B x with A = a^2h + b^2h, B = a^2h b^2h.

Points live in affine coordinates over ``Fraction`` plus a point at
infinity.  The group law is the usual chord-and-tangent one; the doubling
formula x([2]P) = (x^2 - B)^2 / (2y)^2 is only used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact import PythaError, is_perfect_square
from .pythagorean import PythagoreanPair, make_pair

# Rational torsion never exceeds order 12 (Mazur); 16 leaves headroom.
TORSION_CAP = 16


@dataclass(frozen=True)
class Curve:
    pair: PythagoreanPair
    h: int
    A: int = field(init=False)
    B: int = field(init=False)

    def __post_init__(self):
        if self.h < 1:
            raise PythaError("degree must be positive")
        a2h, b2h = self.pair.a ** (2 * self.h), self.pair.b ** (2 * self.h)
        object.__setattr__(self, "A", a2h + b2h)
        object.__setattr__(self, "B", a2h * b2h)
        if self.B == 0 or self.A * self.A == 4 * self.B:
            raise PythaError("singular curve")

    @property
    def a(self) -> int:
        return self.pair.a

    @property
    def b(self) -> int:
        return self.pair.b

    @property
    def ah(self) -> int:
        return self.pair.a**self.h

    @property
    def bh(self) -> int:
        return self.pair.b**self.h

    def rhs(self, x):
        return x * (x * (x + self.A) + self.B)

    def __str__(self):
        return f"y^2 = x^3 + {self.A}*x^2 + {self.B}*x"


class Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


CurvePoint = Union[Point, Infinity]


def make_curve(a: int, b: int, h: int) -> Curve:
    return Curve(make_pair(a, b), h)


def contains(c: Curve, P: CurvePoint) -> bool:
    if P is INFINITY:
        return True
    return P.y * P.y == c.rhs(P.x)


def _require(c: Curve, *points: CurvePoint) -> None:
    for P in points:
        if not contains(c, P):
            raise PythaError("point not on curve")


def neg(P: CurvePoint) -> CurvePoint:
    if P is INFINITY:
        return P
    return Point(P.x, -P.y)


def _add(c: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    if P.x == Q.x:
        if P.y + Q.y == 0:
            return INFINITY
        lam = (3 * P.x * P.x + 2 * c.A * P.x + c.B) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - c.A - P.x - Q.x
    y3 = -(P.y + lam * (x3 - P.x))
    return Point(x3, y3)


def _mul(c: Curve, k: int, P: CurvePoint) -> CurvePoint:
    if k < 0:
        k, P = -k, neg(P)
    R = INFINITY
    while k:
        if k & 1:
            R = _add(c, R, P)
        k >>= 1
        if k:
            P = _add(c, P, P)
    return R


def add(c: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    _require(c, P, Q)
    return _add(c, P, Q)


def double(c: Curve, P: CurvePoint) -> CurvePoint:
    _require(c, P)
    return _add(c, P, P)


def scalar_mul(c: Curve, k: int, P: CurvePoint) -> CurvePoint:
    """[k]P by double-and-add."""
    _require(c, P)
    return _mul(c, k, P)


def doubled_x(c: Curve, P: Point) -> Fraction:
    """x([2]P) from the closed form (x^2 - B)^2 / (2y)^2; requires y != 0."""
    if P.y == 0:
        raise PythaError("2-torsion point has no affine double")
    return (P.x * P.x - c.B) ** 2 / (2 * P.y) ** 2


def classify_order(c: Curve, P: CurvePoint) -> int | None:
    """Least n <= 16 with [n]P = O, or None when P has infinite order."""
    _require(c, P)
    Q = P
    for n in range(1, TORSION_CAP + 1):
        if Q is INFINITY:
            return n
        Q = _add(c, Q, P)
    return None


def is_torsion(c: Curve, P: CurvePoint) -> bool:
    return classify_order(c, P) is not None


def torsion_points(c: Curve) -> list[tuple[CurvePoint, int]]:
    """The eight points of the Z/2 x Z/4 torsion catalogue, with verified orders.

    For h = 2 these generate only a subgroup of the full torsion.
    """
    ah, bh = c.ah, c.bh
    abh = ah * bh
    catalogue = [
        (INFINITY, 1),
        (Point(0, 0), 2),
        (Point(-(bh * bh), 0), 2),
        (Point(-(ah * ah), 0), 2),
        (Point(abh, abh * (ah + bh)), 4),
        (Point(abh, -abh * (ah + bh)), 4),
        (Point(-abh, abh * (ah - bh)), 4),
        (Point(-abh, -abh * (ah - bh)), 4),
    ]
    for P, order in catalogue:
        if not contains(c, P) or classify_order(c, P) != order:
            raise AssertionError(f"torsion catalogue broken at {P!r} on {c}")
    return catalogue


def generated_subgroup(c: Curve, points) -> set:
    """Closure of ``points`` under addition (finite inputs only)."""
    group = {INFINITY}
    frontier = list(points)
    while frontier:
        P = frontier.pop()
        if P in group:
            continue
        group.add(P)
        for Q in list(group):
            S = _add(c, P, Q)
            if S not in group:
                frontier.append(S)
        if len(group) > 4 * TORSION_CAP * TORSION_CAP:
            raise PythaError("subgroup is not finite")
    return group


def to_reciprocal(c: Curve, P: Point) -> tuple[Fraction, Fraction]:
    """Map (x, y) to (a^h b^h / x, y / x) on y^2 x = a^h b^h + A x + a^h b^h x^2."""
    _require(c, P)
    if P is INFINITY:
        raise PythaError("point at infinity")
    if P.x == 0:
        raise PythaError("zero x-coordinate")
    return c.ah * c.bh / P.x, P.y / P.x


def on_reciprocal(c: Curve, x: Fraction, y: Fraction) -> bool:
    abh = c.ah * c.bh
    return y * y * x == abh + c.A * x + abh * x * x


def check_square_conditions(c: Curve, p: int, q: int) -> tuple[bool, bool]:
    """Whether a^h (a^h q + b^h p) and b^h (a^h p + b^h q) are perfect squares."""
    if q == 0:
        raise PythaError("q must be nonzero")
    ah, bh = c.ah, c.bh
    return is_perfect_square(ah * (ah * q + bh * p)), is_perfect_square(bh * (ah * p + bh * q))


def doubling_pq(c: Curve, x1: Fraction) -> tuple[Fraction, Fraction]:
    """(p, q) with a^h b^h / x([2]P) = p / q for x(P) = x1."""
    x1 = Fraction(x1)
    q = (x1 * x1 - c.B) ** 2
    p = c.ah * c.bh * 4 * c.rhs(x1)
    return p, q


def square_condition_roots(c: Curve, x1: Fraction) -> tuple[Fraction, Fraction]:
    """Square roots of the two products in ``check_square_conditions`` at (p, q) = doubling_pq.

    a^h (a^h q + b^h p) = (a^h (x1^2 + 2 b^2h x1 + B))^2 and
    b^h (a^h p + b^h q) = (b^h (x1^2 + 2 a^2h x1 + B))^2 identically in x1.
    """
    x1 = Fraction(x1)
    ah, bh = c.ah, c.bh
    return ah * (x1 * x1 + 2 * bh * bh * x1 + c.B), bh * (x1 * x1 + 2 * ah * ah * x1 + c.B)
