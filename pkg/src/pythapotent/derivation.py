"""From curve points to pythagorean witness pairs, and back.

A point P of infinite order gives a square x([2]P) = (g/f)^2.  Putting
t = (b^h f + sqrt(g^2 + b^2h f^2)) / g = r/s, the pair
(k, l) = (r^2 - s^2, 2rs) makes (a^h k, b^h l) pythagorean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .curve import (
    INFINITY,
    Curve,
    CurvePoint,
    Point,
    _add,
    _require,
    classify_order,
    contains,
    make_curve,
)
from .exact import PythaError, is_perfect_square, isqrt, rational_sqrt
from .pythagorean import check_mn, pair_from_mn


@dataclass(frozen=True)
class Trace:
    x2: Fraction
    g: int
    f: int
    r: int
    s: int
    branch: str = "+"


@dataclass(frozen=True)
class PairWitness:
    k: int
    l: int
    inner_hyp: int
    outer_hyp: int
    source: str = ""
    trace: Trace | None = field(default=None, compare=False)

    def proportional_to(self, other: "PairWitness") -> bool:
        return self.k * other.l == self.l * other.k


def verify_witness(a: int, b: int, h: int, k: int, l: int) -> tuple[int, int]:
    """Return (inner_hyp, outer_hyp) if (k, l) certifies degree h for (a, b)."""
    if min(a, b, h, k, l) < 1:
        raise PythaError("nonpositive")
    if k * b == l * a:
        raise PythaError("is multiple")
    inner = k * k + l * l
    if not is_perfect_square(inner):
        raise PythaError("inner not pythagorean")
    outer = (a**h * k) ** 2 + (b**h * l) ** 2
    if not is_perfect_square(outer):
        raise PythaError("outer not square")
    return isqrt(inner), isqrt(outer)


def _witness(c: Curve, k: int, l: int, source: str, trace: Trace | None = None) -> PairWitness:
    d = gcd(k, l)
    k, l = k // d, l // d
    if k * c.b == l * c.a:
        raise PythaError("multiple of (a,b)")
    inner, outer = verify_witness(c.a, c.b, c.h, k, l)
    return PairWitness(k, l, inner, outer, source, trace)


def derive_pair(c: Curve, P: CurvePoint, source: str | None = None) -> PairWitness:
    _require(c, P)
    if P is INFINITY or P.y == 0:
        raise PythaError("degenerate point")
    P2 = _add(c, P, P)
    if P2 is INFINITY or P2.x == 0:
        raise PythaError("degenerate point")
    root = rational_sqrt(P2.x)
    if root is None:
        # x([2]P) = ((x^2 - B) / 2y)^2 always; reaching here means arithmetic is broken.
        raise PythaError("doubled x-coordinate is not a square")
    g, f = root.numerator, root.denominator
    rad = g * g + c.bh * c.bh * f * f
    if not is_perfect_square(rad):
        raise PythaError("radical not integral")
    t = Fraction(c.bh * f + isqrt(rad), g)
    r, s = t.numerator, t.denominator
    trace = Trace(P2.x, g, f, r, s)
    if source is None:
        source = f"[2]({P.x}, {P.y})"
    return _witness(c, abs(r * r - s * s), 2 * r * s, source, trace)


def witness_to_x(c: Curve, k: int, l: int) -> Fraction:
    """x = b^2h l^2 / k^2, the (square) x-coordinate of the point matching (k, l)."""
    if k < 1 or l < 1:
        raise PythaError("nonpositive")
    if k * c.b == l * c.a:
        raise PythaError("multiple of (a,b)")
    x = Fraction(c.bh * c.bh * l * l, k * k)
    if rational_sqrt(c.rhs(x)) is None:
        raise PythaError("not a witness")
    return x


def witness_point(c: Curve, k: int, l: int) -> Point:
    x = witness_to_x(c, k, l)
    return Point(x, rational_sqrt(c.rhs(x)))


def cubic_point(m: int, n: int) -> Point:
    """The non-obvious rational point on the cubic curve of (m^2 - n^2, 2mn)."""
    check_mn(m, n)
    u = 16 * (m * m - n * n) ** 2 * m**4 * n**4
    P = Point(-u, u * (m * m + n * n) * (m**4 - 6 * m * m * n * n + n**4))
    c = make_curve(m * m - n * n, 2 * m * n, 3)
    if not contains(c, P):
        raise AssertionError(f"cubic point off curve for (m,n)=({m},{n})")
    return P


def cubic_pair(m: int, n: int) -> PairWitness:
    check_mn(m, n)
    c = make_curve(m * m - n * n, 2 * m * n, 3)
    k = 4 * m * n * (m * m + n * n)
    l = (m - n) ** 2 * (m + n) ** 2
    return _witness(c, k, l, f"cubic closed form (m,n)=({m},{n})")


@dataclass(frozen=True)
class Candidate:
    """A condition-derived point: present only when its condition holds."""

    label: str
    point: Point
    order: int | None
    witness: PairWitness | None


@dataclass(frozen=True)
class ConditionReport:
    curve: Curve
    conditions: tuple[bool, ...]
    candidates: list[Candidate]


def _candidates(c: Curve, labelled_xs, conditions) -> list[Candidate]:
    out = []
    for (label, x), holds in zip(labelled_xs, conditions):
        if not holds:
            continue
        y = rational_sqrt(c.rhs(Fraction(x)))
        if y is None:
            raise AssertionError(f"condition {label} holds but x={x} is not on {c}")
        P = Point(x, y)
        order = classify_order(c, P)
        witness = None
        if order is None:
            try:
                witness = derive_pair(c, P, source=f"condition {label}, x={x}")
            except PythaError:
                witness = None
        out.append(Candidate(label, P, order, witness))
    return out


def degree1_conditions(m: int, n: int) -> ConditionReport:
    """5m^2 - n^2 = square, m^2 + 3mn + n^2 = square, with candidate points on the h=1 curve."""
    check_mn(m, n)
    pair = pair_from_mn((m, n))
    c = make_curve(pair.a, pair.b, 1)
    conds = (is_perfect_square(5 * m * m - n * n), is_perfect_square(m * m + 3 * m * n + n * n))
    xs = [("a", n * n * (m * m - n * n)), ("b", m * n * (m - n) ** 2)]
    return ConditionReport(c, conds, _candidates(c, xs, conds))


def degree2_conditions(m: int, n: int) -> ConditionReport:
    """The four quartic conditions (i)-(iv) with candidate points on the h=2 curve."""
    check_mn(m, n)
    pair = pair_from_mn((m, n))
    c = make_curve(pair.a, pair.b, 2)
    values = (
        -(m**4) - 4 * m * n**3 + n**4,
        m**4 + 4 * m * m * n * n - n**4,
        m**4 - 2 * m**3 * n + 2 * m * m * n * n + 2 * m * n**3 + n**4,
        m**4 - 2 * m**3 * n - 2 * m * m * n * n - 2 * m * n**3 + n**4,
    )
    conds = tuple(is_perfect_square(v) for v in values)
    xs = [
        ("i", -8 * m * m * n**4 * (m + n) ** 2),
        ("ii", 8 * m**4 * n * n * (m * m - n * n)),
        ("iii", 8 * m**3 * n**3 * (m * m - n * n)),
        ("iv", -8 * m**3 * n**3 * (m + n) ** 2),
    ]
    return ConditionReport(c, conds, _candidates(c, xs, conds))
