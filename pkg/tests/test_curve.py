from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pythapotent.curve import (
    INFINITY,
    Point,
    add,
    check_square_conditions,
    classify_order,
    contains,
    double,
    doubled_x,
    doubling_pq,
    generated_subgroup,
    make_curve,
    neg,
    on_reciprocal,
    scalar_mul,
    square_condition_roots,
    to_reciprocal,
    torsion_points,
)
from pythapotent.exact import PythaError
from pythapotent.known import GENERATORS


@pytest.mark.parametrize("h, A, B", [(3, 4825, 2985984), (1, 25, 144)])
def test_make_curve(h, A, B):
    c = make_curve(3, 4, h)
    assert (c.A, c.B) == (A, B)
    assert (c.A, c.B) == (3 ** (2 * h) + 4 ** (2 * h), 3 ** (2 * h) * 4 ** (2 * h))


def test_make_curve_not_pythagorean():
    with pytest.raises(PythaError, match="not pythagorean"):
        make_curve(1, 2, 1)


def test_contains(c3):
    assert contains(c3, Point(-3888, 50544))
    assert contains(c3, Point(0, 0))
    assert not contains(c3, Point(1, 1))
    assert contains(c3, INFINITY)


def test_add_neutral_and_two_torsion(c3, gen3):
    assert add(c3, gen3, INFINITY) == gen3
    assert add(c3, Point(0, 0), Point(0, 0)) is INFINITY
    assert add(c3, gen3, neg(gen3)) is INFINITY


def test_add_rejects_off_curve(c3, gen3):
    with pytest.raises(PythaError, match="point not on curve"):
        add(c3, gen3, Point(1, 1))
    with pytest.raises(PythaError, match="point not on curve"):
        scalar_mul(c3, 2, Point(1, 1))


def test_h9_sum_of_generators(c9):
    P, P2 = GENERATORS[9]
    Q = add(c9, P, P2)
    x = double(c9, Q).x
    assert x == Fraction(535606775034572770422692764010359062528, 101246892970078905163938616171330325) ** 2


@pytest.mark.parametrize(
    "h, P, x2",
    [
        (3, Point(-3888, 50544), Fraction(14400)),
        (4, Point(-11616, 1779360), Fraction(831744, 121)),
        (9, GENERATORS[9][1], Fraction(33879841085325312, 2390157690995) ** 2),
    ],
)
def test_double_x(h, P, x2):
    c = make_curve(3, 4, h)
    assert double(c, P).x == x2
    assert scalar_mul(c, 2, P).x == x2
    assert doubled_x(c, P) == x2


def test_double_two_torsion(c3):
    assert double(c3, Point(0, 0)) is INFINITY


def test_scalar_mul_basics(c3, gen3):
    assert scalar_mul(c3, 1, gen3) == gen3
    assert scalar_mul(c3, 0, gen3) is INFINITY
    assert scalar_mul(c3, -3, gen3) == neg(scalar_mul(c3, 3, gen3))
    three = add(c3, add(c3, gen3, gen3), gen3)
    assert scalar_mul(c3, 3, gen3) == three


@pytest.mark.parametrize("h", [1, 3, 4, 5, 6, 7])
def test_order_four_formula_point(h):
    c = make_curve(3, 4, h)
    ab = 3**h * 4**h
    P = Point(ab, ab * (3**h + 4**h))
    assert scalar_mul(c, 4, P) is INFINITY
    assert scalar_mul(c, 2, P) is not INFINITY


def test_torsion_points_h3(c3):
    pts = dict((P, o) for P, o in torsion_points(c3))
    # a^3 = 27, b^3 = 64, a^3 b^3 = 1728
    expected = {
        INFINITY: 1,
        Point(0, 0): 2,
        Point(-4096, 0): 2,
        Point(-729, 0): 2,
        Point(1728, 1728 * 91): 4,
        Point(1728, -1728 * 91): 4,
        Point(-1728, 1728 * 37): 4,
        Point(-1728, -1728 * 37): 4,
    }
    assert pts == expected


@pytest.mark.parametrize("h", [1, 3, 4, 5, 6, 7])
def test_torsion_profile(h):
    c = make_curve(3, 4, h)
    tors = torsion_points(c)
    assert Counter(o for _, o in tors) == Counter({1: 1, 2: 3, 4: 4})
    assert len(generated_subgroup(c, [P for P, _ in tors])) == 8


def test_torsion_h2_is_torsion_subgroup():
    c = make_curve(3, 4, 2)
    pts = [P for P, _ in torsion_points(c)]
    assert all(classify_order(c, P) is not None for P in pts)
    assert len(generated_subgroup(c, pts)) == 8


def test_classify_order(c3, gen3):
    assert classify_order(c3, Point(0, 0)) == 2
    assert classify_order(c3, INFINITY) == 1
    assert classify_order(c3, gen3) is None
    assert 1728 * 91 == 157248
    assert classify_order(c3, Point(1728, 157248)) == 4


def test_classify_order_h2_has_order_eight():
    # h = 2 has Z/2 x Z/8 torsion; some point of order 8 has square x
    c = make_curve(3, 4, 2)
    orders = set()
    for x in range(-70000, 70000):
        y2 = c.rhs(x)
        if y2 >= 0:
            r = int(y2**0.5)
            for y in (r - 1, r, r + 1):
                if y >= 0 and y * y == y2:
                    orders.add(classify_order(c, Point(x, y)))
    assert 8 in orders


def test_to_reciprocal(c3, gen3):
    assert to_reciprocal(c3, gen3) == (Fraction(-4, 9), Fraction(-13))
    x, y = to_reciprocal(c3, gen3)
    assert y * y * x == 1728 + 4825 * x + 1728 * x * x
    with pytest.raises(PythaError, match="zero x-coordinate"):
        to_reciprocal(c3, Point(0, 0))
    D = double(c3, gen3)
    assert to_reciprocal(c3, D) == (Fraction(3, 25), D.y / 14400)


@pytest.mark.parametrize("p, q, expected", [(1728, 14400, (True, True)), (3, 25, (True, True)), (1, 1, (False, False))])
def test_check_square_conditions(c3, p, q, expected):
    assert check_square_conditions(c3, p, q) == expected


def test_square_condition_values(c3):
    assert 27 * (27 * 14400 + 64 * 1728) == 3672**2
    assert 27 * 867 == 153**2 and 64 * 1681 == 328**2


# -- symbolic oracle for the doubling square identities --------------------

X, AL, BE = sympy.symbols("x alpha beta")  # alpha = a^h, beta = b^h
_A = AL**2 + BE**2
_B = AL**2 * BE**2
_Q = (X**2 - _B) ** 2
_P = AL * BE * 4 * (X**3 + _A * X**2 + _B * X)


def test_symbolic_identities_hold():
    first = AL * (AL * _Q + BE * _P) - AL**2 * (X**2 + 2 * BE**2 * X + _B) ** 2
    second = BE * (AL * _P + BE * _Q) - BE**2 * (X**2 + 2 * AL**2 * X + _B) ** 2
    assert sympy.expand(first) == 0
    assert sympy.expand(second) == 0


def test_symbolic_printed_form_is_wrong():
    printed = AL * (AL * _Q + BE * _P) - AL**2 * (X**2 + 2 * BE**2 + _B) ** 2
    assert sympy.expand(printed) != 0


def test_symbolic_doubling_formula():
    # x([2]P) from the tangent slope equals (x^2 - B)^2 / (4 y^2) on the curve
    A, B = sympy.symbols("A B")
    f = X**3 + A * X**2 + B * X
    lam = sympy.diff(f, X) / 2  # divided by y, squared below
    x2 = lam**2 / f - A - 2 * X
    assert sympy.simplify(x2 - (X**2 - B) ** 2 / (4 * f)) == 0


def _sample_points():
    out = []
    for h, gens in GENERATORS.items():
        c = make_curve(3, 4, h)
        tors = [T for T, _ in torsion_points(c)]
        for G in gens:
            for k in (1, 2, 3):
                for T in tors:
                    out.append((c, add(c, scalar_mul(c, k, G), T)))
    return out


SAMPLES = _sample_points()


@pytest.mark.parametrize("idx", range(0, len(SAMPLES), 7))
def test_identities_numeric(idx):
    c, P = SAMPLES[idx]
    if P is INFINITY:
        return
    p, q = doubling_pq(c, P.x)
    r1, r2 = square_condition_roots(c, P.x)
    assert c.ah * (c.ah * q + c.bh * p) == r1 * r1
    assert c.bh * (c.ah * p + c.bh * q) == r2 * r2
    if P.y != 0:
        assert double(c, P).x * (2 * P.y) ** 2 == (P.x**2 - c.B) ** 2
        assert p / q == c.ah * c.bh / double(c, P).x
    if P.x != 0:
        assert on_reciprocal(c, *to_reciprocal(c, P))


def test_integer_doubling_conditions(c3, gen3):
    # x1 integral -> p, q integral and both square conditions hold
    p, q = doubling_pq(c3, gen3.x)
    assert p.denominator == q.denominator == 1
    assert check_square_conditions(c3, int(p), int(q)) == (True, True)


# -- group law properties ---------------------------------------------------

def _group_sample(c, G):
    tors = [T for T, _ in torsion_points(c)]
    return tors + [scalar_mul(c, k, G) for k in (-2, -1, 1, 2, 3)]


@pytest.fixture(scope="module")
def group3(c3, gen3):
    return _group_sample(c3, gen3)


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_group_axioms(data, c3, gen3):
    pts = _group_sample(c3, gen3)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert add(c3, P, Q) == add(c3, Q, P)
    assert add(c3, add(c3, P, Q), R) == add(c3, P, add(c3, Q, R))
    assert add(c3, P, INFINITY) == P
    assert add(c3, P, neg(P)) is INFINITY
    assert double(c3, P) == add(c3, P, P)
    assert contains(c3, add(c3, P, Q))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=-12, max_value=12), st.integers(min_value=-12, max_value=12))
def test_scalar_mul_is_homomorphism(c3, gen3, j, k):
    assert scalar_mul(c3, j + k, gen3) == add(c3, scalar_mul(c3, j, gen3), scalar_mul(c3, k, gen3))
