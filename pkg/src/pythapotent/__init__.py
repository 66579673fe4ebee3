"""Exact search and certification of pythapotent pairs.

A pythagorean pair (a, b) is pythapotent of degree h when some other
pythagorean pair (k, l), not proportional to (a, b), makes (a^h k, b^h l)
pythagorean as well.  Such pairs correspond to rational points of infinite
order on the curve y^2 = x^3 + (a^2h + b^2h) x^2 + a^2h b^2h x.
"""

from .exact import PythaError, is_perfect_square, isqrt, rational_sqrt
from .pythagorean import MnParams, PythagoreanPair, decompose_primitive, make_pair, pair_from_mn
from .curve import (
    INFINITY,
    Curve,
    Infinity,
    Point,
    add,
    check_square_conditions,
    classify_order,
    contains,
    double,
    make_curve,
    neg,
    scalar_mul,
    to_reciprocal,
    torsion_points,
)
from .derivation import (
    PairWitness,
    cubic_pair,
    cubic_point,
    degree1_conditions,
    degree2_conditions,
    derive_pair,
    verify_witness,
    witness_to_x,
)
from .search import SearchBound, Verdict, find_point, multi_witness, pythapotent_verdict, scan

__version__ = "0.1.0"
