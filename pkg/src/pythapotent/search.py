"""Bounded rational point search and pythapotency verdicts.

Rational points on y^2 = x(x + alpha)(x + beta) have x = u/w^2 in lowest
terms, and the point is rational exactly when
N(u, w) = u (u + alpha w^2)(u + beta w^2) is a perfect square.  Candidates
are enumerated in canonical order: increasing w, then increasing |u|, then
u > 0 before u < 0; y is taken positive.

Each chunk of u values is first filtered by quadratic residuosity of N modulo
a handful of small moduli (vectorized with numpy), and the survivors are
settled exactly with an integer square root.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, TextIO

import numpy as np

from .curve import Curve, Point, _add, _mul, classify_order, make_curve
from .derivation import PairWitness, cubic_pair, cubic_point, derive_pair, verify_witness
from .exact import PythaError, format_rational, isqrt
from .pythagorean import oriented_mn

log = logging.getLogger(__name__)

SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
CHUNK = 1 << 16


@dataclass(frozen=True)
class SearchBound:
    max_w: int
    max_u: int

    def __post_init__(self):
        if self.max_w < 1 or self.max_u < 1:
            raise PythaError("search bounds must be positive")


@dataclass(frozen=True)
class Verdict:
    """POTENT with a verified witness and non-torsion generator, or UNKNOWN.

    UNKNOWN only means the bounded search came up empty; it is not a proof
    of rank 0.
    """

    bound: SearchBound
    witness: PairWitness | None = None
    generator: Point | None = None

    @property
    def potent(self) -> bool:
        return self.witness is not None

    @property
    def tag(self) -> str:
        return "POTENT" if self.potent else "UNKNOWN"


@lru_cache(maxsize=None)
def _square_residues(m: int) -> np.ndarray:
    table = np.zeros(m, dtype=bool)
    table[(np.arange(m) ** 2) % m] = True
    return table


def _residue_mask(m: int, aw: int, bw: int, sign: int) -> np.ndarray:
    """mask[r] is True when N may be a square given u = sign * t with t = r (mod m)."""
    r = np.arange(m, dtype=np.int64)
    u = (sign * r) % m
    n = u * ((u + aw) % m) % m * ((u + bw) % m) % m
    return _square_residues(m)[n]


def _sieve_chunk(alpha: int, beta: int, w: int, lo: int, hi: int, sign: int) -> list[tuple[int, int]]:
    """All t in [lo, hi) with gcd(t, w) = 1 and N(sign * t, w) a perfect square.

    Returns (t, isqrt(N)) pairs in increasing t.
    """
    if hi <= lo:
        return []
    w2 = w * w
    offs = np.arange(hi - lo, dtype=np.int64)
    keep = np.ones(hi - lo, dtype=bool)
    for m in SIEVE_MODULI:
        mask = _residue_mask(m, alpha * w2 % m, beta * w2 % m, sign)
        keep &= mask[(offs + lo % m) % m]
    if w > 1:
        keep &= np.gcd(offs + (lo % w), w) == 1
    out = []
    aw, bw = alpha * w2, beta * w2
    for i in np.flatnonzero(keep).tolist():
        t = lo + i
        u = sign * t
        n = u * (u + aw) * (u + bw)
        if n >= 0:
            r = isqrt(n)
            if r * r == n:
                out.append((t, r))
    return out


def _chunk_task(args):
    alpha, beta, w, lo, hi = args
    lo_neg, hi_neg = min(alpha, beta) * w * w, max(alpha, beta) * w * w
    pos = _sieve_chunk(alpha, beta, w, lo, hi, 1)
    # N < 0 for negative u outside [-max, -min] * w^2
    neg = _sieve_chunk(alpha, beta, w, max(lo, lo_neg), min(hi, hi_neg + 1), -1)
    merged = [(t, 1, r) for t, r in pos] + [(t, -1, r) for t, r in neg]
    merged.sort(key=lambda item: (item[0], -item[1]))
    return w, merged


def _tasks(c: Curve, bound: SearchBound) -> Iterator[tuple]:
    alpha, beta = c.ah * c.ah, c.bh * c.bh
    for w in range(1, bound.max_w + 1):
        for lo in range(1, bound.max_u + 1, CHUNK):
            yield alpha, beta, w, lo, min(lo + CHUNK, bound.max_u + 1)


def iter_points(c: Curve, bound: SearchBound, workers: int = 1) -> Iterator[Point]:
    """Every rational point with x = u/w^2 inside ``bound``, in canonical order.

    Torsion points are included.  With ``workers > 1`` chunks are evaluated
    in a process pool; results are consumed in task order, so the output
    sequence does not depend on scheduling.
    """
    yield Point(0, 0)  # u = 0 only occurs with w = 1
    tasks = _tasks(c, bound)
    if workers <= 1:
        results = map(_chunk_task, tasks)
        for w, hits in results:
            yield from _points(w, hits)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for w, hits in pool.map(_chunk_task, tasks, chunksize=1):
            yield from _points(w, hits)


def _points(w: int, hits) -> Iterator[Point]:
    w2, w3 = w * w, w**3
    for t, sign, r in hits:
        yield Point(Fraction(sign * t, w2), Fraction(r, w3))


def find_point(c: Curve, bound: SearchBound, workers: int = 1) -> Point | None:
    """First non-torsion point in canonical order, or None."""
    points = iter_points(c, bound, workers)
    try:
        for P in points:
            if classify_order(c, P) is None:
                return P
    finally:
        points.close()
    return None


def _lift_cubic(c: Curve) -> tuple[Point, PairWitness]:
    m, n, d, swapped = oriented_mn(c.pair)
    P0 = cubic_point(m, n)
    w0 = cubic_pair(m, n)
    # scaling (a, b) by d scales the curve by (x, y) -> (d^2h x, d^3h y)
    P = Point(P0.x * d ** (2 * c.h), P0.y * d ** (3 * c.h))
    k, l = (w0.l, w0.k) if swapped else (w0.k, w0.l)
    inner, outer = verify_witness(c.a, c.b, c.h, k, l)
    return P, PairWitness(k, l, inner, outer, w0.source)


def _witness_from(c: Curve, P: Point, tries: int = 4) -> PairWitness | None:
    for i in range(1, tries + 1):
        try:
            return derive_pair(c, _mul(c, i, P), source=f"[{2 * i}]P")
        except PythaError as exc:
            log.debug("no witness from [%d]P: %s", 2 * i, exc)
    return None


def pythapotent_verdict(a: int, b: int, h: int, bound: SearchBound, workers: int = 1) -> Verdict:
    c = make_curve(a, b, h)
    if h == 3:
        P, witness = _lift_cubic(c)
        if classify_order(c, P) is None:
            return Verdict(bound, witness, P)
    P = find_point(c, bound, workers)
    if P is not None:
        witness = _witness_from(c, P)
        if witness is not None:
            return Verdict(bound, witness, P)
    return Verdict(bound)


def multi_witness(c: Curve, P: Point, count: int) -> list[PairWitness]:
    """Witnesses from [2]P, [4]P, ..., [2 count]P, without repeats.

    Witnesses are reduced, so distinct ones are pairwise non-proportional.
    """
    if count <= 0:
        return []
    if classify_order(c, P) is not None:
        raise PythaError("torsion point")
    out: list[PairWitness] = []
    Q = P
    for i in range(1, count + 1):
        try:
            wit = derive_pair(c, Q, source=f"[{2 * i}]P")
        except PythaError as exc:
            log.debug("skipping [%d]P: %s", 2 * i, exc)
        else:
            if not any(wit.proportional_to(o) for o in out):
                out.append(wit)
        Q = _add(c, Q, P)
    return out


# -- scan --------------------------------------------------------------------

FIELDS = (
    "a", "b", "h", "verdict", "k", "l", "inner_hyp", "outer_hyp",
    "gen_x_num", "gen_x_den", "gen_y_num", "gen_y_den", "max_w", "max_u",
)


@dataclass(frozen=True)
class ScanRecord:
    a: int
    b: int
    h: int
    verdict: Verdict

    def to_line(self) -> str:
        v = self.verdict
        if v.potent:
            w, g = v.witness, v.generator
            mid = [w.k, w.l, w.inner_hyp, w.outer_hyp,
                   g.x.numerator, g.x.denominator, g.y.numerator, g.y.denominator]
        else:
            mid = ["-"] * 8
        row = [self.a, self.b, self.h, v.tag, *mid, v.bound.max_w, v.bound.max_u]
        return "\t".join(str(x) for x in row) + "\n"


def parse_record(line: str) -> dict:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != len(FIELDS):
        raise ValueError(f"expected {len(FIELDS)} fields, got {len(parts)}")
    rec = dict(zip(FIELDS, parts))
    if rec["verdict"] not in ("POTENT", "UNKNOWN"):
        raise ValueError(f"bad verdict {rec['verdict']!r}")
    return {k: (v if k == "verdict" or v == "-" else int(v)) for k, v in rec.items()}


def primitive_mn(m_max: int) -> Iterator[tuple[int, int]]:
    for m in range(2, m_max + 1):
        for n in range(1, m):
            if (m - n) % 2 and gcd(m, n) == 1:
                yield m, n


def scan(
    m_max: int,
    h_list: Iterable[int],
    bound: SearchBound,
    sink: TextIO | None = None,
    workers: int = 1,
) -> Iterator[ScanRecord]:
    """Verdicts for every primitive (m^2 - n^2, 2mn) with m <= m_max, ordered by (m, n, h).

    Lines are written to ``sink`` as they are produced; write errors propagate.
    """
    if m_max < 2:
        raise PythaError("m_max must be at least 2")
    hs = sorted(set(h_list))
    for m, n in primitive_mn(m_max):
        a, b = m * m - n * n, 2 * m * n
        for h in hs:
            rec = ScanRecord(a, b, h, pythapotent_verdict(a, b, h, bound, workers))
            if sink is not None:
                sink.write(rec.to_line())
            yield rec


def describe_point(P: Point) -> str:
    return f"({format_rational(P.x)}, {format_rational(P.y)})"
