"""Self-contained reproduction of the worked examples and structural checks.

Only the generator coordinates and the published witness values are taken
as fixtures (see ``known``); everything else is recomputed.  Each check
raises ``CheckFailed`` on the first mismatch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import known
from .curve import (
    INFINITY,
    _add,
    _mul,
    contains,
    doubling_pq,
    generated_subgroup,
    make_curve,
    neg,
    on_reciprocal,
    square_condition_roots,
    to_reciprocal,
    torsion_points,
)
from .derivation import cubic_pair, cubic_point, degree1_conditions, degree2_conditions, derive_pair, witness_to_x
from .search import SearchBound, find_point, multi_witness, primitive_mn


class CheckFailed(AssertionError):
    pass


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailed(msg)


CHECKS: dict[str, tuple[str, Callable[[bool], str]]] = {}
CORRUPTIBLE: list[str] = []


def check(name: str, title: str, corruptible: bool = False):
    def register(fn):
        CHECKS[name] = (title, fn)
        if corruptible:
            CORRUPTIBLE.append(name)
        return fn

    return register


def generators(h: int) -> list[tuple[str, object]]:
    c = make_curve(*known.BASE, h)
    gens = known.GENERATORS[h]
    out = [("P", gens[0])]
    if len(gens) > 1:
        out.append(("P'", gens[1]))
        out.append(("Q", _add(c, gens[0], gens[1])))
    return out


def _example(h: int, corrupt: bool) -> str:
    c = make_curve(*known.BASE, h)
    lines = []
    for label, P in generators(h):
        expect(contains(c, P), f"h={h} {label}: generator not on curve")
        root, k, l, outer = known.WITNESSES[(h, label)]
        if corrupt:
            k += 1
        w = derive_pair(c, P)
        expect(Fraction(w.trace.g, w.trace.f) == root, f"h={h} {label}: sqrt x([2]P) = {w.trace.g}/{w.trace.f}")
        expect((w.k, w.l) == (k, l), f"h={h} {label}: got (k,l)=({w.k},{w.l}), expected ({k},{l})")
        expect(w.outer_hyp == outer, f"h={h} {label}: outer hypotenuse {w.outer_hyp} != {outer}")
        expect((c.ah * k) ** 2 + (c.bh * l) ** 2 == outer**2, f"h={h} {label}: outer identity")
        lines.append(f"{label}: (k,l)=({k},{l}) outer={outer}")
    return "; ".join(lines)


for _h in (3, 4, 6, 8, 9):
    check(f"h{_h}", f"degree {_h} example", corruptible=True)(lambda corrupt, h=_h: _example(h, corrupt))


@check("torsion", "torsion catalogue for h in 1,3,4,5,6")
def check_torsion(corrupt: bool) -> str:
    for h in (1, 3, 4, 5, 6):
        c = make_curve(*known.BASE, h)
        tors = torsion_points(c)
        pts = [P for P, _ in tors]
        expect(len(set(pts)) == 8, f"h={h}: {len(set(pts))} distinct points")
        expect(all(contains(c, P) for P in pts), f"h={h}: point off curve")
        expect(Counter(o for _, o in tors) == Counter({1: 1, 2: 3, 4: 4}), f"h={h}: order profile")
        expect(len(generated_subgroup(c, pts)) == 8, f"h={h}: generated subgroup size")
    return "8 points, orders {1,2,2,2,4,4,4,4}, closed subgroup of size 8"


RANK0_BOUND = SearchBound(4, 10**6)


@check("rank0", "bounded search finds nothing for h in 1,2,5")
def check_rank0(corrupt: bool) -> str:
    for h in (1, 2, 5):
        P = find_point(make_curve(*known.BASE, h), RANK0_BOUND)
        expect(P is None, f"h={h}: found non-torsion point {P}")
    return f"UNKNOWN at max_w={RANK0_BOUND.max_w}, max_u={RANK0_BOUND.max_u} (evidence, not proof)"


@check("cubic", "cubic point and pair for all primitive (m,n), m <= 20")
def check_cubic(corrupt: bool) -> str:
    count = 0
    for m, n in primitive_mn(20):
        c = make_curve(m * m - n * n, 2 * m * n, 3)
        P = cubic_point(m, n)
        expect(contains(c, P), f"({m},{n}): cubic point off curve")
        w = cubic_pair(m, n)
        outer = 4 * m * n * (m**4 + n**4) * (m - n) ** 2 * (m + n) ** 2
        expect(w.outer_hyp == outer, f"({m},{n}): outer {w.outer_hyp} != {outer}")
        d = derive_pair(c, P)
        expect((d.k, d.l) == (w.k, w.l), f"({m},{n}): derived ({d.k},{d.l}) vs closed form ({w.k},{w.l})")
        count += 1
    return f"{count} parameter pairs"


def lemma_samples(limit: int = 50) -> list[tuple[object, object]]:
    """(curve, point) samples [2]G and [2]G + T over every known generator G."""
    out = []
    seen = set()
    for h in (3, 4, 6, 8, 9):
        c = make_curve(*known.BASE, h)
        tors = [T for T, _ in torsion_points(c)]
        for _, G in generators(h):
            S = _mul(c, 2, G)
            for T in tors:
                P = _add(c, S, T)
                if P is INFINITY or (h, P) in seen:
                    continue
                seen.add((h, P))
                out.append((c, P))
    return out[:limit]


@check("lemma2", "corrected square identities on 50 sample points")
def check_lemma2(corrupt: bool) -> str:
    samples = lemma_samples()
    expect(len(samples) == 50, f"only {len(samples)} samples")
    typo_failures = 0
    for c, P in samples:
        x1 = P.x
        p, q = doubling_pq(c, x1)
        ah, bh = c.ah, c.bh
        r1, r2 = square_condition_roots(c, x1)
        expect(ah * (ah * q + bh * p) == r1 * r1, f"first identity fails at x={x1}")
        expect(bh * (ah * p + bh * q) == r2 * r2, f"second identity fails at x={x1}")
        if ah * (ah * q + bh * p) != (ah * (x1 * x1 + 2 * bh * bh + c.B)) ** 2:
            typo_failures += 1
        D = _add(c, P, P)
        expect(D.x * (2 * P.y) ** 2 == (x1 * x1 - c.B) ** 2, f"doubling cross-check fails at x={x1}")
    expect(typo_failures > 0, "uncorrected display form never fails")
    return f"{len(samples)} samples; uncorrected form fails on {typo_failures}"


@check("lemma1", "reciprocal transform lands on the reciprocal curve")
def check_lemma1(corrupt: bool) -> str:
    count = 0
    for c, P in lemma_samples(limit=10**6):
        x, y = to_reciprocal(c, P)
        expect(on_reciprocal(c, x, y), f"image of {P} off reciprocal curve")
        count += 1
    for h in (3, 4, 6, 8, 9):
        c = make_curve(*known.BASE, h)
        for P, _ in torsion_points(c):
            if P is not INFINITY and P.x != 0:
                expect(on_reciprocal(c, *to_reciprocal(c, P)), f"torsion image of {P} off curve")
                count += 1
    return f"{count} points"


@check("roundtrip", "witness -> x([2]P) round trip")
def check_roundtrip(corrupt: bool) -> str:
    count = 0
    for h in (3, 4, 6, 8, 9):
        c = make_curve(*known.BASE, h)
        for label, P in generators(h):
            w = derive_pair(c, P)
            expect(witness_to_x(c, w.k, w.l) == _add(c, P, P).x, f"h={h} {label}: round trip")
            count += 1
    return f"{count} generators"


@check("infinitude", "[2]P, [4]P, [6]P witnesses pairwise non-proportional (h=3)")
def check_infinitude(corrupt: bool) -> str:
    c = make_curve(*known.BASE, 3)
    ws = multi_witness(c, known.GENERATORS[3][0], 3)
    expect(len(ws) == 3, f"{len(ws)} distinct witnesses")
    for i in range(3):
        for j in range(i + 1, 3):
            expect(ws[i].k * ws[j].l != ws[i].l * ws[j].k, f"witnesses {i},{j} proportional")
    return ", ".join(f"({w.k},{w.l})" for w in ws)


@check("group", "group axioms on torsion + generator (h=3)")
def check_group(corrupt: bool) -> str:
    c = make_curve(*known.BASE, 3)
    pts = [T for T, _ in torsion_points(c)] + [known.GENERATORS[3][0]]
    for P in pts:
        expect(_add(c, P, INFINITY) == P and _add(c, INFINITY, P) == P, "neutral element")
        expect(_add(c, P, neg(P)) is INFINITY, "inverse")
        expect(_add(c, P, P) == _mul(c, 2, P), "double vs scalar_mul")
    for P, Q in product(pts, repeat=2):
        expect(_add(c, P, Q) == _add(c, Q, P), "commutativity")
    for P, Q, R in product(pts, repeat=3):
        expect(_add(c, _add(c, P, Q), R) == _add(c, P, _add(c, Q, R)), f"associativity at {P},{Q},{R}")
    return f"{len(pts)} points, {len(pts) ** 3} triples"


# (m, n, degree, condition label, value of the quartic/quadratic expression)
CONDITION_CASES = [
    (5, 2, 1, "a", 121),
    (7, 3, 1, "b", 121),
    (4, 1, 2, "iii", 169),
    (5, 3, 2, "ii", 1444),
]
_COND_INDEX = {"a": 0, "b": 1, "i": 0, "ii": 1, "iii": 2, "iv": 3}
_COND_VALUE = {
    "a": lambda m, n: 5 * m * m - n * n,
    "b": lambda m, n: m * m + 3 * m * n + n * n,
    "ii": lambda m, n: m**4 + 4 * m * m * n * n - n**4,
    "iii": lambda m, n: m**4 - 2 * m**3 * n + 2 * m * m * n * n + 2 * m * n**3 + n**4,
}


@check("conditions", "degree 1/2 condition checkers", corruptible=True)
def check_conditions(corrupt: bool) -> str:
    out = []
    for m, n, degree, label, value in CONDITION_CASES:
        if corrupt:
            value += 1
        report = (degree1_conditions if degree == 1 else degree2_conditions)(m, n)
        expect(report.conditions[_COND_INDEX[label]], f"({m},{n}) condition {label} not triggered")
        expect(_COND_VALUE[label](m, n) == value, f"({m},{n}) condition {label} value != {value}")
        for cand in report.candidates:
            expect(contains(report.curve, cand.point), f"({m},{n}) candidate {cand.label} off curve")
        out.append(f"({m},{n}) {label}={value}")
    return ", ".join(out)


def run(only: list[str] | None = None, corrupt: str | None = None) -> list[CheckResult]:
    names = list(CHECKS) if not only else only
    results = []
    for name in names:
        if name not in CHECKS:
            raise KeyError(name)
        title, fn = CHECKS[name]
        try:
            detail = fn(corrupt == name)
            results.append(CheckResult(name, True, f"{title}: {detail}"))
        except Exception as exc:  # report, don't abort the suite
            results.append(CheckResult(name, False, f"{title}: {type(exc).__name__}: {exc}"))
    return results
