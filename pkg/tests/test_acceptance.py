"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from pinwheel_lattice.cli import main
from pinwheel_lattice.enumeration import (
    EnumQuery,
    audin_admissible,
    disjoint_rp2_class_pairs,
    enumerate_by_invariants,
    enumerate_negative_sphere_reps,
)
from pinwheel_lattice.lattice import PeriodVector, pair, satisfies_sphere_adjunction, std_chart
from pinwheel_lattice.oracles import (
    boxed_enumeration,
    random_feasible_two_rp2_point,
    random_rational,
    random_transport_input,
    random_two_rp2_point,
    random_x3_periods,
    x3_cone_explicit,
)
from pinwheel_lattice.cones import symplectic_cone_contains
from pinwheel_lattice.pinwheels import (
    l31_exists,
    l31_witness,
    rp2_complement_map,
    rp2_disjoinable,
    rp2_exists_H,
    rp2_exists_sum,
    transport_rp2_blowup,
    two_rp2_witness,
    witness_blowdown,
    witness_kahler_verdict,
)
from pinwheel_lattice.reflections import canonicalize

SEED = 20240601
RESULTS: dict[int, str] = {}
X3 = std_chart(3)


def _report(n: int, ok: bool, detail: str, elapsed: float, limit: float) -> None:
    in_time = elapsed < limit
    line = f"criterion {n:2d}: {'PASS' if ok and in_time else 'FAIL'}  {detail}  ({elapsed:.3f}s, limit {limit}s)"
    RESULTS[n] = line
    print(line)
    assert ok, line
    assert in_time, line


def test_criterion_01_monotone_x3():
    for _ in range(3):  # warm caches so the timing measures the predicates
        t = time.perf_counter()
        got = (rp2_exists_sum(3, (1, 1, 1)), rp2_exists_H(3, (1, 1, 1)), rp2_disjoinable(3, (1, 1, 1)))
        elapsed = time.perf_counter() - t
    _report(1, got == (True, True, False), f"(exists_sum, exists_H, disjoinable) = {got}", elapsed, 1e-3)


def test_criterion_02_disjoinable_vs_witness():
    rng = random.Random(SEED)
    t = time.perf_counter()
    agree = 0
    feasible = 0
    for _ in range(10_000):
        h, mu = random_two_rp2_point(rng)
        d = rp2_disjoinable(h, mu)
        agree += d == two_rp2_witness(h, mu).feasible
        feasible += d
    elapsed = time.perf_counter() - t
    _report(2, agree == 10_000, f"{agree}/10000 agree ({feasible} disjoinable)", elapsed, 30)


def test_criterion_03_l31():
    rng = random.Random(SEED + 3)
    t = time.perf_counter()
    bounds = [l31_exists(Fraction(1, 2)), l31_exists(1), l31_exists(2)]
    agree = 0
    for _ in range(1000):
        a, b = (random_rational(rng, Fraction(1, 1000), 4) for _ in range(2))
        agree += l31_exists(a, b) == l31_witness(a, b).feasible
    elapsed = time.perf_counter() - t
    ok = bounds == [False, True, False] and agree == 1000
    _report(3, ok, f"boundaries {bounds}, {agree}/1000 agree", elapsed, 10)


def test_criterion_04_witness_validity():
    rng = random.Random(SEED + 4)
    t = time.perf_counter()
    good = 0
    for _ in range(1000):
        h, mu = random_feasible_two_rp2_point(rng)
        w = two_rp2_witness(h, mu).witness
        good += witness_kahler_verdict(w).inside and witness_blowdown(w) == (h, mu)
    elapsed = time.perf_counter() - t
    _report(4, good == 1000, f"{good}/1000 witnesses strictly Kähler and blow down exactly", elapsed, 30)


def test_criterion_05_enumeration_oracle():
    t = time.perf_counter()
    bad = []
    for k in range(6):
        for sq, c1 in ((-1, 1), (-2, 0), (-4, -2), (-5, -3)):
            got = {c.coeffs for c in enumerate_by_invariants(EnumQuery(k, sq, c1))}
            if got != boxed_enumeration(k, sq, c1, box=6):
                bad.append((k, sq, c1))
    elapsed = time.perf_counter() - t
    _report(5, not bad, f"24 queries, mismatches: {bad}", elapsed, 120)


def test_criterion_06_sphere_lists():
    t = time.perf_counter()
    r2 = set(enumerate_negative_sphere_reps(3, 2))
    ok2 = r2 == {canonicalize(X3.parse(s))[0] for s in ("E1-E2", "H-E1-E2-E3")}
    r5 = set(enumerate_negative_sphere_reps(3, 5))
    listed = {canonicalize(X3.parse(s))[0] for s in ("-H-2E1+E2+E3", "-2H+3E1")}
    third = r5 - listed
    ok5 = (len(r5) == 3 and listed <= r5 and len(third) == 1
           and all(satisfies_sphere_adjunction(c) for c in r5)
           and third == {canonicalize(X3.parse("-2E1-E2"))[0]})
    elapsed = time.perf_counter() - t
    _report(6, ok2 and ok5, f"(-2): {len(r2)} orbits; (-5): {len(r5)} orbits, third = -2E1-E2 orbit: {ok5}",
            elapsed, 60)


def test_criterion_07_audin_and_pairs():
    t = time.perf_counter()
    thresholds = {"RP2_H": 0, "RP2_3E": 3, "RP2_H4E": 4, "RP2_7E": 7, "RP2_H8E": 8}
    shapes_ok = all(
        {f.label for _, f in audin_admissible(k)} == {lab for lab, k0 in thresholds.items() if k >= k0}
        for k in range(9)
    )
    counts = {k: len(disjoint_rp2_class_pairs(k)) for k in range(3, 9)}
    expected = {3: 1, 4: 1, 5: 1, 6: 1, 7: 2, 8: 2}
    elapsed = time.perf_counter() - t
    _report(7, shapes_ok and counts == expected,
            f"family thresholds ok: {shapes_ok}; pair counts {counts}, expected {expected}", elapsed, 60)


def test_criterion_08_complement_map():
    rng = random.Random(SEED + 8)
    t = time.perf_counter()
    span = [X3.parse(s) for s in ("2E1", "E1-E2", "E2-E3")]
    iso = sum(pair(rp2_complement_map(x), rp2_complement_map(y)) == pair(x, y) for x in span for y in span)
    gens = span + [X3.parse(s) for s in ("2E2", "2E3", "E1-E3")]
    x4 = std_chart(4)
    areas = 0
    for _ in range(100):
        mu, eps = random_transport_input(rng)
        src = PeriodVector(X3, (1,) + mu)
        dst = PeriodVector(x4, (1,) + transport_rp2_blowup(mu, eps))
        areas += all(dst.area(rp2_complement_map(g)) == src.area(g) for g in gens)
    elapsed = time.perf_counter() - t
    _report(8, iso == 9 and areas == 100, f"{iso}/9 pairings preserved, {areas}/100 period checks", elapsed, 1)


def test_criterion_09_x3_cone_equivalence():
    rng = random.Random(SEED + 9)
    t = time.perf_counter()
    agree = inside = 0
    for _ in range(10_000):
        p = PeriodVector(X3, random_x3_periods(rng, -2, 6))
        g = symplectic_cone_contains(p).inside
        agree += g == x3_cone_explicit(p)
        inside += g
    elapsed = time.perf_counter() - t
    _report(9, agree == 10_000, f"{agree}/10000 agree ({inside} inside)", elapsed, 10)


def test_criterion_10_replicate(tmp_path, capsys=None):
    t = time.perf_counter()
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = [main(["replicate", "--seed", "7", "--out", str(a)]), main(["replicate", "--seed", "7", "--out", str(b)])]
    elapsed = time.perf_counter() - t
    same = a.read_bytes() == b.read_bytes()
    summary = json.loads(a.read_text())["summary"]
    ok = codes == [0, 0] and same and summary["failed"] == 0
    _report(10, ok, f"exit codes {codes}, {summary['passed']}/{summary['total']} facts, identical reports: {same}",
            elapsed, 300)


if __name__ == "__main__":
    import sys
    import tempfile
    from pathlib import Path

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if name.endswith("replicate"):
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
