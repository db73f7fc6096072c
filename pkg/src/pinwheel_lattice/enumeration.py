"""Exhaustive enumeration of classes on the standard charts of ``X_k``.

A class ``dH + sum x_i E_i`` has square ``d^2 - sum x_i^2`` and
``c1 = 3d + sum x_i``.  Fixing both gives ``sum x_i = c1 - 3d`` and
``sum x_i^2 = d^2 - square``; Cauchy-Schwarz then forces

    (9 - k) d^2 - 6 c1 d + c1^2 + k square <= 0,

which bounds ``d`` whenever ``k <= 8``.  For each admissible ``d`` the
E-coefficients are generated as non-increasing sequences with pruning and
then expanded into distinct permutations, so every search terminates and
is complete.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .errors import UnsupportedChart
from .lattice import HomologyClass, ModClass, pair_mod, std_chart
from .reflections import _reflect_mod, canonicalize, simple_axes

Vec = tuple[int, ...]


@dataclass(frozen=True)
class EnumQuery:
    k: int
    square: int
    c1: int

    def __post_init__(self):
        if not 0 <= self.k <= 8:
            raise UnsupportedChart(f"enumeration needs 0 <= k <= 8, got k={self.k}")


@dataclass(frozen=True)
class ClassFamily:
    """Shape label plus the E-indices grouped by coefficient, largest first."""

    label: str
    params: tuple[tuple[int, ...], ...]


def degree_range(k: int, square: int, c1: int) -> range:
    """All ``d`` allowed by the Cauchy-Schwarz constraint (possibly empty)."""
    if not 0 <= k <= 8:
        raise UnsupportedChart(f"enumeration needs 0 <= k <= 8, got k={k}")

    def ok(d: int) -> bool:
        if d * d < square:
            return False
        return (c1 - 3 * d) ** 2 <= k * (d * d - square)

    a = 9 - k
    disc = 36 * c1 * c1 - 4 * a * (c1 * c1 + k * square)
    if disc < 0:
        return range(0)
    root = math.isqrt(disc) + 1
    lo = (6 * c1 - root) // (2 * a) - 1
    hi = (6 * c1 + root) // (2 * a) + 1
    ds = [d for d in range(lo, hi + 1) if ok(d)]
    if not ds:
        return range(0)
    return range(ds[0], ds[-1] + 1)


def _sorted_solutions(r: int, total: int, norm: int, upper: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing length-r integer sequences with given sum and sum of squares."""
    if r == 0:
        if total == 0 and norm == 0:
            yield ()
        return
    if norm < 0 or total * total > r * norm:
        return
    bound = math.isqrt(norm)
    lo = max(-bound, -((-total) // r))  # largest entry is at least the mean
    hi = min(upper, bound)
    for x in range(hi, lo - 1, -1):
        for rest in _sorted_solutions(r - 1, total - x, norm - x * x, x):
            yield (x,) + rest


def _distinct_permutations(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def _solutions_for_degree(args: tuple[int, int, int, int]) -> list[Vec]:
    k, square, c1, d = args
    total, norm = c1 - 3 * d, d * d - square
    found: list[Vec] = []
    for seq in _sorted_solutions(k, total, norm, math.isqrt(max(norm, 0))):
        for perm in _distinct_permutations(seq):
            found.append((d,) + perm)
    return found


@lru_cache(maxsize=256)
def _enumerate_raw(k: int, square: int, c1: int) -> tuple[Vec, ...]:
    out: list[Vec] = []
    for d in degree_range(k, square, c1):
        out.extend(_solutions_for_degree((k, square, c1, d)))
    return tuple(sorted(out))


def enumerate_by_invariants(q: EnumQuery | tuple[int, int, int], workers: int = 1) -> list[HomologyClass]:
    """Every class on ``std_Xk`` with the given square and c1, sorted by coefficients."""
    if not isinstance(q, EnumQuery):
        q = EnumQuery(*q)
    chart = std_chart(q.k)
    if workers > 1:
        tasks = [(q.k, q.square, q.c1, d) for d in degree_range(q.k, q.square, q.c1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            vecs = sorted(v for part in pool.map(_solutions_for_degree, tasks) for v in part)
    else:
        vecs = _enumerate_raw(q.k, q.square, q.c1)
    return [HomologyClass(chart, v) for v in vecs]


# --------------------------------------------------------------------------- #
# Exceptional classes

# (degree, sorted E-multiplicities) -> label; multiplicities are -x_i.
_EXCEPTIONAL_SHAPES = {
    (0, (-1,)): "E",
    (1, (1, 1)): "H-E-E",
    (2, (1, 1, 1, 1, 1)): "2H-5E",
    (3, (2, 1, 1, 1, 1, 1, 1)): "3H-2E-6E",
    (4, (2, 2, 2, 1, 1, 1, 1, 1)): "4H-3(2E)-5E",
    (5, (2, 2, 2, 2, 2, 2, 1, 1)): "5H-6(2E)-2E",
    (6, (3, 2, 2, 2, 2, 2, 2, 2)): "6H-3E-7(2E)",
}


def _group_indices(coeffs: Vec) -> tuple[tuple[int, ...], ...]:
    """E-indices (1-based) grouped by multiplicity, largest |multiplicity| first."""
    mults = sorted({abs(x) for x in coeffs[1:] if x}, reverse=True)
    return tuple(tuple(i for i, x in enumerate(coeffs[1:], start=1) if abs(x) == m) for m in mults)


def classify_exceptional(a: HomologyClass) -> ClassFamily:
    d = a.coeffs[0]
    mults = tuple(sorted((-x for x in a.coeffs[1:] if x), reverse=True))
    label = _EXCEPTIONAL_SHAPES.get((d, mults))
    if label is None:
        raise ValueError(f"{a} does not match an exceptional shape")
    return ClassFamily(label, _group_indices(a.coeffs))


def enumerate_exceptional(k: int) -> list[tuple[HomologyClass, ClassFamily]]:
    classes = enumerate_by_invariants(EnumQuery(k, -1, 1))
    return [(c, classify_exceptional(c)) for c in classes]


@lru_cache(maxsize=None)
def exceptional_vectors(k: int) -> tuple[Vec, ...]:
    return _enumerate_raw(k, -1, 1)


def enumerate_negative_sphere_reps(k: int, n: int) -> list[HomologyClass]:
    """Orbit representatives of classes with square ``-n`` and ``c1 = 2 - n``.

    Representatives are the canonical (chamber) orbit elements, sorted.
    """
    if not 1 <= k <= 8:
        raise UnsupportedChart(f"sphere enumeration needs 1 <= k <= 8, got k={k}")
    if n < 1:
        raise ValueError("n must be positive")
    reps = {canonicalize(c)[0] for c in enumerate_by_invariants(EnumQuery(k, -n, 2 - n))}
    return sorted(reps, key=lambda c: c.coeffs)


# --------------------------------------------------------------------------- #
# Z/2 classes carrying projective planes

_AUDIN_SHAPES = {(1, 0): "RP2_H", (0, 3): "RP2_3E", (1, 4): "RP2_H4E", (0, 7): "RP2_7E", (1, 8): "RP2_H8E"}


def lift_square_mod4(a: ModClass) -> int:
    """Square of any integral lift mod 4; independent of the lift for n=2."""
    if a.modulus != 2:
        raise ValueError("square mod 4 is defined on mod-2 classes")
    return a.chart.form(a.coeffs, a.coeffs) % 4


def classify_audin(a: ModClass) -> ClassFamily:
    d, count = a.coeffs[0], sum(a.coeffs[1:])
    label = _AUDIN_SHAPES.get((d, count))
    if label is None:
        raise ValueError(f"{a} is not an admissible mod-2 class")
    idx = tuple(i for i, x in enumerate(a.coeffs[1:], start=1) if x)
    return ClassFamily(label, (idx,) if idx else ())


def audin_admissible(k: int) -> list[tuple[ModClass, ClassFamily]]:
    """All mod-2 classes whose integral lifts have square 1 mod 4."""
    chart = std_chart(k)
    out = []
    for d in (1, 0):
        for count in range(k, -1, -1):
            for idx in combinations(range(1, k + 1), count):
                v = [d] + [0] * k
                for i in idx:
                    v[i] = 1
                m = ModClass(chart, 2, tuple(v))
                if lift_square_mod4(m) == 1:
                    out.append((m, classify_audin(m)))
    return out


def _pair_orbit(x: Vec, y: Vec, k: int) -> set[tuple[Vec, Vec]]:
    axes = simple_axes(k)
    start = (x, y)
    seen = {start}
    queue = [start]
    while queue:
        a, b = queue.pop()
        for s in axes:
            img = (_reflect_mod(a, s, 2), _reflect_mod(b, s, 2))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


def _pair_representative(orbit: set[tuple[Vec, Vec]], k: int) -> tuple[Vec, Vec]:
    # Prefer a pair containing H; among those take the lex-largest partner
    # (so E1+E2+E3 rather than E_{k-2}+E_{k-1}+E_k).  Unordered pairs.
    h = (1,) + (0,) * k
    partners = [b for a, b in orbit if a == h] + [a for a, b in orbit if b == h]
    if partners:
        return h, max(partners)
    return min(tuple(sorted(p)) for p in orbit)


def disjoint_rp2_class_pairs(k: int) -> list[tuple[ModClass, ModClass]]:
    """Orbit representatives of admissible pairs that pair to zero mod 2."""
    if not 3 <= k <= 8:
        raise UnsupportedChart(f"pair enumeration needs 3 <= k <= 8, got k={k}")
    chart = std_chart(k)
    admissible = [m for m, _ in audin_admissible(k)]
    done: set[tuple[Vec, Vec]] = set()
    reps: list[tuple[Vec, Vec]] = []
    for a, b in combinations(admissible, 2):
        if pair_mod(a, b, 2) != 0:
            continue
        key = (a.coeffs, b.coeffs)
        if key in done:
            continue
        orb = _pair_orbit(a.coeffs, b.coeffs, k)
        done.update(orb)
        done.update((q, p) for p, q in orb)
        reps.append(_pair_representative(orb, k))
    reps.sort()
    return [(ModClass(chart, 2, a), ModClass(chart, 2, b)) for a, b in reps]


def exceptional_pairings_nonnegative(k: int) -> bool:
    """Every exceptional class pairs non-negatively with every other one."""
    vecs = exceptional_vectors(k)
    chart = std_chart(k)
    for x, y in product(vecs, repeat=2):
        if x != y and chart.form(x, y) < 0:
            return False
    return True

