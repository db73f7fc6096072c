"""Deliberately naive reference implementations.

These share no search logic with the main modules and are used only to
cross-check them: brute-force boxed enumeration, the explicit X3 cone
inequalities, unguided orbit closure, and a boxed perpendicularity scan.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .intlinalg import solve_rational
from .lattice import HomologyClass, PeriodVector
from .reflections import _reflect_vec, generator_axes

Vec = tuple[int, ...]


def boxed_enumeration(k: int, square: int, c1: int, box: int = 6) -> set[Vec]:
    """All coefficient vectors in ``[-box, box]^(k+1)`` with given square and c1."""
    side = np.arange(-box, box + 1, dtype=np.int64)
    if k:
        grids = np.meshgrid(*([side] * k), indexing="ij")
        rest = np.stack([g.ravel() for g in grids], axis=1)
    else:
        rest = np.zeros((1, 0), dtype=np.int64)
    norms, sums = (rest**2).sum(axis=1), rest.sum(axis=1)
    found: set[Vec] = set()
    for d in range(-box, box + 1):
        hits = rest[(d * d - norms == square) & (3 * d + sums == c1)]
        found.update((d,) + tuple(int(x) for x in row) for row in hits)
    return found


def x3_cone_explicit(p: PeriodVector) -> bool:
    """Positive volume, ``h > 0``, ``mu_i > 0`` and ``h - mu_i - mu_j > 0``."""
    h, *mu = p.values
    if h * h - sum(m * m for m in mu) <= 0 or h <= 0:
        return False
    if any(m <= 0 for m in mu):
        return False
    return all(h - mu[i] - mu[j] > 0 for i, j in combinations(range(3), 2))


def bfs_orbit(a: HomologyClass, limit: int = 200_000) -> set[Vec]:
    """Orbit closure under every ``E_i - E_j`` and ``H - E_i - E_j - E_l`` reflection."""
    k = a.chart.std_k()
    if k is None:
        raise ValueError("orbit oracle needs a standard chart")
    axes = generator_axes(k)
    seen = {a.coeffs}
    todo = [a.coeffs]
    while todo:
        x = todo.pop()
        for s in axes:
            y = _reflect_vec(x, s)
            if y not in seen:
                seen.add(y)
                todo.append(y)
                if len(seen) > limit:
                    raise RuntimeError("orbit exceeds oracle limit")
    return seen


def in_lattice(v: Sequence[int], basis: Sequence[HomologyClass]) -> bool:
    """Whether ``v`` is an integer combination of a full-rank ``basis``."""
    m = [[b.coeffs[i] for b in basis] for i in range(len(v))]
    x = solve_rational(m, [Fraction(t) for t in v])
    return all(c.denominator == 1 for c in x)


def perp_box_check(classes: Sequence[HomologyClass], n: int, basis: Sequence[HomologyClass], box: int = 4) -> bool:
    """Scan ``[-box, box]^r``: a vector is perpendicular mod n iff it lies in ``basis``'s span."""
    chart = classes[0].chart
    for b in basis:
        if any(chart.form(b.coeffs, c.coeffs) % n for c in classes):
            return False
    for v in product(range(-box, box + 1), repeat=chart.rank):
        perp = all(chart.form(v, c.coeffs) % n == 0 for c in classes)
        if perp != in_lattice(v, basis):
            return False
    return True


# --------------------------------------------------------------------------- #
# Random samplers (all exact)

def random_rational(rng: random.Random, lo, hi, max_den: int = 60) -> Fraction:
    """Rational in ``[lo, hi]``; the denominator is drawn up to ``max_den`` and doubled if needed."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    den = rng.randint(1, max_den)
    while math.ceil(lo * den) > math.floor(hi * den):
        den *= 2  # interval narrower than 1/den
    return Fraction(rng.randint(math.ceil(lo * den), math.floor(hi * den)), den)


def random_x3_periods(rng: random.Random, lo=-2, hi=6) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng, lo, hi) for _ in range(4))


def random_two_rp2_point(rng: random.Random) -> tuple[Fraction, tuple[Fraction, Fraction, Fraction]]:
    """Point of the X3 cone carrying both projective planes (rejection sampling)."""
    while True:
        h = random_rational(rng, Fraction(1, 10), 6)
        mu = tuple(random_rational(rng, Fraction(1, 100), h / 2) for _ in range(3))
        if all(m < h / 2 for m in mu) and all(sum(mu) - 2 * m > 0 for m in mu):
            if h * h > sum(m * m for m in mu):
                return h, mu  # type: ignore[return-value]


def random_feasible_two_rp2_point(rng: random.Random) -> tuple[Fraction, tuple[Fraction, Fraction, Fraction]]:
    while True:
        h, mu = random_two_rp2_point(rng)
        if sum(mu) < h:
            return h, mu


def random_transport_input(rng: random.Random) -> tuple[tuple[Fraction, Fraction, Fraction], Fraction]:
    """``mu`` satisfying the strict triangle inequality and an admissible ``eps``."""
    while True:
        mu = tuple(random_rational(rng, Fraction(1, 20), 5) for _ in range(3))
        slack = min(sum(mu) - 2 * m for m in mu)
        if slack > 0:
            eps = slack / 2 * random_rational(rng, Fraction(1, 100), Fraction(99, 100))
            return mu, eps  # type: ignore[return-value]
