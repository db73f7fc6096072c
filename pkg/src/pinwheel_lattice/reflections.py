"""Reflections along (-2)-classes and orbit computations.

A Dehn twist along a (-2)-sphere ``S`` acts on homology by
``x -> x + (x.S) S``.  On the standard chart of ``X_k`` the reflections along
``E_i - E_j`` and ``H - E_i - E_j - E_k`` generate the Weyl group of type
``E_k``, which is finite for ``k <= 8``.

Every orbit meets the closed fundamental chamber ``{x : x.s <= 0 for each
simple axis s}`` in exactly one point.  Descending into it takes a short
word of reflections, so that point is the canonical form: orbits of generic
classes on X8 have up to 696,729,600 elements and cannot be searched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import ChartMismatch, InvalidReflection, UnsupportedChart, UnsupportedModulus
from .lattice import Chart, HomologyClass, ModClass, c1_of, pair

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Reflection:
    axis: HomologyClass

    def __post_init__(self):
        if self.axis.square != -2:
            raise InvalidReflection(f"reflection axis {self.axis} has square {self.axis.square}, need -2")

    def __str__(self) -> str:
        return str(self.axis)


def reflect(a: HomologyClass, s: Reflection | HomologyClass) -> HomologyClass:
    if isinstance(s, HomologyClass):
        s = Reflection(s)
    if a.chart != s.axis.chart:
        raise ChartMismatch(f"cannot reflect a class on {a.chart.name} along an axis on {s.axis.chart.name}")
    t = pair(a, s.axis)
    return HomologyClass(a.chart, tuple(x + t * y for x, y in zip(a.coeffs, s.axis.coeffs)))


@dataclass(frozen=True)
class OrbitCertificate:
    """``word`` applied left to right maps ``source`` onto ``target``."""

    word: tuple[Reflection, ...]
    source: HomologyClass
    target: HomologyClass

    def apply(self, a: HomologyClass) -> HomologyClass:
        for r in self.word:
            a = reflect(a, r)
        return a

    def verify(self) -> bool:
        return self.apply(self.source) == self.target

    def inverse(self) -> "OrbitCertificate":
        return OrbitCertificate(tuple(reversed(self.word)), self.target, self.source)


def _std_k(chart: Chart) -> int:
    k = chart.std_k()
    if k is None:
        raise UnsupportedChart(f"orbit computations need a standard chart std_Xk, got {chart.name}")
    return k


@lru_cache(maxsize=None)
def generator_axes(k: int) -> tuple[Vec, ...]:
    """All ``E_i - E_j`` (i<j) followed by all ``H - E_i - E_j - E_l``."""
    n = k + 1
    axes: list[Vec] = []
    for i in range(1, n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            axes.append(tuple(v))
    for i in range(1, n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                v = [0] * n
                v[0] = 1
                v[i] = v[j] = v[l] = -1
                axes.append(tuple(v))
    return tuple(axes)


@lru_cache(maxsize=None)
def simple_axes(k: int) -> tuple[Vec, ...]:
    """Simple roots ``E_i - E_{i+1}`` and ``H - E_1 - E_2 - E_3``."""
    n = k + 1
    axes: list[Vec] = []
    for i in range(1, n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        axes.append(tuple(v))
    if k >= 3:
        axes.append((1, -1, -1, -1) + (0,) * (k - 3))
    return tuple(axes)


def generators(chart: Chart) -> list[Reflection]:
    k = _std_k(chart)
    refl = [Reflection(HomologyClass(chart, v)) for v in generator_axes(k)]
    # Reflections preserve c1 only along c1-orthogonal axes.
    assert all(c1_of(r.axis) == 0 for r in refl)
    return refl


def _dot(x: Vec, y: Vec) -> int:
    # std chart form diag(1, -1, ..., -1)
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def _reflect_vec(x: Vec, axis: Vec) -> Vec:
    t = _dot(x, axis)
    if t == 0:
        return x
    return tuple(a + t * b for a, b in zip(x, axis))


def _descend(x: Vec, k: int) -> tuple[Vec, list[Vec]]:
    """Move ``x`` into the closed fundamental chamber.

    Reflect along a simple axis whenever ``x.axis > 0``; with the positive
    definite form ``-(.)`` on the orthogonal complement of c1 this is the
    usual dominance descent and terminates because the group is finite.
    """
    word: list[Vec] = []
    axes = simple_axes(k)
    while True:
        for s in axes:
            if _dot(x, s) > 0:
                x = _reflect_vec(x, s)
                word.append(s)
                break
        else:
            return x, word


def chamber_representative(a: HomologyClass) -> tuple[HomologyClass, OrbitCertificate]:
    """The unique orbit element in the closed fundamental chamber."""
    k = _std_k(a.chart)
    d, word = _descend(a.coeffs, k)
    target = HomologyClass(a.chart, d)
    cert = OrbitCertificate(tuple(Reflection(HomologyClass(a.chart, s)) for s in word), a, target)
    return target, cert


def orbit(a: HomologyClass) -> list[HomologyClass]:
    """Full orbit, sorted lexicographically (small orbits only)."""
    k = _std_k(a.chart)
    seen = {a.coeffs}
    queue = deque([a.coeffs])
    axes = simple_axes(k)
    while queue:
        x = queue.popleft()
        for s in axes:
            y = _reflect_vec(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return [HomologyClass(a.chart, v) for v in sorted(seen)]


def canonicalize(a: HomologyClass) -> tuple[HomologyClass, OrbitCertificate]:
    """Canonical orbit element (the chamber representative) and a certificate reaching it."""
    return chamber_representative(a)


def same_orbit(a: HomologyClass, b: HomologyClass) -> tuple[bool, OrbitCertificate | None]:
    if a.chart != b.chart:
        raise ChartMismatch(f"{a.chart.name} vs {b.chart.name}")
    da, ca = chamber_representative(a)
    db, cb = chamber_representative(b)
    if da != db:
        return False, None
    word = ca.word + tuple(reversed(cb.word))
    return True, OrbitCertificate(word, a, b)


# --------------------------------------------------------------------------- #
# mod-n action

def _check_mod(a: ModClass) -> int:
    k = _std_k(a.chart)
    if a.modulus not in (2, 3):
        raise UnsupportedModulus(f"mod-{a.modulus} orbits are not supported (use 2 or 3)")
    return k


def _reflect_mod(x: Vec, axis: Vec, n: int) -> Vec:
    t = _dot(x, axis) % n
    if t == 0:
        return x
    return tuple((a + t * b) % n for a, b in zip(x, axis))


@lru_cache(maxsize=None)
def _mod_orbit_table(k: int, n: int) -> dict[Vec, Vec]:
    """Map every residue vector to the lex-minimum of its orbit."""
    from itertools import product

    axes = simple_axes(k)
    table: dict[Vec, Vec] = {}
    for start in product(range(n), repeat=k + 1):
        if start in table:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for s in axes:
                y = _reflect_mod(x, s, n)
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        m = min(comp)
        for x in comp:
            table[x] = m
    return table


def canonicalize_mod(a: ModClass) -> ModClass:
    k = _check_mod(a)
    return ModClass(a.chart, a.modulus, _mod_orbit_table(k, a.modulus)[a.coeffs])


def mod_orbit(a: ModClass) -> list[ModClass]:
    k = _check_mod(a)
    table = _mod_orbit_table(k, a.modulus)
    m = table[a.coeffs]
    return [ModClass(a.chart, a.modulus, x) for x in sorted(x for x, r in table.items() if r == m)]


def reflect_mod(a: ModClass, axis: HomologyClass) -> ModClass:
    if axis.square != -2:
        raise InvalidReflection(f"reflection axis {axis} has square {axis.square}, need -2")
    if a.chart != axis.chart:
        raise ChartMismatch(f"{a.chart.name} vs {axis.chart.name}")
    n = a.modulus
    t = a.chart.form(a.coeffs, axis.coeffs) % n
    return ModClass(a.chart, n, tuple((x + t * y) % n for x, y in zip(a.coeffs, axis.coeffs)))
