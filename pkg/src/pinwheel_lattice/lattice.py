"""Intersection lattices of rational 4-manifolds.

A :class:`Chart` is a named basis of second homology together with its
integer Gram matrix and the first Chern class written in that basis.
Homology classes, mod-n classes and period vectors always refer to a chart,
and operations refuse to mix charts.

All arithmetic is exact: coefficients are ints, periods are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ChartMismatch, InvalidChart, ParseError, PinwheelError, UnsupportedChart
from .intlinalg import determinant, hermite_rows, integer_kernel, solve_rational

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or an integer string; floats are rejected on purpose."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not an exact rational: {text!r} (use p/q or an integer)")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True, repr=False)
class Chart:
    name: str
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    c1_class: tuple[int, ...]

    def __post_init__(self):
        n = len(self.basis_labels)
        if n == 0:
            raise InvalidChart("chart rank must be positive")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise InvalidChart(f"{self.name}: gram must be {n}x{n}")
        if len(self.c1_class) != n:
            raise InvalidChart(f"{self.name}: c1_class must have length {n}")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InvalidChart(f"{self.name}: gram is not symmetric")
        if abs(determinant(self.gram)) != 1:
            raise InvalidChart(f"{self.name}: gram is not unimodular")
        if len(set(self.basis_labels)) != n:
            raise InvalidChart(f"{self.name}: duplicate basis labels")

    def __repr__(self) -> str:
        return f"Chart({self.name!r})"

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @cached_property
    def is_diagonal(self) -> bool:
        return all(self.gram[i][j] == 0 for i in range(self.rank) for j in range(self.rank) if i != j)

    def form(self, x: Sequence[int], y: Sequence[int]):
        """Raw bilinear form on coefficient vectors (ints or Fractions)."""
        g = self.gram
        if self.is_diagonal:
            return sum(g[i][i] * x[i] * y[i] for i in range(len(x)))
        return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if g[i][j])

    def basis(self) -> list["HomologyClass"]:
        return [self.unit(i) for i in range(self.rank)]

    def unit(self, i: int) -> "HomologyClass":
        return HomologyClass(self, tuple(1 if j == i else 0 for j in range(self.rank)))

    def cls(self, coeffs: Iterable[int]) -> "HomologyClass":
        return HomologyClass(self, tuple(int(c) for c in coeffs))

    def parse(self, text: str) -> "HomologyClass":
        return parse_class(self, text)

    def c1(self) -> "HomologyClass":
        return HomologyClass(self, self.c1_class)

    def std_k(self) -> int | None:
        """``k`` for the standard chart of the k-fold blow-up, else None."""
        m = re.fullmatch(r"std_X(\d)", self.name)
        return int(m.group(1)) if m else None


def _std_chart(k: int) -> Chart:
    n = k + 1
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n))
    return Chart(
        name=f"std_X{k}",
        basis_labels=("H",) + tuple(f"E{i}" for i in range(1, k + 1)),
        gram=gram,
        c1_class=(3,) + (-1,) * k,
    )


S2XS2 = Chart("S2xS2", ("A", "B"), ((0, 1), (1, 0)), (2, 2))

# Hirzebruch-type basis of X5: the (-4)-curve, a fibre, four exceptional curves.
X5_SPECIAL = Chart(
    "X5_special",
    ("Zinf", "F", "E0", "E1", "E2", "E3"),
    (
        (-4, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0),
        (0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, -1),
    ),
    (2, 6, -1, -1, -1, -1),
)

_REGISTRY: dict[str, Chart] = {f"std_X{k}": _std_chart(k) for k in range(9)}
_REGISTRY[S2XS2.name] = S2XS2
_REGISTRY[X5_SPECIAL.name] = X5_SPECIAL

_ALIASES = {"CP2": "std_X0", "S2xS2": "S2xS2", "X5_special": "X5_special"}


def register_chart(chart: Chart) -> Chart:
    """Add a user chart; names of built-in charts cannot be replaced."""
    existing = _REGISTRY.get(chart.name)
    if existing is not None and existing != chart:
        raise InvalidChart(f"chart {chart.name!r} already registered with different data")
    _REGISTRY[chart.name] = chart
    return chart


def get_chart(name: str) -> Chart:
    """Look up a chart by registry name or the short forms ``X3``, ``CP2``."""
    key = _ALIASES.get(name, name)
    m = re.fullmatch(r"X(\d+)", key)
    if m:
        key = f"std_X{m.group(1)}"
    try:
        return _REGISTRY[key]
    except KeyError:
        raise UnsupportedChart(f"unknown chart {name!r}") from None


def std_chart(k: int) -> Chart:
    if not 0 <= k <= 8:
        raise UnsupportedChart(f"std_X{k} is not supported (need 0 <= k <= 8)")
    return _REGISTRY[f"std_X{k}"]


def _check_same(a: "HomologyClass | ModClass | PeriodVector", b) -> Chart:
    if a.chart != b.chart:
        raise ChartMismatch(f"classes live on different charts: {a.chart.name} vs {b.chart.name}")
    return a.chart


@dataclass(frozen=True)
class HomologyClass:
    chart: Chart
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.chart.rank:
            raise PinwheelError(f"expected {self.chart.rank} coefficients for {self.chart.name}, got {len(self.coeffs)}")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        _check_same(self, other)
        return HomologyClass(self.chart, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        _check_same(self, other)
        return HomologyClass(self.chart, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.chart, tuple(-x for x in self.coeffs))

    def __mul__(self, n: int) -> "HomologyClass":
        return HomologyClass(self.chart, tuple(n * x for x in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_coeffs(self.chart, self.coeffs)

    @property
    def square(self) -> int:
        return self.chart.form(self.coeffs, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class ModClass:
    chart: Chart
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise PinwheelError("modulus must be at least 2")
        if len(self.coeffs) != self.chart.rank:
            raise PinwheelError(f"expected {self.chart.rank} coefficients for {self.chart.name}")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(c % self.modulus for c in self.coeffs))

    def lift(self) -> HomologyClass:
        """The lift with coefficients in ``[0, n)``."""
        return HomologyClass(self.chart, self.coeffs)

    def __str__(self) -> str:
        return format_coeffs(self.chart, self.coeffs)


@dataclass(frozen=True)
class PeriodVector:
    """Areas of the chart's basis classes under a candidate cohomology class."""

    chart: Chart
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.chart.rank:
            raise PinwheelError(f"expected {self.chart.rank} periods for {self.chart.name}, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def area(self, a: HomologyClass) -> Fraction:
        _check_same(self, a)
        return sum((v * c for v, c in zip(self.values, a.coeffs)), Fraction(0))

    def __str__(self) -> str:
        return f"{self.chart.name}(" + ", ".join(map(format_rational, self.values)) + ")"


def periods(chart: Chart | str, values: Iterable) -> PeriodVector:
    if isinstance(chart, str):
        chart = get_chart(chart)
    return PeriodVector(chart, tuple(parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values))


def x5_periods(alpha, beta, mu_tilde: Sequence) -> PeriodVector:
    """Period vector on ``X5_special`` from the ``(alpha, beta, mu~)`` form.

    Here ``PD = alpha*F + beta*Zinf - sum(mu~_i E_i)``, so the area of
    ``Zinf`` is ``alpha - 4 beta`` and the area of ``F`` is ``beta``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if len(mu_tilde) != 4:
        raise PinwheelError("X5_special needs four exceptional periods")
    return PeriodVector(X5_SPECIAL, (alpha - 4 * beta, beta) + tuple(Fraction(m) for m in mu_tilde))


# Images of the X5_special basis in std_X5.  The choice is not canonical; any
# isometry matching gram and c1 would do.
_X5_SPECIAL_IN_STD = (
    (-1, 2, 0, 0, 0, -1),  # Zinf
    (1, -1, 0, 0, 0, 0),   # F
    (0, 0, 1, 0, 0, 0),    # E0
    (0, 0, 0, 1, 0, 0),    # E1
    (0, 0, 0, 0, 1, 0),    # E2
    (1, -1, 0, 0, 0, -1),  # E3
)


def x5_special_to_std(a: HomologyClass) -> HomologyClass:
    """Lattice isometry X5_special -> std_X5 carrying c1 to c1."""
    if a.chart != X5_SPECIAL:
        raise ChartMismatch("expected a class on X5_special")
    out = [0] * 6
    for c, img in zip(a.coeffs, _X5_SPECIAL_IN_STD):
        for i, x in enumerate(img):
            out[i] += c * x
    return HomologyClass(std_chart(5), tuple(out))


def std_to_x5_special(a: HomologyClass) -> HomologyClass:
    """Inverse of :func:`x5_special_to_std`."""
    if a.chart != std_chart(5):
        raise ChartMismatch("expected a class on std_X5")
    cols = [[_X5_SPECIAL_IN_STD[j][i] for j in range(6)] for i in range(6)]
    y = solve_rational(cols, [Fraction(c) for c in a.coeffs])
    if any(v.denominator != 1 for v in y):
        raise ValueError("isometry matrix is not unimodular")  # cannot happen
    return HomologyClass(X5_SPECIAL, tuple(int(v) for v in y))


def x5_parameters(p: PeriodVector) -> tuple[Fraction, Fraction, tuple[Fraction, ...]]:
    """Inverse of :func:`x5_periods`."""
    if p.chart != X5_SPECIAL:
        raise ChartMismatch("expected a period vector on X5_special")
    z, f = p.values[0], p.values[1]
    return z + 4 * f, f, tuple(p.values[2:])


# --------------------------------------------------------------------------- #
# Formatting and parsing of classes

def format_coeffs(chart: Chart, coeffs: Sequence[int]) -> str:
    parts = []
    for label, c in zip(chart.basis_labels, coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{label}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z][A-Za-z0-9_]*)")


def parse_class(chart: Chart, text: str) -> HomologyClass:
    """Parse expressions such as ``"2H-E1-E2-E3"`` or ``"-Zinf+4F"``."""
    s = text.replace(" ", "").replace("−", "-")
    if s == "0":
        return HomologyClass(chart, (0,) * chart.rank)
    index = {lab: i for i, lab in enumerate(chart.basis_labels)}
    coeffs = [0] * chart.rank
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ParseError(f"cannot parse class {text!r} on {chart.name}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        label = m.group(3)
        if label not in index:
            raise ParseError(f"unknown basis label {label!r} for {chart.name}")
        coeffs[index[label]] += sign * mag
        pos = m.end()
    return HomologyClass(chart, tuple(coeffs))


# --------------------------------------------------------------------------- #
# Operations

def pair(a: HomologyClass, b: HomologyClass) -> int:
    chart = _check_same(a, b)
    return chart.form(a.coeffs, b.coeffs)


def c1_of(a: HomologyClass) -> int:
    return a.chart.form(a.chart.c1_class, a.coeffs)


def poincare_dual(p: PeriodVector) -> tuple[Fraction, ...]:
    """Rational class whose pairing with each basis element is its period."""
    return solve_rational(p.chart.gram, p.values)


def volume(p: PeriodVector) -> Fraction:
    g = p.chart.gram
    if p.chart.is_diagonal:
        # diagonal unimodular: the gram matrix is its own inverse
        den = math.lcm(*(v.denominator for v in p.values))
        ints = [v.numerator * (den // v.denominator) for v in p.values]
        return Fraction(sum(g[i][i] * x * x for i, x in enumerate(ints)), den * den)
    pd = poincare_dual(p)
    return Fraction(p.chart.form(pd, pd))


def reduce_mod(a: HomologyClass, n: int) -> ModClass:
    return ModClass(a.chart, n, tuple(c % n for c in a.coeffs))


def pair_mod(a: HomologyClass | ModClass, b: HomologyClass | ModClass, n: int) -> int:
    if n < 2:
        raise PinwheelError("modulus must be at least 2")
    _check_same(a, b)
    return a.chart.form(a.coeffs, b.coeffs) % n


def satisfies_sphere_adjunction(a: HomologyClass) -> bool:
    """Embedded-sphere adjunction: ``c1(a) == 2 + a.a``."""
    return c1_of(a) == 2 + a.square


def perp_sublattice_mod(classes: Sequence[HomologyClass], n: int, chart: Chart | None = None) -> list[HomologyClass]:
    """Basis of ``{x : x.c = 0 mod n for every c in classes}``.

    The lattice is the projection of the integer kernel of ``[M | n I]``,
    where the rows of ``M`` are the pairing functionals of ``classes``.  The
    basis is returned in row Hermite normal form, so equal lattices give
    identical output.
    """
    if n < 2:
        raise PinwheelError("modulus must be at least 2")
    if not classes:
        if chart is None:
            raise PinwheelError("chart required when no classes are given")
        return chart.basis()
    chart = classes[0].chart
    for c in classes[1:]:
        _check_same(classes[0], c)
    r, m = chart.rank, len(classes)
    rows = []
    for j, c in enumerate(classes):
        functional = [sum(c.coeffs[i] * chart.gram[i][t] for i in range(r)) for t in range(r)]
        rows.append(functional + [n if t == j else 0 for t in range(m)])
    kernel = integer_kernel(rows, r + m)
    basis = hermite_rows([v[:r] for v in kernel], r)
    return [HomologyClass(chart, v) for v in basis]


def same_lattice(xs: Sequence[HomologyClass], ys: Sequence[HomologyClass]) -> bool:
    """Whether two lists of classes span the same sublattice."""
    if not xs or not ys:
        return not [x for x in xs if not x.is_zero()] and not [y for y in ys if not y.is_zero()]
    _check_same(xs[0], ys[0])
    r = xs[0].chart.rank
    return hermite_rows([x.coeffs for x in xs], r) == hermite_rows([y.coeffs for y in ys], r)
