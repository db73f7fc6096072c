"""Cone membership with certificates.

Every inequality here is strict; a boundary point is outside.  Verdicts list
*all* violated constraints, each with the offending value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .enumeration import exceptional_vectors
from .errors import UnsupportedChart
from .lattice import S2XS2, X5_SPECIAL, HomologyClass, PeriodVector, format_coeffs, volume


@dataclass(frozen=True)
class Violation:
    constraint: str
    cls: HomologyClass | None  # None for volume and other non-class constraints
    value: Fraction


@dataclass(frozen=True)
class ConeVerdict:
    inside: bool
    violated: tuple[Violation, ...] = field(default=())

    @classmethod
    def from_checks(cls, checks: Sequence[tuple[str, HomologyClass | None, Fraction]]) -> "ConeVerdict":
        bad = tuple(Violation(name, c, v) for name, c, v in checks if not v > 0)
        return cls(not bad, bad)

    def __bool__(self) -> bool:
        return self.inside


def symplectic_cone_contains(p: PeriodVector) -> ConeVerdict:
    """Symplectic cone of ``std_Xk`` (k <= 8) or of ``S2xS2``.

    On ``std_Xk`` a class is inside iff its volume is positive and it is
    positive on every exceptional class.  For k <= 1 the line class is also
    required to be positive; for k >= 2 that already follows from the
    exceptional classes ``E_i`` and ``H - E_i - E_j``.
    """
    chart = p.chart
    if chart == S2XS2:
        a, b = p.values
        return ConeVerdict.from_checks([
            ("area(A) > 0", chart.unit(0), a),
            ("area(B) > 0", chart.unit(1), b),
        ])
    k = chart.std_k()
    if k is None:
        raise UnsupportedChart(f"no symplectic cone implemented for {chart.name}")
    checks: list[tuple[str, HomologyClass | None, Fraction]] = [("volume > 0", None, volume(p))]
    if k <= 1:
        checks.append(("area(H) > 0", chart.unit(0), p.values[0]))
    # Clear denominators once; the exceptional loop is then integer-only.
    den = math.lcm(*(x.denominator for x in p.values))
    ints = [x.numerator * (den // x.denominator) for x in p.values]
    for v in exceptional_vectors(k):
        n = sum(c * x for c, x in zip(v, ints))
        if n <= 0:
            checks.append((f"area({format_coeffs(chart, v)}) > 0", HomologyClass(chart, v), Fraction(n, den)))
    return ConeVerdict.from_checks(checks)


def kahler_cone_x5_special(alpha, beta, mu_tilde: Sequence) -> ConeVerdict:
    """Kähler cone of the X5 special chart in ``(alpha, beta, mu~)`` form.

    ``PD = alpha F + beta Zinf - sum mu~_i E_i``.  Six strict inequalities:
    volume, the four exceptional curves, ``F - E0``, ``Zinf + 4F``, the
    (-4)-curve ``E0 - E1 - E2 - E3`` and ``Zinf``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    mt = [Fraction(m) for m in mu_tilde]
    if len(mt) != 4:
        raise ValueError("need four exceptional periods")
    vol = 2 * alpha * beta - 4 * beta**2 - sum(m * m for m in mt)
    cls = X5_SPECIAL.parse
    checks: list[tuple[str, HomologyClass | None, Fraction]] = [("2*alpha*beta - 4*beta^2 - sum(mu~^2) > 0", None, vol)]
    checks += [(f"mu~{i} > 0", cls(f"E{i}"), m) for i, m in enumerate(mt)]
    checks += [
        ("beta - mu~0 > 0", cls("F-E0"), beta - mt[0]),
        ("alpha > 0", cls("Zinf+4F"), alpha),
        ("mu~0 - mu~1 - mu~2 - mu~3 > 0", cls("E0-E1-E2-E3"), mt[0] - mt[1] - mt[2] - mt[3]),
        ("alpha - 4*beta > 0", cls("Zinf"), alpha - 4 * beta),
    ]
    return ConeVerdict.from_checks(checks)


def is_monotone(p: PeriodVector) -> bool:
    chart = p.chart
    if chart == S2XS2:
        a, b = p.values
        return a == b and a > 0
    k = chart.std_k()
    if k is None:
        raise UnsupportedChart(f"monotonicity is defined here for std_Xk and S2xS2, not {chart.name}")
    h = p.values[0]
    if any(m * 3 != h for m in p.values[1:]):
        return False
    return symplectic_cone_contains(p).inside

