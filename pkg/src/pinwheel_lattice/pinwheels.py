"""Decision procedures for Lagrangian pinwheels and the period transport maps.

Conventions on ``X3``: ``h`` is the area of the line ``H`` and ``mu_i`` the
area of ``E_i``.  The rational blow-up of a projective plane in class
``E1+E2+E3`` produces ``X4`` with a (-4)-sphere ``E~0 - E~1 - E~2 - E~3`` of
area ``4 eps``; in the standard chart of ``X4`` the classes ``E~0..E~3`` are
``E1..E4``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cones import ConeVerdict, kahler_cone_x5_special, symplectic_cone_contains
from .errors import (
    DegenerateInput,
    EpsilonOutOfRange,
    LagrangianAbsent,
    NonPositiveInput,
    NotInSymplecticCone,
    OutsideDomainSpan,
    TriangleViolated,
    UnsupportedInput,
)
from .lattice import (
    X5_SPECIAL,
    Chart,
    HomologyClass,
    PeriodVector,
    std_chart,
    x5_parameters,
    x5_periods,
)

MAX_HALVINGS = 256


@dataclass(frozen=True)
class TransportWitness:
    target_chart: Chart
    periods: PeriodVector
    eps: tuple[Fraction, ...]


@dataclass(frozen=True)
class Obstruction:
    description: str
    values: dict[str, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    witness: TransportWitness | None = None
    obstruction: Obstruction | None = None
    mode: str = "computed"

    def __post_init__(self):
        if self.feasible != (self.witness is not None) or self.feasible == (self.obstruction is not None):
            raise ValueError("a report carries a witness iff feasible and an obstruction iff not")


def _q(x) -> Fraction:
    return Fraction(x)


def _triple(mu: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    if len(mu) != 3:
        raise ValueError("expected three periods")
    return tuple(_q(m) for m in mu)  # type: ignore[return-value]


def _triangle_slacks(mu: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    """``mu_i + mu_j - mu_k`` for k = 1, 2, 3."""
    s = sum(mu)
    return tuple(s - 2 * m for m in mu)  # type: ignore[return-value]


def x3_periods(h, mu: Sequence) -> PeriodVector:
    return PeriodVector(std_chart(3), (_q(h),) + _triple(mu))


def _require_cone(h, mu) -> tuple[Fraction, tuple[Fraction, Fraction, Fraction]]:
    h, mu = _q(h), _triple(mu)
    verdict = symplectic_cone_contains(x3_periods(h, mu))
    if not verdict.inside:
        names = ", ".join(v.constraint for v in verdict.violated)
        raise NotInSymplecticCone(f"({h}; {', '.join(map(str, mu))}) is outside the X3 symplectic cone: {names}")
    return h, mu


def _sum_criterion(mu) -> bool:
    return all(t > 0 for t in _triangle_slacks(mu))


def _h_criterion(h, mu) -> bool:
    return all(m < h / 2 for m in mu)


def rp2_exists_sum(h, mu: Sequence) -> bool:
    """Projective plane in the mod-2 class ``E1+E2+E3``: strict triangle inequality."""
    h, mu = _require_cone(h, mu)
    return _sum_criterion(mu)


def rp2_exists_H(h, mu: Sequence) -> bool:
    """Projective plane in the mod-2 class ``H``: every ``mu_k < h/2``."""
    h, mu = _require_cone(h, mu)
    return _h_criterion(h, mu)


def _require_both(h, mu):
    h, mu = _require_cone(h, mu)
    if not _h_criterion(h, mu):
        raise LagrangianAbsent("H")
    if not _sum_criterion(mu):
        raise LagrangianAbsent("E1+E2+E3")
    return h, mu


def rp2_disjoinable(h, mu: Sequence) -> bool:
    """Whether projective planes in ``H`` and ``E1+E2+E3`` can be made disjoint."""
    h, mu = _require_both(h, mu)
    return sum(mu) < h


# --------------------------------------------------------------------------- #
# Period transport through the rational blow-up of one projective plane

def transport_rp2_blowup(mu: Sequence, eps) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Periods ``(mu~0, mu~1, mu~2, mu~3)`` of ``X4`` after blowing up ``E1+E2+E3``.

    ``mu~0 = sum(mu)/2 + eps`` and ``mu~k = (mu_i + mu_j - mu_k)/2 - eps``.
    """
    mu, eps = _triple(mu), _q(eps)
    slacks = _triangle_slacks(mu)
    if not all(t > 0 for t in slacks):
        raise TriangleViolated(f"periods {tuple(map(str, mu))} violate the strict triangle inequality")
    if not 0 < eps < min(slacks) / 2:
        raise EpsilonOutOfRange(f"eps must lie in (0, {min(slacks) / 2}), got {eps}")
    return (sum(mu) / 2 + eps,) + tuple(t / 2 - eps for t in slacks)  # type: ignore[return-value]


def rp2_blowup_witness(h, mu: Sequence, eps) -> TransportWitness:
    """Full ``X4`` period vector; the line class is carried over unchanged."""
    h, mu = _require_both(h, mu)
    mt = transport_rp2_blowup(mu, eps)
    p = PeriodVector(std_chart(4), (h,) + mt)
    if not symplectic_cone_contains(p).inside:
        raise EpsilonOutOfRange(f"eps={eps} too large: blown-up periods leave the X4 symplectic cone")
    return TransportWitness(std_chart(4), p, (_q(eps),))


def transport_rp2_blowdown(mu_tilde: Sequence) -> tuple[tuple[Fraction, Fraction, Fraction], Fraction]:
    """Inverse of :func:`transport_rp2_blowup`: recover ``(mu, eps)``."""
    if len(mu_tilde) != 4:
        raise ValueError("expected four periods")
    m0, m1, m2, m3 = (_q(x) for x in mu_tilde)
    if not all(x > 0 for x in (m0, m1, m2, m3)) or not m0 - m1 - m2 - m3 > 0:
        raise DegenerateInput("blow-down needs all mu~ > 0 and mu~0 - mu~1 - mu~2 - mu~3 > 0")
    eps = (m0 - m1 - m2 - m3) / 4
    total = 2 * (m0 - eps)
    mu = tuple(total - m0 - mk for mk in (m1, m2, m3))
    return mu, eps  # type: ignore[return-value]


def rp2_complement_map(a: HomologyClass) -> HomologyClass:
    """Lattice isometry from the complement of ``E1+E2+E3`` in ``X3`` into ``X4``.

    On generators: ``2E_i -> E~0 - E~i + E~j + E~k`` and ``E_i - E_j -> E~j - E~i``.
    Written out, ``sum x_i E_i`` (with even ``sum x_i``) goes to
    ``(s/2) E~0 + sum (s/2 - x_i) E~i`` where ``s = sum x_i``.
    """
    if a.chart != std_chart(3):
        raise OutsideDomainSpan(f"expected a class on std_X3, got {a.chart.name}")
    d, x1, x2, x3 = a.coeffs
    s = x1 + x2 + x3
    if d != 0 or s % 2:
        raise OutsideDomainSpan(f"{a} is not in the span of E_i - E_j and 2E_i")
    half = s // 2
    return HomologyClass(std_chart(4), (0, half, half - x1, half - x2, half - x3))


# --------------------------------------------------------------------------- #
# Two disjoint projective planes in X3

def two_rp2_witness(h, mu: Sequence) -> FeasibilityReport:
    """Construct X5 Kähler periods that blow down to ``(h; mu)``, or explain why not.

    Blowing up both planes forces ``alpha = 2h`` and ``mu~0 < beta < h/2``
    with ``mu~0 > sum(mu)/2``.  When that window is nonempty the epsilons are
    halved from a fixed start until every Kähler inequality holds.
    """
    h, mu = _require_both(h, mu)
    s = sum(mu)
    lower, upper = s / 2, h / 2
    if lower >= upper:
        return FeasibilityReport(
            False,
            obstruction=Obstruction(
                "beta-window empty: need sum(mu)/2 < mu~0 < beta < h/2 for every eps > 0",
                {"h/2": upper, "inf mu~0": lower},
            ),
        )
    eps2 = min(_triangle_slacks(mu)) / 8
    eps1 = (h - s) / 8
    for _ in range(MAX_HALVINGS):
        mt = transport_rp2_blowup(mu, eps2)
        alpha, beta = 2 * h, h / 2 - eps1
        if kahler_cone_x5_special(alpha, beta, mt).inside:
            p = x5_periods(alpha, beta, mt)
            return FeasibilityReport(True, witness=TransportWitness(X5_SPECIAL, p, (eps1, eps2)))
        eps1, eps2 = eps1 / 2, eps2 / 2
    raise RuntimeError("epsilon search did not terminate")  # unreachable for valid input


def witness_blowdown(w: TransportWitness) -> tuple[Fraction, tuple[Fraction, Fraction, Fraction]]:
    """Recover ``(h; mu)`` from an X5 witness."""
    alpha, _beta, mt = x5_parameters(w.periods)
    mu, _eps = transport_rp2_blowdown(mt)
    return alpha / 2, mu


def witness_kahler_verdict(w: TransportWitness) -> ConeVerdict:
    alpha, beta, mt = x5_parameters(w.periods)
    return kahler_cone_x5_special(alpha, beta, mt)


# --------------------------------------------------------------------------- #
# L(3,1) in S2 x S2

def _positive(*xs) -> list[Fraction]:
    vals = [_q(x) for x in xs]
    if any(v <= 0 for v in vals):
        raise NonPositiveInput("all inputs must be positive")
    return vals


def l31_solve(a, b, eps1, eps2) -> PeriodVector:
    """X3 periods after blowing up ``L(3,1)`` in ``(S2 x S2, a, b)``.

    The (-5)-sphere ``-2H + 3E1`` has area ``9 eps1`` and the (-2)-sphere
    ``H - E1 - E2 - E3`` has area ``9 eps2``; ``A+2B`` and ``2A+B`` keep
    their areas as ``3H - 2E1 - E2`` and ``3H - 2E1 - E3``.
    """
    a, b, e1, e2 = _positive(a, b, eps1, eps2)
    h = a + b + 3 * e1 - 3 * e2
    mu1 = 2 * (a + b) / 3 + 5 * e1 - 2 * e2
    mu2 = (2 * a - b) / 3 - (e1 + 5 * e2)
    mu3 = (2 * b - a) / 3 - (e1 + 5 * e2)
    return PeriodVector(std_chart(3), (h, mu1, mu2, mu3))


def l31_exists(a, b=1) -> bool:
    """``L(3,1)`` in class ``A+B`` iff ``b/2 < a < 2b``; call ``l31_exists(lam)`` for ``omega_lambda``."""
    a, b = _positive(a, b)
    return b / 2 < a < 2 * b


def l31_witness(a, b=1) -> FeasibilityReport:
    a, b = _positive(a, b)
    # Suprema over eps > 0 of mu2 and mu3.
    mu2_sup, mu3_sup = (2 * a - b) / 3, (2 * b - a) / 3
    if mu2_sup <= 0:
        return FeasibilityReport(False, obstruction=Obstruction(
            "mu2 <= 0 for every eps > 0 (needs 2a > b)", {"2a - b": 2 * a - b}))
    if mu3_sup <= 0:
        return FeasibilityReport(False, obstruction=Obstruction(
            "mu3 <= 0 for every eps > 0 (needs 2b > a)", {"2b - a": 2 * b - a}))
    eps = min(2 * a - b, 2 * b - a) / 100
    for _ in range(MAX_HALVINGS):
        p = l31_solve(a, b, eps, eps)
        if symplectic_cone_contains(p).inside:
            return FeasibilityReport(True, witness=TransportWitness(std_chart(3), p, (eps, eps)))
        eps /= 2
    raise RuntimeError("epsilon search did not terminate")  # unreachable for valid input


# --------------------------------------------------------------------------- #
# Manifold bookkeeping

@dataclass(frozen=True)
class Manifold:
    """A rational 4-manifold: ``X_k`` (``CP2`` is ``X0``) or ``S2xS2``."""

    name: str

    @property
    def b2(self) -> int:
        if self.name == "S2xS2":
            return 2
        return int(self.name[1:]) + 1


def parse_manifold(text: str | Manifold) -> Manifold:
    if isinstance(text, Manifold):
        return text
    t = text.strip().replace("std_", "")
    if t in ("S2xS2", "S2XS2"):
        return Manifold("S2xS2")
    if t == "CP2":
        return Manifold("X0")
    m = re.fullmatch(r"X(\d+)", t)
    if m:
        return Manifold(f"X{int(m.group(1))}")
    raise UnsupportedInput(f"unknown manifold {text!r}")


def parse_pinwheel(p: str | int) -> int:
    """``"L(2,1)"``, ``"L21"`` or an int ``n`` -> ``n``."""
    if isinstance(p, int):
        n = p
    else:
        m = re.fullmatch(r"L\(?\s*(\d+)\s*,?\s*1\s*\)?", p.strip())
        if not m:
            raise UnsupportedInput(f"unknown pinwheel {p!r}")
        n = int(m.group(1))
    if n not in (2, 3):
        raise UnsupportedInput(f"only L(2,1) and L(3,1) are supported, got L({n},1)")
    return n


def blowup_target(source: str | Manifold, pinwheels: Sequence[str | int]) -> Manifold:
    """Manifold obtained by rationally blowing up the given pinwheels.

    ``L(n,1)`` is replaced by a chain of ``n - 1`` spheres, so ``b2`` grows by
    ``n - 1``.  The only ambiguous target, ``b2 = 2``, arises from one
    projective plane in ``CP2`` and gives ``S2xS2``.
    """
    src = parse_manifold(source)
    ns = [parse_pinwheel(p) for p in pinwheels]
    if not ns:
        raise UnsupportedInput("need at least one pinwheel")
    b2 = src.b2 + sum(n - 1 for n in ns)
    if b2 == 2:
        return Manifold("S2xS2")
    return Manifold(f"X{b2 - 1}")


@dataclass(frozen=True)
class DelPezzoVerdict:
    must_intersect: bool
    mode: str  # "computed" or "recorded"


def del_pezzo_rp2_pair_must_intersect(k: int) -> DelPezzoVerdict:
    """Two projective planes in the monotone ``X_k`` must meet, for 3 <= k <= 6.

    k = 3 is decided here from the disjoinability criterion at ``(3; 1,1,1)``;
    k = 4..6 follow by a geometric induction and are recorded, not computed.
    """
    if k == 3:
        return DelPezzoVerdict(not rp2_disjoinable(3, (1, 1, 1)), "computed")
    if 4 <= k <= 6:
        return DelPezzoVerdict(True, "recorded")
    raise UnsupportedInput(f"no result for k={k}; only 3 <= k <= 6 is settled")
