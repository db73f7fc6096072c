"""One-shot replication report.

Every fact pairs an expected value with a computed one and passes iff they
are exactly equal.  Randomised suites draw from ``random.Random`` seeded by
``(seed, suite name)``, so a report is a pure function of the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import __version__
from .cones import is_monotone, kahler_cone_x5_special, symplectic_cone_contains
from .enumeration import (
    EnumQuery,
    audin_admissible,
    disjoint_rp2_class_pairs,
    enumerate_by_invariants,
    enumerate_exceptional,
    enumerate_negative_sphere_reps,
    exceptional_pairings_nonnegative,
    exceptional_vectors,
)
from .lattice import (
    S2XS2,
    X5_SPECIAL,
    HomologyClass,
    ModClass,
    PeriodVector,
    c1_of,
    format_rational,
    pair,
    pair_mod,
    perp_sublattice_mod,
    poincare_dual,
    reduce_mod,
    same_lattice,
    satisfies_sphere_adjunction,
    std_chart,
    std_to_x5_special,
    volume,
    x5_periods,
)
from .oracles import (
    bfs_orbit,
    boxed_enumeration,
    perp_box_check,
    random_feasible_two_rp2_point,
    random_rational,
    random_transport_input,
    random_two_rp2_point,
    random_x3_periods,
    x3_cone_explicit,
)
from .pinwheels import (
    blowup_target,
    del_pezzo_rp2_pair_must_intersect,
    l31_exists,
    l31_solve,
    l31_witness,
    rp2_complement_map,
    rp2_disjoinable,
    rp2_exists_H,
    rp2_exists_sum,
    transport_rp2_blowdown,
    transport_rp2_blowup,
    two_rp2_witness,
    witness_blowdown,
    witness_kahler_verdict,
)
from .reflections import canonicalize, canonicalize_mod, mod_orbit, reflect, same_orbit
from .serialization import schema

X3 = std_chart(3)


@dataclass(frozen=True)
class FactDef:
    id: str
    group: str
    anchor: str
    expected: Any
    compute: Callable[[random.Random], Any]


def _q(s: str) -> Fraction:
    return Fraction(s)


def _cls(k: int, text: str) -> HomologyClass:
    return std_chart(k).parse(text)


def _raises(fn: Callable[[], Any]) -> str:
    try:
        fn()
    except Exception as e:  # noqa: BLE001 - the exception type is the observable
        return type(e).__name__
    return "no error"


def _verdict_summary(v) -> dict:
    return {"inside": v.inside, "violated": [f"{x.constraint} = {format_rational(x.value)}" for x in v.violated]}


def _strs(xs) -> list[str]:
    return [str(x) for x in xs]


# --------------------------------------------------------------------------- #
# Anchored examples

def _example_facts() -> list[FactDef]:
    f = FactDef
    x7 = std_chart(7)
    sum7 = x7.parse("E1+E2+E3+E4+E5+E6+E7")
    facts = [
        # lattice
        f("pair-zinf-f", "lattice", "special X5 basis: Zinf.F off-diagonal entry", 1,
          lambda r: pair(X5_SPECIAL.parse("Zinf"), X5_SPECIAL.parse("F"))),
        f("c1-minus4-sphere", "lattice", "(-4)-sphere after blowing up a projective plane: c1 = 2 + (-4)", -2,
          lambda r: c1_of(_cls(4, "E1-E2-E3-E4"))),
        f("c1-minus5-sphere", "lattice", "(-5)-sphere -2H+3E1: c1 = 2 + (-5)", -3,
          lambda r: c1_of(_cls(3, "-2H+3E1"))),
        f("volume-x3-monotone", "lattice", "PD and volume of (3;1,1,1)", ["3", "-1", "-1", "-1", "6"],
          lambda r: [format_rational(v) for v in poincare_dual(PeriodVector(X3, (3, 1, 1, 1)))]
          + [format_rational(volume(PeriodVector(X3, (3, 1, 1, 1))))]),
        f("volume-x5-special", "lattice", "volume of the X5 special-chart example", "193/25",
          lambda r: format_rational(volume(x5_periods(6, 1, ("1/2", "1/10", "1/10", "1/10"))))),
        f("pair-mod3-l31-span", "lattice", "A+B pairs to 0 mod 3 with A+2B", 0,
          lambda r: pair_mod(S2XS2.parse("A+B"), S2XS2.parse("A+2B"), 3)),
        f("pair-mod2-h-e123", "lattice", "H and E1+E2+E3 pair trivially mod 2", 0,
          lambda r: pair_mod(X3.parse("H"), X3.parse("E1+E2+E3"), 2)),
        f("reduce-mod2", "lattice", "reduction of 2H-E1-E2-E3 mod 2", "E1+E2+E3",
          lambda r: str(reduce_mod(X3.parse("2H-E1-E2-E3"), 2))),
        f("perp-mod3-a-plus-b", "lattice", "perpendicular of A+B mod 3 is spanned by A+2B and 2A+B", True,
          lambda r: same_lattice(perp_sublattice_mod([S2XS2.parse("A+B")], 3),
                                 [S2XS2.parse("A+2B"), S2XS2.parse("2A+B")])),
        f("perp-mod2-h-e123", "lattice", "classes perpendicular mod 2 to H and E1+E2+E3", True,
          lambda r: same_lattice(perp_sublattice_mod([X3.parse("H"), X3.parse("E1+E2+E3")], 2),
                                 [X3.parse(t) for t in ("2H", "E1-E2", "E2-E3", "2E3")])),
        f("adjunction-h-e123", "lattice", "H-E1-E2-E3 satisfies sphere adjunction", True,
          lambda r: satisfies_sphere_adjunction(X3.parse("H-E1-E2-E3"))),
        f("adjunction-minus-e1-e2", "lattice", "-E1-E2 fails sphere adjunction", False,
          lambda r: satisfies_sphere_adjunction(X3.parse("-E1-E2"))),
        # reflections
        f("reflect-h", "reflections", "reflection along H-E1-E2-E3 maps H to 2H-E1-E2-E3 (E1+E2+E3 mod 2)",
          ["2H-E1-E2-E3", "E1+E2+E3"],
          lambda r: [str(reflect(X3.parse("H"), X3.parse("H-E1-E2-E3"))),
                     str(reduce_mod(reflect(X3.parse("H"), X3.parse("H-E1-E2-E3")), 2))]),
        f("reflect-sum7", "reflections", "reflection of E1+...+E7 along H-E1-E2-E3",
          "3H-2E1-2E2-2E3+E4+E5+E6+E7",
          lambda r: str(reflect(sum7, x7.parse("H-E1-E2-E3")))),
        f("canon-minus5-distinct", "reflections", "the two listed (-5) representatives are in different orbits",
          [False, False],
          lambda r: [canonicalize(X3.parse("-2H+3E1"))[0] == canonicalize(X3.parse("-H-2E1+E2+E3"))[0],
                     same_orbit(X3.parse("-2H+3E1"), X3.parse("-H-2E1+E2+E3"))[0]]),
        f("canon-e1-h-e2-e3", "reflections", "E1 and H-E2-E3 share an orbit (single reflection)", [True, True],
          lambda r: [canonicalize(X3.parse("E1"))[0] == canonicalize(X3.parse("H-E2-E3"))[0],
                     same_orbit(X3.parse("E1"), X3.parse("H-E2-E3"))[1].verify()]),
        f("canon-mod2-x3", "reflections", "mod 2, H and E1+E2+E3 share an orbit on X3", True,
          lambda r: canonicalize_mod(ModClass(X3, 2, (0, 1, 1, 1))) == canonicalize_mod(ModClass(X3, 2, (1, 0, 0, 0)))),
        f("canon-mod2-x7", "reflections", "mod 2, E1+...+E7 is further mapped to H on X7", True,
          lambda r: canonicalize_mod(reduce_mod(sum7, 2)) == canonicalize_mod(reduce_mod(x7.parse("H"), 2))),
        # enumeration
        f("exceptional-x5-conic", "enumeration", "2H-E1-...-E5 is exceptional on X5", True,
          lambda r: _cls(5, "2H-E1-E2-E3-E4-E5") in enumerate_by_invariants(EnumQuery(5, -1, 1))),
        f("exceptional-x7-cubic", "enumeration", "3H-2E7-E1-...-E6 is exceptional on X7 (cubic family)",
          "3H-2E-6E",
          lambda r: dict((str(c), fam.label) for c, fam in enumerate_exceptional(7)).get(
              str(_cls(7, "3H-E1-E2-E3-E4-E5-E6-2E7")))),
        f("exceptional-x3", "enumeration", "the six exceptional classes of X3",
          ["E1", "E2", "E3", "H-E1-E2", "H-E1-E3", "H-E2-E3"],
          lambda r: sorted(str(c) for c, _ in enumerate_exceptional(3))),
        f("spheres-x3-minus2", "enumeration", "(-2) sphere orbits on X3 are those of E1-E2 and H-E1-E2-E3", True,
          lambda r: sorted(enumerate_negative_sphere_reps(3, 2), key=lambda c: c.coeffs)
          == sorted((canonicalize(X3.parse(t))[0] for t in ("E1-E2", "H-E1-E2-E3")), key=lambda c: c.coeffs)),
        f("spheres-x3-minus5", "enumeration",
          "(-5) sphere orbits on X3: -H-2E1+E2+E3, -2H+3E1 and the search-resolved -2E1-E2",
          {"count": 3, "listed": True, "third": "-2E1-E2", "adjunction": True},
          lambda r: _minus5_summary()),
        f("spheres-x4-minus4", "enumeration", "(-4) sphere orbits on X4 include E1-E2-E3-E4", True,
          lambda r: canonicalize(_cls(4, "E1-E2-E3-E4"))[0] in enumerate_negative_sphere_reps(4, 4)),
        f("audin-k0", "enumeration", "admissible mod-2 classes on CP2", ["H"],
          lambda r: [str(m) for m, _ in audin_admissible(0)]),
        f("audin-k3", "enumeration", "admissible mod-2 classes on X3", ["H", "E1+E2+E3"],
          lambda r: [str(m) for m, _ in audin_admissible(3)]),
        f("audin-k4", "enumeration", "H+E1+E2+E3+E4 is admissible on X4", True,
          lambda r: "H+E1+E2+E3+E4" in [str(m) for m, _ in audin_admissible(4)]),
        f("audin-thresholds", "enumeration", "admissible family shapes appear at k = 0, 3, 4, 7, 8",
          {str(k): v for k, v in _audin_expected().items()},
          lambda r: {str(k): sorted({fam.label for _, fam in audin_admissible(k)}) for k in range(9)}),
        f("pairs-k3", "enumeration", "on X3 the only disjoint candidate pair is H and E1+E2+E3",
          [["H", "E1+E2+E3"]], lambda r: [_strs(p) for p in disjoint_rp2_class_pairs(3)]),
        f("pairs-k4", "enumeration", "on X4 still a single pair up to diffeomorphism", 1,
          lambda r: len(disjoint_rp2_class_pairs(4))),
        f("pairs-k3-to-7", "enumeration", "pair counts for k = 3..7", [1, 1, 1, 1, 2],
          lambda r: [len(disjoint_rp2_class_pairs(k)) for k in range(3, 8)]),
        f("pairs-k7", "enumeration", "on X7 the pair H and E1+...+E7 appears", True,
          lambda r: ["H", "E1+E2+E3+E4+E5+E6+E7"] in [_strs(p) for p in disjoint_rp2_class_pairs(7)]),
        # cones
        f("cone-x3-monotone", "cones", "monotone X3 periods lie in the symplectic cone", True,
          lambda r: symplectic_cone_contains(PeriodVector(X3, (3, 1, 1, 1))).inside),
        f("cone-x3-boundary", "cones", "(2;1,1,1) fails h-mu_i-mu_j > 0 on the boundary",
          {"inside": False, "violated": ["area(H-E1-E2) > 0 = 0", "area(H-E1-E3) > 0 = 0", "area(H-E2-E3) > 0 = 0"]},
          lambda r: _verdict_summary(symplectic_cone_contains(PeriodVector(X3, (2, 1, 1, 1))))),
        f("cone-s2xs2", "cones", "S2xS2 with areas 3/2 and 1", True,
          lambda r: symplectic_cone_contains(PeriodVector(S2XS2, (_q("3/2"), 1))).inside),
        f("kahler-inside", "cones", "Kähler cone of the special X5 chart: interior point",
          {"inside": True, "violated": []},
          lambda r: _verdict_summary(kahler_cone_x5_special(6, 1, [_q("1/2"), _q("1/10"), _q("1/10"), _q("1/10")]))),
        f("kahler-alpha-4beta", "cones", "Kähler cone: alpha - 4 beta > 0 is violated at equality",
          {"inside": False, "violated": ["alpha - 4*beta > 0 = 0"]},
          lambda r: _verdict_summary(kahler_cone_x5_special(4, 1, [_q("1/2"), _q("1/10"), _q("1/10"), _q("1/10")]))),
        f("kahler-minus4-curve", "cones", "Kähler cone: the (-4)-curve inequality is violated at equality",
          {"inside": False, "violated": ["mu~0 - mu~1 - mu~2 - mu~3 > 0 = 0"]},
          lambda r: _verdict_summary(kahler_cone_x5_special(6, 1, [_q("3/10"), _q("1/10"), _q("1/10"), _q("1/10")]))),
        f("monotone-x3", "cones", "mu_i = h/3 is monotone", [True, False],
          lambda r: [is_monotone(PeriodVector(X3, (3, 1, 1, 1))), is_monotone(PeriodVector(X3, (3, 1, 1, _q("1/2"))))]),
        # pinwheels
        f("monotone-x3-non-disjoinable", "pinwheels",
          "monotone X3: both projective planes exist but cannot be made disjoint",
          {"exists_sum": True, "exists_H": True, "disjoinable": False, "witness_feasible": False},
          lambda r: {"exists_sum": rp2_exists_sum(3, (1, 1, 1)), "exists_H": rp2_exists_H(3, (1, 1, 1)),
                     "disjoinable": rp2_disjoinable(3, (1, 1, 1)),
                     "witness_feasible": two_rp2_witness(3, (1, 1, 1)).feasible}),
        f("disjoinable-4111", "pinwheels", "(4;1,1,1) is disjoinable with a verified X5 witness",
          {"disjoinable": True, "alpha": "8", "kahler": True, "blowdown": ["4", "1", "1", "1"]},
          lambda r: _witness_summary(4, (1, 1, 1))),
        f("l31-solve-zero-eps", "pinwheels", "the blow-up sphere areas must be positive", "NonPositiveInput",
          lambda r: _raises(lambda: l31_solve(1, 1, 0, _q("1/100")))),
        f("l31-witness-upper", "pinwheels", "(a,b) = (2,1): mu3 > 0 forces 2b > a", [False, "2b - a"],
          lambda r: _obstruction_key(l31_witness(2, 1))),
        f("l31-witness-lower", "pinwheels", "(a,b) = (1/2,1): mu2 > 0 forces 2a > b", [False, "2a - b"],
          lambda r: _obstruction_key(l31_witness(_q("1/2"), 1))),
        f("l31-witness-one", "pinwheels", "(a,b) = (1,1) has an X3 witness", True,
          lambda r: l31_witness(1, 1).feasible),
        f("blowup-target", "pinwheels", "rational blow-up targets", ["X4", "X5", "X3"],
          lambda r: [blowup_target("X3", ["L(2,1)"]).name, blowup_target("X3", ["L(2,1)", "L(2,1)"]).name,
                     blowup_target("S2xS2", ["L(3,1)"]).name]),
        f("del-pezzo", "pinwheels", "two projective planes in monotone X_k must intersect",
          [[True, "computed"], [True, "recorded"], "UnsupportedInput"],
          lambda r: [[del_pezzo_rp2_pair_must_intersect(3).must_intersect, del_pezzo_rp2_pair_must_intersect(3).mode],
                     [del_pezzo_rp2_pair_must_intersect(5).must_intersect, del_pezzo_rp2_pair_must_intersect(5).mode],
                     _raises(lambda: del_pezzo_rp2_pair_must_intersect(7))]),
        # transport
        f("transport-blowup", "transport", "period transport mu = (1,1,1), eps = 1/4", ["7/4", "1/4", "1/4", "1/4"],
          lambda r: [format_rational(x) for x in transport_rp2_blowup((1, 1, 1), _q("1/4"))]),
        f("transport-blowdown", "transport", "inverse transport of (7/4,1/4,1/4,1/4)", [["1", "1", "1"], "1/4"],
          lambda r: (lambda m, e: [[format_rational(x) for x in m], format_rational(e)])(
              *transport_rp2_blowdown([_q("7/4"), _q("1/4"), _q("1/4"), _q("1/4")]))),
        f("complement-2e1", "transport", "2E1 goes to E~0 - E~1 + E~2 + E~3", "E1-E2+E3+E4",
          lambda r: str(rp2_complement_map(X3.parse("2E1")))),
        f("complement-e1-e2", "transport", "E1-E2 goes to E~2 - E~1 (sign fixed by isometry)", "-E2+E3",
          lambda r: str(rp2_complement_map(X3.parse("E1-E2")))),
        # l31 boundary
        f("l31-lambda-half", "l31", "L(3,1) exists only for 1/2 < lambda: lambda = 1/2 is excluded", False,
          lambda r: l31_exists(_q("1/2"))),
        f("l31-lambda-one", "l31", "L(3,1) exists at lambda = 1", True, lambda r: l31_exists(1)),
        f("l31-lambda-two", "l31", "L(3,1) exists only for lambda < 2: lambda = 2 is excluded", False,
          lambda r: l31_exists(2)),
    ]
    return facts


def _minus5_summary() -> dict:
    reps = enumerate_negative_sphere_reps(3, 5)
    listed = {canonicalize(X3.parse(t))[0] for t in ("-H-2E1+E2+E3", "-2H+3E1")}
    rest = [c for c in reps if c not in listed]
    third = canonicalize(X3.parse("-2E1-E2"))[0]
    return {
        "count": len(reps),
        "listed": listed <= set(reps),
        "third": "-2E1-E2" if rest == [third] else _strs(rest),
        "adjunction": all(satisfies_sphere_adjunction(c) for c in reps),
    }


def _audin_expected() -> dict[int, list[str]]:
    out = {}
    for k in range(9):
        labels = ["RP2_H"]
        if k >= 3:
            labels.append("RP2_3E")
        if k >= 4:
            labels.append("RP2_H4E")
        if k >= 7:
            labels.append("RP2_7E")
        if k >= 8:
            labels.append("RP2_H8E")
        out[k] = sorted(labels)
    return out


def _witness_summary(h, mu) -> dict:
    rep = two_rp2_witness(h, mu)
    w = rep.witness
    h2, mu2 = witness_blowdown(w)
    alpha = w.periods.values[0] + 4 * w.periods.values[1]
    return {
        "disjoinable": rp2_disjoinable(h, mu) and rep.feasible,
        "alpha": format_rational(alpha),
        "kahler": witness_kahler_verdict(w).inside,
        "blowdown": [format_rational(x) for x in (h2,) + mu2],
    }


def _obstruction_key(rep) -> list:
    key = next(iter(rep.obstruction.values)) if rep.obstruction else None
    return [rep.feasible, key]


# --------------------------------------------------------------------------- #
# Randomised invariant suites.  Each returns the number of passing samples.

def _random_class(rng: random.Random, k: int, box: int = 5) -> HomologyClass:
    return HomologyClass(std_chart(k), tuple(rng.randint(-box, box) for _ in range(k + 1)))


def _suite_pairing(rng: random.Random, n: int = 1000) -> int:
    ok = 0
    for _ in range(n):
        chart = S2XS2 if rng.random() < 0.2 else std_chart(rng.randint(0, 8))
        a, b, c = (HomologyClass(chart, tuple(rng.randint(-6, 6) for _ in range(chart.rank))) for _ in range(3))
        m = rng.randint(-3, 3)
        good = pair(a, b) == pair(b, a)
        good &= pair(a + m * b, c) == pair(a, c) + m * pair(b, c)
        good &= (a.square - c1_of(a)) % 2 == 0
        good &= (a + 2 * b).square % 4 == a.square % 4
        ok += good
    return ok


def _suite_volume(rng: random.Random, n: int = 1000) -> int:
    ok = 0
    for _ in range(n):
        k = rng.randint(0, 8)
        vals = [random_rational(rng, -5, 5) for _ in range(k + 1)]
        p = PeriodVector(std_chart(k), tuple(vals))
        ok += volume(p) == vals[0] ** 2 - sum(v * v for v in vals[1:])
    return ok


def _suite_perp(rng: random.Random) -> int:
    cases = [
        ([S2XS2.parse("A+B")], 3),
        ([X3.parse("H"), X3.parse("E1+E2+E3")], 2),
        ([X3.parse("E1+E2")], 3),
    ]
    return sum(perp_box_check(cs, n, perp_sublattice_mod(cs, n)) for cs, n in cases)


def _suite_reflect(rng: random.Random, n: int = 1000) -> int:
    from .reflections import generator_axes

    ok = 0
    for _ in range(n):
        k = rng.randint(2, 8)
        chart = std_chart(k)
        axis = HomologyClass(chart, rng.choice(generator_axes(k)))
        a, b = _random_class(rng, k), _random_class(rng, k)
        ra, rb = reflect(a, axis), reflect(b, axis)
        good = pair(ra, rb) == pair(a, b) and c1_of(ra) == c1_of(a) and reflect(ra, axis) == a
        ok += good
    return ok


def _suite_canonicalize(rng: random.Random, n: int = 100) -> int:
    ok = 0
    for _ in range(n):
        a = _random_class(rng, rng.randint(1, 8), box=3)
        c, cert = canonicalize(a)
        c2, _ = canonicalize(c)
        ok += c == c2 and cert.verify() and c.square == a.square and c1_of(c) == c1_of(a)
    return ok


def _suite_same_orbit(rng: random.Random, n: int = 100) -> int:
    from .reflections import generator_axes

    ok = 0
    for _ in range(n):
        k = rng.randint(2, 6)
        chart = std_chart(k)
        a = _random_class(rng, k, box=2)

        def scramble(x: HomologyClass) -> HomologyClass:
            for _ in range(rng.randint(0, 6)):
                x = reflect(x, HomologyClass(chart, rng.choice(generator_axes(k))))
            return x

        b = scramble(a) if rng.random() < 0.5 else _random_class(rng, k, box=2)
        c = scramble(b) if rng.random() < 0.5 else _random_class(rng, k, box=2)
        ab, bc, ac = same_orbit(a, b)[0], same_orbit(b, c)[0], same_orbit(a, c)[0]
        good = same_orbit(a, a)[0] and ab == same_orbit(b, a)[0]
        good &= not (ab and bc) or ac
        good &= all(cert.verify() for x, y in ((a, b), (b, c), (a, c)) if (cert := same_orbit(x, y)[1]))
        ok += good
    return ok


def _suite_x3_exceptional_single_orbit(rng: random.Random) -> int:
    orb = bfs_orbit(X3.parse("E1"))
    exc = set(exceptional_vectors(3))
    return int(exc <= orb and len({canonicalize(HomologyClass(X3, v))[0] for v in exc}) == 1)


def _suite_enum_oracle(rng: random.Random) -> int:
    ok = 0
    for k in range(6):
        for sq, c1 in ((-1, 1), (-2, 0), (-4, -2), (-5, -3)):
            got = {c.coeffs for c in enumerate_by_invariants(EnumQuery(k, sq, c1))}
            ok += got == boxed_enumeration(k, sq, c1, box=6)
    return ok


def _suite_exceptional_structure(rng: random.Random) -> int:
    ok = 0
    for k in range(9):
        vecs = set(exceptional_vectors(k))
        closed = all((v[0],) + tuple(p) in vecs for v in vecs for p in {tuple(rng.sample(v[1:], k))})
        ok += closed and exceptional_pairings_nonnegative(k)
    return ok


def _suite_audin_closed(rng: random.Random) -> int:
    ok = 0
    for k in range(9):
        adm = {m for m, _ in audin_admissible(k)}
        good = all(any(m.coeffs) for m in adm)
        good &= all(set(mod_orbit(m)) <= adm for m in adm)
        ok += good
    return ok


def _suite_sphere_adjunction(rng: random.Random) -> int:
    cases = [(3, 2), (3, 5), (4, 4), (5, 2), (5, 3)]
    return sum(all(satisfies_sphere_adjunction(r) for r in enumerate_negative_sphere_reps(k, n)) for k, n in cases)


def _suite_cone_equivalence(rng: random.Random, n: int = 10_000) -> int:
    ok = 0
    for _ in range(n):
        p = PeriodVector(X3, random_x3_periods(rng))
        ok += symplectic_cone_contains(p).inside == x3_cone_explicit(p)
    return ok


def _suite_kahler_reality(rng: random.Random, n: int = 200) -> int:
    exc = [std_to_x5_special(HomologyClass(std_chart(5), v)) for v in exceptional_vectors(5)]
    ok = 0
    for _ in range(n):
        h, mu = random_feasible_two_rp2_point(rng)
        p = two_rp2_witness(h, mu).witness.periods
        ok += all(p.area(e) > 0 for e in exc)
    return ok


def _suite_monotone(rng: random.Random) -> int:
    ok = 0
    for k in range(9):
        h = random_rational(rng, Fraction(1, 10), 10)
        p = PeriodVector(std_chart(k), (h,) + (h / 3,) * k)
        ok += is_monotone(p) and symplectic_cone_contains(p).inside
    return ok


def _suite_disjoinable(rng: random.Random, n: int = 10_000) -> int:
    ok = 0
    for _ in range(n):
        h, mu = random_two_rp2_point(rng)
        ok += rp2_disjoinable(h, mu) == two_rp2_witness(h, mu).feasible
    return ok


def _random_positive(rng: random.Random, hi) -> Fraction:
    while True:
        x = random_rational(rng, 0, hi)
        if x > 0:
            return x


def _suite_l31(rng: random.Random, n: int = 1000) -> int:
    ok = 0
    for _ in range(n):
        a, b = _random_positive(rng, 4), _random_positive(rng, 4)
        ok += l31_exists(a, b) == l31_witness(a, b).feasible
    return ok


def _suite_witnesses(rng: random.Random, n: int = 1000) -> int:
    ok = 0
    for _ in range(n):
        h, mu = random_feasible_two_rp2_point(rng)
        w = two_rp2_witness(h, mu).witness
        ok += witness_kahler_verdict(w).inside and witness_blowdown(w) == (h, mu)
    return ok


def _suite_complement_isometry(rng: random.Random) -> int:
    span = [X3.parse(t) for t in ("2E1", "E1-E2", "E2-E3")]
    return sum(pair(rp2_complement_map(x), rp2_complement_map(y)) == pair(x, y) for x in span for y in span)


def _suite_complement_areas(rng: random.Random, n: int = 100) -> int:
    gens = [X3.parse(t) for t in ("2E1", "2E2", "2E3", "E1-E2", "E2-E3", "E1-E3")]
    ok = 0
    for _ in range(n):
        mu, eps = random_transport_input(rng)
        src = PeriodVector(X3, (Fraction(1),) + mu)
        dst = PeriodVector(std_chart(4), (Fraction(1),) + transport_rp2_blowup(mu, eps))
        ok += all(src.area(g) == dst.area(rp2_complement_map(g)) for g in gens)
    return ok


def _suite_transport_roundtrip(rng: random.Random, n: int = 100) -> int:
    ok = 0
    for _ in range(n):
        mu, eps = random_transport_input(rng)
        ok += transport_rp2_blowdown(transport_rp2_blowup(mu, eps)) == (mu, eps)
    return ok


def _suites() -> list[FactDef]:
    f = FactDef
    g = "invariants"
    return [
        f("pairing-identities", g, "symmetry, bilinearity, characteristic c1 and square mod 4 on random classes",
          1000, _suite_pairing),
        f("volume-identity", g, "volume equals h^2 - sum mu_i^2 on random rational periods", 1000, _suite_volume),
        f("perp-box-oracle", g, "perpendicular sublattices agree with an exhaustive box scan", 3, _suite_perp),
        f("reflection-invariance", g, "reflections preserve pairing and c1 and are involutions", 1000,
          _suite_reflect),
        f("canonicalize-idempotent", g, "canonical forms are idempotent and certified", 100, _suite_canonicalize),
        f("same-orbit-equivalence", g, "orbit equality is an equivalence relation on random triples", 100,
          _suite_same_orbit),
        f("x3-exceptional-one-orbit", g, "the six exceptional classes of X3 form one orbit (BFS)", 1,
          _suite_x3_exceptional_single_orbit),
        f("enumeration-oracle", g, "enumeration equals a boxed brute force for k <= 5", 24, _suite_enum_oracle),
        f("exceptional-structure", g, "exceptional sets are permutation-closed and pair non-negatively", 9,
          _suite_exceptional_structure),
        f("audin-closed", g, "admissible sets omit zero and are unions of mod-2 orbits", 9, _suite_audin_closed),
        f("sphere-reps-adjunction", g, "sphere representatives satisfy adjunction", 5, _suite_sphere_adjunction),
        f("x3-cone-equivalence", g, "explicit X3 inequalities match exceptional positivity", 10_000,
          _suite_cone_equivalence),
        f("kahler-reality-check", g, "Kähler witnesses are positive on every exceptional class of X5", 200,
          _suite_kahler_reality),
        f("monotone-inside", g, "monotone points are in the symplectic cone for k <= 8", 9, _suite_monotone),
        f("disjoinable-vs-witness", g, "closed-form disjoinability matches the constructive witness", 10_000,
          _suite_disjoinable),
        f("l31-exists-vs-witness", g, "L(3,1) existence matches witness construction", 1000, _suite_l31),
        f("witness-validity", g, "witnesses lie in the Kähler cone and blow down exactly", 1000, _suite_witnesses),
        f("complement-isometry", g, "the complement map preserves the 9 generator pairings", 9,
          _suite_complement_isometry),
        f("complement-areas", g, "the complement map intertwines the period transport", 100,
          _suite_complement_areas),
        f("transport-roundtrip", g, "blow-down inverts blow-up on random inputs", 100, _suite_transport_roundtrip),
    ]


def all_facts() -> list[FactDef]:
    return _example_facts() + _suites()


def groups() -> list[str]:
    return sorted({f.group for f in all_facts()})


def _canonical(x: Any) -> Any:
    """Normalise computed values so that expected == computed compares like JSON."""
    if isinstance(x, tuple):
        return [_canonical(v) for v in x]
    if isinstance(x, list):
        return [_canonical(v) for v in x]
    if isinstance(x, dict):
        return {k: _canonical(v) for k, v in x.items()}
    return x


def run(seed: int = 0, only: str | None = None) -> dict:
    specs = all_facts()
    if only is not None:
        if only not in groups():
            raise ValueError(f"unknown group {only!r}; choose from {', '.join(groups())}")
        specs = [s for s in specs if s.group == only]
    facts = []
    for s in specs:
        rng = random.Random(f"{seed}:{s.id}")
        try:
            computed = _canonical(s.compute(rng))
        except Exception as e:  # noqa: BLE001 - recorded as a failing fact
            computed = {"error": f"{type(e).__name__}: {e}"}
        expected = _canonical(s.expected)
        facts.append({
            "id": s.id,
            "group": s.group,
            "anchor": s.anchor,
            "expected": expected,
            "computed": computed,
            "pass": expected == computed,
        })
    passed = sum(f["pass"] for f in facts)
    return {
        "schema": schema("report"),
        "tool_version": __version__,
        "seed": seed,
        "only": only,
        "facts": facts,
        "summary": {"total": len(facts), "passed": passed, "failed": len(facts) - passed},
    }
