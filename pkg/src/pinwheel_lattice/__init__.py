"""Exact lattice arithmetic and decision procedures for Lagrangian pinwheels
in rational symplectic 4-manifolds."""

__version__ = "0.1.0"

from .cones import ConeVerdict, is_monotone, kahler_cone_x5_special, symplectic_cone_contains
from .enumeration import (
    ClassFamily,
    EnumQuery,
    audin_admissible,
    disjoint_rp2_class_pairs,
    enumerate_by_invariants,
    enumerate_exceptional,
    enumerate_negative_sphere_reps,
)
from .errors import PinwheelError
from .lattice import (
    S2XS2,
    X5_SPECIAL,
    Chart,
    HomologyClass,
    ModClass,
    PeriodVector,
    c1_of,
    get_chart,
    pair,
    pair_mod,
    parse_rational,
    periods,
    perp_sublattice_mod,
    poincare_dual,
    reduce_mod,
    register_chart,
    satisfies_sphere_adjunction,
    std_chart,
    volume,
    x5_periods,
)
from .pinwheels import (
    FeasibilityReport,
    TransportWitness,
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
)
from .reflections import OrbitCertificate, Reflection, canonicalize, canonicalize_mod, reflect, same_orbit
