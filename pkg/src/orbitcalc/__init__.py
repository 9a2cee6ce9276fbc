"""Exact equivariant orbit classes of linear series on the projective line."""

from __future__ import annotations

from .classes import (
    EquivariantClass,
    nonequivariant_class,
    phi,
    psi,
    schubert_class_of,
    series_class,
    weighted_orbit_class,
)
from .errors import (
    CodimNegative,
    ContextMismatch,
    DegenerateBasis,
    InvalidSequence,
    InvalidTree,
    NonexistentProfile,
    NotDivisible,
    NotSymmetric,
    OrbitCalcError,
    ParseError,
    WeightMismatch,
)
from .polycore import Poly, exact_quotient, substitute, symmetry_check
from .schubert import Partition, SchubertClass, profile_exists, schur_expand, schur_reduce
from .series import (
    BinaryForm,
    LinearSeries,
    ProjPoint,
    RamificationProfile,
    VanishingSequence,
    boundary_orbits,
    degenerate_at,
    ramification_points,
    ramification_profile,
    vanishing_sequence,
    wronskian,
)
from .special import (
    CollisionSpec,
    LabelledTree,
    Relation,
    collide,
    contraction_additive,
    decompose,
    predegree,
    validate_tree,
)

__version__ = "0.1.0"
