"""Oriented planar maps, quadrant tandem walks, and the bijections between them.

The package is organised around one correspondence and its consequences:
plane bipolar orientations with E edges match tandem walks of length E - 1
confined to the quadrant (kmsw), and decorating the orientations turns the
same machinery into bijections for plane posets (counted by vertices) and
transversal structures of the square (counted by inner vertices).  On the
linear side, counting holds the exact DP and recurrences for the three
weighted step models, and asymptotics computes the growth constants, the
exponent alpha and the cyclotomic obstruction to D-finiteness.  Plane
permutations and the shared generating tree live in permutations.
"""

from .counting import (
    MismatchAt,
    ModelSpec,
    NegativeWeight,
    VPoly,
    WEIGHT_KINDS,
    b_sequence,
    e_sequence,
    excursion_counts,
    series_relation_check,
    t_from_walks,
    t_sequence,
    transversal_weight,
    weight_value,
    weighted_count,
)
from .walks import (
    AttachedMismatch,
    ClassViolation,
    DomainError,
    FaceStep,
    LeftQuadrant,
    SE,
    SEStep,
    TandemWalk,
    WALK_CLASSES,
    attached_count,
    enumerate_attached,
    enumerate_walks,
    format_walk,
    parse_walk,
    validate_walk,
    walk_from_json,
    walk_to_json,
    walk_weight,
)
from .maps import (
    BipolarMap,
    Cyclic,
    DecoratedBipolar,
    ExtremalCornerViolation,
    FaceType,
    InternalConsistencyError,
    InvalidDecoration,
    LateralCornerViolation,
    MultipleSinks,
    MultipleSources,
    NotAPoset,
    NotSimple,
    OuterNotQuad,
    PlanarMap,
    PoleMisplaced,
    T1Violation,
    T2Violation,
    TransversalStructure,
    grid_quad_count,
    grid_transversal,
    is_poset,
    map_from_coords,
    map_from_json,
    map_to_json,
    red_poset,
    validate_bipolar,
    validate_transversal,
)
from .kmsw import (
    InvalidWalk,
    kmsw_backward,
    kmsw_forward,
    phi_T,
    phi_V,
    poset_to_v_walk,
    psi_T,
    psi_V,
    t_walk_to_transversal,
    transversal_to_t_walk,
    v_walk_to_poset,
)
from .permutations import (
    InactiveValue,
    InactiveVertex,
    NotPlane,
    Permutation,
    active_points,
    descents,
    is_plane,
    omega_counts,
    perm_child,
    perm_children,
    perm_label,
    perm_parent,
    phi_map,
    poset_actives,
    poset_child,
    poset_children,
    poset_label,
    poset_parent,
    psi_map,
    tree_leaves,
)
from .asymptotics import (
    AsymptoticConstants,
    DegenerateInput,
    NoRootInInterval,
    OutOfRange,
    TooShort,
    central_charge,
    cyclotomic_root_scan,
    growth_fit,
    non_dfinite_check,
    solve_constants,
    xi_polynomial,
    zeta_numerator,
)

__version__ = "0.1.0"
