"""Envelopes of holomorphy for tube-plus-coincidence-region domains in
complexified 1+1 Minkowski space, with the rotational reduction from 1+3.

Public surface: exact Minkowski arithmetic, coincidence-region primitives
with membership and boundary geometry, admissible separating quadrics,
closed-form envelope predicates with independent witness searches,
reciprocal-radii transforms, Cauchy-integral continuation along hyperbola
families, and the spectral support calculus with the mass-gap
contradiction detector.
"""

from .config import DEFAULT_BUDGET, SearchBudget, TAU_CLASS, TOL_ENV, TOL_ENV_SEARCH
from .errors import (
    BadGeometry,
    LightconeError,
    LightlikeSlope,
    NoTangent,
    NotSpacelike,
    PreconditionFailed,
    SchemaError,
    SingularPoint,
    TargetTooClose,
    UnsupportedConfiguration,
    UnsupportedRegion,
)
from .minkowski import (
    CausalClass,
    ComplexPoint2,
    RealPoint2,
    RealPoint4,
    classify,
    hat_dual,
    mink_dot,
    mink_square,
    reduce_rotational,
)
from .regions import (
    BackwardCone,
    DoubleCone,
    ForwardCone,
    GrowthEval,
    HyperboloidShell,
    MuCone,
    Region,
    ShellCap,
    SpacelikeComplementOfDoubleCone,
    SpacelikeSet,
    UnionOf,
    Wedge,
    boundary_distance,
    contains,
    edge_neighborhood_contains,
    pflug_growth,
    region_from_json,
    region_to_json,
    sample_interior,
    side_vertices,
)
from .admissible import (
    HyperboloidParam,
    PlaneParam,
    is_admissible_hyperboloid,
    is_admissible_plane,
    shell_hyperboloid_admissible,
)
from .envelopes import (
    EnvelopeVerdict,
    Verdict,
    double_cone_quadric_membership,
    envelope_hyperboloid_shell,
    envelope_mu_cone,
    envelope_shell_complement,
    jld_excluded,
    line_point_in_envelope,
    shell_boundary_curves,
    wedge_hyperbola_membership,
    wedge_lightlike_line_membership,
)
from .extensions import (
    DhatRegion,
    TwoConeExtension,
    dhat,
    double_cone_theorem_hull,
    tangent_contact,
    tangent_parameters,
    two_double_cone_extension,
)
from .transforms import (
    HyperbolaParams,
    check_phi_properties,
    line_image,
    phi,
    psi_phi,
    psi_phi_inverse,
)
from .continuation import (
    Contour,
    CurveFamily,
    build_hyperbola_family,
    cauchy_continue,
    continue_along_family,
    default_test_functions,
    max_principle_check,
)
from .spectral import (
    AffineImage,
    MassGapResult,
    MassShell,
    Origin,
    PointSet,
    ShellBand,
    SpectrumHypothesis,
    UnionSupport,
    coincidence_region,
    massgap_contradiction,
    reflect_shift,
    support_Fminus,
    support_contains,
)

__version__ = "0.1.0"
