"""Tolerances, budgets and other package-wide defaults.

All numeric knobs live here so that reruns with identical settings are
byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

# Causal classification tolerance (absolute, applied to signed squares and
# to lightcone coordinates).  Queries closer than this to a boundary are
# treated as boundary; membership predicates then report "outside" and
# envelope predicates report a Boundary verdict.
TAU_CLASS = 1e-9

# Envelope verdict tolerances: closed forms vs. grid/refinement searches.
TOL_ENV = 1e-9
TOL_ENV_SEARCH = 1e-6

# Inversion transforms refuse queries closer than this to the singular
# quadric (scalar square, or the composed-map denominator).
TOL_SING = 1e-12

# Edge-of-the-wedge neighborhood: radius shrink factor and the local
# witness-search grid (radii x angles in a ball of 33*|Im z| around Re z).
EDGE_SHRINK = 32.0
EDGE_SEARCH_RADII = 8
EDGE_SEARCH_ANGLES = 8
EDGE_SEARCH_FACTOR = 33.0

# Deterministic sampling: every quasi-random stream is a scrambled Halton
# sequence seeded from here unless the caller overrides.
DEFAULT_SEED = 7

# Default radius (coordinate units) when sampling unbounded regions.
SAMPLE_RADIUS = 1e3


@dataclass(frozen=True)
class SearchBudget:
    """Caps for witness searches over admissible hyperboloid/plane parameters.

    psi_grid x lam_grid is the coarse grid over (boost angle of the
    hyperboloid center, radius lambda); refine_steps golden-section steps
    polish the best cell.  region_samples bounds sampled admissibility
    checks for regions without a closed-form parameter set.
    """

    psi_grid: int = 64
    lam_grid: int = 64
    refine_steps: int = 40
    lam_max: float = 50.0
    psi_max: float = 6.0
    region_samples: int = 512
    # line/region intersection checks sample this many points on
    # t in [-line_half_range, line_half_range]
    line_half_range: float = 100.0
    line_points: int = 4001


DEFAULT_BUDGET = SearchBudget()

# Cauchy continuation defaults: closed smooth contour, uniform trapezoid.
CONTOUR_NODES = 256

# Analytic-disc patch half-height is this fraction of the minimal curvature
# radius along the base curve (keeps the O(eta^2) term subordinate in the
# tangent-direction check).
PATCH_DELTA_FACTOR = 0.1
