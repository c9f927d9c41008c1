"""Numeric analytic continuation along shifted hyperbola families.

The constructive mechanism: pick a spacelike base point p on the right
side, a line g through p with spacelike slope (|dx0/dx1| < 1), and build
the hyperbola branch with asymptotes g and the diagonal d = {x0 = x1},
apex at their crossing.  Both tails of the branch run into the spacelike
complement of the diamond D_{0,s}; only a compact parameter window leaves
it.  Complexifying the parameter and integrating the Cauchy kernel over a
closed contour around that window continues any function holomorphic on
the cone-plus-complement coincidence domain to the swept curves; shifting
the branch along the diagonal sweeps the region.

The companion maximum-principle check drives analytic disc patches
z_j = x_j(xi + i*eta): for holomorphic integrands the interior modulus
supremum never exceeds the boundary supremum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .config import CONTOUR_NODES, TAU_CLASS
from .errors import BadGeometry, TargetTooClose
from .minkowski import ComplexPoint2, RealPoint2, mink_square
from .regions import (
    SpacelikeComplementOfDoubleCone,
    contains,
    side_vertices,
)

SQRT2 = math.sqrt(2.0)


def _dist_to_wedge(p: RealPoint2, vertex: RealPoint2, right: bool) -> float:
    """Euclidean distance to a closed spacelike wedge (convex)."""
    q = p - vertex
    if right:
        if q.x >= abs(q.t):
            return 0.0
        rays = (RealPoint2(1, 1), RealPoint2(-1, 1))
    else:
        if -q.x >= abs(q.t):
            return 0.0
        rays = (RealPoint2(1, -1), RealPoint2(-1, -1))
    best = math.inf
    for d in rays:
        denom = d.t * d.t + d.x * d.x
        s = max(0.0, (q.t * d.t + q.x * d.x) / denom)
        best = min(best, (q - s * d).norm())
    return best


def dist_to_spacelike_complement(p: RealPoint2, s: RealPoint2) -> float:
    """Distance to the closed spacelike complement of D_{0,s}."""
    v1, v2 = side_vertices(RealPoint2(0, 0), s)
    return min(_dist_to_wedge(p, v1, True), _dist_to_wedge(p, v2, False))


def _line_meets_mu_cone(point: RealPoint2, direction: RealPoint2, mu: float) -> bool:
    """Does the full line {point + t*direction} meet {x^2 > mu^2, x0 > 0}?"""
    s = mink_square(direction)
    scale = direction.norm() ** 2
    if s > TAU_CLASS * scale:  # timelike: enters the forward branch
        return True
    if abs(s) <= TAU_CLASS * scale:  # lightlike
        sgn = math.copysign(1.0, direction.t) * math.copysign(1.0, direction.x)
        return point.t - sgn * point.x > 0
    sigma = direction.t / direction.x  # |sigma| < 1 (spacelike)
    c = point.t - sigma * point.x
    return c > mu * math.sqrt(1.0 - sigma * sigma)


@dataclass(frozen=True)
class CurveFamily:
    """Shifted hyperbola branches h(w, alpha) = apex + c*(e^-w eg + e^w ed)
    + alpha*ed, holomorphic in w with nonvanishing derivative.

    ``window`` is the closed parameter range on which the tangent-line
    condition was verified at build time; ``bad_window`` the compact range
    where the alpha = 0 branch leaves the spacelike complement of
    D_{0, s}; alpha_star the shift beyond which the whole branch is
    inside it.
    """

    apex: RealPoint2
    e_g: RealPoint2
    e_d: RealPoint2
    scale: float
    mu: float
    s: RealPoint2
    p: RealPoint2
    slope: float
    window: tuple[float, float]
    bad_window: tuple[float, float]
    alpha_star: float

    def point(self, t: float, alpha: float = 0.0) -> RealPoint2:
        a = self.scale * math.exp(-t)
        b = self.scale * math.exp(t) + alpha
        return RealPoint2(
            self.apex.t + a * self.e_g.t + b * self.e_d.t,
            self.apex.x + a * self.e_g.x + b * self.e_d.x,
        )

    def point_complex(self, w: complex, alpha: float = 0.0) -> ComplexPoint2:
        a = self.scale * cmath.exp(-w)
        b = self.scale * cmath.exp(w) + alpha
        return ComplexPoint2(
            self.apex.t + a * self.e_g.t + b * self.e_d.t,
            self.apex.x + a * self.e_g.x + b * self.e_d.x,
        )

    def tangent(self, t: float) -> RealPoint2:
        a = self.scale * math.exp(-t)
        b = self.scale * math.exp(t)
        return RealPoint2(
            -a * self.e_g.t + b * self.e_d.t, -a * self.e_g.x + b * self.e_d.x
        )


def build_hyperbola_family(
    p: RealPoint2,
    slope: float,
    s: RealPoint2,
    mu: float,
    scale: Optional[float] = None,
    t_span: float = 8.0,
    t_samples: int = 801,
    window_pad: float = 0.5,
) -> CurveFamily:
    """Construct and validate a hyperbola family for continuation.

    The asymptotes are the line through p with slope dx0/dx1 = ``slope``
    (|slope| < 1) and the diagonal; the apex sits at their crossing, and
    the branch opens toward p (p must lie right of the apex, the side the
    construction covers; mirror inputs for left-side points).  Build-time
    checks: the alpha = 0 branch leaves the spacelike complement of
    D_{0,s} only on a compact window, and on that window (padded) every
    tangent line meets the mass-mu cone.
    """
    if abs(slope) >= 1.0:
        raise BadGeometry("slope magnitude must be < 1")
    if not abs(p.x) > abs(p.t):
        raise BadGeometry("base point must be spacelike")
    if not p.x > 0:
        raise BadGeometry("base point must lie on the right (mirror inputs otherwise)")
    if not (s.t > abs(s.x)):
        raise BadGeometry("s must be forward timelike")
    # apex = crossing of g with the diagonal
    cval = p.t - slope * p.x
    q1 = cval / (1.0 - slope)
    apex = RealPoint2(q1, q1)
    if not p.x > apex.x:
        raise BadGeometry("base point must lie beyond the apex along the line")
    e_g = RealPoint2(slope, 1.0) * (1.0 / math.hypot(slope, 1.0))
    e_d = RealPoint2(1.0, 1.0) * (1.0 / SQRT2)
    if scale is None:
        scale = max((p - apex).norm() / 4.0, 1e-3)

    fam = CurveFamily(
        apex=apex,
        e_g=e_g,
        e_d=e_d,
        scale=scale,
        mu=mu,
        s=s,
        p=p,
        slope=slope,
        window=(0.0, 0.0),
        bad_window=(0.0, 0.0),
        alpha_star=0.0,
    )
    comp = SpacelikeComplementOfDoubleCone(RealPoint2(0, 0), s)
    ts = np.linspace(-t_span, t_span, t_samples)
    outside = [not contains(comp, fam.point(float(t))) for t in ts]
    if outside[0] or outside[-1]:
        raise BadGeometry("branch tails do not return to the spacelike complement")
    bad_idx = [i for i, o in enumerate(outside) if o]
    if bad_idx:
        bad_lo, bad_hi = float(ts[bad_idx[0]]), float(ts[bad_idx[-1]])
    else:
        bad_lo, bad_hi = -0.5, 0.5  # branch never leaves; keep a token window
    win_lo, win_hi = bad_lo - window_pad, bad_hi + window_pad

    # the contour's real span must sit inside the validated window, so the
    # tangent condition is enforced on the padded range, not just the bad set
    for t in np.linspace(win_lo, win_hi, max(64, t_samples // 4)):
        if not _line_meets_mu_cone(fam.point(float(t)), fam.tangent(float(t)), mu):
            raise BadGeometry(f"tangent line at t={t:.3f} misses the mass-{mu} cone")

    alpha_star = max(
        dist_to_spacelike_complement(fam.point(float(t)), s) for t in ts
    )
    return CurveFamily(
        apex=apex,
        e_g=e_g,
        e_d=e_d,
        scale=scale,
        mu=mu,
        s=s,
        p=p,
        slope=slope,
        window=(win_lo, win_hi),
        bad_window=(bad_lo, bad_hi),
        alpha_star=alpha_star,
    )


# ---------------------------------------------------------------------------
# contour quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Contour:
    """Closed smooth curve with uniform-parameter trapezoid weights.

    ``nodes`` are the quadrature points, ``dnodes`` the derivative times
    the parameter step, so a contour integral is sum(f * dnodes).
    """

    nodes: np.ndarray
    dnodes: np.ndarray

    @staticmethod
    def ellipse(center: complex, rx: float, ry: float, n: int = CONTOUR_NODES) -> "Contour":
        if n < 8:
            raise ValueError("need at least 8 nodes")
        th = 2.0 * np.pi * np.arange(n) / n
        nodes = center + rx * np.cos(th) + 1j * ry * np.sin(th)
        dnodes = (-rx * np.sin(th) + 1j * ry * np.cos(th)) * (2.0 * np.pi / n)
        return Contour(nodes=nodes, dnodes=dnodes)

    def spacing(self) -> float:
        d = np.abs(np.diff(np.concatenate([self.nodes, self.nodes[:1]])))
        return float(np.max(d))

    def halved(self) -> "Contour":
        return Contour(self.nodes[::2], 2.0 * self.dnodes[::2])


def cauchy_continue(
    f_on_contour: np.ndarray, w: Contour, target: complex
) -> tuple[complex, float]:
    """Cauchy-kernel trapezoid: (1/2пi) * sum f * dnodes / (nodes - target).

    Returns (value, error_estimate); the estimate is the difference
    against the half-node rule.  Raises when the target comes closer to
    the contour than the node spacing (the kernel is then under-resolved).
    """
    f_on_contour = np.asarray(f_on_contour, dtype=complex)
    if f_on_contour.shape != w.nodes.shape:
        raise ValueError("f_on_contour must match the contour nodes")
    if float(np.min(np.abs(w.nodes - target))) < w.spacing():
        raise TargetTooClose(f"target {target} is within one node spacing of the contour")
    full = np.sum(f_on_contour * w.dnodes / (w.nodes - target)) / (2j * np.pi)
    half = np.sum(
        f_on_contour[::2] * 2.0 * w.dnodes[::2] / (w.nodes[::2] - target)
    ) / (2j * np.pi)
    return complex(full), float(abs(full - half))


@dataclass
class ContinuationSlice:
    alpha: float
    targets: np.ndarray
    values: np.ndarray
    err_estimates: np.ndarray
    direct: Optional[np.ndarray] = None

    @property
    def max_deviation(self) -> float:
        if self.direct is None:
            return math.nan
        return float(np.max(np.abs(self.values - self.direct)))


@dataclass
class ContinuationResult:
    family: CurveFamily
    slices: list[ContinuationSlice] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        devs = [s.max_deviation for s in self.slices if s.direct is not None]
        return max(devs) if devs else math.nan


def continue_along_family(
    f: Callable[[ComplexPoint2], complex],
    fam: CurveFamily,
    alpha_path: Sequence[float],
    nodes: int = CONTOUR_NODES,
    n_targets: int = 41,
    contour_height: float = 0.4,
    compare_direct: bool = True,
) -> ContinuationResult:
    """Continue f along the shifted branches of the family.

    For each shift the contour is an ellipse in the parameter plane around
    the (padded) bad window; f is sampled on the image of the contour and
    evaluated at real parameters inside by the Cauchy kernel.  When
    ``compare_direct`` is set (test functions with a global formula) the
    direct values are stored for deviation reports.
    """
    lo, hi = fam.window
    center = 0.5 * (lo + hi)
    rx = 0.5 * (hi - lo) + 0.6
    result = ContinuationResult(family=fam)
    for alpha in alpha_path:
        w = Contour.ellipse(complex(center), rx, contour_height, nodes)
        samples = np.array([f(fam.point_complex(complex(r), alpha)) for r in w.nodes])
        targets = np.linspace(lo, hi, n_targets)
        vals = np.empty(n_targets, dtype=complex)
        errs = np.empty(n_targets)
        for k, t in enumerate(targets):
            vals[k], errs[k] = cauchy_continue(samples, w, complex(t))
        direct = None
        if compare_direct:
            direct = np.array(
                [f(fam.point_complex(complex(t), alpha)) for t in targets]
            )
        result.slices.append(
            ContinuationSlice(
                alpha=float(alpha),
                targets=targets,
                values=vals,
                err_estimates=errs,
                direct=direct,
            )
        )
    return result


# ---------------------------------------------------------------------------
# maximum-principle ingredient
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaxPrincipleReport:
    interior_sup: float
    boundary_sup: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.interior_sup <= self.boundary_sup + self.tolerance


def max_principle_check(
    surface: Callable[[complex], ComplexPoint2],
    f: Callable[[ComplexPoint2], complex],
    delta: float,
    grid: tuple[int, int] = (41, 17),
    tolerance: float = 1e-9,
) -> MaxPrincipleReport:
    """Interior vs. boundary modulus supremum on an analytic disc patch.

    The patch is surface(xi + i*eta) over the strip 0 <= xi <= 1,
    |eta| <= delta.  For holomorphic f the interior supremum cannot exceed
    the boundary supremum; non-holomorphic controls may violate this and
    simply report passed = False.
    """
    nx, ny = grid
    xis = np.linspace(0.0, 1.0, nx)
    etas = np.linspace(-delta, delta, ny)

    def modulus(xi: float, eta: float) -> float:
        return abs(f(surface(complex(xi, eta))))

    interior = max(
        modulus(xi, eta) for xi in xis[1:-1] for eta in etas[1:-1]
    )
    boundary_vals = []
    for xi in xis:
        boundary_vals.append(modulus(xi, etas[0]))
        boundary_vals.append(modulus(xi, etas[-1]))
    for eta in etas:
        boundary_vals.append(modulus(xis[0], eta))
        boundary_vals.append(modulus(xis[-1], eta))
    return MaxPrincipleReport(
        interior_sup=float(interior),
        boundary_sup=float(max(boundary_vals)),
        tolerance=tolerance,
    )


def default_test_functions(mu: float = 1.0) -> list[tuple[str, Callable]]:
    """Fixed continuation test suite: entire polynomials plus rationals
    with documented pole placement (one far plane pole, one pole on the
    real excluded quadric 0 < z^2 < mu^2, both away from the integration
    geometry)."""

    def poly3(z: ComplexPoint2) -> complex:
        return z.t**3 - 2.0 * z.t * z.x + 0.5

    def poly5(z: ComplexPoint2) -> complex:
        return 0.1 * z.x**5 - z.t**2 * z.x**2 + 3.0 * z.x - 1.0

    def rational_far(z: ComplexPoint2) -> complex:
        return 1.0 / (z.t - 10.0)  # pole plane Re z0 = 10

    def rational_excluded(z: ComplexPoint2) -> complex:
        return 1.0 / (mink_square(z) - 0.5 * mu * mu)  # pole on 0 < z^2 < mu^2

    return [
        ("poly3", poly3),
        ("poly5", poly5),
        ("rational_far_pole", rational_far),
        ("rational_excluded_pole", rational_excluded),
    ]
