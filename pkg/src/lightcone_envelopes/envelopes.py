"""Envelope-of-holomorphy membership predicates.

Three closed forms (mass-gap cone, hyperboloid shell, shell complement)
and a generic witness search over admissible hyperboloids/hyperplanes.
A complex point is excluded exactly when it lies on the closure of some
admissible quadric complexification; the closed forms below enumerate
that closure by the causal class of the imaginary part:

* Im z timelike            -> inside (the point sits in a tube);
* Im z spacelike           -> a half-space condition on Re z against the
                              dual unit vector of Im z (cone), or a strip
                              between two hyperbola branches (shell);
* Im z lightlike, nonzero  -> the limiting half-plane condition
                              x0 > x1 * sgn(y0) * sgn(y1);
* Im z = 0                 -> the real trace equals the coincidence
                              region itself.

The searches never reuse the closed-form dual vector: plane witnesses are
found by bisecting a.y = 0 over a boost grid, hyperboloid witnesses by
grid-plus-golden-section refinement of the admissibility margin, so each
closed form has a genuinely independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .admissible import HyperboloidParam, is_admissible_hyperboloid
from .config import DEFAULT_BUDGET, SearchBudget, TAU_CLASS, TOL_ENV, TOL_ENV_SEARCH
from .errors import PreconditionFailed, UnsupportedRegion
from .minkowski import (
    CausalClass,
    ComplexPoint2,
    RealPoint2,
    as_complex,
    classify,
    hat_dual,
    mink_dot,
    mink_square,
)
from .regions import (
    DoubleCone,
    ForwardCone,
    HyperboloidShell,
    MuCone,
    Region,
    UnionOf,
    Wedge,
    contains,
)


class Verdict(Enum):
    INSIDE = "inside"
    EXCLUDED = "excluded"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class EnvelopeVerdict:
    """Membership verdict with the signed margin of the deciding quantity
    (positive toward the inside)."""

    kind: Verdict
    margin: float

    @property
    def is_inside(self) -> bool:
        return self.kind is Verdict.INSIDE

    @property
    def is_excluded(self) -> bool:
        return self.kind is Verdict.EXCLUDED

    @property
    def is_boundary(self) -> bool:
        return self.kind is Verdict.BOUNDARY


def verdict_from_margin(margin: float, tol: float = TOL_ENV) -> EnvelopeVerdict:
    if margin > tol:
        return EnvelopeVerdict(Verdict.INSIDE, margin)
    if margin < -tol:
        return EnvelopeVerdict(Verdict.EXCLUDED, margin)
    return EnvelopeVerdict(Verdict.BOUNDARY, margin)


def _inside(margin: float) -> EnvelopeVerdict:
    return EnvelopeVerdict(Verdict.INSIDE, margin)


# ---------------------------------------------------------------------------
# closed form: mass-gap cone
# ---------------------------------------------------------------------------


def envelope_mu_cone(
    z: ComplexPoint2, mu: float, tol: float = TOL_ENV, tau: float = TAU_CLASS
) -> EnvelopeVerdict:
    """Envelope membership for the coincidence region {x^2 > mu^2, x0 > 0}.

    Inside iff z lies in a tube, or Im z is spacelike with
    Re z . hat(Im z) > mu, or Im z is lightlike nonzero with
    x0 > x1 sgn(y0) sgn(y1), or Im z = 0 with Re z in the open cone.
    """
    if mu < 0:
        raise ValueError("mu must be >= 0")
    z = as_complex(z)
    x, y = z.re, z.im
    cls = classify(y, tau)
    if cls in (CausalClass.TIMELIKE_FORWARD, CausalClass.TIMELIKE_BACKWARD):
        return _inside(mink_square(y))
    if cls is CausalClass.ZERO:
        if x.t <= 0:
            return verdict_from_margin(min(x.t, mink_square(x) - mu * mu), tol)
        return verdict_from_margin(mink_square(x) - mu * mu, tol)
    if cls is CausalClass.SPACELIKE:
        return verdict_from_margin(mink_dot(x, hat_dual(y, tau)) - mu, tol)
    sgn = math.copysign(1.0, y.t) * math.copysign(1.0, y.x)
    return verdict_from_margin(x.t - x.x * sgn, tol)


# ---------------------------------------------------------------------------
# closed form: hyperboloid shell
# ---------------------------------------------------------------------------


def shell_boundary_curves(
    x1: float, y: RealPoint2, m1: float, m2: float
) -> tuple[float, float]:
    """Lower/upper real-time boundary (F-, F+) of the shell envelope slice
    at spacelike y, valid for -((m2-m1)/2)^2 < y^2 < 0."""
    yh = hat_dual(y)
    lam0 = 0.5 * (m2 - m1)
    big = 0.5 * (m2 + m1)
    ysq = mink_square(y)
    u = math.sqrt(lam0 * lam0 + ysq)
    f_minus = -yh.t * u + math.sqrt(big * big + (x1 + yh.x * u) ** 2)
    f_plus = yh.t * u + math.sqrt(big * big + (x1 - yh.x * u) ** 2)
    return f_minus, f_plus


def envelope_hyperboloid_shell(
    z: ComplexPoint2,
    m1: float,
    m2: float,
    tol: float = TOL_ENV,
    tau: float = TAU_CLASS,
) -> EnvelopeVerdict:
    """Envelope membership for the shell {m1^2 < x^2 < m2^2, x0 > 0}.

    For spacelike Im z the real part must lie strictly between the two
    hyperbola branches F-+; slices with y^2 <= -((m2-m1)/2)^2 are entirely
    excluded (the two branches cross).  The printed range condition for
    y^2 is taken as -((m2-m1)/2)^2 < y^2 < 0, the only reading under which
    the boundary radicals stay real and y has a dual vector.
    """
    if not (0 < m1 < m2):
        raise ValueError("need 0 < m1 < m2")
    z = as_complex(z)
    x, y = z.re, z.im
    cls = classify(y, tau)
    if cls in (CausalClass.TIMELIKE_FORWARD, CausalClass.TIMELIKE_BACKWARD):
        return _inside(mink_square(y))
    if cls is CausalClass.ZERO:
        s = mink_square(x)
        if x.t <= 0:
            return verdict_from_margin(
                min(x.t, s - m1 * m1, m2 * m2 - s), tol
            )
        return verdict_from_margin(min(s - m1 * m1, m2 * m2 - s), tol)
    if cls is CausalClass.SPACELIKE:
        lam0 = 0.5 * (m2 - m1)
        ysq = mink_square(y)
        head = lam0 * lam0 + ysq
        if head <= tol:
            return verdict_from_margin(head, tol)
        f_minus, f_plus = shell_boundary_curves(x.x, y, m1, m2)
        return verdict_from_margin(min(x.t - f_minus, f_plus - x.t), tol)
    sgn = math.copysign(1.0, y.t) * math.copysign(1.0, y.x)
    return verdict_from_margin(x.t - x.x * sgn, tol)


# ---------------------------------------------------------------------------
# closed form: complement of a shell of admissible radii (z^2 test)
# ---------------------------------------------------------------------------


def envelope_shell_complement(
    z: ComplexPoint2, m: float, tol: float = TOL_ENV
) -> EnvelopeVerdict:
    """Membership in the complement of {z | z^2 real in [0, m^2]}.

    The bilinear square w = z^2 decides: excluded iff |Im w| <= tol and
    -tol <= Re w <= m^2 + tol (the tolerance-fattened segment); points
    outside that box but within tol of it report Boundary.  The margin is
    the distance from w to the exact segment [0, m^2].
    """
    if not m > 0:
        raise ValueError("m must be > 0")
    z = as_complex(z)
    w = mink_square(z)
    re, im = w.real, w.imag
    dre = max(0.0, -re, re - m * m)
    d = math.hypot(dre, im)
    if abs(im) <= tol and -tol <= re <= m * m + tol:
        return EnvelopeVerdict(Verdict.EXCLUDED, -d)
    dbox = max(abs(im) - tol, -tol - re, re - (m * m + tol))
    if dbox <= tol:
        return EnvelopeVerdict(Verdict.BOUNDARY, d)
    return _inside(d)


# ---------------------------------------------------------------------------
# plane-witness search (independent cross-check of the cone closed form)
# ---------------------------------------------------------------------------


def _plane_witness_margin_spacelike(
    x: RealPoint2, y: RealPoint2, mu: float, budget: SearchBudget
) -> float:
    """Signed exclusion margin at spacelike y via admissible planes.

    A plane through z needs a backward causal normal a with a.y = 0; the
    boost angle of that normal is bisected from a sign change of a.y over
    the grid (never via the closed-form dual vector).  The returned value
    is a.x - sup(a.x over the cone); >= 0 means a witness plane exists.
    """

    def a_dot_y(psi: float) -> float:
        return -(y.t * math.cosh(psi) - y.x * math.sinh(psi))

    grid = np.linspace(-budget.psi_max, budget.psi_max, budget.psi_grid)
    vals = [a_dot_y(p) for p in grid]
    bracket = None
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            bracket = (grid[i], grid[i])
            break
        if vals[i] * vals[i + 1] < 0:
            bracket = (grid[i], grid[i + 1])
            break
    if bracket is None:
        raise PreconditionFailed(
            "no orthogonal backward normal within the boost budget; "
            "increase psi_max"
        )
    lo, hi = bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < 1e-15:
            break
        if a_dot_y(lo) * a_dot_y(mid) <= 0:
            hi = mid
        else:
            lo = mid
    psi = 0.5 * (lo + hi)
    a = RealPoint2(-math.cosh(psi), -math.sinh(psi))  # unit backward normal
    return mink_dot(a, x) + mu  # sup over cone is -mu for unit normals


def _plane_witness_margin_real(
    x: RealPoint2, mu: float, budget: SearchBudget
) -> float:
    """Max over backward causal normals of a.x - sup(a.x over the cone)
    for a real query point; >= 0 means some admissible plane passes
    through x."""

    def margin(psi: float) -> float:
        a = RealPoint2(-math.cosh(psi), -math.sinh(psi))
        return mink_dot(a, x) + mu

    grid = np.linspace(-budget.psi_max, budget.psi_max, budget.psi_grid)
    vals = [margin(p) for p in grid]
    k = int(np.argmax(vals))
    lo = grid[max(0, k - 1)]
    hi = grid[min(len(grid) - 1, k + 1)]
    phi_ratio = (math.sqrt(5) - 1) / 2
    a_, b_ = lo, hi
    c_ = b_ - phi_ratio * (b_ - a_)
    d_ = a_ + phi_ratio * (b_ - a_)
    for _ in range(budget.refine_steps):
        if margin(c_) > margin(d_):
            b_, d_ = d_, c_
            c_ = b_ - phi_ratio * (b_ - a_)
        else:
            a_, c_ = c_, d_
            d_ = a_ + phi_ratio * (b_ - a_)
    best = max(vals[k], margin(0.5 * (a_ + b_)))
    # lightlike limit normals a = -(1, +-1): sup over the cone is 0
    for sx in (1.0, -1.0):
        best = max(best, -(x.t - sx * x.x))
    return best


# ---------------------------------------------------------------------------
# hyperboloid-witness search
# ---------------------------------------------------------------------------


def _shell_violation(
    xp: RealPoint2, lam: float, m1: float, m2: float
) -> float:
    """Admissibility margin for the shell closed form; <= 0 is admissible."""
    fwd = abs(xp.x) - xp.t  # <= 0 iff x' in the closed forward cone
    alpha = math.sqrt(max(0.0, mink_square(xp)))
    need = max(m2 - alpha, alpha - m1)
    return max(fwd, need - lam)


def _admissibility_violation(xp: RealPoint2, lam: float, r: Region) -> float:
    """Signed admissibility margin (<= 0 means admissible); continuous for
    shells, diamonds and diamond unions, a +-1 indicator otherwise."""
    if isinstance(r, HyperboloidShell):
        return _shell_violation(xp, lam, r.m1, r.m2)
    if isinstance(r, DoubleCone):
        from .regions import side_vertices

        v1, v2 = side_vertices(r.a, r.b)
        worst = max(mink_square(v - xp) for v in (r.a, v1, r.b, v2))
        return worst - lam * lam
    if isinstance(r, UnionOf) and all(isinstance(p, DoubleCone) for p in r.parts):
        return max(_admissibility_violation(xp, lam, p) for p in r.parts)
    ok = is_admissible_hyperboloid(HyperboloidParam(xp, lam), r)
    return -1.0 if ok else 1.0


def _golden_min(f, lo: float, hi: float, steps: int) -> float:
    ratio = (math.sqrt(5) - 1) / 2
    a_, b_ = lo, hi
    c_ = b_ - ratio * (b_ - a_)
    d_ = a_ + ratio * (b_ - a_)
    for _ in range(steps):
        if f(c_) < f(d_):
            b_, d_ = d_, c_
            c_ = b_ - ratio * (b_ - a_)
        else:
            a_, c_ = c_, d_
            d_ = a_ + ratio * (b_ - a_)
    return f(0.5 * (a_ + b_))


def _hyperboloid_witness_real(
    x: RealPoint2, r: Region, budget: SearchBudget
) -> float:
    """Min admissibility violation over hyperboloids through a real point.

    Centers x' = x -+ lam*(cosh psi, sinh psi) sweep both time
    orientations on a coarse grid; the best cell is polished by a
    golden-section sweep in lam.  <= 0 means a witness exists.
    """
    psis = np.linspace(-budget.psi_max, budget.psi_max, budget.psi_grid)
    lams = np.geomspace(1e-3, budget.lam_max, budget.lam_grid)

    def violation(psi: float, lam: float, sgn: float) -> float:
        xp = RealPoint2(
            x.t - sgn * lam * math.cosh(psi), x.x - sgn * lam * math.sinh(psi)
        )
        return _admissibility_violation(xp, lam, r)

    best = math.inf
    best_args = None
    for sgn in (1.0, -1.0):
        for psi in psis:
            for lam in lams:
                v = violation(psi, lam, sgn)
                if v < best:
                    best = v
                    best_args = (psi, lam, sgn)
    if best_args is None:
        return best
    psi, lam, sgn = best_args
    polished = _golden_min(
        lambda la: violation(psi, la, sgn),
        lam / 4.0,
        min(budget.lam_max, lam * 4.0),
        budget.refine_steps,
    )
    return min(best, polished)


def _hyperboloid_witness_spacelike(
    x: RealPoint2, y: RealPoint2, r: Region, budget: SearchBudget
) -> float:
    """Min admissibility violation over hyperboloids through x + iy with
    spacelike y.

    Orthogonality pins x - x' to the dual direction of y, so the center is
    x -+ sqrt(lam^2 + y^2) * hat(y) and only (sign, lam) remain.
    """
    yh = hat_dual(y)
    ysq = mink_square(y)
    lam_lo = math.sqrt(max(0.0, -ysq)) + 1e-12
    if lam_lo >= budget.lam_max:
        return math.inf
    lams = np.geomspace(lam_lo, budget.lam_max, budget.lam_grid * budget.psi_grid // 8)

    def violation(lam: float, sgn: float) -> float:
        mu_hat = sgn * math.sqrt(max(0.0, lam * lam + ysq))
        xp = x - mu_hat * yh
        return _admissibility_violation(xp, lam, r)

    best = math.inf
    best_args = None
    for sgn in (1.0, -1.0):
        for lam in lams:
            v = violation(lam, sgn)
            if v < best:
                best = v
                best_args = (lam, sgn)
    if best_args is None:
        return best
    lam, sgn = best_args
    polished = _golden_min(
        lambda la: violation(la, sgn),
        max(lam_lo, lam / 4.0),
        min(budget.lam_max, lam * 4.0),
        budget.refine_steps,
    )
    return min(best, polished)


def jld_excluded(
    z: ComplexPoint2,
    r: Region,
    budget: SearchBudget = DEFAULT_BUDGET,
    tol: float = TOL_ENV_SEARCH,
) -> EnvelopeVerdict:
    """Witness search: is z on the closure of an admissible quadric of r?

    Regions whose admissible-hyperboloid set is empty (cones, and unions
    containing one) are handled through admissible planes; bounded regions
    and shells through hyperboloids.  For unions that are not pairwise
    spacelike the Inside verdict is one-sided (a found witness always
    proves exclusion, but exhaustiveness of the search needs the
    spacelike-components hypothesis).

    Lightlike imaginary parts arise only as closure limits, which the
    search cannot reach; they are answered by the limiting half-plane rule
    for cones and shells and rejected otherwise.
    """
    z = as_complex(z)
    x, y = z.re, z.im
    cls = classify(y)

    if cls in (CausalClass.TIMELIKE_FORWARD, CausalClass.TIMELIKE_BACKWARD):
        # orthogonality would force a spacelike center offset with negative
        # squared radius: no witness can exist
        return _inside(abs(mink_square(y)))

    if isinstance(r, (MuCone, ForwardCone)):
        mu, apex = (r.mu, r.apex) if isinstance(r, MuCone) else (0.0, r.apex)
        xs = x - apex
        if cls is CausalClass.ZERO:
            margin = _plane_witness_margin_real(xs, mu, budget)
        elif cls is CausalClass.SPACELIKE:
            margin = _plane_witness_margin_spacelike(xs, y, mu, budget)
        else:
            sgn = math.copysign(1.0, y.t) * math.copysign(1.0, y.x)
            margin = -(xs.t - xs.x * sgn)
        return verdict_from_margin(-margin, tol)

    if isinstance(r, (HyperboloidShell, DoubleCone)):
        if cls is CausalClass.ZERO:
            v = _hyperboloid_witness_real(x, r, budget)
        elif cls is CausalClass.SPACELIKE:
            v = _hyperboloid_witness_spacelike(x, y, r, budget)
        else:
            if isinstance(r, HyperboloidShell):
                sgn = math.copysign(1.0, y.t) * math.copysign(1.0, y.x)
                return verdict_from_margin(x.t - x.x * sgn, tol)
            raise UnsupportedRegion(
                "lightlike imaginary parts are closure limits the sampled "
                "search cannot certify for double cones"
            )
        return verdict_from_margin(v, tol)

    if isinstance(r, UnionOf):
        if cls not in (CausalClass.ZERO, CausalClass.SPACELIKE):
            raise UnsupportedRegion("unions support real or spacelike-Im queries")
        if all(isinstance(p, DoubleCone) for p in r.parts):
            if cls is CausalClass.ZERO:
                v = _hyperboloid_witness_real(x, r, budget)
            else:
                v = _hyperboloid_witness_spacelike(x, y, r, budget)
            return verdict_from_margin(v, tol)
        # mixed unions: the hyperboloid set is empty once a cone is present,
        # so only planes jointly admissible to every part can exclude
        from .admissible import PlaneParam, is_admissible_plane

        if cls is CausalClass.SPACELIKE:
            yh = hat_dual(y)  # a.y = 0 pins the normal direction
            p = PlaneParam(x, RealPoint2(-yh.t, -yh.x))
            return verdict_from_margin(-1.0 if is_admissible_plane(p, r) else 1.0, tol)
        grid = np.linspace(-budget.psi_max, budget.psi_max, budget.psi_grid)
        found = any(
            is_admissible_plane(PlaneParam(x, RealPoint2(-math.cosh(p), -math.sinh(p))), r)
            for p in grid
        )
        return verdict_from_margin(-1.0 if found else 1.0, tol)

    raise UnsupportedRegion(f"jld search does not support {type(r).__name__}")


# ---------------------------------------------------------------------------
# line membership under upward-invariant regions
# ---------------------------------------------------------------------------


def _line_meets_region(
    a: RealPoint2, y: RealPoint2, r: Region, budget: SearchBudget
) -> bool:
    ts = np.linspace(-budget.line_half_range, budget.line_half_range, budget.line_points)
    return any(contains(r, a + float(t) * y) for t in ts)


def line_point_in_envelope(
    a: RealPoint2,
    y: RealPoint2,
    t: float,
    tau: float,
    r: Region,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> EnvelopeVerdict:
    """Non-real points of a real line meeting an upward-invariant region.

    For regions invariant under adding forward timelike vectors, every
    point a + (t + i*tau)*y with tau != 0 of a line that meets the region
    lies in the envelope.  The verdict is cross-checked against the cone
    closed form through the translation-invariance argument: the real part
    can be slid along the line into the cone without changing Im z.
    """
    if y.norm() <= TAU_CLASS:
        raise PreconditionFailed("y must be nonzero")
    if tau == 0:
        raise PreconditionFailed("tau must be nonzero")
    if isinstance(r, UnionOf):
        for part in r.parts:
            if isinstance(part, (ForwardCone, MuCone)) and _line_meets_region(
                a, y, part, budget
            ):
                return line_point_in_envelope(a, y, t, tau, part, budget)
        raise PreconditionFailed("line does not meet any invariant part")
    if not isinstance(r, (ForwardCone, MuCone)):
        raise PreconditionFailed("region must satisfy r + V+ = r (cone types)")
    if not _line_meets_region(a, y, r, budget):
        raise PreconditionFailed("line does not meet the region (sampled check)")
    mu, apex = (r.mu, r.apex) if isinstance(r, MuCone) else (0.0, r.apex)
    x = a + t * y
    z = ComplexPoint2.from_parts(x - apex, tau * y)
    check = envelope_mu_cone(z, mu)
    if check.is_excluded:
        # cannot happen when the preconditions hold; surface the margin
        raise PreconditionFailed(
            f"closed-form cross-check rejected the point (margin {check.margin})"
        )
    return check


# ---------------------------------------------------------------------------
# wedge-invariant membership rules
# ---------------------------------------------------------------------------


def _lightlike_line_meets(
    base: RealPoint2, direction: RealPoint2, r: Wedge, budget: SearchBudget
) -> bool:
    """Does {base + t*direction} meet the closed wedge?"""
    ts = np.linspace(-budget.line_half_range, budget.line_half_range, budget.line_points)
    for t in ts:
        q = base + float(t) * direction - r.shift
        if q.x + TAU_CLASS >= abs(q.t):
            return True
    return False


def wedge_hyperbola_membership(
    z: ComplexPoint2,
    ztilde: RealPoint2,
    mparam: float,
    r: Wedge,
    tol: float = TOL_ENV,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> EnvelopeVerdict:
    """Certified hyperbola points for wedge-invariant coincidence regions.

    Non-real solutions of (z - ztilde)^2 = mparam lie in the envelope when
    ztilde sits on a lightlike line meeting the closed region and mparam
    respects the sign rule (any nonzero value if ztilde is in the closure,
    strictly negative otherwise).  A verdict of Excluded means only that z
    does not satisfy the quadric equation within tolerance; it makes no
    claim about the true envelope.
    """
    z = as_complex(z)
    if z.im.norm() <= TAU_CLASS:
        raise PreconditionFailed("z must not be real")
    if not isinstance(r, Wedge):
        raise PreconditionFailed("region must be a wedge (r + W = r)")
    on_line = _lightlike_line_meets(
        ztilde, RealPoint2(1, 1), r, budget
    ) or _lightlike_line_meets(ztilde, RealPoint2(1, -1), r, budget)
    if not on_line:
        raise PreconditionFailed("ztilde is not on a lightlike line meeting closure(r)")
    q = ztilde - r.shift
    in_closure = q.x + TAU_CLASS >= abs(q.t)
    if in_closure:
        if mparam == 0:
            raise PreconditionFailed("mparam must be nonzero for ztilde in closure(r)")
    elif not mparam < 0:
        raise PreconditionFailed("mparam must be < 0 for ztilde outside closure(r)")
    zt = as_complex(ztilde)
    residual = abs(mink_square(z - zt) - mparam)
    if residual <= tol:
        return _inside(residual)
    return EnvelopeVerdict(Verdict.EXCLUDED, -residual)


def wedge_lightlike_line_membership(
    a: RealPoint2,
    b: RealPoint2,
    t: float,
    tau: float,
    r: Wedge,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> EnvelopeVerdict:
    """Non-real points a + (t + i*tau)*b of a lightlike line that meets the
    closed wedge lie in the envelope."""
    if abs(mink_square(b)) > TAU_CLASS or b.norm() <= TAU_CLASS:
        raise PreconditionFailed("b must be lightlike and nonzero")
    if tau == 0:
        raise PreconditionFailed("tau must be nonzero")
    if not _lightlike_line_meets(a, b, r, budget):
        raise PreconditionFailed("line does not meet closure(r)")
    return _inside(abs(tau) * b.norm())


def double_cone_quadric_membership(
    z: ComplexPoint2,
    xtilde: RealPoint2,
    a: RealPoint2,
    b: RealPoint2,
    tol: float = TOL_ENV,
    tau: float = TAU_CLASS,
) -> EnvelopeVerdict:
    """Certified quadric points for regions containing a double cone.

    Non-real solutions of (z - xtilde)^2 = (b - xtilde)^2 with xtilde in
    the upper half of the diamond ((xtilde-a)^2 > (xtilde-b)^2) lie in the
    envelope of any coincidence region containing the diamond.  Excluded
    means only "not on this quadric".
    """
    z = as_complex(z)
    if z.im.norm() <= tau:
        raise PreconditionFailed("z must not be real")
    dc = DoubleCone(a, b)
    if not contains(dc, xtilde, tau):
        raise PreconditionFailed("xtilde must lie in the open double cone")
    if not mink_square(xtilde - a) > mink_square(xtilde - b) + tau:
        raise PreconditionFailed("xtilde must lie in the upper half of the diamond")
    target = mink_square(as_complex(b) - as_complex(xtilde))
    residual = abs(mink_square(z - as_complex(xtilde)) - target)
    if residual <= tol:
        return _inside(residual)
    return EnvelopeVerdict(Verdict.EXCLUDED, -residual)
