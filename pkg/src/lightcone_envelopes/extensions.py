"""Envelope enlargements built from tangent lines and timelike hulls.

Three constructions:

* ``dhat``: enlarge a diamond coincidence region next to a mass-gap cone
  by sweeping forward/backward cones along the tangent segment from each
  vertex to the cone (segment toward the contact point from the bottom
  vertex, half-line away from the cone from the top vertex);

* ``double_cone_theorem_hull``: two points of a coincidence region joined
  by a timelike curve inside it span a diamond inside the real trace of
  the envelope;

* ``two_double_cone_extension``: for a coincidence region made of two
  diamonds in normalized position, conjugate by the reciprocal-radii
  inversion, apply the tangent construction against the resulting shifted
  cone (tangents through a cone apex are the chords to the apex), and map
  back; the enlargement is bounded by hyperbola and lightlike arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT_BUDGET, SearchBudget, TAU_CLASS, TOL_SING
from .errors import (
    NoTangent,
    PreconditionFailed,
    UnsupportedConfiguration,
)
from .minkowski import (
    RealPoint2,
    in_closed_backward,
    in_closed_forward,
    is_forward,
    mink_square,
)
from .regions import DoubleCone, Region, contains, sample_interior, side_vertices
from .transforms import phi


# ---------------------------------------------------------------------------
# tangent lines to the mass-gap hyperbola
# ---------------------------------------------------------------------------


def tangent_parameters(v: RealPoint2, mu: float) -> list[float]:
    """Boost parameters u with v0*cosh(u) - v1*sinh(u) = mu.

    The tangent line to {x^2 = mu^2, x0 > 0} at mu*(cosh u, sinh u) is
    {x | x0*cosh u - x1*sinh u = mu}; it passes through v exactly at the
    roots returned here (none for v in the closed past or above the
    hyperbola, one for spacelike or forward-lightlike v, two for forward
    timelike v below the hyperbola).
    """
    if not mu > 0:
        raise ValueError("mu must be > 0")
    A, B = v.t, -v.x
    s = A * A - B * B  # = v^2
    if abs(s) <= TAU_CLASS * max(1.0, A * A + B * B):
        # lightlike vertex: A*e^{-u} or A*e^{u} = mu
        if A <= 0:
            return []
        if B == -A:  # v = (c, c): A*e^{-u} = mu
            return [-math.log(mu / A)]
        return [math.log(mu / A)]  # v = (c, -c): A*e^{u} = mu
    if s > 0:
        if A < 0:
            return []
        r = math.sqrt(s)
        if mu < r:
            return []
        eta = math.atanh(B / A)
        if mu == r:
            return [-eta]
        d = math.acosh(mu / r)
        return [-eta - d, -eta + d]
    r = math.sqrt(-s)
    eta = math.atanh(A / B)
    return [math.asinh(mu * math.copysign(1.0, B) / r) - eta]


def tangent_contact(v: RealPoint2, mu: float) -> tuple[float, RealPoint2]:
    """The tangent solution whose contact point is nearest to v.

    Spacelike and lightlike vertices have a single tangent; for forward
    timelike vertices below the hyperbola the nearer of the two contacts
    is selected (deterministic, documented choice).
    """
    us = tangent_parameters(v, mu)
    if not us:
        raise NoTangent(f"no tangent line through {v} to the mass-{mu} hyperbola")
    best = min(
        us,
        key=lambda u: (RealPoint2(mu * math.cosh(u), mu * math.sinh(u)) - v).norm(),
    )
    return best, RealPoint2(mu * math.cosh(best), mu * math.sinh(best))


# ---------------------------------------------------------------------------
# cones swept along a segment or ray
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConeOverSegment:
    """{base + theta*delta : 0 <= theta <= theta_max} + V^(sign).

    Membership reduces to a one-dimensional feasibility interval in theta
    because the cone conditions are linear in the lightcone coordinates.
    """

    base: RealPoint2
    delta: RealPoint2
    theta_max: float  # math.inf for half-lines
    sign: int  # +1 sweeps forward cones, -1 backward

    def contains(self, p: RealPoint2, tau: float = TAU_CLASS) -> bool:
        q = p - self.base
        lo, hi = 0.0, self.theta_max
        for coord, dcoord in (
            (q.t - q.x, self.delta.t - self.delta.x),
            (q.t + q.x, self.delta.t + self.delta.x),
        ):
            c = self.sign * coord
            d = self.sign * dcoord
            # need c - theta*d > tau on some feasible theta
            if d > 0:
                hi = min(hi, (c - tau) / d)
            elif d < 0:
                lo = max(lo, (c - tau) / d)
            elif c <= tau:
                return False
        return lo <= hi


@dataclass(frozen=True)
class DhatPiece:
    sweep: ConeOverSegment
    cone_apex: RealPoint2
    cone_sign: int

    def contains(self, p: RealPoint2, tau: float = TAU_CLASS) -> bool:
        q = p - self.cone_apex
        if self.cone_sign > 0:
            if not (q.t - tau > abs(q.x)):
                return False
        else:
            if not (-q.t - tau > abs(q.x)):
                return False
        return self.sweep.contains(p, tau)


@dataclass(frozen=True)
class DhatRegion:
    """Enlarged coincidence region next to a mass-gap cone.

    ``pieces`` is empty iff degenerate, in which case the region is the
    diamond itself (no enlargement: diamond inside the forward cone, or
    both vertices in the closed past).
    """

    double_cone: DoubleCone
    mu: float
    degenerate: bool
    case: str
    pieces: tuple
    tangent_a: Optional[tuple[float, RealPoint2]]
    tangent_b: Optional[tuple[float, RealPoint2]]

    def contains(self, p: RealPoint2, tau: float = TAU_CLASS) -> bool:
        if self.degenerate:
            return contains(self.double_cone, p, tau)
        return any(piece.contains(p, tau) for piece in self.pieces)


def dhat(a: RealPoint2, b: RealPoint2, mu: float) -> DhatRegion:
    """Tangent-segment enlargement of the diamond D_{a,b} against the
    mass-mu cone.

    The bottom piece sweeps forward cones along the segment from a to its
    tangent contact, clipped to b + V-; the top piece sweeps backward
    cones along the half-line from b pointing away from the cone, clipped
    to a + V+.  Vertices in the closed past contribute no tangent and drop
    their piece; if the diamond already sits inside the forward cone the
    construction degenerates to the diamond itself.
    """
    dc = DoubleCone(a, b)
    if in_closed_forward(a):
        return DhatRegion(dc, mu, True, "inside_forward_cone", (), None, None)
    a_past = in_closed_backward(a)
    b_past = in_closed_backward(b)
    if a_past and b_past:
        return DhatRegion(dc, mu, True, "both_vertices_past", (), None, None)

    tan_a = tan_b = None
    pieces = []
    if not a_past:
        tan_a = tangent_contact(a, mu)
        seg = tan_a[1] - a
        pieces.append(
            DhatPiece(
                sweep=ConeOverSegment(a, seg, 1.0, +1), cone_apex=b, cone_sign=-1
            )
        )
    if not b_past:
        tan_b = tangent_contact(b, mu)
        away = b - tan_b[1]
        n = away.norm()
        if n <= TAU_CLASS:
            raise NoTangent("top vertex coincides with its tangent contact")
        pieces.append(
            DhatPiece(
                sweep=ConeOverSegment(b, (1.0 / n) * away, math.inf, -1),
                cone_apex=a,
                cone_sign=+1,
            )
        )
    case = (
        "two_pieces"
        if len(pieces) == 2
        else ("bottom_piece_only" if not a_past else "top_piece_only")
    )
    return DhatRegion(dc, mu, False, case, tuple(pieces), tan_a, tan_b)


# ---------------------------------------------------------------------------
# timelike-hull rule
# ---------------------------------------------------------------------------


def _segment_in_region(
    r: Region, p: RealPoint2, q: RealPoint2, nsamples: int
) -> bool:
    for s in np.linspace(0.0, 1.0, nsamples):
        if not contains(r, p + float(s) * (q - p)):
            return False
    return True


def double_cone_theorem_hull(
    b_region: Region,
    x: RealPoint2,
    y: RealPoint2,
    budget: SearchBudget = DEFAULT_BUDGET,
    leg_samples: int = 64,
    bend_grid: int = 16,
) -> DoubleCone:
    """Diamond spanned by two timelike-connected points of a region.

    Certifies (numerically) that x and y are joined by a timelike curve
    inside the region: first the straight segment, then single-bend
    polylines with the bend sampled over the diamond interior.  On success
    the diamond D_{x,y} is a subset of the real trace of the envelope of
    any edge-of-the-wedge problem with this coincidence region.
    """
    if not contains(b_region, x) or not contains(b_region, y):
        raise PreconditionFailed("x and y must lie in the region")
    if not is_forward(y - x):
        raise PreconditionFailed("y must lie in the open forward cone of x")
    if _segment_in_region(b_region, x, y, leg_samples):
        return DoubleCone(x, y)
    bends = sample_interior(DoubleCone(x, y), bend_grid * bend_grid, seed=11)
    for t, s in bends:
        p = RealPoint2(float(t), float(s))
        if not (is_forward(p - x) and is_forward(y - p)):
            continue
        if _segment_in_region(b_region, x, p, leg_samples) and _segment_in_region(
            b_region, p, y, leg_samples
        ):
            return DoubleCone(x, y)
    raise PreconditionFailed("no timelike connecting polyline found within budget")


# ---------------------------------------------------------------------------
# two-diamond pipeline through the inversion
# ---------------------------------------------------------------------------


def _diamond_vertices(dc: DoubleCone) -> list[RealPoint2]:
    v1, v2 = side_vertices(dc.a, dc.b)
    return [dc.a, v1, dc.b, v2]


def _avoids_lightcone(dc: DoubleCone) -> bool:
    us = [v.t - v.x for v in _diamond_vertices(dc)]
    vs = [v.t + v.x for v in _diamond_vertices(dc)]
    tau = TAU_CLASS
    return (all(u > tau for u in us) or all(u < -tau for u in us)) and (
        all(v > tau for v in vs) or all(v < -tau for v in vs)
    )


def _inside_closed_wedge(p: RealPoint2, vertex: RealPoint2, right: bool) -> bool:
    q = p - vertex
    return q.x >= abs(q.t) if right else -q.x >= abs(q.t)


@dataclass(frozen=True)
class TwoConeExtension:
    """Result of the two-diamond pipeline.

    When ``extended`` is false the second diamond is its own envelope
    trace (``reason`` says why); otherwise ``image_pieces`` describe the
    enlargement next to the image cone and membership is answered by
    mapping queries through the inversion.
    """

    dc1: DoubleCone
    dc2: DoubleCone
    extended: bool
    reason: str
    image_apex: Optional[RealPoint2]
    image_bottom: Optional[RealPoint2]
    image_top: Optional[RealPoint2]
    image_pieces: tuple

    def contains(self, p: RealPoint2, tau: float = TAU_CLASS) -> bool:
        if contains(self.dc2, p, tau):
            return True
        if not self.extended:
            return False
        if abs(mink_square(p)) <= TOL_SING:
            return False
        w = phi(p)
        return any(piece.contains(w, tau) for piece in self.image_pieces)

    def sample_added_points(
        self, n: int, seed: int = 23, max_tries: int = 200000
    ) -> np.ndarray:
        """Points of the enlargement outside the original diamond."""
        if not self.extended:
            return np.empty((0, 2))
        verts = _diamond_vertices(self.dc2)
        ts = [v.t for v in verts]
        xs = [v.x for v in verts]
        span_t = max(ts) - min(ts)
        span_x = max(xs) - min(xs)
        rng = np.random.default_rng(seed)
        out = []
        for _ in range(max_tries):
            p = RealPoint2(
                float(rng.uniform(min(ts) - span_t, max(ts) + span_t)),
                float(rng.uniform(min(xs) - span_x, max(xs) + span_x)),
            )
            if self.contains(p) and not contains(self.dc2, p):
                out.append(p.as_tuple())
                if len(out) == n:
                    break
        return np.array(out)


def two_double_cone_extension(
    dc1: DoubleCone,
    dc2: DoubleCone,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> TwoConeExtension:
    """Envelope enlargement of the second of two diamond coincidence
    regions, the first in normalized position D_{(-a,0),0}.

    The inversion maps the first diamond onto the shifted cone
    (1/a, 0) + V+ and the second onto another diamond; tangent lines
    through a cone apex are the chords to the apex, so the enlargement in
    image coordinates sweeps cones along the chord segment (bottom vertex)
    and the chord's outward half-line (top vertex), clipped to the image
    diamond's causal shadow.  Mapping back bounds the enlargement by
    hyperbola and lightlike arcs.

    No enlargement happens when the diamonds are spacelike-separated, or
    the second closure sits inside the forward cone or inside the past
    shadow of (-1/a, 0).
    """
    if dc1.b.norm() > TAU_CLASS or abs(dc1.a.x) > TAU_CLASS or dc1.a.t >= 0:
        raise PreconditionFailed("dc1 must be D_{(-a,0),0} with a > 0")
    a_val = -dc1.a.t
    if not _avoids_lightcone(dc2):
        raise UnsupportedConfiguration(
            "closure of the second diamond meets the light cone"
        )

    verts = _diamond_vertices(dc2)
    s_right, s_left = side_vertices(dc1.a, dc1.b)
    if all(_inside_closed_wedge(v, s_right, True) for v in verts) or all(
        _inside_closed_wedge(v, s_left, False) for v in verts
    ):
        return TwoConeExtension(
            dc1, dc2, False, "spacelike-separated", None, None, None, ()
        )
    if is_forward(dc2.a):
        return TwoConeExtension(dc1, dc2, False, "inside-forward-cone", None, None, None, ())
    mirror = RealPoint2(-1.0 / a_val, 0.0)
    if in_closed_backward(dc2.b - mirror) and not (dc2.b - mirror).norm() <= TAU_CLASS:
        return TwoConeExtension(dc1, dc2, False, "inside-past-shadow", None, None, None, ())

    e = RealPoint2(1.0 / a_val, 0.0)
    images = [phi(v) for v in verts]
    bottom = top = None
    for w in images:
        if all(in_closed_forward(o - w) for o in images):
            bottom = w
        if all(in_closed_backward(o - w) for o in images):
            top = w
    if bottom is None or top is None:
        raise UnsupportedConfiguration("image of the diamond is not a diamond")
    c_rel = bottom - e
    d_rel = top - e
    if in_closed_forward(c_rel) or in_closed_forward(d_rel):
        raise UnsupportedConfiguration("image diamond touches the shifted cone")

    pieces = []
    if not in_closed_backward(c_rel):
        pieces.append(
            DhatPiece(
                sweep=ConeOverSegment(bottom, e - bottom, 1.0, +1),
                cone_apex=top,
                cone_sign=-1,
            )
        )
    if not in_closed_backward(d_rel):
        away = top - e
        n = away.norm()
        pieces.append(
            DhatPiece(
                sweep=ConeOverSegment(top, (1.0 / n) * away, math.inf, -1),
                cone_apex=bottom,
                cone_sign=+1,
            )
        )
    if not pieces:
        return TwoConeExtension(dc1, dc2, False, "no-tangent-vertices", None, None, None, ())
    return TwoConeExtension(
        dc1,
        dc2,
        True,
        "extended",
        e,
        bottom,
        top,
        tuple(pieces),
    )
