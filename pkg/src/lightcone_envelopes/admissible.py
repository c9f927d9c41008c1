"""Admissible separating hyperboloids and hyperplanes for a region.

A hyperboloid (x - x')^2 = lambda^2 is admissible when the region lies
strictly between its branches, i.e. (x - x')^2 < lambda^2 on all of it; a
causal hyperplane a.(x - x') = 0 is admissible when a.(x - x') < 0 on all
of it.  Closed forms exist for the mass-gap cone (planes) and the
hyperboloid shell (hyperboloids); everything else falls back to a
deterministic sampled universal check.

The plane criterion for a mass-gap cone is derived from the defining
universal condition: the supremum of a.x over the open cone apex+V_mu+ is
a.apex - mu*sqrt(a^2) for timelike backward a and a.apex for lightlike
backward a, and it is not attained, so equality at the supremum is still
admissible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_SEED, SAMPLE_RADIUS, TAU_CLASS
from .errors import UnsupportedRegion
from .minkowski import RealPoint2, mink_dot, mink_square
from .regions import (
    DoubleCone,
    ForwardCone,
    BackwardCone,
    HyperboloidShell,
    MuCone,
    Region,
    UnionOf,
    sample_interior,
    side_vertices,
)


@dataclass(frozen=True)
class HyperboloidParam:
    """Center x' and radius lambda > 0 of (x - x')^2 = lambda^2."""

    xprime: RealPoint2
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise ValueError("lambda must be finite and > 0")


@dataclass(frozen=True)
class PlaneParam:
    """Base point x' and causal direction a != 0 of {x | a.(x - x') = 0}."""

    xprime: RealPoint2
    a: RealPoint2

    def __post_init__(self):
        if self.a.norm() <= TAU_CLASS:
            raise ValueError("a must be nonzero")
        if mink_square(self.a) < -TAU_CLASS:
            raise ValueError("a must be causal (a^2 >= 0 up to tolerance)")


def shell_hyperboloid_admissible(
    h: HyperboloidParam, m1: float, m2: float, tau: float = TAU_CLASS
) -> bool:
    """Closed form for the shell: x' in the closed forward cone and
    lambda >= max(m2 - alpha, alpha - m1) with alpha = sqrt(x'^2)."""
    xp = h.xprime
    if not (xp.t + tau >= abs(xp.x)):
        return False
    alpha = math.sqrt(max(0.0, mink_square(xp)))
    return h.lam >= max(m2 - alpha, alpha - m1) - tau


def _diamond_vertices(dc: DoubleCone) -> tuple[RealPoint2, ...]:
    v1, v2 = side_vertices(dc.a, dc.b)
    return (dc.a, v1, dc.b, v2)


def diamond_hyperboloid_admissible(h: HyperboloidParam, dc: DoubleCone) -> bool:
    """Exact diamond criterion: the squared separation is linear along the
    lightlike edges and has no interior maximum, so its supremum over the
    open diamond is the maximum over the four vertices (not attained)."""
    return (
        max(mink_square(v - h.xprime) for v in _diamond_vertices(dc))
        <= h.lam * h.lam
    )


def diamond_plane_admissible(p: PlaneParam, dc: DoubleCone) -> bool:
    """Exact diamond criterion: a linear functional peaks at a vertex."""
    return (
        max(mink_dot(p.a, v - p.xprime) for v in _diamond_vertices(dc)) <= 0.0
    )


def is_admissible_hyperboloid(
    h: HyperboloidParam,
    r: Region,
    nsamples: int = 1024,
    seed: int = DEFAULT_SEED,
) -> bool:
    """Does the region lie strictly between the branches?

    Forward/backward/mass-gap cones are unbounded in a timelike direction,
    so no hyperboloid is admissible (closed form: False).  Shells and
    diamonds use exact criteria; ``sampled_hyperboloid_check`` remains the
    independent cross-check route.  Other unbounded regions are rejected:
    a finite sample cannot certify the universal statement and no closed
    form is known.
    """
    if nsamples < 1:
        raise ValueError("nsamples must be >= 1")
    if isinstance(r, (ForwardCone, BackwardCone, MuCone)):
        return False
    if isinstance(r, HyperboloidShell):
        return shell_hyperboloid_admissible(h, r.m1, r.m2)
    if isinstance(r, DoubleCone):
        return diamond_hyperboloid_admissible(h, r)
    if isinstance(r, UnionOf):
        if all(isinstance(p, DoubleCone) for p in r.parts):
            return all(diamond_hyperboloid_admissible(h, p) for p in r.parts)
        if any(isinstance(p, (ForwardCone, BackwardCone, MuCone)) for p in r.parts):
            return False
    raise UnsupportedRegion(f"no admissibility strategy for {type(r).__name__}")


def sampled_hyperboloid_check(
    h: HyperboloidParam, r: Region, nsamples: int, seed: int = DEFAULT_SEED
) -> bool:
    pts = sample_interior(r, nsamples, seed)
    dt = pts[:, 0] - h.xprime.t
    dx = pts[:, 1] - h.xprime.x
    return bool(np.all(dt * dt - dx * dx < h.lam * h.lam))


def mu_cone_plane_sup(a: RealPoint2, mu: float, tau: float = TAU_CLASS) -> float:
    """sup of a.x over the origin-apex mass-gap cone; +inf when a is not
    backward causal (the supremum is then genuinely unbounded)."""
    s = mink_square(a)
    if a.t >= 0 or s < -tau:
        return math.inf
    if s <= tau:  # lightlike backward
        return 0.0
    return -mu * math.sqrt(s)


def is_admissible_plane(
    p: PlaneParam,
    r: Region,
    nsamples: int = 4096,
    seed: int = DEFAULT_SEED,
    radius: float = SAMPLE_RADIUS,
    tau: float = TAU_CLASS,
) -> bool:
    """Does a.(x - x') < 0 hold on all of r?

    Mass-gap cones (and plain forward cones, mu = 0) use the closed form;
    the supremum over the open cone is never attained, so the boundary
    case a.x' equal to the supremum is admissible.  Other regions run the
    sampled universal check out to ``radius``.
    """
    if isinstance(r, (MuCone, ForwardCone)):
        mu, apex = (r.mu, r.apex) if isinstance(r, MuCone) else (0.0, r.apex)
        sup = mu_cone_plane_sup(p.a, mu, tau)
        if math.isinf(sup):
            return False
        return mink_dot(p.a, p.xprime - apex) >= sup - tau
    if isinstance(r, DoubleCone):
        return diamond_plane_admissible(p, r)
    if isinstance(r, UnionOf):
        return all(
            is_admissible_plane(p, part, nsamples, seed, radius, tau)
            for part in r.parts
        )
    return sampled_plane_check(p, r, nsamples, seed, radius)


def sampled_plane_check(
    p: PlaneParam,
    r: Region,
    nsamples: int = 4096,
    seed: int = DEFAULT_SEED,
    radius: float = SAMPLE_RADIUS,
) -> bool:
    pts = sample_interior(r, nsamples, seed, radius)
    val = p.a.t * (pts[:, 0] - p.xprime.t) - p.a.x * (pts[:, 1] - p.xprime.x)
    return bool(np.all(val < 0))
