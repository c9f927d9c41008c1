"""Reciprocal-radii inversion and the composed cone-to-wedge map.

phi(z) = -z / z^2 is a biholomorphic involution of complex Minkowski space
off the singular quadric {z^2 = 0}.  It fixes both tubes, swaps the
forward and backward cones, preserves the spacelike set, and maps the
diamond with vertices (-1/m, 0) and 0 onto the shifted cone (m, 0) + V+.

Composing two inversions around the auxiliary center
w_tilde = (-1/(2 mu), -1/(2 mu)) yields the rational map

    z = (w_tilde * x^2 + x) / (1 + 2 x.w_tilde)

which carries the mass-mu cone geometry onto the shifted right wedge
(0, mu) + W and maps non-lightlike lines to hyperbolas with centers on
{z0 = z1 - mu}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_SING
from .errors import LightlikeSlope, SingularPoint
from .minkowski import ComplexPoint2, RealPoint2, as_complex, mink_dot, mink_square


def phi(z: RealPoint2 | ComplexPoint2):
    """Reciprocal-radii inversion -z/z^2; an involution off {z^2 = 0}.

    Real input gives real output.
    """
    real_in = isinstance(z, RealPoint2)
    zc = as_complex(z)
    s = mink_square(zc)
    if abs(s) <= TOL_SING:
        raise SingularPoint(f"|z^2| = {abs(s)} <= {TOL_SING}")
    w = ComplexPoint2(-zc.t / s, -zc.x / s)
    if real_in:
        return RealPoint2(w.t.real, w.x.real)
    return w


def phi_array(z: np.ndarray) -> np.ndarray:
    """Vectorized inversion on an (..., 2) complex array; no singularity
    guard (callers filter |z^2| themselves)."""
    s = z[..., 0] ** 2 - z[..., 1] ** 2
    return -z / s[..., None]


def mink_square_array(z: np.ndarray) -> np.ndarray:
    return z[..., 0] ** 2 - z[..., 1] ** 2


def _wtilde(mu: float) -> ComplexPoint2:
    return ComplexPoint2(complex(-0.5 / mu), complex(-0.5 / mu))


def psi_phi(x: RealPoint2 | ComplexPoint2, mu: float):
    """Composed map z = (w~ x^2 + x) / (1 + 2 x.w~), w~ = (-1/2mu, -1/2mu).

    Maps the diamond D_{(-1/mu,0),0} onto the shifted wedge (0, mu) + W and
    real points to real points.
    """
    if not mu > 0:
        raise ValueError("mu must be > 0")
    real_in = isinstance(x, RealPoint2)
    xc = as_complex(x)
    wt = _wtilde(mu)
    denom = 1.0 + 2.0 * mink_dot(xc, wt)
    if abs(denom) <= TOL_SING:
        raise SingularPoint(f"|1 + 2 x.w~| = {abs(denom)} <= {TOL_SING}")
    s = mink_square(xc)
    z = ComplexPoint2((wt.t * s + xc.t) / denom, (wt.x * s + xc.x) / denom)
    if real_in:
        return RealPoint2(z.t.real, z.x.real)
    return z


def psi_phi_inverse(z: RealPoint2 | ComplexPoint2, mu: float):
    """Inverse of the composed map: x = (z - w~ z^2) / (1 - 2 z.w~)."""
    if not mu > 0:
        raise ValueError("mu must be > 0")
    real_in = isinstance(z, RealPoint2)
    zc = as_complex(z)
    wt = _wtilde(mu)
    denom = 1.0 - 2.0 * mink_dot(zc, wt)
    if abs(denom) <= TOL_SING:
        raise SingularPoint(f"|1 - 2 z.w~| = {abs(denom)} <= {TOL_SING}")
    s = mink_square(zc)
    x = ComplexPoint2((zc.t - wt.t * s) / denom, (zc.x - wt.x * s) / denom)
    if real_in:
        return RealPoint2(x.t.real, x.x.real)
    return x


@dataclass(frozen=True)
class HyperbolaParams:
    """The quadric (z0 - center.t)^2 - (z1 - center.x)^2 = lam."""

    center: RealPoint2
    lam: float


def line_image(sigma: float, c: float, mu: float) -> HyperbolaParams:
    """Image of the line {x0 = sigma*x1 + c} under the composed map.

    center = ((c - mu)/(1 - sigma), (c - sigma*mu)/(1 - sigma)),
    lam = mu^2 (1 + sigma)/(1 - sigma); the center always satisfies
    center.t = center.x - mu.  |sigma| > 1 iff lam < 0.  Lightlike slopes
    map to lightlike lines, not hyperbolas.
    """
    if abs(abs(sigma) - 1.0) <= 1e-12:
        raise LightlikeSlope("|sigma| = 1: lightlike lines stay lines")
    center = RealPoint2((c - mu) / (1.0 - sigma), (c - sigma * mu) / (1.0 - sigma))
    lam = mu * mu * (1.0 + sigma) / (1.0 - sigma)
    return HyperbolaParams(center=center, lam=lam)


@dataclass(frozen=True)
class PhiPropertyReport:
    """Max deviations over the sampled inversion-property suite."""

    nsamples: int
    seed: int
    involution_dev: float
    tube_violations: int
    cone_violations: int
    spacelike_violations: int
    diamond_violations: int
    n_skipped_singular: int

    @property
    def passed(self) -> bool:
        return (
            self.involution_dev <= 1e-9
            and self.tube_violations == 0
            and self.cone_violations == 0
            and self.spacelike_violations == 0
            and self.diamond_violations == 0
        )


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_tube_points(n: int, seed: int, forward: bool = True) -> np.ndarray:
    """(n, 2) complex points with timelike imaginary part of chosen sign."""
    rng = _rng(seed)
    x = rng.uniform(-3, 3, size=(n, 2))
    th = rng.uniform(-2, 2, size=n)
    m = rng.uniform(0.05, 3, size=n)
    sgn = 1.0 if forward else -1.0
    y = np.column_stack([sgn * m * np.cosh(th), sgn * m * np.sinh(th)])
    return x + 1j * y


def check_phi_properties(nsamples: int, seed: int = 0) -> PhiPropertyReport:
    """Sampled verification of the five inversion properties.

    1. involution: phi(phi(z)) = z away from the singular quadric;
    2. both tubes map into themselves;
    3. the forward cone maps into the backward cone (and back);
    4. spacelike points stay spacelike;
    5. the diamond D_{(-1,0),0} maps into (1,0)+V+ and conversely.

    Deviations are relative for the involution, counted as violations for
    the set-mapping properties (points with |z^2| <= 1e-6 are skipped as
    documented singular-band exclusions).
    """
    if nsamples < 1:
        raise ValueError("nsamples must be >= 1")
    rng = _rng(seed)

    # involution on generic complex points
    z = rng.normal(0, 2, size=(nsamples, 2)) + 1j * rng.normal(0, 2, size=(nsamples, 2))
    s = mink_square_array(z)
    ok = np.abs(s) > 1e-6
    zz = z[ok]
    back = phi_array(phi_array(zz))
    norms = np.sqrt(np.sum(np.abs(zz) ** 2, axis=1))
    err = np.sqrt(np.sum(np.abs(back - zz) ** 2, axis=1))
    inv_dev = float(np.max(err / (1.0 + norms))) if len(zz) else 0.0

    # tubes
    tube_viol = 0
    for fwd in (True, False):
        zt = sample_tube_points(nsamples // 2 + 1, seed + (1 if fwd else 2), fwd)
        st = mink_square_array(zt)
        keep = np.abs(st) > 1e-6
        w = phi_array(zt[keep])
        yim = np.imag(w)
        ysq = yim[:, 0] ** 2 - yim[:, 1] ** 2
        good = (ysq > 0) & ((yim[:, 0] > 0) == fwd)
        tube_viol += int(np.sum(~good))

    # forward cone -> backward cone, both directions
    th = rng.uniform(-3, 3, size=nsamples)
    m = rng.uniform(1e-3, 5, size=nsamples)
    vplus = np.column_stack([m * np.cosh(th), m * np.sinh(th)])
    w = phi_array(vplus.astype(complex)).real
    wsq = w[:, 0] ** 2 - w[:, 1] ** 2
    cone_viol = int(np.sum(~((wsq > 0) & (w[:, 0] < 0))))
    back2 = phi_array((-vplus).astype(complex)).real
    bsq = back2[:, 0] ** 2 - back2[:, 1] ** 2
    cone_viol += int(np.sum(~((bsq > 0) & (back2[:, 0] > 0))))

    # spacelike set fixed
    rr = rng.uniform(1e-3, 5, size=nsamples)
    side = np.where(rng.uniform(size=nsamples) < 0.5, 1.0, -1.0)
    sp = np.column_stack([rr * np.sinh(th), side * rr * np.cosh(th)])
    wsp = phi_array(sp.astype(complex)).real
    spsq = wsp[:, 0] ** 2 - wsp[:, 1] ** 2
    spacelike_viol = int(np.sum(~(spsq < 0)))

    # diamond <-> shifted cone (m = 1 normalization)
    u1 = rng.uniform(1e-6, 1 - 1e-6, size=nsamples)
    u2 = rng.uniform(1e-6, 1 - 1e-6, size=nsamples)
    dd = np.column_stack([-1 + 0.5 * (u1 + u2), 0.5 * (u1 - u2)])
    wd = phi_array(dd.astype(complex)).real
    q = wd - np.array([1.0, 0.0])
    qsq = q[:, 0] ** 2 - q[:, 1] ** 2
    diamond_viol = int(np.sum(~((qsq > 0) & (q[:, 0] > 0))))
    mm = np.sqrt(1.0 + u1 * 24.0)
    cone_pts = np.column_stack([mm * np.cosh(2 * u2 - 1), mm * np.sinh(2 * u2 - 1)])
    cone_pts += np.array([1.0, 0.0])
    wb = phi_array(cone_pts.astype(complex)).real
    ua = wb[:, 0] - (-1.0) > np.abs(wb[:, 1] - 0.0)  # inside (-1,0)+V+
    ub = -wb[:, 0] > np.abs(wb[:, 1])  # inside 0+V-
    diamond_viol += int(np.sum(~(ua & ub)))

    return PhiPropertyReport(
        nsamples=nsamples,
        seed=seed,
        involution_dev=inv_dev,
        tube_violations=tube_viol,
        cone_violations=cone_viol,
        spacelike_violations=spacelike_viol,
        diamond_violations=diamond_viol,
        n_skipped_singular=int(np.sum(~ok)),
    )
