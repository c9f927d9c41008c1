"""Lorentz-invariant spectral support sets and the mass-gap detector.

Support sets are mass shells {p^2 = m^2, p0 > 0}, shell bands
{m^2 <= p^2 <= m1^2, p0 > 0}, finite point sets, the origin, unions, and
affine images c + sign*S of any of these (reflections and shifts close
the algebra exactly, so reflecting twice restores the original set).

The contradiction detector assumes the spectrum is confined to a finite
band starting exactly at the shell of mass m and reflects that shell
through 2m*s.  Any reflected point that is spacelike (or above the band)
lies in the region where the support is forced to vanish, which no
nonzero band-confined theory can arrange; the scan over rapidity finds
such a witness immediately because q(theta)^2 = m^2 (5 - 4 cosh theta)
is negative past |theta| = ln 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .config import TAU_CLASS
from .minkowski import RealPoint2, mink_square
from .regions import (
    MuCone,
    Region,
    SpacelikeComplementOfDoubleCone,
    UnionOf,
)


@dataclass(frozen=True)
class MassShell:
    m: float

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError("shell mass must be > 0")


@dataclass(frozen=True)
class ShellBand:
    m: float
    m1: float

    def __post_init__(self):
        if not (0 < self.m <= self.m1):
            raise ValueError("need 0 < m <= m1")


@dataclass(frozen=True)
class PointSet:
    pts: tuple

    def __post_init__(self):
        object.__setattr__(self, "pts", tuple(self.pts))


@dataclass(frozen=True)
class Origin:
    pass


@dataclass(frozen=True)
class AffineImage:
    """shift + sign * base; nested images flatten on construction."""

    base: "SupportSet"
    sign: int
    shift: RealPoint2

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if isinstance(self.base, AffineImage):
            inner = self.base
            object.__setattr__(self, "shift", self.shift + self.sign * inner.shift)
            object.__setattr__(self, "sign", self.sign * inner.sign)
            object.__setattr__(self, "base", inner.base)


@dataclass(frozen=True)
class UnionSupport:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))


SupportSet = Union[MassShell, ShellBand, PointSet, Origin, AffineImage, UnionSupport]


def _simplify(s: SupportSet) -> SupportSet:
    if isinstance(s, AffineImage) and s.sign == 1 and s.shift.norm() == 0.0:
        return s.base
    return s


def reflect_shift(s: SupportSet, c: RealPoint2) -> SupportSet:
    """The set c - S.  Exact on every variant; an involution."""
    if isinstance(s, PointSet):
        return PointSet(tuple(c - p for p in s.pts))
    if isinstance(s, Origin):
        return PointSet((c,))
    if isinstance(s, UnionSupport):
        return UnionSupport(tuple(reflect_shift(p, c) for p in s.parts))
    if isinstance(s, AffineImage):
        return _simplify(AffineImage(s.base, -s.sign, c - s.shift))
    return _simplify(AffineImage(s, -1, c))


def support_contains(s: SupportSet, p: RealPoint2, tol: float = 1e-9) -> bool:
    if isinstance(s, MassShell):
        return p.t > 0 and abs(mink_square(p) - s.m * s.m) <= tol
    if isinstance(s, ShellBand):
        sq = mink_square(p)
        return p.t > 0 and s.m * s.m - tol <= sq <= s.m1 * s.m1 + tol
    if isinstance(s, PointSet):
        return any((p - q).norm() <= tol for q in s.pts)
    if isinstance(s, Origin):
        return p.norm() <= tol
    if isinstance(s, AffineImage):
        return support_contains(s.base, s.sign * (p - s.shift), tol)
    if isinstance(s, UnionSupport):
        return any(support_contains(part, p, tol) for part in s.parts)
    raise TypeError(f"unknown support set {s!r}")


def sample_support(s: SupportSet, thetas: np.ndarray) -> np.ndarray:
    """Rapidity samples of shell-like sets, shape (n, 2); finite sets
    return their points."""
    if isinstance(s, MassShell):
        return np.column_stack([s.m * np.cosh(thetas), s.m * np.sinh(thetas)])
    if isinstance(s, ShellBand):
        mids = 0.5 * (s.m + s.m1)
        return np.column_stack([mids * np.cosh(thetas), mids * np.sinh(thetas)])
    if isinstance(s, PointSet):
        return np.array([p.as_tuple() for p in s.pts])
    if isinstance(s, Origin):
        return np.zeros((1, 2))
    if isinstance(s, AffineImage):
        base = sample_support(s.base, thetas)
        return np.array([s.shift.t, s.shift.x]) + s.sign * base
    if isinstance(s, UnionSupport):
        return np.concatenate([sample_support(p, thetas) for p in s.parts])
    raise TypeError(f"unknown support set {s!r}")


def support_Fminus(supp_psi: SupportSet, spec_u: SupportSet) -> SupportSet:
    """The reflected-spectrum bound 2*supp_psi - spec_u on the support of
    the crossed correlation function.

    Exact for point-like state supports (the union of reflected copies of
    the spectrum); for extended state supports the result is the union
    over a deterministic rapidity sample of the doubled support, which is
    the subset actually used by the witness search.
    """
    if isinstance(supp_psi, PointSet):
        parts = tuple(
            _simplify(reflect_shift(spec_u, 2.0 * p)) for p in supp_psi.pts
        )
        return parts[0] if len(parts) == 1 else UnionSupport(parts)
    if isinstance(supp_psi, Origin):
        return reflect_shift(spec_u, RealPoint2(0, 0))
    doubled = AffineImage(supp_psi, 1, RealPoint2(0, 0))
    thetas = np.linspace(-3, 3, 13)
    pts = 2.0 * sample_support(doubled, thetas)
    return UnionSupport(
        tuple(reflect_shift(spec_u, RealPoint2(float(t), float(x))) for t, x in pts)
    )


@dataclass(frozen=True)
class SpectrumHypothesis:
    """Band-confined spectrum starting exactly at mass ``band.m`` in the
    direction of the unit timelike vector s; epsilon records the size of
    the state-support neighborhood around m*s (reported, not geometrically
    expanded: the contradiction needs only the limit geometry)."""

    band: ShellBand
    s: RealPoint2
    epsilon: float = 0.1

    def __post_init__(self):
        if abs(mink_square(self.s) - 1.0) > 1e-9 or self.s.t <= 0:
            raise ValueError("s must be unit forward timelike")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")


def coincidence_region(h: SpectrumHypothesis) -> Region:
    """Real region where the two boundary values provably agree: above the
    band plus the spacelike complement of the diamond spanned by 0 and
    (2m + epsilon)*s."""
    b = (2.0 * h.band.m + h.epsilon) * h.s
    return UnionOf(
        (
            MuCone(mu=h.band.m1, apex=RealPoint2(0, 0)),
            SpacelikeComplementOfDoubleCone(RealPoint2(0, 0), b),
        )
    )


@dataclass(frozen=True)
class MassGapResult:
    witness: Optional[RealPoint2]
    q_square: Optional[float]
    theta: Optional[float]
    theta_crossing: Optional[float]
    reason: str


def _s_perp(s: RealPoint2) -> RealPoint2:
    # unit spacelike vector orthogonal to unit timelike s
    return RealPoint2(s.x, s.t)


def massgap_contradiction(
    h: SpectrumHypothesis,
    theta_max: float = 10.0,
    grid_points: int = 4001,
    tau: float = TAU_CLASS,
) -> MassGapResult:
    """Search the reflected shell 2m*s - {p^2 = m^2, p0 > 0} for a point
    outside the closed band region {0 <= p^2 <= m1^2}.

    The rapidity grid over [-theta_max, theta_max] is scanned outward from
    0 (positive side first); the first strict witness is returned together
    with the bisected threshold crossing.  An unbounded band (m1 = inf)
    yields None: the envelope step the argument rests on needs a finite
    band, so the detector refuses to claim a contradiction there.
    """
    if math.isinf(h.band.m1):
        return MassGapResult(
            witness=None,
            q_square=None,
            theta=None,
            theta_crossing=None,
            reason="unbounded band: envelope step unavailable, no contradiction claimed",
        )
    m, m1 = h.band.m, h.band.m1
    sp = _s_perp(h.s)

    def q_of(theta: float) -> RealPoint2:
        p = m * math.cosh(theta) * h.s + m * math.sinh(theta) * sp
        return 2.0 * m * h.s - p

    def in_excluded_band(qsq: float) -> bool:
        return -tau <= qsq <= m1 * m1 + tau

    half = np.linspace(0.0, theta_max, (grid_points + 1) // 2)
    order = [t for pair in zip(half, -half) for t in pair][1:]
    prev = 0.0
    for theta in order:
        q = q_of(float(theta))
        qsq = mink_square(q)
        if not in_excluded_band(qsq):
            lo, hi = (prev, abs(theta)) if theta > 0 else (-abs(prev), theta)
            lo, hi = min(lo, hi), max(lo, hi)
            for _ in range(200):
                if hi - lo < 1e-10:
                    break
                mid = 0.5 * (lo + hi)
                if in_excluded_band(mink_square(q_of(mid))) == in_excluded_band(
                    mink_square(q_of(lo))
                ):
                    lo = mid
                else:
                    hi = mid
            return MassGapResult(
                witness=q,
                q_square=qsq,
                theta=float(theta),
                theta_crossing=0.5 * (lo + hi),
                reason="witness found",
            )
        if theta > 0:
            prev = float(theta)
    return MassGapResult(
        witness=None,
        q_square=None,
        theta=None,
        theta_crossing=None,
        reason="no witness within the rapidity budget",
    )
