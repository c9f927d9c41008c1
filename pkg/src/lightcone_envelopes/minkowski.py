"""Minkowski arithmetic and causal classification in 1+1 dimensions.

Points carry a time component ``t`` and a space component ``x``; the
indefinite product is ``a.t*b.t - a.x*b.x``.  Complexified points extend it
bilinearly (no conjugation), so the "square" of a complex point is the
bilinear square used throughout the envelope predicates.

1+3-dimensional real queries reduce to 1+1 via the rotational reduction
``(t, s1, s2, s3) -> (t, |s|)``, which preserves the invariant square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .config import TAU_CLASS
from .errors import NotSpacelike


def _check_finite(*vals: float) -> None:
    for v in vals:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component: {v!r}")


@dataclass(frozen=True)
class RealPoint2:
    """Real 2-vector (t, x) with signature (+, -)."""

    t: float
    x: float

    def __post_init__(self):
        _check_finite(self.t, self.x)

    def __add__(self, other: "RealPoint2") -> "RealPoint2":
        return RealPoint2(self.t + other.t, self.x + other.x)

    def __sub__(self, other: "RealPoint2") -> "RealPoint2":
        return RealPoint2(self.t - other.t, self.x - other.x)

    def __neg__(self) -> "RealPoint2":
        return RealPoint2(-self.t, -self.x)

    def __mul__(self, c: float) -> "RealPoint2":
        return RealPoint2(c * self.t, c * self.x)

    __rmul__ = __mul__

    def norm(self) -> float:
        """Euclidean norm (used for distances, never for causal tests)."""
        return math.hypot(self.t, self.x)

    def as_tuple(self) -> tuple[float, float]:
        return (self.t, self.x)


@dataclass(frozen=True)
class ComplexPoint2:
    """Complexified 2-vector; ``re + 1j*im`` reconstructs it exactly."""

    t: complex
    x: complex

    def __post_init__(self):
        _check_finite(self.t.real, self.t.imag, self.x.real, self.x.imag)

    @staticmethod
    def from_parts(re: RealPoint2, im: RealPoint2) -> "ComplexPoint2":
        return ComplexPoint2(complex(re.t, im.t), complex(re.x, im.x))

    @property
    def re(self) -> RealPoint2:
        return RealPoint2(self.t.real, self.x.real)

    @property
    def im(self) -> RealPoint2:
        return RealPoint2(self.t.imag, self.x.imag)

    def __add__(self, other: "ComplexPoint2") -> "ComplexPoint2":
        return ComplexPoint2(self.t + other.t, self.x + other.x)

    def __sub__(self, other: "ComplexPoint2") -> "ComplexPoint2":
        return ComplexPoint2(self.t - other.t, self.x - other.x)

    def __neg__(self) -> "ComplexPoint2":
        return ComplexPoint2(-self.t, -self.x)

    def __mul__(self, c: complex) -> "ComplexPoint2":
        return ComplexPoint2(c * self.t, c * self.x)

    __rmul__ = __mul__

    def norm(self) -> float:
        """Euclidean norm of the underlying real 4-vector."""
        return math.sqrt(
            abs(self.t.real) ** 2
            + abs(self.t.imag) ** 2
            + abs(self.x.real) ** 2
            + abs(self.x.imag) ** 2
        )


def as_complex(p: RealPoint2 | ComplexPoint2) -> ComplexPoint2:
    if isinstance(p, ComplexPoint2):
        return p
    return ComplexPoint2(complex(p.t), complex(p.x))


@dataclass(frozen=True)
class RealPoint4:
    """Real 1+3 vector (t, s1, s2, s3)."""

    t: float
    s1: float
    s2: float
    s3: float

    def __post_init__(self):
        _check_finite(self.t, self.s1, self.s2, self.s3)


class CausalClass(Enum):
    TIMELIKE_FORWARD = "TimelikeForward"
    TIMELIKE_BACKWARD = "TimelikeBackward"
    SPACELIKE = "SpacelikePt"
    LIGHTLIKE_FORWARD = "LightlikeForward"
    LIGHTLIKE_BACKWARD = "LightlikeBackward"
    ZERO = "Zero"


def mink_dot(a, b):
    """Indefinite product a0*b0 - a1*b1 (bilinear on complex points)."""
    return a.t * b.t - a.x * b.x


def mink_square(a):
    return mink_dot(a, a)


def classify(y: RealPoint2, tau: float = TAU_CLASS) -> CausalClass:
    """Sign tests on y^2 and y0 at absolute tolerance ``tau``.

    ZERO iff the Euclidean norm is <= tau.  Lightlike with t == 0 (possible
    only inside the tolerance band) counts as forward.
    """
    if y.norm() <= tau:
        return CausalClass.ZERO
    s = mink_square(y)
    if s > tau:
        return (
            CausalClass.TIMELIKE_FORWARD if y.t > 0 else CausalClass.TIMELIKE_BACKWARD
        )
    if s < -tau:
        return CausalClass.SPACELIKE
    return (
        CausalClass.LIGHTLIKE_FORWARD if y.t >= 0 else CausalClass.LIGHTLIKE_BACKWARD
    )


def hat_dual(y: RealPoint2, tau: float = TAU_CLASS) -> RealPoint2:
    """Forward timelike unit vector orthogonal to a strictly spacelike y.

    The unique solution of yhat^2 = 1, y.yhat = 0, yhat forward is
    sgn(y1)/sqrt(-y^2) * (y1, y0).
    """
    s = mink_square(y)
    if s >= -tau:
        raise NotSpacelike(f"y^2 = {s} is not < -{tau}")
    f = math.copysign(1.0, y.x) / math.sqrt(-s)
    return RealPoint2(f * y.x, f * y.t)


def reduce_rotational(p: RealPoint4) -> RealPoint2:
    """Collapse the spatial part to its Euclidean length.

    All real membership queries in 1+3 dimensions are answered on the
    reduced point; the invariant square is preserved exactly.
    """
    return RealPoint2(p.t, math.sqrt(p.s1 * p.s1 + p.s2 * p.s2 + p.s3 * p.s3))


def is_forward(q: RealPoint2, tau: float = TAU_CLASS) -> bool:
    """Strict membership in the open forward cone."""
    return q.t - tau > abs(q.x)


def is_backward(q: RealPoint2, tau: float = TAU_CLASS) -> bool:
    return -q.t - tau > abs(q.x)


def in_closed_forward(q: RealPoint2, tau: float = TAU_CLASS) -> bool:
    """Membership in the closed forward cone, fattened by ``tau``."""
    return q.t + tau >= abs(q.x)


def in_closed_backward(q: RealPoint2, tau: float = TAU_CLASS) -> bool:
    return -q.t + tau >= abs(q.x)
