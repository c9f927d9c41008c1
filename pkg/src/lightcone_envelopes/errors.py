"""Exception hierarchy for the lightcone-envelopes package."""


class LightconeError(Exception):
    """Base class for all package errors."""


class NotSpacelike(LightconeError):
    """A vector required to be strictly spacelike is not."""


class UnsupportedRegion(LightconeError):
    """The requested operation has no closed form or sound sampling
    strategy for this region type."""


class UnsupportedConfiguration(LightconeError):
    """Geometric configuration outside the implemented case analysis."""


class SingularPoint(LightconeError):
    """Point too close to the singular quadric of a transform."""


class LightlikeSlope(LightconeError):
    """Line slope of magnitude one; the hyperbola image degenerates."""


class PreconditionFailed(LightconeError):
    """A documented operation precondition does not hold."""


class BadGeometry(LightconeError):
    """Curve-family construction failed a geometric validity check."""


class TargetTooClose(LightconeError):
    """Cauchy target closer to the contour than the node spacing."""


class NoTangent(LightconeError):
    """No tangent line to the mass-gap cone through the given vertex."""


class SchemaError(LightconeError):
    """Malformed region/point JSON."""
