"""Exception types raised on invalid geometric input."""


class GeometryError(ValueError):
    """Base class for domain errors (invalid or unsupported geometric input)."""


class DegenerateMetricError(GeometryError):
    pass


class DegenerateSlantError(GeometryError):
    """Raised for slant constants a = b = 0, for which no null curve exists."""


class UnsupportedCurveTypeError(GeometryError):
    """Raised when a curve falls outside the slant types the g~ theory covers."""


class InvalidReparameterizationError(GeometryError):
    pass
