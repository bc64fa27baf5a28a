"""Exception hierarchy shared by every module."""


class QuarticaError(Exception):
    """Base class for all library errors."""


class DegenerateError(QuarticaError):
    """A construction hit a degenerate configuration (zero denominator, trivial orbit, ...)."""


class NotASolutionError(QuarticaError):
    """Input was required to satisfy x^4 + y^4 = z^4 + w^4 but does not."""


class OffCurveError(QuarticaError):
    """Input was required to lie on a family member but does not."""


class FieldMismatchError(QuarticaError):
    """Binary operation between elements of different quadratic extensions."""
