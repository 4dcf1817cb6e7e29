"""Exception hierarchy shared by every spincut module."""


class SpinCError(Exception):
    """Base class for all errors raised by spincut."""


class DimensionError(SpinCError, ValueError):
    """Blade index outside {1..k}, or operands living in different algebras."""


class ParityError(SpinCError, ValueError):
    """An odd number of vectors for a Spin element, or an even plane parameter."""


class NormError(SpinCError, ValueError):
    """A vector or point that should have unit norm does not."""


class InvalidElementError(SpinCError, ValueError):
    """A group or algebra element fails its defining invariant."""


class UnsupportedError(SpinCError, NotImplementedError):
    """Requested operation is outside what this library implements."""


class ChartMismatchError(SpinCError, ValueError):
    pass


class ProjectionError(SpinCError, ValueError):
    pass


class NotDescendableError(SpinCError, ValueError):
    """A connection fails the conditions needed to pass to a quotient bundle."""


class EmptyLevelSetError(SpinCError, ValueError):
    pass


class BoundaryCutError(SpinCError, ValueError):
    """Cut level is not strictly inside the moment image."""
