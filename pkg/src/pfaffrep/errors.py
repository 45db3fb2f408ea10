"""Exception hierarchy shared by every module of the package."""


class PfaffrepError(Exception):
    """Base class for all package errors."""


class InvalidRing(PfaffrepError, ValueError):
    pass


class RingMismatch(PfaffrepError, TypeError):
    pass


class ShapeError(PfaffrepError, ValueError):
    pass


class ParseError(PfaffrepError, ValueError):
    """Malformed text input; ``position`` is the 0-based character offset."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class DegreeError(PfaffrepError, ValueError):
    pass


class UnsupportedDegree(DegreeError):
    pass


class AmbiguousDegree(DegreeError):
    pass


class RequiresSymbolicRing(PfaffrepError, TypeError):
    pass
