"""Exception hierarchy for the AMAC package."""


class AmacError(Exception):
    """Base class for every error raised by this package."""


class InvalidAngle(AmacError, ValueError):
    pass


class DegenerateReference(AmacError, ValueError):
    """The projection pole coincides with the tangent point."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class PoleProjection(AmacError, ValueError):
    """A circle point with no finite preimage on the line was back-projected."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class BlockOverflow(AmacError, OverflowError):
    """A block heuristic produced a non-finite value."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class InvalidIdentifier(AmacError, ValueError):
    pass


class InvalidKey(AmacError, ValueError):
    pass


class ParseError(AmacError, ValueError):
    pass
