"""Exception hierarchy shared by every module in the package."""


class ScppError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(ScppError, ValueError):
    """Input text or values do not describe a valid object.

    ``position`` is the zero-based token index of the offending item when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)
        self.position = position


class PromiseViolation(ScppError, ValueError):
    """The input does not satisfy the promise the algorithm relies on."""


class InvariantBreach(ScppError, RuntimeError):
    """An internal postcondition check failed."""


class NonTerminationError(ScppError, RuntimeError):
    """A procedure exceeded its iteration cap."""


class StuckMachineError(ScppError, RuntimeError):
    """A Turing machine reached a configuration with no transition."""
