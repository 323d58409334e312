"""Exception types shared across the package."""


class SignotopeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdge(SignotopeError, ValueError):
    """A vertex tuple is not a strictly increasing r-subset of [n]."""


class InvalidArgument(SignotopeError, ValueError):
    """An argument violates an operation's precondition."""


class TernaryNotAllowed(SignotopeError):
    """A binary-only operation received a coloring containing 0 entries."""


class TooLarge(SignotopeError):
    """A requested object exceeds the configured resource cap."""


class NoReduction(SignotopeError):
    """The composition has no reduction (it is all ones or a single part)."""


class NotMonotone(SignotopeError):
    """An operation requiring a monotone coloring received a non-monotone one."""


class NotRealizable(SignotopeError):
    """No crossing sweep realizes the constraints.

    For monotone inputs this indicates an internal inconsistency and is
    reported loudly rather than swallowed.
    """


class InvalidWiring(SignotopeError):
    """A sweep is not a valid wiring diagram (non-adjacent or repeated swap)."""


class ParseError(SignotopeError):
    """A sign-function file is malformed; carries line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
