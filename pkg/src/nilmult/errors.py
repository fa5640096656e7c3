"""Exception hierarchy shared by the library and the command line."""


class NilmultError(Exception):
    """Base class for every error raised by this package."""


class ParseError(NilmultError, ValueError):
    """Malformed group expression; ``offset`` is the 0-based column."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class CapacityError(NilmultError):
    """Requested enumeration is beyond the hard size caps."""


class ScopeError(NilmultError):
    """Input is well formed but outside what the library can compute."""


class VerificationError(NilmultError):
    """A closed form disagreed with an independent evaluation."""
