"""Shared exception types."""


class ExactDivisionError(ValueError):
    """Raised when an exact ring division leaves a nonzero remainder.

    The offending remainder is kept on the exception so callers can report it.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class SpecFormatError(ValueError):
    """Raised for malformed cover-specification documents."""
