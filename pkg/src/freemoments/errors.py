"""Exception types shared across the package."""


class FreeMomentsError(Exception):
    """Base class for all errors raised by this package."""


class OrderMismatchError(FreeMomentsError, ValueError):
    """Two truncated series with different truncation orders were combined."""


class VariableMismatchError(FreeMomentsError, ValueError):
    """Two objects over different ambient variable counts were combined."""


class PolyParseError(FreeMomentsError, ValueError):
    """Invalid polynomial text.  Carries the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position})")


class InvalidPolynomialError(FreeMomentsError, ValueError):
    """A polynomial does not satisfy a structural precondition."""


class CapExceededError(FreeMomentsError, RuntimeError):
    """A configurable size cap would be exceeded; the request was refused."""
