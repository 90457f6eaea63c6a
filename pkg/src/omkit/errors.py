"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class OmkitError(Exception):
    """Base class for all errors raised by omkit."""


class ScalarSyntaxError(OmkitError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class UnknownSymbolError(OmkitError, ValueError):
    pass


class ParametricError(OmkitError, ValueError):
    """An operation that needs rational data received symbolic entries."""


class UndecidableSignError(OmkitError, ValueError):
    """The sign of a polynomial is not determined by the positivity assumptions."""

    def __init__(self, message: str, value=None):
        self.value = value
        super().__init__(message)


class ShapeError(OmkitError, ValueError):
    pass


class EmptyIntervalError(OmkitError, ValueError):
    pass


class NetworkError(OmkitError, ValueError):
    pass
