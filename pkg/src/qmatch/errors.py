"""Exception hierarchy shared by every module."""


class QSeriesError(Exception):
    """Base class for all errors raised by qmatch."""


class ConstructionError(QSeriesError, ValueError):
    """Malformed series data (e.g. coefficient count does not match the window)."""


class NonUnitLeading(QSeriesError, ArithmeticError):
    """Inverting or dividing by a series whose leading coefficient is not +1/-1."""


class OrderExceeded(QSeriesError, IndexError):
    """A coefficient at or beyond the truncation order was requested."""


class InsufficientOrder(QSeriesError):
    """The truncation window yields fewer comparisons than required."""

    def __init__(self, message, checked=0, required=0):
        super().__init__(message)
        self.checked = checked
        self.required = required


class ParseError(QSeriesError, ValueError):
    """Syntax error in an expression; ``offset`` is the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownId(QSeriesError, KeyError):
    """No registry entry with the requested id."""
