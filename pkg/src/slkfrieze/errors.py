"""Exception hierarchy shared by all modules."""


class FriezeError(Exception):
    pass


class NonSquare(FriezeError):
    pass


class ZeroInverse(FriezeError, ZeroDivisionError):
    pass


class ShapeMismatch(FriezeError, ValueError):
    pass


class RowOutOfRange(FriezeError, IndexError):
    pass


class ArityMismatch(FriezeError, ValueError):
    pass


class WildInput(FriezeError):
    """Transfer matrices depend on the row, or are not of xi shape."""


class NonInvertibleWindow(FriezeError):
    pass


class NonClosing(FriezeError):
    """A xi-sequence whose product is not (-1)^(k-1) I."""


class NotAWalk(FriezeError):
    pass


class NonIntegralValue(FriezeError):
    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class BudgetExhausted(FriezeError):
    """A search ran out of its budget; ``partial`` holds what was found."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(FriezeError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column
