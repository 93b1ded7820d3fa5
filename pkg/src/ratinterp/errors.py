"""Exception types shared across the package."""


class RatInterpError(Exception):
    """Base class for errors raised by ratinterp."""


class NonExactDivision(RatInterpError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class DivisionByZeroSymbol(RatInterpError, ZeroDivisionError):
    """A variable carrying a negative exponent was bound to zero."""


class PoleHit(DivisionByZeroSymbol):
    """A denominator factor vanished under evaluation or substitution."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class MissingBinding(RatInterpError, LookupError):
    def __init__(self, var):
        super().__init__(f"no value bound for variable {var}")
        self.var = var


class NonInvertibleConstantTerm(RatInterpError, ArithmeticError):
    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class IndexOutOfRange(RatInterpError, IndexError):
    pass


class TruncationUnreachable(RatInterpError, ValueError):
    pass


class ExprSyntaxError(RatInterpError, ValueError):
    """Parse failure with a 1-based line/column location."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownSymbol(RatInterpError, NameError):
    def __init__(self, name, line=1, column=1):
        super().__init__(f"unknown symbol {name!r} at line {line}, column {column}")
        self.name = name
        self.line = line
        self.column = column
