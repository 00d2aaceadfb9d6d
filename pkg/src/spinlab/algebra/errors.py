from collections.abc import Iterable


class AlgebraError(Exception):
    """Base class for exact arithmetic errors."""

    pass


class ContextMismatchError(AlgebraError):
    """Raised when a value refers to variables outside of its context."""

    def __init__(self, names: Iterable[str]) -> None:
        joined = ", ".join(sorted(names))
        super().__init__(f"Variables not present in the context: {joined}.")


class DivisionByZeroError(AlgebraError):
    """Raised when a denominator vanishes."""

    def __init__(self, what: str = "denominator") -> None:
        super().__init__(f"Division by zero: {what} is zero.")


class SingularMatrixError(AlgebraError):
    """Raised when a matrix has no inverse."""

    def __init__(self, column: int) -> None:
        super().__init__(f"Matrix is singular: no pivot in column {column}.")
        self.column = column


class PoleOrderError(AlgebraError):
    """Raised when a residue is requested at a point that is not a simple pole."""

    def __init__(self, pole: str, reason: str) -> None:
        super().__init__(f"Not a simple pole at {pole}: {reason}.")
        self.pole = pole


class DegreeError(AlgebraError):
    """Raised when a function is unbounded at infinity."""

    def __init__(self, numerator: int, denominator: int) -> None:
        super().__init__(
            f"Numerator degree {numerator} exceeds denominator degree {denominator}."
        )
