from spinlab.models.profiles import Permutation


class ServiceError(Exception):
    """Base class for R-matrix service errors."""

    pass


class WeightsError(ServiceError):
    """Raised when restriction matrices cannot be built."""

    pass


class KernelError(ServiceError):
    """Raised when exact arithmetic fails."""

    pass


class SingularRestrictionError(ServiceError):
    """Raised when a restriction matrix cannot be inverted."""

    def __init__(self, sigma: Permutation, column: int) -> None:
        super().__init__(
            f"Restriction matrix of chamber {sigma} is singular at column {column}."
        )
        self.sigma = sigma


class ColumnCountError(ServiceError):
    """Raised when a computation needs a specific number of framing columns."""

    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(f"Expected {expected} framing columns, got {actual}.")


class IndexRangeError(ServiceError):
    """Raised when closed form indices or grades are out of range."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Closed form index out of range: {reason}.")
