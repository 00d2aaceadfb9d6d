from spinlab.models.profiles import FixedPoint


class ServiceError(Exception):
    """Base class for weight function service errors."""

    pass


class FixedPointsError(ServiceError):
    """Raised when a fixed point operation fails."""

    pass


class KernelError(ServiceError):
    """Raised when exact arithmetic fails."""

    pass


class DimensionError(ServiceError):
    """Raised when shuffle factors cannot be combined."""

    def __init__(self, first: tuple[int, ...], second: tuple[int, ...]) -> None:
        super().__init__(
            f"Framings {first} and {second} must be 0/1 vectors of equal length "
            "with disjoint support."
        )


class NotPolynomialError(ServiceError):
    """Raised when a shuffle sum does not clear its denominators."""

    def __init__(self) -> None:
        super().__init__("Shuffle sum is not a polynomial, factors must be symmetric.")


class SizeMismatchError(ServiceError):
    """Raised when restricting to a fixed point of another grade."""

    def __init__(self, point: FixedPoint, v: int) -> None:
        super().__init__(f"Cannot restrict a weight of grade {v} to {point}.")


class DomainError(ServiceError):
    """Raised when a closed formula is used outside of its domain."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Closed formula does not apply: {reason}.")
