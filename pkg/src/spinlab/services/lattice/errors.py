from spinlab.models.profiles import FixedPoint


class ServiceError(Exception):
    """Base class for lattice service errors."""

    pass


class WeightsError(ServiceError):
    """Raised when a weight function cannot be built."""

    pass


class KernelError(ServiceError):
    """Raised when exact arithmetic fails."""

    pass


class InvalidBoundaryError(ServiceError):
    """Raised when a boundary is not a fixed point of the right grade."""

    def __init__(self, boundary: FixedPoint, ell: tuple[int, ...], v: int) -> None:
        super().__init__(
            f"{boundary} is not a boundary with {v} rows for spins {ell}."
        )


class InvalidStateError(ServiceError):
    """Raised when a state violates the occupation bounds or conservation."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid lattice state: {reason}.")


class LabelRangeError(ServiceError):
    """Raised when column labels exceed the spin."""

    def __init__(self, top: int, bottom: int, spin: int) -> None:
        super().__init__(f"Labels {top} and {bottom} must lie in 0..{spin}.")
