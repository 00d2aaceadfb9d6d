class ServiceError(Exception):
    """Base class for Yangian service errors."""

    pass


class FixedPointsError(ServiceError):
    """Raised when a fixed point is invalid."""

    pass


class KernelError(ServiceError):
    """Raised when exact arithmetic fails."""

    pass


class SymbolicSpinsError(ServiceError):
    """Raised when module matrices are requested for symbolic spins."""

    def __init__(self) -> None:
        super().__init__("Module matrices need concrete spins.")


class SingleColumnError(ServiceError):
    """Raised when a single-column computation gets another profile."""

    def __init__(self, w: int) -> None:
        super().__init__(f"Expected a single framing column, got {w}.")

