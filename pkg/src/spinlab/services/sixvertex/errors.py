class ServiceError(Exception):
    """Base class for six-vertex service errors."""

    pass


class KernelError(ServiceError):
    """Raised when exact arithmetic fails."""

    pass


class SiteRangeError(ServiceError):
    """Raised when a crossing does not fit on the chain."""

    def __init__(self, position: int, v: int) -> None:
        super().__init__(f"Cannot cross sites {position} and {position + 1} of {v}.")


class SpinRangeError(ServiceError):
    """Raised when a top label exceeds the spin."""

    def __init__(self, m: int, spin: int) -> None:
        super().__init__(f"Top label {m} must lie in 0..{spin}.")
