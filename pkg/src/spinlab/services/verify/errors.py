class ServiceError(Exception):
    """Base class for verify service errors."""

    pass


class SuiteError(ServiceError):
    """Raised when a suite cannot run with the given parameters."""

    def __init__(self, suite: str, reason: str) -> None:
        super().__init__(f"Suite {suite} cannot run: {reason}")


class GoldenError(ServiceError):
    """Raised when golden files cannot be read or written."""

    pass
