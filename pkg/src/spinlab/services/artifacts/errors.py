from pathlib import Path


class ServiceError(Exception):
    """Base class for artifacts service errors."""

    pass


class SerializationError(ServiceError):
    """Raised when a document cannot be serialized or parsed."""

    pass


class StorageError(ServiceError):
    """Raised when a document cannot be read or written."""

    def __init__(self, path: Path, reason: str) -> None:
        super().__init__(f"Cannot access {path}: {reason}.")
