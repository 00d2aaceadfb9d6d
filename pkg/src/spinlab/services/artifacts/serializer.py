import builtins
from collections.abc import Generator
from contextlib import contextmanager
from typing import Generic, TypeVar

from pydantic import TypeAdapter, ValidationError

from spinlab.services.artifacts import errors as e

T = TypeVar("T")


class Serializer(Generic[T]):
    """Serializes documents to canonical JSON."""

    def __init__(self, type: builtins.type[T]) -> None:
        self.Adapter = TypeAdapter(type)

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except ValidationError as ex:
            raise e.SerializationError(str(ex.errors(include_context=False))) from ex

    def json(self, value: T) -> str:
        """Serialize to JSON."""

        with self._handle_errors():
            json = self.Adapter.dump_json(value, by_alias=True, indent=2)

        return json.decode() + "\n"

    def parse(self, data: str | bytes) -> T:
        """Parse from JSON."""

        with self._handle_errors():
            return self.Adapter.validate_json(data)
