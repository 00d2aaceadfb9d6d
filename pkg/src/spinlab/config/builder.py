from typing import Any

from pydantic import ValidationError

from spinlab.config.errors import ConfigError
from spinlab.config.models import Config


class ConfigBuilder:
    """Builds the config.

    Args:
        overrides: Values taking precedence over the environment.
    """

    def __init__(self, overrides: dict[str, Any] | None = None) -> None:
        self._overrides = overrides or {}

    def build(self) -> Config:
        """Build the config."""

        try:
            return Config(**self._overrides)
        except ValidationError as ex:
            raise ConfigError(str(ex)) from ex
