import logging

from rich.console import Console
from rich.logging import RichHandler

from spinlab.config.models import Config


class LoggingBuilder:
    """Configures logging of the package.

    Args:
        config: Config object.
    """

    def __init__(self, config: Config) -> None:
        self._config = config

    def _get_level(self) -> int:
        return logging.DEBUG if self._config.debug else logging.INFO

    def _build_handler(self) -> logging.Handler:
        return RichHandler(
            console=Console(stderr=True),
            show_path=self._config.debug,
            rich_tracebacks=True,
        )

    def build(self) -> logging.Logger:
        """Attach a handler to the package logger."""

        logger = logging.getLogger("spinlab")
        logger.setLevel(self._get_level())
        logger.handlers = [self._build_handler()]
        logger.propagate = False
        return logger
