import pytest
from typer.testing import CliRunner

from spinlab.app import AppBuilder
from spinlab.config.builder import ConfigBuilder
from spinlab.config.models import Config
from spinlab.state import State


@pytest.fixture(scope="session")
def config() -> Config:
    """Loaded configuration."""

    return ConfigBuilder().build()


@pytest.fixture(scope="session")
def state(config: Config) -> State:
    """Reusable services."""

    return AppBuilder(config).build()


@pytest.fixture(scope="session")
def runner() -> CliRunner:
    """Reusable CLI runner."""

    return CliRunner()
