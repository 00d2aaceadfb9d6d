from pathlib import Path

import pytest

from spinlab.config.builder import ConfigBuilder
from spinlab.config.errors import ConfigError
from spinlab.models.reports import Mode
from spinlab.services.artifacts.models import Format


def test_defaults() -> None:
    """Test if the defaults describe a serial symbolic JSON run."""

    config = ConfigBuilder().build()

    assert config.compute.threads == 1
    assert config.verify.mode == Mode.SYMBOLIC
    assert config.verify.trials == 20
    assert config.output.format == Format.JSON
    assert config.output.path is None


def test_overrides() -> None:
    """Test if overrides take effect."""

    config = ConfigBuilder(
        {"compute": {"threads": 8}, "verify": {"mode": "randomized", "seed": 7}}
    ).build()

    assert config.compute.threads == 8
    assert config.verify.mode == Mode.RANDOMIZED
    assert config.verify.seed == 7


def test_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test if nested settings are read from prefixed environment variables."""

    monkeypatch.setenv("SPINLAB__COMPUTE__THREADS", "4")
    monkeypatch.setenv("SPINLAB__OUTPUT__FORMAT", "latex")

    config = ConfigBuilder().build()

    assert config.compute.threads == 4
    assert config.output.format == Format.LATEX


def test_golden_directory(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test if the golden directory is read from its own environment variable."""

    monkeypatch.setenv("SPINLAB_GOLDEN_DIR", str(tmp_path))

    config = ConfigBuilder().build()

    assert config.golden_directory == tmp_path


def test_invalid_settings() -> None:
    """Test if invalid settings raise a configuration error."""

    with pytest.raises(ConfigError):
        ConfigBuilder({"compute": {"threads": 0}}).build()
