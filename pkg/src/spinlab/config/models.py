from pathlib import Path

from pydantic import AliasChoices, BaseModel, Field

from spinlab.config.base import BaseConfig
from spinlab.models.reports import Mode
from spinlab.services.artifacts.models import Format


class ComputeConfig(BaseModel):
    """Configuration for computations."""

    threads: int = Field(1, ge=1, le=64)
    """Worker threads for parallel sums."""


class VerifyConfig(BaseModel):
    """Configuration for verification suites."""

    mode: Mode = Mode.SYMBOLIC
    """How identities between rational functions are tested."""

    seed: int = Field(0, ge=0)
    """Seed of the randomized mode."""

    trials: int = Field(20, ge=1, le=10_000)
    """Number of randomized trials."""

    bound: int = Field(10_000, ge=1)
    """Bound on numerators and denominators of random rationals."""


class OutputConfig(BaseModel):
    """Configuration for artifacts."""

    format: Format = Format.JSON
    """Output format."""

    path: Path | None = None
    """File to write artifacts to, standard output when unset."""


class GoldenConfig(BaseModel):
    """Configuration for golden file regression."""

    dir: Path | None = None
    """Directory of golden files."""


class Config(BaseConfig):
    """Configuration for the application."""

    compute: ComputeConfig = ComputeConfig()
    """Configuration for computations."""

    verify: VerifyConfig = VerifyConfig()
    """Configuration for verification suites."""

    output: OutputConfig = OutputConfig()
    """Configuration for artifacts."""

    golden: GoldenConfig = GoldenConfig()
    """Configuration for golden file regression."""

    golden_dir: Path | None = Field(
        None,
        validation_alias=AliasChoices("spinlab_golden_dir", "spinlab__golden_dir"),
    )
    """Directory of golden files, overrides the nested setting."""

    debug: bool = False
    """Enable debug logging."""

    @property
    def golden_directory(self) -> Path | None:
        """Directory of golden files from either setting."""

        return self.golden_dir or self.golden.dir
