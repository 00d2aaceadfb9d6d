from enum import Enum
from pathlib import Path

from spinlab.models.base import datamodel
from spinlab.models.profiles import SpinProfile
from spinlab.models.reports import Mode, Report


class Suite(str, Enum):
    """Verification suites."""

    YANGIAN = "yangian"
    PROPERTIES = "properties"
    LATTICE = "lattice"
    SIXVERTEX = "sixvertex"
    BRAID = "braid"
    ALL = "all"


@datamodel
class VerifyRequest:
    """Request to run verification suites."""

    suite: Suite
    """Suite to run, or all of them."""

    profile: SpinProfile
    """Spins of the framing columns."""

    v_max: int
    """Largest grade."""

    r_max: int = 2
    """Largest generator index of the Yangian relations."""

    sites: int = 4
    """Largest chain of the six-vertex suite."""

    mode: Mode = Mode.SYMBOLIC
    """How identities between rational functions are tested."""

    seed: int = 0
    """Seed of the randomized mode."""

    trials: int = 20
    """Number of randomized trials."""

    bound: int = 10_000
    """Bound on numerators and denominators of random rationals."""

    golden: Path | None = None
    """Directory of golden files to compare the reports with."""

    update_golden: bool = False
    """Rewrite the golden files instead of comparing."""


@datamodel
class VerifyResponse:
    """Response for running verification suites."""

    reports: list[Report]
    """One report per suite, in a fixed order."""

    @property
    def passed(self) -> bool:
        """Whether every check of every report passed."""

        return all(report.passed for report in self.reports)
