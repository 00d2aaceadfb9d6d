from enum import Enum

from spinlab.algebra.context import RFunc
from spinlab.models.base import datamodel
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import FixedPoint, SpinProfile
from spinlab.models.reports import Mode, Report


class Generator(str, Enum):
    """Generators of the Yangian."""

    E = "e"
    F = "f"
    PSI = "psi"


@datamodel
class PsiRequest:
    """Request to compute the Cartan eigenvalue series of a fixed point."""

    profile: SpinProfile
    """Spins of the framing columns."""

    point: FixedPoint
    """Fixed point."""


@datamodel
class PsiResponse:
    """Response for computing a Cartan eigenvalue series."""

    value: RFunc
    """Rational function of the spectral variable ``u``."""


@datamodel
class OperatorRequest:
    """Request to build one block of a generator."""

    profile: SpinProfile
    """Spins of the framing columns."""

    generator: Generator
    """Which generator to build."""

    index: int
    """Mode index of the generator."""

    v: int
    """Grade the block starts from (``e``, ``psi``) or lands on (``f``)."""


@datamodel
class OperatorResponse:
    """Response for building a generator block."""

    matrix: OpMatrix
    """Rows are targets, columns sources."""


@datamodel
class RelationsRequest:
    """Request to verify the defining relations on a module."""

    profile: SpinProfile
    """Spins of the framing columns."""

    v_max: int
    """Highest grade to check."""

    r_max: int
    """Highest mode index to check."""

    mode: Mode = Mode.SYMBOLIC
    """How identities are compared."""

    seed: int = 0
    """Seed of the random points in randomized mode."""

    trials: int = 20
    """Number of random points in randomized mode."""

    bound: int = 10_000
    """Bound on numerators and denominators of random rationals."""


@datamodel
class RelationsResponse:
    """Response for verifying the defining relations."""

    report: Report
    """Outcome of every check."""


@datamodel
class EvaluationRequest:
    """Request to compare the single-column module with the evaluation module."""

    profile: SpinProfile
    """Spins of the framing columns, a single column."""

    k_max: int = 2
    """Highest mode index to check."""


@datamodel
class EvaluationResponse:
    """Response for the evaluation module comparison."""

    report: Report
    """Outcome of every check."""


@datamodel
class CoproductRequest:
    """Request to check that generators factorize over the columns."""

    profile: SpinProfile
    """Spins of the framing columns."""

    v_max: int
    """Highest grade to check."""

    r_max: int = 1
    """Highest mode index to check."""


@datamodel
class CoproductResponse:
    """Response for the factorization check."""

    report: Report
    """Outcome of every check."""
