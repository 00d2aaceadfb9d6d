from spinlab.config.models import Config
from spinlab.models.base import datamodel
from spinlab.services.artifacts.service import ArtifactsService
from spinlab.services.fixedpoints.service import FixedPointsService
from spinlab.services.lattice.service import LatticeService
from spinlab.services.rmatrix.service import RMatrixService
from spinlab.services.sixvertex.service import SixVertexService
from spinlab.services.verify.service import VerifyService
from spinlab.services.weights.service import WeightsService
from spinlab.services.yangian.service import YangianService


@datamodel
class State:
    """Configuration and services shared by all commands."""

    config: Config
    """Configuration for the application."""

    fixedpoints: FixedPointsService
    """Service for fixed points."""

    weights: WeightsService
    """Service for weight functions."""

    yangian: YangianService
    """Service for the Yangian action."""

    rmatrix: RMatrixService
    """Service for R-matrices."""

    lattice: LatticeService
    """Service for the lattice model."""

    sixvertex: SixVertexService
    """Service for the six-vertex model."""

    artifacts: ArtifactsService
    """Service for artifacts."""

    verify: VerifyService
    """Service for verification suites."""
