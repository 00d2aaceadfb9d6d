from spinlab.config.models import Config
from spinlab.services.artifacts.service import ArtifactsService
from spinlab.services.fixedpoints.service import FixedPointsService
from spinlab.services.lattice.service import LatticeService
from spinlab.services.rmatrix.service import RMatrixService
from spinlab.services.sixvertex.service import SixVertexService
from spinlab.services.verify.service import VerifyService
from spinlab.services.weights.service import WeightsService
from spinlab.services.yangian.service import YangianService
from spinlab.state import State


class AppBuilder:
    """Builds the services of the application.

    Args:
        config: Config object.
    """

    def __init__(self, config: Config) -> None:
        self._config = config

    def _get_threads(self) -> int:
        return self._config.compute.threads

    def build(self) -> State:
        """Build the state with all services wired together."""

        threads = self._get_threads()
        fixedpoints = FixedPointsService()
        weights = WeightsService(fixedpoints, threads=threads)
        yangian = YangianService(threads=threads)
        rmatrix = RMatrixService(weights, threads=threads)
        lattice = LatticeService(fixedpoints, weights, threads=threads)
        sixvertex = SixVertexService(threads=threads)
        artifacts = ArtifactsService()
        verify = VerifyService(yangian, weights, rmatrix, lattice, sixvertex, artifacts)

        return State(
            config=self._config,
            fixedpoints=fixedpoints,
            weights=weights,
            yangian=yangian,
            rmatrix=rmatrix,
            lattice=lattice,
            sixvertex=sixvertex,
            artifacts=artifacts,
            verify=verify,
        )
