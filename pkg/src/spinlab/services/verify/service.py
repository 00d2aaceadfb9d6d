import logging
from collections.abc import Callable, Generator
from contextlib import contextmanager

from spinlab.models import reports as r
from spinlab.models.profiles import SpinProfile
from spinlab.services.artifacts import convert
from spinlab.services.artifacts import errors as ae
from spinlab.services.artifacts import models as am
from spinlab.services.artifacts.service import ArtifactsService
from spinlab.services.lattice import errors as le
from spinlab.services.lattice import models as lm
from spinlab.services.lattice.service import LatticeService
from spinlab.services.rmatrix import errors as rme
from spinlab.services.rmatrix import models as rm
from spinlab.services.rmatrix.service import RMatrixService
from spinlab.services.sixvertex import errors as se
from spinlab.services.sixvertex import models as sm
from spinlab.services.sixvertex.service import SixVertexService
from spinlab.services.verify import errors as e
from spinlab.services.verify import models as m
from spinlab.services.weights import errors as we
from spinlab.services.weights import models as wm
from spinlab.services.weights.service import WeightsService
from spinlab.services.yangian import errors as ye
from spinlab.services.yangian import models as ym
from spinlab.services.yangian.service import YangianService

logger = logging.getLogger(__name__)

SERVICE_ERRORS = (
    ye.ServiceError,
    we.ServiceError,
    rme.ServiceError,
    le.ServiceError,
    se.ServiceError,
)

# Suites run by "all", in report order
ALL = (
    m.Suite.YANGIAN,
    m.Suite.PROPERTIES,
    m.Suite.LATTICE,
    m.Suite.SIXVERTEX,
    m.Suite.BRAID,
)


class VerifyService:
    """Service running verification suites and comparing them with golden files."""

    def __init__(
        self,
        yangian: YangianService,
        weights: WeightsService,
        rmatrix: RMatrixService,
        lattice: LatticeService,
        sixvertex: SixVertexService,
        artifacts: ArtifactsService,
    ) -> None:
        self._yangian = yangian
        self._weights = weights
        self._rmatrix = rmatrix
        self._lattice = lattice
        self._sixvertex = sixvertex
        self._artifacts = artifacts

    @contextmanager
    def _handle_errors(self, suite: m.Suite) -> Generator[None, None, None]:
        try:
            yield
        except SERVICE_ERRORS as ex:
            raise e.SuiteError(suite.value, str(ex)) from ex
        except ae.ServiceError as ex:
            raise e.GoldenError(str(ex)) from ex

    def _runner(self, suite: m.Suite) -> Callable[[m.VerifyRequest], r.Report]:
        return {
            m.Suite.YANGIAN: self._run_yangian,
            m.Suite.PROPERTIES: self._run_properties,
            m.Suite.LATTICE: self._run_lattice,
            m.Suite.SIXVERTEX: self._run_sixvertex,
            m.Suite.BRAID: self._run_braid,
        }[suite]

    def _grades(self, request: m.VerifyRequest) -> range:
        return range(min(request.v_max, request.profile.total) + 1)

    def _run_yangian(self, request: m.VerifyRequest) -> r.Report:
        profile = SpinProfile(ell=request.profile.ell)
        v_max = min(request.v_max, profile.total)

        req = ym.RelationsRequest(
            profile=profile,
            v_max=v_max,
            r_max=request.r_max,
            mode=request.mode,
            seed=request.seed,
            trials=request.trials,
            bound=request.bound,
        )
        reports = [self._yangian.relations(req).report]

        if profile.w == 1:
            req = ym.EvaluationRequest(profile=profile, k_max=request.r_max)
            reports.append(self._yangian.evaluation(req).report)
        else:
            req = ym.CoproductRequest(profile=profile, v_max=v_max, r_max=request.r_max)
            reports.append(self._yangian.coproduct(req).report)

        return r.merge(m.Suite.YANGIAN.value, reports)

    def _run_properties(self, request: m.VerifyRequest) -> r.Report:
        reports = []
        for v in self._grades(request):
            req = wm.PropertiesRequest(profile=request.profile, v=v)
            reports.append(self._weights.properties(req).report)
            req = rm.IdentitiesRequest(profile=request.profile, v=v)
            reports.append(self._rmatrix.identities(req).report)
        return r.merge(m.Suite.PROPERTIES.value, reports)

    def _run_lattice(self, request: m.VerifyRequest) -> r.Report:
        reports = []
        for v in self._grades(request):
            req = lm.TheoremRequest(profile=request.profile, v=v)
            reports.append(self._lattice.theorem(req).report)
        return r.merge(m.Suite.LATTICE.value, reports)

    def _run_sixvertex(self, request: m.VerifyRequest) -> r.Report:
        req = sm.IdentitiesRequest(v_max=request.sites)
        return self._sixvertex.identities(req).report

    def _run_braid(self, request: m.VerifyRequest) -> r.Report:
        reports = []
        for v in self._grades(request):
            req = rm.BraidRequest(profile=request.profile, v=v)
            reports.append(self._rmatrix.braid(req).report)
        return r.merge(m.Suite.BRAID.value, reports)

    def _suites(self, request: m.VerifyRequest) -> list[m.Suite]:
        if request.suite != m.Suite.ALL:
            return [request.suite]
        if request.profile.w == 3:
            return list(ALL)
        return [suite for suite in ALL if suite != m.Suite.BRAID]

    def artifact(self, request: m.VerifyRequest, report: r.Report) -> am.Artifact:
        """Wrap a report into a document named after the suite and its parameters."""

        ell = "-".join(str(spin) for spin in request.profile.ell)
        return am.Artifact(
            name=f"{report.suite}-l{ell}-v{request.v_max}",
            subject=convert.subject(
                ell=request.profile.ell,
                symbolic=request.profile.symbolic,
                v_max=request.v_max,
                mode=request.mode,
            ),
            reports=[report],
        )

    def _golden(self, request: m.VerifyRequest, reports: list[r.Report]) -> r.Report:
        checks = []
        for report in reports:
            artifact = self.artifact(request, report)
            if request.update_golden:
                req = am.StoreRequest(artifact=artifact, directory=request.golden)
                self._artifacts.store(req)
            else:
                req = am.CompareRequest(artifact=artifact, directory=request.golden)
                checks.append(self._artifacts.compare(req).check)
        return r.Report(suite="golden", checks=checks)

    def verify(self, request: m.VerifyRequest) -> m.VerifyResponse:
        """Run the requested suites, in a fixed order."""

        reports = []
        for suite in self._suites(request):
            with self._handle_errors(suite):
                reports.append(self._runner(suite)(request))

        if request.golden is not None:
            with self._handle_errors(m.Suite.ALL):
                golden = self._golden(request, reports)
            if golden.checks:
                reports.append(golden)

        failed = sum(len(report.failures) for report in reports)
        logger.info(
            "Verified %d suites: %d checks, %d failed.",
            len(reports),
            sum(len(report.checks) for report in reports),
            failed,
        )

        return m.VerifyResponse(
            reports=reports,
        )
