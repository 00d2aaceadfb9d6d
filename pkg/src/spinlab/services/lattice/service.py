import logging
from collections.abc import Generator
from contextlib import contextmanager

from spinlab.algebra.context import X, RFunc, y_name
from spinlab.algebra.errors import AlgebraError
from spinlab.algebra.functions import substitute
from spinlab.algebra.variables import Variables, chain_context
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.profiles import FixedPoint, SpinProfile, identity
from spinlab.services.fixedpoints import models as fm
from spinlab.services.fixedpoints.service import FixedPointsService
from spinlab.services.lattice import errors as e
from spinlab.services.lattice import models as m
from spinlab.services.lattice.states import (
    boltzmann_weight,
    enumerate_states,
    render,
    violation,
)
from spinlab.services.lattice.vertex import column_transfer
from spinlab.services.weights import errors as we
from spinlab.services.weights import models as wm
from spinlab.services.weights.service import WeightsService
from spinlab.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

SPIN = "l"


class LatticeService:
    """Service for the higher spin lattice model."""

    def __init__(
        self,
        fixedpoints: FixedPointsService,
        weights: WeightsService,
        threads: int = 1,
    ) -> None:
        self._fixedpoints = fixedpoints
        self._weights = weights
        self._threads = threads

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except we.ServiceError as ex:
            raise e.WeightsError(str(ex)) from ex
        except AlgebraError as ex:
            raise e.KernelError(str(ex)) from ex

    def _validate(self, profile: SpinProfile, v: int, boundary: FixedPoint) -> None:
        if not profile.contains(boundary) or sum(boundary) != v:
            raise e.InvalidBoundaryError(boundary, profile.ell, v)

    def _states(
        self, profile: SpinProfile, v: int, boundary: FixedPoint
    ) -> list[m.LatticeState]:
        self._validate(profile, v, boundary)
        states = list(enumerate_states(profile.ell, v, tuple(boundary)))
        logger.debug("Found %d states for boundary %s.", len(states), boundary)
        return states

    def _partition(
        self, profile: SpinProfile, v: int, boundary: FixedPoint
    ) -> tuple[Variables, RFunc, int]:
        states = self._states(profile, v, boundary)
        variables = Variables(profile.ell, v, profile.symbolic)
        weights = ordered_map(
            lambda state: boltzmann_weight(variables, state), states, self._threads
        )
        total = variables.ctx.zero
        for weight in weights:
            total += weight
        return variables, total, len(states)

    def states(self, request: m.StatesRequest) -> m.StatesResponse:
        """Enumerate all states with a given north boundary."""

        states = self._states(request.profile, request.v, request.boundary)

        return m.StatesResponse(
            states=states,
        )

    def weight(self, request: m.WeightRequest) -> m.WeightResponse:
        """Compute the Boltzmann weight of a state."""

        profile = request.profile
        state = request.state

        reason = violation(state, profile.ell)
        if reason is not None:
            raise e.InvalidStateError(reason)

        variables = Variables(profile.ell, state.v, profile.symbolic)

        with self._handle_errors():
            value = boltzmann_weight(variables, state)

        return m.WeightResponse(
            variables=variables,
            value=value,
        )

    def partition(self, request: m.PartitionRequest) -> m.PartitionResponse:
        """Sum the weights of all states with a given north boundary."""

        with self._handle_errors():
            variables, value, count = self._partition(
                request.profile, request.v, request.boundary
            )

        return m.PartitionResponse(
            variables=variables,
            value=value,
            count=count,
        )

    def transfer(self, request: m.TransferRequest) -> m.TransferResponse:
        """Build the column transfer operator with spectral parameter ``x``."""

        spin, top, bottom, v = request.spin, request.top, request.bottom, request.v

        if not (0 <= top <= spin and 0 <= bottom <= spin):
            raise e.LabelRangeError(top, bottom, spin)

        extra = (X, SPIN) if request.symbolic else (X,)
        ctx = chain_context(v, extra)
        x = ctx.var(X)
        value = ctx.var(SPIN) if request.symbolic else ctx.const(spin)
        parameters = [ctx.var(y_name(i)) - x for i in range(1, v + 1)]

        with self._handle_errors():
            matrix = column_transfer(ctx, parameters, value, spin, top, bottom)

        return m.TransferResponse(
            matrix=matrix,
        )

    def _transfer_product(self, variables: Variables, boundary: FixedPoint) -> RFunc:
        ctx = variables.ctx
        v = variables.v
        factors = []
        for j, count in enumerate(boundary, start=1):
            parameters = [variables.y(i) - variables.z(j) for i in range(1, v + 1)]
            factors.append(
                column_transfer(
                    ctx,
                    parameters,
                    variables.spin(j),
                    variables.spins[j - 1],
                    count,
                    0,
                )
            )
        return om.chain(ctx, *factors).entry((1,) * v, (0,) * v)

    def prefactor(self, variables: Variables, boundary: FixedPoint) -> RFunc:
        """Factor between the partition function and the weight function."""

        v, w = sum(boundary), len(boundary)
        result = variables.ctx.one
        occupied = 0
        for j, count in enumerate(boundary, start=1):
            occupied += count
            if (count * (v + w - j - occupied)) % 2:
                result = -result
            result *= (2 * variables.hbar) ** count
            result *= variables.falling(variables.spin(j), count)
        return result

    def theorem(self, request: m.TheoremRequest) -> m.TheoremResponse:
        """Compare partition functions with weight functions for every boundary."""

        profile = request.profile
        v = request.v
        checks: list[r.Check] = []

        with self._handle_errors():
            req = fm.EnumerateRequest(profile=profile, v=v)
            boundaries = self._fixedpoints.enumerate(req).points
            for boundary in boundaries:
                checks.extend(self._check_boundary(profile, v, boundary))

        report = r.Report(suite="lattice", checks=checks)

        logger.info(
            "Lattice model for %s with %d rows: %d checks, %d failed.",
            profile.ell,
            v,
            len(report.checks),
            len(report.failures),
        )

        return m.TheoremResponse(
            report=report,
        )

    def _check_boundary(
        self, profile: SpinProfile, v: int, boundary: FixedPoint
    ) -> list[r.Check]:
        checks = []
        states = self._states(profile, v, boundary)

        broken = [reason for s in states if (reason := violation(s, profile.ell))]
        checks.append(
            r.check(
                "conservation",
                not broken,
                broken[0] if broken else None,
                boundary=boundary,
            )
        )

        variables, value, _ = self._partition(profile, v, boundary)

        sigma = identity(profile.w)
        req = wm.WeightRequest(profile=profile, sigma=sigma, point=boundary)
        weight = self._weights.weight(req).value
        expected = self.prefactor(variables, boundary) * weight
        checks.append(
            r.check(
                "theorem",
                not (value - expected),
                f"{value} != {expected}",
                boundary=boundary,
            )
        )

        product = self._transfer_product(variables, boundary)
        checks.append(
            r.check(
                "transfer",
                not (product - value),
                f"{product} != {value}",
                boundary=boundary,
            )
        )

        ctx = variables.ctx
        symmetric = True
        for i in range(1, v):
            swap = {y_name(i): variables.y(i + 1), y_name(i + 1): variables.y(i)}
            if substitute(ctx, value, swap) != value:
                symmetric = False
        checks.append(
            r.check("symmetry", symmetric and value.denom.is_one, boundary=boundary)
        )

        return checks

    def render(self, request: m.RenderRequest) -> m.RenderResponse:
        """Draw a state."""

        return m.RenderResponse(
            text=render(request.state),
        )
