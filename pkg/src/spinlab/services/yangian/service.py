import logging
from collections.abc import Generator
from contextlib import contextmanager
from fractions import Fraction
from math import comb
from random import Random

from spinlab.algebra.context import HBAR, RFunc
from spinlab.algebra.errors import AlgebraError, DivisionByZeroError
from spinlab.algebra.functions import substitute
from spinlab.algebra.sampling import random_point
from spinlab.models import reports as r
from spinlab.models.profiles import SpinProfile
from spinlab.models.reports import Mode
from spinlab.services.fixedpoints import errors as fe
from spinlab.services.yangian import errors as e
from spinlab.services.yangian import models as m
from spinlab.services.yangian.operators import ModuleOperators
from spinlab.services.yangian.relations import RelationChecker
from spinlab.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

_REDRAWS = 100


class YangianService:
    """Service for the Yangian action on the fixed point basis."""

    def __init__(
        self,
        threads: int = 1,
        operators: type[ModuleOperators] = ModuleOperators,
    ) -> None:
        self._threads = threads
        self._factory = operators
        self._modules: dict[tuple[int, ...], ModuleOperators] = {}

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except fe.ServiceError as ex:
            raise e.FixedPointsError(str(ex)) from ex
        except AlgebraError as ex:
            raise e.KernelError(str(ex)) from ex

    def _module(self, profile: SpinProfile) -> ModuleOperators:
        if profile.symbolic:
            raise e.SymbolicSpinsError()

        if profile.ell not in self._modules:
            self._modules[profile.ell] = self._factory(profile)
        return self._modules[profile.ell]

    def psi(self, request: m.PsiRequest) -> m.PsiResponse:
        """Compute the Cartan eigenvalue series of a fixed point."""

        profile = request.profile
        point = request.point

        with self._handle_errors():
            if not profile.contains(point):
                raise fe.InvalidPointError(point, profile.ell)
            value = self._module(profile).psi_series(point)

        return m.PsiResponse(
            value=value,
        )

    def operator(self, request: m.OperatorRequest) -> m.OperatorResponse:
        """Build one block of a generator."""

        ops = self._module(request.profile)
        build = getattr(ops, request.generator.value)

        with self._handle_errors():
            matrix = build(request.index, request.v)

        return m.OperatorResponse(
            matrix=matrix,
        )

    def _trial(
        self, ops: ModuleOperators, request: m.RelationsRequest, trial: int
    ) -> list[r.Check]:
        rng = Random(f"{request.seed}:{trial}")
        spread = 2 * request.profile.total

        for _ in range(_REDRAWS):
            point = random_point(rng, request.profile.w, request.bound, spread)

            def specialize(value: RFunc) -> RFunc:
                return substitute(ops.ctx, value, point)

            try:
                checker = RelationChecker(ops, specialize, trial)
                return checker.check(request.v_max, request.r_max)
            except DivisionByZeroError:
                logger.debug("Random point %s hit a pole, redrawing.", point)

        raise e.KernelError(f"No regular random point found in trial {trial}.")

    def relations(self, request: m.RelationsRequest) -> m.RelationsResponse:
        """Verify the defining relations on all grades up to a bound."""

        ops = self._module(request.profile)

        with self._handle_errors():
            if request.mode == Mode.SYMBOLIC:
                checks = RelationChecker(ops).check(request.v_max, request.r_max)
            else:
                trials = ordered_map(
                    lambda trial: self._trial(ops, request, trial),
                    range(request.trials),
                    self._threads,
                )
                checks = [check for batch in trials for check in batch]

        report = r.Report(suite="yangian", checks=checks)

        logger.info(
            "Relations for %s in %s mode: %d checks, %d failed.",
            request.profile.ell,
            request.mode.value,
            len(report.checks),
            len(report.failures),
        )

        return m.RelationsResponse(
            report=report,
        )

    def evaluation(self, request: m.EvaluationRequest) -> m.EvaluationResponse:
        """Compare the single-column module with the evaluation module."""

        profile = request.profile
        if profile.w != 1:
            raise e.SingleColumnError(profile.w)

        ops = self._module(profile)
        with self._handle_errors():
            checks = _evaluation_checks(ops, request.k_max)

        report = r.Report(suite="evaluation", checks=checks)

        logger.info(
            "Evaluation module for spin %d: %d checks, %d failed.",
            profile.ell[0],
            len(report.checks),
            len(report.failures),
        )

        return m.EvaluationResponse(
            report=report,
        )

    def coproduct(self, request: m.CoproductRequest) -> m.CoproductResponse:
        """Check that generators factorize over the framing columns."""

        ops = self._module(request.profile)
        with self._handle_errors():
            checks = _coproduct_checks(ops, request.v_max, request.r_max)

        report = r.Report(suite="coproduct", checks=checks)

        logger.info(
            "Coproduct for %s: %d checks, %d failed.",
            request.profile.ell,
            len(report.checks),
            len(report.failures),
        )

        return m.CoproductResponse(
            report=report,
        )


def _agree(name: str, actual: RFunc, expected: RFunc, **subject: object) -> r.Check:
    return r.check(name, not (actual - expected), f"{actual} != {expected}", **subject)


def _evaluation_checks(ops: ModuleOperators, k_max: int) -> list[r.Check]:
    ell = ops.profile.ell[0]
    ctx = ops.ctx
    z, hbar, u = ops.variables.z(1), ops.variables.hbar, ops.u
    half = {HBAR: Fraction(-1, 2)}
    checks = []

    def entry(block, row: int, col: int) -> RFunc:
        return substitute(ctx, block.entry((row,), (col,)), half)

    # v_s = C(l, s) b_{l - s}
    for k in range(k_max + 1):
        for s in range(1, ell + 1):
            b = ell - s
            ratio = ctx.const(Fraction(comb(ell, s), comb(ell, s - 1)))
            actual = entry(ops.e(k, b), b + 1, b) * ratio
            expected = (z - ctx.const(Fraction(ell, 2)) + s) ** k * (ell - s + 1)
            checks.append(_agree("e-ladder", actual, expected, k=k, s=s))

        checks.append(r.check("e-top", ops.e(k, ell).empty, k=k))

        f = ops.f(k, 0).entry((0,), (1,))
        checks.append(_agree("f-bottom", f, (z - ell * hbar) ** k, m=k))

    for s in range(ell):
        b = ell - s - 1
        ratio = ctx.const(Fraction(comb(ell, s), comb(ell, s + 1)))
        actual = entry(ops.f(0, b), b, b + 1) * ratio
        checks.append(_agree("f-ladder", actual, ctx.const(s + 1), s=s))

    for v in range(ell + 1):
        psi = ops.psi_value((v,), 0)
        checks.append(_agree("psi-zero", psi, ctx.const(2 * v - ell), v=v))

    def drinfeld(shift: RFunc) -> RFunc:
        result = ctx.one
        for s in range(ell):
            result *= u + shift - z + (ell - 2 * s) * hbar
        return result

    top = ops.psi_series((ell,)) * drinfeld(ctx.zero)
    checks.append(_agree("drinfeld-top", top, drinfeld(2 * hbar)))
    bottom = ops.psi_series((0,)) * drinfeld(ctx.zero)
    checks.append(_agree("drinfeld-bottom", bottom, drinfeld(-2 * hbar)))

    return checks


def _coproduct_checks(ops: ModuleOperators, v_max: int, r_max: int) -> list[r.Check]:
    w = ops.profile.w
    checks = []

    for v in range(min(v_max, ops.profile.total) + 1):
        for point in ops.points(v):
            factors = [ops.psi_series(point, [j]) for j in range(1, w + 1)]
            product = ops.ctx.one
            for factor in factors:
                product *= factor
            checks.append(_agree("psi", ops.psi_series(point), product, point=point))

            if v == v_max:
                continue
            for column in ops.addible(point):
                for k in range(r_max + 1):
                    local = ops.e_entry(point, column, k, [column])
                    expected = ops.e_prefactor(point, column) * local
                    actual = ops.e_entry(point, column, k)
                    checks.append(
                        _agree("e", actual, expected, point=point, column=column, r=k)
                    )

                    local = ops.f_entry(point, column, k, [column])
                    expected = ops.f_prefactor(point, column) * local
                    actual = ops.f_entry(point, column, k)
                    checks.append(
                        _agree("f", actual, expected, point=point, column=column, r=k)
                    )

    return checks
