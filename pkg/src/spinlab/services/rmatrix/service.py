import logging
from collections.abc import Generator
from contextlib import contextmanager
from itertools import product

from sympy.polys.polyerrors import ExactQuotientFailed

from spinlab.algebra.context import HBAR, MPoly, RFunc, z_name
from spinlab.algebra.errors import AlgebraError, SingularMatrixError
from spinlab.algebra.functions import substitute
from spinlab.algebra.variables import Variables, specialize_pair
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import Permutation, SpinProfile, all_permutations
from spinlab.services.rmatrix import closed
from spinlab.services.rmatrix import errors as e
from spinlab.services.rmatrix import models as m
from spinlab.services.weights import errors as we
from spinlab.services.weights import models as wm
from spinlab.services.weights.service import WeightsService
from spinlab.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

_SHIFT = "t"

_Key = tuple[tuple[int, ...], bool, Permutation, int]


class RMatrixService:
    """Service for R-matrices between chambers of weight functions."""

    def __init__(self, weights: WeightsService, threads: int = 1) -> None:
        self._weights = weights
        self._threads = threads
        self._matrices: dict[_Key, OpMatrix] = {}
        self._inverses: dict[_Key, OpMatrix] = {}

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except we.ServiceError as ex:
            raise e.WeightsError(str(ex)) from ex
        except AlgebraError as ex:
            raise e.KernelError(str(ex)) from ex

    def _matrix(self, profile: SpinProfile, sigma: Permutation, v: int) -> OpMatrix:
        key = (profile.ell, profile.symbolic, sigma, v)
        if key not in self._matrices:
            req = wm.MatrixRequest(profile=profile, sigma=sigma, v=v)
            self._matrices[key] = self._weights.matrix(req).matrix
        return self._matrices[key]

    def _inverse(self, profile: SpinProfile, sigma: Permutation, v: int) -> OpMatrix:
        key = (profile.ell, profile.symbolic, sigma, v)
        if key not in self._inverses:
            ctx = Variables(profile.ell, 0, profile.symbolic).ctx
            try:
                inverse = om.inverse(ctx, self._matrix(profile, sigma, v))
            except SingularMatrixError as ex:
                raise e.SingularRestrictionError(sigma, ex.column) from ex
            self._inverses[key] = inverse
            logger.debug("Inverted restriction matrix of %s at grade %d.", sigma, v)
        return self._inverses[key]

    def _r(
        self,
        profile: SpinProfile,
        target: Permutation,
        source: Permutation,
        v: int,
    ) -> OpMatrix:
        ctx = Variables(profile.ell, 0, profile.symbolic).ctx
        return om.product(
            ctx,
            self._inverse(profile, target, v),
            self._matrix(profile, source, v),
        )

    def r_matrix(self, request: m.RMatrixRequest) -> m.RMatrixResponse:
        """Compute the R-matrix between two chambers."""

        profile = request.profile
        variables = Variables(profile.ell, 0, profile.symbolic)

        if request.specialize and profile.w != 2:
            raise e.ColumnCountError(2, profile.w)

        with self._handle_errors():
            matrix = self._r(profile, request.target, request.source, request.v)

            if request.specialize:
                matrix = om.map_entries(
                    matrix, lambda x: specialize_pair(x, profile.symbolic)
                )

        return m.RMatrixResponse(
            variables=None if request.specialize else variables,
            matrix=matrix,
        )

    def closed_form(self, request: m.ClosedFormRequest) -> m.ClosedFormResponse:
        """Evaluate a closed two-column matrix."""

        ell, v, symbolic = request.ell, request.v, request.symbolic

        if len(ell) != 2:
            raise e.ColumnCountError(2, len(ell))
        if not 0 <= v <= min(ell):
            raise e.IndexRangeError(f"grade {v} with spins {ell}")

        indices = range(v + 1)
        if request.form == m.Form.A_INVERSE:
            entries = [
                [closed.a_inverse_entry(ell, v, j, i, symbolic) for i in indices]
                for j in indices
            ]
        elif request.form == m.Form.A_SWAPPED:
            entries = [
                [closed.a21_entry(ell, v, i, j, symbolic) for j in indices]
                for i in indices
            ]
        else:
            entries = [
                [closed.r_entry(ell, v, j, jp, symbolic) for jp in indices]
                for j in indices
            ]

        labels = closed.labels(v)
        matrix = OpMatrix(
            rows=labels, cols=labels, entries=tuple(map(tuple, entries))
        )

        return m.ClosedFormResponse(
            matrix=matrix,
        )

    def braid(self, request: m.BraidRequest) -> m.BraidResponse:
        """Compare both factorizations of the longest R-matrix with the direct one."""

        profile = request.profile
        v = request.v

        if profile.w != 3:
            raise e.ColumnCountError(3, profile.w)

        ctx = Variables(profile.ell, 0, profile.symbolic).ctx
        identity, longest = (1, 2, 3), (3, 2, 1)
        paths = {
            "braid-left": [identity, (2, 1, 3), (2, 3, 1), longest],
            "braid-right": [identity, (1, 3, 2), (3, 1, 2), longest],
        }

        checks = []
        with self._handle_errors():
            direct = self._r(profile, identity, longest, v)
            for name, path in paths.items():
                factors = [
                    self._r(profile, a, b, v) for a, b in zip(path, path[1:])
                ]
                composed = om.chain(ctx, *factors)
                ok = om.equal(composed, direct)
                checks.append(
                    r.check(
                        name,
                        ok,
                        om.first_difference(composed, direct),
                        ell=profile.ell,
                        v=v,
                    )
                )

        report = r.Report(suite="braid", checks=checks)

        logger.info(
            "Braid consistency for %s at grade %d: %d checks, %d failed.",
            profile.ell,
            v,
            len(report.checks),
            len(report.failures),
        )

        return m.BraidResponse(
            report=report,
        )

    def identities(self, request: m.IdentitiesRequest) -> m.IdentitiesResponse:
        """Verify unit, cocycle, translation, denominator and closed form checks."""

        profile = request.profile
        v = request.v
        ctx = Variables(profile.ell, 0, profile.symbolic).ctx
        chambers = all_permutations(profile.w)
        pairs = list(product(chambers, repeat=2))
        checks: list[r.Check] = []

        with self._handle_errors():
            matrices = dict(
                zip(
                    pairs,
                    ordered_map(
                        lambda pair: self._r(profile, pair[0], pair[1], v),
                        pairs,
                        self._threads,
                    ),
                )
            )

            for sigma in chambers:
                unit = matrices[(sigma, sigma)]
                ok = om.equal(unit, om.identity(ctx, unit.rows))
                checks.append(r.check("unit", ok, str(unit.entries), sigma=sigma))

            for first, middle, last in product(chambers, repeat=3):
                composed = om.product(
                    ctx, matrices[(first, middle)], matrices[(middle, last)]
                )
                direct = matrices[(first, last)]
                checks.append(
                    r.check(
                        "cocycle",
                        om.equal(composed, direct),
                        om.first_difference(composed, direct),
                        chambers=(first, middle, last),
                    )
                )

            for (target, source), matrix in matrices.items():
                if target == source:
                    continue
                checks.append(_translation_check(profile, target, source, matrix))
                if not profile.symbolic:
                    checks.append(_denominator_check(profile, target, source, matrix))

            if profile.w == 2 and v <= min(profile.ell):
                checks.append(
                    self._closed_form_check(profile, v, matrices[((1, 2), (2, 1))])
                )

        report = r.Report(suite="rmatrix", checks=checks)

        logger.info(
            "R-matrix identities for %s at grade %d: %d checks, %d failed.",
            profile.ell,
            v,
            len(report.checks),
            len(report.failures),
        )

        return m.IdentitiesResponse(
            report=report,
        )

    def _closed_form_check(
        self, profile: SpinProfile, v: int, matrix: OpMatrix
    ) -> r.Check:
        specialized = om.map_entries(
            matrix, lambda x: specialize_pair(x, profile.symbolic)
        )
        req = m.ClosedFormRequest(
            ell=(profile.ell[0], profile.ell[1]), v=v, symbolic=profile.symbolic
        )
        expected = self.closed_form(req).matrix
        return r.check(
            "closed-form",
            om.equal(specialized, expected),
            om.first_difference(specialized, expected),
            ell=profile.ell,
            v=v,
        )


def _translation_check(
    profile: SpinProfile,
    target: Permutation,
    source: Permutation,
    matrix: OpMatrix,
) -> r.Check:
    wide = Variables(profile.ell, 0, profile.symbolic, extra=(_SHIFT,))
    shift = wide.aux(_SHIFT)
    bindings = {z_name(j): wide.z(j) + shift for j in range(1, profile.w + 1)}

    def translate(x: RFunc) -> RFunc:
        x = wide.ctx.adopt(x)
        return substitute(wide.ctx, x, bindings)

    original = om.map_entries(matrix, wide.ctx.adopt)
    shifted = om.map_entries(matrix, translate)
    return r.check(
        "translation",
        om.equal(original, shifted),
        om.first_difference(original, shifted),
        chambers=(target, source),
    )


def _strip_factors(den: MPoly, profile: SpinProfile, variables: Variables) -> MPoly:
    ctx = variables.ctx
    hbar = ctx.pvar(HBAR)
    for i in range(1, profile.w + 1):
        for j in range(i + 1, profile.w + 1):
            spread = 2 * (profile.ell[i - 1] + profile.ell[j - 1])
            difference = ctx.pvar(z_name(i)) - ctx.pvar(z_name(j))
            for a in range(-spread, spread + 1):
                candidate = difference - a * hbar
                while True:
                    try:
                        den = den.exquo(candidate)
                    except ExactQuotientFailed:
                        break
    return den


def _denominator_check(
    profile: SpinProfile,
    target: Permutation,
    source: Permutation,
    matrix: OpMatrix,
) -> r.Check:
    variables = Variables(profile.ell, 0)
    for row in matrix.entries:
        for x in row:
            rest = _strip_factors(x.denom, profile, variables)
            if not rest.is_ground:
                return r.check(
                    "denominators",
                    False,
                    f"unexpected denominator factor {rest}",
                    chambers=(target, source),
                )
    return r.check("denominators", True, chambers=(target, source))
