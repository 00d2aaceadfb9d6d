import logging
from collections.abc import Generator
from contextlib import contextmanager
from math import comb

from spinlab.algebra.context import MPoly, RFunc, y_name, z_name
from spinlab.algebra.errors import AlgebraError
from spinlab.algebra.functions import degree_in, substitute
from spinlab.algebra.variables import Variables, pair_context
from spinlab.models import reports as r
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import (
    FixedPoint,
    Permutation,
    SpinProfile,
    all_permutations,
    inverse,
    is_permutation,
)
from spinlab.services.fixedpoints import errors as fe
from spinlab.services.fixedpoints import models as fm
from spinlab.services.fixedpoints.service import FixedPointsService, relabel
from spinlab.services.weights import errors as e
from spinlab.services.weights import models as m
from spinlab.services.weights.shuffle import partition_weight, shuffle_product

logger = logging.getLogger(__name__)

_Key = tuple[tuple[int, ...], bool, Permutation, FixedPoint, m.Method]


class WeightsService:
    """Service for weight functions and their restrictions to fixed points."""

    def __init__(self, fixedpoints: FixedPointsService, threads: int = 1) -> None:
        self._fixedpoints = fixedpoints
        self._threads = threads
        self._cache: dict[_Key, MPoly] = {}

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except fe.ServiceError as ex:
            raise e.FixedPointsError(str(ex)) from ex
        except AlgebraError as ex:
            raise e.KernelError(str(ex)) from ex

    def _validate(self, profile: SpinProfile, sigma: Permutation) -> None:
        if len(sigma) != profile.w or not is_permutation(sigma):
            raise fe.InvalidPermutationError(sigma, profile.w)

    def _points(self, profile: SpinProfile, v: int) -> list[FixedPoint]:
        req = fm.EnumerateRequest(profile=profile, v=v)
        return self._fixedpoints.enumerate(req).points

    def _roots(
        self, profile: SpinProfile, point: FixedPoint, variables: Variables
    ) -> list[RFunc]:
        req = fm.RootsRequest(profile=profile, point=point, variables=variables)
        return self._fixedpoints.roots(req).roots

    def _shuffle_weight(
        self, profile: SpinProfile, columns: Permutation, counts: FixedPoint
    ) -> MPoly:
        w = profile.w
        current = m.ShuffleElement(
            v=0,
            framing=(0,) * w,
            value=Variables(profile.ell, 0, profile.symbolic).ctx.one,
        )
        for column, count in zip(columns, counts):
            variables = Variables(profile.ell, current.v + count, profile.symbolic)
            factor = m.ShuffleElement(
                v=count,
                framing=tuple(int(j == column) for j in range(1, w + 1)),
                value=variables.ctx.one,
            )
            current = shuffle_product(variables, current, factor, self._threads)
        target = Variables(profile.ell, current.v, profile.symbolic)
        return target.ctx.adopt(current.value).numer

    def _weight(
        self,
        profile: SpinProfile,
        sigma: Permutation,
        point: FixedPoint,
        method: m.Method = m.Method.PARTITIONS,
    ) -> tuple[Variables, MPoly]:
        self._validate(profile, sigma)
        if not profile.contains(point):
            raise fe.InvalidPointError(point, profile.ell)

        variables = Variables(profile.ell, sum(point), profile.symbolic)
        key = (profile.ell, profile.symbolic, sigma, point, method)

        if key in self._cache:
            return variables, self._cache[key]

        columns = inverse(sigma)
        counts = relabel(point, sigma)
        if method == m.Method.SHUFFLE:
            value = self._shuffle_weight(profile, columns, counts)
        else:
            value = partition_weight(variables, columns, counts, self._threads)

        logger.debug("Built weight %s of %s with %d terms.", point, sigma, len(value))

        self._cache[key] = value
        return variables, value

    def _restrict(
        self,
        profile: SpinProfile,
        sigma: Permutation,
        point: FixedPoint,
        at: FixedPoint,
    ) -> tuple[Variables, RFunc]:
        variables, value = self._weight(profile, sigma, point)
        if not profile.contains(at):
            raise fe.InvalidPointError(at, profile.ell)
        if sum(at) != sum(point):
            raise e.SizeMismatchError(at, sum(point))

        roots = self._roots(profile, at, variables)
        bindings = {y_name(i): root for i, root in enumerate(roots, start=1)}
        restricted = substitute(variables.ctx, value, bindings)

        target = Variables(profile.ell, 0, profile.symbolic)
        return target, target.ctx.adopt(restricted)

    def _matrix(
        self, profile: SpinProfile, sigma: Permutation, v: int
    ) -> tuple[Variables, OpMatrix]:
        points = tuple(self._points(profile, v))
        variables = Variables(profile.ell, 0, profile.symbolic)
        entries = tuple(
            tuple(self._restrict(profile, sigma, point, at)[1] for point in points)
            for at in points
        )
        return variables, OpMatrix(rows=points, cols=points, entries=entries)

    def shuffle(self, request: m.ShuffleRequest) -> m.ShuffleResponse:
        """Multiply two elements of the framed shuffle algebra."""

        profile = request.profile
        first = request.first
        second = request.second

        variables = Variables(profile.ell, first.v + second.v, profile.symbolic)

        with self._handle_errors():
            product = shuffle_product(variables, first, second, self._threads)

        return m.ShuffleResponse(
            product=product,
        )

    def weight(self, request: m.WeightRequest) -> m.WeightResponse:
        """Build a weight function."""

        with self._handle_errors():
            variables, value = self._weight(
                request.profile, request.sigma, request.point, request.method
            )

        return m.WeightResponse(
            variables=variables,
            value=variables.ctx.frac(value),
        )

    def restrict(self, request: m.RestrictRequest) -> m.RestrictResponse:
        """Restrict a weight function to a fixed point."""

        with self._handle_errors():
            variables, value = self._restrict(
                request.profile, request.sigma, request.point, request.at
            )

        return m.RestrictResponse(
            variables=variables,
            value=value,
        )

    def matrix(self, request: m.MatrixRequest) -> m.MatrixResponse:
        """Build the restriction matrix of a chamber."""

        with self._handle_errors():
            self._validate(request.profile, request.sigma)
            variables, matrix = self._matrix(request.profile, request.sigma, request.v)

        return m.MatrixResponse(
            variables=variables,
            matrix=matrix,
        )

    def closed_form(self, request: m.ClosedFormRequest) -> m.ClosedFormResponse:
        """Evaluate the closed two-column restriction formula."""

        ell, point, at = request.ell, request.point, request.at

        if len(ell) != 2 or len(point) != 2 or len(at) != 2:
            raise e.DomainError("two columns are required")
        if sum(point) != sum(at):
            raise e.DomainError("both points must have the same grade")
        profile = SpinProfile(ell=ell)
        if not (profile.contains(point) and profile.contains(at)):
            raise e.DomainError("points must be bounded by the spins")

        value = restriction_pair(ell, point, at, request.symbolic)

        return m.ClosedFormResponse(
            value=value,
        )

    def stable(self, request: m.StableRequest) -> m.StableResponse:
        """Evaluate the stable envelope candidate."""

        profile = request.profile

        with self._handle_errors():
            variables, value = self._restrict(
                profile, request.sigma, request.point, request.at
            )
            wide = Variables(profile.ell, sum(request.at), profile.symbolic)
            roots = self._roots(profile, request.at, wide)

        euler = wide.const((-1) ** (sum(request.at) * profile.w))
        for j in range(1, profile.w + 1):
            for root in roots:
                euler *= wide.z(j) - root + wide.spin(j) * wide.hbar

        return m.StableResponse(
            variables=variables,
            value=value / variables.ctx.adopt(euler),
        )

    def properties(self, request: m.PropertiesRequest) -> m.PropertiesResponse:
        """Verify triangularity, diagonal and degree properties of restrictions."""

        profile = request.profile
        v = request.v
        checks: list[r.Check] = []

        with self._handle_errors():
            points = self._points(profile, v)
            for sigma in all_permutations(profile.w):
                checks.extend(self._check_weights(profile, sigma, points))
                checks.extend(self._check_restrictions(profile, sigma, points))

        report = r.Report(suite="properties", checks=checks)

        logger.info(
            "Weight properties for %s at grade %d: %d checks, %d failed.",
            profile.ell,
            v,
            len(report.checks),
            len(report.failures),
        )

        return m.PropertiesResponse(
            report=report,
        )

    def _check_weights(
        self, profile: SpinProfile, sigma: Permutation, points: list[FixedPoint]
    ) -> list[r.Check]:
        checks = []
        for point in points:
            variables, value = self._weight(profile, sigma, point)
            ctx = variables.ctx

            symmetric = all(
                value
                == value.compose(
                    [
                        (ctx.pvar(y_name(i)), ctx.pvar(y_name(i + 1))),
                        (ctx.pvar(y_name(i + 1)), ctx.pvar(y_name(i))),
                    ]
                )
                for i in range(1, variables.v)
            )
            checks.append(r.check("symmetry", symmetric, sigma=sigma, point=point))

            _, shuffled = self._weight(profile, sigma, point, m.Method.SHUFFLE)
            checks.append(
                r.check(
                    "shuffle-agreement",
                    not (shuffled - value),
                    counterexample=str(shuffled - value),
                    sigma=sigma,
                    point=point,
                )
            )
        return checks

    def _check_restrictions(
        self, profile: SpinProfile, sigma: Permutation, points: list[FixedPoint]
    ) -> list[r.Check]:
        checks = []
        z_indices: list[int] | None = None

        for point in points:
            variables, diagonal = self._restrict(profile, sigma, point, point)
            ctx = variables.ctx
            if z_indices is None:
                z_indices = [ctx.index(z_name(j)) for j in range(1, profile.w + 1)]

            expected = diagonal_product(variables, sigma, point)
            checks.append(
                r.check(
                    "diagonal",
                    not (diagonal - expected),
                    counterexample=f"{diagonal} != {expected}",
                    sigma=sigma,
                    point=point,
                )
            )
            expanded = diagonal_double_product(variables, sigma, point)
            checks.append(
                r.check(
                    "diagonal-expanded",
                    not (diagonal - expanded),
                    counterexample=f"{diagonal} != {expanded}",
                    sigma=sigma,
                    point=point,
                )
            )

            top = degree_in(diagonal.numer, z_indices)
            expected_degree = (profile.w - 1) * sum(point)
            checks.append(
                r.check(
                    "diagonal-degree",
                    top == expected_degree and diagonal.denom.is_one,
                    counterexample=f"degree {top}, expected {expected_degree}",
                    sigma=sigma,
                    point=point,
                )
            )

            for at in points:
                if at == point:
                    continue
                _, value = self._restrict(profile, sigma, point, at)
                req = fm.CompareRequest(first=point, second=at, sigma=sigma)
                ordering = self._fixedpoints.compare(req).ordering
                if ordering < 0:
                    checks.append(
                        r.check(
                            "triangularity",
                            not value,
                            counterexample=str(value),
                            sigma=sigma,
                            point=point,
                            at=at,
                        )
                    )
                else:
                    degree = degree_in(value.numer, z_indices)
                    checks.append(
                        r.check(
                            "degree-bound",
                            value.denom.is_one and degree <= top,
                            counterexample=f"degree {degree} above {top}",
                            sigma=sigma,
                            point=point,
                            at=at,
                        )
                    )
        return checks


def _chamber(
    variables: Variables, sigma: Permutation, point: FixedPoint
) -> tuple[list[int], list[RFunc], list[RFunc]]:
    columns = inverse(sigma)
    counts = list(relabel(point, sigma))
    zs = [variables.z(c) for c in columns]
    spins = [variables.spin(c) for c in columns]
    return counts, zs, spins


def diagonal_product(
    variables: Variables, sigma: Permutation, point: FixedPoint
) -> RFunc:
    """Closed product for the diagonal restriction of a weight function."""

    counts, z, spin = _chamber(variables, sigma, point)
    hbar = variables.hbar
    result = variables.ctx.one

    for s in range(len(counts)):
        for a in range(s + 1, len(counts)):
            if (counts[a] * (counts[s] + 1)) % 2:
                result = -result
            for i in range(counts[s] - counts[a] + 1, counts[s] + 1):
                result *= z[s] - z[a] + 2 * i * hbar + (spin[a] - spin[s]) * hbar
            for i in range(counts[s]):
                result *= z[a] - z[s] + (spin[s] + spin[a]) * hbar - 2 * i * hbar

    return result


def diagonal_double_product(
    variables: Variables, sigma: Permutation, point: FixedPoint
) -> RFunc:
    """Diagonal restriction as the unsimplified product over pairs of blocks."""

    counts, z, spin = _chamber(variables, sigma, point)
    hbar = variables.hbar
    result = variables.ctx.one

    for s in range(len(counts)):
        for t in range(s):
            if (counts[s] * counts[t]) % 2:
                result = -result
            for i in range(counts[s]):
                shift = spin[t] - spin[s] + 2 * (i - counts[t])
                result *= z[s] - z[t] + shift * hbar
        for a in range(s + 1, len(counts)):
            for i in range(counts[s]):
                result *= z[a] - z[s] + (spin[s] + spin[a]) * hbar - 2 * i * hbar

    return result


def restriction_pair(
    ell: tuple[int, int], point: FixedPoint, at: FixedPoint, symbolic: bool = False
) -> RFunc:
    """Two-column restriction in ``z = z_1 - z_2`` as a closed product."""

    ctx = pair_context(symbolic)
    (v1, v2), (mu1, mu2) = point, at

    if v1 < mu1:
        return ctx.zero

    hbar, z = ctx.var("hbar"), ctx.var("z")
    if symbolic:
        l1, l2 = ctx.var("l_1"), ctx.var("l_2")
    else:
        l1, l2 = ctx.const(ell[0]), ctx.const(ell[1])

    sign = (-1) ** (v1 * v2 + mu1 + v2)
    result = ctx.const(sign * comb(mu2, v2)) * (2 * hbar) ** (mu2 - v2)
    for k in range(v2, mu2):
        result *= l2 - k
    for b in range(v2):
        result *= z + (l2 - l1 + 2 * (mu1 - b)) * hbar
    for a in range(mu1):
        result *= z - (l1 + l2 - 2 * a) * hbar
    return result
