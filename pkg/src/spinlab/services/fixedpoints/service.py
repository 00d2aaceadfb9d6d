import logging
from collections.abc import Iterator

from spinlab.algebra.context import RFunc
from spinlab.algebra.variables import Variables
from spinlab.models.profiles import (
    FixedPoint,
    Permutation,
    SpinProfile,
    inverse,
    is_permutation,
)
from spinlab.services.fixedpoints import errors as e
from spinlab.services.fixedpoints import models as m

logger = logging.getLogger(__name__)


def points(ell: tuple[int, ...], v: int) -> Iterator[FixedPoint]:
    """Tuples bounded by ``ell`` summing to ``v``, descending lexicographically."""

    if not ell:
        if v == 0:
            yield ()
        return

    rest = sum(ell[1:])
    for first in range(min(ell[0], v), max(v - rest, 0) - 1, -1):
        for tail in points(ell[1:], v - first):
            yield (first, *tail)


def relabel(point: FixedPoint, sigma: Permutation) -> FixedPoint:
    """Occupations read in the column order of the chamber ``sigma``."""

    return tuple(point[c - 1] for c in inverse(sigma))


def root(variables: Variables, column: int, index: int) -> RFunc:
    """Chern root of box ``index`` in ``column``."""

    spin = variables.spin(column)
    return variables.z(column) - (spin - 2 * index) * variables.hbar


class FixedPointsService:
    """Service for torus fixed points and their boxes."""

    def _validate(self, profile: SpinProfile, point: FixedPoint) -> None:
        if not profile.contains(point):
            raise e.InvalidPointError(point, profile.ell)

    def _validate_variables(self, profile: SpinProfile, variables: Variables) -> None:
        if variables.spins != profile.ell:
            raise e.VariablesMismatchError(variables.spins, profile.ell)

    def enumerate(self, request: m.EnumerateRequest) -> m.EnumerateResponse:
        """Enumerate fixed points of a grade."""

        found = list(points(request.profile.ell, request.v))

        logger.debug("Found %d fixed points of grade %d.", len(found), request.v)

        return m.EnumerateResponse(
            points=found,
        )

    def roots(self, request: m.RootsRequest) -> m.RootsResponse:
        """Compute the Chern roots at a fixed point."""

        profile = request.profile
        point = request.point
        variables = request.variables

        self._validate(profile, point)
        self._validate_variables(profile, variables)

        roots = [
            root(variables, column, index)
            for column, count in enumerate(point, start=1)
            for index in range(count)
        ]

        return m.RootsResponse(
            roots=roots,
        )

    def boxes(self, request: m.BoxesRequest) -> m.BoxesResponse:
        """List addible and removable boxes of a fixed point."""

        profile = request.profile
        point = request.point
        variables = request.variables

        self._validate(profile, point)
        self._validate_variables(profile, variables)

        addible = [
            m.Box(column=j, index=v, weight=root(variables, j, v))
            for j, (v, spin) in enumerate(zip(point, profile.ell), start=1)
            if v < spin
        ]
        removable = [
            m.Box(column=j, index=v - 1, weight=root(variables, j, v - 1))
            for j, v in enumerate(point, start=1)
            if v > 0
        ]

        return m.BoxesResponse(
            addible=addible,
            removable=removable,
        )

    def compare(self, request: m.CompareRequest) -> m.CompareResponse:
        """Compare two fixed points in the order of a chamber."""

        first = request.first
        second = request.second
        sigma = request.sigma

        if not is_permutation(sigma) or len(sigma) != len(first):
            raise e.InvalidPermutationError(sigma, len(first))
        if len(second) != len(first):
            raise e.InvalidPermutationError(sigma, len(second))

        a, b = relabel(first, sigma), relabel(second, sigma)

        return m.CompareResponse(
            ordering=(a > b) - (a < b),
        )
