from spinlab.algebra.context import RFunc
from spinlab.algebra.variables import Variables
from spinlab.models.base import datamodel
from spinlab.models.profiles import FixedPoint, Permutation, SpinProfile


@datamodel
class Box:
    """Box of a fixed point, identified by its column and height."""

    column: int
    """Framing column, 1-based."""

    index: int
    """Height of the box in its column, 0-based."""

    weight: RFunc
    """Linear form ``z_j - (l_j - 2 index) hbar``."""


@datamodel
class EnumerateRequest:
    """Request to enumerate fixed points."""

    profile: SpinProfile
    """Spins bounding the columns."""

    v: int
    """Total occupation."""


@datamodel
class EnumerateResponse:
    """Response for enumerating fixed points."""

    points: list[FixedPoint]
    """Fixed points in descending lexicographic order."""


@datamodel
class RootsRequest:
    """Request to compute the Chern roots at a fixed point."""

    profile: SpinProfile
    """Spins bounding the columns."""

    point: FixedPoint
    """Fixed point."""

    variables: Variables
    """Variables to build the roots in."""


@datamodel
class RootsResponse:
    """Response for computing Chern roots."""

    roots: list[RFunc]
    """Roots column by column, bottom to top."""


@datamodel
class BoxesRequest:
    """Request to list the addible and removable boxes of a fixed point."""

    profile: SpinProfile
    """Spins bounding the columns."""

    point: FixedPoint
    """Fixed point."""

    variables: Variables
    """Variables to build the box weights in."""


@datamodel
class BoxesResponse:
    """Response for listing boxes."""

    addible: list[Box]
    """Boxes that can be added without leaving the profile."""

    removable: list[Box]
    """Top boxes of nonempty columns."""


@datamodel
class CompareRequest:
    """Request to compare two fixed points in a chamber order."""

    first: FixedPoint
    """Left operand."""

    second: FixedPoint
    """Right operand."""

    sigma: Permutation
    """Permutation selecting the chamber."""


@datamodel
class CompareResponse:
    """Response for comparing fixed points."""

    ordering: int
    """Negative, zero or positive as the first point is smaller, equal or larger."""
