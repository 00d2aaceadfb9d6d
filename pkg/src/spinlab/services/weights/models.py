from enum import Enum

from spinlab.algebra.context import RFunc
from spinlab.algebra.variables import Variables
from spinlab.models.base import datamodel
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import FixedPoint, Permutation, SpinProfile
from spinlab.models.reports import Report


class Method(str, Enum):
    """Way of building a weight function."""

    PARTITIONS = "partitions"
    SHUFFLE = "shuffle"


@datamodel
class ShuffleElement:
    """Element of the framed shuffle algebra."""

    v: int
    """Number of Chern root variables ``y_1..y_v``."""

    framing: tuple[int, ...]
    """Framing vector, a 0/1 entry per column."""

    value: RFunc
    """Polynomial in hbar, the Chern roots and the framed ``z_j``."""

    symmetric: bool = True
    """Whether the value is symmetric in the Chern roots."""


@datamodel
class ShuffleRequest:
    """Request to multiply two shuffle elements."""

    profile: SpinProfile
    """Spins of the framing columns."""

    first: ShuffleElement
    """Left factor."""

    second: ShuffleElement
    """Right factor."""


@datamodel
class ShuffleResponse:
    """Response for multiplying shuffle elements."""

    product: ShuffleElement
    """Symmetrized product."""


@datamodel
class WeightRequest:
    """Request to build a weight function."""

    profile: SpinProfile
    """Spins of the framing columns."""

    sigma: Permutation
    """Chamber of the weight function."""

    point: FixedPoint
    """Fixed point labelling the weight function."""

    method: Method = Method.PARTITIONS
    """Construction to use."""


@datamodel
class WeightResponse:
    """Response for building a weight function."""

    variables: Variables
    """Variables the value is written in."""

    value: RFunc
    """Symmetric polynomial in the Chern roots."""


@datamodel
class RestrictRequest:
    """Request to restrict a weight function to a fixed point."""

    profile: SpinProfile
    """Spins of the framing columns."""

    sigma: Permutation
    """Chamber of the weight function."""

    point: FixedPoint
    """Fixed point labelling the weight function."""

    at: FixedPoint
    """Fixed point to restrict to."""


@datamodel
class RestrictResponse:
    """Response for restricting a weight function."""

    variables: Variables
    """Variables the value is written in."""

    value: RFunc
    """Polynomial in hbar and the framing parameters."""


@datamodel
class MatrixRequest:
    """Request to build the restriction matrix of a chamber."""

    profile: SpinProfile
    """Spins of the framing columns."""

    sigma: Permutation
    """Chamber of the weight functions."""

    v: int
    """Grade."""


@datamodel
class MatrixResponse:
    """Response for building a restriction matrix."""

    variables: Variables
    """Variables the entries are written in."""

    matrix: OpMatrix
    """Rows are restriction points, columns weight function labels."""


@datamodel
class ClosedFormRequest:
    """Request to evaluate the closed two-column restriction formula."""

    ell: tuple[int, int]
    """Spins of the two columns."""

    point: FixedPoint
    """Weight function label ``(v_1, v_2)``."""

    at: FixedPoint
    """Restriction point ``(mu_1, mu_2)``."""

    symbolic: bool = False
    """Write the spins as variables ``l_1, l_2``."""


@datamodel
class ClosedFormResponse:
    """Response for the closed restriction formula."""

    value: RFunc
    """Value in hbar and ``z = z_1 - z_2``."""


@datamodel
class StableRequest:
    """Request to evaluate the stable envelope candidate."""

    profile: SpinProfile
    """Spins of the framing columns."""

    sigma: Permutation
    """Chamber."""

    point: FixedPoint
    """Fixed point labelling the weight function."""

    at: FixedPoint
    """Fixed point to restrict to."""


@datamodel
class StableResponse:
    """Response for the stable envelope candidate."""

    variables: Variables
    """Variables the value is written in."""

    value: RFunc
    """Weight restriction divided by the restricted Euler class."""


@datamodel
class PropertiesRequest:
    """Request to verify triangularity, diagonal and degree properties."""

    profile: SpinProfile
    """Spins of the framing columns."""

    v: int
    """Grade."""


@datamodel
class PropertiesResponse:
    """Response for verifying weight function properties."""

    report: Report
    """Outcome of every check."""
