from spinlab.algebra.context import RFunc
from spinlab.algebra.variables import Variables
from spinlab.models.base import datamodel
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import FixedPoint, SpinProfile
from spinlab.models.reports import Report


@datamodel
class LatticeState:
    """Labelling of the vertical edges of a lattice with ``v`` rows and ``w`` columns.

    Horizontal labels follow from conservation at every vertex, with 1 on the
    west boundary.
    """

    v: int
    """Number of rows."""

    w: int
    """Number of columns."""

    boundary: FixedPoint
    """Labels on the north boundary."""

    vertical: tuple[tuple[int, ...], ...]
    """Row ``i`` holds the labels above row ``i``, the last row the south boundary."""


@datamodel
class StatesRequest:
    """Request to enumerate lattice states."""

    profile: SpinProfile
    """Spins bounding the vertical labels of each column."""

    v: int
    """Number of rows."""

    boundary: FixedPoint
    """Labels on the north boundary."""


@datamodel
class StatesResponse:
    """Response for enumerating lattice states."""

    states: list[LatticeState]
    """States in canonical order."""


@datamodel
class WeightRequest:
    """Request to compute the Boltzmann weight of a state."""

    profile: SpinProfile
    """Spins of the columns."""

    state: LatticeState
    """State to weigh."""


@datamodel
class WeightResponse:
    """Response for computing a Boltzmann weight."""

    variables: Variables
    """Variables the value is written in."""

    value: RFunc
    """Product of the vertex weights."""


@datamodel
class PartitionRequest:
    """Request to compute the partition function for a boundary."""

    profile: SpinProfile
    """Spins of the columns."""

    v: int
    """Number of rows."""

    boundary: FixedPoint
    """Labels on the north boundary."""


@datamodel
class PartitionResponse:
    """Response for computing a partition function."""

    variables: Variables
    """Variables the value is written in."""

    value: RFunc
    """Sum of the weights of all states, a polynomial."""

    count: int
    """Number of states."""


@datamodel
class TransferRequest:
    """Request to build a column transfer operator."""

    spin: int
    """Bound on the vertical labels."""

    top: int
    """Label on top of the column."""

    bottom: int
    """Label at the bottom of the column."""

    v: int
    """Number of rows."""

    symbolic: bool = False
    """Write the spin as a variable ``l`` inside the weights."""


@datamodel
class TransferResponse:
    """Response for building a column transfer operator."""

    matrix: OpMatrix
    """Rows are west labels, columns east labels, entries in hbar, ``y`` and ``x``."""


@datamodel
class TheoremRequest:
    """Request to compare partition functions with weight functions."""

    profile: SpinProfile
    """Spins of the columns."""

    v: int
    """Number of rows."""


@datamodel
class TheoremResponse:
    """Response for comparing partition functions with weight functions."""

    report: Report
    """Outcome of every check."""


@datamodel
class RenderRequest:
    """Request to draw a state."""

    state: LatticeState
    """State to draw."""


@datamodel
class RenderResponse:
    """Response for drawing a state."""

    text: str
    """Drawing with one line per row of vertices and one per row of labels."""
