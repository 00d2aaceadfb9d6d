from spinlab.algebra.context import RFunc
from spinlab.models.base import datamodel
from spinlab.models.matrices import OpMatrix
from spinlab.models.reports import Report


@datamodel
class CrossingRequest:
    """Request to build the six-vertex R-matrix on a chain."""

    v: int = 2
    """Number of sites."""

    position: int = 1
    """First of the two crossed sites, 1-based."""


@datamodel
class CrossingResponse:
    """Response for building the six-vertex R-matrix."""

    matrix: OpMatrix
    """Entries in hbar and the spectral parameter ``u``."""


@datamodel
class BasisRequest:
    """Request to build the tilded basis of a chain."""

    v: int
    """Number of sites."""


@datamodel
class BasisResponse:
    """Response for building the tilded basis."""

    kets: OpMatrix
    """Column ``a`` holds the tilded vector of ``a`` in the standard basis."""

    bras: OpMatrix
    """Row ``b`` holds the tilded covector of ``b``."""

    kappas: list[RFunc]
    """Normalizations of the covectors, in the order of the basis."""


@datamodel
class ConjugateRequest:
    """Request to write a column transfer operator in the tilded basis."""

    spin: int
    """Bound on the vertical labels."""

    m: int
    """Label on top of the column, the bottom label is zero."""

    v: int
    """Number of sites."""

    symbolic: bool = False
    """Write the spin as a variable ``l`` inside the weights."""


@datamodel
class ConjugateResponse:
    """Response for writing a transfer operator in the tilded basis."""

    matrix: OpMatrix
    """Rows are tilded covectors, columns tilded vectors."""


@datamodel
class IdentitiesRequest:
    """Request to verify the six-vertex identities."""

    v_max: int = 4
    """Largest chain for the tilded basis and transfer checks."""

    spins: tuple[int, ...] = (1, 2, 3)
    """Concrete spins of the column operators."""

    symbolic: bool = True
    """Also check with the spin as a variable."""


@datamodel
class IdentitiesResponse:
    """Response for verifying the six-vertex identities."""

    report: Report
    """Outcome of every check."""
