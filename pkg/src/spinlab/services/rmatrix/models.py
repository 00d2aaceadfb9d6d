from enum import Enum

from spinlab.algebra.variables import Variables
from spinlab.models.base import datamodel
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import Permutation, SpinProfile
from spinlab.models.reports import Report


class Form(str, Enum):
    """Closed two-column matrices."""

    A_INVERSE = "a-inverse"
    A_SWAPPED = "a-swapped"
    R = "r"


@datamodel
class RMatrixRequest:
    """Request to compute the R-matrix between two chambers."""

    profile: SpinProfile
    """Spins of the framing columns."""

    target: Permutation
    """Chamber whose restriction matrix is inverted."""

    source: Permutation
    """Chamber whose restriction matrix is multiplied."""

    v: int
    """Grade."""

    specialize: bool = False
    """Rewrite a two-column result in ``z = z_1 - z_2``."""


@datamodel
class RMatrixResponse:
    """Response for computing an R-matrix."""

    variables: Variables | None
    """Variables of the entries, none when specialized to ``z``."""

    matrix: OpMatrix
    """Square matrix labelled by fixed points."""


@datamodel
class ClosedFormRequest:
    """Request to evaluate a closed two-column matrix."""

    ell: tuple[int, int]
    """Spins of the two columns."""

    v: int
    """Grade, at most the smaller spin."""

    form: Form = Form.R
    """Which matrix to build."""

    symbolic: bool = False
    """Write the spins as variables ``l_1, l_2``."""


@datamodel
class ClosedFormResponse:
    """Response for evaluating a closed two-column matrix."""

    matrix: OpMatrix
    """Matrix labelled by ``(v - j, j)``, entries in hbar and ``z``."""


@datamodel
class BraidRequest:
    """Request to compare the two factorizations of the longest R-matrix."""

    profile: SpinProfile
    """Spins of three framing columns."""

    v: int
    """Grade."""


@datamodel
class BraidResponse:
    """Response for the braid consistency check."""

    report: Report
    """Outcome of every check."""


@datamodel
class IdentitiesRequest:
    """Request to verify structural identities of R-matrices."""

    profile: SpinProfile
    """Spins of the framing columns."""

    v: int
    """Grade."""


@datamodel
class IdentitiesResponse:
    """Response for the structural identity checks."""

    report: Report
    """Outcome of every check."""
