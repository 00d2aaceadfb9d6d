from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import Field

from spinlab.models.base import SerializableModel, datamodel
from spinlab.models.reports import SCHEMA, Check, Report


class Format(str, Enum):
    """Output formats of artifacts."""

    JSON = "json"
    LATEX = "latex"
    ASCII = "ascii"


class Polynomial(SerializableModel):
    """Polynomial as exponent vectors with exact coefficients."""

    terms: list[tuple[list[int], str]]
    """Terms in descending graded lexicographic order."""


class Value(SerializableModel):
    """Exact rational function over a variable table."""

    vars: list[str]
    """Variable names in monomial order."""

    num: Polynomial
    """Numerator."""

    den: Polynomial
    """Denominator, normalized."""


class Entry(SerializableModel):
    """Named value."""

    label: str
    """What the value is."""

    value: Value
    """The value itself."""


class Matrix(SerializableModel):
    """Matrix with labelled rows and columns."""

    label: str
    """What the matrix is."""

    rows: list[list[int]]
    """Row labels."""

    cols: list[list[int]]
    """Column labels."""

    entries: list[list[Value]]
    """Entries row by row."""


class State(SerializableModel):
    """Lattice state with its weight and drawing."""

    v: int
    """Number of rows."""

    w: int
    """Number of columns."""

    boundary: list[int]
    """Labels on the north boundary."""

    vertical: list[list[int]]
    """Vertical labels, north boundary first."""

    weight: Value | None = None
    """Boltzmann weight."""

    drawing: str | None = None
    """Drawing of the state."""


class Artifact(SerializableModel):
    """Document produced by a command."""

    schema_version: Literal["v1"] = Field(SCHEMA, alias="schema")
    """Version of the document format."""

    name: str
    """Name of the document, also the name of its golden file."""

    subject: dict[str, str] = {}
    """Parameters the document was produced with."""

    values: list[Entry] = []
    """Named values."""

    matrices: list[Matrix] = []
    """Named matrices."""

    states: list[State] = []
    """Lattice states."""

    reports: list[Report] = []
    """Verification reports."""


@datamodel
class RenderRequest:
    """Request to render an artifact."""

    artifact: Artifact
    """Document to render."""

    format: Format = Format.JSON
    """Output format."""


@datamodel
class RenderResponse:
    """Response for rendering an artifact."""

    text: str
    """Rendered document."""


@datamodel
class CompareRequest:
    """Request to compare an artifact with its golden file."""

    artifact: Artifact
    """Document to compare."""

    directory: Path
    """Directory of golden files."""


@datamodel
class CompareResponse:
    """Response for comparing an artifact with its golden file."""

    check: Check
    """Outcome of the comparison."""


@datamodel
class StoreRequest:
    """Request to store an artifact as its golden file."""

    artifact: Artifact
    """Document to store."""

    directory: Path
    """Directory of golden files."""


@datamodel
class StoreResponse:
    """Response for storing an artifact."""

    path: Path
    """Written file."""
