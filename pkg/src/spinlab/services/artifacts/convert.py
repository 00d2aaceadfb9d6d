"""Conversion of computed values into artifact documents."""

from enum import Enum

from spinlab.algebra.context import RFunc
from spinlab.algebra.forms import to_json
from spinlab.models.matrices import OpMatrix
from spinlab.services.artifacts import models as m
from spinlab.services.lattice.models import LatticeState


def value(x: RFunc) -> m.Value:
    return m.Value.model_validate(to_json(x))


def entry(label: str, x: RFunc) -> m.Entry:
    return m.Entry(label=label, value=value(x))


def matrix(label: str, op: OpMatrix) -> m.Matrix:
    return m.Matrix(
        label=label,
        rows=[list(row) for row in op.rows],
        cols=[list(col) for col in op.cols],
        entries=[[value(x) for x in row] for row in op.entries],
    )


def state(
    s: LatticeState, weight: RFunc | None = None, drawing: str | None = None
) -> m.State:
    return m.State(
        v=s.v,
        w=s.w,
        boundary=list(s.boundary),
        vertical=[list(row) for row in s.vertical],
        weight=None if weight is None else value(weight),
        drawing=drawing,
    )


def subject(**parameters: object) -> dict[str, str]:
    """Parameters as strings, tuples joined with commas."""

    def text(x: object) -> str:
        if isinstance(x, tuple | list):
            return ",".join(str(item) for item in x)
        return str(x.value if isinstance(x, Enum) else x)

    return {key: text(x) for key, x in parameters.items()}
