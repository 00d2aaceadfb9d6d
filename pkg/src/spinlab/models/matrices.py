from collections.abc import Callable, Sequence

from spinlab.algebra import matrices as mx
from spinlab.algebra.context import Context, RFunc
from spinlab.models.base import datamodel

Label = tuple[int, ...]


@datamodel
class OpMatrix:
    """Matrix over rational functions with labelled rows and columns."""

    rows: tuple[Label, ...]
    """Row labels, fixed points or binary strings."""

    cols: tuple[Label, ...]
    """Column labels."""

    entries: mx.Matrix
    """Dense grid of entries."""

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.rows) or any(
            len(row) != len(self.cols) for row in self.entries
        ):
            raise ValueError("Matrix entries do not match its labels.")
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("Row labels must be unique.")
        if len(set(self.cols)) != len(self.cols):
            raise ValueError("Column labels must be unique.")

    def entry(self, row: Label, col: Label) -> RFunc:
        """Entry at the given labels."""

        return self.entries[self.rows.index(row)][self.cols.index(col)]

    @property
    def empty(self) -> bool:
        """Whether the matrix has no entries at all."""

        return not self.rows or not self.cols


def zero(ctx: Context, rows: Sequence[Label], cols: Sequence[Label]) -> OpMatrix:
    entries = mx.zeros(ctx, len(rows), len(cols))
    return OpMatrix(rows=tuple(rows), cols=tuple(cols), entries=entries)


def identity(ctx: Context, labels: Sequence[Label]) -> OpMatrix:
    entries = mx.identity(ctx, len(labels))
    return OpMatrix(rows=tuple(labels), cols=tuple(labels), entries=entries)


def product(ctx: Context, a: OpMatrix, b: OpMatrix) -> OpMatrix:
    """Product of composable labelled matrices."""

    if a.cols != b.rows:
        raise ValueError("Matrices are not composable.")
    if not a.rows or not a.cols or not b.cols:
        return zero(ctx, a.rows, b.cols)

    entries = mx.multiply(ctx, a.entries, b.entries)
    return OpMatrix(rows=a.rows, cols=b.cols, entries=entries)


def chain(ctx: Context, *factors: OpMatrix) -> OpMatrix:
    """Product of several matrices, leftmost acting last."""

    result = factors[0]
    for factor in factors[1:]:
        result = product(ctx, result, factor)
    return result


def combine(ctx: Context, terms: Sequence[tuple[RFunc | int, OpMatrix]]) -> OpMatrix:
    """Linear combination of matrices with the same labels."""

    first = terms[0][1]
    result = [[ctx.zero] * len(first.cols) for _ in first.rows]
    for coefficient, matrix in terms:
        if matrix.rows != first.rows or matrix.cols != first.cols:
            raise ValueError("Cannot combine matrices with different labels.")
        for i, row in enumerate(matrix.entries):
            for j, x in enumerate(row):
                if x:
                    result[i][j] += coefficient * x
    return OpMatrix(rows=first.rows, cols=first.cols, entries=mx.freeze(result))


def difference(ctx: Context, a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return combine(ctx, [(1, a), (-1, b)])


def equal(a: OpMatrix, b: OpMatrix) -> bool:
    """Exact equality of labels and entries."""

    return a.rows == b.rows and a.cols == b.cols and mx.equal(a.entries, b.entries)


def first_difference(a: OpMatrix, b: OpMatrix) -> str | None:
    """Describe the first entry where two matrices differ."""

    for row, ra, rb in zip(a.rows, a.entries, b.entries):
        for col, x, y in zip(a.cols, ra, rb):
            if x - y:
                return f"entry ({row}, {col}): {x} != {y}"
    return None


def map_entries(m: OpMatrix, func: Callable[[RFunc], RFunc]) -> OpMatrix:
    entries = mx.freeze([[func(x) for x in row] for row in m.entries])
    return OpMatrix(rows=m.rows, cols=m.cols, entries=entries)


def inverse(ctx: Context, m: OpMatrix) -> OpMatrix:
    """Inverse, with the row and column labels exchanged."""

    return OpMatrix(rows=m.cols, cols=m.rows, entries=mx.inverse(ctx, m.entries))
