"""States of the lattice model, their weights and drawings.

Rows are numbered from the top and carry the parameters ``y_1..y_v``.
Paths enter every row from the west and leave through the north boundary.
"""

from collections.abc import Generator

from spinlab.algebra.context import RFunc
from spinlab.algebra.variables import Variables
from spinlab.models.profiles import FixedPoint
from spinlab.services.lattice.models import LatticeState
from spinlab.services.lattice.vertex import vertex_weight

Row = tuple[int, ...]


def _rows_below(
    tops: Row, ell: tuple[int, ...], last: bool
) -> Generator[Row, None, None]:
    """Labels below a row, given the labels above it, left to right."""

    w = len(ell)

    def fill(j: int, left: int, bottoms: list[int]) -> Generator[Row, None, None]:
        if j == w:
            if left == 0:
                yield tuple(bottoms)
            return

        for right in (0, 1):
            bottom = right - left + tops[j]
            if not 0 <= bottom <= ell[j] or (last and bottom):
                continue
            bottoms.append(bottom)
            yield from fill(j + 1, right, bottoms)
            bottoms.pop()

    yield from fill(0, 1, [])


def enumerate_states(
    ell: tuple[int, ...], v: int, boundary: FixedPoint
) -> Generator[LatticeState, None, None]:
    """All states with the given north boundary, rows filled top to bottom."""

    w = len(ell)

    def descend(rows: list[Row]) -> Generator[LatticeState, None, None]:
        i = len(rows) - 1
        if i == v:
            yield LatticeState(v=v, w=w, boundary=boundary, vertical=tuple(rows))
            return

        for below in _rows_below(rows[-1], ell, last=i == v - 1):
            rows.append(below)
            yield from descend(rows)
            rows.pop()

    if v == 0:
        if not any(boundary):
            yield LatticeState(v=0, w=w, boundary=boundary, vertical=(boundary,))
        return

    yield from descend([tuple(boundary)])


def horizontal(state: LatticeState) -> tuple[Row, ...]:
    """Horizontal labels of each row, west boundary first."""

    rows = []
    for i in range(state.v):
        labels = [1]
        for j in range(state.w):
            top, bottom = state.vertical[i][j], state.vertical[i + 1][j]
            labels.append(labels[-1] + bottom - top)
        rows.append(tuple(labels))
    return tuple(rows)


def violation(state: LatticeState, ell: tuple[int, ...]) -> str | None:
    """Describe the first broken condition of a state, if any."""

    if len(state.vertical) != state.v + 1 or state.w != len(ell):
        return "shape does not match the profile"
    if tuple(state.vertical[0]) != tuple(state.boundary):
        return "north labels differ from the boundary"
    if any(state.vertical[-1]):
        return "south labels must vanish"

    for row in state.vertical:
        if len(row) != state.w:
            return "rows have different lengths"
        for label, spin in zip(row, ell):
            if not 0 <= label <= spin:
                return f"vertical label {label} outside 0..{spin}"

    for i, labels in enumerate(horizontal(state), start=1):
        if any(label not in (0, 1) for label in labels):
            return f"horizontal labels of row {i} are not 0 or 1"
        if labels[-1] != 0:
            return f"east label of row {i} must vanish"
    return None


def boltzmann_weight(variables: Variables, state: LatticeState) -> RFunc:
    """Product of the vertex weights, ``u = y_i - z_j`` at row i and column j."""

    result = variables.ctx.one
    for i, labels in enumerate(horizontal(state), start=1):
        for j in range(1, state.w + 1):
            result *= vertex_weight(
                labels[j - 1],
                labels[j],
                state.vertical[i][j - 1],
                variables.spin(j),
                variables.y(i) - variables.z(j),
                variables.hbar,
            )
    return result


def render(state: LatticeState) -> str:
    """Draw a state with its vertical labels between rows of vertices."""

    def labels(row: Row) -> str:
        return "".join(f"{label:>4}" for label in row)

    lines = [labels(state.vertical[0])]
    for i, edges in enumerate(horizontal(state)):
        line = ""
        for label in edges[:-1]:
            line += ("───" if label else "   ") + "┼"
        lines.append(line.rstrip())
        lines.append(labels(state.vertical[i + 1]))
    return "\n".join(lines)
