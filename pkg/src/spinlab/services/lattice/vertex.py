"""Vertex weights of the higher spin lattice and column transfer operators.

A vertex has a horizontal edge on each side carrying 0 or 1 and a vertical
edge below and above carrying ``0..l``. Labels are conserved:
``left + bottom = right + top``.
"""

from collections.abc import Sequence
from functools import cache
from itertools import product

from spinlab.algebra.context import HBAR, Context, RFunc
from spinlab.models.matrices import Label, OpMatrix


@cache
def binary_strings(v: int) -> tuple[Label, ...]:
    """Standard basis labels of ``(K^2)^v`` in lexicographic order."""

    return tuple(product((0, 1), repeat=v))


def vertex_weight(
    left: int, right: int, bottom: int, spin: RFunc, u: RFunc, hbar: RFunc
) -> RFunc:
    """Weight of a vertex with spectral parameter ``u`` and bottom label ``bottom``."""

    if left == right == 0:
        return u - (spin - 2 * bottom) * hbar
    if left == right == 1:
        return u + (spin - 2 * bottom) * hbar
    if left == 0:
        return 2 * bottom * hbar
    return 2 * (spin - bottom) * hbar


def column_entry(
    ctx: Context,
    west: Label,
    east: Label,
    parameters: Sequence[RFunc],
    spin: RFunc,
    bound: int | None,
    top: int,
    bottom: int,
) -> RFunc:
    """Weight of the unique column configuration with the given boundary."""

    hbar = ctx.var(HBAR)
    result = ctx.one
    current = bottom

    for i in reversed(range(len(parameters))):
        above = west[i] + current - east[i]
        if above < 0 or (bound is not None and above > bound):
            return ctx.zero
        result *= vertex_weight(west[i], east[i], current, spin, parameters[i], hbar)
        current = above

    return result if current == top else ctx.zero


def column_transfer(
    ctx: Context,
    parameters: Sequence[RFunc],
    spin: RFunc,
    bound: int | None,
    top: int,
    bottom: int,
) -> OpMatrix:
    """Column transfer operator on ``(K^2)^v``, rows are west and columns east labels.

    Row ``i`` of the column, counted from the top, has spectral parameter
    ``parameters[i]``. A ``bound`` of ``None`` leaves the vertical labels
    unbounded, for spins kept as a variable.
    """

    basis = binary_strings(len(parameters))
    entries = tuple(
        tuple(
            column_entry(ctx, west, east, parameters, spin, bound, top, bottom)
            for east in basis
        )
        for west in basis
    )
    return OpMatrix(rows=basis, cols=basis, entries=entries)
