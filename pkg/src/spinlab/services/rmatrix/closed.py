"""Closed formulas for two framing columns, written in ``z = z_1 - z_2``.

Index ``j`` labels the fixed point ``(v - j, j)``. Factorial ratios of the
spins are written as falling factorials so that the formulas also hold for
symbolic spins.
"""

from math import comb

from spinlab.algebra.context import HBAR, Z, Context, RFunc, l_name
from spinlab.algebra.functions import Binding, lift
from spinlab.algebra.variables import pair_context


def _symbols(ell: tuple[int, int], symbolic: bool) -> tuple[RFunc, ...]:
    ctx = pair_context(symbolic)
    if symbolic:
        l1, l2 = ctx.var(l_name(1)), ctx.var(l_name(2))
    else:
        l1, l2 = ctx.const(ell[0]), ctx.const(ell[1])
    return ctx.var(HBAR), ctx.var(Z), l1, l2


def _falling(ctx: Context, value: Binding, k: int) -> RFunc:
    # Sums that cancel to zero come back from sympy as plain ints.
    value = lift(ctx, value)
    result = ctx.one
    for i in range(k):
        result *= value - ctx.const(i)
    return result


def a_inverse_entry(
    ell: tuple[int, int], v: int, j: int, i: int, symbolic: bool = False
) -> RFunc:
    """Entry ``(j, i)`` of the inverse restriction matrix of the identity chamber."""

    hbar, z, l1, l2 = _symbols(ell, symbolic)
    if i > j:
        return z.field.zero

    sign = (-1) ** ((j + 1) * v + j)
    ctx = pair_context(symbolic)
    result = sign * comb(j, i) * _falling(ctx, l2 - i, j - i)
    result *= (2 * hbar) ** (j - i)
    result *= z + (l2 - l1 + 2 * (v - 2 * i)) * hbar
    for b in range(j + 1):
        result /= z + (l2 - l1 + 2 * (v - i - b)) * hbar
    for a in range(v - i):
        result /= z - (l1 + l2 - 2 * a) * hbar
    return result


def a21_entry(
    ell: tuple[int, int], v: int, i: int, j: int, symbolic: bool = False
) -> RFunc:
    """Entry ``(i, j)`` of the restriction matrix of the swapped chamber."""

    hbar, z, l1, l2 = _symbols(ell, symbolic)
    if i > j:
        return z.field.zero

    sign = (-1) ** (j * (v + 1))
    ctx = pair_context(symbolic)
    result = sign * comb(v - i, v - j) * _falling(ctx, l1 - v + j, j - i)
    result *= (2 * hbar) ** (j - i)
    for b in range(v - j):
        result *= z + (l2 - l1 - 2 * (i - b)) * hbar
    for a in range(i):
        result *= z + (l1 + l2 - 2 * a) * hbar
    return result


def r_entry(
    ell: tuple[int, int], v: int, j: int, jp: int, symbolic: bool = False
) -> RFunc:
    """Entry ``(j, j')`` of the two-column R-matrix as a single sum."""

    result = pair_context(symbolic).zero
    for i in range(min(j, jp) + 1):
        result += a_inverse_entry(ell, v, j, i, symbolic) * a21_entry(
            ell, v, i, jp, symbolic
        )
    return result


def labels(v: int) -> tuple[tuple[int, int], ...]:
    """Fixed points ``(v - j, j)`` in index order."""

    return tuple((v - j, j) for j in range(v + 1))
