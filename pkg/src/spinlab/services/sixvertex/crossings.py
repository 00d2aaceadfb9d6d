"""Six-vertex R-matrix, its products along permutations and the tilded basis.

Matrices act on ``(K^2)^v`` with rows labelled by bras and columns by kets,
both binary strings in lexicographic order.
"""

from collections.abc import Sequence
from enum import Enum

from spinlab.algebra.context import HBAR, Context, RFunc
from spinlab.models import matrices as om
from spinlab.models.matrices import Label, OpMatrix
from spinlab.models.profiles import Permutation, inverse
from spinlab.services.lattice.vertex import binary_strings


class Sweep(str, Enum):
    """Direction of the passes that sort a permutation by adjacent swaps."""

    FORWARD = "forward"
    BACKWARD = "backward"


def beta(ctx: Context, u: RFunc) -> RFunc:
    return u / (u - 2 * ctx.var(HBAR))


def gamma(ctx: Context, u: RFunc) -> RFunc:
    hbar = ctx.var(HBAR)
    return 2 * hbar / (u - 2 * hbar)


def local_entry(ctx: Context, bra: Label, ket: Label, u: RFunc) -> RFunc:
    """Entry of the two-site R-matrix between ``bra`` and ``ket``."""

    if bra == ket and bra[0] == bra[1]:
        return ctx.one
    if sum(bra) != sum(ket):
        return ctx.zero
    if bra != ket:
        return beta(ctx, u)
    return -gamma(ctx, u)


def crossing(ctx: Context, v: int, p: int, u: RFunc) -> OpMatrix:
    """R-matrix with parameter ``u`` acting on sites ``p`` and ``p + 1`` (1-based)."""

    basis = binary_strings(v)
    rows = []
    for bra in basis:
        row = []
        for ket in basis:
            if bra[: p - 1] != ket[: p - 1] or bra[p + 1 :] != ket[p + 1 :]:
                row.append(ctx.zero)
            else:
                pair = (bra[p - 1 : p + 1], ket[p - 1 : p + 1])
                row.append(local_entry(ctx, *pair, u))
        rows.append(tuple(row))
    return OpMatrix(rows=basis, cols=basis, entries=tuple(rows))


def swaps(
    sigma: Permutation, sweep: Sweep = Sweep.FORWARD
) -> list[tuple[int, int, int]]:
    """Adjacent swaps that sort ``sigma``, as ``(p, left, right)`` before each swap.

    Every swap removes one inversion, so the result is a reduced word.
    """

    line = list(sigma)
    order = list(range(len(line) - 1))
    if sweep == Sweep.BACKWARD:
        order.reverse()
    result = []
    changed = True
    while changed:
        changed = False
        for p in order:
            if line[p] > line[p + 1]:
                result.append((p + 1, line[p], line[p + 1]))
                line[p], line[p + 1] = line[p + 1], line[p]
                changed = True
    return result


def r_sigma(
    ctx: Context,
    sigma: Permutation,
    u: Sequence[RFunc],
    sweep: Sweep = Sweep.FORWARD,
) -> OpMatrix:
    """Product of crossings along ``sigma``, the first swap acting first.

    Bra side lines carry ``u_1..u_v`` and ket side lines ``u_sigma(1)..``.
    """

    v = len(sigma)
    result = om.identity(ctx, binary_strings(v))
    for p, left, right in swaps(sigma, sweep):
        factor = crossing(ctx, v, p, u[right - 1] - u[left - 1])
        result = om.product(ctx, factor, result)
    return result


def sort_string(a: Label) -> Label:
    """Zeros first."""

    return tuple(sorted(a))


def rsort_string(a: Label) -> Label:
    """Ones first."""

    return tuple(sorted(a, reverse=True))


def ket_permutation(a: Label) -> Permutation:
    """Indices of ``a`` in the order of its sorted entries, zeros first."""

    zeros = [i for i, x in enumerate(a, start=1) if x == 0]
    ones = [i for i, x in enumerate(a, start=1) if x == 1]
    return tuple(zeros + ones)


def bra_permutation(a: Label) -> Permutation:
    """Position of every entry of ``a`` in its reverse sort, ones first."""

    ones = sum(a)
    seen_ones = seen_zeros = 0
    result = []
    for x in a:
        if x:
            seen_ones += 1
            result.append(seen_ones)
        else:
            seen_zeros += 1
            result.append(ones + seen_zeros)
    return tuple(result)


def ket_alternative(a: Label) -> Permutation | None:
    """Another permutation carrying ``sort(a)`` to ``a``, if one exists.

    Exchanges the lines of two equal sorted labels, which the R-matrix
    fixes.
    """

    sigma = list(ket_permutation(a))
    zeros = len(a) - sum(a)
    if zeros >= 2:
        sigma[0], sigma[1] = sigma[1], sigma[0]
    elif sum(a) >= 2:
        sigma[-2], sigma[-1] = sigma[-1], sigma[-2]
    else:
        return None
    return tuple(sigma)


def bra_alternative(a: Label) -> Permutation | None:
    """Another permutation carrying ``a`` to ``rsort(a)``, if one exists."""

    tau = list(bra_permutation(a))
    if sum(a) >= 2:
        label = 1
    elif len(a) - sum(a) >= 2:
        label = 0
    else:
        return None
    first, second = [i for i, x in enumerate(a) if x == label][:2]
    tau[first], tau[second] = tau[second], tau[first]
    return tuple(tau)


def kappa(ctx: Context, a: Label, y: Sequence[RFunc]) -> RFunc:
    """Product of ``beta(y_i - y_j)`` over ``a_i = 1`` and ``a_j = 0``."""

    result = ctx.one
    for i, ai in enumerate(a):
        for j, aj in enumerate(a):
            if ai == 1 and aj == 0:
                result *= beta(ctx, y[i] - y[j])
    return result


def ket(
    ctx: Context,
    a: Label,
    y: Sequence[RFunc],
    sigma: Permutation | None = None,
    sweep: Sweep = Sweep.FORWARD,
) -> OpMatrix:
    """Tilded basis vector as a single column."""

    sigma = ket_permutation(a) if sigma is None else sigma
    matrix = r_sigma(ctx, sigma, y, sweep)
    column = matrix.cols.index(sort_string(a))
    entries = tuple((row[column],) for row in matrix.entries)
    return OpMatrix(rows=matrix.rows, cols=(a,), entries=entries)


def bra(
    ctx: Context,
    a: Label,
    y: Sequence[RFunc],
    tau: Permutation | None = None,
    sweep: Sweep = Sweep.FORWARD,
) -> OpMatrix:
    """Tilded dual basis vector as a single row."""

    tau = bra_permutation(a) if tau is None else tau
    lines = [y[k - 1] for k in inverse(tau)]
    matrix = r_sigma(ctx, tau, lines, sweep)
    row = matrix.entries[matrix.rows.index(rsort_string(a))]
    scale = ctx.one / kappa(ctx, a, y)
    entries = (tuple(x * scale for x in row),)
    return OpMatrix(rows=(a,), cols=matrix.cols, entries=entries)


def kets(ctx: Context, y: Sequence[RFunc]) -> OpMatrix:
    """All tilded vectors, one per column."""

    basis = binary_strings(len(y))
    columns = [ket(ctx, a, y).entries for a in basis]
    entries = tuple(
        tuple(column[i][0] for column in columns) for i in range(len(basis))
    )
    return OpMatrix(rows=basis, cols=basis, entries=entries)


def bras(ctx: Context, y: Sequence[RFunc]) -> OpMatrix:
    """All tilded dual vectors, one per row."""

    basis = binary_strings(len(y))
    entries = tuple(bra(ctx, a, y).entries[0] for a in basis)
    return OpMatrix(rows=basis, cols=basis, entries=entries)


def transfer_entry(
    ctx: Context,
    b: Label,
    a: Label,
    m: int,
    spin: RFunc,
    y: Sequence[RFunc],
    x: RFunc,
) -> RFunc:
    """Entry of a column operator with bottom label zero in the tilded basis."""

    if sum(b) - sum(a) != m or any(bi < ai for bi, ai in zip(b, a)):
        return ctx.zero

    hbar = ctx.var(HBAR)
    result = (2 * hbar) ** m
    for k in range(m):
        result *= spin - k

    for i, (bi, ai) in enumerate(zip(b, a)):
        if bi == ai == 0:
            result *= y[i] - x - spin * hbar
        elif bi == ai == 1:
            result *= y[i] - x + spin * hbar

    for i, (bi, ai) in enumerate(zip(b, a)):
        if (bi, ai) != (1, 0):
            continue
        for j, (bj, aj) in enumerate(zip(b, a)):
            if bj == aj == 0:
                result *= (y[i] - y[j] - 2 * hbar) / (y[i] - y[j])
    return result
