"""Dense matrices over a rational function field.

Matrices are tuples of rows of field elements. Small inverses use the
adjugate; larger ones are computed fraction-free over the polynomial ring
with a single division at the end.
"""

from collections.abc import Sequence

from spinlab.algebra import errors as e
from spinlab.algebra.context import Context, MPoly, RFunc

Matrix = tuple[tuple[RFunc, ...], ...]


def freeze(rows: Sequence[Sequence[RFunc]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def zeros(ctx: Context, rows: int, cols: int) -> Matrix:
    return freeze([[ctx.zero] * cols for _ in range(rows)])


def identity(ctx: Context, n: int) -> Matrix:
    return freeze(
        [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]
    )


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def transpose(m: Matrix) -> Matrix:
    return freeze(zip(*m)) if m else m


def subtract(a: Matrix, b: Matrix) -> Matrix:
    return freeze([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def scale(m: Matrix, factor: RFunc) -> Matrix:
    return freeze([[factor * x for x in row] for row in m])


def multiply(ctx: Context, a: Matrix, b: Matrix) -> Matrix:
    """Matrix product ``a @ b``."""

    if not a:
        return ()

    n, k = shape(a)
    if len(b) != k:
        raise ValueError(f"Cannot multiply {n}x{k} matrix by {len(b)} rows.")

    columns = transpose(b)
    result = []
    for row in a:
        out = []
        for column in columns:
            total = ctx.zero
            for x, y in zip(row, column):
                if x and y:
                    total += x * y
            out.append(total)
        result.append(out)
    return freeze(result)


def is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    """Exact entrywise equality."""

    return shape(a) == shape(b) and is_zero(subtract(a, b))


def is_identity(ctx: Context, m: Matrix) -> bool:
    return equal(m, identity(ctx, len(m)))


def _minor(m: Matrix, row: int, col: int) -> Matrix:
    return freeze(
        [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(m) if i != row]
    )


def _laplace(ctx: Context, m: Matrix) -> RFunc:
    if not m:
        return ctx.one
    if len(m) == 1:
        return m[0][0]

    total = ctx.zero
    for j, x in enumerate(m[0]):
        if x:
            cofactor = _laplace(ctx, _minor(m, 0, j))
            total += x * cofactor if j % 2 == 0 else -x * cofactor
    return total


def _polynomial_rows(ctx: Context, m: Matrix) -> tuple[list[list[MPoly]], MPoly]:
    denominator = ctx.ring.one
    for row in m:
        for x in row:
            denominator = denominator.lcm(x.denom)
    rows = [[x.numer * denominator.exquo(x.denom) for x in row] for row in m]
    return rows, denominator


def _eliminate(rows: list[list[MPoly]], n: int, one: MPoly) -> MPoly:
    """Fraction-free Gauss-Jordan on the first ``n`` columns, in place.

    Returns the last pivot, which equals every diagonal entry afterwards.
    """

    previous = one
    for k in range(n):
        pivot = next((i for i in range(k, n) if rows[i][k]), None)
        if pivot is None:
            raise e.SingularMatrixError(k)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]

        top = rows[k]
        for i in range(n):
            if i == k:
                continue
            row = rows[i]
            factor = row[k]
            rows[i] = [
                (top[k] * x - factor * y).exquo(previous) for x, y in zip(row, top)
            ]
        previous = top[k]

    return previous


def _bareiss_inverse(ctx: Context, m: Matrix) -> Matrix:
    n = len(m)
    rows, denominator = _polynomial_rows(ctx, m)
    ring = ctx.ring
    for i, row in enumerate(rows):
        row.extend(ring.one if i == j else ring.zero for j in range(n))

    pivot = _eliminate(rows, n, ring.one)

    return freeze(
        [[ctx.fraction(denominator * x, pivot) for x in row[n:]] for row in rows]
    )


def _adjugate_inverse(ctx: Context, m: Matrix) -> Matrix:
    n = len(m)
    det = _laplace(ctx, m)
    if not det:
        # Locate the vanishing pivot for the error report.
        _bareiss_inverse(ctx, m)
        raise e.SingularMatrixError(n - 1)

    if n == 1:
        return freeze([[1 / det]])

    return freeze(
        [
            [
                (1 if (i + j) % 2 == 0 else -1) * _laplace(ctx, _minor(m, j, i)) / det
                for j in range(n)
            ]
            for i in range(n)
        ]
    )


def inverse(ctx: Context, m: Matrix) -> Matrix:
    """Exact inverse of a square matrix.

    Raises :class:`SingularMatrixError` carrying the column without a pivot.
    """

    n, k = shape(m)
    if n != k:
        raise ValueError(f"Cannot invert a non-square {n}x{k} matrix.")
    if n == 0:
        return m
    if n <= 3:
        return _adjugate_inverse(ctx, m)
    return _bareiss_inverse(ctx, m)


def determinant(ctx: Context, m: Matrix) -> RFunc:
    """Exact determinant."""

    n = len(m)
    if n <= 3:
        return _laplace(ctx, m)

    rows, denominator = _polynomial_rows(ctx, m)
    sign = 1
    previous = ctx.ring.one
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if rows[i][k]), None)
        if pivot is None:
            return ctx.zero
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            rows[i] = [
                (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]).exquo(previous)
                for j in range(n)
            ]
        previous = rows[k][k]

    return ctx.fraction(sign * rows[n - 1][n - 1], denominator**n)
