import logging
from collections.abc import Callable, Generator
from contextlib import contextmanager
from functools import cache
from itertools import permutations

from spinlab.algebra.context import HBAR, U, X, Context, RFunc, context, y_name
from spinlab.algebra.errors import AlgebraError
from spinlab.algebra.variables import chain_context
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.matrices import Label, OpMatrix
from spinlab.services.lattice.vertex import binary_strings, column_transfer
from spinlab.services.sixvertex import crossings as cr
from spinlab.services.sixvertex import errors as e
from spinlab.services.sixvertex import models as m
from spinlab.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

SPIN = "l"

# Largest label tried when the spin is a variable
SYMBOLIC_LABELS = 3

Checks = Callable[[], list[r.Check]]


def _context(v: int, symbolic: bool) -> Context:
    return chain_context(v, (X, SPIN) if symbolic else (X,))


def _rows(ctx: Context, v: int) -> list[RFunc]:
    return [ctx.var(y_name(i)) for i in range(1, v + 1)]


@cache
def _tilded(v: int, symbolic: bool) -> tuple[OpMatrix, OpMatrix]:
    ctx = _context(v, symbolic)
    y = _rows(ctx, v)
    return cr.bras(ctx, y), cr.kets(ctx, y)


def _transfer(
    ctx: Context, v: int, spin: int | None, top: int, bottom: int
) -> OpMatrix:
    x = ctx.var(X)
    parameters = [y - x for y in _rows(ctx, v)]
    value = ctx.var(SPIN) if spin is None else ctx.const(spin)
    return column_transfer(ctx, parameters, value, spin, top, bottom)


def _conjugate(v: int, spin: int | None, top: int) -> OpMatrix:
    ctx = _context(v, spin is None)
    bras, kets = _tilded(v, spin is None)
    return om.chain(ctx, bras, _transfer(ctx, v, spin, top, 0), kets)


def _closed(v: int, spin: int | None, top: int) -> OpMatrix:
    ctx = _context(v, spin is None)
    y = _rows(ctx, v)
    x = ctx.var(X)
    value = ctx.var(SPIN) if spin is None else ctx.const(spin)
    basis = binary_strings(v)
    entries = tuple(
        tuple(cr.transfer_entry(ctx, b, a, top, value, y, x) for a in basis)
        for b in basis
    )
    return OpMatrix(rows=basis, cols=basis, entries=entries)


def _spin_name(spin: int | None) -> str:
    return SPIN if spin is None else str(spin)


class SixVertexService:
    """Service for the six-vertex R-matrix and the tilded basis."""

    def __init__(self, threads: int = 1) -> None:
        self._threads = threads

    @contextmanager
    def _handle_errors(self) -> Generator[None, None, None]:
        try:
            yield
        except AlgebraError as ex:
            raise e.KernelError(str(ex)) from ex

    def crossing(self, request: m.CrossingRequest) -> m.CrossingResponse:
        """Build the R-matrix acting on two neighbouring sites."""

        v, position = request.v, request.position

        if not 1 <= position < v:
            raise e.SiteRangeError(position, v)

        ctx = context((HBAR, U))

        with self._handle_errors():
            matrix = cr.crossing(ctx, v, position, ctx.var(U))

        return m.CrossingResponse(
            matrix=matrix,
        )

    def basis(self, request: m.BasisRequest) -> m.BasisResponse:
        """Build the tilded vectors and covectors of a chain."""

        v = request.v
        ctx = chain_context(v)
        y = _rows(ctx, v)

        with self._handle_errors():
            kets = cr.kets(ctx, y)
            bras = cr.bras(ctx, y)
            kappas = [cr.kappa(ctx, a, y) for a in binary_strings(v)]

        return m.BasisResponse(
            kets=kets,
            bras=bras,
            kappas=kappas,
        )

    def conjugate(self, request: m.ConjugateRequest) -> m.ConjugateResponse:
        """Write a column transfer operator in the tilded basis."""

        if not 0 <= request.m <= request.spin:
            raise e.SpinRangeError(request.m, request.spin)

        spin = None if request.symbolic else request.spin

        with self._handle_errors():
            matrix = _conjugate(request.v, spin, request.m)

        return m.ConjugateResponse(
            matrix=matrix,
        )

    def identities(self, request: m.IdentitiesRequest) -> m.IdentitiesResponse:
        """Verify the six-vertex relations and the tilded basis."""

        spins: list[int | None] = list(request.spins)
        if request.symbolic:
            spins.append(None)

        groups: list[Checks] = [_ybe, _unitarity, _examples]
        groups.extend(lambda spin=spin: _rll(spin) for spin in spins)
        for v in range(1, request.v_max + 1):
            groups.append(lambda v=v: _basis(v))
            groups.append(lambda v=v: _straight(v))
            groups.extend(lambda v=v, spin=spin: _charge_conservation(v, spin) for spin in spins)

        with self._handle_errors():
            results = ordered_map(lambda group: group(), groups, self._threads)

        report = r.Report(
            suite="sixvertex", checks=[check for group in results for check in group]
        )

        logger.info(
            "Six-vertex identities up to %d sites: %d checks, %d failed.",
            request.v_max,
            len(report.checks),
            len(report.failures),
        )

        return m.IdentitiesResponse(
            report=report,
        )


def _matrices(name: str, a: OpMatrix, b: OpMatrix, **subject: object) -> r.Check:
    return r.check(name, om.equal(a, b), om.first_difference(a, b), **subject)


def _ybe() -> list[r.Check]:
    ctx = chain_context(3)
    u1, u2, u3 = _rows(ctx, 3)
    lhs = om.chain(
        ctx,
        cr.crossing(ctx, 3, 1, u1 - u2),
        cr.crossing(ctx, 3, 2, u1 - u3),
        cr.crossing(ctx, 3, 1, u2 - u3),
    )
    rhs = om.chain(
        ctx,
        cr.crossing(ctx, 3, 2, u2 - u3),
        cr.crossing(ctx, 3, 1, u1 - u3),
        cr.crossing(ctx, 3, 2, u1 - u2),
    )
    return [_matrices("ybe", lhs, rhs)]


def _unitarity() -> list[r.Check]:
    ctx = context((HBAR, U))
    u = ctx.var(U)
    product = om.product(ctx, cr.crossing(ctx, 2, 1, u), cr.crossing(ctx, 2, 1, -u))
    return [_matrices("unitarity", product, om.identity(ctx, binary_strings(2)))]


def _rll(spin: int | None) -> list[r.Check]:
    ctx = _context(2, spin is None)
    x = ctx.var(X)
    y1, y2 = _rows(ctx, 2)
    value = ctx.var(SPIN) if spin is None else ctx.const(spin)
    labels = range((SYMBOLIC_LABELS if spin is None else spin) + 1)
    crossing = cr.crossing(ctx, 2, 1, y2 - y1)
    forward, backward = [y1 - x, y2 - x], [y2 - x, y1 - x]

    checks = []
    for top in labels:
        for bottom in labels:
            ordered = column_transfer(ctx, forward, value, spin, top, bottom)
            swapped = column_transfer(ctx, backward, value, spin, top, bottom)
            checks.append(
                _matrices(
                    "rll",
                    om.product(ctx, crossing, ordered),
                    om.product(ctx, swapped, crossing),
                    spin=_spin_name(spin),
                    top=top,
                    bottom=bottom,
                )
            )
    return checks


def _basis(v: int) -> list[r.Check]:
    ctx = chain_context(v)
    y = _rows(ctx, v)
    basis = binary_strings(v)
    checks = []

    for a in basis:
        if a == cr.sort_string(a):
            column = cr.ket(ctx, a, y)
            entries = tuple((ctx.one if c == a else ctx.zero,) for c in basis)
            expected = OpMatrix(rows=basis, cols=(a,), entries=entries)
            checks.append(_matrices("sorted-ket", column, expected, string=a))

    bras, kets = cr.bras(ctx, y), cr.kets(ctx, y)
    pairing = om.product(ctx, bras, kets)
    checks.append(_matrices("duality", pairing, om.identity(ctx, basis), v=v))

    for a in basis:
        checks.extend(_representatives(ctx, a, y))

    for sigma in permutations(range(1, v + 1)):
        forward = cr.r_sigma(ctx, sigma, y, cr.Sweep.FORWARD)
        backward = cr.r_sigma(ctx, sigma, y, cr.Sweep.BACKWARD)
        checks.append(_matrices("reduced-word", forward, backward, sigma=sigma))

    return checks


def _representatives(ctx: Context, a: Label, y: list[RFunc]) -> list[r.Check]:
    checks = []
    column = cr.ket(ctx, a, y)
    sigma = cr.ket_alternative(a)
    if sigma is not None:
        other = cr.ket(ctx, a, y, sigma=sigma)
        checks.append(_matrices("coset-ket", column, other, string=a, sigma=sigma))
    row = cr.bra(ctx, a, y)
    tau = cr.bra_alternative(a)
    if tau is not None:
        other = cr.bra(ctx, a, y, tau=tau)
        checks.append(_matrices("coset-bra", row, other, string=a, tau=tau))
    return checks


def _straight(v: int) -> list[r.Check]:
    ctx = _context(v, True)
    x, hbar, spin = ctx.var(X), ctx.var(HBAR), ctx.var(SPIN)
    transfer = _transfer(ctx, v, None, 0, 0)
    zeros = (0,) * v

    expected = ctx.one
    for y in _rows(ctx, v):
        expected *= y - x - spin * hbar

    column = [transfer.entry(b, zeros) for b in transfer.rows]
    others = [value for b, value in zip(transfer.rows, column) if b != zeros]
    ok = not (transfer.entry(zeros, zeros) - expected) and not any(others)
    return [r.check("straight-through", ok, str(column), v=v)]


def _charge_conservation(v: int, spin: int | None) -> list[r.Check]:
    tops = range((SYMBOLIC_LABELS if spin is None else spin) + 1)
    ctx = _context(v, spin is None)
    checks = []
    for top in tops:
        transfer = _transfer(ctx, v, spin, top, 0)
        leaks = [
            (b, a)
            for b in transfer.rows
            for a in transfer.cols
            if sum(b) - sum(a) != top and transfer.entry(b, a)
        ]
        checks.append(
            r.check(
                "occupation",
                not leaks,
                str(leaks[:1]),
                v=v,
                spin=_spin_name(spin),
                top=top,
            )
        )

        conjugated, closed = _conjugate(v, spin, top), _closed(v, spin, top)
        checks.append(
            _matrices(
                "quasi-diagonal",
                conjugated,
                closed,
                v=v,
                spin=_spin_name(spin),
                top=top,
            )
        )
    return checks


def _examples() -> list[r.Check]:
    ctx = _context(4, True)
    y1, y2, y3, y4 = y = _rows(ctx, 4)
    x, hbar, spin = ctx.var(X), ctx.var(HBAR), ctx.var(SPIN)
    basis = binary_strings(4)
    checks = []

    column = cr.ket(ctx, (0, 0, 1, 0), y)
    expected = {
        (0, 0, 1, 0): cr.beta(ctx, y3 - y4),
        (0, 0, 0, 1): -cr.gamma(ctx, y3 - y4),
    }
    ok = all(column.entry(c, (0, 0, 1, 0)) == expected.get(c, ctx.zero) for c in basis)
    checks.append(r.check("example-ket", ok, str(column.entries)))

    row = cr.bra(ctx, (1, 1, 0, 1), y)
    scale = ctx.one / cr.kappa(ctx, (1, 1, 0, 1), y)
    expected = {
        (1, 1, 0, 1): scale * cr.beta(ctx, y4 - y3),
        (1, 1, 1, 0): -scale * cr.gamma(ctx, y4 - y3),
    }
    ok = all(row.entry((1, 1, 0, 1), c) == expected.get(c, ctx.zero) for c in basis)
    checks.append(r.check("example-bra", ok, str(row.entries)))

    conjugated = _conjugate(4, None, 2)
    zero = conjugated.entry((1, 1, 0, 1), (0, 0, 1, 0))
    checks.append(r.check("example-zero", not zero, str(zero)))

    value = conjugated.entry((1, 1, 0, 1), (0, 1, 0, 0))
    expected = (
        (2 * hbar) ** 2
        * spin
        * (spin - 1)
        * (y1 - y3 - 2 * hbar)
        * (y4 - y3 - 2 * hbar)
        / ((y1 - y3) * (y4 - y3))
        * (y2 - x + spin * hbar)
        * (y3 - x - spin * hbar)
    )
    checks.append(
        r.check("example-entry", not (value - expected), f"{value} != {expected}")
    )
    return checks
