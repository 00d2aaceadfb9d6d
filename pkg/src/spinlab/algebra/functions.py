from collections.abc import Iterable, Mapping
from typing import Union

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from spinlab.algebra import errors as e
from spinlab.algebra.context import Context, MPoly, RFunc, Scalar

Binding = Union[RFunc, MPoly, Scalar]


def lift(ctx: Context, value: Binding) -> RFunc:
    """Bring a scalar, polynomial or rational function into the context's field."""

    if isinstance(value, FracElement):
        return ctx.adopt(value)
    if isinstance(value, PolyElement):
        return ctx.frac(value)
    return ctx.const(value)


def collect(poly: MPoly, index: int) -> dict[int, MPoly]:
    """Split a polynomial by powers of one variable."""

    ring = poly.ring
    parts: dict[int, dict] = {}
    for monom, coeff in poly.iterterms():
        rest = monom[:index] + (0,) + monom[index + 1 :]
        parts.setdefault(monom[index], {})[rest] = coeff
    return {power: ring.from_dict(terms) for power, terms in parts.items()}


def degree_in(poly: MPoly, indices: Iterable[int]) -> int:
    """Total degree in a subset of the variables, -1 for the zero polynomial."""

    indices = tuple(indices)
    return max(
        (sum(monom[i] for i in indices) for monom in poly.itermonoms()), default=-1
    )


def _substitute_poly(ctx: Context, poly: MPoly, images: dict[int, RFunc]) -> RFunc:
    ring = ctx.ring

    if all(image.denom.is_one for image in images.values()):
        replacements = [(ring.gens[i], image.numer) for i, image in images.items()]
        return ctx.frac(poly.compose(replacements) if replacements else poly)

    # Clear all denominators at once: x_i -> n_i / d_i over prod d_i^(deg_i)
    degrees = {i: poly.degree(ring.gens[i]) for i in images}
    numers = {i: [ring.one] for i in images}
    denoms = {i: [ring.one] for i in images}
    for i, image in images.items():
        for _ in range(max(degrees[i], 0)):
            numers[i].append(numers[i][-1] * image.numer)
            denoms[i].append(denoms[i][-1] * image.denom)

    total = ring.zero
    for monom, coeff in poly.iterterms():
        rest = list(monom)
        term = ring.one
        for i in images:
            power, rest[i] = rest[i], 0
            term *= numers[i][power] * denoms[i][degrees[i] - power]
        total += term.mul_term((tuple(rest), coeff))

    common = ring.one
    for i in images:
        common *= denoms[i][max(degrees[i], 0)]

    return ctx.fraction(total, common)


def substitute(
    ctx: Context, value: MPoly | RFunc, bindings: Mapping[str, Binding]
) -> RFunc:
    """Simultaneously substitute variables by rational functions.

    Unbound variables pass through unchanged. The result is normalized.
    """

    unknown = [name for name in bindings if not ctx.has(name)]
    if unknown:
        raise e.ContextMismatchError(unknown)

    images = {ctx.index(name): lift(ctx, image) for name, image in bindings.items()}

    if isinstance(value, FracElement):
        value = ctx.adopt(value)
        num = _substitute_poly(ctx, value.numer, images)
        den = _substitute_poly(ctx, value.denom, images)
        if not den:
            raise e.DivisionByZeroError("substituted denominator")
        return num / den

    return _substitute_poly(ctx, ctx.adopt_poly(value), images)
