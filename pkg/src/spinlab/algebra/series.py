"""Residues at simple poles and expansions at infinity in one variable."""

from sympy.polys.polyerrors import ExactQuotientFailed

from spinlab.algebra import errors as e
from spinlab.algebra.context import Context, RFunc, variables
from spinlab.algebra.functions import Binding, collect, degree_in, lift, substitute


def _split_pole(ctx: Context, var: str, pole: Binding) -> RFunc:
    pole = lift(ctx, pole)
    if var in variables(pole):
        raise e.PoleOrderError(str(pole), f"the point depends on {var}")
    return pole


def residue_simple_pole(ctx: Context, f: RFunc, var: str, pole: Binding) -> RFunc:
    """Residue of ``f`` at ``var = pole``, which must be a simple pole.

    The denominator is divided exactly by the linear factor of the pole and
    the cofactor is checked not to vanish there.
    """

    f = ctx.adopt(f)
    pole = _split_pole(ctx, var, pole)
    linear = pole.denom * ctx.pvar(var) - pole.numer

    try:
        cofactor = f.denom.exquo(linear)
    except ExactQuotientFailed as ex:
        raise e.PoleOrderError(str(pole), "no pole at the point") from ex

    at_pole = substitute(ctx, cofactor, {var: pole})
    if not at_pole:
        raise e.PoleOrderError(str(pole), "pole of order at least two")

    return substitute(ctx, f.numer, {var: pole}) / (ctx.frac(pole.denom) * at_pole)


def residue_by_derivative(ctx: Context, f: RFunc, var: str, pole: Binding) -> RFunc:
    """Residue at a simple pole as ``num(pole) / den'(pole)``."""

    f = ctx.adopt(f)
    pole = _split_pole(ctx, var, pole)
    derivative = substitute(ctx, f.denom.diff(ctx.pvar(var)), {var: pole})
    if not derivative:
        raise e.PoleOrderError(str(pole), "derivative of the denominator vanishes")
    return substitute(ctx, f.numer, {var: pole}) / derivative


def laurent_at_infinity(ctx: Context, f: RFunc, var: str, order: int) -> list[RFunc]:
    """Coefficients of ``var^0, var^-1, ..., var^-order`` of ``f`` at infinity."""

    f = ctx.adopt(f)
    index = ctx.index(var)
    numer = collect(f.numer, index)
    denom = collect(f.denom, index)
    top = max(denom)
    if numer and max(numer) > top:
        raise e.DegreeError(max(numer), top)

    # Reversed coefficients: the series variable is 1/var.
    zero = ctx.ring.zero
    n_hat = [ctx.frac(numer.get(top - k, zero)) for k in range(order + 1)]
    d_hat = [ctx.frac(denom.get(top - k, zero)) for k in range(order + 1)]

    coefficients: list[RFunc] = []
    for k in range(order + 1):
        value = n_hat[k]
        for j in range(1, k + 1):
            if d_hat[j]:
                value -= d_hat[j] * coefficients[k - j]
        coefficients.append(value / d_hat[0])
    return coefficients


def residue_at_infinity(ctx: Context, f: RFunc, var: str) -> RFunc:
    """Residue at infinity, minus the coefficient of ``1/var``.

    Functions growing at infinity are divided by a power of ``var`` first,
    which shifts the wanted coefficient deeper into the expansion.
    """

    f = ctx.adopt(f)
    index = ctx.index(var)
    excess = max(0, degree_in(f.numer, [index]) - degree_in(f.denom, [index]))
    bounded = f / ctx.var(var) ** excess
    return -laurent_at_infinity(ctx, bounded, var, excess + 1)[excess + 1]
