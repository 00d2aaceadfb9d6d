from hypothesis import strategies as st

from spinlab.algebra.context import HBAR, Z, Context, RFunc, context

PAIR = (HBAR, Z)


def pair() -> Context:
    """Context of hbar and a single parameter ``z``."""

    return context(PAIR)


@st.composite
def polynomials(draw: st.DrawFn, degree: int = 2) -> RFunc:
    """Small polynomials in hbar and z with integer coefficients."""

    ctx = pair()
    hbar, z = ctx.var(HBAR), ctx.var(Z)
    result = ctx.zero
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            coefficient = draw(st.integers(min_value=-4, max_value=4))
            result += coefficient * hbar**i * z**j
    return result
