from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinlab.algebra import errors as e
from spinlab.algebra.context import HBAR, Z, RFunc, context, variables, y_name, z_name
from spinlab.algebra.functions import substitute
from spinlab.algebra.variables import Variables, pair_context, specialize_pair
from tests.utils.strategies import pair, polynomials


def test_substitute_root() -> None:
    """Test if substituting the Chern root of a box cancels its linear form."""

    variables = Variables((1,), 1)
    p = variables.y(1) - variables.z(1) + variables.hbar

    value = substitute(variables.ctx, p, {y_name(1): variables.z(1) - variables.hbar})

    assert not value


def test_substitute_rationals() -> None:
    """Test if rational bindings multiply out exactly."""

    variables = Variables((1,), 2)
    p = variables.y(1) * variables.y(2)

    value = substitute(
        variables.ctx, p, {y_name(1): Fraction(2, 3), y_name(2): Fraction(3, 2)}
    )

    assert value == variables.ctx.one


def test_substitute_then_specialize() -> None:
    """Test if a restricted weight specializes to the difference of parameters."""

    variables = Variables((2, 3), 1)
    hbar = variables.hbar
    p = variables.z(2) - variables.y(1) + 3 * hbar

    restricted = substitute(variables.ctx, p, {y_name(1): variables.z(1) - 2 * hbar})
    value = specialize_pair(restricted)

    ctx = pair_context()
    assert value == -ctx.var(Z) + 5 * ctx.var(HBAR)


def test_substitute_unknown_variable() -> None:
    """Test if binding a variable outside the context is rejected."""

    ctx = pair()

    with pytest.raises(e.ContextMismatchError):
        substitute(ctx, ctx.var(Z), {z_name(7): 1})


def test_substitute_rational_images() -> None:
    """Test if a rational image clears denominators correctly."""

    ctx = pair()
    hbar, z = ctx.var(HBAR), ctx.var(Z)

    value = substitute(ctx, z**2 + hbar, {Z: 1 / (z - hbar)})

    assert value == 1 / (z - hbar) ** 2 + hbar


def test_substitute_pole() -> None:
    """Test if a vanishing substituted denominator is reported."""

    ctx = pair()
    hbar, z = ctx.var(HBAR), ctx.var(Z)

    with pytest.raises(e.DivisionByZeroError):
        substitute(ctx, 1 / (z - hbar), {Z: hbar})


def test_fraction_cancels_common_factor() -> None:
    """Test if fractions are reduced to lowest terms."""

    ctx = pair()
    hbar, z = ctx.pvar(HBAR), ctx.pvar(Z)

    value = ctx.fraction(z**2 - hbar**2, z - hbar)

    assert value.denom.is_one
    assert value == ctx.var(Z) + ctx.var(HBAR)


def test_fraction_with_spins() -> None:
    """Test if a shared linear factor cancels with the spins kept as variables."""

    ctx = pair_context(symbolic=True)
    hbar, z = ctx.pvar(HBAR), ctx.pvar(Z)
    l1, l2 = ctx.pvar("l_1"), ctx.pvar("l_2")
    minus = z - (l1 - l2) * hbar
    plus = z - (l1 + l2) * hbar

    value = ctx.fraction(minus**2, plus * minus)

    assert value == ctx.frac(minus) / ctx.frac(plus)


def test_fraction_by_zero() -> None:
    """Test if dividing by the zero polynomial raises an error."""

    ctx = pair()

    with pytest.raises(e.DivisionByZeroError):
        ctx.fraction(ctx.pvar(Z), ctx.ring.zero)


def test_adopt_between_contexts() -> None:
    """Test if values move into a wider context and keep their variables."""

    narrow = pair()
    wide = context((HBAR, Z, "t"))

    value = wide.adopt(narrow.var(Z) / narrow.var(HBAR))

    assert value.field == wide.field
    assert variables(value) == {HBAR, Z}


def test_adopt_missing_variable() -> None:
    """Test if moving into a context without a used variable fails."""

    wide = context((HBAR, Z, "t"))

    with pytest.raises(e.ContextMismatchError):
        pair().adopt(wide.var("t"))


@settings(deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a: RFunc, b: RFunc, c: RFunc) -> None:
    """Test if addition and multiplication are associative and distributive."""

    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(deadline=None)
@given(polynomials(), polynomials())
def test_division_inverts_multiplication(a: RFunc, b: RFunc) -> None:
    """Test if dividing a product by a nonzero factor recovers the other factor."""

    if b:
        assert (a * b) / b == a
        assert b / b == pair().one


@settings(deadline=None)
@given(polynomials(), polynomials(), st.integers(min_value=-6, max_value=6))
def test_substitute_is_multiplicative(a: RFunc, b: RFunc, shift: int) -> None:
    """Test if substitution commutes with products."""

    ctx = pair()
    bindings = {Z: ctx.var(HBAR) + shift}

    product = substitute(ctx, a * b, bindings)

    assert product == substitute(ctx, a, bindings) * substitute(ctx, b, bindings)
