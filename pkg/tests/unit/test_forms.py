from fractions import Fraction

from spinlab.algebra.context import HBAR, Z, to_qq
from spinlab.algebra.forms import from_json, rational, to_json, to_latex, to_text
from spinlab.algebra.variables import pair_context


def test_json_preserves_value() -> None:
    """Test if the JSON form rebuilds the same fraction in the same context."""

    ctx = pair_context(symbolic=True)
    hbar, z, l1 = ctx.var(HBAR), ctx.var(Z), ctx.var("l_1")
    value = (z - (l1 + 2) * hbar) / (3 * z + hbar / 2)

    data = to_json(value)
    rebuilt = from_json(data)

    assert data["vars"] == [HBAR, Z, "l_1", "l_2"]
    assert rebuilt.field == value.field
    assert rebuilt == value


def test_json_of_zero() -> None:
    """Test if zero has no numerator terms and a unit denominator."""

    ctx = pair_context()

    data = to_json(ctx.zero)

    assert data["num"] == {"terms": []}
    assert data["den"] == {"terms": [[[0, 0], "1"]]}
    assert from_json(data) == ctx.zero


def test_rationals_are_exact() -> None:
    """Test if coefficients are written as exact fractions."""

    assert rational(to_qq(Fraction(3, 4))) == "3/4"
    assert rational(to_qq(-5)) == "-5"


def test_text_forms() -> None:
    """Test if polynomials print bare and fractions with parentheses."""

    ctx = pair_context()
    z, hbar = ctx.var(Z), ctx.var(HBAR)

    fraction = 1 / (z - hbar)

    assert to_text(z - hbar) == str((z - hbar).numer)
    assert to_text(fraction) == f"({fraction.numer})/({fraction.denom})"
    assert "z" in to_latex(fraction)
