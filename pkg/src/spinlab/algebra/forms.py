"""Canonical text, JSON and LaTeX forms of exact values."""

from fractions import Fraction
from typing import Any

import sympy

from spinlab.algebra.context import MPoly, RFunc, context, to_qq


def rational(value: Any) -> str:
    """Exact rational as ``"p"`` or ``"p/q"``."""

    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def poly_terms(poly: MPoly) -> list[tuple[list[int], str]]:
    """Terms in descending monomial order."""

    return [(list(monom), rational(coeff)) for monom, coeff in poly.terms()]


def poly_json(poly: MPoly) -> dict[str, Any]:
    return {"terms": [[monom, coeff] for monom, coeff in poly_terms(poly)]}


def to_json(value: RFunc) -> dict[str, Any]:
    """JSON-ready form with the variable table of the value's context."""

    return {
        "vars": [str(symbol) for symbol in value.field.symbols],
        "num": poly_json(value.numer),
        "den": poly_json(value.denom),
    }


def to_text(value: RFunc) -> str:
    """Canonical one-line text form."""

    if value.denom.is_one:
        return str(value.numer)
    return f"({value.numer})/({value.denom})"


def to_latex(value: RFunc) -> str:
    """LaTeX of the factored value."""

    return sympy.latex(sympy.factor(value.as_expr()))


def from_json(data: dict[str, Any]) -> RFunc:
    """Rebuild a value from its JSON form, in the context of its variable table."""

    ctx = context(tuple(data["vars"]))

    def poly(part: dict[str, Any]) -> MPoly:
        terms = {tuple(monom): to_qq(Fraction(coeff)) for monom, coeff in part["terms"]}
        return ctx.ring.from_dict(terms) if terms else ctx.ring.zero

    return ctx.fraction(poly(data["num"]), poly(data["den"]))
