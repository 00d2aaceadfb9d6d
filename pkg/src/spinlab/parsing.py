"""Parsers of command-line values."""

import typer

from spinlab.models.profiles import FixedPoint, Permutation, is_permutation


def integers(value: str) -> tuple[int, ...]:
    """Parse comma-separated integers, an empty string is the empty tuple."""

    value = value.strip()
    if not value:
        return ()
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError as ex:
        raise typer.BadParameter(f"{value!r} is not a list of integers.") from ex


def spins(value: str) -> tuple[int, ...]:
    """Parse a spin profile such as ``2,3``."""

    ell = integers(value)
    if not ell:
        raise typer.BadParameter("At least one spin is needed.")
    if any(spin < 1 for spin in ell):
        raise typer.BadParameter(f"Spins must be positive: {value!r}.")
    return ell


def point(value: str) -> FixedPoint:
    """Parse occupation numbers such as ``1,0``."""

    result = integers(value)
    if any(x < 0 for x in result):
        raise typer.BadParameter(f"Occupations must not be negative: {value!r}.")
    return result


def permutation(value: str, w: int) -> Permutation:
    """Parse a permutation in one-line notation, ``id`` or ``rev``."""

    match value.strip():
        case "id":
            return tuple(range(1, w + 1))
        case "rev":
            return tuple(range(w, 0, -1))

    sigma = integers(value)
    if len(sigma) != w or not is_permutation(sigma):
        raise typer.BadParameter(f"{value!r} is not a permutation of 1..{w}.")
    return sigma
