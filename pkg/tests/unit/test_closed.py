import pytest

from spinlab.algebra.context import HBAR
from spinlab.algebra.variables import pair_context
from spinlab.services.rmatrix import closed


def test_swapped_entry_at_full_grade() -> None:
    """Test if a spin equal to the grade still gives a factorial prefactor."""

    ctx = pair_context()
    hbar = ctx.var(HBAR)

    assert closed.a21_entry((3, 3), 3, 0, 3) == 48 * hbar**3
    assert closed.a21_entry((1, 1), 1, 0, 1) == 2 * hbar


@pytest.mark.parametrize("ell, v", [((1, 1), 1), ((3, 3), 3), ((2, 4), 2)])
def test_entries_at_spin_equal_to_grade(ell: tuple[int, int], v: int) -> None:
    """Test if every closed entry is a field element when a spin equals the grade."""

    ctx = pair_context()
    indices = range(v + 1)

    for j in indices:
        for jp in indices:
            entry = closed.r_entry(ell, v, j, jp)
            assert entry.field == ctx.field
            assert closed.a_inverse_entry(ell, v, j, jp).field == ctx.field
            assert closed.a21_entry(ell, v, j, jp).field == ctx.field


def test_falling_factorial_through_zero() -> None:
    """Test if falling factorials of plain integers stay in the field."""

    ctx = pair_context()

    assert closed._falling(ctx, 0, 0) == ctx.one
    assert closed._falling(ctx, 0, 2) == ctx.zero
    assert closed._falling(ctx, 2, 3) == ctx.zero
    assert closed._falling(ctx, 3, 2) == ctx.const(6)
    assert closed._falling(ctx, ctx.zero, 1).field == ctx.field
