import pytest
import typer

from spinlab import parsing


def test_integers() -> None:
    """Test if comma-separated integers are parsed."""

    assert parsing.integers("2, 3,4") == (2, 3, 4)
    assert parsing.integers(" ") == ()


@pytest.mark.parametrize("value", ["", "0,1", "1,x", "-2"])
def test_bad_spins(value: str) -> None:
    """Test if empty, nonpositive or malformed spins are rejected."""

    with pytest.raises(typer.BadParameter):
        parsing.spins(value)


def test_point() -> None:
    """Test if occupations must not be negative."""

    assert parsing.point("1,0") == (1, 0)

    with pytest.raises(typer.BadParameter):
        parsing.point("1,-1")


def test_permutation_shortcuts() -> None:
    """Test if the identity and the reversal have names."""

    assert parsing.permutation("id", 3) == (1, 2, 3)
    assert parsing.permutation("rev", 3) == (3, 2, 1)
    assert parsing.permutation("2,1,3", 3) == (2, 1, 3)


@pytest.mark.parametrize("value", ["1,1", "1,2,3", "0,1"])
def test_bad_permutation(value: str) -> None:
    """Test if tuples that do not permute the columns are rejected."""

    with pytest.raises(typer.BadParameter):
        parsing.permutation(value, 2)
