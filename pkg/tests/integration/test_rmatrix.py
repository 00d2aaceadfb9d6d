import pytest

from spinlab.algebra.variables import pair_context
from spinlab.models.profiles import SpinProfile
from spinlab.services.rmatrix import errors as e
from spinlab.services.rmatrix import models as m
from spinlab.state import State


def test_two_column_grade_one(state: State) -> None:
    """Test if the grade one R-matrix matches the closed 2x2 expression."""

    ctx = pair_context(symbolic=True)
    hbar, z = ctx.var("hbar"), ctx.var("z")
    l1, l2 = ctx.var("l_1"), ctx.var("l_2")
    profile = SpinProfile(ell=(1, 1), symbolic=True)

    req = m.RMatrixRequest(
        profile=profile, target=(1, 2), source=(2, 1), v=1, specialize=True
    )
    res = state.rmatrix.r_matrix(req)
    entries = [[ctx.adopt(x) for x in row] for row in res.matrix.entries]
    den = z - (l1 + l2) * hbar

    assert res.variables is None
    assert entries == [
        [(-z + (l1 - l2) * hbar) / den, -2 * l1 * hbar / den],
        [-2 * l2 * hbar / den, (-z - (l1 - l2) * hbar) / den],
    ]


def test_pure_spin_two(state: State) -> None:
    """Test if equal spins give a symmetric grade one R-matrix."""

    ctx = pair_context()
    hbar, z = ctx.var("hbar"), ctx.var("z")

    req = m.RMatrixRequest(
        profile=SpinProfile(ell=(2, 2)), target=(1, 2), source=(2, 1), v=1,
        specialize=True,
    )
    entries = state.rmatrix.r_matrix(req).matrix.entries
    den = z - 4 * hbar

    assert [list(row) for row in entries] == [
        [-z / den, -4 * hbar / den],
        [-4 * hbar / den, -z / den],
    ]


@pytest.mark.parametrize(
    "ell, v",
    [
        ((3, 3), 2),
        ((2, 3), 2),
        ((1, 2), 1),
        ((1, 1), 1),
        pytest.param((3, 3), 3, marks=pytest.mark.slow),
    ],
)
def test_closed_form_agrees(state: State, ell: tuple[int, int], v: int) -> None:
    """Test if the closed R-matrix equals the one built from restrictions."""

    req = m.RMatrixRequest(
        profile=SpinProfile(ell=ell), target=(1, 2), source=(2, 1), v=v,
        specialize=True,
    )
    computed = state.rmatrix.r_matrix(req).matrix

    req = m.ClosedFormRequest(ell=ell, v=v)
    closed = state.rmatrix.closed_form(req).matrix

    assert computed.rows == closed.rows
    assert computed.entries == closed.entries


@pytest.mark.slow
def test_closed_form_agrees_large(state: State) -> None:
    """Test if the closed R-matrix holds at spin four and grade three."""

    req = m.RMatrixRequest(
        profile=SpinProfile(ell=(4, 4)), target=(1, 2), source=(2, 1), v=3,
        specialize=True,
    )
    computed = state.rmatrix.r_matrix(req).matrix
    closed = state.rmatrix.closed_form(m.ClosedFormRequest(ell=(4, 4), v=3)).matrix

    assert computed.entries == closed.entries


def test_closed_form_range(state: State) -> None:
    """Test if a grade above the smaller spin is rejected."""

    with pytest.raises(e.IndexRangeError):
        state.rmatrix.closed_form(m.ClosedFormRequest(ell=(1, 3), v=2))


def test_closed_inverse_is_inverse(state: State) -> None:
    """Test if the closed inverse restriction matrix has a unit diagonal product."""

    ctx = pair_context()
    ell, v = (2, 3), 2

    inverse = state.rmatrix.closed_form(
        m.ClosedFormRequest(ell=ell, v=v, form=m.Form.A_INVERSE)
    ).matrix
    swapped = state.rmatrix.closed_form(
        m.ClosedFormRequest(ell=ell, v=v, form=m.Form.A_SWAPPED)
    ).matrix
    r = state.rmatrix.closed_form(m.ClosedFormRequest(ell=ell, v=v)).matrix

    size = len(r.rows)
    for i in range(size):
        for k in range(size):
            value = ctx.zero
            for j in range(size):
                value += inverse.entries[i][j] * swapped.entries[j][k]
            assert value == r.entries[i][k]


@pytest.mark.parametrize(
    "profile, v",
    [
        (SpinProfile(ell=(1, 2)), 1),
        (SpinProfile(ell=(2, 2)), 2),
        (SpinProfile(ell=(1, 1), symbolic=True), 1),
    ],
)
def test_identities(state: State, profile: SpinProfile, v: int) -> None:
    """Test if unit, cocycle, translation and denominator checks pass."""

    report = state.rmatrix.identities(
        m.IdentitiesRequest(profile=profile, v=v)
    ).report

    assert report.checks
    assert report.passed, report.failures


@pytest.mark.parametrize("ell, v", [((1, 1, 1), 1), ((2, 1, 1), 1), ((1, 1, 1), 2)])
def test_braid(state: State, ell: tuple[int, int, int], v: int) -> None:
    """Test if both factorizations of the longest R-matrix agree."""

    report = state.rmatrix.braid(
        m.BraidRequest(profile=SpinProfile(ell=ell), v=v)
    ).report

    assert report.checks
    assert report.passed, report.failures


def test_braid_needs_three_columns(state: State) -> None:
    """Test if the braid check refuses two columns."""

    with pytest.raises(e.ColumnCountError):
        state.rmatrix.braid(m.BraidRequest(profile=SpinProfile(ell=(1, 1)), v=1))


def test_specialize_needs_two_columns(state: State) -> None:
    """Test if only two-column results can be written in z."""

    req = m.RMatrixRequest(
        profile=SpinProfile(ell=(1, 1, 1)), target=(1, 2, 3), source=(3, 2, 1), v=1,
        specialize=True,
    )

    with pytest.raises(e.ColumnCountError):
        state.rmatrix.r_matrix(req)
