import pytest

from spinlab.algebra.context import context
from spinlab.algebra.variables import chain_context
from spinlab.models import matrices as om
from spinlab.services.sixvertex import errors as e
from spinlab.services.sixvertex import models as m
from spinlab.state import State


def test_crossing_entries(state: State) -> None:
    """Test if the two-site R-matrix has unit, transmission and reflection entries."""

    matrix = state.sixvertex.crossing(m.CrossingRequest()).matrix

    ctx = context(("hbar", "u"))
    hbar, u = ctx.var("hbar"), ctx.var("u")

    assert matrix.entry((0, 0), (0, 0)) == ctx.one
    assert matrix.entry((1, 1), (1, 1)) == ctx.one
    assert matrix.entry((0, 1), (1, 0)) == u / (u - 2 * hbar)
    assert matrix.entry((1, 0), (0, 1)) == u / (u - 2 * hbar)
    assert matrix.entry((0, 1), (0, 1)) == -2 * hbar / (u - 2 * hbar)
    assert not matrix.entry((0, 0), (0, 1))


def test_crossing_acts_locally(state: State) -> None:
    """Test if a crossing leaves the other sites untouched."""

    matrix = state.sixvertex.crossing(m.CrossingRequest(v=3, position=2)).matrix

    assert not matrix.entry((1, 0, 1), (0, 0, 1))
    assert matrix.entry((1, 0, 1), (1, 1, 0))
    assert matrix.entry((0, 0, 0), (0, 0, 0)) == matrix.entries[0][0].field.one


@pytest.mark.parametrize("v, position", [(2, 2), (3, 0), (1, 1)])
def test_crossing_site_range(state: State, v: int, position: int) -> None:
    """Test if crossings outside of the chain are rejected."""

    with pytest.raises(e.SiteRangeError):
        state.sixvertex.crossing(m.CrossingRequest(v=v, position=position))


@pytest.mark.parametrize("v", [1, 2, 3])
def test_basis_duality(state: State, v: int) -> None:
    """Test if the tilded covectors are dual to the tilded vectors."""

    res = state.sixvertex.basis(m.BasisRequest(v=v))
    ctx = chain_context(v)

    pairing = om.product(ctx, res.bras, res.kets)

    assert om.equal(pairing, om.identity(ctx, res.kets.cols))


def test_kappa(state: State) -> None:
    """Test if the normalization of a covector is a product of transmissions."""

    res = state.sixvertex.basis(m.BasisRequest(v=2))
    ctx = chain_context(2)
    hbar, y1, y2 = ctx.var("hbar"), ctx.var("y_1"), ctx.var("y_2")

    kappas = dict(zip(res.kets.cols, res.kappas))

    assert kappas[(0, 0)] == ctx.one
    assert kappas[(1, 1)] == ctx.one
    assert kappas[(1, 0)] == (y1 - y2) / (y1 - y2 - 2 * hbar)
    assert kappas[(0, 1)] == (y2 - y1) / (y2 - y1 - 2 * hbar)


@pytest.mark.parametrize("symbolic", [False, True])
def test_conjugate_keeps_occupation(state: State, symbolic: bool) -> None:
    """Test if the conjugated transfer operator raises occupation by its top label."""

    req = m.ConjugateRequest(spin=2, m=1, v=3, symbolic=symbolic)
    matrix = state.sixvertex.conjugate(req).matrix

    for b in matrix.rows:
        for a in matrix.cols:
            if sum(b) - sum(a) != 1:
                assert not matrix.entry(b, a)


def test_conjugate_spin_range(state: State) -> None:
    """Test if a top label above the spin is rejected."""

    with pytest.raises(e.SpinRangeError):
        state.sixvertex.conjugate(m.ConjugateRequest(spin=2, m=3, v=2))


def test_identities_small(state: State) -> None:
    """Test if the six-vertex identities hold on short chains."""

    req = m.IdentitiesRequest(v_max=3, spins=(1, 2), symbolic=True)
    report = state.sixvertex.identities(req).report

    names = {check.name for check in report.checks}

    assert {"duality", "quasi-diagonal", "straight-through"} <= names
    assert report.passed, report.failures


@pytest.mark.slow
def test_identities_full(state: State) -> None:
    """Test if the six-vertex identities hold with the default bounds."""

    report = state.sixvertex.identities(m.IdentitiesRequest()).report

    assert report.passed, report.failures
