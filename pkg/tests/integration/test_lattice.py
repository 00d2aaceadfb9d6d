import pytest

from spinlab.algebra.variables import Variables, chain_context
from spinlab.models.profiles import SpinProfile
from spinlab.services.lattice import errors as e
from spinlab.services.lattice import models as m
from spinlab.services.weights import models as wm
from spinlab.state import State

SYMBOLIC = SpinProfile(ell=(1, 1), symbolic=True)


def test_states_of_full_boundary(state: State) -> None:
    """Test if the full boundary of two unit columns has two states."""

    req = m.StatesRequest(profile=SYMBOLIC, v=2, boundary=(1, 1))
    states = state.lattice.states(req).states

    assert [s.vertical for s in states] == [
        ((1, 1), (0, 1), (0, 0)),
        ((1, 1), (1, 0), (0, 0)),
    ]


def test_state_weight(state: State) -> None:
    """Test if the weight of a state is the product of its vertex weights."""

    variables = Variables(SYMBOLIC.ell, 2, symbolic=True)
    hbar, y1, y2 = variables.hbar, variables.y(1), variables.y(2)
    z1, z2 = variables.z(1), variables.z(2)
    l1, l2 = variables.spin(1), variables.spin(2)

    lattice = m.LatticeState(
        v=2, w=2, boundary=(1, 1), vertical=((1, 1), (0, 1), (0, 0))
    )
    value = state.lattice.weight(m.WeightRequest(profile=SYMBOLIC, state=lattice)).value

    expected = (
        4 * l1 * l2 * hbar**2 * (y1 - z2 - (l2 - 2) * hbar) * (y2 - z1 + l1 * hbar)
    )
    assert value == expected


def test_partition_is_scaled_weight(state: State) -> None:
    """Test if the partition function is the weight function times 4 l1 l2 hbar^2."""

    req = m.PartitionRequest(profile=SYMBOLIC, v=2, boundary=(1, 1))
    res = state.lattice.partition(req)

    req = wm.WeightRequest(profile=SYMBOLIC, sigma=(1, 2), point=(1, 1))
    weight = state.weights.weight(req).value

    variables = res.variables
    factor = 4 * variables.spin(1) * variables.spin(2) * variables.hbar**2

    assert res.count == 2
    assert res.value == factor * weight


def test_prefactor_sign(state: State) -> None:
    """Test if the prefactor of the full boundary is positive."""

    variables = Variables(SYMBOLIC.ell, 2, symbolic=True)
    value = state.lattice.prefactor(variables, (1, 1))

    assert value == 4 * variables.spin(1) * variables.spin(2) * variables.hbar**2


def test_empty_lattice(state: State) -> None:
    """Test if a lattice without rows has a single state of weight one."""

    req = m.PartitionRequest(profile=SpinProfile(ell=(2, 1)), v=0, boundary=(0, 0))
    res = state.lattice.partition(req)

    assert res.count == 1
    assert res.value == res.variables.ctx.one


@pytest.mark.parametrize(
    "profile, v",
    [
        (SpinProfile(ell=(1, 1)), 1),
        (SpinProfile(ell=(2, 2)), 2),
        (SpinProfile(ell=(1, 2, 1)), 2),
        (SpinProfile(ell=(3,)), 2),
        (SYMBOLIC, 2),
    ],
)
def test_theorem(state: State, profile: SpinProfile, v: int) -> None:
    """Test if partition functions equal scaled weight functions."""

    report = state.lattice.theorem(m.TheoremRequest(profile=profile, v=v)).report

    assert report.checks
    assert report.passed, report.failures


def test_transfer_straight_through(state: State) -> None:
    """Test if the empty column transfers the empty row state by a product."""

    req = m.TransferRequest(spin=2, top=0, bottom=0, v=2)
    matrix = state.lattice.transfer(req).matrix

    ctx = chain_context(2, ("x",))
    hbar, x = ctx.var("hbar"), ctx.var("x")
    y1, y2 = ctx.var("y_1"), ctx.var("y_2")

    assert matrix.entry((0, 0), (0, 0)) == (y1 - x - 2 * hbar) * (y2 - x - 2 * hbar)
    assert not matrix.entry((1, 0), (0, 0))


def test_transfer_symbolic_spin(state: State) -> None:
    """Test if a symbolic spin enters the weight of a turning path."""

    req = m.TransferRequest(spin=1, top=1, bottom=0, v=1, symbolic=True)
    matrix = state.lattice.transfer(req).matrix

    ctx = chain_context(1, ("x", "l"))

    assert matrix.entry((1,), (0,)) == 2 * ctx.var("l") * ctx.var("hbar")


def test_transfer_label_range(state: State) -> None:
    """Test if labels above the spin are rejected."""

    with pytest.raises(e.LabelRangeError):
        state.lattice.transfer(m.TransferRequest(spin=2, top=3, bottom=0, v=1))


@pytest.mark.parametrize("boundary, v", [((2, 0), 2), ((1, 0), 2)])
def test_invalid_boundary(state: State, boundary: tuple[int, int], v: int) -> None:
    """Test if boundaries above the spins or of the wrong size are rejected."""

    req = m.StatesRequest(profile=SpinProfile(ell=(1, 1)), v=v, boundary=boundary)

    with pytest.raises(e.InvalidBoundaryError):
        state.lattice.states(req)


def test_invalid_state(state: State) -> None:
    """Test if a state breaking conservation cannot be weighed."""

    lattice = m.LatticeState(
        v=1, w=2, boundary=(1, 0), vertical=((1, 0), (1, 0))
    )

    with pytest.raises(e.InvalidStateError):
        state.lattice.weight(
            m.WeightRequest(profile=SpinProfile(ell=(1, 1)), state=lattice)
        )


def test_render(state: State) -> None:
    """Test if a drawing shows the boundary labels and the vertices."""

    req = m.StatesRequest(profile=SpinProfile(ell=(1, 1)), v=2, boundary=(1, 1))
    lattice = state.lattice.states(req).states[0]
    text = state.lattice.render(m.RenderRequest(state=lattice)).text

    lines = text.splitlines()
    assert "┼" in text
    assert lines[0].split() == ["1", "1"]
    assert lines[-1].split() == ["0", "0"]
