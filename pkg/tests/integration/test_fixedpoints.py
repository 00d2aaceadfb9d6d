from itertools import product

import pytest

from spinlab.algebra.variables import Variables
from spinlab.models.profiles import SpinProfile
from spinlab.services.fixedpoints import errors as e
from spinlab.services.fixedpoints import models as m
from spinlab.state import State


def _count(ell: tuple[int, ...], v: int) -> int:
    """Coefficient of x^v in the product of 1 + x + ... + x^l."""

    counts = [1]
    for spin in ell:
        counts = [
            sum(counts[k - i] for i in range(spin + 1) if 0 <= k - i < len(counts))
            for k in range(len(counts) + spin)
        ]
    return counts[v] if v < len(counts) else 0


@pytest.mark.parametrize(
    "ell, v, expected",
    [
        ((1, 1), 1, [(1, 0), (0, 1)]),
        ((2, 2), 2, [(2, 0), (1, 1), (0, 2)]),
        ((1,), 2, []),
        ((3,), 0, [(0,)]),
    ],
)
def test_enumerate(
    state: State, ell: tuple[int, ...], v: int, expected: list[tuple[int, ...]]
) -> None:
    """Test if fixed points come in descending lexicographic order."""

    req = m.EnumerateRequest(profile=SpinProfile(ell=ell), v=v)

    assert state.fixedpoints.enumerate(req).points == expected


@pytest.mark.parametrize("w", [1, 2, 3])
def test_enumerate_counts(state: State, w: int) -> None:
    """Test if the number of fixed points matches the generating function."""

    for ell in product(range(1, 4), repeat=w):
        for v in range(sum(ell) + 2):
            req = m.EnumerateRequest(profile=SpinProfile(ell=ell), v=v)
            points = state.fixedpoints.enumerate(req).points

            assert len(points) == _count(ell, v)
            assert len(set(points)) == len(points)


def test_roots(state: State) -> None:
    """Test if boxes of a column have weights z - (l - 2k) hbar."""

    profile = SpinProfile(ell=(3, 2))
    variables = Variables(profile.ell, 2)
    z1, hbar = variables.z(1), variables.hbar

    req = m.RootsRequest(profile=profile, point=(2, 0), variables=variables)
    roots = state.fixedpoints.roots(req).roots

    assert roots == [z1 - 3 * hbar, z1 - hbar]

    req = m.RootsRequest(profile=profile, point=(0, 0), variables=variables)
    assert state.fixedpoints.roots(req).roots == []


def test_roots_invalid_point(state: State) -> None:
    """Test if points outside the profile are rejected."""

    profile = SpinProfile(ell=(1, 1))
    variables = Variables(profile.ell, 2)

    with pytest.raises(e.InvalidPointError):
        req = m.RootsRequest(profile=profile, point=(2, 0), variables=variables)
        state.fixedpoints.roots(req)


def test_boxes(state: State) -> None:
    """Test if addible and removable boxes sit on top of the columns."""

    profile = SpinProfile(ell=(2,))
    variables = Variables(profile.ell)
    z, hbar = variables.z(1), variables.hbar

    empty = state.fixedpoints.boxes(
        m.BoxesRequest(profile=profile, point=(0,), variables=variables)
    )
    full = state.fixedpoints.boxes(
        m.BoxesRequest(profile=profile, point=(2,), variables=variables)
    )

    assert [box.weight for box in empty.addible] == [z - 2 * hbar]
    assert empty.removable == []
    assert full.addible == []
    assert [box.weight for box in full.removable] == [z + 2 * hbar - 2 * hbar]


def test_boxes_are_inverse(state: State) -> None:
    """Test if adding a box and removing it again returns the same point."""

    profile = SpinProfile(ell=(2, 2))
    variables = Variables(profile.ell)

    for v in range(profile.total + 1):
        req = m.EnumerateRequest(profile=profile, v=v)
        for point in state.fixedpoints.enumerate(req).points:
            req = m.BoxesRequest(profile=profile, point=point, variables=variables)
            boxes = state.fixedpoints.boxes(req)
            for box in boxes.addible:
                raised = tuple(
                    c + (j == box.column) for j, c in enumerate(point, start=1)
                )
                req = m.BoxesRequest(profile=profile, point=raised, variables=variables)
                removable = state.fixedpoints.boxes(req).removable

                assert box.column in [other.column for other in removable]
                assert box.weight in [other.weight for other in removable]


@pytest.mark.parametrize(
    "first, second, sigma, expected",
    [
        ((1, 0), (0, 1), (1, 2), 1),
        ((1, 0), (0, 1), (2, 1), -1),
        ((1, 1, 0), (1, 1, 0), (3, 1, 2), 0),
    ],
)
def test_compare(
    state: State,
    first: tuple[int, ...],
    second: tuple[int, ...],
    sigma: tuple[int, ...],
    expected: int,
) -> None:
    """Test if chambers reorder the lexicographic comparison."""

    req = m.CompareRequest(first=first, second=second, sigma=sigma)

    assert state.fixedpoints.compare(req).ordering == expected


def test_compare_is_total(state: State) -> None:
    """Test if every chamber order is antisymmetric and transitive."""

    points = [p for p in product(range(3), repeat=3)]

    for sigma in [(1, 2, 3), (2, 3, 1), (3, 2, 1)]:

        def cmp(a: tuple[int, ...], b: tuple[int, ...]) -> int:
            req = m.CompareRequest(first=a, second=b, sigma=sigma)
            return state.fixedpoints.compare(req).ordering

        for a in points:
            for b in points:
                assert cmp(a, b) == -cmp(b, a)
                if cmp(a, b) > 0:
                    for c in points:
                        if cmp(b, c) > 0:
                            assert cmp(a, c) > 0
