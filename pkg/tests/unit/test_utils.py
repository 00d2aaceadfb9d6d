import threading
from random import Random

from spinlab.algebra.context import HBAR, z_name
from spinlab.algebra.sampling import on_pole_locus, random_point
from spinlab.utils.parallel import ordered_map


def test_ordered_map_keeps_order() -> None:
    """Test if results come back in input order for any number of threads."""

    items = list(range(50))

    for threads in (1, 2, 8):
        assert ordered_map(lambda x: x * x, items, threads) == [x * x for x in items]


def test_ordered_map_serial() -> None:
    """Test if a single thread runs everything in the calling thread."""

    seen = set()

    def record(_: int) -> None:
        seen.add(threading.get_ident())

    ordered_map(record, range(4), threads=1)
    assert seen == {threading.get_ident()}


def test_random_point_is_regular() -> None:
    """Test if sampled points avoid the pole loci and repeat for a fixed seed."""

    first = random_point(Random("7:0"), 3, 5, 6)
    second = random_point(Random("7:0"), 3, 5, 6)

    assert first == second
    assert set(first) == {HBAR, z_name(1), z_name(2), z_name(3)}
    assert not on_pole_locus(first, 3, 6)
    assert all(value for value in first.values())
