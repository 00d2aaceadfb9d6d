from itertools import permutations

from spinlab.models.base import datamodel

FixedPoint = tuple[int, ...]
"""Occupation numbers ``(v_1, ..., v_w)`` of the framing columns."""

Permutation = tuple[int, ...]
"""Permutation of ``1..w`` in one-line notation."""


@datamodel
class SpinProfile:
    """Spins of the framing columns."""

    ell: tuple[int, ...]
    """Spin of each column, at least one."""

    symbolic: bool = False
    """Use a polynomial variable ``l_j`` for the spin inside weights."""

    def __post_init__(self) -> None:
        if not self.ell:
            raise ValueError("Spin profile needs at least one column.")
        if any(spin < 1 for spin in self.ell):
            raise ValueError(f"Spins must be positive: {self.ell}.")

    @property
    def w(self) -> int:
        """Number of framing columns."""

        return len(self.ell)

    @property
    def total(self) -> int:
        """Sum of all spins, the top grade of the module."""

        return sum(self.ell)

    def contains(self, point: FixedPoint) -> bool:
        """Check whether a tuple is a fixed point of this profile."""

        return len(point) == self.w and all(
            0 <= v <= spin for v, spin in zip(point, self.ell)
        )


def identity(w: int) -> Permutation:
    return tuple(range(1, w + 1))


def inverse(sigma: Permutation) -> Permutation:
    result = [0] * len(sigma)
    for position, image in enumerate(sigma, start=1):
        result[image - 1] = position
    return tuple(result)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Composition ``sigma after tau``."""

    return tuple(sigma[t - 1] for t in tau)


def is_permutation(sigma: Permutation) -> bool:
    return sorted(sigma) == list(range(1, len(sigma) + 1))


def all_permutations(w: int) -> list[Permutation]:
    """All permutations of ``1..w`` in lexicographic order."""

    return list(permutations(range(1, w + 1)))


def total(point: FixedPoint) -> int:
    return sum(point)
