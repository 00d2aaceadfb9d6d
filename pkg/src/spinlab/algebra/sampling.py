"""Random rational points for exact randomized identity testing."""

from fractions import Fraction
from random import Random

from spinlab.algebra.context import HBAR, z_name


def random_rational(rng: Random, bound: int) -> Fraction:
    """Nonzero rational with numerator and denominator bounded by ``bound``."""

    while True:
        numerator = rng.randint(-bound, bound)
        if numerator:
            return Fraction(numerator, rng.randint(1, bound))


def on_pole_locus(point: dict[str, Fraction], w: int, spread: int) -> bool:
    """Check whether ``z_i - z_j - a hbar`` vanishes for some ``|a| <= spread``."""

    hbar = point[HBAR]
    for i in range(1, w + 1):
        for j in range(i + 1, w + 1):
            ratio = (point[z_name(i)] - point[z_name(j)]) / hbar
            if ratio.denominator == 1 and abs(ratio) <= spread:
                return True
    return False


def random_point(rng: Random, w: int, bound: int, spread: int) -> dict[str, Fraction]:
    """Values for hbar and ``z_1..z_w`` away from the pole loci."""

    while True:
        point = {HBAR: random_rational(rng, bound)}
        point.update((z_name(j), random_rational(rng, bound)) for j in range(1, w + 1))
        if not on_pole_locus(point, w, spread):
            return point
