"""Symmetrized sums behind the framed shuffle product.

Every summand carries a denominator made of differences of Chern roots. All
summands are brought over the Vandermonde product of the roots, summed as
polynomials and divided once at the end.
"""

from collections.abc import Iterator, Sequence
from itertools import combinations

from sympy.polys.polyerrors import ExactQuotientFailed

from spinlab.algebra.context import MPoly, y_name
from spinlab.algebra.variables import Variables
from spinlab.services.weights import errors as e
from spinlab.services.weights import models as m
from spinlab.utils.parallel import ordered_map


def vandermonde(ys: Sequence[MPoly], one: MPoly) -> MPoly:
    """Product of ``y_i - y_j`` over ``i < j``."""

    result = one
    for a, b in combinations(ys, 2):
        result *= a - b
    return result


def _divide(total: MPoly, ys: Sequence[MPoly], one: MPoly) -> MPoly:
    try:
        return total.exquo(vandermonde(ys, one))
    except ExactQuotientFailed as ex:
        raise e.NotPolynomialError() from ex


def ordered_partitions(
    items: Sequence[int], counts: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered set partitions of ``items`` into blocks of the given sizes."""

    if not counts:
        if not items:
            yield ()
        return

    for block in combinations(items, counts[0]):
        rest = [item for item in items if item not in block]
        for tail in ordered_partitions(rest, counts[1:]):
            yield (block, *tail)


class _Gens:
    """Polynomial generators used by the sums."""

    def __init__(self, variables: Variables, columns: Sequence[int]) -> None:
        ctx = variables.ctx
        self.ring = ctx.ring
        self.hbar = variables.hbar.numer
        self.y = [variables.y(i).numer for i in range(1, variables.v + 1)]
        self.z = [variables.z(c).numer for c in columns]
        self.spin = [variables.spin(c).numer for c in columns]


def _partition_term(gens: _Gens, groups: tuple[tuple[int, ...], ...]) -> MPoly:
    y, z, spin, hbar = gens.y, gens.z, gens.spin, gens.hbar
    term = gens.ring.one
    flips = 0

    for s, group in enumerate(groups):
        for i in group:
            for t in range(s):
                for j in groups[t]:
                    term *= y[i] - y[j] - 2 * hbar
                    flips += j > i
            for a in range(s + 1, len(groups)):
                term *= z[a] - y[i] + spin[a] * hbar
            for a in range(s):
                term *= y[i] - z[a] + spin[a] * hbar
        for i, j in combinations(group, 2):
            term *= y[i] - y[j]

    return -term if flips % 2 else term


def partition_weight(
    variables: Variables,
    columns: Sequence[int],
    counts: Sequence[int],
    threads: int = 1,
) -> MPoly:
    """Weight function as a sum over ordered set partitions of the roots.

    Block ``a`` has ``counts[a]`` roots and is attached to framing column
    ``columns[a]``.
    """

    gens = _Gens(variables, columns)
    partitions = list(ordered_partitions(range(variables.v), counts))
    terms = ordered_map(
        lambda groups: _partition_term(gens, groups), partitions, threads
    )

    total = gens.ring.zero
    for term in terms:
        total += term

    return _divide(total, gens.y, gens.ring.one)


def _framed(framing: Sequence[int]) -> list[int]:
    return [j for j, n in enumerate(framing, start=1) if n]


def _check_framings(first: Sequence[int], second: Sequence[int]) -> None:
    if (
        len(first) != len(second)
        or any(n not in (0, 1) for n in (*first, *second))
        or any(a and b for a, b in zip(first, second))
    ):
        raise e.DimensionError(tuple(first), tuple(second))


def shuffle_product(
    variables: Variables,
    first: m.ShuffleElement,
    second: m.ShuffleElement,
    threads: int = 1,
) -> m.ShuffleElement:
    """Framed shuffle product ``first * second``.

    ``variables`` must hold ``first.v + second.v`` Chern roots.
    """

    _check_framings(first.framing, second.framing)

    ctx = variables.ctx
    v1, v2 = first.v, second.v
    gens = _Gens(variables, range(1, variables.w + 1))
    y, hbar = gens.y, gens.hbar
    ygens = [ctx.pvar(y_name(i)) for i in range(1, v1 + v2 + 1)]

    f = ctx.adopt(first.value)
    g = ctx.adopt(second.value)
    if not (f.denom.is_one and g.denom.is_one):
        raise e.NotPolynomialError()
    f, g = f.numer, g.numer

    framed_first = [j - 1 for j in _framed(first.framing)]
    framed_second = [j - 1 for j in _framed(second.framing)]

    def term(left: tuple[int, ...]) -> MPoly:
        right = [i for i in range(v1 + v2) if i not in left]

        value = f.compose([(ygens[a], y[i]) for a, i in enumerate(left)])
        value *= g.compose([(ygens[b], y[i]) for b, i in enumerate(right)])

        flips = 0
        for t in left:
            for s in right:
                value *= y[s] - y[t] - 2 * hbar
                flips += t > s
        for j in framed_second:
            for a in left:
                value *= gens.z[j] - y[a] + gens.spin[j] * hbar
        for j in framed_first:
            for b in right:
                value *= y[b] - gens.z[j] + gens.spin[j] * hbar
        for block in (left, right):
            for i, k in combinations(block, 2):
                value *= y[i] - y[k]

        return -value if flips % 2 else value

    subsets = list(combinations(range(v1 + v2), v1))
    total = ctx.ring.zero
    for summand in ordered_map(term, subsets, threads):
        total += summand

    product = _divide(total, y, ctx.ring.one)
    framing = tuple(a + b for a, b in zip(first.framing, second.framing))

    return m.ShuffleElement(
        v=v1 + v2,
        framing=framing,
        value=ctx.frac(product),
        symmetric=True,
    )
