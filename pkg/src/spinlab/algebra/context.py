"""Variable tables and the exact rings built on top of them.

Every computation runs inside a :class:`Context`: a polynomial ring and its
field of fractions over the rationals, in a fixed, ordered list of variables
with graded-lexicographic monomial order. Values are plain :mod:`sympy`
ring and field elements, which are immutable and safe to share between
threads.
"""

from fractions import Fraction
from functools import cache
from typing import Union

import sympy
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import GeneratorsError
from sympy.polys.rings import PolyElement

from spinlab.algebra import errors as e
from spinlab.models.base import datamodel

MPoly = PolyElement
RFunc = FracElement
Scalar = Union[int, Fraction]

HBAR = "hbar"
U = "u"
X = "x"
Z = "z"


def z_name(j: int) -> str:
    """Name of the equivariant parameter of framing column ``j``."""

    return f"z_{j}"


def y_name(i: int) -> str:
    """Name of the ``i``-th Chern root variable."""

    return f"y_{i}"


def l_name(j: int) -> str:
    """Name of the symbolic spin of framing column ``j``."""

    return f"l_{j}"


def to_qq(value: Scalar):
    """Convert a Python rational to the ground domain."""

    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


@datamodel
class VarTable:
    """Ordered list of variable names."""

    names: tuple[str, ...]
    """Names in monomial order, most significant first."""

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("Variable table must not be empty.")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Variable names must be unique: {self.names}.")


class Context:
    """Polynomial ring and rational function field over a variable table."""

    def __init__(self, table: VarTable) -> None:
        self.table = table
        self.field = FracField(sympy.symbols(table.names), QQ, grlex)
        self.ring = self.field.ring
        self._indices = {name: i for i, name in enumerate(table.names)}

    @property
    def names(self) -> tuple[str, ...]:
        """Variable names of the context."""

        return self.table.names

    def has(self, name: str) -> bool:
        """Check whether a variable belongs to the context."""

        return name in self._indices

    def index(self, name: str) -> int:
        """Position of a variable in the table."""

        try:
            return self._indices[name]
        except KeyError as ex:
            raise e.ContextMismatchError([name]) from ex

    def pvar(self, name: str) -> MPoly:
        """Variable as a polynomial."""

        return self.ring.gens[self.index(name)]

    def var(self, name: str) -> RFunc:
        """Variable as a rational function."""

        return self.field.gens[self.index(name)]

    def const(self, value: Scalar) -> RFunc:
        """Constant rational function."""

        return self.field.ground_new(to_qq(value))

    @property
    def zero(self) -> RFunc:
        return self.field.zero

    @property
    def one(self) -> RFunc:
        return self.field.one

    def frac(self, poly: MPoly) -> RFunc:
        """Embed a polynomial into the field."""

        return self.field.new(self.adopt_poly(poly))

    def fraction(self, num: MPoly, den: MPoly) -> RFunc:
        """Reduced fraction ``num / den`` with a sign-normalized denominator."""

        if not den:
            raise e.DivisionByZeroError()

        return self.field.new(self.adopt_poly(num), self.adopt_poly(den))

    def adopt_poly(self, poly: MPoly) -> MPoly:
        """Move a polynomial from another context into this one."""

        if poly.ring == self.ring:
            return poly

        try:
            return poly.set_ring(self.ring)
        except GeneratorsError as ex:
            raise e.ContextMismatchError(variables(poly) - set(self.names)) from ex

    def adopt(self, value: RFunc) -> RFunc:
        """Move a rational function from another context into this one."""

        if value.field == self.field:
            return value

        return self.fraction(value.numer, value.denom)


def variables(value: MPoly | RFunc) -> set[str]:
    """Names of the variables a value actually depends on."""

    if isinstance(value, FracElement):
        return variables(value.numer) | variables(value.denom)

    symbols = value.ring.symbols
    used = set()
    for monom in value.itermonoms():
        used.update(str(symbols[i]) for i, power in enumerate(monom) if power)
    return used


@cache
def context(names: tuple[str, ...]) -> Context:
    """Shared context for a variable table."""

    return Context(VarTable(names=names))
