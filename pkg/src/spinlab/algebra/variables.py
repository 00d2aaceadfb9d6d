from collections.abc import Sequence

from spinlab.algebra.context import (
    HBAR,
    Z,
    Context,
    RFunc,
    context,
    l_name,
    y_name,
    z_name,
)
from spinlab.algebra.functions import substitute


class Variables:
    """Named variables of one computation over a spin profile.

    The table holds hbar, the framing parameters ``z_j``, the symbolic spins
    ``l_j`` when requested, the Chern roots ``y_1..y_v`` and any auxiliary
    names, in that order.
    """

    def __init__(
        self,
        spins: Sequence[int],
        v: int = 0,
        symbolic: bool = False,
        extra: Sequence[str] = (),
    ) -> None:
        self.spins = tuple(spins)
        self.v = v
        self.symbolic = symbolic

        w = len(self.spins)
        names = [HBAR]
        names.extend(z_name(j) for j in range(1, w + 1))
        if symbolic:
            names.extend(l_name(j) for j in range(1, w + 1))
        names.extend(y_name(i) for i in range(1, v + 1))
        names.extend(extra)

        self.ctx: Context = context(tuple(names))

    @property
    def w(self) -> int:
        return len(self.spins)

    @property
    def hbar(self) -> RFunc:
        return self.ctx.var(HBAR)

    def z(self, j: int) -> RFunc:
        """Framing parameter of column ``j`` (1-based)."""

        return self.ctx.var(z_name(j))

    def y(self, i: int) -> RFunc:
        """Chern root variable ``i`` (1-based)."""

        return self.ctx.var(y_name(i))

    def spin(self, j: int) -> RFunc:
        """Spin of column ``j``, a variable when the spins are symbolic."""

        if self.symbolic:
            return self.ctx.var(l_name(j))
        return self.ctx.const(self.spins[j - 1])

    def aux(self, name: str) -> RFunc:
        return self.ctx.var(name)

    def const(self, value: int) -> RFunc:
        return self.ctx.const(value)

    def falling(self, value: RFunc, k: int) -> RFunc:
        """Falling factorial ``value (value - 1) ... (value - k + 1)``."""

        result = self.ctx.one
        for i in range(k):
            result *= value - i
        return result


def pair_context(symbolic: bool = False) -> Context:
    """Context of two-column results written in ``z = z_1 - z_2``."""

    names = (HBAR, Z, l_name(1), l_name(2)) if symbolic else (HBAR, Z)
    return context(names)


def specialize_pair(value: RFunc, symbolic: bool = False) -> RFunc:
    """Rewrite a two-column value in ``z`` by sending ``z_2 -> 0, z_1 -> z``."""

    names = tuple(str(symbol) for symbol in value.field.symbols)
    wide = context(names if Z in names else (*names, Z))
    bindings = {z_name(1): wide.var(Z), z_name(2): 0}
    value = substitute(wide, wide.adopt(value), bindings)
    return pair_context(symbolic).adopt(value)


def chain_context(v: int, extra: Sequence[str] = ()) -> Context:
    """Context of hbar, the row parameters ``y_1..y_v`` and auxiliary names."""

    return context((HBAR, *(y_name(i) for i in range(1, v + 1)), *extra))
