"""Matrices of the Yangian generators on the fixed point basis.

Blocks are indexed by the grade they act on and stored as ``M[target, source]``.
The raising operators are residues of a rational function at the addible
boxes, the lowering operators evaluations at the removed box, and the Cartan
currents the expansion at infinity of the eigenvalue series.
"""

import logging
from collections.abc import Iterable

from spinlab.algebra.context import U, RFunc
from spinlab.algebra.matrices import freeze
from spinlab.algebra.series import laurent_at_infinity, residue_simple_pole
from spinlab.algebra.variables import Variables
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import FixedPoint, SpinProfile
from spinlab.services.fixedpoints.service import points, root

logger = logging.getLogger(__name__)

_Block = tuple[str, int, int]


class ModuleOperators:
    """Generators acting on the module of one spin profile."""

    def __init__(self, profile: SpinProfile) -> None:
        self.profile = profile
        self.variables = Variables(profile.ell, 0, False, extra=(U,))
        self.ctx = self.variables.ctx
        self._points: dict[int, tuple[FixedPoint, ...]] = {}
        self._blocks: dict[_Block, OpMatrix] = {}

    @property
    def u(self) -> RFunc:
        return self.variables.aux(U)

    def points(self, v: int) -> tuple[FixedPoint, ...]:
        """Basis of a grade."""

        if v not in self._points:
            self._points[v] = tuple(points(self.profile.ell, v))
        return self._points[v]

    def boxes(
        self, point: FixedPoint, columns: Iterable[int] | None = None
    ) -> list[RFunc]:
        """Weights of the boxes of a fixed point, optionally in some columns."""

        columns = range(1, self.profile.w + 1) if columns is None else columns
        return [
            root(self.variables, j, k) for j in columns for k in range(point[j - 1])
        ]

    def box(self, point: FixedPoint, column: int) -> RFunc:
        """Weight of the box that would be added on top of ``column``."""

        return root(self.variables, column, point[column - 1])

    def framing(self, at: RFunc, columns: Iterable[int] | None = None) -> RFunc:
        """Product of ``(at - z_j - l_j hbar) / (at - z_j + l_j hbar)``."""

        v = self.variables
        columns = range(1, self.profile.w + 1) if columns is None else columns
        result = self.ctx.one
        for j in columns:
            shift = v.spin(j) * v.hbar
            result *= (at - v.z(j) - shift) / (at - v.z(j) + shift)
        return result

    def psi_series(
        self, point: FixedPoint, columns: Iterable[int] | None = None
    ) -> RFunc:
        """Eigenvalue of the Cartan current on a fixed point, as a function of u."""

        columns = list(range(1, self.profile.w + 1) if columns is None else columns)
        u, hbar = self.u, self.variables.hbar
        result = self.framing(u, columns)
        for x in self.boxes(point, columns):
            result *= (u - x + 2 * hbar) / (u - x - 2 * hbar)
        return result

    def e_entry(
        self,
        point: FixedPoint,
        column: int,
        r: int,
        columns: Iterable[int] | None = None,
    ) -> RFunc:
        """Coefficient of ``point + box`` in ``e_r`` applied to ``point``."""

        columns = list(range(1, self.profile.w + 1) if columns is None else columns)
        u, hbar = self.u, self.variables.hbar
        function = u**r * self.framing(u, columns)
        for x in self.boxes(point, columns):
            function *= (u - x) / (u - x - 2 * hbar)
        return residue_simple_pole(self.ctx, function, U, self.box(point, column))

    def f_entry(
        self,
        point: FixedPoint,
        column: int,
        m: int,
        columns: Iterable[int] | None = None,
    ) -> RFunc:
        """Coefficient of ``point`` in ``f_m`` applied to ``point + box``."""

        hbar = self.variables.hbar
        added = self.box(point, column)
        result = added**m
        for x in self.boxes(point, columns):
            result *= (added - x + 2 * hbar) / (added - x)
        return result

    def e_prefactor(self, point: FixedPoint, column: int) -> RFunc:
        """Factor of the other columns in the tensor form of ``e``."""

        hbar = self.variables.hbar
        added = self.box(point, column)
        others = [j for j in range(1, self.profile.w + 1) if j != column]
        result = self.framing(added, others)
        for x in self.boxes(point, others):
            result *= (added - x) / (added - x - 2 * hbar)
        return result

    def f_prefactor(self, point: FixedPoint, column: int) -> RFunc:
        """Factor of the other columns in the tensor form of ``f``."""

        hbar = self.variables.hbar
        added = self.box(point, column)
        others = [j for j in range(1, self.profile.w + 1) if j != column]
        result = self.ctx.one
        for x in self.boxes(point, others):
            result *= (added - x + 2 * hbar) / (added - x)
        return result

    def _raised(self, point: FixedPoint, column: int) -> FixedPoint:
        return tuple(c + (j == column) for j, c in enumerate(point, start=1))

    def addible(self, point: FixedPoint) -> list[int]:
        """Columns where a box can be added."""

        return [
            j
            for j, (c, spin) in enumerate(zip(point, self.profile.ell), start=1)
            if c < spin
        ]

    def e(self, r: int, v: int) -> OpMatrix:
        """Block of ``e_r`` from grade ``v`` to ``v + 1``."""

        key = ("e", r, v)
        if key not in self._blocks:
            sources, targets = self.points(v), self.points(v + 1)
            entries = [[self.ctx.zero] * len(sources) for _ in targets]
            for s, point in enumerate(sources):
                for column in self.addible(point):
                    t = targets.index(self._raised(point, column))
                    entries[t][s] = self.e_entry(point, column, r)
            self._blocks[key] = OpMatrix(
                rows=targets, cols=sources, entries=freeze(entries)
            )
            logger.debug("Built e_%d on grade %d.", r, v)
        return self._blocks[key]

    def f(self, m: int, v: int) -> OpMatrix:
        """Block of ``f_m`` from grade ``v + 1`` to ``v``."""

        key = ("f", m, v)
        if key not in self._blocks:
            targets, sources = self.points(v), self.points(v + 1)
            entries = [[self.ctx.zero] * len(sources) for _ in targets]
            for t, point in enumerate(targets):
                for column in self.addible(point):
                    s = sources.index(self._raised(point, column))
                    entries[t][s] = self.f_entry(point, column, m)
            self._blocks[key] = OpMatrix(
                rows=targets, cols=sources, entries=freeze(entries)
            )
            logger.debug("Built f_%d on grade %d.", m, v)
        return self._blocks[key]

    def psi_value(self, point: FixedPoint, r: int) -> RFunc:
        """Eigenvalue of ``psi_r`` on a fixed point."""

        series = laurent_at_infinity(self.ctx, self.psi_series(point), U, r + 1)
        return series[r + 1] / (2 * self.variables.hbar)

    def psi(self, r: int, v: int) -> OpMatrix:
        """Diagonal block of ``psi_r`` on grade ``v``."""

        key = ("psi", r, v)
        if key not in self._blocks:
            basis = self.points(v)
            entries = [[self.ctx.zero] * len(basis) for _ in basis]
            for i, point in enumerate(basis):
                entries[i][i] = self.psi_value(point, r)
            self._blocks[key] = OpMatrix(
                rows=basis, cols=basis, entries=freeze(entries)
            )
        return self._blocks[key]
