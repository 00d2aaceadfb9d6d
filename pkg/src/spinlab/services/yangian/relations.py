from collections.abc import Callable

from spinlab.algebra.context import U, RFunc
from spinlab.algebra.series import residue_at_infinity
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.matrices import OpMatrix
from spinlab.services.yangian.operators import ModuleOperators

Specialization = Callable[[RFunc], RFunc]


class RelationChecker:
    """Checks the defining relations on the blocks of a module.

    An optional specialization is applied to every entry before comparing,
    which turns symbolic identities into exact identities over the rationals.
    """

    def __init__(
        self,
        ops: ModuleOperators,
        specialize: Specialization | None = None,
        trial: int | None = None,
    ) -> None:
        self._ops = ops
        self._ctx = ops.ctx
        self._specialize = specialize
        self._trial = trial
        self._cache: dict[tuple[str, int, int], OpMatrix] = {}
        self._hbar = self._value(ops.variables.hbar)

    def _value(self, value: RFunc) -> RFunc:
        return value if self._specialize is None else self._specialize(value)

    def _block(self, name: str, index: int, v: int) -> OpMatrix:
        key = (name, index, v)
        if key not in self._cache:
            block = getattr(self._ops, name)(index, v)
            if self._specialize is not None:
                block = om.map_entries(block, self._specialize)
            self._cache[key] = block
        return self._cache[key]

    def _e(self, index: int, v: int) -> OpMatrix:
        return self._block("e", index, v)

    def _f(self, index: int, v: int) -> OpMatrix:
        return self._block("f", index, v)

    def _psi(self, index: int, v: int) -> OpMatrix:
        return self._block("psi", index, v)

    def _mul(self, *factors: OpMatrix) -> OpMatrix:
        return om.chain(self._ctx, *factors)

    def _lin(self, *terms: tuple[RFunc | int, OpMatrix]) -> OpMatrix:
        return om.combine(self._ctx, list(terms))

    def _compare(
        self, relation: str, lhs: OpMatrix, rhs: OpMatrix, v: int, indices: tuple
    ) -> list[r.Check]:
        if lhs.empty:
            return []

        subject: dict[str, object] = {"grade": v, "indices": indices}
        if self._trial is not None:
            subject["trial"] = self._trial

        ok = om.equal(lhs, rhs)
        counterexample = None if ok else om.first_difference(lhs, rhs)
        return [r.check(relation, ok, counterexample, **subject)]

    def _cartan(self, v: int, r_max: int) -> list[r.Check]:
        checks = []
        for a in range(r_max + 1):
            for b in range(a + 1, r_max + 1):
                lhs = self._lin(
                    (1, self._mul(self._psi(a, v), self._psi(b, v))),
                    (-1, self._mul(self._psi(b, v), self._psi(a, v))),
                )
                zero = om.zero(self._ctx, lhs.rows, lhs.cols)
                checks += self._compare("Y1", lhs, zero, v, (a, b))
        return checks

    def _weights(self, v: int, r_max: int) -> list[r.Check]:
        checks = []
        for s in range(r_max + 1):
            e = self._e(s, v)
            lhs = self._lin(
                (1, self._mul(self._psi(0, v + 1), e)),
                (-1, self._mul(e, self._psi(0, v))),
            )
            checks += self._compare("Y2-e", lhs, self._lin((2, e)), v, (0, s))

            f = self._f(s, v)
            lhs = self._lin(
                (1, self._mul(self._psi(0, v), f)),
                (-1, self._mul(f, self._psi(0, v + 1))),
            )
            checks += self._compare("Y2-f", lhs, self._lin((-2, f)), v, (0, s))
        return checks

    def _mixed(self, v: int, r_max: int) -> list[r.Check]:
        checks = []
        psi, e, f = self._psi, self._e, self._f
        two_hbar = 2 * self._hbar

        def e_bracket(a: int, b: int) -> OpMatrix:
            return self._lin(
                (1, self._mul(psi(a, v + 1), e(b, v))),
                (-1, self._mul(e(b, v), psi(a, v))),
            )

        def f_bracket(a: int, b: int) -> OpMatrix:
            return self._lin(
                (1, self._mul(psi(a, v), f(b, v))),
                (-1, self._mul(f(b, v), psi(a, v + 1))),
            )

        for a in range(r_max + 1):
            for b in range(r_max + 1):
                lhs = self._lin((1, e_bracket(a + 1, b)), (-1, e_bracket(a, b + 1)))
                rhs = self._lin(
                    (two_hbar, self._mul(psi(a, v + 1), e(b, v))),
                    (two_hbar, self._mul(e(b, v), psi(a, v))),
                )
                checks += self._compare("Y3-e", lhs, rhs, v, (a, b))

                lhs = self._lin((1, f_bracket(a + 1, b)), (-1, f_bracket(a, b + 1)))
                rhs = self._lin(
                    (-two_hbar, self._mul(psi(a, v), f(b, v))),
                    (-two_hbar, self._mul(f(b, v), psi(a, v + 1))),
                )
                checks += self._compare("Y3-f", lhs, rhs, v, (a, b))
        return checks

    def _raising(self, v: int, r_max: int) -> list[r.Check]:
        checks = []
        e, f = self._e, self._f
        two_hbar = 2 * self._hbar

        def ee(a: int, b: int) -> OpMatrix:
            return self._mul(e(a, v + 1), e(b, v))

        def ff(a: int, b: int) -> OpMatrix:
            return self._mul(f(a, v), f(b, v + 1))

        for a in range(r_max + 1):
            for b in range(r_max + 1):
                lhs = self._lin(
                    (1, ee(a + 1, b)), (-1, ee(b, a + 1)),
                    (-1, ee(a, b + 1)), (1, ee(b + 1, a)),
                )
                rhs = self._lin((two_hbar, ee(a, b)), (two_hbar, ee(b, a)))
                checks += self._compare("Y4-e", lhs, rhs, v, (a, b))

                lhs = self._lin(
                    (1, ff(a + 1, b)), (-1, ff(b, a + 1)),
                    (-1, ff(a, b + 1)), (1, ff(b + 1, a)),
                )
                rhs = self._lin((-two_hbar, ff(a, b)), (-two_hbar, ff(b, a)))
                checks += self._compare("Y4-f", lhs, rhs, v, (a, b))
        return checks

    def _brackets(self, v: int, r_max: int) -> list[r.Check]:
        checks = []
        for a in range(r_max + 1):
            for b in range(r_max + 1):
                lhs = self._lin(
                    (1, self._mul(self._e(a, v - 1), self._f(b, v - 1))),
                    (-1, self._mul(self._f(b, v), self._e(a, v))),
                )
                rhs = self._lin((-2 * self._hbar, self._psi(a + b, v)))
                checks += self._compare("Y5", lhs, rhs, v, (a, b))

                basis = self._ops.points(v)
                residues = om.zero(self._ctx, basis, basis)
                entries = [list(row) for row in residues.entries]
                for i, point in enumerate(basis):
                    function = self._ops.u ** (a + b) * self._ops.psi_series(point)
                    entries[i][i] = self._value(
                        residue_at_infinity(self._ctx, function, U)
                    )
                residues = OpMatrix(
                    rows=basis, cols=basis, entries=tuple(map(tuple, entries))
                )
                checks += self._compare("residue-identity", lhs, residues, v, (a, b))
        return checks

    def check(self, v_max: int, r_max: int) -> list[r.Check]:
        """Run every relation on all grades up to ``v_max``."""

        checks = []
        for v in range(min(v_max, self._ops.profile.total) + 1):
            checks += self._cartan(v, r_max)
            checks += self._weights(v, r_max)
            checks += self._mixed(v, r_max)
            checks += self._raising(v, r_max)
            checks += self._brackets(v, r_max)
        return checks
