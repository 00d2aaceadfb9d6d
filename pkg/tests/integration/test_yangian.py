from collections.abc import Iterable

import pytest

from spinlab.algebra.context import RFunc
from spinlab.models.profiles import FixedPoint, SpinProfile
from spinlab.models.reports import Mode
from spinlab.services.yangian import errors as e
from spinlab.services.yangian import models as m
from spinlab.services.yangian.operators import ModuleOperators
from spinlab.services.yangian.service import YangianService
from spinlab.state import State


class DoubledRaising(ModuleOperators):
    """Module with a deliberately wrong zero mode raising operator."""

    def e_entry(
        self,
        point: FixedPoint,
        column: int,
        r: int,
        columns: Iterable[int] | None = None,
    ) -> RFunc:
        value = super().e_entry(point, column, r, columns)
        if columns is None and r == 0:
            return 2 * value
        return value


def test_psi_series_of_vacuum(state: State) -> None:
    """Test if the vacuum series is the framing ratio alone."""

    profile = SpinProfile(ell=(2,))
    value = state.yangian.psi(m.PsiRequest(profile=profile, point=(0,))).value

    ops = ModuleOperators(profile)
    u, z, hbar = ops.u, ops.variables.z(1), ops.variables.hbar

    assert ops.ctx.adopt(value) == (u - z - 2 * hbar) / (u - z + 2 * hbar)


@pytest.mark.parametrize("ell, point, expected", [(2, 0, -2), (2, 1, 0), (3, 3, 3)])
def test_psi_zero_mode(state: State, ell: int, point: int, expected: int) -> None:
    """Test if the zero mode Cartan eigenvalue is 2v - l."""

    req = m.OperatorRequest(
        profile=SpinProfile(ell=(ell,)), generator=m.Generator.PSI, index=0, v=point
    )
    matrix = state.yangian.operator(req).matrix
    entry = matrix.entries[matrix.rows.index((point,))][matrix.rows.index((point,))]

    assert entry == expected * entry.field.one


def test_raising_block_shape(state: State) -> None:
    """Test if a raising block maps grade v to grade v + 1."""

    req = m.OperatorRequest(
        profile=SpinProfile(ell=(1, 2)), generator=m.Generator.E, index=0, v=1
    )
    matrix = state.yangian.operator(req).matrix

    assert matrix.cols == ((1, 0), (0, 1))
    assert matrix.rows == ((1, 1), (0, 2))
    assert not matrix.entries[1][0]


@pytest.mark.parametrize(
    "ell, v_max, r_max", [((1,), 1, 2), ((3,), 3, 1), ((1, 1), 2, 1), ((2, 1), 2, 1)]
)
def test_relations_symbolic(
    state: State, ell: tuple[int, ...], v_max: int, r_max: int
) -> None:
    """Test if the defining relations hold as rational function identities."""

    req = m.RelationsRequest(profile=SpinProfile(ell=ell), v_max=v_max, r_max=r_max)
    report = state.yangian.relations(req).report

    assert report.checks
    assert report.passed, report.failures


def test_relations_reach_top_grade(state: State) -> None:
    """Test if the relations are checked up to the top grade and higher modes."""

    req = m.RelationsRequest(profile=SpinProfile(ell=(2,)), v_max=2, r_max=2)
    report = state.yangian.relations(req).report

    residues = [check for check in report.checks if check.name == "residue-identity"]
    grades = {check.subject["grade"] for check in report.checks}

    assert report.passed, report.failures
    assert grades == {"0", "1", "2"}
    assert {check.subject["indices"] for check in residues} >= {"(0, 2)", "(2, 2)"}


def test_relations_randomized(state: State) -> None:
    """Test if the defining relations hold at random rational points."""

    req = m.RelationsRequest(
        profile=SpinProfile(ell=(1, 1, 1)),
        v_max=2,
        r_max=1,
        mode=Mode.RANDOMIZED,
        seed=7,
        trials=3,
    )
    report = state.yangian.relations(req).report

    assert report.checks
    assert report.passed, report.failures


def test_relations_randomized_deterministic() -> None:
    """Test if a seed fixes the randomized report regardless of threads."""

    req = m.RelationsRequest(
        profile=SpinProfile(ell=(1, 2)),
        v_max=2,
        r_max=1,
        mode=Mode.RANDOMIZED,
        seed=3,
        trials=4,
    )

    serial = YangianService(threads=1).relations(req).report
    pooled = YangianService(threads=4).relations(req).report

    assert serial == pooled


def test_relations_detect_wrong_operator() -> None:
    """Test if a doubled raising operator breaks the commutator relation."""

    service = YangianService(operators=DoubledRaising)
    req = m.RelationsRequest(profile=SpinProfile(ell=(1,)), v_max=1, r_max=1)
    report = service.relations(req).report

    assert not report.passed
    assert report.failures


def test_evaluation(state: State) -> None:
    """Test if a single column agrees with the evaluation module."""

    req = m.EvaluationRequest(profile=SpinProfile(ell=(3,)), k_max=2)
    report = state.yangian.evaluation(req).report

    assert report.checks
    assert report.passed, report.failures


def test_evaluation_single_column(state: State) -> None:
    """Test if the evaluation comparison refuses several columns."""

    with pytest.raises(e.SingleColumnError):
        state.yangian.evaluation(
            m.EvaluationRequest(profile=SpinProfile(ell=(1, 1)))
        )


def test_coproduct(state: State) -> None:
    """Test if generators factorize over the columns."""

    req = m.CoproductRequest(profile=SpinProfile(ell=(1, 2)), v_max=2, r_max=1)
    report = state.yangian.coproduct(req).report

    assert report.checks
    assert report.passed, report.failures


def test_symbolic_spins_rejected(state: State) -> None:
    """Test if module matrices refuse symbolic spins."""

    req = m.RelationsRequest(
        profile=SpinProfile(ell=(1, 1), symbolic=True), v_max=1, r_max=1
    )

    with pytest.raises(e.SymbolicSpinsError):
        state.yangian.relations(req)


def test_psi_invalid_point(state: State) -> None:
    """Test if a point above the spin is rejected."""

    with pytest.raises(e.FixedPointsError):
        state.yangian.psi(m.PsiRequest(profile=SpinProfile(ell=(1,)), point=(2,)))
