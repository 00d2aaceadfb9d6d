from pathlib import Path

import pytest

from spinlab.app import AppBuilder
from spinlab.config.builder import ConfigBuilder
from spinlab.models.profiles import SpinProfile
from spinlab.models.reports import Mode
from spinlab.services.artifacts import models as am
from spinlab.services.verify import errors as e
from spinlab.services.verify import models as m
from spinlab.state import State


def _small(suite: m.Suite, **kwargs) -> m.VerifyRequest:
    return m.VerifyRequest(
        suite=suite,
        profile=SpinProfile(ell=(1, 1)),
        v_max=1,
        r_max=1,
        sites=2,
        **kwargs,
    )


def test_all_suites(state: State) -> None:
    """Test if every suite except the braid check runs and passes for two columns."""

    res = state.verify.verify(_small(m.Suite.ALL))

    assert [report.suite for report in res.reports] == [
        "yangian",
        "properties",
        "lattice",
        "sixvertex",
    ]
    assert res.passed


def test_braid_suite_for_three_columns(state: State) -> None:
    """Test if the braid suite runs for three columns."""

    req = m.VerifyRequest(
        suite=m.Suite.BRAID, profile=SpinProfile(ell=(1, 1, 1)), v_max=1
    )
    res = state.verify.verify(req)

    assert [report.suite for report in res.reports] == ["braid"]
    assert res.passed


def test_braid_suite_for_two_columns(state: State) -> None:
    """Test if the braid suite refuses two columns."""

    with pytest.raises(e.SuiteError):
        state.verify.verify(_small(m.Suite.BRAID))


def test_randomized_is_deterministic() -> None:
    """Test if randomized reports do not depend on the number of threads."""

    texts = []
    for threads in (1, 2, 8):
        config = ConfigBuilder({"compute": {"threads": threads}}).build()
        state = AppBuilder(config).build()
        req = m.VerifyRequest(
            suite=m.Suite.YANGIAN,
            profile=SpinProfile(ell=(1, 2)),
            v_max=2,
            r_max=1,
            mode=Mode.RANDOMIZED,
            seed=11,
            trials=3,
        )
        report = state.verify.verify(req).reports[0]
        artifact = state.verify.artifact(req, report)
        texts.append(state.artifacts.render(am.RenderRequest(artifact=artifact)).text)

    assert texts[0] == texts[1] == texts[2]


def test_artifact_name(state: State) -> None:
    """Test if documents are named after the suite, the spins and the grade."""

    req = _small(m.Suite.LATTICE)
    report = state.verify.verify(req).reports[0]
    artifact = state.verify.artifact(req, report)

    assert artifact.name == "lattice-l1-1-v1"
    assert artifact.subject["mode"] == "symbolic"


def test_golden_roundtrip(state: State, tmp_path: Path) -> None:
    """Test if stored golden reports match a second run."""

    stored = state.verify.verify(
        _small(m.Suite.LATTICE, golden=tmp_path, update_golden=True)
    )

    assert [report.suite for report in stored.reports] == ["lattice"]
    assert (tmp_path / "lattice-l1-1-v1.json").exists()

    compared = state.verify.verify(_small(m.Suite.LATTICE, golden=tmp_path))

    assert [report.suite for report in compared.reports] == ["lattice", "golden"]
    assert compared.passed


def test_golden_missing(state: State, tmp_path: Path) -> None:
    """Test if a run without golden files fails the golden report."""

    res = state.verify.verify(_small(m.Suite.LATTICE, golden=tmp_path))

    assert res.reports[-1].suite == "golden"
    assert not res.passed
