from pathlib import Path

import pytest

from spinlab.algebra.variables import Variables
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.reports import Mode
from spinlab.services.artifacts import convert
from spinlab.services.artifacts import errors as e
from spinlab.services.artifacts import models as m
from spinlab.services.artifacts.serializer import Serializer
from spinlab.state import State


@pytest.fixture
def artifact() -> m.Artifact:
    """Small document with every kind of content."""

    variables = Variables((1, 2), 1)
    weight = variables.z(2) - variables.y(1) + 2 * variables.hbar
    unit = om.identity(variables.ctx, ((1, 0), (0, 1)))
    report = r.Report(suite="example", checks=[r.check("unit", True)])

    return m.Artifact(
        name="example",
        subject=convert.subject(ell=(1, 2), mode=Mode.SYMBOLIC),
        values=[convert.entry("W", weight)],
        matrices=[convert.matrix("R", unit)],
        reports=[report],
    )


def test_subject_strings(artifact: m.Artifact) -> None:
    """Test if parameters are stored as plain strings."""

    assert artifact.subject == {"ell": "1,2", "mode": "symbolic"}


def test_render_json(state: State, artifact: m.Artifact) -> None:
    """Test if JSON output carries the schema version and parses back."""

    text = state.artifacts.render(m.RenderRequest(artifact=artifact)).text

    assert '"schema": "v1"' in text
    assert text.endswith("\n")
    assert Serializer(m.Artifact).parse(text) == artifact


def test_render_latex(state: State, artifact: m.Artifact) -> None:
    """Test if LaTeX output typesets values and matrices."""

    req = m.RenderRequest(artifact=artifact, format=m.Format.LATEX)
    text = state.artifacts.render(req).text

    assert text.startswith("% example")
    assert "\\begin{pmatrix}" in text
    assert "\\[ W = " in text


def test_render_ascii(state: State, artifact: m.Artifact) -> None:
    """Test if plain text output lists values, matrix rows and report verdicts."""

    req = m.RenderRequest(artifact=artifact, format=m.Format.ASCII)
    lines = state.artifacts.render(req).text.splitlines()

    assert lines[0] == "# example"
    assert "ell: 1,2" in lines
    assert any(line.startswith("W = ") for line in lines)
    assert "  (1,0): [1, 0]" in lines
    assert "example: 1 checks, passed" in lines


def test_compare_missing(state: State, artifact: m.Artifact, tmp_path: Path) -> None:
    """Test if a missing golden file fails the comparison."""

    req = m.CompareRequest(artifact=artifact, directory=tmp_path)
    check = state.artifacts.compare(req).check

    assert check.status == r.CheckStatus.FAILED
    assert check.counterexample == "missing golden file"


def test_store_and_compare(
    state: State, artifact: m.Artifact, tmp_path: Path
) -> None:
    """Test if a stored golden file matches and a changed document does not."""

    directory = tmp_path / "golden"
    path = state.artifacts.store(
        m.StoreRequest(artifact=artifact, directory=directory)
    ).path

    assert path == directory / "example.json"

    req = m.CompareRequest(artifact=artifact, directory=directory)
    assert state.artifacts.compare(req).check.status == r.CheckStatus.PASSED

    changed = artifact.model_copy(update={"subject": {"ell": "2,1"}})
    check = state.artifacts.compare(
        m.CompareRequest(artifact=changed, directory=directory)
    ).check

    assert check.status == r.CheckStatus.FAILED
    assert check.counterexample == "subject differ"


def test_store_into_file(state: State, artifact: m.Artifact, tmp_path: Path) -> None:
    """Test if an unusable golden directory raises a storage error."""

    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")

    with pytest.raises(e.StorageError):
        state.artifacts.store(m.StoreRequest(artifact=artifact, directory=blocker))


def test_parse_invalid() -> None:
    """Test if a document without a name is rejected."""

    with pytest.raises(e.SerializationError):
        Serializer(m.Artifact).parse('{"schema": "v1"}')
