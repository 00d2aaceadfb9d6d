import logging
from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path

from spinlab.algebra.forms import from_json, to_latex, to_text
from spinlab.models import reports as r
from spinlab.services.artifacts import errors as e
from spinlab.services.artifacts import models as m
from spinlab.services.artifacts.serializer import Serializer

logger = logging.getLogger(__name__)


def _label(label: list[int]) -> str:
    return "(" + ",".join(str(x) for x in label) + ")"


class ArtifactsService:
    """Service for rendering, comparing and storing artifacts."""

    def __init__(self) -> None:
        self._serializer = Serializer(m.Artifact)

    @contextmanager
    def _handle_errors(self, path: Path) -> Generator[None, None, None]:
        try:
            yield
        except OSError as ex:
            raise e.StorageError(path, ex.strerror or str(ex)) from ex

    def _golden(self, artifact: m.Artifact, directory: Path) -> Path:
        return directory / f"{artifact.name}.json"

    def render(self, request: m.RenderRequest) -> m.RenderResponse:
        """Render an artifact in the requested format."""

        artifact = request.artifact

        match request.format:
            case m.Format.JSON:
                text = self._serializer.json(artifact)
            case m.Format.LATEX:
                text = _latex(artifact)
            case m.Format.ASCII:
                text = _ascii(artifact)

        return m.RenderResponse(
            text=text,
        )

    def compare(self, request: m.CompareRequest) -> m.CompareResponse:
        """Compare an artifact with its golden file byte by byte."""

        path = self._golden(request.artifact, request.directory)
        actual = self._serializer.json(request.artifact)

        if not path.exists():
            check = r.check("golden", False, "missing golden file", file=path.name)
        else:
            with self._handle_errors(path):
                expected = path.read_text(encoding="utf-8")
            counterexample = None
            if expected != actual:
                old = self._serializer.parse(expected)
                counterexample = _difference(old, request.artifact)
            check = r.check(
                "golden", expected == actual, counterexample, file=path.name
            )

        logger.debug("Compared %s with %s: %s.", path.name, path.parent, check.status.value)

        return m.CompareResponse(
            check=check,
        )

    def store(self, request: m.StoreRequest) -> m.StoreResponse:
        """Write an artifact as its golden file."""

        path = self._golden(request.artifact, request.directory)

        with self._handle_errors(path):
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self._serializer.json(request.artifact), encoding="utf-8")

        logger.info("Stored golden file %s.", path)

        return m.StoreResponse(
            path=path,
        )


def _difference(old: m.Artifact, new: m.Artifact) -> str:
    for field in ("subject", "values", "matrices", "states", "reports"):
        if getattr(old, field) != getattr(new, field):
            return f"{field} differ"
    return "formatting differs"


def _text(value: m.Value) -> str:
    return to_text(from_json(value.model_dump(by_alias=True)))


def _tex(value: m.Value) -> str:
    return to_latex(from_json(value.model_dump(by_alias=True)))


def _ascii(artifact: m.Artifact) -> str:
    lines = [f"# {artifact.name}"]
    lines.extend(f"{key}: {value}" for key, value in artifact.subject.items())

    for entry in artifact.values:
        lines.append(f"{entry.label} = {_text(entry.value)}")

    for matrix in artifact.matrices:
        lines.append(f"{matrix.label}:")
        for row, entries in zip(matrix.rows, matrix.entries):
            cells = ", ".join(_text(x) for x in entries)
            lines.append(f"  {_label(row)}: [{cells}]")

    for i, state in enumerate(artifact.states, start=1):
        lines.append(f"state {i}:")
        if state.drawing is not None:
            lines.append(state.drawing)
        if state.weight is not None:
            lines.append(f"weight = {_text(state.weight)}")

    for report in artifact.reports:
        verdict = "passed" if report.passed else "FAILED"
        lines.append(f"{report.suite}: {len(report.checks)} checks, {verdict}")
        for check in report.failures:
            subject = ", ".join(f"{k}={v}" for k, v in check.subject.items())
            lines.append(f"  {check.name} [{subject}]: {check.counterexample}")

    return "\n".join(lines) + "\n"


def _latex(artifact: m.Artifact) -> str:
    subject = ", ".join(f"{key}={value}" for key, value in artifact.subject.items())
    lines = [f"% {artifact.name} ({subject})"]

    for entry in artifact.values:
        lines.append(f"\\[ {entry.label} = {_tex(entry.value)} \\]")

    for matrix in artifact.matrices:
        rows = " \\\\\n".join(
            " & ".join(_tex(x) for x in entries) for entries in matrix.entries
        )
        lines.append(
            f"\\[ {matrix.label} = \\begin{{pmatrix}}\n{rows}\n\\end{{pmatrix}} \\]"
        )

    for state in artifact.states:
        if state.drawing is not None:
            lines.append(f"\\begin{{verbatim}}\n{state.drawing}\n\\end{{verbatim}}")
        if state.weight is not None:
            lines.append(f"\\[ {_tex(state.weight)} \\]")

    for report in artifact.reports:
        verdict = "passed" if report.passed else "failed"
        lines.append(f"% {report.suite}: {len(report.checks)} checks, {verdict}")

    return "\n".join(lines) + "\n"
