from collections.abc import Callable, Generator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any

import typer
from rich.console import Console

from spinlab import parsing
from spinlab.algebra.context import RFunc
from spinlab.app import AppBuilder
from spinlab.cli import CliBuilder
from spinlab.config.builder import ConfigBuilder
from spinlab.config.errors import ConfigError
from spinlab.console import FallbackConsoleBuilder
from spinlab.logs import LoggingBuilder
from spinlab.models import matrices as om
from spinlab.models import reports as r
from spinlab.models.matrices import OpMatrix
from spinlab.models.profiles import FixedPoint, SpinProfile, identity
from spinlab.models.reports import Mode
from spinlab.services.artifacts import convert
from spinlab.services.artifacts import errors as ae
from spinlab.services.artifacts import models as am
from spinlab.services.fixedpoints import errors as fe
from spinlab.services.fixedpoints import models as fm
from spinlab.services.lattice import errors as le
from spinlab.services.lattice import models as lm
from spinlab.services.rmatrix import errors as rme
from spinlab.services.rmatrix import models as rm
from spinlab.services.sixvertex import errors as se
from spinlab.services.verify import errors as ve
from spinlab.services.verify import models as vm
from spinlab.services.weights import errors as we
from spinlab.services.weights import models as wm
from spinlab.services.yangian import errors as ye
from spinlab.state import State

cli = CliBuilder().build()

SERVICE_ERRORS = (
    ae.ServiceError,
    fe.ServiceError,
    le.ServiceError,
    rme.ServiceError,
    se.ServiceError,
    ve.ServiceError,
    we.ServiceError,
    ye.ServiceError,
)

Ell = Annotated[str, typer.Option("--ell", help="Spins of the columns, e.g. 2,3.")]
Grade = Annotated[int, typer.Option("--v", min=0, help="Grade.")]
Symbolic = Annotated[
    bool, typer.Option("--symbolic", help="Keep the spins as variables in weights.")
]
Threads = Annotated[int | None, typer.Option("--threads", min=1, help="Threads.")]
OutputFormat = Annotated[
    am.Format | None, typer.Option("--format", help="Output format.")
]
Output = Annotated[Path | None, typer.Option("--output", help="Artifact file.")]
Debug = Annotated[bool, typer.Option("--debug", help="Debug logging.")]


def _overrides(
    threads: int | None,
    format: am.Format | None,
    output: Path | None,
    debug: bool,
    **verify: Any,
) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    if threads is not None:
        overrides["compute"] = {"threads": threads}
    output_section = {"format": format, "path": output}
    output_section = {k: x for k, x in output_section.items() if x is not None}
    if output_section:
        overrides["output"] = output_section
    verify = {k: x for k, x in verify.items() if x is not None}
    if verify:
        overrides["verify"] = verify
    if debug:
        overrides["debug"] = True
    return overrides


def _setup(console: Console, overrides: dict[str, Any]) -> State:
    try:
        config = ConfigBuilder(overrides).build()
    except ConfigError as ex:
        console.print("Invalid configuration!")
        console.print(str(ex), markup=False)
        raise typer.Exit(2) from ex

    LoggingBuilder(config).build()
    return AppBuilder(config).build()


@contextmanager
def _guard(console: Console) -> Generator[None, None, None]:
    try:
        yield
    except (typer.Exit, typer.BadParameter):
        raise
    except SERVICE_ERRORS as ex:
        console.print(str(ex), markup=False)
        raise typer.Exit(2) from ex
    except Exception as ex:
        console.print("Unexpected error!")
        console.print_exception()
        raise typer.Exit(3) from ex


def _emit(state: State, artifact: am.Artifact) -> None:
    fmt = state.config.output.format
    text = state.artifacts.render(am.RenderRequest(artifact=artifact, format=fmt)).text
    path = state.config.output.path

    if path is None:
        typer.echo(text, nl=False)
        return

    try:
        path.write_text(text, encoding="utf-8")
    except OSError as ex:
        raise ae.StorageError(path, ex.strerror or str(ex)) from ex


def _finish(reports: list[r.Report]) -> None:
    if not all(report.passed for report in reports):
        raise typer.Exit(1)


def _name(prefix: str, profile: SpinProfile, v: int) -> str:
    return f"{prefix}-l{'-'.join(str(spin) for spin in profile.ell)}-v{v}"


def _square(
    points: list[FixedPoint],
    value: Callable[[FixedPoint, FixedPoint], RFunc],
    label: str,
) -> am.Matrix:
    entries = tuple(tuple(value(at, point) for point in points) for at in points)
    labels = tuple(points)
    return convert.matrix(label, OpMatrix(rows=labels, cols=labels, entries=entries))


@cli.command()
def weights(
    ell: Ell,
    v: Grade,
    sigma: Annotated[str, typer.Option(help="Chamber, e.g. id or 2,1.")] = "id",
    restrict: Annotated[
        bool, typer.Option("--restrict", help="Emit the restriction matrix.")
    ] = False,
    stable: Annotated[
        bool, typer.Option("--stable", help="Emit the stable envelope candidates.")
    ] = False,
    method: Annotated[
        wm.Method, typer.Option(help="How weight functions are built.")
    ] = wm.Method.PARTITIONS,
    symbolic: Symbolic = False,
    threads: Threads = None,
    format: OutputFormat = None,
    output: Output = None,
    debug: Debug = False,
) -> None:
    """Emit weight functions and their restrictions."""

    console = FallbackConsoleBuilder().build()
    profile = SpinProfile(ell=parsing.spins(ell), symbolic=symbolic)
    chamber = parsing.permutation(sigma, profile.w)
    state = _setup(console, _overrides(threads, format, output, debug))

    with _guard(console):
        req = fm.EnumerateRequest(profile=profile, v=v)
        points = state.fixedpoints.enumerate(req).points

        values = []
        for point in points:
            req = wm.WeightRequest(
                profile=profile, sigma=chamber, point=point, method=method
            )
            value = state.weights.weight(req).value
            values.append(convert.entry(f"W{list(chamber)}{list(point)}", value))

        matrices = []
        if restrict:
            req = wm.MatrixRequest(profile=profile, sigma=chamber, v=v)
            matrix = state.weights.matrix(req).matrix
            matrices.append(convert.matrix("restriction", matrix))
        if stable:

            def candidate(at: FixedPoint, point: FixedPoint) -> RFunc:
                req = wm.StableRequest(
                    profile=profile, sigma=chamber, point=point, at=at
                )
                return state.weights.stable(req).value

            matrices.append(_square(points, candidate, "stable"))

        artifact = am.Artifact(
            name=_name("weights", profile, v),
            subject=convert.subject(
                ell=profile.ell, v=v, sigma=chamber, symbolic=symbolic
            ),
            values=values,
            matrices=matrices,
        )
        _emit(state, artifact)


@cli.command()
def rmatrix(
    ell: Ell,
    v: Grade,
    target: Annotated[str, typer.Option(help="Chamber that is inverted.")] = "id",
    source: Annotated[str, typer.Option(help="Chamber that is multiplied.")] = "rev",
    symbolic: Symbolic = False,
    threads: Threads = None,
    format: OutputFormat = None,
    output: Output = None,
    debug: Debug = False,
) -> None:
    """Emit the R-matrix between two chambers."""

    console = FallbackConsoleBuilder().build()
    profile = SpinProfile(ell=parsing.spins(ell), symbolic=symbolic)
    first = parsing.permutation(target, profile.w)
    second = parsing.permutation(source, profile.w)
    state = _setup(console, _overrides(threads, format, output, debug))

    with _guard(console):
        pair = profile.w == 2
        req = rm.RMatrixRequest(
            profile=profile, target=first, source=second, v=v, specialize=pair
        )
        matrix = state.rmatrix.r_matrix(req).matrix

        reports = []
        if pair and first == identity(2) and second == (2, 1) and v <= min(profile.ell):
            req = rm.ClosedFormRequest(
                ell=(profile.ell[0], profile.ell[1]), v=v, symbolic=symbolic
            )
            closed = state.rmatrix.closed_form(req).matrix
            check = r.check(
                "closed-form",
                om.equal(matrix, closed),
                om.first_difference(matrix, closed),
                ell=profile.ell,
                v=v,
            )
            reports.append(r.Report(suite="rmatrix", checks=[check]))

        artifact = am.Artifact(
            name=_name("rmatrix", profile, v),
            subject=convert.subject(
                ell=profile.ell, v=v, target=first, source=second, symbolic=symbolic
            ),
            matrices=[convert.matrix("R", matrix)],
            reports=reports,
        )
        _emit(state, artifact)

    _finish(reports)


@cli.command()
def lattice(
    ell: Ell,
    v: Grade,
    boundary: Annotated[
        str | None, typer.Option(help="North boundary, all boundaries when unset.")
    ] = None,
    dump_states: Annotated[
        bool, typer.Option("--dump-states", help="Emit every state with its weight.")
    ] = False,
    theorem: Annotated[
        bool, typer.Option("--theorem", help="Compare with weight functions.")
    ] = False,
    symbolic: Symbolic = False,
    threads: Threads = None,
    format: OutputFormat = None,
    output: Output = None,
    debug: Debug = False,
) -> None:
    """Emit lattice states and partition functions."""

    console = FallbackConsoleBuilder().build()
    profile = SpinProfile(ell=parsing.spins(ell), symbolic=symbolic)
    chosen = None if boundary is None else parsing.point(boundary)
    state = _setup(console, _overrides(threads, format, output, debug))

    with _guard(console):
        if chosen is None:
            req = fm.EnumerateRequest(profile=profile, v=v)
            boundaries = state.fixedpoints.enumerate(req).points
        else:
            boundaries = [chosen]

        values, states = [], []
        for north in boundaries:
            req = lm.PartitionRequest(profile=profile, v=v, boundary=north)
            value = state.lattice.partition(req).value
            values.append(convert.entry(f"Z{list(north)}", value))

            if dump_states:
                req = lm.StatesRequest(profile=profile, v=v, boundary=north)
                for s in state.lattice.states(req).states:
                    req = lm.WeightRequest(profile=profile, state=s)
                    weight = state.lattice.weight(req).value
                    drawing = state.lattice.render(lm.RenderRequest(state=s)).text
                    states.append(convert.state(s, weight, drawing))

        reports = []
        if theorem:
            req = lm.TheoremRequest(profile=profile, v=v)
            reports.append(state.lattice.theorem(req).report)

        artifact = am.Artifact(
            name=_name("lattice", profile, v),
            subject=convert.subject(ell=profile.ell, v=v, symbolic=symbolic),
            values=values,
            states=states,
            reports=reports,
        )
        _emit(state, artifact)

    _finish(reports)


@cli.command()
def verify(
    suite: Annotated[vm.Suite, typer.Argument(help="Suite to run.")],
    ell: Ell,
    vmax: Annotated[int, typer.Option("--vmax", min=0, help="Largest grade.")],
    rmax: Annotated[
        int, typer.Option("--rmax", min=0, help="Largest generator index.")
    ] = 2,
    sites: Annotated[
        int, typer.Option("--sites", min=1, help="Largest six-vertex chain.")
    ] = 4,
    mode: Annotated[Mode | None, typer.Option(help="Identity testing mode.")] = None,
    seed: Annotated[int | None, typer.Option(min=0, help="Random seed.")] = None,
    trials: Annotated[int | None, typer.Option(min=1, help="Random trials.")] = None,
    bound: Annotated[int | None, typer.Option(min=1, help="Random bound.")] = None,
    golden_dir: Annotated[
        Path | None, typer.Option("--golden-dir", help="Golden files directory.")
    ] = None,
    update_golden: Annotated[
        bool, typer.Option("--update-golden", help="Rewrite the golden files.")
    ] = False,
    symbolic: Symbolic = False,
    threads: Threads = None,
    format: OutputFormat = None,
    output: Output = None,
    debug: Debug = False,
) -> None:
    """Run verification suites, exit with 1 when a check fails."""

    console = FallbackConsoleBuilder().build()
    profile = SpinProfile(ell=parsing.spins(ell), symbolic=symbolic)
    overrides = _overrides(
        threads, format, output, debug, mode=mode, seed=seed, trials=trials, bound=bound
    )
    if golden_dir is not None:
        overrides["spinlab_golden_dir"] = golden_dir
    state = _setup(console, overrides)
    config = state.config

    golden = config.golden_directory
    if update_golden and golden is None:
        raise typer.BadParameter("Updating golden files needs a directory.")

    with _guard(console):
        req = vm.VerifyRequest(
            suite=suite,
            profile=profile,
            v_max=vmax,
            r_max=rmax,
            sites=sites,
            mode=config.verify.mode,
            seed=config.verify.seed,
            trials=config.verify.trials,
            bound=config.verify.bound,
            golden=golden,
            update_golden=update_golden,
        )
        reports = state.verify.verify(req).reports

        artifact = am.Artifact(
            name=_name(f"verify-{suite.value}", profile, vmax),
            subject=convert.subject(
                suite=suite, ell=profile.ell, v_max=vmax, mode=config.verify.mode
            ),
            reports=reports,
        )
        _emit(state, artifact)

    _finish(reports)


if __name__ == "__main__":
    cli()
