"""Command-line interface: run one walk, emit the figure bundle, verify."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import click

from .experiment import (
    ExperimentConfig,
    PRESET_NAMES,
    TimelineRecord,
    asymptotic_ratio,
    canonical_initial_states,
    default_window,
    run_timeline,
)
from .evolution import CoinOperator, hadamard
from .figures import write_figure_bundle
from .measurement import CoinOutcome
from .render import render_timeline_csv, write_text_atomic
from .states import CoinSpinor
from .verification import DEFAULT_SEED, run_checks

_COIN_OPERATORS: dict[str, CoinOperator] = {"hadamard": hadamard()}

_SPEC_FIELDS = (
    "re0",
    "im0",
    "re1",
    "im1",
    "start",
    "steps",
    "coin_operator",
    "output",
    "format",
)


@dataclass(frozen=True)
class RunSpec:
    """File-borne description of one run; flat reals, no complex literals."""

    re0: float
    im0: float
    re1: float
    im1: float
    start: int = 0
    steps: int = 1000
    coin_operator: str = "hadamard"
    output: str | None = None
    format: str = "csv"

    def coin(self) -> CoinSpinor:
        return CoinSpinor(complex(self.re0, self.im0), complex(self.re1, self.im1))

    def to_config(self) -> ExperimentConfig:
        operator = _COIN_OPERATORS.get(self.coin_operator)
        if operator is None:
            raise ValueError(
                f"unknown coin operator {self.coin_operator!r}; "
                f"known: {sorted(_COIN_OPERATORS)}"
            )
        return ExperimentConfig(
            coin_init=self.coin(),
            steps=self.steps,
            start_position=self.start,
            coin_operator=operator,
        )


def parse_run_spec(path: Path) -> RunSpec:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read run spec {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError(f"run spec {path} must be a JSON object")
    unknown = sorted(set(payload) - set(_SPEC_FIELDS))
    if unknown:
        raise ValueError(f"run spec {path} has unknown fields: {unknown}")
    missing = [k for k in ("re0", "im0", "re1", "im1") if k not in payload]
    if missing:
        raise ValueError(f"run spec {path} is missing coin fields: {missing}")
    try:
        return RunSpec(**payload)
    except TypeError as exc:
        raise ValueError(f"run spec {path} is malformed: {exc}") from exc


def write_run_spec(spec: RunSpec, path: Path) -> None:
    write_text_atomic(
        Path(path), json.dumps(asdict(spec), indent=2, sort_keys=True) + "\n"
    )


def _record_dict(record: TimelineRecord) -> dict:
    return {
        "step": record.step,
        "p0": record.p0,
        "p1": record.p1,
        "entropy0": record.entropy0,
        "entropy1": record.entropy1,
        "max_entropy": record.max_entropy,
        "ratio0": record.ratio0,
        "ratio1": record.ratio1,
        "support0": record.support0,
        "support1": record.support1,
    }


def _summary(
    preset: str | None,
    spec: RunSpec,
    timeline: list[TimelineRecord],
    window: int,
) -> dict:
    ratios = {}
    for outcome in CoinOutcome:
        try:
            ratios[str(outcome)] = asymptotic_ratio(timeline, outcome, window)
        except ValueError:
            ratios[str(outcome)] = None
    return {
        "preset": preset,
        "coin": {
            "re0": spec.re0,
            "im0": spec.im0,
            "re1": spec.re1,
            "im1": spec.im1,
        },
        "start": spec.start,
        "steps": spec.steps,
        "coin_operator": spec.coin_operator,
        "window": window,
        "asymptotic_ratio": ratios,
    }


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


@click.group()
@click.version_option(package_name="twinwalk", prog_name="twinwalk")
def main() -> None:
    """Two correlated walkers, one coin: entanglement timelines per outcome."""


@main.command()
@click.option(
    "--preset",
    type=click.Choice(PRESET_NAMES),
    default=None,
    help="Built-in initial coin state.",
)
@click.option(
    "--coin",
    type=float,
    nargs=4,
    default=None,
    metavar="RE0 IM0 RE1 IM1",
    help="Explicit coin amplitudes as flat real/imaginary pairs.",
)
@click.option(
    "--spec",
    "spec_path",
    type=click.Path(path_type=Path),
    default=None,
    help="JSON run spec file (written by --save-spec).",
)
@click.option("--start", type=int, default=None, help="Start position  [default: 0]")
@click.option("--steps", type=int, default=None, help="Step count  [default: 1000]")
@click.option(
    "--coin-op",
    type=click.Choice(sorted(_COIN_OPERATORS)),
    default=None,
    help="Coin operator  [default: hadamard]",
)
@click.option(
    "--window",
    type=int,
    default=None,
    help="Averaging window for asymptotic ratios  [default: last 10% of steps]",
)
@click.option(
    "--out",
    type=click.Path(path_type=Path),
    default=None,
    help="Timeline output file  [default: stdout]",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["csv", "json"]),
    default=None,
    help="Timeline format  [default: csv]",
)
@click.option(
    "--summary-out",
    type=click.Path(path_type=Path),
    default=None,
    help="Also write the summary block to this file.",
)
@click.option(
    "--save-spec",
    type=click.Path(path_type=Path),
    default=None,
    help="Write the fully resolved run spec to this file.",
)
def run(
    preset: str | None,
    coin: tuple[float, float, float, float] | None,
    spec_path: Path | None,
    start: int | None,
    steps: int | None,
    coin_op: str | None,
    window: int | None,
    out: Path | None,
    output_format: str | None,
    summary_out: Path | None,
    save_spec: Path | None,
) -> None:
    """Evolve, measure at every step count, and write the timeline."""
    given = [name for name, value in
             (("--preset", preset), ("--coin", coin), ("--spec", spec_path))
             if value]
    if len(given) != 1:
        raise click.UsageError(
            f"provide exactly one of --preset, --coin or --spec (got {given or 'none'})"
        )
    try:
        if spec_path is not None:
            base = parse_run_spec(spec_path)
        elif preset is not None:
            coin_state = canonical_initial_states(steps=1)[preset].coin_init
            base = RunSpec(
                re0=coin_state.amp0.real,
                im0=coin_state.amp0.imag,
                re1=coin_state.amp1.real,
                im1=coin_state.amp1.imag,
            )
        else:
            base = RunSpec(re0=coin[0], im0=coin[1], re1=coin[2], im1=coin[3])
        spec = RunSpec(
            re0=base.re0,
            im0=base.im0,
            re1=base.re1,
            im1=base.im1,
            start=start if start is not None else base.start,
            steps=steps if steps is not None else base.steps,
            coin_operator=coin_op if coin_op is not None else base.coin_operator,
            output=str(out) if out is not None else base.output,
            format=output_format if output_format is not None else base.format,
        )
        config = spec.to_config()
        resolved_window = window if window is not None else default_window(spec.steps)
        if not 1 <= resolved_window <= spec.steps:
            raise ValueError(
                f"window must be within 1..{spec.steps}, got {resolved_window}"
            )
        timeline = run_timeline(config)
        summary = _summary(preset, spec, timeline, resolved_window)
        if save_spec is not None:
            write_run_spec(spec, save_spec)
        destination = Path(spec.output) if spec.output else None
        if spec.format == "json":
            document = _dump(
                {
                    "spec": asdict(spec),
                    "summary": summary,
                    "timeline": [_record_dict(r) for r in timeline],
                }
            ) + "\n"
            if destination is None:
                click.echo(document, nl=False)
            else:
                write_text_atomic(destination, document)
                click.echo(_dump(summary))
        else:
            text = render_timeline_csv(timeline)
            if destination is None:
                click.echo(text, nl=False)
                click.echo("")
                click.echo(_dump(summary))
            else:
                write_text_atomic(destination, text)
                click.echo(_dump(summary))
        if summary_out is not None:
            write_text_atomic(summary_out, _dump(summary) + "\n")
    except (ValueError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


@main.command()
@click.option(
    "--out-dir",
    type=click.Path(path_type=Path),
    required=True,
    help="Directory for the twelve figure files and the manifest.",
)
@click.option("--steps", type=int, default=1000, show_default=True)
@click.option(
    "--window",
    type=int,
    default=None,
    help="Averaging window for manifest ratios  [default: last 10% of steps]",
)
def figures(out_dir: Path, steps: int, window: int | None) -> None:
    """Write replot-ready data for every figure, plus a manifest."""
    try:
        manifest, failures = write_figure_bundle(out_dir, steps=steps, window=window)
    except (ValueError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc
    for name, message in failures:
        click.echo(f"error writing {name}: {message}", err=True)
    if failures:
        raise SystemExit(1)
    click.echo(f"wrote {len(manifest['files'])} data files and manifest to {out_dir}")


@main.command()
@click.option(
    "--depth",
    type=int,
    default=10,
    show_default=True,
    help="Max step count for oracle comparisons (path sum capped at 12).",
)
@click.option("--random-states", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
def verify(depth: int, random_states: int, seed: int) -> None:
    """Check the engine against closed-form fixtures and both oracles."""
    try:
        checks = run_checks(max_step=depth, random_states=random_states, seed=seed)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    width = max(len(check.name) for check in checks)
    failures = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        click.echo(
            f"{status}  {check.name:<{width}}  "
            f"max_error={check.max_error:.3e}  tol={check.tolerance:.1e}"
        )
        failures += 0 if check.passed else 1
    click.echo(f"{len(checks) - failures}/{len(checks)} checks passed")
    if failures:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
