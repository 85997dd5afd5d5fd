"""Figure-data bundle: twelve plotter-agnostic data files plus a manifest.

Each of the four plotted initial conditions contributes three figures: one
per coin outcome (entropy against the attainable bound, plus their ratio) and
one comparison figure carrying the one-walker position distribution next to
both branch series.  Rendering is plain CSV with deterministic formatting;
the manifest records what every file contains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .experiment import (
    TimelineRecord,
    asymptotic_ratio,
    canonical_initial_states,
    default_window,
    run_timeline,
    single_walker_distribution,
)
from .measurement import CoinOutcome
from .render import format_number, write_text_atomic
from .states import SUPPORT_EPS, mirror_total_variation

#: preset plotted and the number of its first figure; each preset spans three
_FIGURE_GROUPS = (("4a", 1), ("4b", 4), ("4c", 7), ("4e", 10))

OUTCOME_COLUMNS = ("step", "entropy", "max_entropy", "ratio")
COMPARISON_COLUMNS = (
    "step",
    "entropy0",
    "entropy1",
    "ratio0",
    "ratio1",
    "position",
    "probability",
)

MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True)
class FigureFile:
    name: str
    text: str
    manifest_entry: dict


def _figure_name(number: int) -> str:
    return f"fig{number:02d}.csv"


def _ratio_or_none(
    timeline: list[TimelineRecord], outcome: CoinOutcome, window: int
) -> float | None:
    try:
        return asymptotic_ratio(timeline, outcome, window)
    except ValueError:
        return None


def _outcome_csv(timeline: list[TimelineRecord], outcome: CoinOutcome) -> str:
    lines = [",".join(OUTCOME_COLUMNS)]
    for record in timeline:
        entropy = record.entropy0 if outcome is CoinOutcome.C0 else record.entropy1
        ratio = record.ratio0 if outcome is CoinOutcome.C0 else record.ratio1
        lines.append(
            ",".join(
                (
                    str(record.step),
                    format_number(entropy),
                    format_number(record.max_entropy),
                    format_number(ratio),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _comparison_csv(
    timeline: list[TimelineRecord], distribution: dict[int, float]
) -> str:
    positions = sorted(x for x, p in distribution.items() if p > SUPPORT_EPS)
    lines = [",".join(COMPARISON_COLUMNS)]
    for i in range(max(len(timeline), len(positions))):
        record = timeline[i] if i < len(timeline) else None
        position = positions[i] if i < len(positions) else None
        lines.append(
            ",".join(
                (
                    str(record.step) if record else "",
                    format_number(record.entropy0) if record else "",
                    format_number(record.entropy1) if record else "",
                    format_number(record.ratio0) if record else "",
                    format_number(record.ratio1) if record else "",
                    str(position) if position is not None else "",
                    format_number(distribution[position])
                    if position is not None
                    else "",
                )
            )
        )
    return "\n".join(lines) + "\n"


def build_figure_bundle(
    steps: int = 1000, window: int | None = None
) -> tuple[list[FigureFile], dict]:
    """Render all twelve figure files and the manifest, in memory."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    window = default_window(steps) if window is None else window
    if not 1 <= window <= steps:
        raise ValueError(f"window must be within 1..{steps}, got {window}")
    configs = canonical_initial_states(steps=steps)
    files: list[FigureFile] = []
    for preset, first in _FIGURE_GROUPS:
        config = configs[preset]
        timeline = run_timeline(config)
        distribution = single_walker_distribution(config.coin_init, steps)
        ratios = {
            str(outcome): _ratio_or_none(timeline, outcome, window)
            for outcome in CoinOutcome
        }
        coin = {
            "re0": config.coin_init.amp0.real,
            "im0": config.coin_init.amp0.imag,
            "re1": config.coin_init.amp1.real,
            "im1": config.coin_init.amp1.imag,
        }
        for offset, outcome in ((0, CoinOutcome.C0), (1, CoinOutcome.C1)):
            number = first + offset
            files.append(
                FigureFile(
                    name=_figure_name(number),
                    text=_outcome_csv(timeline, outcome),
                    manifest_entry={
                        "figure": number,
                        "preset": preset,
                        "coin": coin,
                        "outcome": str(outcome),
                        "columns": list(OUTCOME_COLUMNS),
                        "panels": {
                            "i": "branch entanglement entropy and attainable bound vs step",
                            "ii": "entanglement ratio vs step",
                        },
                        "asymptotic_ratio": ratios[str(outcome)],
                    },
                )
            )
        number = first + 2
        mean = sum(x * p for x, p in distribution.items()) / steps
        files.append(
            FigureFile(
                name=_figure_name(number),
                text=_comparison_csv(timeline, distribution),
                manifest_entry={
                    "figure": number,
                    "preset": preset,
                    "coin": coin,
                    "outcome": None,
                    "columns": list(COMPARISON_COLUMNS),
                    "panels": {
                        "i": "one-walker position distribution at the final step",
                        "ii": "both branch entropy and ratio series vs step",
                    },
                    "asymptotic_ratio": ratios,
                    "single_walker": {
                        "mean_position_over_t": mean,
                        "mirror_distance": mirror_total_variation(distribution),
                    },
                },
            )
        )
    manifest = {
        "steps": steps,
        "window": window,
        "files": {f.name: f.manifest_entry for f in files},
    }
    return files, manifest


def write_figure_bundle(
    out_dir: Path, steps: int = 1000, window: int | None = None
) -> tuple[dict, list[tuple[str, str]]]:
    """Write the bundle into ``out_dir``; returns (manifest, per-file failures)."""
    files, manifest = build_figure_bundle(steps=steps, window=window)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    failures: list[tuple[str, str]] = []
    for figure_file in files:
        try:
            write_text_atomic(out_dir / figure_file.name, figure_file.text)
        except OSError as exc:
            failures.append((figure_file.name, str(exc)))
    try:
        write_text_atomic(
            out_dir / MANIFEST_NAME,
            json.dumps(manifest, indent=2, sort_keys=True) + "\n",
        )
    except OSError as exc:
        failures.append((MANIFEST_NAME, str(exc)))
    return manifest, failures
