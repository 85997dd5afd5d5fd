"""End-to-end driver: evolve, measure at every step count, quantify.

The walk is deterministic and measurement-free up to any chosen step count,
so one trajectory snapshotted at t = 1..n stands in for n identically
prepared runs, and both coin outcomes are evaluated exactly from each
snapshot (no sampling anywhere).  Alongside the two-walker timelines this
module computes the one-walker distribution diagnostics that the ratio
convergence correlates with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .entanglement import max_entanglement, schmidt_spectrum, von_neumann_entropy
from .evolution import CoinOperator, evolve_single, hadamard, step
from .measurement import PROB_EPS, CoinOutcome, post_measurement, outcome_probabilities
from .states import (
    CoinSpinor,
    mean_position,
    mirror_distance,
    new_correlated_state,
    new_single_state,
    position_distribution,
)

PRESET_NAMES = ("4a", "4b", "4c", "4d", "4e")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce one walk-and-measure timeline."""

    coin_init: CoinSpinor
    steps: int = 1000
    start_position: int = 0
    coin_operator: CoinOperator = field(default_factory=hadamard)

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        self.coin_init.require_normalized()


@dataclass(frozen=True)
class TimelineRecord:
    """Per-step measurement summary.

    Entropies and ratios are None when the corresponding branch is absent;
    the ratio is also None at t = 1 where the attainable bound is zero.
    ``support0``/``support1`` count the Schmidt coefficients retained for each
    branch, so both the log2(t) bound and the actual-support bound are
    inspectable downstream.
    """

    step: int
    p0: float
    p1: float
    entropy0: float | None
    entropy1: float | None
    max_entropy: float
    ratio0: float | None
    ratio1: float | None
    support0: int | None
    support1: int | None


@dataclass(frozen=True)
class SymmetryReport:
    """Balance diagnostics of the one-walker walk for a given initial coin."""

    mean_position_over_t: float
    mirror_distance: float


def run_timeline(config: ExperimentConfig) -> list[TimelineRecord]:
    """Records for t = 1..steps, each computed from the t-step snapshot."""
    state = new_correlated_state(config.coin_init, config.start_position)
    records = []
    for _ in range(config.steps):
        state = step(state, config.coin_operator)
        records.append(_record(state))
    return records


def _record(snapshot) -> TimelineRecord:
    t = snapshot.step
    p0, p1 = outcome_probabilities(snapshot)
    bound = max_entanglement(t)
    entropies: dict[CoinOutcome, float | None] = {}
    ratios: dict[CoinOutcome, float | None] = {}
    supports: dict[CoinOutcome, int | None] = {}
    for outcome, weight in ((CoinOutcome.C0, p0), (CoinOutcome.C1, p1)):
        if weight > PROB_EPS:
            spectrum = schmidt_spectrum(post_measurement(snapshot, outcome))
            entropy = von_neumann_entropy(spectrum)
            entropies[outcome] = entropy
            ratios[outcome] = entropy / bound if bound > 0.0 else None
            supports[outcome] = len(spectrum)
        else:
            entropies[outcome] = None
            ratios[outcome] = None
            supports[outcome] = None
    return TimelineRecord(
        step=t,
        p0=p0,
        p1=p1,
        entropy0=entropies[CoinOutcome.C0],
        entropy1=entropies[CoinOutcome.C1],
        max_entropy=bound,
        ratio0=ratios[CoinOutcome.C0],
        ratio1=ratios[CoinOutcome.C1],
        support0=supports[CoinOutcome.C0],
        support1=supports[CoinOutcome.C1],
    )


def default_window(steps: int) -> int:
    """Averaging window used when none is given: the last 10% of the run."""
    return max(1, steps // 10)


def asymptotic_ratio(
    timeline: list[TimelineRecord], outcome: CoinOutcome, window: int
) -> float:
    """Mean entanglement ratio of one outcome over the last ``window`` records."""
    if window < 1 or window > len(timeline):
        raise ValueError(
            f"window must be within 1..{len(timeline)}, got {window}"
        )
    tail = timeline[-window:]
    ratios = [
        record.ratio0 if outcome is CoinOutcome.C0 else record.ratio1
        for record in tail
    ]
    if any(r is None for r in ratios):
        raise ValueError(f"ratio for {outcome} is absent within the window")
    return sum(ratios) / len(ratios)


def canonical_initial_states(steps: int = 1000) -> dict[str, ExperimentConfig]:
    """The five built-in initial conditions, keyed by preset name.

    All place both walkers at the origin and differ only in the coin state.
    """
    s = math.sqrt(0.5)
    coins = {
        "4a": CoinSpinor(1.0 + 0j, 0j),
        "4b": CoinSpinor(0j, 1.0 + 0j),
        "4c": CoinSpinor(complex(s, 0.0), complex(0.0, s)),
        "4d": CoinSpinor(complex(0.0, s), complex(s, 0.0)),
        "4e": CoinSpinor(
            complex(math.sqrt(0.85), 0.0), complex(-math.sqrt(0.15), 0.0)
        ),
    }
    return {
        name: ExperimentConfig(coin_init=coin, steps=steps)
        for name, coin in coins.items()
    }


def symmetry_report(coin_init: CoinSpinor, steps: int) -> SymmetryReport:
    """Balance diagnostics of the ``steps``-step one-walker Hadamard walk."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    final = evolve_single(new_single_state(coin_init, 0), hadamard(), steps)[-1]
    return SymmetryReport(
        mean_position_over_t=mean_position(final) / steps,
        mirror_distance=mirror_distance(final),
    )


def single_walker_distribution(coin_init: CoinSpinor, steps: int) -> dict[int, float]:
    """Position distribution of the ``steps``-step one-walker Hadamard walk."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    final = evolve_single(new_single_state(coin_init, 0), hadamard(), steps)[-1]
    return position_distribution(final)
