"""Self-checks behind the ``verify`` CLI command.

Each check compares the fast sparse engine against closed-form values or one
of the independent oracles and reports the worst error it measured, so a
corrupted engine shows up as a concrete number rather than a silent drift.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import evolution
from .entanglement import schmidt_spectrum, von_neumann_entropy
from .experiment import ExperimentConfig, canonical_initial_states, run_timeline
from .measurement import PROB_EPS, CoinOutcome, outcome_probabilities, post_measurement
from .oracle import dense_evolve, path_sum_table, reduced_entropy
from .states import CoinSpinor, new_correlated_state, norm, parity_ok, position_distribution

DEFAULT_SEED = 20100901

#: most path-sum comparisons are affordable only up to this depth
PATH_SUM_DEPTH_CAP = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.max_error) and self.max_error <= self.tolerance


def random_coin_states(count: int, seed: int = DEFAULT_SEED) -> list[CoinSpinor]:
    """Deterministic normalized coin states for oracle sweeps."""
    rng = random.Random(seed)
    coins = []
    while len(coins) < count:
        parts = [rng.gauss(0.0, 1.0) for _ in range(4)]
        scale = math.sqrt(sum(p * p for p in parts))
        if scale < 1e-6:
            continue
        coins.append(
            CoinSpinor(
                complex(parts[0], parts[1]) / scale,
                complex(parts[2], parts[3]) / scale,
            )
        )
    return coins


def _engine_amplitude_tables(
    coin: CoinSpinor, t_max: int
) -> list[dict[tuple[int, int], complex]]:
    """Element t holds the engine's {(site, coin index): amplitude} map at step t."""
    state = new_correlated_state(coin, 0)
    tables = [{(x, c): pair[c] for x, pair in state.amps.items() for c in (0, 1)}]
    coin_op = evolution.hadamard()
    for _ in range(t_max):
        state = evolution.step(state, coin_op)
        tables.append(
            {(x, c): pair[c] for x, pair in state.amps.items() for c in (0, 1)}
        )
    return tables


def _table_difference(
    left: dict[tuple[int, int], complex], right: dict[tuple[int, int], complex]
) -> float:
    keys = set(left) | set(right)
    return max(abs(left.get(k, 0j) - right.get(k, 0j)) for k in keys)


def _check_three_step_amplitudes() -> CheckResult:
    s = math.sqrt(0.5)
    q = 0.5
    e = s / 2.0
    expected = {
        1: {(1, 0): s, (-1, 1): s},
        2: {(2, 0): q, (0, 0): q, (0, 1): q, (-2, 1): -q},
        3: {(3, 0): e, (1, 0): 2 * e, (-1, 0): -e, (1, 1): e, (-3, 1): e},
    }
    coin = canonical_initial_states(steps=3)["4a"].coin_init
    tables = _engine_amplitude_tables(coin, 3)
    worst = max(
        _table_difference(tables[t], {k: complex(v) for k, v in exp.items()})
        for t, exp in expected.items()
    )
    return CheckResult("three-step amplitudes vs closed form", worst, 1e-12)


def _check_three_step_entropies() -> list[CheckResult]:
    timeline = run_timeline(canonical_initial_states(steps=3)["4a"])
    by_step = {record.step: record for record in timeline}
    checks = [
        CheckResult(
            "branch entropies t=1 (product states)",
            max(abs(by_step[1].entropy0), abs(by_step[1].entropy1)),
            1e-9,
        ),
        CheckResult(
            "branch entropies t=2 (maximally entangled)",
            max(abs(by_step[2].entropy0 - 1.0), abs(by_step[2].entropy1 - 1.0)),
            1e-9,
        ),
        CheckResult(
            "branch entropy t=3 coin-0",
            abs(by_step[3].entropy0 - 1.2516),
            5e-5,
        ),
        CheckResult(
            "branch entropy t=3 coin-1",
            abs(by_step[3].entropy1 - 1.0),
            1e-9,
        ),
        CheckResult(
            "attainable bound at t=2 and t=3",
            max(
                abs(by_step[2].max_entropy - 1.0),
                abs(by_step[3].max_entropy - 1.585),
            ),
            5e-4,
        ),
    ]
    return checks


def _check_long_run_invariants(steps: int = 1000) -> list[CheckResult]:
    config = canonical_initial_states(steps=steps)["4a"]
    state = new_correlated_state(config.coin_init, config.start_position)
    coin_op = config.coin_operator
    worst_drift = 0.0
    parity_violations = 0
    for _ in range(steps):
        state = evolution.step(state, coin_op)
        worst_drift = max(worst_drift, abs(norm(state) - 1.0))
        if not parity_ok(state):
            parity_violations += 1
    completeness = abs(sum(position_distribution(state).values()) - 1.0)
    return [
        CheckResult(
            f"norm drift over {steps} steps", worst_drift, 1e-12
        ),
        CheckResult(
            f"parity violations over {steps} steps", float(parity_violations), 0.0
        ),
        CheckResult(
            f"distribution completeness at t={steps}", completeness, 1e-12
        ),
    ]


def _check_dense_equivalence(coins: list[CoinSpinor], t_max: int) -> CheckResult:
    radius = t_max
    worst = 0.0
    for coin in coins:
        config = ExperimentConfig(coin_init=coin, steps=max(1, t_max))
        tables = _engine_amplitude_tables(coin, t_max)
        state = new_correlated_state(coin, 0)
        for t in range(1, t_max + 1):
            state = evolution.step(state, config.coin_operator)
            dense = dense_evolve(config, t, radius)
            for x in range(-t, t + 1):
                for c in (0, 1):
                    diff = abs(
                        tables[t].get((x, c), 0j) - dense.amplitude(c, x, x)
                    )
                    worst = max(worst, diff)
            p0, p1 = outcome_probabilities(state)
            worst = max(
                worst,
                abs(p0 - dense.branch_probability(CoinOutcome.C0)),
                abs(p1 - dense.branch_probability(CoinOutcome.C1)),
            )
            for outcome, weight in ((CoinOutcome.C0, p0), (CoinOutcome.C1, p1)):
                if weight > PROB_EPS:
                    fast = von_neumann_entropy(
                        schmidt_spectrum(post_measurement(state, outcome))
                    )
                    worst = max(worst, abs(fast - reduced_entropy(dense, outcome)))
    return CheckResult(
        f"sparse path vs dense oracle, t <= {t_max}", worst, 1e-10
    )


def _check_path_sum_equivalence(coins: list[CoinSpinor], t_max: int) -> CheckResult:
    worst = 0.0
    for coin in coins:
        tables = _engine_amplitude_tables(coin, t_max)
        for t in range(1, t_max + 1):
            worst = max(
                worst, _table_difference(tables[t], path_sum_table(coin, t))
            )
    return CheckResult(
        f"sparse path vs path-sum oracle, t <= {t_max}", worst, 1e-12
    )


def run_checks(
    max_step: int = 10, random_states: int = 5, seed: int = DEFAULT_SEED
) -> list[CheckResult]:
    """Full verification sweep; oracle comparisons go up to ``max_step``."""
    if max_step < 3:
        raise ValueError("max_step must be at least 3 to cover the worked fixtures")
    coins = [
        config.coin_init
        for config in canonical_initial_states(steps=max(1, max_step)).values()
    ]
    coins.extend(random_coin_states(random_states, seed))
    checks = [_check_three_step_amplitudes()]
    checks.extend(_check_three_step_entropies())
    checks.extend(_check_long_run_invariants())
    checks.append(_check_dense_equivalence(coins, max_step))
    checks.append(
        _check_path_sum_equivalence(coins, min(max_step, PATH_SUM_DEPTH_CAP))
    )
    return checks
