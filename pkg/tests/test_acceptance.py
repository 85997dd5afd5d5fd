"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one pass/fail line (visible with ``pytest -s``).  One
criterion, the per-outcome equivalence of the balanced-coin runs with the
basis-coin runs, is kept exactly as stated even though the engine
demonstrates it cannot hold, so that test is expected to stay red; its
failure message carries the measured values and the reason.
"""

import json
import math
import time
from contextlib import contextmanager

import pytest
from click.testing import CliRunner

from twinwalk import (
    CoinOutcome,
    ExperimentConfig,
    asymptotic_ratio,
    canonical_initial_states,
    evolve,
    hadamard,
    new_correlated_state,
    norm,
    parity_ok,
    position_distribution,
    run_timeline,
    single_walker_distribution,
    support,
)
from twinwalk.cli import main
from twinwalk.oracle import dense_evolve, path_sum_table, reduced_entropy
from twinwalk.states import mirror_total_variation
from twinwalk.verification import random_coin_states
from twinwalk import outcome_probabilities, post_measurement, schmidt_spectrum, step
from twinwalk import von_neumann_entropy
from testutil import evolve_tables, max_table_diff

S = math.sqrt(0.5)
E3 = S / 2

#: converged window means measured by this engine (steps=1000, window=100);
#: pinned as regression numbers at 1e-9 reproducibility
PINNED_RATIOS = {
    "4a": (0.7818324753612543, 0.8835346169626962),
    "4b": (0.8835346169626963, 0.7818324753612544),
    "4c": (0.8545661832851483, 0.8545661832851481),
    "4d": (0.8545661832851483, 0.8545661832851481),
    "4e": (0.8353197660947448, 0.8337625902219312),
}


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"acceptance {label}: FAIL")
        raise
    print(f"acceptance {label}: PASS")


@pytest.fixture(scope="module")
def full_scale():
    """1000-step timelines for all five presets, with per-run wall time."""
    out = {}
    for name, config in canonical_initial_states(steps=1000).items():
        started = time.perf_counter()
        timeline = run_timeline(config)
        out[name] = (timeline, time.perf_counter() - started)
    return out


def ratios(timeline, window=100):
    return (
        asymptotic_ratio(timeline, CoinOutcome.C0, window),
        asymptotic_ratio(timeline, CoinOutcome.C1, window),
    )


def test_criterion_1_analytic_fixtures():
    with criterion("1 (analytic three-step fixtures)"):
        started = time.perf_counter()
        expected = {
            1: {(1, 0): S, (-1, 1): S},
            2: {(2, 0): 0.5, (0, 0): 0.5, (0, 1): 0.5, (-2, 1): -0.5},
            3: {
                (3, 0): E3,
                (1, 0): 2 * E3,
                (-1, 0): -E3,
                (1, 1): E3,
                (-3, 1): E3,
            },
        }
        config = canonical_initial_states(steps=3)["4a"]
        tables = evolve_tables(config.coin_init, 3)
        for t, table in expected.items():
            diff = max_table_diff(tables[t], {k: complex(v) for k, v in table.items()})
            assert diff < 1e-12, f"t={t} amplitude mismatch {diff}"

        timeline = run_timeline(config)
        t1, t2, t3 = timeline
        assert abs(t1.entropy0) < 1e-9 and abs(t1.entropy1) < 1e-9
        assert abs(t2.entropy0 - 1.0) < 1e-9 and abs(t2.entropy1 - 1.0) < 1e-9
        assert t3.entropy0 == pytest.approx(1.2516, abs=5e-5)
        assert t3.entropy1 == pytest.approx(1.0, abs=1e-9)
        assert t2.max_entropy == pytest.approx(1.0, abs=1e-12)
        assert t3.max_entropy == pytest.approx(1.585, abs=5e-4)
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"fixtures took {elapsed:.3f} s"


def test_criterion_2_figure_scale_ratios(full_scale):
    with criterion("2 (1000-step runs, window means vs published readings)"):
        for name, (_, elapsed) in full_scale.items():
            assert elapsed < 10.0, f"{name} took {elapsed:.2f} s"

        measured = {name: ratios(tl) for name, (tl, _) in full_scale.items()}
        assert measured["4a"][0] == pytest.approx(0.80, abs=0.05)
        assert measured["4a"][1] == pytest.approx(0.90, abs=0.05)
        assert measured["4b"][0] == pytest.approx(0.90, abs=0.05)
        assert measured["4b"][1] == pytest.approx(0.80, abs=0.05)
        assert abs(measured["4e"][0] - measured["4e"][1]) < 0.02
        assert measured["4e"][0] == pytest.approx(0.85, abs=0.05)
        assert measured["4e"][1] == pytest.approx(0.85, abs=0.05)

        for name, pinned in PINNED_RATIOS.items():
            assert measured[name][0] == pytest.approx(pinned[0], abs=1e-9)
            assert measured[name][1] == pytest.approx(pinned[1], abs=1e-9)


def test_criterion_2_initial_condition_equivalence(full_scale):
    """Recorded expectation: 4c matches 4a and 4d matches 4b per outcome.

    The engine demonstrates this cannot hold: 4c and 4d are mirror-symmetric
    initial coins, so their two outcome branches carry identical entropy at
    every step (ratio0 = ratio1 = 0.8546), which cannot coincide with the
    outcome-split values of 4a/4b (0.7818 / 0.8835).  Kept as stated; this
    test failing is the honest outcome.
    """
    with criterion("2 (per-outcome equivalence 4c=4a and 4d=4b)"):
        measured = {name: ratios(tl) for name, (tl, _) in full_scale.items()}
        for balanced, basis in (("4c", "4a"), ("4d", "4b")):
            for idx, outcome in enumerate(("c0", "c1")):
                gap = abs(measured[balanced][idx] - measured[basis][idx])
                assert gap < 0.02, (
                    f"{balanced} {outcome} window mean {measured[balanced][idx]:.4f} "
                    f"vs {basis} {outcome} {measured[basis][idx]:.4f}: gap {gap:.4f}; "
                    "a mirror-symmetric coin forces ratio0 = ratio1, so its runs "
                    "cannot match an outcome-split pair"
                )


def test_criterion_3_oracle_equivalence():
    with criterion("3 (dense and path-sum oracle equivalence)"):
        started = time.perf_counter()
        coins = [
            c.coin_init for c in canonical_initial_states(steps=1).values()
        ]
        coins.extend(random_coin_states(20))
        dense_t = 10
        for coin in coins:
            config = ExperimentConfig(coin_init=coin, steps=dense_t)
            state = new_correlated_state(coin, 0)
            tables = evolve_tables(coin, dense_t)
            for t in range(1, dense_t + 1):
                state = step(state, config.coin_operator)
                dense = dense_evolve(config, t, dense_t)
                for x in range(-t, t + 1):
                    for c in (0, 1):
                        assert (
                            abs(tables[t].get((x, c), 0j) - dense.amplitude(c, x, x))
                            < 1e-10
                        )
                p0, p1 = outcome_probabilities(state)
                assert abs(p0 - dense.branch_probability(CoinOutcome.C0)) < 1e-10
                assert abs(p1 - dense.branch_probability(CoinOutcome.C1)) < 1e-10
                for outcome, weight in ((CoinOutcome.C0, p0), (CoinOutcome.C1, p1)):
                    if weight <= 1e-12:
                        continue
                    fast = von_neumann_entropy(
                        schmidt_spectrum(post_measurement(state, outcome))
                    )
                    assert abs(fast - reduced_entropy(dense, outcome)) < 1e-10

        for coin in coins:
            tables = evolve_tables(coin, 12)
            for t in range(13):
                assert max_table_diff(tables[t], path_sum_table(coin, t)) < 1e-12

        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"oracle sweep took {elapsed:.1f} s"


def test_criterion_4_property_suite(full_scale):
    with criterion("4 (norm, parity, bounds, swap and mirror symmetry)"):
        config = canonical_initial_states(steps=1000)["4a"]
        snapshots = evolve(
            new_correlated_state(config.coin_init, 0), hadamard(), 1000
        )
        assert max(abs(norm(s) - 1.0) for s in snapshots) < 1e-12
        for snapshot in snapshots:
            assert parity_ok(snapshot)
            assert len(support(snapshot)) <= snapshot.step + 1
        assert abs(sum(position_distribution(snapshots[-1]).values()) - 1.0) < 1e-12

        for name, (timeline, _) in full_scale.items():
            for record in timeline:
                for entropy, size in (
                    (record.entropy0, record.support0),
                    (record.entropy1, record.support1),
                ):
                    if entropy is None:
                        continue
                    assert entropy <= math.log2(size) + 1e-9
                    assert size <= max(record.step, 1)

        for a, b in zip(full_scale["4a"][0], full_scale["4b"][0]):
            assert abs(a.entropy0 - b.entropy1) < 1e-10
            assert abs(a.entropy1 - b.entropy0) < 1e-10

        balanced = canonical_initial_states(steps=1)["4c"].coin_init
        distribution = single_walker_distribution(balanced, 1000)
        assert mirror_total_variation(distribution) < 1e-10

        dense = dense_evolve(canonical_initial_states(steps=1)["4a"], 120, 122)
        assert dense.off_diagonal_mass() < 1e-14


def test_criterion_5_figures_determinism(tmp_path):
    with criterion("5 (byte-identical figure bundles)"):
        runner = CliRunner()
        dirs = (tmp_path / "first", tmp_path / "second")
        for d in dirs:
            result = runner.invoke(
                main, ["figures", "--out-dir", str(d), "--steps", "120"]
            )
            assert result.exit_code == 0, result.output
        first, second = (sorted(d.iterdir()) for d in dirs)
        assert [p.name for p in first] == [p.name for p in second]
        assert len(first) == 13
        for a, b in zip(first, second):
            assert a.read_bytes() == b.read_bytes(), f"{a.name} differs"
        manifest = json.loads((dirs[0] / "manifest.json").read_text())
        assert len(manifest["files"]) == 12
