"""Brute-force cross-checks for the sparse engine; test support only.

Two independent routes to the same numbers:

* a dense simulation that carries the full coin (x) walker1 (x) walker2
  amplitude tensor on a truncated lattice and gets branch entropies from the
  eigenvalues of an explicitly built reduced density matrix, and
* a path summation that expands the t-step amplitude as a sum over all 2^t
  coin histories with Hadamard matrix-element weights.

Both are deliberately slow (quadratic memory / exponential time) and exist to
catch index and normalization bugs in the fast path, not to scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .experiment import ExperimentConfig
from .measurement import PROB_EPS, CoinOutcome, EmptyBranchError
from .states import CoinSpinor

#: reduced-density-matrix eigenvalues below this count as zero
EIGVAL_EPS = 1e-14

#: the path sum costs 2^t; refuse anything bigger
MAX_PATH_SUM_STEPS = 20


@dataclass(frozen=True, eq=False)
class DenseTensorState:
    """Full amplitude tensor indexed (coin, walker1, walker2) on [-R, R]^2."""

    step: int
    lattice_radius: int
    amplitudes: np.ndarray

    def amplitude(self, coin: int, x1: int, x2: int) -> complex:
        r = self.lattice_radius
        return complex(self.amplitudes[coin, x1 + r, x2 + r])

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def off_diagonal_mass(self) -> float:
        """Probability mass on sites with walker1 != walker2 (should be 0)."""
        mass = np.sum(np.abs(self.amplitudes) ** 2, axis=0)
        sites = np.arange(mass.shape[0])
        mass[sites, sites] = 0.0
        return float(np.sum(mass))

    def branch_probability(self, outcome: CoinOutcome) -> float:
        return float(np.sum(np.abs(self.amplitudes[outcome.value]) ** 2))


def dense_evolve(config: ExperimentConfig, t: int, radius: int) -> DenseTensorState:
    """Apply t steps with explicit three-index bookkeeping.

    The conditional move acts only on diagonal sites |i, i> and displaces both
    walker indices together, so support stays on the diagonal.  The radius
    must cover the ballistic cone so no amplitude reaches the lattice edge.
    """
    if t < 0:
        raise ValueError(f"step count must be non-negative, got {t}")
    if radius < t:
        raise ValueError(f"lattice radius {radius} cannot cover a {t}-step walk")
    if radius < t + abs(config.start_position):
        raise ValueError(
            f"radius {radius} too small for a {t}-step walk starting at "
            f"{config.start_position}"
        )
    n = 2 * radius + 1
    amplitudes = np.zeros((2, n, n), dtype=np.complex128)
    origin = config.start_position + radius
    amplitudes[0, origin, origin] = config.coin_init.amp0
    amplitudes[1, origin, origin] = config.coin_init.amp1
    coin = np.array(config.coin_operator.rows(), dtype=np.complex128)
    idx = np.arange(n)
    for _ in range(t):
        mixed = np.tensordot(coin, amplitudes, axes=([1], [0]))
        diag0 = mixed[0, idx, idx]
        diag1 = mixed[1, idx, idx]
        amplitudes = np.zeros_like(amplitudes)
        amplitudes[0, idx[1:], idx[1:]] = diag0[:-1]
        amplitudes[1, idx[:-1], idx[:-1]] = diag1[1:]
    return DenseTensorState(step=t, lattice_radius=radius, amplitudes=amplitudes)


def reduced_entropy(state: DenseTensorState, outcome: CoinOutcome) -> float:
    """Branch entropy in bits from the reduced density matrix of walker 1.

    The coin is projected onto ``outcome``, the walker amplitude matrix is
    renormalized, walker 2 is traced out, and the entropy is computed from the
    eigenvalues of the resulting Hermitian matrix.  Independent of the
    Schmidt-coefficient shortcut used by the fast path.
    """
    matrix = state.amplitudes[outcome.value]
    weight = float(np.sum(np.abs(matrix) ** 2))
    if weight <= PROB_EPS:
        raise EmptyBranchError(
            f"outcome {outcome} has probability {weight!r} at step {state.step}"
        )
    normalized = matrix / math.sqrt(weight)
    rho = normalized @ normalized.conj().T
    eigenvalues = np.linalg.eigvalsh(rho)
    eigenvalues = eigenvalues[eigenvalues > EIGVAL_EPS]
    return max(0.0, float(-np.sum(eigenvalues * np.log2(eigenvalues))))


@lru_cache(maxsize=64)
def _history_table(coin_init: CoinSpinor, t: int) -> dict[tuple[int, int], complex]:
    s = math.sqrt(0.5)
    h = ((s, s), (s, -s))
    a = (complex(coin_init.amp0), complex(coin_init.amp1))
    if t == 0:
        return {(0, 0): a[0], (0, 1): a[1]}
    table: dict[tuple[int, int], complex] = {}
    for history in itertools.product((0, 1), repeat=t):
        first = history[0]
        weight = h[first][0] * a[0] + h[first][1] * a[1]
        displacement = 1 - 2 * first
        previous = first
        for current in history[1:]:
            weight *= h[current][previous]
            displacement += 1 - 2 * current
            previous = current
        key = (displacement, history[-1])
        table[key] = table.get(key, 0j) + weight
    return table


def path_sum_table(coin_init: CoinSpinor, t: int) -> dict[tuple[int, int], complex]:
    """All t-step amplitudes keyed (position, coin index), start at the origin."""
    if not 0 <= t <= MAX_PATH_SUM_STEPS:
        raise ValueError(
            f"path summation supports 0 <= t <= {MAX_PATH_SUM_STEPS}, got {t}"
        )
    return dict(_history_table(coin_init, t))


def path_sum_amplitude(
    coin_init: CoinSpinor, x: int, outcome: CoinOutcome, t: int
) -> complex:
    """Amplitude of |outcome>(x)|x, x> after t steps, summed over coin histories."""
    table = path_sum_table(coin_init, t)
    return table.get((x, outcome.value), 0j)
