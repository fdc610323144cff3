"""Repeated position measurement of the averaged walk.

One measured step draws a time uniformly from [0, T], evolves the walker
from its current vertex for that long, and measures position.  Iterating
the step samples (approximately) from the averaged transition kernel, and
after enough steps from the limiting distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dihedral import check_odd_order, check_vertex
from .spectra import MINUS, PLUS, eigenvalues
from .walk import check_horizon, probability_row

# acceptable drift of a probability row's total away from 1
ROW_SUM_TOL = 1e-9


@dataclass(frozen=True)
class SamplerConfig:
    """Inputs of a measured-walk run.

    horizon is the measurement window T, steps the number of measured
    steps per trial, trials the number of independent walks, and seed the
    root of the per-trial random streams.
    """

    n: int
    start_vertex: int
    horizon: float
    steps: int
    trials: int
    seed: int

    def __post_init__(self):
        check_odd_order(self.n)
        check_vertex(self.n, self.start_vertex)
        check_horizon(self.horizon)
        if not isinstance(self.steps, (int, np.integer)) or self.steps < 0:
            raise ValueError(f"step count must be a nonnegative integer, got {self.steps!r}")
        if not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise ValueError(f"trial count must be a positive integer, got {self.trials!r}")
        if not isinstance(self.seed, (int, np.integer)):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")


def trial_rng(seed, trial) -> np.random.Generator:
    """Independent stream for one trial: child (trial,) of the root seed."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))


def single_measured_step(n, current, horizon, rng) -> int:
    """One measured step: draw t ~ U[0, horizon], then sample the position
    distribution of the walk run for time t by inverse CDF."""
    check_odd_order(n)
    check_vertex(n, current)
    check_horizon(horizon)
    t = rng.uniform(0.0, horizon)
    row = probability_row(n, current, t)
    total = row.sum()
    if abs(total - 1.0) > ROW_SUM_TOL:
        raise RuntimeError(f"probability row sums to {total}, outside tolerance")
    u = rng.random() * total
    idx = int(np.searchsorted(np.cumsum(row), u, side="right"))
    return min(idx, 2 * n - 1)


def measured_walk(config: SamplerConfig, trial=0) -> int:
    """Final vertex of one walk of `config.steps` measured steps.

    Deterministic in (config.seed, trial); `empirical_check` reproduces it
    trial by trial.
    """
    rng = trial_rng(config.seed, trial)
    vertex = config.start_vertex
    for _ in range(config.steps):
        vertex = single_measured_step(config.n, vertex, config.horizon, rng)
    return vertex


@dataclass
class SampleHistogram:
    """Endpoint counts over the 2n vertices for a batch of trials."""

    counts: np.ndarray
    trials: int

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.trials

    @property
    def tv_to_uniform(self) -> float:
        size = self.counts.shape[0]
        return 0.5 * float(np.abs(self.frequencies - 1.0 / size).sum())

    @property
    def stderr_envelope(self) -> float:
        """sqrt(2n / trials), the scale of the TV statistic's sampling noise."""
        return float(np.sqrt(self.counts.shape[0] / self.trials))


def _probability_rows(n, currents, times) -> np.ndarray:
    """Probability rows for many (vertex, time) pairs at once; one batched
    inverse DFT per branch combination."""
    zp = np.exp(1j * np.outer(times, eigenvalues(n, PLUS)))
    zm = np.exp(1j * np.outer(times, eigenvalues(n, MINUS)))
    p_same = np.abs(0.5 * np.fft.ifft(zp + zm, axis=1)) ** 2
    p_other = np.abs(0.5 * np.fft.ifft(zp - zm, axis=1)) ** 2
    currents = np.asarray(currents)
    rho = currents % n
    beta = currents // n
    cols = np.arange(2 * n)
    delta = (cols[None, :] % n - rho[:, None]) % n
    same_block = (cols[None, :] // n) == beta[:, None]
    gathered_same = np.take_along_axis(p_same, delta, axis=1)
    gathered_other = np.take_along_axis(p_other, delta, axis=1)
    return np.where(same_block, gathered_same, gathered_other)


def empirical_check(config: SamplerConfig) -> SampleHistogram:
    """Histogram of the endpoints of `config.trials` independent walks.

    Trials are batched: within a step every trial draws its measurement
    time, then its inverse-CDF uniform, from its own stream, so the batch
    reproduces `measured_walk(config, trial)` exactly for every trial.
    """
    rngs = [trial_rng(config.seed, k) for k in range(config.trials)]
    current = np.full(config.trials, config.start_vertex, dtype=np.int64)
    n = config.n
    for _ in range(config.steps):
        times = np.array([rng.uniform(0.0, config.horizon) for rng in rngs])
        rows = _probability_rows(n, current, times)
        totals = rows.sum(axis=1)
        if np.abs(totals - 1.0).max() > ROW_SUM_TOL:
            raise RuntimeError("a probability row drifted away from total 1")
        draws = np.array([rng.random() for rng in rngs]) * totals
        cumulative = np.cumsum(rows, axis=1)
        current = np.minimum(
            (cumulative <= draws[:, None]).sum(axis=1), 2 * n - 1
        ).astype(np.int64)
    counts = np.bincount(current, minlength=2 * n)
    return SampleHistogram(counts, config.trials)
