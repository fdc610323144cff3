"""Discrete-time random walk diagnostics on the same graph.

The transition matrix is the normalized adjacency, so one step moves to a
uniformly random neighbor.  Provides dense powers, fast distinct-value
profiles, the distances used to define mixing, and a measured mixing time
with an explicit horizon re-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dihedral import check_odd_order, normalized_adjacency, pair_values_dense
from .spectra import DEFAULT_EPSILON, MINUS, PLUS, eigenvalues


def check_step_count(t) -> None:
    if not isinstance(t, (int, np.integer)) or t < 0:
        raise ValueError(f"step count must be a nonnegative integer, got {t!r}")


def classical_power(n, t) -> np.ndarray:
    """Dense t-step transition matrix (A/3)^t by repeated squaring."""
    check_odd_order(n)
    check_step_count(t)
    return np.linalg.matrix_power(normalized_adjacency(n), int(t))


def classical_profile(n, t) -> np.ndarray:
    """The 2n distinct entries of (A/3)^t as a (2, n) array over
    (block parity, residue offset); O(n log n) via branch eigenvalue powers."""
    check_odd_order(n)
    check_step_count(t)
    zp = np.power(eigenvalues(n, PLUS), int(t))
    zm = np.power(eigenvalues(n, MINUS), int(t))
    same = np.fft.ifft(zp + zm).real / 2.0
    other = np.fft.ifft(zp - zm).real / 2.0
    return np.vstack([same, other])


def classical_profiles(n, ts) -> np.ndarray:
    """Profiles for many step counts at once; shape (len(ts), 2, n)."""
    check_odd_order(n)
    ts = np.asarray(ts, dtype=np.int64)
    if ts.size and ts.min() < 0:
        raise ValueError("step counts must be nonnegative")
    zp = np.power(eigenvalues(n, PLUS)[None, :], ts[:, None])
    zm = np.power(eigenvalues(n, MINUS)[None, :], ts[:, None])
    same = np.fft.ifft(zp + zm, axis=1).real / 2.0
    other = np.fft.ifft(zp - zm, axis=1).real / 2.0
    return np.stack([same, other], axis=1)


def uniform_matrix(n) -> np.ndarray:
    check_odd_order(n)
    return np.full((2 * n, 2 * n), 1.0 / (2 * n))


def one_norm_distance(first, second, kind="induced") -> float:
    """Induced 1-norm (max absolute column sum) or entrywise sum of the
    difference of two matrices."""
    dev = np.abs(np.asarray(first, dtype=float) - np.asarray(second, dtype=float))
    if kind == "induced":
        return float(dev.sum(axis=0).max())
    if kind == "entrywise":
        return float(dev.sum())
    raise ValueError(f"unknown norm kind {kind!r}")


def induced_one_norm_distance(first, second) -> float:
    return one_norm_distance(first, second, kind="induced")


def max_pairwise_column_distance(matrix) -> float:
    """d(P): max over column pairs of half the l1 distance between columns."""
    cols = np.asarray(matrix, dtype=float)
    best = 0.0
    for j in range(cols.shape[1] - 1):
        gap = np.abs(cols[:, j : j + 1] - cols[:, j + 1 :]).sum(axis=0).max()
        best = max(best, 0.5 * float(gap))
    return best


def profile_column_distance(n, values) -> float:
    """d(P) for a matrix whose columns all carry the same (2, n) value
    profile; O(n^2) by comparing one reference column against every
    (offset, block) relabeling."""
    vals = np.asarray(values, dtype=float)
    rows = np.arange(n)
    base_same = vals[0][(-rows) % n]
    base_other = vals[1][(-rows) % n]
    best = 0.0
    for b in (0, 1):
        top, bottom = (vals[0], vals[1]) if b == 0 else (vals[1], vals[0])
        for y in range(n):
            if y == 0 and b == 0:
                continue
            idx = (y - rows) % n
            gap = np.abs(base_same - top[idx]).sum() + np.abs(base_other - bottom[idx]).sum()
            best = max(best, 0.5 * float(gap))
    return best


def half_uniform_distance(n, t) -> float:
    """0.5 ||(A/3)^t - uniform||_1 from the distinct-value profile."""
    vals = classical_profile(n, t)
    return 0.5 * float(np.abs(vals - 1.0 / (2 * n)).sum())


@dataclass
class MixingReport:
    """Measured mixing threshold plus the probe trail that produced it."""

    threshold_time: float
    distance_series: list = field(default_factory=list)
    norm_kind: str = "half_induced"
    epsilon: float = DEFAULT_EPSILON

    def to_dict(self) -> dict:
        return {
            "threshold_time": self.threshold_time,
            "norm_kind": self.norm_kind,
            "epsilon": self.epsilon,
            "distance_series": [[float(t), float(d)] for t, d in self.distance_series],
        }


def _classical_distance(n, t, norm_kind) -> float:
    if norm_kind == "half_induced":
        return half_uniform_distance(n, t)
    if norm_kind == "column_pairs":
        return profile_column_distance(n, classical_profile(n, t))
    raise ValueError(f"unknown norm kind {norm_kind!r}")


def classical_mixing_time(n, epsilon=None, norm_kind="half_induced", horizon_factor=4) -> MixingReport:
    """Smallest integer t whose distance to uniform is at most epsilon.

    Doubles until below threshold, then bisects on integers; afterwards the
    whole window [t, horizon_factor * t] is re-checked so the reported
    threshold also certifies every later time in that range.
    """
    check_odd_order(n)
    if epsilon is None:
        epsilon = DEFAULT_EPSILON
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    series = []

    def probe(t):
        d = _classical_distance(n, t, norm_kind)
        series.append((t, d))
        return d

    if probe(0) <= epsilon:
        return MixingReport(0.0, series, norm_kind, epsilon)
    t = 1
    while probe(t) > epsilon:
        t *= 2
        if t > 2**40:
            raise RuntimeError(f"no mixing below {2**40} steps at n={n}")
    lo, hi = t // 2, t
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if probe(mid) <= epsilon:
            hi = mid
        else:
            lo = mid
    window = np.arange(hi, horizon_factor * hi + 1)
    if norm_kind == "half_induced":
        profiles = classical_profiles(n, window)
        dists = 0.5 * np.abs(profiles - 1.0 / (2 * n)).sum(axis=(1, 2))
        bad = np.flatnonzero(dists > epsilon)
    else:
        dists = np.array([profile_column_distance(n, classical_profile(n, int(t))) for t in window])
        bad = np.flatnonzero(dists > epsilon)
    if bad.size:
        raise RuntimeError(
            f"distance rises back above epsilon at t={int(window[bad[0]])} inside the horizon window"
        )
    return MixingReport(float(hi), series, norm_kind, epsilon)


def submultiplicativity_check(n, t1, t2, slack=1e-10) -> bool:
    """d(P^(t1+t2)) <= d(P^t1) d(P^t2) + slack."""
    check_step_count(t1)
    check_step_count(t2)
    d1 = profile_column_distance(n, classical_profile(n, t1))
    d2 = profile_column_distance(n, classical_profile(n, t2))
    d12 = profile_column_distance(n, classical_profile(n, t1 + t2))
    return d12 <= d1 * d2 + slack


def contraction_check(matrix, epsilon) -> bool:
    """Once d(M) <= 1/(2e), verify ||M^ceil(ln(1/epsilon)) - uniform||_1 <= epsilon."""
    mat = np.asarray(matrix, dtype=float)
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon!r}")
    if max_pairwise_column_distance(mat) > DEFAULT_EPSILON:
        raise ValueError("matrix has not contracted to d <= 1/(2e) yet")
    k = math.ceil(math.log(1.0 / epsilon))
    powered = np.linalg.matrix_power(mat, k)
    size = mat.shape[0]
    return one_norm_distance(powered, np.full_like(mat, 1.0 / size)) <= epsilon


def classical_dense_from_profile(n, t) -> np.ndarray:
    """Dense (A/3)^t expanded from the fast profile; equals classical_power."""
    return pair_values_dense(n, classical_profile(n, t))
