"""Continuous-time walk generated by the normalized adjacency.

Covers the instantaneous propagator e^{i A t / 3}, its transition
probabilities, the finite-horizon time average, and the exact limiting
distribution.  Everything is O(n) or O(n^2) through the two cosine
eigenvalue families; a dense eigendecomposition oracle is kept only for
cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dihedral import (
    check_odd_order,
    check_vertex,
    pair_geometry,
    pair_values_dense,
    pair_values_row,
)
from .spectra import MINUS, PLUS, eigenbasis, eigenvalues, full_spectrum

ORACLE_SIZE_CAP = 512

# tolerance on the imaginary residue of assembled real quantities
IMAG_TOL = 1e-9


def check_horizon(T) -> None:
    if not T > 0:
        raise ValueError(f"averaging horizon must be positive, got {T!r}")


def amplitude(n, i, j, t) -> complex:
    """Transition amplitude <j| e^{i A t / 3} |i> in O(n) via the two branches."""
    check_odd_order(n)
    delta, eps = pair_geometry(n, i, j)
    lp = eigenvalues(n, PLUS)
    lm = eigenvalues(n, MINUS)
    phase = np.exp(2j * np.pi * np.arange(n) * delta / n)
    total = (phase * (np.exp(1j * lp * t) + eps * np.exp(1j * lm * t))).sum()
    return complex(total / (2 * n))


def probability(n, i, j, t) -> float:
    """Probability of finding the walker at j at time t, started at i."""
    return abs(amplitude(n, i, j, t)) ** 2


def probability_row(n, i, t) -> np.ndarray:
    """All 2n transition probabilities from vertex i at time t.

    The amplitudes over residue offsets are inverse DFTs of the branch
    phases, so a full row costs O(n log n).
    """
    check_odd_order(n)
    check_vertex(n, i)
    zp = np.exp(1j * eigenvalues(n, PLUS) * t)
    zm = np.exp(1j * eigenvalues(n, MINUS) * t)
    p_same = np.abs(0.5 * np.fft.ifft(zp + zm)) ** 2
    p_other = np.abs(0.5 * np.fft.ifft(zp - zm)) ** 2
    return pair_values_row(n, np.vstack([p_same, p_other]), i)


def probability_matrix(n, t) -> np.ndarray:
    """Dense 2n x 2n probability matrix at time t; symmetric and doubly
    stochastic."""
    check_odd_order(n)
    zp = np.exp(1j * eigenvalues(n, PLUS) * t)
    zm = np.exp(1j * eigenvalues(n, MINUS) * t)
    p_same = np.abs(0.5 * np.fft.ifft(zp + zm)) ** 2
    p_other = np.abs(0.5 * np.fft.ifft(zp - zm)) ** 2
    return pair_values_dense(n, np.vstack([p_same, p_other]))


def propagator_oracle(n, t, size_cap=ORACLE_SIZE_CAP) -> np.ndarray:
    """Dense U(t) assembled from the analytic orthonormal eigenbasis.

    Reference path for validating the closed-form entries; refuses sizes
    where the O(n^3) assembly stops being a sane cross-check.
    """
    check_odd_order(n)
    if n > size_cap:
        raise ValueError(f"oracle capped at n={size_cap}, got n={n}")
    basis = eigenbasis(n)
    lam = full_spectrum(n)
    return (basis * np.exp(1j * lam * t)) @ basis.conj().T


def phase_average(x, T):
    """(1/T) integral_0^T e^{i x t} dt, evaluated as e^{i x T / 2} sinc(x T / (2 pi)).

    Exact at x = 0 and free of subtractive cancellation for small |x T|.
    """
    x = np.asarray(x, dtype=float)
    return np.exp(0.5j * x * T) * np.sinc(x * T / (2.0 * np.pi))


def averaged_entry(n, delta, eps, T) -> float:
    """Time-averaged transition probability for a vertex pair at residue
    offset delta with block sign eps.

    Direct O(n^2) double sum over mode pairs of both branches; the
    assembled value must be real up to a 1e-9 residue, which is checked
    and then discarded.
    """
    check_odd_order(n)
    check_horizon(T)
    if not 0 <= delta < n:
        raise ValueError(f"residue offset {delta!r} out of range [0, {n})")
    if eps not in (1, -1):
        raise ValueError(f"block sign must be +1 or -1, got {eps!r}")
    lp = eigenvalues(n, PLUS)
    lm = eigenvalues(n, MINUS)
    m = np.arange(n)
    w = np.exp(2j * np.pi * delta * (m[:, None] - m[None, :]) / n)
    total = 0.0 + 0.0j
    for sa, la in ((PLUS, lp), (MINUS, lm)):
        for sb, lb in ((PLUS, lp), (MINUS, lm)):
            sgn = eps if sa != sb else 1
            total += sgn * (w * phase_average(la[:, None] - lb[None, :], T)).sum()
    total /= (2 * n) ** 2
    if abs(total.imag) > IMAG_TOL:
        raise RuntimeError(f"imaginary residue {total.imag} above tolerance")
    return float(total.real)


@dataclass
class AveragedWalkMatrix:
    """Time-averaged transition matrix stored as its 2n distinct values.

    values[0, delta] holds same-block entries and values[1, delta]
    opposite-block ones; entry (i, j) depends on the pair only through
    ((rho_j - rho_i) mod n, block parity).  Each row and each column of
    the dense expansion contains every distinct value exactly once.
    """

    n: int
    T: float
    values: np.ndarray

    def entry(self, i, j) -> float:
        delta, eps = pair_geometry(self.n, i, j)
        return float(self.values[0 if eps == 1 else 1, delta])

    def row(self, i) -> np.ndarray:
        return pair_values_row(self.n, self.values, i)

    def to_dense(self) -> np.ndarray:
        return pair_values_dense(self.n, self.values)

    def distance_to_limit(self, kind="induced") -> float:
        return averaged_distance_to_limit(self, kind=kind)


def averaged_matrix(n, T) -> AveragedWalkMatrix:
    """All distinct time-averaged entries in O(n^2).

    The mode-pair double sums depend on (m - m') mod n only through the
    residue phase, so they are binned by that difference and finished with
    a single inverse DFT per branch pairing.
    """
    check_odd_order(n)
    check_horizon(T)
    lp = eigenvalues(n, PLUS)
    lm = eigenvalues(n, MINUS)
    m = np.arange(n)
    didx = ((m[:, None] - m[None, :]) % n).ravel()

    def binned(la, lb):
        k = phase_average(la[:, None] - lb[None, :], T).ravel()
        d = np.bincount(didx, weights=k.real, minlength=n) + 1j * np.bincount(
            didx, weights=k.imag, minlength=n
        )
        return n * np.fft.ifft(d)

    same = binned(lp, lp) + binned(lm, lm)
    cross = binned(lp, lm) + binned(lm, lp)
    vals = np.vstack([same + cross, same - cross]) / (2 * n) ** 2
    if np.abs(vals.imag).max() > IMAG_TOL:
        raise RuntimeError(f"imaginary residue {np.abs(vals.imag).max()} above tolerance")
    return AveragedWalkMatrix(n, float(T), np.ascontiguousarray(vals.real))


@dataclass(frozen=True)
class LimitingDistribution:
    """Infinite-horizon average: every entry is one of two exact rationals.

    The value 1/(2n) + (n-1)/(2n^2) sits at the two delta = 0 entries of
    each column (one per block); all other entries equal
    1/(2n) - 1/(2n^2).  The block sign drops out because the two branches
    never share an eigenvalue for odd n.
    """

    n: int
    diagonal: Fraction
    off_diagonal: Fraction

    def entry(self, i, j) -> Fraction:
        delta, _ = pair_geometry(self.n, i, j)
        return self.diagonal if delta == 0 else self.off_diagonal

    def row_sum(self) -> Fraction:
        return 2 * self.diagonal + (2 * self.n - 2) * self.off_diagonal

    def min_entry(self) -> Fraction:
        return min(self.diagonal, self.off_diagonal)

    def values(self) -> np.ndarray:
        """(2, n) float profile matching AveragedWalkMatrix.values layout."""
        out = np.full((2, self.n), float(self.off_diagonal))
        out[:, 0] = float(self.diagonal)
        return out

    def to_dense(self) -> np.ndarray:
        return pair_values_dense(self.n, self.values())


def limiting_distribution(n) -> LimitingDistribution:
    check_odd_order(n)
    return LimitingDistribution(
        n,
        Fraction(1, 2 * n) + Fraction(n - 1, 2 * n * n),
        Fraction(1, 2 * n) - Fraction(1, 2 * n * n),
    )


def averaged_distance_to_limit(avg: AveragedWalkMatrix, kind="induced") -> float:
    """Distance between a finite-horizon average and the limit.

    Columns of both matrices are value-permutations of the same (2, n)
    profiles, so the induced 1-norm (max absolute column sum) equals the
    profile deviation summed once, and the entrywise 1-norm is 2n times it.
    """
    pi = limiting_distribution(avg.n)
    dev = float(np.abs(avg.values - pi.values()).sum())
    if kind == "induced":
        return dev
    if kind == "entrywise":
        return 2 * avg.n * dev
    raise ValueError(f"unknown norm kind {kind!r}")


def distance_to_limit(n, T, kind="induced") -> float:
    """||averaged matrix at horizon T - limit||_1 in O(n^2)."""
    return averaged_distance_to_limit(averaged_matrix(n, T), kind=kind)


def convergence_to_limit(n, horizons, kind="induced") -> list[tuple[float, float]]:
    """(T, distance) pairs over a horizon schedule."""
    return [(float(T), distance_to_limit(n, T, kind=kind)) for T in horizons]
