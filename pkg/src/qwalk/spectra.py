"""Closed-form eigensystem of the degree-normalized adjacency.

The 2n eigenpairs split into two cosine families indexed by m in [0, n):
(1 + 2 cos(2 pi m / n)) / 3 on the block-symmetric branch and
(2 cos(2 pi m / n) - 1) / 3 on the block-antisymmetric one.  For odd n the
two families never collide, the walk is ergodic, and the spectral gap is
set by (1 + 2 cos(2 pi / n)) / 3.
"""

from __future__ import annotations

import math

import numpy as np

from .dihedral import check_odd_order, check_vertex

PLUS = 1
MINUS = -1

# conventional mixing threshold
DEFAULT_EPSILON = 1.0 / (2.0 * math.e)


def check_mode(n, m) -> None:
    if not isinstance(m, (int, np.integer)) or not 0 <= m < n:
        raise ValueError(f"mode index {m!r} out of range [0, {n})")


def check_branch(branch) -> None:
    if branch not in (PLUS, MINUS):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")


def eigenvalue(n, m, branch) -> float:
    check_odd_order(n)
    check_mode(n, m)
    check_branch(branch)
    c = 2.0 * math.cos(2.0 * math.pi * m / n)
    return (c + 1.0) / 3.0 if branch == PLUS else (c - 1.0) / 3.0


def eigenvalues(n, branch) -> np.ndarray:
    """All n eigenvalues of one branch, indexed by mode."""
    check_odd_order(n)
    check_branch(branch)
    c = 2.0 * np.cos(2.0 * np.pi * np.arange(n) / n)
    return (c + 1.0) / 3.0 if branch == PLUS else (c - 1.0) / 3.0


def full_spectrum(n) -> np.ndarray:
    """All 2n eigenvalues, block-symmetric branch first."""
    return np.concatenate([eigenvalues(n, PLUS), eigenvalues(n, MINUS)])


def eigenvector_component(n, m, branch, i) -> complex:
    """Component i of the unit eigenvector for mode m on the given branch."""
    check_odd_order(n)
    check_mode(n, m)
    check_branch(branch)
    check_vertex(n, i)
    sign = 1.0 if branch == PLUS or i < n else -1.0
    return sign * np.exp(2j * np.pi * (i % n) * m / n) / math.sqrt(2 * n)


def eigenvector(n, m, branch) -> np.ndarray:
    """Unit-norm eigenvector; the reflection block is negated on the
    antisymmetric branch."""
    check_odd_order(n)
    check_mode(n, m)
    check_branch(branch)
    rho = np.arange(2 * n) % n
    vec = np.exp(2j * np.pi * rho * m / n) / math.sqrt(2 * n)
    if branch == MINUS:
        vec[n:] = -vec[n:]
    return vec


def eigenbasis(n) -> np.ndarray:
    """Column matrix of all 2n unit eigenvectors, ordered like `full_spectrum`."""
    check_odd_order(n)
    cols = [eigenvector(n, m, b) for b in (PLUS, MINUS) for m in range(n)]
    return np.stack(cols, axis=1)


def second_largest_eigenvalue(n) -> float:
    """Largest eigenvalue below 1; strictly inside (0, 1) for odd n >= 3.

    (1 + 2 cos(2 pi / n)) / 3 from the symmetric branch wins for n >= 5;
    at n = 3 that mode drops to 0 and the antisymmetric branch's constant
    1/3 takes over.
    """
    return max(eigenvalue(n, 1, PLUS), eigenvalue(n, 0, MINUS))


def check_epsilon(epsilon) -> None:
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon!r}")


def classical_lower_bound(n, epsilon) -> float:
    """Spectral lower bound on the classical mixing time, in walk steps:
    max(0, (1 / (1 - lambda_2) - 1) ln(1 / (2 epsilon)))."""
    check_odd_order(n)
    check_epsilon(epsilon)
    gap = 1.0 - second_largest_eigenvalue(n)
    return max(0.0, (1.0 / gap - 1.0) * math.log(1.0 / (2.0 * epsilon)))


def classical_lower_bound_relaxed(n, epsilon) -> float:
    """Same bound with 1 / (1 - lambda_2) relaxed to 3 n^2 / (4 pi^2)."""
    check_odd_order(n)
    check_epsilon(epsilon)
    return max(0.0, (3.0 * n * n / (4.0 * math.pi**2) - 1.0) * math.log(1.0 / (2.0 * epsilon)))
