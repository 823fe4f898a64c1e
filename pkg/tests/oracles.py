"""Closed-form reference computations, independent of the library paths they check.

Everything here is deliberately written from the raw 2x2 matrix entries
(quadratic eigenvalue formula, traceless-split exponential, literal trace
products) so that agreement with the library is evidence, not tautology.
"""

from __future__ import annotations

import numpy as np


def coin_matrix(p1: float, p2: float, p3: float) -> np.ndarray:
    """Matrix of a coin triple, rebuilt from scratch for oracle use."""
    off = complex(p1 - 0.5, p2 - 0.5)
    return np.array([[p3, off.conjugate()], [off, 1.0 - p3]], dtype=complex)


def hermitian_eigenvalues(matrix: np.ndarray) -> tuple[float, float]:
    """Eigenvalues (low, high) of a 2x2 Hermitian matrix via the quadratic formula."""
    a = matrix[0, 0].real
    d = matrix[1, 1].real
    center = (a + d) / 2.0
    shift = np.sqrt(((a - d) / 2.0) ** 2 + abs(matrix[1, 0]) ** 2)
    return (center - shift, center + shift)


def expm_hermitian_2x2(matrix: np.ndarray) -> np.ndarray:
    """Matrix exponential of a 2x2 Hermitian matrix.

    Splits the matrix into a multiple of the identity plus a traceless
    remainder T. Since T^2 = r^2 I for Hermitian traceless T, the series
    collapses to exp = e^c [cosh(r) I + (sinh(r) / r) T].
    """
    m = np.asarray(matrix, dtype=complex)
    c = np.trace(m).real / 2.0
    t = m - c * np.eye(2)
    r = float(np.sqrt(abs(t[1, 0]) ** 2 + t[0, 0].real ** 2))
    if r == 0.0:
        return np.exp(c) * np.eye(2, dtype=complex)
    return np.exp(c) * (np.cosh(r) * np.eye(2) + (np.sinh(r) / r) * t)


def trace_product(a: np.ndarray, b: np.ndarray) -> float:
    """Tr(a @ b) by literal matrix multiplication."""
    return float(np.trace(a @ b).real)


def random_cube_points(rng: np.random.Generator, count: int) -> np.ndarray:
    """Uniform samples from the unit cube, shape (count, 3)."""
    return rng.random((count, 3))


def random_ball_points(rng: np.random.Generator, count: int) -> np.ndarray:
    """Uniform samples from the quantum ball via rejection, shape (count, 3)."""
    points = np.empty((0, 3))
    while len(points) < count:
        batch = rng.random((2 * (count - len(points)) + 16, 3))
        inside = batch[np.sum((batch - 0.5) ** 2, axis=1) <= 0.25]
        points = np.vstack([points, inside])
    return points[:count]
