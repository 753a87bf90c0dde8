"""Dense symmetric eigensolving for the three spectral quantities the bounds consume.

The primary solver is cyclic Jacobi: simple, robust for symmetric matrices,
and accurate far below the integer-snapping threshold used downstream. An
independent power iteration is provided as a cross-check oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph_core import Graph, VertexSet, degree_stats, is_connected, neighbors_out

__all__ = [
    "SpectralSummary",
    "ConvergenceError",
    "UndefinedQuantityError",
    "adjacency_matrix",
    "laplacian_matrix",
    "jacobi_spectrum",
    "spectral_summary",
    "rayleigh_indicator",
    "power_iteration_radius",
]

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class UndefinedQuantityError(ValueError):
    """The requested spectral quantity is undefined for this graph."""


@dataclass(frozen=True)
class SpectralSummary:
    """Spectral radius, algebraic connectivity, Laplacian spectral radius.

    ``laplacian_spectrum`` is sorted ascending; its first entry is 0 up to
    the solver tolerance, and ``algebraic_connectivity`` is the second entry
    (positive iff the graph is connected).
    """

    spectral_radius: float
    algebraic_connectivity: float
    laplacian_radius: float
    laplacian_spectrum: tuple[float, ...]
    sweeps: int
    residual: float
    connected: bool


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in g.adjacency[v]:
            a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def jacobi_spectrum(
    matrix: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, int, float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair until all off-diagonal entries
    have magnitude below ``tol``. Returns (sorted eigenvalues, sweeps used,
    final off-diagonal residual).
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if n == 1:
        return a.diagonal().copy(), 0, 0.0
    upper = np.triu_indices(n, 1)
    skip = tol * 1e-2  # entries this small cannot push the sweep residual over tol
    for sweep in range(max_sweeps + 1):
        off = float(np.max(np.abs(a[upper])))
        if off < tol:
            return np.sort(a.diagonal()), sweep, off
        if sweep == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not reach off-diagonal residual {tol} within {max_sweeps} sweeps"
                f" (residual {off:.3e})",
                residual=off,
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
    raise AssertionError("unreachable")


def spectral_summary(g: Graph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """Compute the full Laplacian spectrum and adjacency spectral radius.

    Raises :class:`UndefinedQuantityError` for graphs of order 1, where the
    algebraic connectivity does not exist. Disconnected graphs are fine: the
    second Laplacian eigenvalue is then ~0 and the ``connected`` flag lets
    callers decide what that means for them.
    """
    if g.n < 2:
        raise UndefinedQuantityError("algebraic connectivity is undefined for graphs of order < 2")
    lap_spectrum, lap_sweeps, lap_residual = jacobi_spectrum(laplacian_matrix(g), tol)
    adj_spectrum, adj_sweeps, adj_residual = jacobi_spectrum(adjacency_matrix(g), tol)
    # For a nonnegative symmetric matrix the largest eigenvalue is the spectral radius.
    return SpectralSummary(
        spectral_radius=float(adj_spectrum[-1]),
        algebraic_connectivity=float(lap_spectrum[1]),
        laplacian_radius=float(lap_spectrum[-1]),
        laplacian_spectrum=tuple(float(x) for x in lap_spectrum),
        sweeps=lap_sweeps + adj_sweeps,
        residual=max(lap_residual, adj_residual),
        connected=is_connected(g),
    )


def rayleigh_indicator(g: Graph, s: VertexSet) -> float:
    """Rayleigh value of the indicator vector of ``s``: n * cut(s) / (|s| * (n - |s|)).

    For every proper nonempty subset this lies between the algebraic
    connectivity and the Laplacian spectral radius.
    """
    if not 0 < s.size < g.n:
        raise ValueError("rayleigh_indicator needs a proper nonempty subset")
    cut = sum(neighbors_out(g, v, s) for v in s)
    return g.n * cut / (s.size * (g.n - s.size))


def power_iteration_radius(
    g: Graph,
    which: str = "adjacency",
    tol: float = 1e-10,
    max_iter: int = 50000,
) -> float:
    """Dominant eigenvalue of the adjacency or Laplacian matrix by power iteration.

    Both matrices are shifted to make all eigenvalues nonnegative (adjacency
    by the maximum degree, Laplacian by twice the maximum degree) so that the
    target eigenvalue is the strictly dominant one; the shift is removed from
    the returned value. Stops when the Rayleigh-quotient residual drops below
    ``tol``. Adjacency mode assumes a connected graph.
    """
    max_degree = degree_stats(g).max_degree
    if which == "adjacency":
        base = adjacency_matrix(g)
        shift = float(max_degree)
    elif which == "laplacian":
        base = laplacian_matrix(g)
        shift = 2.0 * max_degree
    else:
        raise ValueError(f"which must be 'adjacency' or 'laplacian', got {which!r}")
    matrix = base + shift * np.eye(g.n)
    if not matrix.any():
        return -shift  # zero matrix: only happens for edgeless graphs, shift is 0
    rng = np.random.default_rng(0x5EED)
    x = rng.standard_normal(g.n)
    x /= np.linalg.norm(x)
    rho = 0.0
    for _ in range(max_iter):
        y = matrix @ x
        norm = float(np.linalg.norm(y))
        if norm < 1e-300:
            x = rng.standard_normal(g.n)
            x /= np.linalg.norm(x)
            continue
        rho = float(x @ y)
        if float(np.linalg.norm(y - rho * x)) <= tol * max(1.0, abs(rho)):
            return rho - shift
        x = y / norm
    residual = float(np.linalg.norm(matrix @ x - rho * x))
    raise ConvergenceError(
        f"power iteration did not converge within {max_iter} iterations (residual {residual:.3e})",
        residual=residual,
    )
