"""Eigenvalues of real symmetric matrices.

The default solver is cyclic Jacobi with a round-robin pair ordering: each
round applies `n/2` disjoint plane rotations at once as vectorized row and
column updates, and `n - 1` rounds make one sweep over every pair. Above
`Settings.jacobi_max_n` the solver falls back to LAPACK (`numpy.linalg.eigvalsh`).
"""

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from cover_energy.config import Settings, get_settings
from cover_energy.errors import ConvergenceFailureError
from cover_energy.spectral.matrix import CoveringMatrix

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
IndexArray = npt.NDArray[np.intp]


class EigenMethod(enum.StrEnum):
    JACOBI = "jacobi"
    LAPACK = "lapack"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus `(value, multiplicity)` clusters.

    Attributes:
        eigenvalues: All `n` eigenvalues, largest first.
        clusters: Runs of eigenvalues within the cluster tolerance, each
            represented by its mean, largest first.
    """

    eigenvalues: tuple[float, ...]
    clusters: tuple[tuple[float, int], ...]

    @classmethod
    def from_values(cls, values: npt.ArrayLike, cluster_tolerance: float) -> "Spectrum":
        ordered = sorted((float(x) for x in np.asarray(values, dtype=np.float64)), reverse=True)
        clusters: list[tuple[float, int]] = []
        run: list[float] = []
        for x in ordered:
            if run and run[0] - x > cluster_tolerance:
                clusters.append((sum(run) / len(run), len(run)))
                run = []
            run.append(x)
        if run:
            clusters.append((sum(run) / len(run), len(run)))
        return cls(eigenvalues=tuple(ordered), clusters=tuple(clusters))

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def trace(self) -> float:
        return float(sum(self.eigenvalues))

    @property
    def energy(self) -> float:
        return float(sum(abs(x) for x in self.eigenvalues))

    def multiplicity(self, value: float, tolerance: float) -> int:
        """Number of eigenvalues within *tolerance* of *value*."""
        return sum(1 for x in self.eigenvalues if abs(x - value) <= tolerance)


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple[tuple[IndexArray, IndexArray], ...]:
    """Rounds of disjoint `(p, q)` pairs, `p < q`, covering every pair once per sweep."""
    size = n + n % 2
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        if pairs:
            p, q = zip(*pairs, strict=True)
            rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def _off_diagonal_norm(a: FloatArray) -> float:
    return float(np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0)))


def jacobi_eigenvalues(
    matrix: npt.ArrayLike, tolerance: float = 1e-12, max_sweeps: int = 100
) -> FloatArray:
    """Diagonalize a real symmetric matrix by cyclic Jacobi rotations.

    Iteration stops once the off-diagonal Frobenius norm drops below
    *tolerance* (or below the rounding floor of the matrix, whichever is
    larger).

    Raises:
        ValueError: The matrix is not square and symmetric.
        ConvergenceFailureError: *max_sweeps* sweeps were not enough.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("Jacobi requires a symmetric matrix")
    n = a.shape[0]
    if n < 2:
        return np.diag(a).copy()

    floor = 64 * np.finfo(np.float64).eps * float(np.linalg.norm(a))
    threshold = max(tolerance, floor)
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off < threshold:
            logger.debug("Jacobi converged: n=%d, %d sweep(s), off-norm %.3e", n, sweep, off)
            return np.diag(a).copy()
        if sweep == max_sweeps:
            break
        for p_all, q_all in rounds:
            apq = a[p_all, q_all]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p_all[active], q_all[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            col_p, col_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = col_p * c - col_q * s
            a[:, q] = col_p * s + col_q * c
            row_p, row_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q
    raise ConvergenceFailureError(
        f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {_off_diagonal_norm(a):.3e})"
    )


def eigenvalues_symmetric(
    m: CoveringMatrix | npt.ArrayLike,
    method: EigenMethod | str | None = None,
    settings: Settings | None = None,
) -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending, with multiplicity clusters.

    Args:
        m: Covering matrix or any square symmetric array.
        method: `"jacobi"`, `"lapack"`, or `None` to pick Jacobi up to
            `jacobi_max_n` and LAPACK above it.
        settings: Tolerances (default: process-wide settings).

    Raises:
        ConvergenceFailureError: Jacobi exhausted its sweep budget.
    """
    cfg = settings or get_settings()
    a = m.as_float() if isinstance(m, CoveringMatrix) else np.asarray(m, dtype=np.float64)
    n = a.shape[0] if a.ndim else 0
    chosen = EigenMethod(method) if method is not None else (
        EigenMethod.JACOBI if n <= cfg.jacobi_max_n else EigenMethod.LAPACK
    )
    if chosen is EigenMethod.JACOBI:
        values = jacobi_eigenvalues(a, cfg.jacobi_tolerance, cfg.jacobi_max_sweeps)
    else:
        values = np.linalg.eigvalsh(a)
    return Spectrum.from_values(values, cfg.cluster_tolerance)
