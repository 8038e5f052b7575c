"""The minimum-covering matrix: adjacency plus unit loops on the cover vertices."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from cover_energy.covering.models import CoverSet
from cover_energy.graph.models import Graph


@dataclass(frozen=True, eq=False)
class CoveringMatrix:
    """Symmetric 0/1 matrix with `a[i][j] = 1` for edges and `a[i][i] = 1` for cover vertices.

    The underlying array is read-only.
    """

    entries: npt.NDArray[np.int64]

    def __post_init__(self) -> None:
        a = self.entries
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"covering matrix must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("covering matrix must be symmetric")
        a.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def trace(self) -> int:
        return int(np.trace(self.entries))

    @property
    def frobenius_squared(self) -> int:
        return int(np.sum(self.entries * self.entries))

    def as_float(self) -> npt.NDArray[np.float64]:
        return self.entries.astype(np.float64)

    def to_list(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoveringMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


def build_covering_matrix(g: Graph, q: CoverSet) -> CoveringMatrix:
    """Adjacency matrix of *g* with 1 on the diagonal at every vertex of *q*.

    *q* only has to name vertices of *g*; it need not be a covering.
    """
    q.validate_for(g)
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if g.edges:
        u, v = np.array(g.sorted_edges(), dtype=np.intp).T
        a[u, v] = 1
        a[v, u] = 1
    if q.members:
        idx = np.array(q.members, dtype=np.intp)
        a[idx, idx] = 1
    return CoveringMatrix(a)
