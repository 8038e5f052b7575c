"""Immutable graph value objects.

Vertices are dense 0-based integers. Edges are stored as sorted pairs
`(u, v)` with `u < v`; adjacency is derived once at construction.
"""

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from cover_energy.errors import SelfLoopError, VertexOutOfRangeError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the unordered pair `{u, v}` as a sorted tuple."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected loopless graph.

    Build instances with :func:`cover_energy.graph.new_graph`, which also
    rejects duplicate edges; the constructor itself only sees a set.

    Attributes:
        n: Vertex count.
        edges: Unordered vertex pairs, each stored as `(u, v)` with `u < v`.
        adjacency: Sorted neighbour tuple per vertex (derived).
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise VertexOutOfRangeError(self.n, 0)
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise VertexOutOfRangeError(w, self.n)
            if u == v:
                raise SelfLoopError(u)
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(s)) for s in neighbours))

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        """Edges in lexicographic order, as every serializer writes them."""
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)


class Path3(NamedTuple):
    """A path on three vertices `x - y - z` with `y` in the middle and `x < z`."""

    x: int
    y: int
    z: int

    def contains_any(self, members: frozenset[int] | set[int]) -> bool:
        return self.x in members or self.y in members or self.z in members


class Unreachable(enum.Enum):
    """Sentinel distance for a vertex with no path to the target set."""

    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE

Distance = int | Unreachable
