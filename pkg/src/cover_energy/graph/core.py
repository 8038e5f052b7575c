"""Graph construction and the structural queries the covering and spectral code relies on."""

from collections import deque
from collections.abc import Collection, Iterable
from itertools import combinations

from cover_energy.errors import DuplicateEdgeError, SelfLoopError, VertexOutOfRangeError
from cover_energy.graph.models import UNREACHABLE, Distance, Edge, Graph, Path3, canonical_edge


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Args:
        n: Number of vertices; ids run over `[0, n)`.
        edges: Vertex pairs in any orientation.

    Returns:
        Graph with derived adjacency.

    Raises:
        SelfLoopError: An edge has equal endpoints.
        DuplicateEdgeError: The same unordered pair appears twice.
        VertexOutOfRangeError: An endpoint lies outside `[0, n)` (or `n < 0`).
    """
    if n < 0:
        raise VertexOutOfRangeError(n, 0)
    seen: set[Edge] = set()
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(u, v)
        seen.add(e)
    return Graph(n=n, edges=frozenset(seen))


def enumerate_p3(g: Graph) -> list[Path3]:
    """List every path on three vertices exactly once.

    Paths are grouped by middle vertex in increasing order; within a middle
    vertex `y` the ends `(x, z)` follow lexicographic order with `x < z`.
    The length is `sum(C(deg(y), 2))`.
    """
    return [Path3(x, y, z) for y in g.vertices() for x, z in combinations(g.neighbors(y), 2)]


def distances_to_set(g: Graph, q: Collection[int]) -> list[Distance]:
    """Multi-source BFS hop counts from every vertex to its nearest member of *q*."""
    dist: list[Distance] = [UNREACHABLE] * g.n
    frontier: deque[int] = deque()
    for s in q:
        if dist[s] is UNREACHABLE:
            dist[s] = 0
            frontier.append(s)
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        assert isinstance(du, int)
        for w in g.neighbors(u):
            if dist[w] is UNREACHABLE:
                dist[w] = du + 1
                frontier.append(w)
    return dist


def distance_to_set(g: Graph, q: Collection[int], v: int) -> Distance:
    """Shortest hop count from *v* to the nearest member of *q*.

    Returns 0 when `v` is in *q* and :data:`UNREACHABLE` when no member of
    *q* lies in the component of *v* (in particular when *q* is empty).

    Raises:
        VertexOutOfRangeError: *v* is not a vertex of *g*.
    """
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(v, g.n)
    if v in q:
        return 0
    targets = set(q)
    if not targets:
        return UNREACHABLE
    seen = {v}
    frontier: deque[tuple[int, int]] = deque([(v, 0)])
    while frontier:
        u, d = frontier.popleft()
        for w in g.neighbors(u):
            if w in seen:
                continue
            if w in targets:
                return d + 1
            seen.add(w)
            frontier.append((w, d + 1))
    return UNREACHABLE


def pendant_vertices(g: Graph) -> set[int]:
    """Vertices of degree exactly one."""
    return {v for v in g.vertices() if g.degree(v) == 1}


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (the empty graph counts as connected)."""
    if g.n == 0:
        return True
    return all(d is not UNREACHABLE for d in distances_to_set(g, (0,)))
