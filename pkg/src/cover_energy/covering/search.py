"""Covering checks and minimum-cover search.

A k-covering is a hitting set for a family of vertex subsets: the edges
(k = 2) or the 3-vertex paths (k = 3). The exhaustive search tests subsets
against that family as bitmasks; the branch and bound works on the vertices
left outside the cover.
"""

import logging
from itertools import combinations

from cover_energy.config import get_settings
from cover_energy.covering.models import CoverKind, CoverSet
from cover_energy.errors import SizeBoundExceededError
from cover_energy.graph.core import enumerate_p3
from cover_energy.graph.models import Graph

logger = logging.getLogger(__name__)


def is_3_covering(g: Graph, q: CoverSet) -> bool:
    """True when every 3-vertex path of *g* contains a member of *q*.

    Direct check over :func:`enumerate_p3`; every other covering routine is
    tested against this one.
    """
    q.validate_for(g)
    members = q.as_frozenset()
    return all(p.contains_any(members) for p in enumerate_p3(g))


def is_2_covering(g: Graph, q: CoverSet) -> bool:
    """True when *q* is a vertex cover (every edge meets *q*)."""
    q.validate_for(g)
    return all(u in q or v in q for u, v in g.edges)


def _hitting_family(g: Graph, k: int) -> list[int]:
    """Bitmask per edge (k = 2) or per 3-vertex path (k = 3), in canonical order."""
    if k == 2:
        return [(1 << u) | (1 << v) for u, v in g.sorted_edges()]
    return [(1 << p.x) | (1 << p.y) | (1 << p.z) for p in enumerate_p3(g)]


def _members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


# ── Exhaustive search ────────────────────────────────────────────────────────


def min_covering_bruteforce(g: Graph, k: int = 3, max_n: int | None = None) -> CoverSet:
    """Minimum k-covering by subset enumeration.

    Subsets are tried in increasing size and lexicographic order within a
    size, so among minimum coverings the lexicographically smallest member
    list is returned.

    Args:
        g: Graph to cover.
        k: 2 for a vertex cover, 3 for a 3-path covering.
        max_n: Order bound (default: `Settings.max_bruteforce_n`).

    Raises:
        SizeBoundExceededError: `g.n` exceeds the bound.
    """
    kind = CoverKind.from_k(k)
    bound = get_settings().max_bruteforce_n if max_n is None else max_n
    if g.n > bound:
        raise SizeBoundExceededError(g.n, bound)
    family = _hitting_family(g, k)
    if not family:
        return CoverSet.of((), kind)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if all(t & mask for t in family):
                logger.debug("Brute force found %s-covering of size %d", k, size)
                return CoverSet.of(subset, kind)
    raise AssertionError("the full vertex set always covers")  # pragma: no cover


def min_3_covering_bruteforce(g: Graph, max_n: int | None = None) -> CoverSet:
    """Minimum 3-covering by exhaustive subset search (lexicographic tie-break)."""
    return min_covering_bruteforce(g, 3, max_n)


def min_2_covering_bruteforce(g: Graph, max_n: int | None = None) -> CoverSet:
    """Minimum vertex cover by exhaustive subset search (lexicographic tie-break)."""
    return min_covering_bruteforce(g, 2, max_n)


# ── Branch and bound ─────────────────────────────────────────────────────────


def _greedy_cover(family: list[int]) -> int:
    """Repeatedly take the vertex hitting the most unhit sets (ties → smallest id)."""
    chosen = 0
    remaining = list(family)
    while remaining:
        counts: dict[int, int] = {}
        for t in remaining:
            for v in _members(t):
                counts[v] = counts.get(v, 0) + 1
        best = min(counts, key=lambda v: (-counts[v], v))
        chosen |= 1 << best
        remaining = [t for t in remaining if not t & chosen]
    return chosen


class _BranchAndBound:
    """Depth-first search for the largest vertex set left outside the cover.

    A set *Q* is a k-covering exactly when the graph induced on the vertices
    outside *Q* has maximum degree at most ``k - 2``, so the search grows that
    kept set instead of the cover. Each vertex is kept, dropped (it joins the
    cover) or still undecided.

    Before branching, forced moves run to a fixpoint: an undecided vertex is
    dropped when keeping it would break the degree limit, and kept when it
    has at most one live neighbour. The search branches on the undecided
    vertex of largest live degree. For k = 3 the keep branch also fixes which
    neighbour, if any, becomes its kept partner, and drops every other
    undecided neighbour of the pair.

    Pruning uses vertex-disjoint stars ``K(1, k - 1)`` in the live graph: each
    one needs a dropped undecided vertex, so the kept set can grow by at most
    the undecided count minus the packing size.
    """

    def __init__(self, g: Graph, k: int, family: list[int]) -> None:
        self.limit = k - 2
        self.adj = [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]
        self.full = (1 << g.n) - 1
        self.best_kept = self.full & ~_greedy_cover(family)
        self.best_size = self.best_kept.bit_count()
        self.nodes = 0

    @property
    def cover(self) -> int:
        return self.full & ~self.best_kept

    def _propagate(self, kept: int, undecided: int) -> tuple[int, int]:
        adj, limit = self.adj, self.limit
        changed = True
        while changed:
            changed = False
            for u in _members(undecided):
                bit = 1 << u
                kept_nb = adj[u] & kept
                if kept_nb.bit_count() > limit or any(
                    (adj[w] & kept).bit_count() >= limit for w in _members(kept_nb)
                ):
                    undecided &= ~bit
                    changed = True
                    continue
                # a vertex with at most one live neighbour can replace that neighbour
                if (adj[u] & (kept | undecided)).bit_count() <= 1:
                    kept |= bit
                    undecided &= ~bit
                    changed = True
        return kept, undecided

    def _packing(self, live: int) -> int:
        """Greedy count of vertex-disjoint ``K(1, limit + 1)`` stars inside *live*."""
        used = 0
        count = 0
        for c in _members(live):
            if used >> c & 1:
                continue
            free = self.adj[c] & live & ~used
            if free.bit_count() <= self.limit:
                continue
            star = 1 << c
            for _ in range(self.limit + 1):
                low = free & -free
                star |= low
                free ^= low
            used |= star
            count += 1
        return count

    def search(self, kept: int, undecided: int) -> None:
        self.nodes += 1
        kept, undecided = self._propagate(kept, undecided)
        size = kept.bit_count()
        if not undecided:
            if size > self.best_size:
                self.best_kept, self.best_size = kept, size
            return
        live = kept | undecided
        if size + undecided.bit_count() - self._packing(live) <= self.best_size:
            return
        u = max(_members(undecided), key=lambda v: ((self.adj[v] & live).bit_count(), -v))
        bit = 1 << u
        open_nb = self.adj[u] & undecided
        rest = undecided & ~bit
        if self.limit == 0 or self.adj[u] & kept:
            # u is kept alone, or completes a pair with its kept neighbour
            self.search(kept | bit, rest)
        else:
            self.search(kept | bit, rest & ~open_nb)
            for w in _members(open_nb):
                if self.adj[w] & kept:
                    continue
                pair = bit | 1 << w
                self.search(kept | pair, rest & ~open_nb & ~self.adj[w])
        self.search(kept, rest)


def min_covering_exact(g: Graph, k: int = 3) -> CoverSet:
    """Minimum k-covering by branch and bound (no order bound; practical up to n ≈ 60)."""
    kind = CoverKind.from_k(k)
    family = _hitting_family(g, k)
    if not family:
        return CoverSet.of((), kind)
    bb = _BranchAndBound(g, k, family)
    bb.search(0, bb.full)
    logger.debug(
        "Branch and bound: n=%d, %d sets, %d nodes, optimum %d",
        g.n,
        len(family),
        bb.nodes,
        g.n - bb.best_size,
    )
    return CoverSet.of(_members(bb.cover), kind)


def min_3_covering_exact(g: Graph) -> CoverSet:
    """Minimum 3-covering by branch and bound over the vertices kept outside it."""
    return min_covering_exact(g, 3)


def min_2_covering_exact(g: Graph) -> CoverSet:
    """Minimum vertex cover by branch and bound over the independent set it leaves."""
    return min_covering_exact(g, 2)
