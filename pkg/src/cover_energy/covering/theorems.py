"""Structural characterization of 3-coverings.

Edges that avoid Q must be 2-pendant, handle or triangle edges, pairwise
vertex-disjoint; every vertex falls into one of a fixed list of cases; no
vertex lies further than 2 from Q and those at distance 2 are pendant.
The checkers here return :class:`TheoremReport` witnesses instead of
raising, so the verification harness can collect counterexamples.
"""

from collections import defaultdict

from cover_energy.covering.models import (
    CoverSet,
    EdgeClass,
    EdgeClassification,
    TheoremReport,
    VertexCase,
    VertexCaseKind,
    Witness,
    WitnessKind,
)
from cover_energy.covering.search import is_3_covering
from cover_energy.errors import NotACoveringError, NotConnectedError, VertexOutOfRangeError
from cover_energy.graph.core import distances_to_set, enumerate_p3, is_connected, pendant_vertices
from cover_energy.graph.models import Edge, Graph, Unreachable

DISTANCE_THEOREMS = "1,2,5"
VERTEX_CASES_THEOREM = "4"
CHARACTERIZATION_THEOREM = "7"


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnectedError("theorem checks require a connected graph")


def _require_covering(g: Graph, q: CoverSet) -> None:
    if not is_3_covering(g, q):
        raise NotACoveringError(f"{list(q.members)} is not a 3-covering")


# ── Edges ────────────────────────────────────────────────────────────────────


def _base_classes(g: Graph, q: CoverSet, pendant: set[int], u: int, v: int) -> set[EdgeClass]:
    if u in q or v in q:
        return {EdgeClass.COVERED}
    classes: set[EdgeClass] = set()
    for x, y in ((u, v), (v, u)):
        if x in pendant and any(w in q for w in g.neighbors(y)):
            classes.add(EdgeClass.PENDANT2)
    q_of_u = {w for w in g.neighbors(u) if w in q}
    q_of_v = {w for w in g.neighbors(v) if w in q}
    if u not in pendant and v not in pendant:
        if any(w != y for w in q_of_u for y in q_of_v):
            classes.add(EdgeClass.HANDLE)
    if q_of_u & q_of_v:
        classes.add(EdgeClass.TRIANGLE)
    return classes


def classify_noncovered_edges(g: Graph, q: CoverSet) -> list[EdgeClassification]:
    """Classify every edge of *g* relative to *q*, in lexicographic edge order.

    *q* need not be a covering: edges that fit none of the permitted types,
    and any two non-covered edges sharing a vertex, come back as
    `VIOLATION` with reasons.
    """
    q.validate_for(g)
    pendant = pendant_vertices(g)
    edges = g.sorted_edges()
    classes = {e: _base_classes(g, q, pendant, *e) for e in edges}
    reasons: dict[Edge, list[str]] = defaultdict(list)

    for e, cs in classes.items():
        if not cs:
            reasons[e].append("non-covered edge is not a 2-pendant, handle or triangle edge")

    incident: dict[int, list[Edge]] = defaultdict(list)
    for e, cs in classes.items():
        if EdgeClass.COVERED not in cs:
            incident[e[0]].append(e)
            incident[e[1]].append(e)
    for w, es in sorted(incident.items()):
        if len(es) < 2:
            continue
        for e in es:
            others = ", ".join(f"{a}-{b}" for a, b in es if (a, b) != e)
            reasons[e].append(f"shares vertex {w} with non-covered edge {others}")

    result = []
    for e in edges:
        cs = set(classes[e])
        if reasons[e]:
            cs.add(EdgeClass.VIOLATION)
        result.append(EdgeClassification(edge=e, classes=frozenset(cs), reasons=tuple(reasons[e])))
    return result


def characterization_holds(g: Graph, q: CoverSet) -> bool:
    """True when no edge of *g* is a violation relative to *q*.

    On connected graphs with a 3-vertex path this agrees with
    :func:`is_3_covering`.

    Raises:
        NotConnectedError: *g* is disconnected.
    """
    _require_connected(g)
    return not any(c.is_violation for c in classify_noncovered_edges(g, q))


def check_characterization(g: Graph, q: CoverSet) -> TheoremReport:
    """Compare the edge characterization with the direct covering check.

    Returns a report whose witnesses are the violating edges (or the
    unhit 3-path) whenever the two verdicts disagree.
    """
    _require_connected(g)
    classified = classify_noncovered_edges(g, q)
    covering = is_3_covering(g, q)
    characterized = not any(c.is_violation for c in classified)
    if covering == characterized:
        return TheoremReport(theorem=CHARACTERIZATION_THEOREM)

    witnesses: list[Witness] = []
    if covering:
        for c in classified:
            if c.is_violation:
                witnesses.append(
                    Witness(
                        theorem=CHARACTERIZATION_THEOREM,
                        kind=WitnessKind.EDGE,
                        items=c.edge,
                        detail="valid covering but edge flagged: " + "; ".join(c.reasons),
                    )
                )
    else:
        members = q.as_frozenset()
        path = next(p for p in enumerate_p3(g) if not p.contains_any(members))
        witnesses.append(
            Witness(
                theorem=CHARACTERIZATION_THEOREM,
                kind=WitnessKind.PATH,
                items=tuple(path),
                detail="no edge flagged but this 3-path avoids Q",
            )
        )
    return TheoremReport(theorem=CHARACTERIZATION_THEOREM, witnesses=tuple(witnesses))


# ── Vertices ─────────────────────────────────────────────────────────────────


def _vertex_cases(
    g: Graph,
    q: CoverSet,
    pendant: set[int],
    by_edge: dict[Edge, EdgeClassification],
    v: int,
) -> frozenset[VertexCaseKind]:
    if v in q:
        return frozenset({VertexCaseKind.IN_Q})
    cases: set[VertexCaseKind] = set()
    neighbours = g.neighbors(v)
    if v in pendant:
        (w,) = neighbours
        if w in q:
            cases.add(VertexCaseKind.PENDANT_OF_1_PATH)
        elif any(x in q for x in g.neighbors(w)):
            cases.add(VertexCaseKind.PENDANT_OF_2_PATH)
        return frozenset(cases)

    q_neighbours = [w for w in neighbours if w in q]
    if q_neighbours and any(w in pendant and w not in q for w in neighbours):
        cases.add(VertexCaseKind.MIDDLE_OF_2_PENDANT_PATH)
    if len(q_neighbours) >= 2:
        cases.add(VertexCaseKind.V_PATH)
    for w in neighbours:
        c = by_edge[(v, w) if v < w else (w, v)]
        if EdgeClass.HANDLE in c.classes:
            cases.add(VertexCaseKind.HANDLE_MIDDLE_ENDPOINT)
        if EdgeClass.TRIANGLE in c.classes:
            cases.add(VertexCaseKind.TRIANGLE_EDGE_ENDPOINT)
    return frozenset(cases)


def classify_vertices(g: Graph, q: CoverSet) -> list[VertexCase]:
    """Cases satisfied by every vertex, in vertex order.

    Raises:
        NotACoveringError: *q* is not a 3-covering of *g*.
    """
    _require_covering(g, q)
    pendant = pendant_vertices(g)
    by_edge = {c.edge: c for c in classify_noncovered_edges(g, q)}
    return [VertexCase(v, _vertex_cases(g, q, pendant, by_edge, v)) for v in g.vertices()]


def classify_vertex(g: Graph, q: CoverSet, v: int) -> VertexCase:
    """Cases satisfied by vertex *v* relative to the 3-covering *q*.

    Raises:
        VertexOutOfRangeError: *v* is not a vertex of *g*.
        NotACoveringError: *q* is not a 3-covering of *g*.
    """
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(v, g.n)
    _require_covering(g, q)
    pendant = pendant_vertices(g)
    by_edge = {c.edge: c for c in classify_noncovered_edges(g, q)}
    return VertexCase(v, _vertex_cases(g, q, pendant, by_edge, v))


def check_vertex_cases(g: Graph, q: CoverSet) -> TheoremReport:
    """Report vertices that satisfy none of the cases (none exist for a valid covering)."""
    witnesses = tuple(
        Witness(
            theorem=VERTEX_CASES_THEOREM,
            kind=WitnessKind.VERTEX,
            items=(vc.vertex,),
            detail="vertex matches no case",
        )
        for vc in classify_vertices(g, q)
        if not vc.cases
    )
    return TheoremReport(theorem=VERTEX_CASES_THEOREM, witnesses=witnesses)


# ── Distances ────────────────────────────────────────────────────────────────


def check_distance_theorems(g: Graph, q: CoverSet) -> TheoremReport:
    """Check that no vertex is further than 2 from *q* and that distance-2 vertices are pendant.

    Also reports pendant vertices outside *q* that end no 1- or 2-pendant
    path (which would need distance 1 or 2).

    Raises:
        NotConnectedError: *g* is disconnected.
        NotACoveringError: *q* is not a 3-covering.
    """
    _require_connected(g)
    _require_covering(g, q)
    pendant = pendant_vertices(g)
    witnesses: list[Witness] = []
    for v, d in enumerate(distances_to_set(g, q)):
        far = isinstance(d, Unreachable) or d > 2
        shown = "unreachable" if isinstance(d, Unreachable) else str(d)
        if far:
            witnesses.append(
                Witness("1", WitnessKind.VERTEX, (v,), f"distance {shown} from Q exceeds 2")
            )
        elif d == 2 and v not in pendant:
            witnesses.append(
                Witness("2", WitnessKind.VERTEX, (v,), "distance 2 from Q but not pendant")
            )
        if far and v in pendant and v not in q:
            witnesses.append(
                Witness("5", WitnessKind.VERTEX, (v,), f"pendant vertex at distance {shown}")
            )
    return TheoremReport(theorem=DISTANCE_THEOREMS, witnesses=tuple(witnesses))
