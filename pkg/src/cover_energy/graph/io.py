"""Read and write graphs as edge lists or JSON documents.

Edge-list format: the first non-comment line holds `n`; every further
non-comment line holds `u v` (0-based, whitespace-separated). Lines whose
first non-blank character is `#` are comments.

JSON format: `{"n": 5, "edges": [[0, 1], ...], "cover": [0]}` where `cover`
is optional.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from cover_energy.errors import GraphFormatError
from cover_energy.graph.core import new_graph
from cover_energy.graph.models import Graph


class GraphDocument(BaseModel):
    """Schema of the JSON graph format."""

    model_config = {"frozen": True, "extra": "forbid"}

    n: int = Field(ge=0, description="Vertex count")
    edges: list[tuple[int, int]] = Field(default_factory=list)
    cover: list[int] | None = Field(default=None, description="Optional cover vertex ids")


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed graph plus the cover that came with it, if any."""

    graph: Graph
    cover: tuple[int, ...] | None = None


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Raises:
        GraphFormatError: Missing header, malformed line, or non-integer token.
        GraphError: The parsed edges violate graph invariants.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {raw.strip()!r}")
        if n is None:
            if len(values) != 1:
                raise GraphFormatError(f"line {lineno}: header must be a single vertex count")
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        edges.append((values[0], values[1]))
    if n is None:
        raise GraphFormatError("empty edge list: missing vertex count")
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Render *g* in the edge-list format, edges in lexicographic order."""
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> LoadedGraph:
    """Parse the JSON graph format.

    Raises:
        GraphFormatError: The document does not match :class:`GraphDocument`.
        GraphError: The parsed edges violate graph invariants.
    """
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as exc:
        raise GraphFormatError(f"invalid graph JSON: {exc}")
    graph = new_graph(doc.n, doc.edges)
    cover = tuple(doc.cover) if doc.cover is not None else None
    return LoadedGraph(graph=graph, cover=cover)


def format_graph_json(g: Graph, cover: tuple[int, ...] | None = None) -> str:
    """Render *g* (and optionally a cover) as a newline-terminated JSON document."""
    doc: dict[str, object] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if cover is not None:
        doc["cover"] = list(cover)
    return json.dumps(doc) + "\n"


def load_graph(path: Path) -> LoadedGraph:
    """Load a graph file, choosing the format by suffix (`.json` or edge list).

    Raises:
        OSError: The file cannot be read.
        GraphFormatError: The content is not UTF-8 or cannot be parsed.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not UTF-8 text ({exc.reason} at byte {exc.start})")
    if path.suffix.lower() == ".json":
        return parse_graph_json(text)
    return LoadedGraph(graph=parse_edge_list(text))
