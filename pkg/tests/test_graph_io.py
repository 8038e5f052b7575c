"""Tests for the edge-list and JSON graph formats."""

import json

import pytest

from cover_energy.errors import DuplicateEdgeError, GraphFormatError
from cover_energy.families import star_graph
from cover_energy.graph import (
    format_edge_list,
    format_graph_json,
    load_graph,
    new_graph,
    parse_edge_list,
    parse_graph_json,
)

P5_EDGE_LIST = """\
# length-2 star with two rays
5
0 1
0 2
1 3   # inner ray vertex to tip
2 4
"""


def test_parse_edge_list_with_comments():
    g = parse_edge_list(P5_EDGE_LIST)
    assert g == new_graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])


def test_format_edge_list_is_sorted_and_newline_terminated():
    g = new_graph(3, [(2, 1), (0, 1)])
    assert format_edge_list(g) == "3\n0 1\n1 2\n"


def test_format_then_parse_star():
    g = star_graph(4, ray_len=2)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edgeless_graph_edge_list():
    assert format_edge_list(new_graph(3, [])) == "3\n"
    assert parse_edge_list("3\n").m == 0


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "3 4\n0 1\n",
        "3\n0 1 2\n",
        "3\n0 x\n",
    ],
)
def test_malformed_edge_list(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_edge_list_duplicate_edge_surfaces_graph_error():
    with pytest.raises(DuplicateEdgeError):
        parse_edge_list("2\n0 1\n1 0\n")


def test_json_document_with_cover():
    loaded = parse_graph_json('{"n": 3, "edges": [[0, 1], [1, 2]], "cover": [1]}')
    assert loaded.graph == new_graph(3, [(0, 1), (1, 2)])
    assert loaded.cover == (1,)


def test_json_cover_is_optional():
    loaded = parse_graph_json('{"n": 2, "edges": [[0, 1]]}')
    assert loaded.cover is None


def test_format_graph_json():
    g = new_graph(3, [(1, 2), (0, 1)])
    doc = json.loads(format_graph_json(g, cover=(1,)))
    assert doc == {"n": 3, "edges": [[0, 1], [1, 2]], "cover": [1]}
    assert format_graph_json(g).endswith("\n")


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"edges": []}',
        '{"n": -1, "edges": []}',
        '{"n": 2, "edges": [[0, 1]], "extra": true}',
    ],
)
def test_invalid_graph_json(text):
    with pytest.raises(GraphFormatError):
        parse_graph_json(text)


def test_load_graph_picks_format_by_suffix(tmp_path):
    edges_file = tmp_path / "p5.g"
    edges_file.write_text(P5_EDGE_LIST)
    json_file = tmp_path / "p5.json"
    json_file.write_text('{"n": 5, "edges": [[0, 1], [0, 2], [1, 3], [2, 4]], "cover": [0]}')

    from_edges = load_graph(edges_file)
    from_json = load_graph(json_file)

    assert from_edges.graph == from_json.graph
    assert from_edges.cover is None
    assert from_json.cover == (0,)


def test_load_graph_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_graph(tmp_path / "missing.g")


@pytest.mark.parametrize("suffix", [".g", ".json"])
def test_load_graph_rejects_non_utf8_bytes(tmp_path, suffix):
    path = tmp_path / f"bad{suffix}"
    path.write_bytes(b"\xff\xfe2\n0 1\n")
    with pytest.raises(GraphFormatError, match="not UTF-8"):
        load_graph(path)


def test_load_graph_reads_utf8_comments(tmp_path):
    path = tmp_path / "p2.g"
    path.write_bytes("# λ-graph\n2\n0 1\n".encode())
    assert load_graph(path).graph.m == 1
