"""Tests for graph construction, 3-path enumeration, distances and connectivity."""

from itertools import permutations
from math import comb

import networkx as nx
import pytest

from cover_energy.errors import (
    DuplicateEdgeError,
    GraphError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from cover_energy.families import gen_complete, gen_path, gen_random, star_graph
from cover_energy.graph import (
    UNREACHABLE,
    Graph,
    Path3,
    canonical_edge,
    distance_to_set,
    distances_to_set,
    enumerate_p3,
    is_connected,
    new_graph,
    pendant_vertices,
)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# ── new_graph ───────────────────────────────────────────────────────────────


def test_new_graph_builds_symmetric_adjacency():
    g = new_graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])

    assert g.n == 5
    assert g.m == 4
    assert g.neighbors(0) == (1, 2)
    for u, v in g.edges:
        assert v in g.neighbors(u)
        assert u in g.neighbors(v)
    assert pendant_vertices(g) == {3, 4}


def test_new_graph_canonicalises_edge_orientation():
    g = new_graph(3, [(2, 1), (1, 0)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g.has_edge(2, 1)
    assert canonical_edge(4, 2) == (2, 4)


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdgeError) as exc_info:
        new_graph(2, [(0, 1), (0, 1)])
    assert exc_info.value.edge == (0, 1)


def test_duplicate_edge_rejected_in_either_orientation():
    with pytest.raises(DuplicateEdgeError):
        new_graph(3, [(0, 1), (1, 0)])


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        new_graph(3, [(1, 1)])


@pytest.mark.parametrize("edge", [(0, 3), (-1, 0)])
def test_vertex_out_of_range_rejected(edge):
    with pytest.raises(VertexOutOfRangeError):
        new_graph(3, [edge])


def test_graph_errors_are_value_errors():
    with pytest.raises(ValueError):
        new_graph(2, [(0, 0)])
    assert issubclass(DuplicateEdgeError, GraphError)


def test_star_with_three_rays_of_length_two_has_seven_vertices():
    g = star_graph(3, ray_len=2)
    # m*n - m + 1 with n = 3 vertices per ray
    assert g.n == 3 * 3 - 3 + 1


# ── enumerate_p3 ────────────────────────────────────────────────────────────


def test_path_on_three_vertices_has_one_p3():
    assert enumerate_p3(gen_path(3)) == [Path3(0, 1, 2)]


def test_single_edge_has_no_p3():
    assert enumerate_p3(new_graph(2, [(0, 1)])) == []


def test_star_k13_has_three_p3_through_center():
    paths = enumerate_p3(star_graph(3))
    assert paths == [Path3(1, 0, 2), Path3(1, 0, 3), Path3(2, 0, 3)]


def test_p3_order_is_by_middle_vertex_then_ends():
    paths = enumerate_p3(gen_path(5))
    assert [p.y for p in paths] == [1, 2, 3]
    assert all(p.x < p.z for p in paths)


@pytest.mark.parametrize("seed", range(10))
def test_p3_count_matches_degree_formula_and_triple_brute_force(seed):
    g = gen_random(9, 0.4, seed)
    paths = enumerate_p3(g)

    assert len(paths) == sum(comb(g.degree(v), 2) for v in g.vertices())
    brute = {
        (min(x, z), y, max(x, z))
        for x, y, z in permutations(range(g.n), 3)
        if g.has_edge(x, y) and g.has_edge(y, z)
    }
    assert {tuple(p) for p in paths} == brute
    assert len(set(paths)) == len(paths)


# ── distances ───────────────────────────────────────────────────────────────


def test_distance_zero_on_cover_members():
    g = star_graph(2, ray_len=2)
    assert distance_to_set(g, {0}, 0) == 0


def test_leaf_of_length_two_star_is_at_distance_two():
    g = star_graph(4, ray_len=2)
    for tip in range(5, 9):
        assert distance_to_set(g, {0}, tip) == 2


def test_empty_target_is_unreachable():
    g = gen_path(4)
    assert distance_to_set(g, set(), 2) is UNREACHABLE
    assert distances_to_set(g, set()) == [UNREACHABLE] * 4


def test_other_component_is_unreachable():
    g = new_graph(4, [(0, 1), (2, 3)])
    assert distance_to_set(g, {0}, 3) is UNREACHABLE


def test_distance_to_set_rejects_unknown_vertex():
    with pytest.raises(VertexOutOfRangeError):
        distance_to_set(gen_path(3), {0}, 5)


@pytest.mark.parametrize("seed", range(8))
def test_multi_source_bfs_matches_networkx(seed):
    g = gen_random(12, 0.25, seed)
    q = {0, 5}
    h = _to_nx(g)
    expected = nx.multi_source_dijkstra_path_length(h, q)

    dist = distances_to_set(g, q)

    for v in g.vertices():
        if v in expected:
            assert dist[v] == expected[v]
            assert distance_to_set(g, q, v) == expected[v]
        else:
            assert dist[v] is UNREACHABLE
    for u, v in g.edges:
        du, dv = dist[u], dist[v]
        if du is not UNREACHABLE and dv is not UNREACHABLE:
            assert abs(du - dv) <= 1


# ── pendant / connectivity ──────────────────────────────────────────────────


def test_pendant_vertices():
    assert pendant_vertices(gen_path(5)) == {0, 4}
    assert pendant_vertices(gen_complete(4)) == set()
    assert pendant_vertices(star_graph(3, ray_len=2)) == {4, 5, 6}


def test_is_connected_examples():
    assert is_connected(gen_path(5))
    assert not is_connected(new_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(new_graph(0, []))
    assert is_connected(new_graph(1, []))
    assert not is_connected(new_graph(2, []))


@pytest.mark.parametrize("seed", range(10))
def test_is_connected_matches_networkx(seed):
    g = gen_random(10, 0.2, seed)
    assert is_connected(g) == nx.is_connected(_to_nx(g))
