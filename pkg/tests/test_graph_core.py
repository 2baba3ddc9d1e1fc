from __future__ import annotations

import pytest

from wcgen.core.fixtures import F4_LABELS, f1, f4, label_ids
from wcgen.core.graph import (
    EdgeUpdate,
    Graph,
    GraphError,
    all_shortest_paths,
    complement,
    connected_components,
    induced,
    is_chordless_path,
    is_connected,
    reachable,
    shortest_path_length,
)
from wcgen.core.fixtures import cycle, path


def test_make_graph_is_edgeless() -> None:
    g = Graph(5)
    assert g.vertex_count == 5
    assert g.edge_count == 0
    assert list(g.edges()) == []
    assert Graph(0).vertex_count == 0


def test_negative_vertex_count_rejected() -> None:
    with pytest.raises(GraphError):
        Graph(-1)


def test_add_and_remove_edge_report_no_ops() -> None:
    g = Graph(3)
    assert g.add_edge(0, 1) == EdgeUpdate.added
    assert g.add_edge(1, 0) == EdgeUpdate.already_present
    assert g.edge_count == 1
    assert g.remove_edge(0, 2) == EdgeUpdate.absent
    assert g.remove_edge(1, 0) == EdgeUpdate.removed
    assert g.edge_count == 0


def test_invalid_vertices_and_self_loops() -> None:
    g = Graph(3)
    with pytest.raises(GraphError, match="self-loop"):
        g.add_edge(1, 1)
    with pytest.raises(GraphError, match="out of range"):
        g.add_edge(0, 3)
    with pytest.raises(GraphError):
        g.neighbors(-1)


def test_neighborhoods() -> None:
    g = f1()
    assert g.neighbors(5) == {3, 4, 6}
    assert g.closed_neighbors(5) == {3, 4, 5, 6}
    assert g.common_neighbors(3, 4) == {0, 5}
    assert g.degree(4) == 3


def test_edges_are_normalized_and_sorted() -> None:
    g = Graph.from_edges(4, [(3, 1), (2, 0), (1, 0)])
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 3)]


def test_copy_is_independent_and_equal() -> None:
    g = f1()
    h = g.copy()
    assert h == g
    h.add_edge(3, 4)
    assert h != g
    assert g.edge_count == 10


def test_complement_edge_counts() -> None:
    g = cycle(5)
    c = complement(g)
    assert c.edge_count == 10 - 5
    assert complement(c) == g


def test_induced_uses_sorted_ids() -> None:
    g = f1()
    h, mapping = induced(g, [7, 4, 3])
    assert mapping == {3: 0, 4: 1, 7: 2}
    assert list(h.edges()) == [(1, 2)]


def test_reachable_worked_example_separation() -> None:
    assert not reachable(path(3), 0, 2, excluded={1})
    assert not reachable(f1(), 3, 4, excluded={0, 5})
    ids = label_ids(F4_LABELS)
    assert reachable(f4(), ids["u"], ids["v"], excluded={ids["a"]})


def test_reachable_rejects_excluded_endpoint() -> None:
    with pytest.raises(GraphError):
        reachable(path(3), 0, 2, excluded={0})


def test_shortest_path_length() -> None:
    assert shortest_path_length(cycle(6), 0, 3) == 3
    assert shortest_path_length(Graph(2), 0, 1) is None
    assert shortest_path_length(cycle(6), 0, 2, excluded={1}) == 4
    assert shortest_path_length(cycle(6), 0, 3, excluded={1, 5}) is None


def test_all_shortest_paths_on_c6() -> None:
    ps = all_shortest_paths(cycle(6), 0, 3)
    assert ps.length == 3
    assert set(ps.paths) == {(0, 1, 2, 3), (0, 5, 4, 3)}
    assert not ps.truncated
    assert ps.internal_vertices() == {1, 2, 4, 5}


def test_all_shortest_paths_cap_and_bound() -> None:
    ps = all_shortest_paths(cycle(6), 0, 3, cap=1)
    assert len(ps) == 1
    assert ps.truncated

    bounded = all_shortest_paths(cycle(6), 0, 3, max_length=2)
    assert not bounded
    assert bounded.length is None

    unreachable = all_shortest_paths(Graph(3), 0, 2)
    assert len(unreachable) == 0


def test_all_shortest_paths_needs_distinct_endpoints() -> None:
    with pytest.raises(GraphError):
        all_shortest_paths(path(2), 1, 1)


def test_is_chordless_path() -> None:
    g = cycle(5)
    assert is_chordless_path(g, [0, 1, 2, 3])
    g.add_edge(0, 2)
    assert not is_chordless_path(g, [0, 1, 2, 3])
    with pytest.raises(GraphError, match="non-edge"):
        is_chordless_path(g, [0, 3])
    with pytest.raises(GraphError, match="repeats"):
        is_chordless_path(g, [0, 1, 0])


def test_connected_components_order() -> None:
    g = Graph.from_edges(6, [(4, 5), (0, 2)])
    assert connected_components(g) == [{0, 2}, {1}, {3}, {4, 5}]
    assert connected_components(path(5), excluded={2}) == [{0, 1}, {3, 4}]
    assert not is_connected(g)
    assert is_connected(Graph(1))
