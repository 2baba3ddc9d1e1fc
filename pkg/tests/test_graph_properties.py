"""Property tests: graph primitives and the hole oracle against brute force and networkx."""

from __future__ import annotations

from itertools import combinations

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tests.graph_oracles import has_hole_brute, has_hole_nx, random_graph, scale
from wcgen.core.graph import (
    Graph,
    all_shortest_paths,
    complement,
    is_chordless_path,
    shortest_path_length,
)
from wcgen.oracle import find_hole, is_weakly_chordal, verify_hole

PROPERTY_SETTINGS = settings(
    max_examples=scale(150, 500),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def small_graphs(draw: st.DrawFn, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@PROPERTY_SETTINGS
@given(g=small_graphs())
def test_complement_is_an_involution(g: Graph) -> None:
    c = complement(g)
    n = g.vertex_count
    assert c.edge_count == n * (n - 1) // 2 - g.edge_count
    assert complement(c) == g


@PROPERTY_SETTINGS
@given(g=small_graphs(), data=st.data())
def test_shortest_paths_are_chordless_and_minimal(g: Graph, data: st.DataObject) -> None:
    if g.vertex_count < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=2, max_size=2, unique=True))
    ps = all_shortest_paths(g, u, v)
    assert ps.length == shortest_path_length(g, u, v)
    for p in ps.paths:
        assert ps.length is not None
        assert p[0] == u and p[-1] == v
        assert len(p) == ps.length + 1
        assert is_chordless_path(g, p)
    assert len(set(ps.paths)) == len(ps.paths)


@PROPERTY_SETTINGS
@given(g=small_graphs())
def test_find_hole_matches_brute_force(g: Graph) -> None:
    hole = find_hole(g)
    assert (hole is not None) == has_hole_brute(g)
    if hole is not None:
        assert verify_hole(g, hole)


@PROPERTY_SETTINGS
@given(g=small_graphs())
def test_weak_chordality_is_symmetric_under_complement(g: Graph) -> None:
    assert is_weakly_chordal(g)[0] == is_weakly_chordal(complement(g))[0]


def test_find_hole_matches_networkx_on_random_graphs() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(scale(100, 500)):
        n = int(rng.integers(5, 11))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.7)))
        assert (find_hole(g) is not None) == has_hole_nx(g)
        assert (find_hole(complement(g)) is not None) == has_hole_nx(complement(g))
