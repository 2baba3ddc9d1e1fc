"""Phase 1: a random tree with maximum degree 4 and no two adjacent degree-4 nodes."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from wcgen.core.events import log_event
from wcgen.core.graph import Graph, connected_components
from wcgen.rng import choice_index

logger = logging.getLogger("wcgen.tree")

MAX_DEGREE = 4


@dataclass(frozen=True, slots=True)
class TreeGraph:
    graph: Graph
    rng_seed: int | None = None

    @property
    def node_count(self) -> int:
        return self.graph.vertex_count


def check_tree_invariants(t: TreeGraph) -> list[str]:
    """Names of violated invariants; empty when `t` is a valid bounded-degree tree."""

    g = t.graph
    problems: list[str] = []
    if g.vertex_count < 1:
        problems.append("empty")
        return problems
    if g.edge_count != g.vertex_count - 1 or len(connected_components(g)) != 1:
        problems.append("not_a_tree")
    if any(g.degree(v) > MAX_DEGREE for v in g.vertices()):
        problems.append("degree_above_4")
    if any(g.degree(a) == MAX_DEGREE and g.degree(b) == MAX_DEGREE for a, b in g.edges()):
        problems.append("adjacent_degree_4")
    return problems


def separate_adjacent_degree4(t: TreeGraph) -> TreeGraph:
    """Subdivide every edge joining two degree-4 nodes.

    Subdivision keeps both endpoint degrees, so one pass over a snapshot is enough.
    """

    g = t.graph.copy()
    bad = [(a, b) for a, b in g.edges() if g.degree(a) == MAX_DEGREE and g.degree(b) == MAX_DEGREE]
    for a, b in bad:
        x = g.add_vertex()
        g.remove_edge(a, b)
        g.add_edge(a, x)
        g.add_edge(x, b)
    if bad:
        log_event(logger, "degree4_separated", subdivisions=len(bad), node_count=g.vertex_count)
    return TreeGraph(graph=g, rng_seed=t.rng_seed)


def grow_tree(
    k_target: int,
    rng: np.random.Generator,
    *,
    split_probability: float = 0.5,
    seed: int | None = None,
) -> TreeGraph:
    if k_target < 1:
        raise ValueError(f"k_target must be >= 1, got {k_target}")
    if not 0.0 <= split_probability <= 1.0:
        raise ValueError(f"split_probability must be within [0, 1], got {split_probability}")

    g = Graph(1)
    # Edge list kept in insertion order so edge picks are reproducible per seed.
    edges: list[tuple[int, int]] = []
    splits = 0
    while g.vertex_count < k_target:
        if edges and rng.random() < split_probability:
            i = choice_index(rng, len(edges))
            a, b = edges[i]
            x = g.add_vertex()
            g.remove_edge(a, b)
            g.add_edge(a, x)
            g.add_edge(x, b)
            edges[i] = (a, x)
            edges.append((x, b))
            splits += 1
        else:
            open_nodes = [v for v in g.vertices() if g.degree(v) < MAX_DEGREE]
            parent = open_nodes[choice_index(rng, len(open_nodes))]
            x = g.add_vertex()
            g.add_edge(parent, x)
            edges.append((parent, x))

    log_event(logger, "tree_grown", k_target=k_target, node_count=g.vertex_count, splits=splits)
    return separate_adjacent_degree4(TreeGraph(graph=g, rng_seed=seed))
