"""Two-pair generator: start from a random labeled tree and keep adding two-pair edges.

Adding the edge of a two-pair keeps a graph weakly chordal, and every weakly chordal graph
that is not a clique has one, so this baseline never gets stuck and never needs an oracle.
"""

from __future__ import annotations

import logging
import time
from itertools import combinations

import networkx as nx
import numpy as np

from wcgen.core.events import log_event
from wcgen.core.graph import Graph, connected_components
from wcgen.generation.fsm import GenerationFSM
from wcgen.generation.models import GenerationError, GenParams, GenTrace, GenTimings
from wcgen.oracle import is_two_pair

logger = logging.getLogger("wcgen.baseline")


def _non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(g.vertices(), 2) if not g.has_edge(u, v)]


def find_random_two_pair(g: Graph, rng: np.random.Generator) -> tuple[int, int] | None:
    """Uniform over the two-pairs of g: the first hit of a uniformly shuffled pair scan."""

    pairs = _non_edges(g)
    for i in rng.permutation(len(pairs)):
        u, v = pairs[int(i)]
        if is_two_pair(g, u, v):
            return u, v
    return None


def random_labeled_tree(n: int, rng: np.random.Generator) -> Graph:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, ((int(a), int(b)) for a, b in tree.edges()))


def generate_two_pair_method(
    params: GenParams,
    rng: np.random.Generator,
    *,
    timings: GenTimings | None = None,
) -> tuple[Graph, GenTrace]:
    trace = GenTrace(params=params)
    fsm = GenerationFSM(trace)

    started = time.perf_counter()
    g = random_labeled_tree(params.n, rng)
    if timings is not None:
        timings.add_phase("tree", time.perf_counter() - started)
    trace.tree_node_count = params.n
    log_event(logger, "tree_grown", k_target=params.n, node_count=params.n, source="pruefer")
    trace.initial_edge_count = g.edge_count
    fsm.advance("tree_done")
    fsm.advance("start_inserting")

    started = time.perf_counter()
    while g.edge_count < params.m:
        query_started = time.perf_counter()
        pair = find_random_two_pair(g, rng)
        if timings is not None:
            timings.query_times.append(time.perf_counter() - query_started)
        if pair is None:
            raise GenerationError(f"no two-pair in a non-complete graph at m={g.edge_count}")
        g.add_edge(*pair)
        trace.attempts += 1
        trace.fallback_two_pair_insertions += 1
        trace.two_pair_pairs.append(pair)
    if timings is not None:
        timings.add_phase("insert", time.perf_counter() - started)

    fsm.advance("finish")
    return g, trace


def recognize_by_two_pairs(g: Graph) -> bool:
    """Weak chordality by repeated two-pair insertion; a weakly chordal graph reaches a clique.

    Components are joined by a bridge when no two-pair is left, which changes nothing since a
    bridge lies on no hole and no antihole.
    """

    h = g.copy()
    while not h.is_complete():
        pair = next((p for p in _non_edges(h) if is_two_pair(h, *p)), None)
        if pair is None:
            comps = connected_components(h)
            if len(comps) < 2:
                return False
            pair = (min(comps[0]), min(comps[1]))
        h.add_edge(*pair)
    return True
