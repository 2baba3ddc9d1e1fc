from __future__ import annotations

from itertools import chain, combinations

import numpy as np
import pytest

from tests.graph_oracles import random_weakly_chordal, scale
from wcgen.core.fixtures import (
    F4_LABELS,
    GADGET_CROSS_EDGES,
    GADGET_LABELS,
    f1,
    f2,
    f3,
    f4,
    gadget,
    label_ids,
    path,
)
from wcgen.core.graph import Graph, GraphError, all_shortest_paths, is_chordless_path
from wcgen.generation.inserter import (
    alternate_longer_path,
    case1_separated,
    compute_scope,
    forbidden_configuration,
    scoped_shortest_paths,
    try_insert,
)
from wcgen.generation.models import CaseLabel, GenTimings, VerdictOutcome
from wcgen.oracle import find_hole, is_weakly_chordal

F4 = label_ids(F4_LABELS)
GADGET = label_ids(GADGET_LABELS)


def _f1_plus_34() -> Graph:
    g = f1()
    g.add_edge(3, 4)
    return g


def _detour() -> Graph:
    """One P3 u-a-b-v plus the chordless detour u-c-d-e-v; d is adjacent to both a and b."""

    u, v, a, b, c, d, e = range(7)
    return Graph.from_edges(
        7,
        [(u, a), (a, b), (b, v), (u, c), (c, d), (d, e), (e, v), (a, d), (b, d)],
    )


def test_scope_of_the_worked_example() -> None:
    scope = compute_scope(_f1_plus_34(), 3, 6)
    assert scope.common == {5}
    assert scope.aux_nodes == {0, 2, 3, 4, 6, 7}
    assert scope.aux_graph.vertex_count == 6


def test_scope_of_f4() -> None:
    scope = compute_scope(f4(), F4["u"], F4["v"])
    assert scope.common == {F4["a"]}
    assert scope.aux_nodes == {F4[x] for x in "uvbcde"}


def test_scope_without_common_neighbors_is_the_whole_graph() -> None:
    g = f2()
    scope = compute_scope(g, GADGET["u"], GADGET["v"])
    assert not scope.common
    assert scope.aux_nodes == set(g.vertices())
    assert scope.aux_graph is g


def test_scope_rejects_existing_edges() -> None:
    with pytest.raises(GraphError):
        compute_scope(f1(), 0, 3)


def test_case1_separation() -> None:
    assert case1_separated(compute_scope(f1(), 3, 4))
    assert not case1_separated(compute_scope(_f1_plus_34(), 3, 6))
    assert not case1_separated(compute_scope(f4(), F4["u"], F4["v"]))
    with pytest.raises(GraphError):
        case1_separated(compute_scope(f2(), GADGET["u"], GADGET["v"]))


def test_scoped_shortest_paths() -> None:
    ps = scoped_shortest_paths(compute_scope(_f1_plus_34(), 3, 6))
    assert ps.paths == ((3, 4, 7, 6),)

    two = scoped_shortest_paths(compute_scope(f2(), GADGET["u"], GADGET["v"]))
    assert two.length == 3
    assert len(two) == 2

    long = scoped_shortest_paths(compute_scope(f4(), F4["u"], F4["v"]))
    assert long.length == 4
    named = {tuple(F4_LABELS[x] for x in p) for p in long.paths}
    assert named == {("u", "c", "d", "b", "v"), ("u", "c", "d", "e", "v")}


def test_forbidden_configuration_on_f2_and_f3() -> None:
    u, v = GADGET["u"], GADGET["v"]
    witness = forbidden_configuration(f2(), all_shortest_paths(f2(), u, v))
    assert witness is not None
    assert set(witness) == set(range(6))
    assert forbidden_configuration(f3(), all_shortest_paths(f3(), u, v)) is None
    single = all_shortest_paths(path(4), 0, 3)
    assert forbidden_configuration(path(4), single) is None


def test_forbidden_configuration_needs_p3s() -> None:
    g = path(5)
    with pytest.raises(GraphError):
        forbidden_configuration(g, all_shortest_paths(g, 0, 4))


def test_forbidden_configuration_matches_the_oracle_on_all_gadgets() -> None:
    u, v = GADGET["u"], GADGET["v"]
    fired: list[tuple[tuple[str, str], ...]] = []
    subsets = chain.from_iterable(combinations(GADGET_CROSS_EDGES, k) for k in range(5))
    for cross in subsets:
        g = gadget(cross)
        forbidden = forbidden_configuration(g, all_shortest_paths(g, u, v)) is not None
        h = g.copy()
        h.add_edge(u, v)
        expected = is_weakly_chordal(g)[0] and not is_weakly_chordal(h)[0]
        assert forbidden == expected, cross
        if forbidden:
            fired.append(cross)
    assert fired == [(("a", "c"), ("b", "d"))]


def test_alternate_longer_path_finds_the_detour() -> None:
    g = _detour()
    ps = all_shortest_paths(g, 0, 1)
    assert ps.paths == ((0, 2, 3, 1),)
    alt = alternate_longer_path(g, ps, 0, 1)
    assert alt == (0, 4, 5, 6, 1)
    assert alt is not None and is_chordless_path(g, alt)


def test_alternate_longer_path_none_cases() -> None:
    g = _f1_plus_34()
    scoped = scoped_shortest_paths(compute_scope(g, 3, 6))
    assert alternate_longer_path(g, scoped, 3, 6, frozenset({5})) is None

    p = path(4)
    assert alternate_longer_path(p, all_shortest_paths(p, 0, 3), 0, 3) is None


def test_worked_example_end_to_end() -> None:
    g = f1()
    g, first = try_insert(g, 3, 4, gate=True)
    assert first.outcome == VerdictOutcome.inserted
    assert first.case_label == CaseLabel.separated

    g, second = try_insert(g, 3, 6, gate=True)
    assert second.outcome == VerdictOutcome.inserted
    assert second.case_label == CaseLabel.common_single_path
    assert g.edge_count == 12
    assert is_weakly_chordal(g)[0]


def test_f4_is_rejected_for_its_long_path() -> None:
    g = f4()
    g, verdict = try_insert(g, F4["u"], F4["v"])
    assert verdict.outcome == VerdictOutcome.rejected_long_shortest_path
    named = tuple(F4_LABELS[x] for x in verdict.witness)
    assert named in {("u", "c", "d", "e", "v"), ("u", "c", "d", "b", "v")}
    assert g.edge_count == f4().edge_count
    assert is_weakly_chordal(g)[0]
    h = g.copy()
    h.add_edge(F4["u"], F4["v"])
    assert not is_weakly_chordal(h)[0]


def test_f2_is_rejected_and_f3_accepted() -> None:
    u, v = GADGET["u"], GADGET["v"]
    _, verdict = try_insert(f2(), u, v, gate=True)
    assert verdict.outcome == VerdictOutcome.rejected_forbidden_config
    assert verdict.case_label == CaseLabel.no_common_multiple_paths

    g, ok = try_insert(f3(), u, v, gate=True)
    assert ok.outcome == VerdictOutcome.inserted
    assert ok.case_label == CaseLabel.no_common_multiple_paths
    assert g.has_edge(u, v)


def test_detour_is_rejected_as_alternate_longer_path() -> None:
    g, verdict = try_insert(_detour(), 0, 1)
    assert verdict.outcome == VerdictOutcome.rejected_alternate_longer_path
    assert verdict.case_label == CaseLabel.no_common_single_path
    assert not g.has_edge(0, 1)


def test_existing_edge_and_bad_vertices() -> None:
    _, verdict = try_insert(f1(), 0, 3)
    assert verdict.outcome == VerdictOutcome.rejected_existing_edge
    assert verdict.case_label == CaseLabel.not_applicable
    with pytest.raises(GraphError):
        try_insert(f1(), 0, 8)
    with pytest.raises(GraphError):
        try_insert(f1(), 2, 2)


def test_disconnected_pair_is_joined() -> None:
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    g, verdict = try_insert(g, 1, 2)
    assert verdict.inserted
    assert verdict.case_label == CaseLabel.no_common_single_path


def test_single_isolated_p3_inserts_immediately() -> None:
    g, verdict = try_insert(path(4), 0, 3, gate=True)
    assert verdict.inserted
    assert verdict.case_label == CaseLabel.no_common_single_path
    assert g.edge_count == 4


def test_timings_are_collected() -> None:
    timings = GenTimings()
    try_insert(f1(), 3, 4, timings=timings)
    try_insert(f4(), F4["u"], F4["v"], timings=timings)
    assert len(timings.query_times) == 2
    assert len(timings.mutation_times) == 1


def test_case_labels_follow_the_common_neighborhood() -> None:
    rng = np.random.default_rng(9)
    for seed in range(scale(30, 200)):
        n = int(rng.integers(6, 14))
        g = random_weakly_chordal(seed, n, min(n * (n - 1) // 2, int(rng.integers(n - 1, 3 * n))))
        if g.is_complete():
            continue
        non_edges = [(a, b) for a, b in combinations(range(n), 2) if not g.has_edge(a, b)]
        a, b = non_edges[int(rng.integers(len(non_edges)))]
        has_common = bool(g.common_neighbors(a, b))
        before = g.edge_count
        g, verdict = try_insert(g, a, b, gate=True)
        assert verdict.case_label.value.startswith("1" if has_common else "2")
        assert g.edge_count == before + (1 if verdict.inserted else 0)
        assert is_weakly_chordal(g)[0]


def test_long_path_rejections_are_justified() -> None:
    rng = np.random.default_rng(17)
    checked = 0
    for seed in range(scale(40, 300)):
        n = int(rng.integers(6, 16))
        g = random_weakly_chordal(seed, n, int(rng.integers(n - 1, 2 * n)))
        for a, b in combinations(range(n), 2):
            if g.has_edge(a, b):
                continue
            _, verdict = try_insert(g, a, b)
            if verdict.inserted:
                g.remove_edge(a, b)
            if verdict.outcome != VerdictOutcome.rejected_long_shortest_path:
                continue
            assert len(verdict.witness) >= 5
            assert is_chordless_path(g, verdict.witness)
            h = g.copy()
            h.add_edge(a, b)
            assert find_hole(h) is not None
            checked += 1
    assert checked > 0



def _two_sided_detour() -> Graph:
    """Three P3s from 0 to 4 and the chordless path 0-1-2-3-4 hidden behind them."""

    return Graph.from_edges(
        7,
        [
            (0, 1), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3),
            (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6),
        ],
    )


def test_alternate_longer_path_is_not_the_shortest_in_its_variant() -> None:
    g = _two_sided_detour()
    assert is_weakly_chordal(g)[0]
    ps = all_shortest_paths(g, 0, 4)
    assert set(ps.paths) == {(0, 1, 6, 4), (0, 5, 3, 4), (0, 5, 6, 4)}
    assert forbidden_configuration(g, ps) is None

    alt = alternate_longer_path(g, ps, 0, 4)
    assert alt is not None
    assert len(alt) >= 5
    assert (alt[0], alt[-1]) == (0, 4)
    assert is_chordless_path(g, alt)


def test_hidden_detour_is_rejected_without_the_gate() -> None:
    g, verdict = try_insert(_two_sided_detour(), 0, 4)
    assert verdict.outcome == VerdictOutcome.rejected_alternate_longer_path
    assert verdict.case_label == CaseLabel.no_common_multiple_paths
    assert not g.has_edge(0, 4)
    assert is_chordless_path(g, verdict.witness)
    h = g.copy()
    h.add_edge(0, 4)
    assert find_hole(h) is not None


def test_path_cap_does_not_hide_the_forbidden_configuration() -> None:
    u, v = GADGET["u"], GADGET["v"]
    g, verdict = try_insert(f2(), u, v, path_cap=1)
    assert verdict.outcome == VerdictOutcome.rejected_forbidden_config
    assert not g.has_edge(u, v)
    assert is_weakly_chordal(g)[0]


@pytest.mark.parametrize("path_cap", [None, 1])
def test_ungated_insertions_keep_the_graph_weakly_chordal(path_cap: int | None) -> None:
    rng = np.random.default_rng(23)
    inserted = 0
    for seed in range(scale(25, 250)):
        n = int(rng.integers(6, 12))
        g = random_weakly_chordal(seed, n, int(rng.integers(n - 1, 2 * n + 2)))
        for a, b in combinations(range(n), 2):
            if g.has_edge(a, b):
                continue
            g, verdict = try_insert(g, a, b, path_cap=path_cap)
            if not verdict.inserted:
                continue
            ok, hole = is_weakly_chordal(g)
            assert ok, (seed, a, b, verdict.case_label, hole)
            g.remove_edge(a, b)
            inserted += 1
    assert inserted > 0
