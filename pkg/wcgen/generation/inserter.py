"""Phase 3: decide whether a non-edge (u, v) can be added without creating a hole or antihole.

Decision tree per pair:
- common neighbors I non-empty: if removing I (plus everything outside the local scope)
  separates u and v the edge is safe (case 1.1); otherwise the shortest scoped paths decide
  (1.2.1 single path, 1.2.2 several).
- I empty: the same path analysis on the whole graph (2.1 / 2.2).
A shortest scoped path longer than 3 closes into a hole, so the pair is rejected.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from wcgen.core.events import log_event
from wcgen.core.graph import (
    Graph,
    GraphError,
    PathSet,
    all_shortest_paths,
    induced,
    reachable,
)
from wcgen.generation.models import CaseLabel, GenTimings, Verdict, VerdictOutcome
from wcgen.oracle import HoleWitness, certify_insertion

logger = logging.getLogger("wcgen.inserter")

VetoHandler = Callable[[Graph, int, int, HoleWitness], None]


@dataclass(frozen=True, slots=True)
class InsertionScope:
    """Local view of g for the candidate pair.

    When `common` is empty the aux graph is g itself (no copy) with identity ids.
    """

    pair: tuple[int, int]
    common: frozenset[int]
    aux_nodes: frozenset[int]
    aux_graph: Graph
    ids: tuple[int, ...]
    local: dict[int, int]

    @property
    def local_pair(self) -> tuple[int, int]:
        u, v = self.pair
        return self.local[u], self.local[v]


def compute_scope(g: Graph, u: int, v: int) -> InsertionScope:
    common = g.common_neighbors(u, v)
    if g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is already an edge")

    if not common:
        n = g.vertex_count
        return InsertionScope(
            pair=(u, v),
            common=common,
            aux_nodes=frozenset(range(n)),
            aux_graph=g,
            ids=tuple(range(n)),
            local={x: x for x in range(n)},
        )

    aux: set[int] = {u, v} | g.adjacency(u) | g.adjacency(v)
    for x in common:
        nx_ = g.adjacency(x)
        aux |= nx_
        for y in nx_:
            if y != u and y != v:
                aux |= g.adjacency(y)
    aux -= common
    aux_graph, local = induced(g, aux)
    return InsertionScope(
        pair=(u, v),
        common=common,
        aux_nodes=frozenset(aux),
        aux_graph=aux_graph,
        ids=tuple(sorted(aux)),
        local=local,
    )


def case1_separated(scope: InsertionScope) -> bool:
    if not scope.common:
        raise GraphError("case 1 needs a non-empty common neighborhood")
    lu, lv = scope.local_pair
    return not reachable(scope.aux_graph, lu, lv)


def scoped_shortest_paths(
    scope: InsertionScope,
    *,
    cap: int | None = None,
    max_length: int | None = None,
) -> PathSet:
    lu, lv = scope.local_pair
    ps = all_shortest_paths(scope.aux_graph, lu, lv, cap=cap, max_length=max_length)
    return ps.translated(scope.ids)


def _require_p3s(paths: PathSet) -> None:
    for p in paths.paths:
        if len(p) != 4:
            raise GraphError(f"expected length-3 paths, got {list(p)}")


def forbidden_configuration(g: Graph, paths: PathSet) -> tuple[int, ...] | None:
    """First internally disjoint pair u-a-b-v, u-c-d-v that inserting (u, v) would break.

    Unsafe means parallel cross edges (a,c),(b,d) both present and alternate cross edges
    (a,d),(b,c) both absent: then {u,a,b,v,d,c} is a prism minus (u,v) and the complement
    gains a 6-hole. The witness is the hexagon u, a, b, v, d, c.
    """

    _require_p3s(paths)
    for p, q in combinations(paths.paths, 2):
        _, a, b, _ = p
        _, c, d, _ = q
        if {a, b} & {c, d}:
            continue
        if g.has_edge(a, d) or g.has_edge(b, c):
            continue
        if g.has_edge(a, c) and g.has_edge(b, d):
            return (*p, d, c)
    return None


def _chordless_path(h: Graph, s: int, t: int, *, min_length: int) -> tuple[int, ...] | None:
    """First chordless s-t path of h with at least `min_length` edges, depth first.

    A vertex may extend the path only if it avoids the closed neighborhoods of every path
    vertex except the last one.
    """

    stack: list[tuple[tuple[int, ...], frozenset[int]]] = [((s,), frozenset())]
    while stack:
        path, blocked = stack.pop()
        last = path[-1]
        grown = blocked | h.closed_neighbors(last)
        for y in sorted(h.adjacency(last), reverse=True):
            if y in blocked:
                continue
            if y == t:
                if len(path) >= min_length:
                    return (*path, t)
                continue
            # t next to last: any longer continuation has a chord
            if t in grown:
                continue
            stack.append(((*path, y), grown))
    return None


def alternate_longer_path(
    g: Graph,
    paths: PathSet,
    u: int,
    v: int,
    common: frozenset[int] | set[int] = frozenset(),
) -> tuple[int, ...] | None:
    """A chordless u-v path of length >= 4 near the shortest paths, if one exists.

    Searches the pool N(N(X)) | N(X) | path vertices - I, where X are the internal
    vertices, once without all of X and once without each single internal vertex. Any
    chordless path is accepted, not only the shortest one of a variant.
    """

    if not paths:
        raise GraphError("alternate_longer_path needs at least one path")
    _require_p3s(paths)

    internals = paths.internal_vertices()
    first: set[int] = set()
    for x in internals:
        first |= g.adjacency(x)
    pool: set[int] = set(first)
    for y in first:
        pool |= g.adjacency(y)
    pool |= paths.vertices()
    pool -= set(common)

    variants: list[frozenset[int]] = [internals, *(frozenset({x}) for x in sorted(internals))]
    for removed in variants:
        h, local = induced(g, pool - removed)
        found = _chordless_path(h, local[u], local[v], min_length=4)
        if found is not None:
            ids = tuple(sorted(local))
            return tuple(ids[x] for x in found)
    return None


def _has_outside_neighbors(g: Graph, path: tuple[int, ...], common: frozenset[int]) -> bool:
    on_path = set(path)
    return any(w not in on_path and w not in common for x in path for w in g.adjacency(x))


def _labels(has_common: bool) -> tuple[CaseLabel, CaseLabel]:
    if has_common:
        return CaseLabel.common_single_path, CaseLabel.common_multiple_paths
    return CaseLabel.no_common_single_path, CaseLabel.no_common_multiple_paths


def _decide(g: Graph, u: int, v: int, path_cap: int | None) -> Verdict:
    if g.has_edge(u, v):
        return Verdict(outcome=VerdictOutcome.rejected_existing_edge, case_label=CaseLabel.not_applicable)

    scope = compute_scope(g, u, v)
    has_common = bool(scope.common)
    single, multiple = _labels(has_common)
    if has_common and case1_separated(scope):
        return Verdict(outcome=VerdictOutcome.inserted, case_label=CaseLabel.separated)

    ps = scoped_shortest_paths(scope, cap=path_cap, max_length=3)
    if ps.truncated:
        # the configuration checks below need every shortest path
        log_event(logger, "path_cap_exceeded", level=logging.WARNING, u=u, v=v, cap=path_cap)
        ps = scoped_shortest_paths(scope, max_length=3)
    if not ps:
        if not has_common and not reachable(g, u, v):
            return Verdict(
                outcome=VerdictOutcome.inserted,
                case_label=single,
                detail="joins two components",
            )
        longest = scoped_shortest_paths(scope, cap=2)
        return Verdict(
            outcome=VerdictOutcome.rejected_long_shortest_path,
            case_label=single if len(longest) == 1 else multiple,
            witness=list(longest.paths[0]),
            detail=f"shortest scoped path has length {longest.length}",
        )

    label = single if len(ps) == 1 else multiple
    if ps.length is not None and ps.length < 3:
        log_event(logger, "scoped_path_anomaly", level=logging.WARNING, u=u, v=v, length=ps.length)
        return Verdict(outcome=VerdictOutcome.inserted, case_label=label, detail="short scoped path")

    if len(ps) == 1 and not _has_outside_neighbors(g, ps.paths[0], scope.common):
        return Verdict(outcome=VerdictOutcome.inserted, case_label=label)

    if len(ps) > 1:
        bad = forbidden_configuration(g, ps)
        if bad is not None:
            return Verdict(
                outcome=VerdictOutcome.rejected_forbidden_config,
                case_label=label,
                witness=list(bad),
            )

    alt = alternate_longer_path(g, ps, u, v, scope.common)
    if alt is not None:
        return Verdict(
            outcome=VerdictOutcome.rejected_alternate_longer_path,
            case_label=label,
            witness=list(alt),
        )
    return Verdict(outcome=VerdictOutcome.inserted, case_label=label)


def try_insert(
    g: Graph,
    u: int,
    v: int,
    *,
    gate: bool = False,
    path_cap: int | None = None,
    on_veto: VetoHandler | None = None,
    timings: GenTimings | None = None,
) -> tuple[Graph, Verdict]:
    """Decide the pair and, if safe, add the edge to `g` in place.

    With `gate` on, every insertion is re-certified by the recognition oracle and rolled
    back on failure; the certificate is local, so g must be weakly chordal beforehand.
    """

    if u == v:
        raise GraphError(f"self-loop on vertex {u} is not allowed")

    started = time.perf_counter()
    verdict = _decide(g, u, v, path_cap)
    if timings is not None:
        timings.query_times.append(time.perf_counter() - started)

    if not verdict.inserted:
        log_event(
            logger,
            "pair_rejected",
            level=logging.DEBUG,
            u=u,
            v=v,
            outcome=verdict.outcome.value,
            case=verdict.case_label.value,
        )
        return g, verdict

    started = time.perf_counter()
    g.add_edge(u, v)
    if timings is not None:
        timings.mutation_times.append(time.perf_counter() - started)

    if gate:
        ok, hole = certify_insertion(g, u, v)
        if not ok and hole is not None:
            g.remove_edge(u, v)
            verdict = Verdict(
                outcome=VerdictOutcome.rejected_oracle_veto,
                case_label=verdict.case_label,
                witness=list(hole.cycle),
                detail=hole.describe(),
            )
            if on_veto is not None:
                on_veto(g, u, v, hole)
            return g, verdict

    log_event(logger, "pair_inserted", level=logging.DEBUG, u=u, v=v, case=verdict.case_label.value)
    return g, verdict
