from __future__ import annotations

import logging
import time
from pathlib import Path

import numpy as np
import redis

from wcgen.config import GeneratorSettings
from wcgen.core.events import log_event
from wcgen.core.graph import Graph
from wcgen.generation.baseline import find_random_two_pair, generate_two_pair_method
from wcgen.generation.fsm import GenerationFSM
from wcgen.generation.inserter import try_insert
from wcgen.generation.layout_builder import build_initial_layout
from wcgen.generation.models import (
    GenerationError,
    GenerationMethod,
    GenParams,
    GenTimings,
    GenTrace,
    TraceEvent,
    VerdictOutcome,
)
from wcgen.io.formats import GraphDocument, dumps_canonical
from wcgen.oracle import HoleWitness, is_weakly_chordal
from wcgen.rng import RNG_ALGORITHM, choice_index, make_rng

logger = logging.getLogger("wcgen.generate")


def random_non_edge(g: Graph, rng: np.random.Generator) -> tuple[int, int]:
    """Uniform over the non-adjacent pairs of a non-complete graph."""

    n = g.vertex_count
    total = n * (n - 1) // 2
    if g.edge_count >= total:
        raise GenerationError("complete graph has no non-edge")
    if 2 * g.edge_count < total:
        while True:
            u, v = (int(x) for x in rng.integers(0, n, size=2))
            if u != v and not g.has_edge(u, v):
                return (u, v) if u < v else (v, u)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    return pairs[choice_index(rng, len(pairs))]


class _VetoRecorder:
    """Writes one reproducible counterexample per oracle veto."""

    def __init__(self, params: GenParams, directory: Path | None, store: redis.Redis | None):
        self.params = params
        self.directory = directory
        self.store = store

    def __call__(self, g: Graph, u: int, v: int, hole: HoleWitness) -> None:
        p = self.params
        payload = {
            "graph": GraphDocument.from_graph(g).model_dump(),
            "pair": [u, v],
            "hole": {"side": hole.side.value, "cycle": list(hole.cycle)},
            "params": p.model_dump(mode="json"),
            "rng": RNG_ALGORITHM,
        }
        path: Path | None = None
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)
            path = self.directory / f"veto-{p.method.value}-n{p.n}-m{p.m}-s{p.seed}-{u}-{v}.json"
            path.write_text(dumps_canonical(payload), encoding="utf-8")
        if self.store is not None:
            from wcgen.store import publish_veto

            publish_veto(r=self.store, params=p, u=u, v=v, hole=hole, counterexample=str(path or ""))
        log_event(
            logger,
            "oracle_veto",
            level=logging.WARNING,
            n=p.n,
            m=p.m,
            seed=p.seed,
            u=u,
            v=v,
            hole=hole.describe(),
            counterexample=str(path) if path is not None else None,
        )


def _certify(g: Graph, what: str) -> None:
    ok, hole = is_weakly_chordal(g)
    if not ok:
        detail = hole.describe() if hole is not None else "unknown"
        raise GenerationError(f"{what} is not weakly chordal: {detail}")


def generate_separator_method(
    params: GenParams,
    rng: np.random.Generator,
    *,
    settings: GeneratorSettings | None = None,
    timings: GenTimings | None = None,
    store: redis.Redis | None = None,
) -> tuple[Graph, GenTrace]:
    settings = settings or GeneratorSettings()
    n, m = params.n, params.m
    gate = settings.gate_enabled(n, params.oracle_gate)
    trace = GenTrace(params=params)
    fsm = GenerationFSM(trace)

    started = time.perf_counter()
    layout, early_return = build_initial_layout(
        n,
        m,
        rng,
        split_probability=settings.split_probability,
        seed=params.seed,
        fsm=fsm,
    )
    if timings is not None:
        timings.add_phase("layout", time.perf_counter() - started)
    trace.tree_node_count = layout.tree.node_count
    trace.initial_edge_count = layout.m_prime
    g = layout.graph
    if gate:
        _certify(g, "initial layout")

    if early_return:
        trace.early_return = True
        fsm.advance("stop_early")
        return g, trace

    fsm.advance("start_inserting")
    on_veto = _VetoRecorder(params, settings.counterexample_dir, store)
    stall_limit = settings.stall_limit(n)
    stall = 0
    started = time.perf_counter()
    while g.edge_count < m:
        u, v = random_non_edge(g, rng)
        trace.attempts += 1
        _, verdict = try_insert(
            g,
            u,
            v,
            gate=gate,
            path_cap=settings.path_cap,
            on_veto=on_veto,
            timings=timings,
        )
        trace.events.append(TraceEvent(u=u, v=v, verdict=verdict))
        if verdict.inserted:
            stall = 0
            continue
        if verdict.outcome == VerdictOutcome.rejected_oracle_veto:
            trace.oracle_vetoes += 1
        stall += 1
        if stall >= stall_limit:
            pair = find_random_two_pair(g, rng)
            if pair is None:
                raise GenerationError(f"stalled with no two-pair left at m={g.edge_count}")
            g.add_edge(*pair)
            trace.fallback_two_pair_insertions += 1
            trace.two_pair_pairs.append(pair)
            log_event(logger, "two_pair_fallback", u=pair[0], v=pair[1], edge_count=g.edge_count)
            stall = 0
    if timings is not None:
        timings.add_phase("insert", time.perf_counter() - started)

    if gate:
        _certify(g, "generated graph")
    fsm.advance("finish")
    return g, trace


def generate(
    params: GenParams,
    rng: np.random.Generator | None = None,
    *,
    settings: GeneratorSettings | None = None,
    timings: GenTimings | None = None,
    store: redis.Redis | None = None,
) -> tuple[Graph, GenTrace]:
    """Generate a weakly chordal graph on params.n vertices and params.m edges.

    On early return the initial layout is emitted as is, with at least m edges.
    """

    rng = rng if rng is not None else make_rng(params.seed)
    if params.method == GenerationMethod.two_pair:
        g, trace = generate_two_pair_method(params, rng, timings=timings)
    else:
        g, trace = generate_separator_method(params, rng, settings=settings, timings=timings, store=store)

    log_event(
        logger,
        "generation_finished",
        method=params.method.value,
        n=params.n,
        m=params.m,
        seed=params.seed,
        edge_count=g.edge_count,
        attempts=trace.attempts,
        fallback=trace.fallback_two_pair_insertions,
        vetoes=trace.oracle_vetoes,
        early_return=trace.early_return,
    )
    return g, trace
