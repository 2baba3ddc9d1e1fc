"""Benchmark harness: one row per (method, n, density, seed) cell, plus a log-log slope."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from wcgen.config import GeneratorSettings
from wcgen.core.events import log_event
from wcgen.generation.models import GenerationMethod, GenParams, GenTimings, VerdictOutcome
from wcgen.generation.pipeline import generate
from wcgen.oracle import is_weakly_chordal
from wcgen.rng import make_rng

logger = logging.getLogger("wcgen.bench")


def edges_for_density(n: int, density: float) -> int:
    """m = round(density * n), clamped to the valid range [n-1, n(n-1)/2]."""

    if density <= 0:
        raise ValueError(f"density must be positive, got {density}")
    return min(max(round(density * n), n - 1), n * (n - 1) // 2)


class BenchRecord(BaseModel):
    method: GenerationMethod
    n: int
    m: int
    density: float
    seed: int
    edge_count: int
    layout_seconds: float = Field(0.0, ge=0)
    tree_seconds: float = Field(0.0, ge=0)
    insert_seconds: float = Field(0.0, ge=0)
    total_seconds: float = Field(0.0, ge=0)
    query_median: float = Field(0.0, ge=0)
    query_p95: float = Field(0.0, ge=0)
    mutation_median: float = Field(0.0, ge=0)
    attempts: int = 0
    inserted: int = 0
    rejected_long_shortest_path: int = 0
    rejected_forbidden_config: int = 0
    rejected_alternate_longer_path: int = 0
    rejected_oracle_veto: int = 0
    fallback_two_pair_insertions: int = 0
    early_return: bool = False
    verified: bool | None = None


@dataclass(frozen=True, slots=True)
class BenchCell:
    method: GenerationMethod
    n: int
    density: float
    seed: int


def _quantile(values: Sequence[float], q: float) -> float:
    return float(np.percentile(values, q)) if values else 0.0


def run_bench_cell(
    cell: BenchCell,
    *,
    settings: GeneratorSettings | None = None,
    verify_max_n: int = 64,
) -> BenchRecord:
    m = edges_for_density(cell.n, cell.density)
    params = GenParams(n=cell.n, m=m, seed=cell.seed, method=cell.method)
    timings = GenTimings()
    started = time.perf_counter()
    g, trace = generate(params, make_rng(cell.seed), settings=settings, timings=timings)
    total = time.perf_counter() - started

    counts = trace.outcome_counts()
    verified = is_weakly_chordal(g)[0] if cell.n <= verify_max_n else None
    record = BenchRecord(
        method=cell.method,
        n=cell.n,
        m=m,
        density=cell.density,
        seed=cell.seed,
        edge_count=g.edge_count,
        layout_seconds=timings.phases.get("layout", 0.0),
        tree_seconds=timings.phases.get("tree", 0.0),
        insert_seconds=timings.phases.get("insert", 0.0),
        total_seconds=total,
        query_median=_quantile(timings.query_times, 50),
        query_p95=_quantile(timings.query_times, 95),
        mutation_median=_quantile(timings.mutation_times, 50),
        attempts=trace.attempts,
        inserted=counts[VerdictOutcome.inserted],
        rejected_long_shortest_path=counts[VerdictOutcome.rejected_long_shortest_path],
        rejected_forbidden_config=counts[VerdictOutcome.rejected_forbidden_config],
        rejected_alternate_longer_path=counts[VerdictOutcome.rejected_alternate_longer_path],
        rejected_oracle_veto=counts[VerdictOutcome.rejected_oracle_veto],
        fallback_two_pair_insertions=trace.fallback_two_pair_insertions,
        early_return=trace.early_return,
        verified=verified,
    )
    log_event(
        logger,
        "bench_cell_finished",
        method=cell.method.value,
        n=cell.n,
        m=m,
        seed=cell.seed,
        seconds=round(total, 6),
    )
    return record


def _run_cell_tuple(args: tuple[BenchCell, GeneratorSettings | None, int]) -> BenchRecord:
    cell, settings, verify_max_n = args
    return run_bench_cell(cell, settings=settings, verify_max_n=verify_max_n)


def run_bench(
    *,
    methods: Sequence[GenerationMethod],
    n_list: Sequence[int],
    density_list: Sequence[float],
    seeds: Sequence[int],
    workers: int = 1,
    settings: GeneratorSettings | None = None,
    verify_max_n: int = 64,
) -> pd.DataFrame:
    if not methods:
        raise ValueError("at least one method is required")
    if not n_list or any(n < 1 for n in n_list):
        raise ValueError("n-list must be non-empty with every n >= 1")
    if not density_list:
        raise ValueError("density-list must be non-empty")
    if not seeds:
        raise ValueError("at least one seed is required")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    cells = [
        BenchCell(method=method, n=n, density=density, seed=seed)
        for method in methods
        for n in n_list
        for density in density_list
        for seed in seeds
    ]
    jobs = [(cell, settings, verify_max_n) for cell in cells]
    if workers == 1:
        records = [_run_cell_tuple(job) for job in jobs]
    else:
        # Each cell builds its own generator from its seed; map keeps cell order.
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_cell_tuple, jobs))

    return pd.DataFrame([r.model_dump(mode="json") for r in records])


def _loglog_slope(frame: pd.DataFrame, method: GenerationMethod, column: str) -> tuple[float, int] | None:
    rows = frame[(frame["method"] == method.value) & (frame[column] > 0)]
    per_n = rows.groupby("n")[column].median()
    if len(per_n) < 2:
        return None
    xs = np.log(per_n.index.to_numpy(dtype=float))
    ys = np.log(per_n.to_numpy(dtype=float))
    return float(np.polyfit(xs, ys, 1)[0]), len(per_n)


def query_time_slope(frame: pd.DataFrame, method: GenerationMethod = GenerationMethod.separator) -> float | None:
    """Slope of log(median query time) against log(n); None with fewer than two usable n."""

    fit = _loglog_slope(frame, method, "query_median")
    if fit is None:
        return None
    slope, points = fit
    log_event(logger, "bench_slope", method=method.value, column="query_median", slope=round(slope, 4), points=points)
    return slope


def mutation_time_slope(frame: pd.DataFrame, method: GenerationMethod = GenerationMethod.separator) -> float | None:
    fit = _loglog_slope(frame, method, "mutation_median")
    return None if fit is None else fit[0]
