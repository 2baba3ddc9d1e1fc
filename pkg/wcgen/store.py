"""Redis run store: finished runs as pydantic JSON plus an index set, vetoes on a stream."""

from __future__ import annotations

from datetime import UTC, datetime
from typing import Any, cast

import redis
from pydantic import BaseModel, Field

from wcgen.core.graph import Graph
from wcgen.generation.models import GenParams, GenTrace
from wcgen.oracle import HoleWitness

RUNS_SET_KEY = "wcgen:runs"
RUN_KEY_PREFIX = "wcgen:run:"  # + {method}:{n}:{m}:{seed}
VETO_STREAM_KEY = "wcgen:vetoes"


def _now() -> datetime:
    return datetime.now(tz=UTC)


def run_id_for(params: GenParams) -> str:
    return f"{params.method.value}:{params.n}:{params.m}:{params.seed}"


def _run_key(run_id: str) -> str:
    return f"{RUN_KEY_PREFIX}{run_id}"


class RunRecord(BaseModel):
    run_id: str
    params: GenParams
    edges: list[tuple[int, int]]
    trace_summary: dict[str, Any] = Field(default_factory=dict)
    created_at: datetime

    @classmethod
    def from_run(cls, params: GenParams, g: Graph, trace: GenTrace) -> RunRecord:
        return cls(
            run_id=run_id_for(params),
            params=params,
            edges=list(g.edges()),
            trace_summary=trace.summary(),
            created_at=_now(),
        )

    def graph(self) -> Graph:
        return Graph.from_edges(self.params.n, self.edges)


def save_run(*, r: redis.Redis, record: RunRecord) -> None:
    r.set(_run_key(record.run_id), record.model_dump_json())
    r.sadd(RUNS_SET_KEY, record.run_id)


def get_run(*, r: redis.Redis, run_id: str) -> RunRecord | None:
    raw = r.get(_run_key(run_id))
    if not raw:
        return None
    return RunRecord.model_validate_json(cast(str, raw))


def require_run(*, r: redis.Redis, run_id: str) -> RunRecord:
    record = get_run(r=r, run_id=run_id)
    if record is None:
        raise ValueError(f"Run not found: {run_id}")
    return record


def list_runs(*, r: redis.Redis) -> list[RunRecord]:
    ids = sorted(cast(set[str], r.smembers(RUNS_SET_KEY)))
    out: list[RunRecord] = []
    for run_id in ids:
        record = get_run(r=r, run_id=run_id)
        if record is not None:
            out.append(record)
    out.sort(key=lambda rec: rec.created_at, reverse=True)
    return out


def publish_veto(
    *,
    r: redis.Redis,
    params: GenParams,
    u: int,
    v: int,
    hole: HoleWitness,
    counterexample: str = "",
) -> str:
    fields = {
        "run_id": run_id_for(params),
        "u": str(u),
        "v": str(v),
        "side": hole.side.value,
        "cycle": " ".join(map(str, hole.cycle)),
        "counterexample": counterexample,
    }
    stream_id = r.xadd(VETO_STREAM_KEY, fields)
    return cast(str, stream_id)
