from __future__ import annotations

from datetime import UTC, datetime, timedelta

import fakeredis
import pytest

from wcgen.core.fixtures import f1
from wcgen.generation.models import GenParams
from wcgen.generation.pipeline import generate
from wcgen.oracle import HoleSide, HoleWitness
from wcgen.store import (
    RUNS_SET_KEY,
    VETO_STREAM_KEY,
    RunRecord,
    get_run,
    list_runs,
    publish_veto,
    require_run,
    run_id_for,
    save_run,
)


def test_save_and_get_run(fake_redis: fakeredis.FakeRedis) -> None:
    params = GenParams(n=10, m=16, seed=4)
    g, trace = generate(params)
    record = RunRecord.from_run(params, g, trace)
    save_run(r=fake_redis, record=record)

    assert fake_redis.sismember(RUNS_SET_KEY, "separator:10:16:4")
    loaded = require_run(r=fake_redis, run_id=record.run_id)
    assert loaded.graph() == g
    assert loaded.trace_summary == trace.summary()


def test_missing_run(fake_redis: fakeredis.FakeRedis) -> None:
    assert get_run(r=fake_redis, run_id="separator:1:0:0") is None
    with pytest.raises(ValueError, match="Run not found"):
        require_run(r=fake_redis, run_id="separator:1:0:0")


def test_runs_are_listed_newest_first(fake_redis: fakeredis.FakeRedis) -> None:
    base = datetime(2026, 1, 1, tzinfo=UTC)
    for i, seed in enumerate((5, 6, 7)):
        params = GenParams(n=8, m=10, seed=seed)
        record = RunRecord(
            run_id=run_id_for(params),
            params=params,
            edges=list(f1().edges()),
            created_at=base + timedelta(minutes=i),
        )
        save_run(r=fake_redis, record=record)
    assert [rec.params.seed for rec in list_runs(r=fake_redis)] == [7, 6, 5]


def test_publish_veto(fake_redis: fakeredis.FakeRedis) -> None:
    params = GenParams(n=6, m=7, seed=0)
    hole = HoleWitness(cycle=(0, 2, 4, 1, 3), side=HoleSide.complement)
    stream_id = publish_veto(r=fake_redis, params=params, u=1, v=4, hole=hole)
    entries = fake_redis.xrange(VETO_STREAM_KEY)
    assert [eid for eid, _ in entries] == [stream_id]
    fields = entries[0][1]
    assert fields["side"] == "complement"
    assert (fields["u"], fields["v"]) == ("1", "4")
    assert fields["counterexample"] == ""
