from __future__ import annotations

from pathlib import Path

import fakeredis
import pytest

from wcgen.config import GeneratorSettings


@pytest.fixture(autouse=True)
def _hermetic_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep local WCGEN_* overrides (other than the acceptance switches) out of unit tests."""

    for name in (
        "WCGEN_SPLIT_PROBABILITY",
        "WCGEN_STALL_FACTOR",
        "WCGEN_ORACLE_GATE",
        "WCGEN_ORACLE_GATE_MAX_N",
        "WCGEN_PATH_CAP",
        "WCGEN_COUNTEREXAMPLE_DIR",
        "WCGEN_REDIS_URL",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture()
def fake_redis() -> fakeredis.FakeRedis:
    return fakeredis.FakeRedis(decode_responses=True)


@pytest.fixture()
def gated_settings(tmp_path: Path) -> GeneratorSettings:
    """Oracle gate always on, counterexamples written under tmp_path."""

    from wcgen.config import OracleGate

    return GeneratorSettings(oracle_gate=OracleGate.on, counterexample_dir=tmp_path / "counterexamples")
