from __future__ import annotations

import os
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path


class OracleGate(StrEnum):
    on = "on"
    off = "off"
    auto = "auto"


@dataclass(frozen=True, slots=True)
class GeneratorSettings:
    split_probability: float = 0.5
    stall_factor: int = 4
    oracle_gate: OracleGate = OracleGate.auto
    oracle_gate_max_n: int = 64
    path_cap: int | None = None
    counterexample_dir: Path | None = None

    def stall_limit(self, n: int) -> int:
        return max(1, self.stall_factor * n * n)

    def gate_enabled(self, n: int, override: OracleGate | None = None) -> bool:
        mode = override or self.oracle_gate
        if mode == OracleGate.auto:
            return n <= self.oracle_gate_max_n
        return mode == OracleGate.on


def _env_number[T: (int, float)](name: str, kind: type[T], default: T) -> T:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return kind(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a {kind.__name__}, got {raw!r}") from e


def settings_from_env() -> GeneratorSettings:
    split = _env_number("WCGEN_SPLIT_PROBABILITY", float, 0.5)
    if not 0.0 <= split <= 1.0:
        raise ValueError(f"WCGEN_SPLIT_PROBABILITY must be within [0, 1], got {split}")

    gate_raw = os.environ.get("WCGEN_ORACLE_GATE", OracleGate.auto.value)
    try:
        gate = OracleGate(gate_raw)
    except ValueError as e:
        raise ValueError(f"WCGEN_ORACLE_GATE must be one of on/off/auto, got {gate_raw!r}") from e

    path_cap = _env_number("WCGEN_PATH_CAP", int, 0)
    if path_cap < 0:
        raise ValueError(f"WCGEN_PATH_CAP must be non-negative, got {path_cap}")
    ce_dir = os.environ.get("WCGEN_COUNTEREXAMPLE_DIR")

    return GeneratorSettings(
        split_probability=split,
        stall_factor=_env_number("WCGEN_STALL_FACTOR", int, 4),
        oracle_gate=gate,
        oracle_gate_max_n=_env_number("WCGEN_ORACLE_GATE_MAX_N", int, 64),
        path_cap=path_cap or None,
        counterexample_dir=Path(ce_dir) if ce_dir else None,
    )
