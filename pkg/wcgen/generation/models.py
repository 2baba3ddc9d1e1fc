from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from pydantic import BaseModel, Field, model_validator

from wcgen.config import OracleGate
from wcgen.rng import RNG_ALGORITHM


class GenerationMethod(StrEnum):
    separator = "separator"
    two_pair = "two-pair"


class GenerationPhase(StrEnum):
    created = "created"
    tree_grown = "tree_grown"
    layout_built = "layout_built"
    inserting = "inserting"
    completed = "completed"
    early_returned = "early_returned"


class VerdictOutcome(StrEnum):
    inserted = "Inserted"
    rejected_existing_edge = "RejectedExistingEdge"
    rejected_long_shortest_path = "RejectedLongShortestPath"
    rejected_forbidden_config = "RejectedForbiddenConfig"
    rejected_alternate_longer_path = "RejectedAlternateLongerPath"
    rejected_oracle_veto = "RejectedOracleVeto"


class CaseLabel(StrEnum):
    separated = "1.1"
    common_single_path = "1.2.1"
    common_multiple_paths = "1.2.2"
    no_common_single_path = "2.1"
    no_common_multiple_paths = "2.2"
    not_applicable = "n/a"


class GenParams(BaseModel):
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    seed: int = Field(0, ge=0, lt=2**64)
    method: GenerationMethod = GenerationMethod.separator
    oracle_gate: OracleGate | None = None

    @model_validator(mode="after")
    def _check_density(self) -> GenParams:
        max_m = self.n * (self.n - 1) // 2
        if self.m < self.n - 1:
            raise ValueError(f"m={self.m} is below spanning-tree density n-1={self.n - 1}")
        if self.m > max_m:
            raise ValueError(f"m={self.m} exceeds n(n-1)/2={max_m}")
        return self


class Verdict(BaseModel):
    outcome: VerdictOutcome
    case_label: CaseLabel
    witness: list[int] = Field(default_factory=list)
    detail: str = ""

    @model_validator(mode="after")
    def _check_label(self) -> Verdict:
        if self.outcome == VerdictOutcome.inserted and self.case_label == CaseLabel.not_applicable:
            raise ValueError("an inserted verdict needs a case label")
        return self

    @property
    def inserted(self) -> bool:
        return self.outcome == VerdictOutcome.inserted


class TraceEvent(BaseModel):
    u: int
    v: int
    verdict: Verdict


class GenTrace(BaseModel):
    """Seeded transcript of one generation run.

    Wall-clock timings are kept out of the trace so equal params always give equal traces.
    """

    params: GenParams
    rng_algorithm: str = RNG_ALGORITHM
    phase: GenerationPhase = GenerationPhase.created
    tree_node_count: int = 0
    initial_edge_count: int = 0
    early_return: bool = False
    events: list[TraceEvent] = Field(default_factory=list)
    attempts: int = 0
    fallback_two_pair_insertions: int = 0
    two_pair_pairs: list[tuple[int, int]] = Field(default_factory=list)
    oracle_vetoes: int = 0

    @property
    def inserted_count(self) -> int:
        return sum(1 for e in self.events if e.verdict.inserted)

    def outcome_counts(self) -> dict[VerdictOutcome, int]:
        counts = {o: 0 for o in VerdictOutcome}
        for e in self.events:
            counts[e.verdict.outcome] += 1
        return counts

    def summary(self) -> dict[str, object]:
        return {
            "method": self.params.method.value,
            "phase": self.phase.value,
            "initial_edge_count": self.initial_edge_count,
            "early_return": self.early_return,
            "attempts": self.attempts,
            "inserted": self.inserted_count,
            "fallback_two_pair_insertions": self.fallback_two_pair_insertions,
            "oracle_vetoes": self.oracle_vetoes,
            "outcomes": {k.value: v for k, v in self.outcome_counts().items()},
        }


@dataclass(slots=True)
class GenTimings:
    """Wall-clock measurements collected alongside a run (seconds)."""

    phases: dict[str, float] = field(default_factory=dict)
    query_times: list[float] = field(default_factory=list)
    mutation_times: list[float] = field(default_factory=list)

    def add_phase(self, name: str, seconds: float) -> None:
        self.phases[name] = self.phases.get(name, 0.0) + seconds


class GenerationError(RuntimeError):
    """An internal invariant failed while generating (not a user input problem)."""
