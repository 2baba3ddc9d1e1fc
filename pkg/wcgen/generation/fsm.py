from __future__ import annotations

import logging

from statemachine import State, StateMachine

from wcgen.core.events import log_event
from wcgen.generation.models import GenerationPhase, GenTrace

logger = logging.getLogger("wcgen.phases")


class GenerationFSM(StateMachine):
    """Phase guard around a GenTrace.

    The generators do the work; the machine only refuses out-of-order phases.
    - separator: created -> tree_grown -> layout_built -> inserting -> completed
    - early return: layout_built -> early_returned
    - two-pair baseline: tree_grown -> inserting (its spanning tree is the start graph)
    """

    created = State(GenerationPhase.created.value, value=GenerationPhase.created.value, initial=True)
    tree_grown = State(GenerationPhase.tree_grown.value, value=GenerationPhase.tree_grown.value)
    layout_built = State(GenerationPhase.layout_built.value, value=GenerationPhase.layout_built.value)
    inserting = State(GenerationPhase.inserting.value, value=GenerationPhase.inserting.value)
    completed = State(GenerationPhase.completed.value, value=GenerationPhase.completed.value, final=True)
    early_returned = State(
        GenerationPhase.early_returned.value,
        value=GenerationPhase.early_returned.value,
        final=True,
    )

    tree_done = created.to(tree_grown)
    layout_done = tree_grown.to(layout_built)
    start_inserting = layout_built.to(inserting) | tree_grown.to(inserting)
    finish = inserting.to(completed)
    stop_early = layout_built.to(early_returned)

    def __init__(self, trace: GenTrace):
        self.trace = trace
        super().__init__(start_value=trace.phase.value)

    def sync_phase_to_model(self) -> None:
        self.trace.phase = GenerationPhase(str(self.current_state.value))

    def advance(self, event: str) -> None:
        before = self.trace.phase
        self.send(event)
        self.sync_phase_to_model()
        log_event(
            logger,
            "phase_transition",
            method=self.trace.params.method.value,
            seed=self.trace.params.seed,
            source=before.value,
            target=self.trace.phase.value,
        )
