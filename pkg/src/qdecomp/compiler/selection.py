"""Cheapest feasible decomposition for a multi-controlled instruction."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..decomp.types import AuxState, DecompChoice, Family
from ..gates import GateClass


class Policy(Enum):
    AUTO = "auto"
    FORCE_NO_AUX = "force-no-aux"


C, D = AuxState.CLEAN, AuxState.DIRTY

# Row order of the per-class candidate tables (cheapest first).
CANDIDATES: dict[GateClass, list[tuple[Family, AuxState | None]]] = {
    GateClass.PAULI: [(Family.VCHAIN, C), (Family.VCHAIN, D), (Family.SINGLE_AUX, C),
                      (Family.SINGLE_AUX, D), (Family.LINEAR_DEPTH, None)],
    GateClass.ROTATION: [(Family.NETWORK, C), (Family.SU2, None)],
    GateClass.PHASE: [(Family.NETWORK, C), (Family.SU2_REWRITE, C), (Family.LINEAR_DEPTH, None)],
    GateClass.HADAMARD: [(Family.NETWORK, C), (Family.SU2_REWRITE, C), (Family.LINEAR_DEPTH, None)],
}

ZERO_AUX = frozenset({Family.CU2, Family.SPECIFIC_PAULI, Family.SU2, Family.LINEAR_DEPTH})


@dataclass(frozen=True)
class SelectionContext:
    """What the selector sees: capacity, how many clean qubits are left, and the gate shape.

    n_clean counts clean qubits outside the gate (the gate's own lines are already dirty).
    """

    qpu_total: int
    n_clean: int
    gate_class: GateClass
    n_controls: int
    policy: Policy = Policy.AUTO

    @property
    def interaction_size(self) -> int:
        return self.n_controls + 1


def feasible(choice: DecompChoice, ctx: SelectionContext) -> bool:
    if ctx.policy is Policy.FORCE_NO_AUX and choice.family not in ZERO_AUX:
        return False
    if choice.aux_state is AuxState.CLEAN:
        return ctx.n_clean >= choice.aux_count
    if choice.aux_state is AuxState.DIRTY:
        return choice.aux_count + ctx.interaction_size <= ctx.qpu_total
    return True


def select_decomposition(ctx: SelectionContext) -> DecompChoice:
    n = ctx.n_controls
    if n < 1:
        raise ValueError("selection needs at least one control")
    if n == 1:
        return DecompChoice(Family.CU2)
    if ctx.gate_class is GateClass.PAULI and n in (2, 3):
        return DecompChoice(Family.SPECIFIC_PAULI)
    for family, state in CANDIDATES[ctx.gate_class]:
        choice = DecompChoice.for_family(family, n, state)
        if feasible(choice, ctx):
            return choice
    raise AssertionError("candidate tables end with a zero-aux family")
