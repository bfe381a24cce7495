"""Placing an auxiliary group onto main qubits while avoiding new interactions."""

from __future__ import annotations

from dataclasses import dataclass

from ..circuit import Circuit
from ..gates import Aux, Instruction, Main
from .expand import AuxGroup


@dataclass(frozen=True)
class Placement:
    aux: Aux
    host: Main
    phase: int  # 1 = found through an existing interaction chain, 2 = fallback scan
    via: Main | Aux | None = None  # the partner i whose history supplied the host


def select_main(circuit: Circuit, a: Aux, group: AuxGroup, taken: list[Main],
                clean: set[Main]) -> Placement:
    """Host for `a`: first a qubit already linked to a's partners, else a clean one, else any legal one."""
    A, I, Q = set(group.aux), group.interaction, set(taken)
    for i in circuit.interaction_qubits(a):
        if i in A:
            continue
        for c in reversed(circuit.interaction_qubits(i)):
            if c in A or c in Q or not isinstance(c, Main):
                continue
            if (I and c not in I) or c in clean:
                return Placement(a, c, 1, i)
    for c in sorted(clean):
        if c not in Q:
            return Placement(a, c, 2)
    for k in range(circuit.qpu.total):
        c = Main(k)
        if c not in I and c not in Q:
            return Placement(a, c, 2)
    raise RuntimeError("no host left for an auxiliary qubit: feasibility arithmetic was violated")


def allocate_aux(circuit: Circuit, group: AuxGroup | None, start: int = 0) -> list[Placement]:
    """Move every auxiliary of the group onto a host; rewrites instructions from `start` on."""
    if group is None or not group.aux:
        return []
    clean = circuit.clean_qubits()
    placed: list[Placement] = []
    taken: list[Main] = []
    for a in group.aux:
        pl = select_main(circuit, a, group, taken, clean)
        placed.append(pl)
        taken.append(pl.host)
        circuit.merge_interactions(a, pl.host)
    mapping = {p.aux: p.host for p in placed}
    ins = circuit.instructions
    for k in range(start, len(ins)):
        item = ins[k]
        if isinstance(item, Instruction) and any(q in mapping for q in item.qubits):
            ins[k] = item.remap(mapping)
    return placed
