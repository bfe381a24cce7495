"""Sequential select / expand / allocate over a high-level circuit."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache

from ..circuit import OUTSIDE, Circuit, GateStats, InteractionOrder, QpuSpec, gate_stats
from ..decomp._seq import cnot_count
from ..decomp.cu2 import phase_correction
from ..decomp.types import AuxState, DecompChoice, Family
from ..errors import CapacityExceeded
from ..gates import GateKind, Instruction, Main, Measurement, gate_class
from .allocation import Placement, allocate_aux
from .expand import expand
from .selection import Policy, SelectionContext, select_decomposition


@dataclass
class ChoiceRecord:
    source_index: int
    gate: str
    n_controls: int
    choice: DecompChoice
    cnots: int
    placements: list[Placement] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "source_index": self.source_index,
            "gate": self.gate,
            "n_controls": self.n_controls,
            "family": self.choice.family.value,
            "aux_count": self.choice.aux_count,
            "aux_state": self.choice.aux_state.value,
            "cnots": self.cnots,
            "hosts": {repr(p.aux): p.host.index for p in self.placements},
        }


@dataclass
class CompileReport:
    policy: Policy
    qpu_total: int
    choices: list[ChoiceRecord] = field(default_factory=list)
    stats: GateStats = field(default_factory=GateStats)

    def to_dict(self) -> dict:
        return {
            "policy": self.policy.value,
            "qpu": self.qpu_total,
            "choices": [c.to_dict() for c in self.choices],
            "cnot_total": self.stats.cnot_total,
            "per_algorithm": dict(sorted(self.stats.per_algorithm.items())),
        }


def _needs_decomposition(ins: Instruction) -> bool:
    k = len(ins.controls)
    return k >= 2 or (k == 1 and (ins.gate is not GateKind.X or ins.global_phase != 0.0))


class _Lowering:
    """Shared control flow of the full compiler and the counting pass."""

    def __init__(self, qpu: QpuSpec, policy: Policy):
        self.qpu = qpu
        self.policy = policy

    def n_clean(self) -> int:
        raise NotImplementedError

    def emit_plain(self, ins: Instruction) -> None:
        raise NotImplementedError

    def emit_decomposed(self, ins: Instruction, choice: DecompChoice, source_index: int) -> None:
        raise NotImplementedError

    def context(self, ins: Instruction) -> SelectionContext:
        return SelectionContext(self.qpu.total, self.n_clean(), gate_class(ins.gate), len(ins.controls), self.policy)

    def lower(self, ins: Instruction, source_index: int) -> None:
        if ins.global_phase and len(ins.controls) >= 2:
            corr = phase_correction(ins.controls, ins.global_phase)
            ins = replace(ins, global_phase=0.0)
            self.lower(corr, source_index)
        if not ins.controls:
            self.emit_plain(replace(ins, global_phase=0.0) if ins.global_phase else ins)
        elif not _needs_decomposition(ins):
            self.emit_plain(ins)
        else:
            self.emit_decomposed(ins, select_decomposition(self.context(ins)), source_index)


class Compiler(_Lowering):
    def __init__(self, qpu: QpuSpec, policy: Policy = Policy.AUTO,
                 order: InteractionOrder = InteractionOrder.FIRST):
        super().__init__(qpu, policy)
        self.out = Circuit(qpu, order)
        self.report = CompileReport(policy, qpu.total)
        self._groups = 0

    def n_clean(self) -> int:
        # selection only counts clean qubits outside the program's own allocation
        return sum(1 for q in self.out.clean_qubits() if q.index >= self.out.n_allocated)

    def emit_plain(self, ins: Instruction) -> None:
        self.out.append(ins, user=False)

    def emit_decomposed(self, ins, choice, source_index) -> None:
        gid = self._groups
        self._groups += 1
        seq, group = expand(ins, choice, gid)
        tag = choice.family.tag
        start = len(self.out.instructions)
        for s in seq:
            self.out.append(s if s.tag == tag else s.retag(tag), user=False)
        placed = allocate_aux(self.out, group, start)
        self.report.choices.append(
            ChoiceRecord(source_index, ins.gate.name, len(ins.controls), choice, cnot_count(seq), placed))

    def run(self, circuit: Circuit) -> tuple[Circuit, CompileReport]:
        check_capacity(circuit, self.qpu)
        self.out.n_allocated = circuit.n_allocated
        for k, item in enumerate(circuit.instructions):
            if isinstance(item, Measurement):
                self.out.append(item, user=True)
                continue
            self.out.mark_dirty(item.qubits)
            self.lower(item, k)
        self.report.stats = gate_stats(self.out)
        return self.out, self.report


def check_capacity(circuit: Circuit, qpu: QpuSpec) -> None:
    width = circuit.num_qubits()
    if width > qpu.total:
        raise CapacityExceeded(f"circuit uses {width} qubits, QPU has {qpu.total}")


def compile_circuit(circuit: Circuit, qpu: QpuSpec | int | None = None, policy: Policy = Policy.AUTO,
                    order: InteractionOrder | None = None) -> tuple[Circuit, CompileReport]:
    """Lower every multi-controlled instruction to single-qubit gates and CNOTs."""
    qpu = circuit.qpu if qpu is None else (qpu if isinstance(qpu, QpuSpec) else QpuSpec(qpu))
    return Compiler(qpu, policy, order or circuit.order).run(circuit)


# counting-only path ----------------------------------------------------------

_REP_ANGLE = 0.7  # CNOT counts do not depend on the angle; any nonzero value works


@lru_cache(maxsize=None)
def family_cnots(family: Family, aux_state: AuxState, kind: GateKind, n: int) -> int:
    """CNOTs emitted by one decomposition instance (memoized, angle independent)."""
    theta = _REP_ANGLE if kind.parametric else None
    ins = Instruction(kind, Main(n), tuple(Main(i) for i in range(n)), theta)
    choice = DecompChoice.for_family(family, n, None if aux_state is AuxState.NA else aux_state)
    return cnot_count(expand(ins, choice)[0])


class CnotCounter(_Lowering):
    """Same selection walk as Compiler, but only tallies CNOTs."""

    def __init__(self, qpu: QpuSpec, policy: Policy = Policy.AUTO):
        super().__init__(qpu, policy)
        self.dirty: set[Main] = set()
        self.n_allocated = 0
        self.per: Counter[str] = Counter()
        self.choices: Counter[tuple[int, str]] = Counter()

    def n_clean(self) -> int:
        return self.qpu.total - max(self.n_allocated, len({q for q in self.dirty}))

    def emit_plain(self, ins: Instruction) -> None:
        if ins.controls:
            self.per[ins.tag or OUTSIDE] += 1

    def emit_decomposed(self, ins, choice, source_index) -> None:
        self.per[choice.family.tag] += family_cnots(choice.family, choice.aux_state, ins.gate, len(ins.controls))
        self.choices[(len(ins.controls), choice.label())] += 1

    def run(self, circuit: Circuit) -> GateStats:
        check_capacity(circuit, self.qpu)
        self.n_allocated = circuit.n_allocated
        for item in circuit.instructions:
            if isinstance(item, Measurement):
                self.dirty.update(q for q in item.qubits if isinstance(q, Main))
                continue
            self.dirty.update(q for q in item.qubits if isinstance(q, Main))
            self.lower(item, -1)
        return GateStats(sum(self.per.values()), dict(self.per))


def count_cnots(circuit: Circuit, qpu: QpuSpec | int | None = None,
                policy: Policy = Policy.AUTO) -> tuple[GateStats, Counter]:
    """GateStats of compile_circuit without materializing the compiled circuit."""
    qpu = circuit.qpu if qpu is None else (qpu if isinstance(qpu, QpuSpec) else QpuSpec(qpu))
    c = CnotCounter(qpu, policy)
    stats = c.run(circuit)
    return stats, c.choices


__all__ = ["ChoiceRecord", "CompileReport", "Compiler", "compile_circuit", "count_cnots", "family_cnots"]
