"""Circuit IR and the builder (control, around and adjoint scopes)."""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

from .errors import CapacityExceeded, NotCompiled, ScopeError
from .gates import Aux, GateKind, Instruction, Main, Measurement, QubitRef

OUTSIDE = "outside"  # GateStats key for CNOTs emitted outside any decomposition


@dataclass(frozen=True)
class QpuSpec:
    total: int = 16

    def __post_init__(self):
        if self.total < 1:
            raise ValueError("QPU needs at least one qubit")


class QubitState(Enum):
    CLEAN = "clean"
    DIRTY = "dirty"


class InteractionOrder(Enum):
    """How interaction_qubits orders partners: by first or by latest shared gate."""

    FIRST = "first"
    LAST = "last"


@dataclass
class GateStats:
    cnot_total: int = 0
    per_algorithm: dict[str, int] = field(default_factory=dict)


class Circuit:
    """Ordered instructions plus clean/dirty state and an interaction log."""

    def __init__(self, qpu: QpuSpec | int = 16, order: InteractionOrder = InteractionOrder.FIRST):
        self.qpu = qpu if isinstance(qpu, QpuSpec) else QpuSpec(qpu)
        self.order = order
        self.instructions: list[Instruction | Measurement] = []
        self.n_allocated = 0
        self._dirty: set[Main] = set()
        self._log: dict[QubitRef, dict[QubitRef, None]] = {}

    # state ---------------------------------------------------------------
    def qubit_state(self, q: QubitRef) -> QubitState:
        return QubitState.DIRTY if q in self._dirty else QubitState.CLEAN

    def mark_dirty(self, qubits: Iterable[QubitRef]) -> None:
        self._dirty.update(q for q in qubits if isinstance(q, Main))

    def clean_qubits(self) -> set[Main]:
        """Every Main up to qpu.total (allocated or not) never touched by a user instruction."""
        return {Main(i) for i in range(self.qpu.total)} - self._dirty

    def n_clean(self) -> int:
        return self.qpu.total - len(self._dirty)

    # interactions ----------------------------------------------------------
    def record_interaction(self, a: QubitRef, b: QubitRef) -> None:
        for p, q in ((a, b), (b, a)):
            log = self._log.setdefault(p, {})
            if self.order is InteractionOrder.LAST:
                log.pop(q, None)
            log.setdefault(q, None)

    def interaction_qubits(self, q: QubitRef) -> list[QubitRef]:
        return list(self._log.get(q, ()))

    def merge_interactions(self, src: QubitRef, dst: QubitRef) -> None:
        """Move src's log onto dst (used when an auxiliary lands on its host)."""
        partners = self._log.pop(src, {})
        dst_log = self._log.setdefault(dst, {})
        for p in partners:
            plog = self._log.get(p)
            if plog is not None:
                plog.pop(src, None)
            if p == dst:
                continue
            if self.order is InteractionOrder.LAST:
                dst_log.pop(p, None)
            dst_log.setdefault(p, None)
            plog = self._log.setdefault(p, {})
            if self.order is InteractionOrder.LAST:
                plog.pop(dst, None)
            plog.setdefault(dst, None)

    # appending -------------------------------------------------------------
    def append(self, instr: Instruction | Measurement, *, user: bool = True) -> None:
        self.instructions.append(instr)
        if isinstance(instr, Measurement):
            if user:
                self.mark_dirty(instr.qubits)
            return
        if user:
            self.mark_dirty(instr.qubits)
        if len(instr.controls) == 1:
            self.record_interaction(instr.controls[0], instr.target)

    def extend(self, instrs: Iterable[Instruction], *, user: bool = True) -> None:
        for ins in instrs:
            self.append(ins, user=user)

    @property
    def gates(self) -> list[Instruction]:
        return [i for i in self.instructions if isinstance(i, Instruction)]

    def num_qubits(self) -> int:
        """Width needed to hold every referenced Main line."""
        top = self.n_allocated - 1
        for ins in self.instructions:
            qs = ins.qubits if isinstance(ins, Measurement) else ins.qubits
            for q in qs:
                if isinstance(q, Main):
                    top = max(top, q.index)
        return top + 1

    def __len__(self) -> int:
        return len(self.instructions)

    def __iter__(self) -> Iterator[Instruction | Measurement]:
        return iter(self.instructions)


def is_compiled(circuit: Circuit) -> bool:
    for ins in circuit.gates:
        if len(ins.controls) > 1 or (ins.controls and ins.gate is not GateKind.X):
            return False
        if any(isinstance(q, Aux) for q in ins.qubits):
            return False
    return True


def gate_stats(circuit: Circuit) -> GateStats:
    """CNOT totals, overall and per decomposition tag."""
    if not is_compiled(circuit):
        raise NotCompiled("circuit still holds multi-controlled gates or aux refs")
    per: Counter[str] = Counter()
    for ins in circuit.gates:
        if ins.controls:
            per[ins.tag or OUTSIDE] += 1
    return GateStats(sum(per.values()), dict(per))


class Process:
    """Builder mirroring high-level scoped programming of a circuit."""

    def __init__(self, qpu: QpuSpec | int = 16, order: InteractionOrder = InteractionOrder.FIRST):
        self.circuit = Circuit(qpu, order)
        self._controls: list[QubitRef] = []
        self._sinks: list[list] = []
        self._exempt: list[int] = []  # control-stack depth at each exempt recording

    @property
    def qpu(self) -> QpuSpec:
        return self.circuit.qpu

    def allocate(self, n: int) -> list[Main]:
        start = self.circuit.n_allocated
        if n < 1 or start + n > self.qpu.total:
            raise CapacityExceeded(f"cannot allocate {n} qubits: {start} of {self.qpu.total} in use")
        self.circuit.n_allocated += n
        return [Main(i) for i in range(start, start + n)]

    # emission ----------------------------------------------------------------
    def _emit(self, item: Instruction | Measurement, exempt: bool) -> None:
        if self._sinks:
            self._sinks[-1].append((item, exempt))
        else:
            self.circuit.append(item, user=not exempt)

    def apply(self, gate: GateKind, target: QubitRef, theta: float | None = None,
              global_phase: float = 0.0) -> None:
        if gate.parametric and theta == 0.0:
            return
        # a conjugation drops the scopes around it, not the ones it opens itself
        controls = tuple(self._controls[self._exempt[-1]:] if self._exempt else self._controls)
        if target in controls:
            raise ScopeError(f"{target} is both target and control")
        self._emit(Instruction(gate, target, controls, theta, global_phase), bool(self._exempt))

    def measure(self, *qubits: QubitRef) -> None:
        self._emit(Measurement(tuple(qubits)), False)

    def x(self, q): self.apply(GateKind.X, q)
    def y(self, q): self.apply(GateKind.Y, q)
    def z(self, q): self.apply(GateKind.Z, q)
    def h(self, q): self.apply(GateKind.H, q)
    def rx(self, theta, q): self.apply(GateKind.RX, q, theta)
    def ry(self, theta, q): self.apply(GateKind.RY, q, theta)
    def rz(self, theta, q): self.apply(GateKind.RZ, q, theta)
    def p(self, theta, q): self.apply(GateKind.P, q, theta)

    # scopes ------------------------------------------------------------------
    @contextmanager
    def control(self, *qubits: QubitRef):
        qs = list(qubits)
        if len(set(qs)) != len(qs) or set(qs) & set(self._controls):
            raise ScopeError("duplicate control")
        self._controls.extend(qs)
        try:
            yield
        finally:
            del self._controls[len(self._controls) - len(qs):]

    def _record(self, body: Callable[[], None], exempt: bool) -> list[tuple]:
        self._sinks.append([])
        if exempt:
            self._exempt.append(len(self._controls))
        try:
            body()
        finally:
            if exempt:
                self._exempt.pop()
            items = self._sinks.pop()
        return items

    @contextmanager
    def around(self, conjugation: Callable[[], None]):
        """Emit conjugation (outside the control scope), the body, then conjugation's adjoint."""
        items = self._record(conjugation, exempt=True)
        if any(isinstance(i, Measurement) for i, _ in items):
            raise ScopeError("conjugation may not measure")
        for item, ex in items:
            self._emit(item, ex)
        yield
        for item, ex in reversed(items):
            self._emit(item.inverse(), ex)

    def adjoint(self, body: Callable[[], None]) -> None:
        """Issue the inverse of body's instructions in reverse order."""
        items = self._record(body, exempt=False)
        if any(isinstance(i, Measurement) for i, _ in items):
            raise ScopeError("cannot invert a body that measures")
        for item, ex in reversed(items):
            self._emit(item.inverse(), ex)

    # queries -----------------------------------------------------------------
    def interaction_qubits(self, q: QubitRef) -> list[QubitRef]:
        return self.circuit.interaction_qubits(q)

    def clean_qubits(self) -> set[Main]:
        return self.circuit.clean_qubits()
