"""Dense unitary construction and equivalence checks (qubit 0 = most significant bit)."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..circuit import Circuit
from ..errors import TooLarge
from ..gates import GateKind, Instruction, Measurement, QubitRef

MAX_QUBITS = 13
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class EquivalenceReport:
    equal: bool
    phase: float
    max_abs_deviation: float

    def to_dict(self) -> dict:
        return {"equal": self.equal, "phase": self.phase, "max_abs_deviation": self.max_abs_deviation}


def _kernels():
    from . import kernels
    return kernels


def _instructions(circuit) -> list[Instruction]:
    items = circuit.instructions if isinstance(circuit, Circuit) else list(circuit)
    out = []
    for ins in items:
        if isinstance(ins, Measurement):
            raise ValueError("contains-measurement: oracle handles gate-only circuits")
        out.append(ins)
    return out


def default_order(instrs: Iterable[Instruction]) -> list[QubitRef]:
    """Mains by index, then auxiliaries by (group, index)."""
    seen = {q for ins in instrs for q in ins.qubits}
    return sorted(seen, key=lambda q: (type(q).__name__ != "Main", q))


def apply_instructions(state: np.ndarray, instrs: Iterable[Instruction], order: Sequence[QubitRef]) -> np.ndarray:
    """Apply instructions in place to the columns of `state`."""
    k = len(order)
    bit = {q: 1 << (k - 1 - p) for p, q in enumerate(order)}
    kern = _kernels()
    for ins in instrs:
        tbit = bit[ins.target]
        cmask = 0
        for c in ins.controls:
            cmask |= bit[c]
        if ins.gate is GateKind.X and ins.global_phase == 0.0:
            kern.apply_cx(state, tbit, cmask)
            continue
        m = ins.matrix()
        if ins.global_phase:
            m = m * cmath.exp(1j * ins.global_phase)
        kern.apply_gate(state, np.ascontiguousarray(m, dtype=np.complex128), tbit, cmask)
    return state


def circuit_unitary(circuit, qubit_order: Sequence[QubitRef] | None = None,
                    columns: Sequence[int] | None = None) -> np.ndarray:
    """Unitary of a gate-only circuit, or only the requested columns of it."""
    instrs = _instructions(circuit)
    order = list(qubit_order) if qubit_order is not None else default_order(instrs)
    if len(order) > MAX_QUBITS:
        raise TooLarge(f"{len(order)} qubits exceeds the oracle bound of {MAX_QUBITS}")
    dim = 1 << len(order)
    cols = np.arange(dim) if columns is None else np.asarray(columns, dtype=np.int64)
    state = np.zeros((dim, len(cols)), dtype=np.complex128)
    state[cols, np.arange(len(cols))] = 1.0
    return apply_instructions(state, instrs, order)


def simulate_state(circuit, qubit_order: Sequence[QubitRef] | None = None, initial: int = 0) -> np.ndarray:
    """Statevector from basis state `initial`; terminal measurements are ignored."""
    items = circuit.instructions if isinstance(circuit, Circuit) else list(circuit)
    gates = [i for i in items if isinstance(i, Instruction)]
    return circuit_unitary(gates, qubit_order, columns=[initial])[:, 0]


def controlled_unitary(u: np.ndarray, n_controls: int) -> np.ndarray:
    """Block-controlled matrix, controls first (most significant), target last."""
    dim = 2 ** (n_controls + 1)
    out = np.eye(dim, dtype=np.complex128)
    out[dim - 2:, dim - 2:] = u
    return out


def equal_up_to_global_phase(u: np.ndarray, v: np.ndarray, tol: float = DEFAULT_TOL) -> EquivalenceReport:
    """Align phases on the largest-magnitude entry of u, then compare elementwise."""
    if u.shape != v.shape:
        raise ValueError(f"dimension-mismatch: {u.shape} vs {v.shape}")
    idx = np.unravel_index(np.argmax(np.abs(u)), u.shape)
    if abs(v[idx]) < 1e-300:
        return EquivalenceReport(False, 0.0, float(np.max(np.abs(u - v))))
    phase = cmath.phase(u[idx] / v[idx])
    dev = float(np.max(np.abs(u - cmath.exp(1j * phase) * v)))
    return EquivalenceReport(dev <= tol, phase, dev)


def verify_decomposition(ideal: Instruction, emitted: Sequence[Instruction],
                         aux: Sequence[QubitRef] = (), aux_clean: bool = True,
                         tol: float = DEFAULT_TOL) -> EquivalenceReport:
    """Check emitted against the ideal controlled gate.

    Clean aux: columns with aux = |0..0> must map as the ideal gate with aux back at |0..0>.
    Dirty aux: the full matrix must equal ideal (x) identity.
    """
    mains = [*ideal.controls, ideal.target]
    order = mains + list(aux)
    if len(order) > MAX_QUBITS:
        raise TooLarge(f"{len(order)} qubits exceeds the oracle bound of {MAX_QUBITS}")
    stray = {q for ins in emitted for q in ins.qubits} - set(order)
    if stray:
        raise ValueError(f"emitted sequence touches qubits outside the instance: {sorted(map(repr, stray))}")
    na = len(aux)
    ideal_main = circuit_unitary([ideal], mains)
    if na == 0 or not aux_clean:
        got = circuit_unitary(emitted, order)
        want = np.kron(ideal_main, np.eye(1 << na)) if na else ideal_main
        return equal_up_to_global_phase(got, want, tol)
    cols = np.arange(1 << len(mains)) << na
    got = circuit_unitary(emitted, order, columns=cols)
    want = np.zeros_like(got)
    want[cols, :] = ideal_main
    return equal_up_to_global_phase(got, want, tol)
