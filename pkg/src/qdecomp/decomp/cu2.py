"""Single-controlled U(2) gates via ZYZ factors (two CNOTs)."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..gates import PAULIS, GateKind, Instruction, QubitRef, gate_matrix
from ._seq import Seq
from .types import Family

_EPS = 1e-12


def rz(t):
    return np.diag([cmath.exp(-0.5j * t), cmath.exp(0.5j * t)])


def ry(t):
    c, s = math.cos(t / 2), math.sin(t / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


@dataclass(frozen=True)
class ZYZFactors:
    """U = e^{i alpha} RZ(beta) RY(gamma) RZ(delta) = e^{i alpha} A X B X C."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    @classmethod
    def from_matrix(cls, u: np.ndarray) -> ZYZFactors:
        u = np.asarray(u, dtype=complex)
        alpha = cmath.phase(np.linalg.det(u)) / 2
        v = u * cmath.exp(-1j * alpha)
        a, b = v[0, 0], v[1, 0]
        gamma = 2 * math.atan2(abs(b), abs(a))
        if abs(b) < _EPS:  # gamma = 0: only beta + delta is defined
            beta, delta, gamma = -2 * cmath.phase(a), 0.0, 0.0
        elif abs(a) < _EPS:  # gamma = pi: only beta - delta is defined
            beta, delta, gamma = 2 * cmath.phase(b), 0.0, math.pi
        else:
            s, d = -2 * cmath.phase(a), 2 * cmath.phase(b)
            beta, delta = (s + d) / 2, (s - d) / 2
        return cls(alpha, beta, gamma, delta)

    def matrix(self) -> np.ndarray:
        return cmath.exp(1j * self.alpha) * rz(self.beta) @ ry(self.gamma) @ rz(self.delta)

    # A, B, C as time-ordered (kind, angle) lists
    @property
    def a_ops(self):
        return [(GateKind.RY, self.gamma / 2), (GateKind.RZ, self.beta)]

    @property
    def b_ops(self):
        return [(GateKind.RZ, -(self.delta + self.beta) / 2), (GateKind.RY, -self.gamma / 2)]

    @property
    def c_ops(self):
        return [(GateKind.RZ, (self.delta - self.beta) / 2)]

    def abc(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        def mat(ops):
            m = np.eye(2, dtype=complex)
            for k, t in ops:
                m = gate_matrix(k, t) @ m
            return m
        return mat(self.a_ops), mat(self.b_ops), mat(self.c_ops)


def pauli_basis_change(pauli: GateKind, target: QubitRef, tag: str | None = None) -> tuple[Seq, Seq]:
    """(pre, post) single-qubit sequences so that pre; X; post acts as the given Pauli."""
    pre, post = Seq(tag), Seq(tag)
    if pauli is GateKind.Z:
        pre.h(target)
        post.h(target)
    elif pauli is GateKind.Y:
        pre.p(-math.pi / 2, target)
        post.p(math.pi / 2, target)
    elif pauli is not GateKind.X:
        raise ValueError(f"{pauli} is not a Pauli gate")
    return pre, post


def decompose_cu2(instr: Instruction, control: QubitRef | None = None, target: QubitRef | None = None,
                  tag: str | None = Family.CU2.tag) -> Seq:
    """Controlled single-qubit gate as C, CX, B, CX, A plus a phase on the control.

    Pauli targets use one CNOT under a basis change.
    """
    control = control if control is not None else instr.controls[0]
    target = target if target is not None else instr.target
    out = Seq(tag)
    phase = instr.global_phase
    if instr.gate in PAULIS:
        pre, post = pauli_basis_change(instr.gate, target, tag)
        out.add(pre).cx(control, target).add(post)
        out.p(phase, control)
        return out
    f = ZYZFactors.from_matrix(instr.matrix())
    for k, t in f.c_ops:
        out.gate(k, target, t)
    out.cx(control, target)
    for k, t in f.b_ops:
        out.gate(k, target, t)
    out.cx(control, target)
    for k, t in f.a_ops:
        out.gate(k, target, t)
    out.p(f.alpha + phase, control)
    return out


def phase_correction(controls: tuple[QubitRef, ...], phi: float, tag: str | None = None) -> Instruction | None:
    """(k-1)-controlled Phase(phi) on the last control, restoring a controlled global phase."""
    if phi == 0.0 or not controls:
        return None
    return Instruction(GateKind.P, controls[-1], tuple(controls[:-1]), phi, tag=tag)
