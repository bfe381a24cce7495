"""Ancilla-free multi-controlled SU(2) gates and the one-aux rewrite of H and Phase."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import AuxNotClean, NotSpecialUnitary
from ..gates import GateKind, Instruction, QubitRef, gate_matrix
from ._seq import Seq
from .cu2 import ZYZFactors, decompose_cu2
from .types import AuxState, Family
from .vchain import mcx


def _rz(t):
    return np.diag([cmath.exp(-0.5j * t), cmath.exp(0.5j * t)])


@dataclass(frozen=True)
class SU2Factors:
    """U = V D V^dagger with D = RZ(phi) and (A^dagger X A X)^2 = D."""

    V: np.ndarray
    phi: float

    @property
    def D(self) -> np.ndarray:
        return _rz(self.phi)

    @property
    def a_angle(self) -> float:
        return -self.phi / 4

    @property
    def A(self) -> np.ndarray:
        return _rz(self.a_angle)

    @classmethod
    def from_matrix(cls, u: np.ndarray) -> SU2Factors:
        u = np.asarray(u, dtype=complex)
        if abs(np.linalg.det(u) - 1) > 1e-12:
            raise NotSpecialUnitary("matrix determinant is not 1")
        # distinct eigenvalues of a normal matrix: the second eigenvector is the orthogonal complement
        w, vecs = np.linalg.eig(u)
        if abs(w[0] - w[1]) < 1e-9:  # +-I
            vecs = np.eye(2, dtype=complex)
        else:
            vecs[:, 0] /= np.linalg.norm(vecs[:, 0])
            v1 = np.array([-vecs[1, 0].conjugate(), vecs[0, 0].conjugate()])
            vecs = np.column_stack([vecs[:, 0], v1])
        phi = -2 * cmath.phase(w[0])
        return cls(vecs, phi)


def emit_unitary(seq: Seq, u: np.ndarray, q: QubitRef) -> Seq:
    """Uncontrolled 2x2 unitary as RZ, RY, RZ (global phase dropped)."""
    f = ZYZFactors.from_matrix(u)
    return seq.rz(f.delta, q).ry(f.gamma, q).rz(f.beta, q)


def _matrix_of(u) -> np.ndarray:
    if isinstance(u, Instruction):
        m = u.matrix()
        return m * cmath.exp(1j * u.global_phase) if u.global_phase else m
    return np.asarray(u, dtype=complex)


def decompose_su2(u: Instruction | np.ndarray, controls: Sequence[QubitRef], target: QubitRef,
                  tag: str | None = Family.SU2.tag) -> Seq:
    """C^n U for det U = 1 with no auxiliaries: four exact MCX gates and an A/A^dagger ladder."""
    controls = list(controls)
    m = _matrix_of(u)
    if abs(np.linalg.det(m) - 1) > 1e-12:
        raise NotSpecialUnitary("SU(2) decomposition needs a determinant-1 gate")
    n = len(controls)
    if n == 1:
        if isinstance(u, Instruction):
            return decompose_cu2(u, controls[0], target, tag)
        return _cu2_matrix(m, controls[0], target, tag)
    f = SU2Factors.from_matrix(m)
    k0 = n // 2
    c0, c1 = controls[:k0], controls[k0:]
    x0 = mcx(c0, target, borrow=c1, tag=tag)
    x1 = mcx(c1, target, borrow=c0, tag=tag)
    a = f.a_angle
    out = Seq(tag)
    emit_unitary(out, f.V.conj().T, target)
    out.add(x0).rz(a, target).add(x1).rz(-a, target).add(x0).rz(a, target).add(x1).rz(-a, target)
    emit_unitary(out, f.V, target)
    return out


def _cu2_matrix(m: np.ndarray, control: QubitRef, target: QubitRef, tag) -> Seq:
    """Controlled arbitrary 2x2 matrix (two CNOTs)."""
    f = ZYZFactors.from_matrix(m)
    out = Seq(tag)
    for k, t in f.c_ops:
        out.gate(k, target, t)
    out.cx(control, target)
    for k, t in f.b_ops:
        out.gate(k, target, t)
    out.cx(control, target)
    for k, t in f.a_ops:
        out.gate(k, target, t)
    return out.p(f.alpha, control)


# H = e^{i pi/2} * RX(pi) RY(pi/2)
H_BAR = gate_matrix(GateKind.RX, math.pi) @ gate_matrix(GateKind.RY, math.pi / 2)


def decompose_su2_rewrite(instr: Instruction, aux: QubitRef, aux_state: AuxState = AuxState.CLEAN,
                          controls: Sequence[QubitRef] | None = None, target: QubitRef | None = None,
                          tag: str | None = Family.SU2_REWRITE.tag) -> Seq:
    """C^n H or C^n P(theta) through one clean auxiliary using only SU(2) pieces."""
    if aux_state is not AuxState.CLEAN:
        raise AuxNotClean("the rewrite needs a clean auxiliary")
    controls = list(controls if controls is not None else instr.controls)
    target = target if target is not None else instr.target
    phase = instr.global_phase
    out = Seq(tag)
    if instr.gate is GateKind.H:
        out.add(decompose_su2(H_BAR, controls, target, tag))
        phase += math.pi / 2
        out.add(decompose_su2(gate_matrix(GateKind.RZ, -2 * phase), controls, aux, tag))
    elif instr.gate is GateKind.P:
        if phase:  # e^{i phase} on the all-controls subspace
            out.add(decompose_su2(gate_matrix(GateKind.RZ, -2 * phase), controls, aux, tag))
        out.add(decompose_su2(gate_matrix(GateKind.RZ, -2 * instr.theta), [*controls, target], aux, tag))
    else:
        raise ValueError("the rewrite covers Hadamard and Phase gates")
    return out
