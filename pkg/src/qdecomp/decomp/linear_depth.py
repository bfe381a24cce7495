"""Ancilla-free fallback with a quadratic CNOT count.

Pauli and Hadamard targets reduce to C^n X, built as an increment of the
(controls, target) register followed by a decrement of the controls alone.
Each increment is a Fourier-space adder: QFT, one phase per wire, inverse QFT
(m(m-1) controlled phases of two CNOTs each), so C^n X costs exactly 4n^2.
Other targets split U = e^{i a} U' with U' in SU(2): the SU(2) part uses the
linear decomposition and the leftover controlled phase recurses on n-1 controls.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from ..gates import PAULIS, GateKind, Instruction, QubitRef
from ._seq import Seq
from .cu2 import decompose_cu2, pauli_basis_change
from .su2 import decompose_su2
from .types import Family


def _cphase(out: Seq, phi: float, a: QubitRef, b: QubitRef) -> None:
    out.add(decompose_cu2(Instruction(GateKind.P, b, (a,), phi), tag=out.tag))


def _qft(reg: Sequence[QubitRef], tag) -> Seq:
    """QFT without the final swaps; reg[0] is the least significant bit."""
    out = Seq(tag)
    for j in range(len(reg) - 1, -1, -1):
        out.h(reg[j])
        for k in range(j - 1, -1, -1):
            _cphase(out, math.pi / 2 ** (j - k), reg[k], reg[j])
    return out


def increment(reg: Sequence[QubitRef], tag: str | None = None) -> Seq:
    """|x> -> |x + 1 mod 2^m>, reg[0] least significant."""
    qft = _qft(reg, tag)
    out = Seq(tag).add(qft)
    for j, q in enumerate(reg):
        out.p(2 * math.pi / 2 ** (j + 1), q)
    return out.add_inverse(qft)


def mcx_linear_depth(controls: Sequence[QubitRef], target: QubitRef, tag: str | None = None) -> Seq:
    """C^n X = decrement(controls) . increment(controls + target)."""
    controls = list(controls)
    if len(controls) == 1:
        return Seq(tag).cx(controls[0], target)
    return Seq(tag).add(increment([*controls, target], tag)).add_inverse(increment(controls, tag))


def decompose_linear_depth(instr: Instruction, controls: Sequence[QubitRef] | None = None,
                           target: QubitRef | None = None,
                           tag: str | None = Family.LINEAR_DEPTH.tag) -> Seq:
    controls = list(controls if controls is not None else instr.controls)
    target = target if target is not None else instr.target
    n = len(controls)
    if n <= 1:
        return decompose_cu2(instr, controls[0], target, tag)
    out = Seq(tag)
    gate = instr.gate
    if gate in PAULIS or gate is GateKind.H:
        if gate is GateKind.H:
            out.ry(-math.pi / 4, target)
            pre, post = pauli_basis_change(GateKind.Z, target, tag)
        else:
            pre, post = pauli_basis_change(gate, target, tag)
        out.add(pre).add(mcx_linear_depth(controls, target, tag)).add(post)
        if gate is GateKind.H:
            out.ry(math.pi / 4, target)
        return out.add(_phase_fix(controls, instr.global_phase, tag))
    m = instr.matrix()
    alpha = cmath.phase(np.linalg.det(m)) / 2
    out.add(decompose_su2(m * cmath.exp(-1j * alpha), controls, target, tag))
    return out.add(_phase_fix(controls, alpha + instr.global_phase, tag))


def _phase_fix(controls: list[QubitRef], phi: float, tag) -> Seq:
    """Phase phi on the all-ones state of `controls`, recursing on a halved angle."""
    if phi == 0.0:
        return Seq(tag)
    inner = Instruction(GateKind.P, controls[-1], tuple(controls[:-1]), phi) if len(controls) > 1 else None
    if inner is None:
        return Seq(tag).p(phi, controls[0])
    return decompose_linear_depth(inner, tag=tag)
