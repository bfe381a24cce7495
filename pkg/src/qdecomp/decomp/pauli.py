"""Exact small multi-controlled Paulis and the 3-CNOT approximate Toffoli."""

from __future__ import annotations

import math

from ..gates import GateKind, QubitRef
from ._seq import Seq
from .cu2 import pauli_basis_change
from .types import Family


def gray_phase(qubits: list[QubitRef], theta: float, tag: str | None = None) -> Seq:
    """Phase theta on the all-ones state of `qubits` using 2^m - 2 CNOTs.

    Expands the AND of m bits over parities and visits every parity with a
    Gray-code walk that accumulates on one line per stage.
    """
    out = Seq(tag)
    m = len(qubits)
    scale = theta / 2 ** (m - 1)
    for k in range(m):
        acc, lower = qubits[k], qubits[:k]
        prev = 0
        for i in range(2 ** k):
            g = i ^ (i >> 1)
            if g != prev:
                out.cx(lower[(g ^ prev).bit_length() - 1], acc)
            sign = -1 if bin(g).count("1") % 2 else 1
            out.p(sign * scale, acc)
            prev = g
        if k:
            out.cx(lower[prev.bit_length() - 1], acc)
    return out


def decompose_specific_pauli(pauli: GateKind, controls: list[QubitRef], target: QubitRef,
                             tag: str | None = Family.SPECIFIC_PAULI.tag) -> Seq:
    """Exact C^2 / C^3 Pauli: 6 and 14 CNOTs."""
    if len(controls) not in (2, 3):
        raise ValueError("specific Pauli decompositions cover 2 or 3 controls")
    out = Seq(tag)
    if pauli is GateKind.Z:
        return out.add(gray_phase([*controls, target], math.pi, tag))
    pre, post = pauli_basis_change(pauli, target, tag)
    out.add(pre).h(target)
    out.add(gray_phase([*controls, target], math.pi, tag))
    return out.h(target).add(post)


def approx_toffoli(c1: QubitRef, c2: QubitRef, target: QubitRef,
                   tag: str | None = Family.APPROX_TOFFOLI.tag) -> Seq:
    """Toffoli up to a sign on |c1=1, c2=0, t=1>; 3 CNOTs, self-inverse."""
    q = math.pi / 4
    return (Seq(tag).ry(q, target).cx(c2, target).ry(q, target).cx(c1, target)
            .ry(-q, target).cx(c2, target).ry(-q, target))


def exact_toffoli(c1: QubitRef, c2: QubitRef, target: QubitRef, tag: str | None = None) -> Seq:
    return decompose_specific_pauli(GateKind.X, [c1, c2], target, tag)
