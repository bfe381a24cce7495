"""AND-cascade into clean auxiliaries with one controlled gate at the apex."""

from __future__ import annotations

from typing import Sequence

from ..gates import Instruction, QubitRef
from ._seq import Seq
from .cu2 import decompose_cu2
from .pauli import approx_toffoli
from .types import Family


def decompose_network(instr: Instruction, aux: Sequence[QubitRef], controls: Sequence[QubitRef] | None = None,
                      target: QubitRef | None = None, tag: str | None = Family.NETWORK.tag) -> Seq:
    """C^n U with n-1 clean auxiliaries; 6n - 4 CNOTs for non-Pauli U."""
    controls = list(controls if controls is not None else instr.controls)
    target = target if target is not None else instr.target
    n = len(controls)
    if n < 2:
        raise ValueError("Network needs at least 2 controls")
    if len(aux) < n - 1:
        raise ValueError(f"Network needs {n - 1} clean auxiliaries")
    steps = [approx_toffoli(controls[0], controls[1], aux[0], tag)]
    for i in range(1, n - 1):
        steps.append(approx_toffoli(controls[i + 1], aux[i - 1], aux[i], tag))
    out = Seq(tag)
    for s in steps:
        out.add(s)
    out.add(decompose_cu2(instr, aux[n - 2], target, tag))
    for s in reversed(steps):
        out.add_inverse(s)
    return out
