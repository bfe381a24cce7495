"""Dispatch a selected family to its decomposition on fresh auxiliary refs."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..decomp._seq import Seq
from ..decomp.cu2 import decompose_cu2
from ..decomp.linear_depth import decompose_linear_depth
from ..decomp.network import decompose_network
from ..decomp.pauli import decompose_specific_pauli
from ..decomp.su2 import decompose_su2, decompose_su2_rewrite
from ..decomp.types import AuxState, DecompChoice, Family
from ..decomp.vchain import decompose_single_aux, decompose_vchain
from ..gates import Aux, Instruction, Main


@dataclass
class AuxGroup:
    group_id: int
    aux: list[Aux]
    interaction: frozenset[Main] = field(default_factory=frozenset)
    required_state: AuxState = AuxState.CLEAN


def expand(instr: Instruction, choice: DecompChoice, group_id: int = 0) -> tuple[Seq, AuxGroup | None]:
    """Emit the decomposition of instr; global phase must already be folded or stripped."""
    aux = [Aux(group_id, i) for i in range(choice.aux_count)]
    ctrls, tgt, fam = list(instr.controls), instr.target, choice.family
    if fam is Family.CU2:
        seq = decompose_cu2(instr)
    elif fam is Family.SPECIFIC_PAULI:
        seq = decompose_specific_pauli(instr.gate, ctrls, tgt)
    elif fam is Family.VCHAIN:
        seq = decompose_vchain(instr.gate, ctrls, tgt, aux, choice.aux_state)
    elif fam is Family.SINGLE_AUX:
        seq = decompose_single_aux(instr.gate, ctrls, tgt, aux[0], choice.aux_state)
    elif fam is Family.NETWORK:
        seq = decompose_network(instr, aux)
    elif fam is Family.SU2:
        seq = decompose_su2(instr, ctrls, tgt)
    elif fam is Family.SU2_REWRITE:
        seq = decompose_su2_rewrite(instr, aux[0], choice.aux_state)
    elif fam is Family.LINEAR_DEPTH:
        seq = decompose_linear_depth(instr)
    else:
        raise ValueError(f"{fam} is not selectable")
    if not aux:
        return seq, None
    dirty = choice.aux_state is AuxState.DIRTY
    inter = frozenset(q for q in instr.qubits if isinstance(q, Main)) if dirty else frozenset()
    return seq, AuxGroup(group_id, aux, inter, choice.aux_state)
