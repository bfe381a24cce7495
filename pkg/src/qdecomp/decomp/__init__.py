"""Decompositions of multi-controlled single-target gates into single-qubit gates and CNOTs."""

from .cu2 import ZYZFactors, decompose_cu2, pauli_basis_change, phase_correction
from .linear_depth import decompose_linear_depth, increment, mcx_linear_depth
from .network import decompose_network
from .pauli import approx_toffoli, decompose_specific_pauli, gray_phase
from .su2 import SU2Factors, decompose_su2, decompose_su2_rewrite
from .types import AuxState, DecompChoice, Family
from .vchain import decompose_single_aux, decompose_vchain, mcx

__all__ = [
    "AuxState",
    "DecompChoice",
    "Family",
    "SU2Factors",
    "ZYZFactors",
    "approx_toffoli",
    "decompose_cu2",
    "decompose_linear_depth",
    "decompose_network",
    "decompose_single_aux",
    "decompose_specific_pauli",
    "decompose_su2",
    "decompose_su2_rewrite",
    "decompose_vchain",
    "gray_phase",
    "increment",
    "mcx",
    "mcx_linear_depth",
    "pauli_basis_change",
    "phase_correction",
]
