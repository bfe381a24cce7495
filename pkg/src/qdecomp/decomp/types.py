"""Decomposition families and the selection result."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Family(Enum):
    CU2 = "CU2"
    SPECIFIC_PAULI = "SpecificPauli"
    APPROX_TOFFOLI = "ApproxToffoli"
    NETWORK = "Network"
    VCHAIN = "VChain"
    SINGLE_AUX = "SingleAux"
    SU2 = "SU2"
    SU2_REWRITE = "SU2Rewrite"
    LINEAR_DEPTH = "LinearDepth"

    @property
    def tag(self) -> str:
        return self.value


class AuxState(Enum):
    CLEAN = "Clean"
    DIRTY = "Dirty"
    NA = "NotApplicable"


@dataclass(frozen=True)
class DecompChoice:
    family: Family
    aux_count: int = 0
    aux_state: AuxState = AuxState.NA

    def __post_init__(self):
        if self.aux_count < 0:
            raise ValueError("negative aux count")
        if (self.aux_count == 0) != (self.aux_state is AuxState.NA):
            raise ValueError("aux_state must be NotApplicable exactly when no aux is used")

    @classmethod
    def for_family(cls, family: Family, n: int, state: AuxState | None = None) -> DecompChoice:
        """Auxiliary requirement of a family for n controls."""
        if family is Family.VCHAIN:
            count = max(n - 2, 0)
        elif family is Family.SINGLE_AUX:
            count = 1
        elif family is Family.NETWORK:
            count, state = n - 1, AuxState.CLEAN
        elif family is Family.SU2_REWRITE:
            count, state = 1, AuxState.CLEAN
        else:
            count = 0
        if count == 0:
            state = AuxState.NA
        elif state is None or state is AuxState.NA:
            raise ValueError(f"{family.value} needs an aux state")
        return cls(family, count, state)

    def label(self) -> str:
        if self.aux_state is AuxState.NA:
            return self.family.value
        return f"{self.family.value}-{self.aux_state.value}"
