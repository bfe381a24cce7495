"""Decomposition selection, expansion and auxiliary allocation."""

from .allocation import Placement, allocate_aux, select_main
from .compile import ChoiceRecord, CompileReport, Compiler, compile_circuit, count_cnots, family_cnots
from .expand import AuxGroup, expand
from .selection import CANDIDATES, Policy, SelectionContext, feasible, select_decomposition

__all__ = [
    "CANDIDATES",
    "AuxGroup",
    "ChoiceRecord",
    "CompileReport",
    "Compiler",
    "Placement",
    "Policy",
    "SelectionContext",
    "allocate_aux",
    "compile_circuit",
    "count_cnots",
    "expand",
    "family_cnots",
    "feasible",
    "select_decomposition",
    "select_main",
]
