"""Multi-controlled gate decomposition with automatic auxiliary-qubit management."""

from .circuit import Circuit, GateStats, InteractionOrder, Process, QpuSpec, QubitState, gate_stats
from .gates import Aux, GateClass, GateKind, Instruction, Main, Measurement, gate_class

__version__ = "0.1.0"

__all__ = [
    "Aux",
    "Circuit",
    "GateClass",
    "GateKind",
    "GateStats",
    "Instruction",
    "InteractionOrder",
    "Main",
    "Measurement",
    "Process",
    "QpuSpec",
    "QubitState",
    "gate_class",
    "gate_stats",
]
