"""Gate set, qubit references and the instruction record."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache

import numpy as np


class GateKind(Enum):
    X = "x"
    Y = "y"
    Z = "z"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    P = "p"
    H = "h"

    @property
    def parametric(self) -> bool:
        return self in _PARAMETRIC

    @property
    def special_unitary(self) -> bool:
        return self in (GateKind.RX, GateKind.RY, GateKind.RZ)


_PARAMETRIC = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.P})
PAULIS = frozenset({GateKind.X, GateKind.Y, GateKind.Z})


class GateClass(Enum):
    """Selection class of a target gate (one candidate list per class)."""

    PAULI = "pauli"
    ROTATION = "rotation"
    PHASE = "phase"
    HADAMARD = "hadamard"


def gate_class(kind: GateKind) -> GateClass:
    if kind in PAULIS:
        return GateClass.PAULI
    if kind.special_unitary:
        return GateClass.ROTATION
    if kind is GateKind.P:
        return GateClass.PHASE
    return GateClass.HADAMARD


_SQ2 = 1.0 / math.sqrt(2.0)


@lru_cache(maxsize=4096)
def _matrix_cached(kind: GateKind, theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    if kind is GateKind.X:
        m = [[0, 1], [1, 0]]
    elif kind is GateKind.Y:
        m = [[0, -1j], [1j, 0]]
    elif kind is GateKind.Z:
        m = [[1, 0], [0, -1]]
    elif kind is GateKind.H:
        m = [[_SQ2, _SQ2], [_SQ2, -_SQ2]]
    elif kind is GateKind.RX:
        m = [[c, -1j * s], [-1j * s, c]]
    elif kind is GateKind.RY:
        m = [[c, -s], [s, c]]
    elif kind is GateKind.RZ:
        m = [[complex(c, -s), 0], [0, complex(c, s)]]
    else:
        m = [[1, 0], [0, complex(math.cos(theta), math.sin(theta))]]
    out = np.array(m, dtype=np.complex128)
    out.setflags(write=False)
    return out


def gate_matrix(kind: GateKind, theta: float | None = None) -> np.ndarray:
    """2x2 matrix of a gate. RX/RY/RZ use exp(-i*theta*P/2); P is diag(1, e^{i*theta})."""
    return _matrix_cached(kind, float(theta) if kind.parametric else 0.0)


@dataclass(frozen=True, order=True)
class Main:
    """Programmer-allocated circuit line."""

    index: int

    def __repr__(self) -> str:
        return f"q{self.index}"


@dataclass(frozen=True, order=True)
class Aux:
    """Compiler-created auxiliary line, alive until its group is allocated."""

    group: int
    index: int

    def __repr__(self) -> str:
        return f"a{self.group}.{self.index}"


QubitRef = Main | Aux


@dataclass(frozen=True)
class Instruction:
    """A (possibly multi-controlled) single-target gate application."""

    gate: GateKind
    target: QubitRef
    controls: tuple[QubitRef, ...] = ()
    theta: float | None = None
    global_phase: float = 0.0
    tag: str | None = None

    def __post_init__(self):
        if self.gate.parametric and self.theta is None:
            raise ValueError(f"{self.gate.name} needs an angle")
        if not self.gate.parametric and self.theta is not None:
            object.__setattr__(self, "theta", None)
        if self.target in self.controls:
            raise ValueError("target is also a control")
        if len(set(self.controls)) != len(self.controls):
            raise ValueError("duplicate control")

    @property
    def qubits(self) -> tuple[QubitRef, ...]:
        return self.controls + (self.target,)

    @property
    def is_cnot(self) -> bool:
        return self.gate is GateKind.X and len(self.controls) == 1

    def matrix(self) -> np.ndarray:
        return gate_matrix(self.gate, self.theta)

    def _with(self, **changes) -> Instruction:
        # fast copy for changes that cannot break the invariants checked in __post_init__
        new = object.__new__(Instruction)
        new.__dict__.update(self.__dict__)
        new.__dict__.update(changes)
        return new

    def inverse(self) -> Instruction:
        if self.gate.parametric:
            return self._with(theta=-self.theta, global_phase=-self.global_phase)
        if self.gate is GateKind.H or self.gate in PAULIS:
            return self._with(global_phase=-self.global_phase) if self.global_phase else self
        raise AssertionError(self.gate)

    def retag(self, tag: str | None) -> Instruction:
        return self if tag == self.tag else self._with(tag=tag)

    def remap(self, mapping: dict) -> Instruction:
        return replace(
            self,
            target=mapping.get(self.target, self.target),
            controls=tuple(mapping.get(c, c) for c in self.controls),
        )


@dataclass(frozen=True)
class Measurement:
    """Terminal measurement of a set of qubits."""

    qubits: tuple[QubitRef, ...] = field(default_factory=tuple)
