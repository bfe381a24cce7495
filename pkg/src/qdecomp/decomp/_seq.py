"""Minimal sequence builder used by every decomposition."""

from __future__ import annotations

from ..gates import GateKind, Instruction, QubitRef


class Seq(list):
    """A list of Instruction with helpers; rotations by exactly 0 are elided."""

    def __init__(self, tag: str | None = None):
        super().__init__()
        self.tag = tag

    def gate(self, kind: GateKind, q: QubitRef, theta: float | None = None) -> Seq:
        if kind.parametric and theta == 0.0:
            return self
        self.append(Instruction(kind, q, (), theta, tag=self.tag))
        return self

    def cx(self, c: QubitRef, t: QubitRef) -> Seq:
        self.append(Instruction(GateKind.X, t, (c,), tag=self.tag))
        return self

    def h(self, q): return self.gate(GateKind.H, q)
    def x(self, q): return self.gate(GateKind.X, q)
    def rx(self, theta, q): return self.gate(GateKind.RX, q, theta)
    def ry(self, theta, q): return self.gate(GateKind.RY, q, theta)
    def rz(self, theta, q): return self.gate(GateKind.RZ, q, theta)
    def p(self, theta, q): return self.gate(GateKind.P, q, theta)

    def add(self, instrs) -> Seq:
        for ins in instrs:
            self.append(ins.retag(self.tag))
        return self

    def add_inverse(self, instrs) -> Seq:
        for ins in reversed(list(instrs)):
            self.append(ins.inverse().retag(self.tag))
        return self


def cnot_count(instrs) -> int:
    return sum(1 for i in instrs if i.controls)
