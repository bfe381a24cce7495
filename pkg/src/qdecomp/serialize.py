"""Line-oriented JSON circuit format and a QASM-like text export.

Format: a header object {"qubits": N} followed by one object per line, either a gate
{"gate": name, "params": [...], "target": i, "controls": [...], "tag": str | null}
(plus "global_phase" when nonzero) or a measurement {"measure": [...]}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .circuit import Circuit, QpuSpec
from .errors import ParseError
from .gates import Aux, GateKind, Instruction, Main, Measurement
from .decomp.types import AuxState

GATE_NAMES = {
    GateKind.X: "x", GateKind.Y: "y", GateKind.Z: "z", GateKind.H: "h",
    GateKind.RX: "rx", GateKind.RY: "ry", GateKind.RZ: "rz", GateKind.P: "p",
}
_BY_NAME = {v: k for k, v in GATE_NAMES.items()}


def _index(q) -> int:
    if isinstance(q, Aux):
        raise ValueError(f"auxiliary {q!r} cannot be serialized; compile first")
    return q.index


def instruction_to_dict(ins: Instruction) -> dict:
    d = {
        "gate": GATE_NAMES[ins.gate],
        "params": [] if ins.theta is None else [ins.theta],
        "target": _index(ins.target),
        "controls": [_index(c) for c in ins.controls],
        "tag": ins.tag,
    }
    if ins.global_phase:
        d["global_phase"] = ins.global_phase
    return d


def _gate_kind(name) -> GateKind:
    try:
        return _BY_NAME[str(name).lower()]
    except KeyError:
        raise ParseError(f"unknown gate {name!r}") from None


def _qubit(v, n: int, what: str) -> Main:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v:
        raise ParseError(f"{what} must be a non-negative integer, got {v!r}")
    return Main(v)


def instruction_from_dict(d: dict, n: int = 0) -> Instruction:
    if not isinstance(d, dict):
        raise ParseError(f"instruction must be an object, got {d!r}")
    try:
        kind = _gate_kind(d["gate"])
        params = list(d.get("params", []))
        target = _qubit(d["target"], n, "target")
        controls = tuple(_qubit(c, n, "control") for c in d.get("controls", []))
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None
    if kind.parametric != bool(params) or len(params) > 1:
        raise ParseError(f"{kind.name} takes {1 if kind.parametric else 0} parameter(s), got {params}")
    try:
        return Instruction(kind, target, controls, float(params[0]) if params else None,
                           float(d.get("global_phase", 0.0)), d.get("tag"))
    except (TypeError, ValueError) as e:
        raise ParseError(str(e)) from None


def dumps(circuit: Circuit, qubits: int | None = None) -> str:
    lines = [json.dumps({"qubits": circuit.num_qubits() if qubits is None else qubits})]
    for item in circuit.instructions:
        if isinstance(item, Measurement):
            lines.append(json.dumps({"measure": [_index(q) for q in item.qubits]}))
        else:
            lines.append(json.dumps(instruction_to_dict(item)))
    return "\n".join(lines) + "\n"


def _records(text: str) -> Iterable[tuple[int, object]]:
    for k, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                yield k, json.loads(line)
            except json.JSONDecodeError as e:
                raise ParseError(f"line {k}: {e.msg}") from None


def loads(text: str, qpu: QpuSpec | int | None = None) -> Circuit:
    """Parse the JSON-lines format; the header's qubit count becomes the allocated width."""
    recs = list(_records(text))
    if not recs or not isinstance(recs[0][1], dict) or "qubits" not in recs[0][1]:
        raise ParseError('first line must be a header {"qubits": N}')
    n = recs[0][1]["qubits"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"qubit count must be a positive integer, got {n!r}")
    circ = Circuit(qpu if qpu is not None else max(n, 16))
    circ.n_allocated = n
    for k, rec in recs[1:]:
        try:
            if isinstance(rec, dict) and "measure" in rec:
                item = Measurement(tuple(_qubit(q, n, "measured qubit") for q in rec["measure"]))
            else:
                item = instruction_from_dict(rec, n)
        except ParseError as e:
            raise ParseError(f"line {k}: {e}") from None
        bad = [q.index for q in item.qubits if q.index >= n]
        if bad:
            raise ParseError(f"line {k}: qubit {bad[0]} outside the declared {n}")
        circ.append(item)
    return circ


def load(path: str | Path, qpu: QpuSpec | int | None = None) -> Circuit:
    return loads(Path(path).read_text(), qpu)


def dump(circuit: Circuit, path: str | Path) -> None:
    Path(path).write_text(dumps(circuit))


def to_qasm(circuit: Circuit) -> str:
    """Diagnostic text form: `qubits N;` then one gate per line."""
    lines = [f"qubits {circuit.num_qubits()};"]
    for item in circuit.instructions:
        if isinstance(item, Measurement):
            lines.append("measure " + ", ".join(f"q[{_index(q)}]" for q in item.qubits) + ";")
            continue
        name = GATE_NAMES[item.gate]
        if item.theta is not None:
            name += f"({item.theta!r})"
        if item.controls:
            name = ("c" if len(item.controls) == 1 else f"ctrl({len(item.controls)}) ") + name
        args = ", ".join(f"q[{_index(q)}]" for q in (*item.controls, item.target))
        lines.append(f"{name} {args};")
    return "\n".join(lines) + "\n"


@dataclass
class IdealDescriptor:
    """The gate a circuit file is supposed to implement, for `verify`.

    Every qubit of the file outside controls + target is an auxiliary line: with
    aux_state clean only inputs with those lines at |0> are checked, with dirty the
    full matrix must factor as ideal (x) identity.
    """

    gate: Instruction
    aux: list[Main] = field(default_factory=list)
    aux_state: AuxState = AuxState.CLEAN

    @classmethod
    def from_dict(cls, d: dict, n_qubits: int) -> IdealDescriptor:
        gate = instruction_from_dict({"params": [], "controls": [], **d}, n_qubits)
        raw = str(d.get("aux_state", "clean")).lower()
        if raw not in ("clean", "dirty"):
            raise ParseError(f"aux_state must be clean or dirty, got {raw!r}")
        state = AuxState.CLEAN if raw == "clean" else AuxState.DIRTY
        used = set(gate.qubits)
        if any(q.index >= n_qubits for q in used):
            raise ParseError("descriptor references qubits outside the circuit")
        aux = [Main(i) for i in range(n_qubits) if Main(i) not in used]
        return cls(gate, aux, state)

    @classmethod
    def load(cls, path: str | Path, n_qubits: int) -> IdealDescriptor:
        try:
            d = json.loads(Path(path).read_text())
        except json.JSONDecodeError as e:
            raise ParseError(f"descriptor: {e.msg}") from None
        if not isinstance(d, dict):
            raise ParseError("descriptor must be a JSON object")
        return cls.from_dict(d, n_qubits)


__all__ = ["GATE_NAMES", "IdealDescriptor", "dump", "dumps", "instruction_from_dict", "instruction_to_dict",
           "load", "loads", "to_qasm"]
