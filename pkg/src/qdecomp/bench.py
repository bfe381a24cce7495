"""Benchmark circuits (Grover, state preparation) and per-family CNOT tables."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .circuit import Circuit, Process, QpuSpec
from .compiler import Policy, compile_circuit, count_cnots
from .gates import Main


class Algorithm(Enum):
    GROVER = "grover"
    STATE_PREP = "state-prep"


@dataclass
class ParamTree:
    """Binary tree of RY angles; leaves also hold the two phases."""

    value: float
    left: ParamTree | None = None
    right: ParamTree | None = None
    phase0: float = 0.0
    phase1: float = 0.0

    @classmethod
    def build(cls, prob: Sequence[float], amp: Sequence[float]) -> ParamTree:
        total = float(sum(prob))
        p = [x / total for x in prob] if total > 0 else [0.0] * len(prob)
        half = len(p) // 2
        right = min(1.0, max(0.0, sum(p[half:])))
        value = 2 * math.asin(math.sqrt(right))
        if len(p) > 2:
            return cls(value, cls.build(p[:half], amp[:half]), cls.build(p[half:], amp[half:]))
        return cls(value, phase0=float(amp[0]), phase1=float(amp[1]))

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


def _check_inputs(prob: Sequence[float], phases: Sequence[float]) -> int:
    m = len(prob)
    if m != len(phases) or m < 2 or m & (m - 1):
        raise ValueError("invalid-lengths: probabilities and phases need equal power-of-two length >= 2")
    if any(p < 0 for p in prob) or not any(p > 0 for p in prob):
        raise ValueError("probabilities must be non-negative and not all zero")
    return m.bit_length() - 1


def prepare(proc: Process, qubits: Sequence[Main], tree: ParamTree) -> None:
    head, *tail = qubits
    proc.ry(tree.value, head)
    if tree.is_leaf:
        with proc.around(lambda: proc.x(head)):
            proc.p(tree.phase0, head)
        proc.p(tree.phase1, head)
        return
    with proc.around(lambda: proc.x(head)):
        with proc.control(head):
            prepare(proc, tail, tree.left)
    with proc.control(head):
        prepare(proc, tail, tree.right)


def state_prep_circuit(probabilities: Sequence[float], phases: Sequence[float],
                       qpu: QpuSpec | int = 16) -> Circuit:
    """Circuit preparing sum_k sqrt(r_k) e^{i theta_k} |k> (qubit 0 most significant)."""
    n = _check_inputs(probabilities, phases)
    proc = Process(qpu)
    qubits = proc.allocate(n)
    prepare(proc, qubits, ParamTree.build(probabilities, phases))
    return proc.circuit


def grover_steps(n: int) -> int:
    return int((math.pi / 4) * math.sqrt(2 ** n))


def grover_circuit(n: int, qpu: QpuSpec | int = 16, measure: bool = True) -> Circuit:
    """Grover search marking |1...1> on n qubits."""
    if n < 2:
        raise ValueError("Grover needs at least 2 qubits")
    proc = Process(qpu)
    qs = proc.allocate(n)

    def mcz():
        with proc.control(*qs[:-1]):
            proc.z(qs[-1])

    def hx():
        for q in qs:
            proc.h(q)
            proc.x(q)

    for q in qs:
        proc.h(q)
    for _ in range(grover_steps(n)):
        mcz()
        with proc.around(hx):
            mcz()
    if measure:
        proc.measure(*qs)
    return proc.circuit


def random_state_prep_inputs(n: int, seed: int = 0, single_phase: bool = True) -> tuple[list[float], list[float]]:
    """Seeded random target state.

    With single_phase, every even-index phase is 0 so each leaf carries one phase gate.
    """
    rng = np.random.default_rng(seed)
    prob = rng.uniform(0.05, 1.0, 2 ** n)
    phases = rng.uniform(-math.pi, math.pi, 2 ** n)
    if single_phase:
        phases[0::2] = 0.0
    return prob.tolist(), phases.tolist()


# suites ------------------------------------------------------------------

COLUMN_ORDER = ["CU2", "SpecificPauli", "Network", "VChain", "SingleAux", "SU2", "SU2Rewrite", "LinearDepth",
                "outside"]


@dataclass
class BenchRow:
    n_qubits: int
    per_algorithm: dict[str, int]
    total: int
    choices: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"n_qubits": self.n_qubits, "per_algorithm": self.per_algorithm, "total": self.total,
                "choices": self.choices}


@dataclass
class BenchReport:
    algorithm: Algorithm
    qpu: int
    policy: Policy
    seed: int
    rows: list[BenchRow] = field(default_factory=list)

    def columns(self) -> list[str]:
        used = {k for r in self.rows for k, v in r.per_algorithm.items() if v}
        return [c for c in COLUMN_ORDER if c in used] + sorted(used - set(COLUMN_ORDER))

    def to_dict(self) -> dict:
        return {"algorithm": self.algorithm.value, "qpu": self.qpu, "policy": self.policy.value,
                "seed": self.seed, "rows": [r.to_dict() for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        cols = self.columns()
        head = ["n", *cols, "total"]
        body = [[str(r.n_qubits), *(f"{r.per_algorithm[c]:,}" if r.per_algorithm.get(c) else "--" for c in cols),
                 f"{r.total:,}"] for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(line, widths)) for line in [head, *body]]
        return "\n".join(lines)

    def to_csv(self) -> str:
        cols = self.columns()
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", *cols, "total"])
        for r in self.rows:
            w.writerow([r.n_qubits, *(r.per_algorithm.get(c, 0) for c in cols), r.total])
        return buf.getvalue()


def build_instance(algorithm: Algorithm, n: int, qpu: int, seed: int) -> Circuit:
    if algorithm is Algorithm.GROVER:
        return grover_circuit(n, qpu)
    prob, phases = random_state_prep_inputs(n, seed + n)
    return state_prep_circuit(prob, phases, qpu)


def run_suite(algorithm: Algorithm | str, n_range: Iterable[int], qpu: QpuSpec | int = 16,
              policy: Policy | str = Policy.AUTO, seed: int = 0, materialize: bool = False) -> BenchReport:
    """Compile each instance and aggregate per-family CNOT counts.

    By default only counts are computed (identical totals, no compiled circuit kept);
    materialize=True runs the full compiler including auxiliary allocation.
    """
    algorithm = Algorithm(algorithm)
    policy = Policy(policy)
    total = qpu.total if isinstance(qpu, QpuSpec) else int(qpu)
    ns = list(n_range)
    if not ns:
        raise ValueError("empty n range")
    if max(ns) > total:
        raise ValueError(f"n={max(ns)} exceeds the QPU size {total}")
    report = BenchReport(algorithm, total, policy, seed)
    for n in ns:
        circ = build_instance(algorithm, n, total, seed)
        if materialize:
            _, rep = compile_circuit(circ, total, policy)
            stats = rep.stats
            choices: dict[str, int] = {}
            for c in rep.choices:
                key = f"C{c.n_controls}:{c.choice.label()}"
                choices[key] = choices.get(key, 0) + 1
        else:
            stats, counter = count_cnots(circ, total, policy)
            choices = {f"C{k}:{label}": v for (k, label), v in sorted(counter.items())}
        report.rows.append(BenchRow(n, dict(stats.per_algorithm), stats.cnot_total, choices))
    return report


__all__ = ["Algorithm", "BenchReport", "BenchRow", "ParamTree", "grover_circuit", "grover_steps",
           "random_state_prep_inputs", "run_suite", "state_prep_circuit"]
