"""Compare the compiled gate kernel with the numpy fallback on oracle-sized workloads.

Usage: python benchmarks/bench_kernels.py [--qubits 8 10 12] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qdecomp.compiler import compile_circuit
from qdecomp.gates import GateKind, Instruction, Main
from qdecomp.circuit import Circuit
from qdecomp.sim import _pykernels
from qdecomp.sim.oracle import default_order

try:
    from qdecomp.sim import _kernels
except ImportError:  # extension not built
    _kernels = None


def workload(n: int) -> list[Instruction]:
    """Compiled C^{n-1}RY: a realistic mix of CNOTs and one-qubit rotations."""
    c = Circuit(16)
    c.append(Instruction(GateKind.RY, Main(n - 1), tuple(Main(i) for i in range(n - 1)), 0.7))
    compiled, _ = compile_circuit(c, 16)
    return compiled.gates


def run(kern, instrs, order, columns: int) -> float:
    dim = 1 << len(order)
    state = np.zeros((dim, columns), dtype=np.complex128)
    state[np.arange(columns), np.arange(columns)] = 1.0
    bit = {q: 1 << (len(order) - 1 - p) for p, q in enumerate(order)}
    t = time.perf_counter()
    for ins in instrs:
        cmask = 0
        for q in ins.controls:
            cmask |= bit[q]
        if ins.gate is GateKind.X:
            kern.apply_cx(state, bit[ins.target], cmask)
        else:
            kern.apply_gate(state, np.ascontiguousarray(ins.matrix()), bit[ins.target], cmask)
    return time.perf_counter() - t


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qubits", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--columns", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"numpy": _pykernels}
    if _kernels is not None:
        backends["cython"] = _kernels
    print(f"{'n':>3} {'gates':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in args.qubits:
        instrs = workload(n)
        order = default_order(instrs)
        cols = min(args.columns, 1 << len(order))
        times = {b: min(run(k, instrs, order, cols) for _ in range(args.repeat)) for b, k in backends.items()}
        speed = f"{times['numpy'] / times['cython']:8.1f}x" if "cython" in times else "      --"
        print(f"{n:>3} {len(instrs):>6} " + " ".join(f"{t * 1e3:9.1f}ms" for t in times.values()) + f"  {speed}")


if __name__ == "__main__":
    main()
