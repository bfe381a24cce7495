"""Acceptance criteria. Each test carries an `acceptance` marker and shows up in the summary."""

import math
import time

import numpy as np
import pytest

from qdecomp import Circuit, GateKind, Instruction, Main, Process, QpuSpec
from qdecomp.bench import grover_circuit, random_state_prep_inputs, run_suite, state_prep_circuit
from qdecomp.compiler import Policy, allocation, compile_circuit, count_cnots, expand, family_cnots
from qdecomp.decomp import AuxState, DecompChoice, Family, approx_toffoli
from qdecomp.decomp._seq import cnot_count
from qdecomp.sim import circuit_unitary, equal_up_to_global_phase, simulate_state, verify_decomposition

from conftest import mains, mc

C, D, NA = AuxState.CLEAN, AuxState.DIRTY, AuxState.NA
PAULI = (GateKind.X, GateKind.Y, GateKind.Z)
ROTATION = (GateKind.RX, GateKind.RY, GateKind.RZ)
ALL_KINDS = tuple(GateKind)


def _suite_cases():
    """(family, state, kind, n) for every family / gate class pairing it supports, n in 1..6."""
    cases = []
    for n in range(1, 7):
        for kind in ALL_KINDS:
            if n == 1:
                cases.append((Family.CU2, NA, kind, n))
                continue
            if kind in PAULI:
                if n in (2, 3):
                    cases.append((Family.SPECIFIC_PAULI, NA, kind, n))
                if n >= 3:
                    cases += [(Family.VCHAIN, C, kind, n), (Family.VCHAIN, D, kind, n)]
                if n >= 4:
                    cases += [(Family.SINGLE_AUX, C, kind, n), (Family.SINGLE_AUX, D, kind, n)]
            if kind in ROTATION:
                cases.append((Family.SU2, NA, kind, n))
            if kind in (GateKind.P, GateKind.H):
                cases.append((Family.SU2_REWRITE, C, kind, n))
            cases.append((Family.NETWORK, C, kind, n))
            cases.append((Family.LINEAR_DEPTH, NA, kind, n))
    return cases


@pytest.mark.acceptance("oracle equivalence suite (families x classes x n=1..6 x 25 draws, tol 1e-9)")
def test_oracle_equivalence_suite():
    rng = np.random.default_rng(2024)
    start = time.perf_counter()
    failures, checked = [], 0
    for family, state, kind, n in _suite_cases():
        choice = DecompChoice(family) if family is Family.CU2 else \
            DecompChoice.for_family(family, n, None if state is NA else state)
        for _ in range(25):
            theta = float(rng.uniform(-2 * math.pi, 2 * math.pi)) if kind.parametric else None
            ins = mc(kind, n, theta)
            seq, group = expand(ins, choice)
            aux = group.aux if group else []
            rep = verify_decomposition(ins, list(seq), aux, state is not D, tol=1e-9)
            checked += 1
            if not rep.equal:
                failures.append((choice.label(), kind.name, n, theta, rep.max_abs_deviation))
    elapsed = time.perf_counter() - start
    assert not failures, failures[:5]
    assert checked > 2000 and elapsed < 300


@pytest.mark.acceptance("constants: C2X = 6, C3X = 14, approximate Toffoli = 3")
def test_specific_constants():
    for n, want in ((2, 6), (3, 14)):
        p = Process(16)
        qs = p.allocate(n + 1)
        with p.control(*qs[:-1]):
            p.x(qs[-1])
        _, rep = compile_circuit(p.circuit)
        assert rep.stats.cnot_total == want
    assert cnot_count(approx_toffoli(*mains(0, 1, 2))) == 3


@pytest.mark.acceptance("selection phases on a 12-qubit QPU for C^(n-1)Z")
def test_selection_phases_12_qubits():
    labels = {}
    for n in range(2, 13):
        p = Process(12)
        qs = p.allocate(n)
        for q in qs:
            p.h(q)
        with p.control(*qs[:-1]):
            p.z(qs[-1])
        _, rep = compile_circuit(p.circuit)
        (choice,) = rep.choices
        labels[n] = choice.choice.family
    zero_aux = {Family.CU2, Family.SPECIFIC_PAULI}
    assert all(labels[n] in zero_aux for n in range(2, 5))
    assert all(labels[n] is Family.VCHAIN for n in range(5, 8))
    assert all(labels[n] is Family.SINGLE_AUX for n in range(8, 12))
    assert labels[12] is Family.LINEAR_DEPTH


TABLE2 = {
    8: ({"CU2", "Network"}, 14_786),
    9: ({"CU2", "Network"}, 36_680),
    10: ({"CU2", "Network", "SU2", "SU2Rewrite"}, 226_972),
    15: ({"CU2", "Network", "SU2", "SU2Rewrite"}, 13_082_300),
    16: ({"CU2", "SU2", "LinearDepth"}, 66_291_028),
}


@pytest.mark.acceptance("state-prep benchmark parity on a 16-qubit QPU")
def test_table2_parity():
    start = time.perf_counter()
    rows = {r.n_qubits: r for r in run_suite("state-prep", [2, 3, *TABLE2], 16).rows}
    assert rows[2].total == 8 and rows[3].total == 68
    for n, (families, total) in TABLE2.items():
        got = {k for k, v in rows[n].per_algorithm.items() if v}
        assert got == families, (n, got)
        assert abs(rows[n].total - total) <= 0.25 * total, (n, rows[n].total)
    assert time.perf_counter() - start < 600


def _exponent(family, state, kind):
    ns = np.arange(5, 21)
    counts = [family_cnots(family, state, kind, int(n)) for n in ns]
    slope, _ = np.polyfit(np.log(ns), np.log(counts), 1)
    return slope


@pytest.mark.acceptance("scaling: V-chain exponent 1.0 +- 0.15, linear-depth exponent 2.0 +- 0.15")
def test_scaling_laws():
    assert abs(_exponent(Family.VCHAIN, C, GateKind.X) - 1.0) <= 0.15
    assert abs(_exponent(Family.LINEAR_DEPTH, NA, GateKind.X) - 2.0) <= 0.15


@pytest.mark.acceptance("Grover on 16 qubits: auto strictly below force-no-aux, >= 4x at n=9")
def test_auto_vs_force_no_aux():
    for n in range(5, 16):
        auto, _ = count_cnots(grover_circuit(n, 16), 16, Policy.AUTO)
        base, _ = count_cnots(grover_circuit(n, 16), 16, Policy.FORCE_NO_AUX)
        assert auto.cnot_total < base.cnot_total, n
        if n == 9:
            assert base.cnot_total / auto.cnot_total >= 4


def _random_instance(rng):
    """Generic preparation on some lines, then a few multi-controlled gates."""
    total = int(rng.integers(4, 13))
    width = int(rng.integers(3, total + 1))
    c = Circuit(QpuSpec(total))
    c.n_allocated = width
    for q in range(width):
        if rng.random() < 0.7:
            c.append(Instruction(GateKind.RY, Main(q), (), float(rng.uniform(0.1, 3.0))))
            c.append(Instruction(GateKind.RZ, Main(q), (), float(rng.uniform(0.1, 3.0))))
    for _ in range(int(rng.integers(1, 5))):
        kind = ALL_KINDS[int(rng.integers(len(ALL_KINDS)))]
        qs = rng.permutation(width)
        k = int(rng.integers(1, width))
        theta = float(rng.uniform(-3, 3)) if kind.parametric else None
        c.append(Instruction(kind, Main(int(qs[0])), tuple(Main(int(q)) for q in qs[1:k + 1]), theta))
    return c


@pytest.mark.acceptance("allocation invariants over 1000 randomized compile runs")
def test_allocation_invariants(monkeypatch):
    original = allocation.select_main
    stats = {"phase1": 0, "dirty": 0, "calls": 0}

    def checked(circuit, a, group, taken, clean):
        pl = original(circuit, a, group, taken, clean)
        stats["calls"] += 1
        assert pl.host not in taken
        if group.required_state is D:
            stats["dirty"] += 1
            assert pl.host not in group.interaction
        else:
            assert pl.host in clean
        if pl.phase == 1:
            stats["phase1"] += 1
            assert pl.via in circuit.interaction_qubits(a)
            assert pl.host in circuit.interaction_qubits(pl.via)
        return pl

    monkeypatch.setattr(allocation, "select_main", checked)
    rng = np.random.default_rng(7)
    for run in range(1000):
        circ = _random_instance(rng)
        out, rep = compile_circuit(circ)
        for record in rep.choices:
            hosts = [pl.host for pl in record.placements]
            assert len(hosts) == len(set(hosts)), run
        order = [Main(i) for i in range(circ.qpu.total)]
        got = circuit_unitary(out.gates, order, columns=[0])
        want = circuit_unitary(circ.gates, order, columns=[0])
        assert equal_up_to_global_phase(got, want, 1e-9).equal, run
    assert stats["calls"] and stats["phase1"] and stats["dirty"]


@pytest.mark.acceptance("functional Grover n=2..4: compiled marked-state probability matches to 1e-9")
def test_functional_grover():
    for n in (2, 3, 4):
        total = 8
        circ = grover_circuit(n, total, measure=False)
        out, _ = compile_circuit(circ)
        order = [Main(i) for i in range(total)]
        probs = []
        for c in (circ, out):
            psi = simulate_state(c.gates, order)
            marginal = (np.abs(psi) ** 2).reshape(1 << n, -1).sum(axis=1)
            probs.append(marginal[(1 << n) - 1])
        assert probs[0] > 0.5
        assert abs(probs[0] - probs[1]) <= 1e-9


@pytest.mark.acceptance("state-preparation fidelity >= 1 - 1e-9 for random 3- and 4-qubit targets")
def test_state_prep_fidelity():
    for n in (3, 4):
        for seed in range(5):
            prob, ph = random_state_prep_inputs(n, seed, single_phase=False)
            total = n + 4
            out, rep = compile_circuit(state_prep_circuit(prob, ph, total))
            assert rep.choices
            psi = simulate_state(out.gates, [Main(i) for i in range(total)])
            target = np.zeros(1 << total, dtype=complex)
            amp = np.sqrt(np.asarray(prob) / np.sum(prob)) * np.exp(1j * np.asarray(ph))
            target[np.arange(1 << n) << (total - n)] = amp
            assert abs(np.vdot(target, psi)) ** 2 >= 1 - 1e-9, (n, seed)
