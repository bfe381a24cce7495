"""Property-based checks over randomly generated circuits."""

import math

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from qdecomp import Circuit, GateKind, Instruction, Main, Process
from qdecomp.compiler import Policy, compile_circuit, count_cnots
from qdecomp.serialize import dumps, loads
from qdecomp.sim import circuit_unitary, equal_up_to_global_phase

angles = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False).filter(lambda t: t != 0.0)


@st.composite
def instructions(draw, width: int, max_controls: int):
    kind = draw(st.sampled_from(list(GateKind)))
    qs = draw(st.permutations(range(width)))
    k = draw(st.integers(0, min(max_controls, width - 1)))
    theta = draw(angles) if kind.parametric else None
    phase = draw(st.sampled_from([0.0, 0.0, math.pi / 4, -0.3]))
    return Instruction(kind, Main(qs[0]), tuple(Main(q) for q in qs[1:k + 1]), theta, phase)


@st.composite
def circuits(draw, max_width=6, max_len=6, max_controls=4):
    width = draw(st.integers(2, max_width))
    c = Circuit(draw(st.integers(width, width + 4)))
    c.n_allocated = width
    for ins in draw(st.lists(instructions(width, max_controls), min_size=1, max_size=max_len)):
        c.append(ins)
    return c


@given(circuits(max_width=8, max_len=12, max_controls=7))
def test_serialize_round_trip(circ):
    back = loads(dumps(circ), circ.qpu)
    assert back.instructions == circ.instructions
    assert back.num_qubits() == circ.num_qubits()


@st.composite
def prepared_circuits(draw):
    """A random program preceded by generic single-qubit preparation on a subset of lines."""
    body = draw(circuits())
    width = body.n_allocated
    prepared = draw(st.sets(st.integers(0, width - 1)))
    c = Circuit(body.qpu)
    c.n_allocated = width
    for q in sorted(prepared):
        c.append(Instruction(GateKind.RY, Main(q), (), draw(angles)))
        c.append(Instruction(GateKind.RZ, Main(q), (), draw(angles)))
    for ins in body.gates:
        c.append(ins)
    return c


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(prepared_circuits(), st.sampled_from(list(Policy)))
def test_compile_preserves_semantics(circ, policy):
    """Every line starts at |0>; the compiled program must reach the same state."""
    out, rep = compile_circuit(circ, policy=policy)
    order = [Main(i) for i in range(max(out.num_qubits(), circ.n_allocated))]
    got = circuit_unitary(out.gates, order, columns=[0])
    want = circuit_unitary(circ.gates, order, columns=[0])
    assert equal_up_to_global_phase(got, want, 1e-9).equal
    stats, _ = count_cnots(circ, policy=policy)
    assert stats == rep.stats


@given(circuits(max_width=6, max_len=20, max_controls=1))
def test_interaction_lists_are_duplicate_free(circ):
    for q in {q for ins in circ.gates for q in ins.qubits}:
        partners = circ.interaction_qubits(q)
        assert len(partners) == len(set(partners)) and q not in partners


@given(st.lists(instructions(4, 2), min_size=1, max_size=10))
def test_adjoint_involution(instrs):
    p = Process(4)
    p.allocate(4)

    def body():
        for ins in instrs:
            with p.control(*ins.controls):
                p.apply(ins.gate, ins.target, ins.theta, ins.global_phase)
    body()
    forward = list(p.circuit.instructions)
    p.circuit.instructions.clear()
    p.adjoint(lambda: p.adjoint(body))
    assert p.circuit.instructions == forward


@settings(max_examples=30, deadline=None)
@given(st.lists(instructions(4, 2), min_size=1, max_size=8))
def test_body_adjoint_identity(instrs):
    order = [Main(i) for i in range(4)]
    seq = instrs + [i.inverse() for i in reversed(instrs)]
    assert np.allclose(circuit_unitary(seq, order), np.eye(16), atol=1e-10)
