"""Toffoli ladders through auxiliaries: V-Chain and Single-Aux."""

from __future__ import annotations

import math
from typing import Sequence

from ..gates import GateKind, QubitRef
from ._seq import Seq
from .cu2 import pauli_basis_change
from .pauli import approx_toffoli, exact_toffoli
from .types import AuxState, Family


def _ladder(controls, aux, tag) -> list[Seq]:
    """Relative-phase Toffolis computing aux[i] ^= c0 & ... & c_{i+1}, in compute order."""
    steps = [approx_toffoli(controls[0], controls[1], aux[0], tag)]
    for i in range(1, len(aux)):
        steps.append(approx_toffoli(controls[i + 1], aux[i - 1], aux[i], tag))
    return steps


def _mcx_vchain(controls: Sequence[QubitRef], target: QubitRef, aux: Sequence[QubitRef],
                clean: bool, tag: str | None) -> Seq:
    m = len(controls)
    aux = list(aux[: m - 2])
    out = Seq(tag)
    top = exact_toffoli(controls[-1], aux[-1], target, tag)
    steps = _ladder(controls, aux, tag)
    if clean:
        for s in steps:
            out.add(s)
        out.add(top)
        for s in reversed(steps):
            out.add_inverse(s)
        return out
    # borrowed lines: top, sweep, top, sweep with both top Toffolis merged into one
    # phase gadget on (c_last, a_last, target) and its inverse, 4 CNOTs each
    sweep = Seq(tag)
    for s in reversed(steps[1:]):
        sweep.add(s)
    for s in steps:
        sweep.add(s)
    gadget = _half_toffoli_phase(controls[-1], aux[-1], target, tag)
    out.h(target).add(gadget).add(sweep).add_inverse(gadget).h(target)
    return out.add(sweep)


def _half_toffoli_phase(c: QubitRef, a: QubitRef, t: QubitRef, tag) -> Seq:
    """pi/4 (a - a^c - a^t + a^c^t): the part of CCZ that depends on a.

    g(a) - g(a') = pi*c*t*(a - a') so wrapping a toggle of a between this and its inverse
    applies CZ(c, t) exactly when the toggle fired.
    """
    q = math.pi / 4
    return Seq(tag).p(q, a).cx(c, a).p(-q, a).cx(t, a).p(q, a).cx(c, a).p(-q, a).cx(t, a)


def mcx(controls: Sequence[QubitRef], target: QubitRef, borrow: Sequence[QubitRef] = (),
        tag: str | None = None) -> Seq:
    """Exact multi-controlled X using dirty borrowed lines when more than two controls."""
    controls = list(controls)
    m = len(controls)
    if m == 0:
        return Seq(tag).x(target)
    if m == 1:
        return Seq(tag).cx(controls[0], target)
    if m in (2,):
        return exact_toffoli(controls[0], controls[1], target, tag)
    if len(borrow) < m - 2:
        raise ValueError(f"C^{m}X needs {m - 2} borrowed lines, got {len(borrow)}")
    return _mcx_vchain(controls, target, borrow, clean=False, tag=tag)


def decompose_vchain(pauli: GateKind, controls: Sequence[QubitRef], target: QubitRef,
                     aux: Sequence[QubitRef], aux_state: AuxState,
                     tag: str | None = Family.VCHAIN.tag) -> Seq:
    """C^n Pauli through n-2 auxiliaries; the dirty form also restores arbitrary aux states."""
    n = len(controls)
    if n < 3:
        raise ValueError("V-Chain needs at least 3 controls")
    if len(aux) < n - 2:
        raise ValueError(f"V-Chain needs {n - 2} auxiliaries")
    pre, post = pauli_basis_change(pauli, target, tag)
    body = _mcx_vchain(list(controls), target, list(aux), aux_state is AuxState.CLEAN, tag)
    return Seq(tag).add(pre).add(body).add(post)


def decompose_single_aux(pauli: GateKind, controls: Sequence[QubitRef], target: QubitRef,
                         aux: QubitRef, aux_state: AuxState,
                         tag: str | None = Family.SINGLE_AUX.tag) -> Seq:
    """Split the controls in two halves joined through one auxiliary.

    Blocks: C^{ceil(n/2)}X onto aux, C^{floor(n/2)+1}X onto target, repeat the first;
    a dirty aux adds a fourth block. Each block borrows the other half as dirty lines.
    """
    controls = list(controls)
    n = len(controls)
    if n < 4:
        raise ValueError("Single-Aux needs at least 4 controls")
    k = (n + 1) // 2
    first, second = controls[:k], controls[k:] + [aux]
    a_block = mcx(first, aux, borrow=second[:-1] + [target], tag=tag)
    t_block = mcx(second, target, borrow=first, tag=tag)
    pre, post = pauli_basis_change(pauli, target, tag)
    out = Seq(tag).add(pre)
    out.add(a_block).add(t_block).add(a_block)
    if aux_state is AuxState.DIRTY:
        out.add(t_block)
    return out.add(post)
