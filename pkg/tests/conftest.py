"""Shared fixtures and the acceptance summary printed at the end of the run."""

from __future__ import annotations

import numpy as np
import pytest

from qdecomp.gates import GateKind, Instruction, Main

_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): one acceptance criterion; reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _ACCEPTANCE.append((marker.args[0], rep.outcome, item.nodeid))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, _ in _ACCEPTANCE:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def haar_unitary(rng: np.random.Generator) -> np.ndarray:
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def mains(*idx: int) -> list[Main]:
    return [Main(i) for i in idx]


def mc(kind: GateKind, n: int, theta: float | None = None, phase: float = 0.0) -> Instruction:
    """C^n gate on Main(0..n-1) -> Main(n)."""
    return Instruction(kind, Main(n), tuple(mains(*range(n))), theta, phase)
