"""Pure numpy fallback with the same contract as the compiled kernel."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=256)
def _rows(dim: int, tbit: int, cmask: int) -> np.ndarray:
    i = np.arange(dim)
    return i[((i & tbit) == 0) & ((i & cmask) == cmask)]


def apply_gate(state: np.ndarray, m: np.ndarray, tbit: int, cmask: int) -> None:
    r0 = _rows(state.shape[0], tbit, cmask)
    r1 = r0 | tbit
    a, b = state[r0], state[r1]
    state[r0] = m[0, 0] * a + m[0, 1] * b
    state[r1] = m[1, 0] * a + m[1, 1] * b


def apply_cx(state: np.ndarray, tbit: int, cmask: int) -> None:
    r0 = _rows(state.shape[0], tbit, cmask)
    r1 = r0 | tbit
    tmp = state[r0].copy()
    state[r0] = state[r1]
    state[r1] = tmp
