"""Dense unitary oracle. The compiled kernel is used when built, numpy otherwise."""

import os

if os.environ.get("QDECOMP_PURE_PYTHON"):
    from . import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as kernels
        BACKEND = "python"

from .oracle import (  # noqa: E402
    EquivalenceReport,
    circuit_unitary,
    controlled_unitary,
    equal_up_to_global_phase,
    simulate_state,
    verify_decomposition,
)

__all__ = [
    "BACKEND",
    "EquivalenceReport",
    "circuit_unitary",
    "controlled_unitary",
    "equal_up_to_global_phase",
    "kernels",
    "simulate_state",
    "verify_decomposition",
]
