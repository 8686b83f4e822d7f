"""Solver backend selection.

The hot loops exist twice: jitted (numba) and pure numpy.  The environment
flag MANYROBBERS_BACKEND picks one: "numba" (default when importable),
"numpy", or "auto".  Both backends produce bit-identical outputs; the numpy
path exists as a dependency-light fallback and as the comparison baseline
for the benchmark script.
"""

from __future__ import annotations

import os

_ENV_FLAG = "MANYROBBERS_BACKEND"
_cached = None


def backend():
    """The active kernel module (resolved once per process)."""
    global _cached
    if _cached is None:
        _cached = _resolve(os.environ.get(_ENV_FLAG, "auto"))
    return _cached


def _resolve(choice: str):
    choice = choice.strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{_ENV_FLAG} must be 'auto', 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy
    try:
        from . import _kernels_numba
        return _kernels_numba
    except ImportError:
        if choice == "numba":
            raise
        from . import _kernels_numpy
        return _kernels_numpy


def set_backend(name: str) -> None:
    """Force a backend programmatically (used by tests and benchmarks)."""
    global _cached
    _cached = _resolve(name)


def backend_name() -> str:
    return backend().BACKEND_NAME
