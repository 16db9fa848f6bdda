r"""
Kernel backend selection.

The orbit-tracing kernels in ``_kernels`` run either jit-compiled by
numba or as plain Python over numpy arrays.  The backend is picked once,
lazily, from the environment:

    SIGNEDMAPS_BACKEND=numba    force numba (error if unavailable)
    SIGNEDMAPS_BACKEND=python   force the pure-python fallback
    unset / auto                numba when importable, python otherwise

``benchmarks/backend_bench.py`` times the two paths against each other.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

from . import _kernels

_KERNEL_NAMES = (
    "build_perm",
    "pg_orbit_ids",
    "group_orbit_count",
    "genus_histogram_range",
    "genus_of_samples",
)

_active: SimpleNamespace | None = None
_active_name: str | None = None


def _make_python_backend() -> SimpleNamespace:
    ns = SimpleNamespace(name="python")
    for fname in _KERNEL_NAMES:
        setattr(ns, fname, getattr(_kernels, fname))
    return ns


def _make_numba_backend() -> SimpleNamespace:
    from numba import njit

    ns = SimpleNamespace(name="numba")
    for fname in _KERNEL_NAMES:
        jitted = njit(cache=True, nogil=True)(getattr(_kernels, fname))
        setattr(ns, fname, jitted)
    return ns


def kernels(force: str | None = None) -> SimpleNamespace:
    """Return the active kernel namespace, selecting it on first use."""
    global _active, _active_name
    choice = force or os.environ.get("SIGNEDMAPS_BACKEND", "auto").lower()
    if _active is not None and (force is None or choice == _active_name):
        if force is None:
            return _active
    if choice == "python":
        backend = _make_python_backend()
    elif choice == "numba":
        backend = _make_numba_backend()
    elif choice == "auto":
        try:
            backend = _make_numba_backend()
        except ImportError:
            backend = _make_python_backend()
    else:
        raise ValueError(
            f"SIGNEDMAPS_BACKEND must be 'numba', 'python' or 'auto', got {choice!r}"
        )
    if force is None:
        _active = backend
        _active_name = choice
    return backend


def backend_name() -> str:
    return kernels().name
