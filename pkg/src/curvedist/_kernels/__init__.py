"""Kernel backend selection.

The compiled Cython kernels (``_fast``) are preferred when the
extension built; otherwise the pure-Python reference (``pure``) is
used.  Set ``CURVEDIST_PURE=1`` to force the pure backend, e.g. for
benchmarking or debugging.  Both expose the same four functions with
identical outputs (including ordering).
"""

from __future__ import annotations

import os

if os.environ.get("CURVEDIST_PURE"):
    from . import pure as backend
else:
    try:
        from . import _fast as backend  # type: ignore[no-redef]
    except ImportError:
        from . import pure as backend

beta_cycles = backend.beta_cycles
face_walk = backend.face_walk
reduce_bigons = backend.reduce_bigons
simple_cycles_edges = backend.simple_cycles_edges


def backend_name() -> str:
    """Active kernel backend: ``"fast"`` (compiled) or ``"pure"``."""
    return backend.BACKEND
