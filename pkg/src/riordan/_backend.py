"""Kernel backend selection.

The compiled extension ``_fastkernels`` is used when it imported
successfully; otherwise the pure-Python reference kernels take over.
Setting the environment variable ``RIORDAN_PURE`` to a non-empty value
forces the pure kernels (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import _purekernels

if os.environ.get("RIORDAN_PURE"):
    fast = None
else:
    try:
        from . import _fastkernels as fast
    except ImportError:
        fast = None

kernels = fast if fast is not None else _purekernels

BACKEND = "compiled" if fast is not None else "pure"


def backend_name() -> str:
    """Which kernel implementation is active: ``compiled`` or ``pure``."""
    return BACKEND
