"""Kernel backend selection.

Importing ``kernels`` from here yields the compiled Cython backend when it
is built, and the pure-Python implementation otherwise.  Set the
environment variable ``WORDCURV_PURE=1`` to force the pure backend.
"""
from __future__ import annotations

import os

if os.environ.get("WORDCURV_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND: str = kernels.BACKEND
