"""Kernel backend selection: compiled extension if available, numpy
fallback otherwise.  ``DESINGZETA_PURE_PYTHON=1`` forces the fallback
(useful for the benchmark and for debugging)."""

from __future__ import annotations

import os

if os.environ.get("DESINGZETA_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from .. import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME
hurwitz_batch = _impl.hurwitz_batch
hurwitz_single = _impl.hurwitz_single
ez2_partial = _impl.ez2_partial
hl1_partial = _impl.hl1_partial
hl2_partial = _impl.hl2_partial

__all__ = [
    "BACKEND",
    "hurwitz_batch",
    "hurwitz_single",
    "ez2_partial",
    "hl1_partial",
    "hl2_partial",
]
