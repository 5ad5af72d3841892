"""Kernel backend selection: compiled extension if built, else pure Python.

Both backends expose ``maxcut_bruteforce(adj_masks, n)`` and
``maxdicut_bruteforce(out_masks, in_masks, n)`` with identical semantics.
Set DISCUT_FORCE_PY_KERNELS=1 to pin the pure-Python backend.
"""

from __future__ import annotations

import os

if os.environ.get("DISCUT_FORCE_PY_KERNELS") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
maxcut_bruteforce = _impl.maxcut_bruteforce
maxdicut_bruteforce = _impl.maxdicut_bruteforce
