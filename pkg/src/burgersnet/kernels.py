"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``BURGERSNET_PURE_PYTHON=1`` is set, the NumPy fallback is used.  Both expose
``kinetic_step`` and ``godunov_step`` with identical semantics.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

if os.environ.get("BURGERSNET_PURE_PYTHON", "") not in ("", "0") or _compiled is None:
    BACKEND = "python"
else:
    BACKEND = "cython"


def get_backend(name: str | None = None):
    """Kernel module for ``name`` (default: the one selected at import)."""
    name = name or BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
