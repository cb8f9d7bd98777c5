"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` are used.  Setting ``EGK_PURE_PYTHON=1`` forces the
fallback.  Both backends return identical results.
"""

from __future__ import annotations

import os

from egk import _pykernels
from egk._pykernels import Cancelled, edge_pairs

_impl = _pykernels
BACKEND = "python"

if not os.environ.get("EGK_PURE_PYTHON"):
    try:
        from egk import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        _impl = _ckernels
        BACKEND = "cython"

max_independent_set = _impl.max_independent_set
maximum_matching = _impl.maximum_matching
census = _impl.census


def available_backends() -> dict:
    """Map backend name to module for every backend that imports."""
    found = {"python": _pykernels}
    try:
        from egk import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found


__all__ = ["BACKEND", "Cancelled", "available_backends", "census", "edge_pairs",
           "max_independent_set", "maximum_matching"]
