"""Hot-loop kernels, compiled when available.

The Cython extension ``_kernels`` is used if it imports; otherwise the
pure-Python ``_kernels_py`` is used.  Set ``MHN_PURE_PYTHON=1`` to force
the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if not os.environ.get("MHN_PURE_PYTHON"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure

BACKEND = "cython" if compiled is not None else "python"
content_hvector = _impl.content_hvector
count_monotone = _impl.count_monotone

__all__ = ["BACKEND", "content_hvector", "count_monotone", "pure", "compiled"]
