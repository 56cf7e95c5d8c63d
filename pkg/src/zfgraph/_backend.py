"""Kernel selection: compiled extension when importable, else pure Python.

Set ``ZFGRAPH_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("ZFGRAPH_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND: str = kernels.BACKEND
