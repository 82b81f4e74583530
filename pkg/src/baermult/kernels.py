"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``BAERMULT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
extend_layer = _pykernels.extend_layer
count_pairs = _pykernels.count_pairs

if os.environ.get("BAERMULT_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        extend_layer = _ckernels.extend_layer
        count_pairs = _ckernels.count_pairs

__all__ = ["BACKEND", "count_pairs", "extend_layer"]
