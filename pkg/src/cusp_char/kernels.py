"""Kernel backend selection.

The compiled Cython module is used when it was built; otherwise the
pure-Python implementation is loaded.  Setting ``CUSP_CHAR_PURE=1`` forces
the fallback (used by the benchmark and by the backend-parity tests).
"""

import os

from . import _pykernels

if os.environ.get("CUSP_CHAR_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

mul_terms = _impl.mul_terms
lincomb_terms = _impl.lincomb_terms

__all__ = ["BACKEND", "mul_terms", "lincomb_terms"]
