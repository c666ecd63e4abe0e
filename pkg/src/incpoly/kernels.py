"""Backend selection for the coefficient kernels.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python module is used. Set ``INCPOLY_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _purepy

if os.environ.get("INCPOLY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purepy
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _purepy
        BACKEND = "python"

convolve = _impl.convolve
horner = _impl.horner

__all__ = ["BACKEND", "convolve", "horner"]
