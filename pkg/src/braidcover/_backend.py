"""Kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` are used. Setting ``BRAIDCOVER_PURE_PYTHON=1``
forces the fallback.
"""
import os

from braidcover import _pykernels

kernels = _pykernels
BACKEND = "python"

if not os.environ.get("BRAIDCOVER_PURE_PYTHON"):
    try:
        from braidcover import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"

apply_twists = kernels.apply_twists
bareiss_det = kernels.bareiss_det
berkowitz = kernels.berkowitz
poly_mul = kernels.poly_mul
