"""Backend selection for the elimination kernel.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
numpy fallback is used.  Setting ``CODETOPS_PURE_PYTHON=1`` forces the
fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
rref_inplace = _pykernels.rref_inplace

if not os.environ.get("CODETOPS_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None
    else:
        rref_inplace = _ckernels.rref_inplace
        BACKEND = "cython"
else:
    _ckernels = None


def available_backends():
    out = {"python": _pykernels.rref_inplace}
    try:
        from . import _ckernels as ck
    except ImportError:
        return out
    out["cython"] = ck.rref_inplace
    return out
