"""Backend selection for the coefficient kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``QMATCH_PURE=1`` forces the fallback.
"""

import os

if os.environ.get("QMATCH_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
mul_dense = _impl.mul_dense
mul_sparse = _impl.mul_sparse
div_dense = _impl.div_dense
div_sparse = _impl.div_sparse
pow_terms = _impl.pow_terms
factor_apply = _impl.factor_apply

__all__ = [
    "BACKEND",
    "mul_dense",
    "mul_sparse",
    "div_dense",
    "div_sparse",
    "pow_terms",
    "factor_apply",
]
