"""Hot bitmask kernels with a compiled backend and a pure-Python fallback.

The compiled module is preferred when importable; set ``MATKLS_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("MATKLS_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

rank_table = _impl.rank_table
max_intersection = _impl.max_intersection
tutte_counts = _impl.tutte_counts
containment_lists = _impl.containment_lists

__all__ = [
    "BACKEND",
    "rank_table",
    "max_intersection",
    "tutte_counts",
    "containment_lists",
]
