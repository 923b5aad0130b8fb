"""Backend selection for the hot subset-table kernels.

The numba backend is used when numba imports cleanly, unless the environment
variable ``FINTOP_DISABLE_NUMBA`` is set to a non-empty value other than
``0``; then the pure-numpy twins are used.  Both backends return identical
arrays, which the test suite checks.
"""

import os

from fintop import _kernels_numpy

_disabled = os.environ.get("FINTOP_DISABLE_NUMBA", "") not in ("", "0")

if _disabled:
    _backend = _kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from fintop import _kernels_numba as _backend
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba missing
        _backend = _kernels_numpy
        BACKEND = "numpy"

interior_table = _backend.interior_table
closure_table = _backend.closure_table
subset_union_table = _backend.subset_union_table
superset_intersection_table = _backend.superset_intersection_table
pair_intersection_mask = _backend.pair_intersection_mask
sandwich_mask = _backend.sandwich_mask
least_relabeling = _backend.least_relabeling

__all__ = [
    "BACKEND",
    "interior_table",
    "closure_table",
    "subset_union_table",
    "superset_intersection_table",
    "pair_intersection_mask",
    "sandwich_mask",
    "least_relabeling",
]
