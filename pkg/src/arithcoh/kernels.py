"""Kernel dispatch: compiled extension if built, pure Python otherwise.

Set ARITHCOH_PURE_PY=1 to force the fallback (used by the benchmark)."""

import os

if os.environ.get("ARITHCOH_PURE_PY"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
row_axpy = _impl.row_axpy
row_scale = _impl.row_scale
dense_row_reduce = _impl.dense_row_reduce
echelon_insert = _impl.echelon_insert
echelon_insert_buffered = _impl.echelon_insert_buffered
