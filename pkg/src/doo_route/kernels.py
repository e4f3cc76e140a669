"""Backend selection for the edit-distance kernels.

The compiled ``_dp`` extension is used when importable; setting
``DOO_ROUTE_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _dp_py

if os.environ.get("DOO_ROUTE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _dp_py
    BACKEND = "python"
else:
    try:
        from . import _dp as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _dp_py
        BACKEND = "python"

MATCH, SUB, DELETE, INSERT = _dp_py.MATCH, _dp_py.SUB, _dp_py.DELETE, _dp_py.INSERT

distance = _impl.distance
table = _impl.table
trace = _impl.trace
align = _impl.align
