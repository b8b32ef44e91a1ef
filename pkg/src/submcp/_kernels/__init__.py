"""Hot loops over subset tables and set partitions.

Two interchangeable backends share one signature set: ``_numba`` (JIT) and
``_numpy`` (vectorised).  Set ``SUBMCP_NO_JIT=1`` to force the numpy path;
it is also used when numba cannot be imported.
"""
import os

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba_backend = None

_disabled = os.environ.get("SUBMCP_NO_JIT", "").strip().lower() not in ("", "0", "false", "no")

backend = numpy_backend if (_disabled or numba_backend is None) else numba_backend
BACKEND = "numpy" if backend is numpy_backend else "numba"

cut_table = backend.cut_table
coverage_table = backend.coverage_table
hypercut_table = backend.hypercut_table
min_split_enum = backend.min_split_enum
partition_search = backend.partition_search
submodular_pairs = backend.submodular_pairs
submodular_local = backend.submodular_local
symmetric_check = backend.symmetric_check
monotone_check = backend.monotone_check

__all__ = [
    "BACKEND", "backend", "numpy_backend", "numba_backend",
    "cut_table", "coverage_table", "hypercut_table", "min_split_enum",
    "partition_search", "submodular_pairs", "submodular_local",
    "symmetric_check", "monotone_check",
]
