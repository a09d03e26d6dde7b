"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a
drop-in replacement chosen when the extension is missing or when
``THETADIM_PURE`` is set in the environment.  Both expose the same
functions with identical results.
"""

from __future__ import annotations

import os

from thetadim._core.tables import MAX_N, PackedTables, get_tables, pair_order

if os.environ.get("THETADIM_PURE"):
    from thetadim._core import pure as _backend
else:
    try:
        from thetadim._core import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        from thetadim._core import pure as _backend

scan_combinations = _backend.scan_combinations
leafless_canonical_masks = _backend.leafless_canonical_masks
canonical_mask = _backend.canonical_mask
BACKEND = _backend.backend_name()


def backend_name() -> str:
    """Active kernel backend: 'compiled' or 'pure'."""
    return BACKEND


__all__ = [
    "BACKEND",
    "MAX_N",
    "PackedTables",
    "backend_name",
    "canonical_mask",
    "get_tables",
    "leafless_canonical_masks",
    "pair_order",
    "scan_combinations",
]
