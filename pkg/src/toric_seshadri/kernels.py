"""Backend selection for the hot loops.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` versions run.  Calls whose data does not fit the
compiled module's fixed-width integers fall back per call.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_MASK_LIMIT = 1 << 64
_INT_LIMIT = 1 << 40


def adjacent_pairs(pos, neg, masks):
    if _ckernels is not None and all(m < _MASK_LIMIT for m in masks):
        return _ckernels.adjacent_pairs(pos, neg, masks)
    return _pykernels.adjacent_pairs(pos, neg, masks)


def count_lattice_points(rows, rhs, lo, hi):
    if _ckernels is not None and _fits_int64(rows, rhs, lo, hi):
        return _ckernels.count_lattice_points(rows, rhs, lo, hi)
    return _pykernels.count_lattice_points(rows, rhs, lo, hi)


def _fits_int64(rows, rhs, lo, hi) -> bool:
    # bound |row·x| <= sum|a_k| * max|x_k| well below 2^63
    xmax = max([abs(v) for v in lo] + [abs(v) for v in hi] + [1])
    for row, b in zip(rows, rhs):
        if abs(b) >= _INT_LIMIT or sum(abs(c) for c in row) * xmax >= _INT_LIMIT:
            return False
    return True
