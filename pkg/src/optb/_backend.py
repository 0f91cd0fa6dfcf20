"""Kernel selection.

The compiled kernels are used when ``optb._ckernels`` imports and the
environment variable ``OPTB_PURE_PYTHON`` is unset or empty.  Results are
identical either way: a compiled overflow is retried in pure Python.
"""

import os
from functools import lru_cache

from optb import _pykernels

try:
    if os.environ.get("OPTB_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from optb import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _ckernels if _ckernels is not None else _pykernels


def word_matrix(codes, exps):
    try:
        return _impl.word_matrix(codes, exps)
    except OverflowError:
        return _pykernels.word_matrix(codes, exps)


@lru_cache(maxsize=4096)
def gof_hits(m):
    try:
        return tuple(_impl.gof_hits(m))
    except OverflowError:
        return tuple(_pykernels.gof_hits(m))
