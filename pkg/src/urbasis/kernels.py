"""Kernel backend selection.

The compiled extension handles the hot loops when its operands fit machine
integers; everything else (and every environment without the extension)
goes through the pure-Python fallback. Set URBASIS_PURE=1 to force the
fallback, e.g. for benchmarking.
"""

import os

from urbasis import _kernels_py

_INT64_MAX = 2**62  # conservative: pair sums of two such values still fit i64

if os.environ.get("URBASIS_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from urbasis import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND


def bose_chowla_scan(q, fb, fc, ga, gb):
    return _impl.bose_chowla_scan(q, fb, fc, ga, gb)


def mian_chowla(count):
    return _impl.mian_chowla(count)


def find_sum_collision(elements):
    """First duplicated pair sum of a strictly increasing sequence.

    Routes to the compiled kernel when every element fits in 62 bits
    (guaranteeing i64-safe pair sums); arbitrary-precision inputs take the
    pure path.
    """
    if _impl.BACKEND == "cython" and elements:
        if -_INT64_MAX < elements[0] and elements[-1] < _INT64_MAX:
            import numpy as np

            arr = np.asarray(elements, dtype=np.int64)
            return _impl.find_sum_collision(arr)
    return _kernels_py.find_sum_collision(elements)
