"""Kernel dispatch: compiled core when available, pure Python otherwise.

Set ``IWASAWA_PURE_PYTHON=1`` to force the fallback.  The compiled kernels
only handle moduli below 2**63; larger moduli always take the Python path.
"""
import os

from . import _pykernels

try:
    if os.environ.get("IWASAWA_PURE_PYTHON"):
        raise ImportError("pure python forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_LIMIT = 2 ** 63


def _pick(m):
    if _ckernels is not None and m < _LIMIT:
        return _ckernels
    return _pykernels


def mul_full(a, b, m):
    return _pick(m).mul_full(list(a), list(b), m)


def mul_trunc(a, b, n, m):
    return _pick(m).mul_trunc(list(a), list(b), n, m)


def taylor_shift(a, c, m):
    return _pick(m).taylor_shift(list(a), c, m)


def power_sums(c, kmax, m):
    return _pick(m).power_sums(list(c), kmax, m)


def compose_trunc(a, s, n, m):
    return _pick(m).compose_trunc(list(a), list(s), n, m)


def series_inverse(a, n, m):
    inv0 = pow(a[0] % m, -1, m)
    return _pick(m).series_inverse(list(a), n, m, inv0)
