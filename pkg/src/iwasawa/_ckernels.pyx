# Compiled versions of the kernels in _pykernels.  Moduli must be < 2**63 so
# that products fit in an unsigned 128-bit accumulator.
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

MAX_MODULUS = 2 ** 63


cdef uint64_t* _load(list a, Py_ssize_t n, uint64_t m) except NULL:
    cdef uint64_t* buf = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i
    cdef Py_ssize_t la = len(a)
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = <uint64_t> (a[i] % m) if i < la else 0
    return buf


cdef list _dump(uint64_t* buf, Py_ssize_t n):
    return [buf[i] for i in range(n)]


cdef void _mul(uint64_t* a, Py_ssize_t la, uint64_t* b, Py_ssize_t lb,
               uint64_t* out, Py_ssize_t n, uint64_t m) nogil:
    cdef Py_ssize_t i, j, lo, hi
    cdef u128 acc
    for i in range(n):
        acc = 0
        lo = i - lb + 1
        if lo < 0:
            lo = 0
        hi = i if i < la - 1 else la - 1
        for j in range(lo, hi + 1):
            acc += <u128> a[j] * b[i - j]
            if acc >= (<u128> 1) << 126:
                acc %= m
        out[i] = <uint64_t> (acc % m)


def mul_full(list a, list b, m):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef uint64_t mm = m
    cdef Py_ssize_t n = la + lb - 1
    cdef uint64_t* pa = _load(a, la, mm)
    cdef uint64_t* pb = _load(b, lb, mm)
    cdef uint64_t* out = <uint64_t*> malloc(n * sizeof(uint64_t))
    try:
        with nogil:
            _mul(pa, la, pb, lb, out, n, mm)
        return _dump(out, n)
    finally:
        free(pa); free(pb); free(out)


def mul_trunc(list a, list b, Py_ssize_t n, m):
    cdef uint64_t mm = m
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n)
    if n <= 0:
        return []
    cdef uint64_t* pa = _load(a, la, mm)
    cdef uint64_t* pb = _load(b, lb, mm)
    cdef uint64_t* out = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef Py_ssize_t i
    try:
        if la == 0 or lb == 0:
            for i in range(n):
                out[i] = 0
        else:
            with nogil:
                _mul(pa, la, pb, lb, out, n, mm)
        return _dump(out, n)
    finally:
        free(pa); free(pb); free(out)


def taylor_shift(list a, c, m):
    cdef uint64_t mm = m
    cdef Py_ssize_t n = len(a), i, j
    cdef uint64_t cc = c % m
    cdef uint64_t* b = _load(a, n, mm)
    try:
        with nogil:
            for i in range(n - 1):
                for j in range(n - 2, i - 1, -1):
                    b[j] = <uint64_t> ((b[j] + <u128> cc * b[j + 1]) % mm)
        return _dump(b, n)
    finally:
        free(b)


def power_sums(list c, Py_ssize_t kmax, m):
    cdef uint64_t mm = m
    cdef Py_ssize_t n = len(c), j, k
    cdef uint64_t* pc = _load(c, n, mm)
    cdef uint64_t* acc = <uint64_t*> malloc((kmax if kmax > 0 else 1) * sizeof(uint64_t))
    cdef uint64_t pw, jj
    try:
        with nogil:
            for k in range(kmax):
                acc[k] = 0
            for j in range(n):
                if pc[j] == 0:
                    continue
                pw = pc[j]
                jj = j % mm
                for k in range(kmax):
                    acc[k] = <uint64_t> ((<u128> acc[k] + pw) % mm)
                    pw = <uint64_t> ((<u128> pw * jj) % mm)
        return _dump(acc, kmax)
    finally:
        free(pc); free(acc)


def compose_trunc(list a, list s, Py_ssize_t n, m):
    cdef uint64_t mm = m
    if s and s[0] % m:
        raise ValueError("inner series must have zero constant term")
    if n <= 0:
        return []
    cdef Py_ssize_t la = min(len(a), n), ls = min(len(s), n), i
    cdef uint64_t* pa = _load(a, la, mm)
    cdef uint64_t* ps = _load(s, ls, mm)
    cdef uint64_t* out = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef uint64_t* tmp = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef uint64_t* sw
    try:
        with nogil:
            for i in range(n):
                out[i] = 0
            for i in range(la - 1, -1, -1):
                if ls > 0:
                    _mul(out, n, ps, ls, tmp, n, mm)
                    sw = out; out = tmp; tmp = sw
                else:
                    for j in range(n):
                        out[j] = 0
                out[0] = <uint64_t> ((<u128> out[0] + pa[i]) % mm)
        return _dump(out, n)
    finally:
        free(pa); free(ps); free(out); free(tmp)


def series_inverse(list a, Py_ssize_t n, m, inv0):
    cdef uint64_t mm = m
    if n <= 0:
        return []
    cdef Py_ssize_t la = min(len(a), n), k, j
    cdef uint64_t* pa = _load(a, la, mm)
    cdef uint64_t* b = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef uint64_t iv = inv0 % m
    cdef u128 acc
    try:
        with nogil:
            b[0] = iv
            for k in range(1, n):
                acc = 0
                for j in range(1, (k if k < la - 1 else la - 1) + 1):
                    acc += <u128> pa[j] * b[k - j]
                    if acc >= (<u128> 1) << 126:
                        acc %= mm
                acc %= mm
                b[k] = <uint64_t> ((<u128> (mm - <uint64_t> acc) % mm * iv) % mm)
        return _dump(b, n)
    finally:
        free(pa); free(b)
