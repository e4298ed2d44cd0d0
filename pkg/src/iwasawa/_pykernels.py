"""Pure-Python implementations of the hot integer kernels.

All vectors are lists of non-negative ints already reduced modulo ``m``.
Polynomial products use Kronecker substitution, which hands the work to
CPython's big-integer multiplication.
"""


def _pack(a, nb):
    return int.from_bytes(b"".join(x.to_bytes(nb, "little") for x in a), "little")


def mul_full(a, b, m):
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    nb = ((min(la, lb) * (m - 1) ** 2).bit_length() + 8) // 8
    raw = (_pack(a, nb) * _pack(b, nb)).to_bytes(nb * (la + lb - 1), "little")
    return [int.from_bytes(raw[i * nb:(i + 1) * nb], "little") % m
            for i in range(la + lb - 1)]


def mul_trunc(a, b, n, m):
    out = mul_full(a[:n], b[:n], m)[:n]
    out.extend([0] * (n - len(out)))
    return out


def taylor_shift(a, c, m):
    """Coefficients of a(X + c)."""
    b = list(a)
    n = len(b)
    c %= m
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            b[j] = (b[j] + c * b[j + 1]) % m
    return b


def power_sums(c, kmax, m):
    """[sum_j c_j * j**k mod m for k < kmax]."""
    acc = [0] * kmax
    for j, cj in enumerate(c):
        if cj == 0:
            continue
        pw = cj
        for k in range(kmax):
            acc[k] += pw
            pw = pw * j % m
    return [x % m for x in acc]


def compose_trunc(a, s, n, m):
    """a(s(T)) mod T^n for s with zero constant term."""
    if s and s[0] % m:
        raise ValueError("inner series must have zero constant term")
    a = list(a[:n])
    out = [0] * n
    for coeff in reversed(a):
        out = mul_trunc(out, s, n, m)
        out[0] = (out[0] + coeff) % m
    return out


def series_inverse(a, n, m, inv0):
    """1/a mod (T^n, m) given inv0 = a[0]^{-1} mod m (Newton iteration)."""
    b = [inv0 % m]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ab = mul_trunc(a, b, prec, m)
        corr = [(-x) % m for x in ab]
        corr[0] = (corr[0] + 2) % m
        b = mul_trunc(b, corr, prec, m)
    return b + [0] * (n - len(b))
