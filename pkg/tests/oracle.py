"""Independent reference computations used to check the library.

Nothing here imports iwasawa.  Bernoulli numbers come from the
Akiyama-Tanigawa recurrence, generalised Bernoulli numbers from the
generating function t sum_a chi(a) e^(at) / (e^(ft) - 1) expanded as exact
power series, and p-adic residues from plain modular arithmetic.
Character values live in Q(i) so orders 1, 2 and 4 are covered.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def bernoulli_plus(n):
    """B_n with B_1 = +1/2 (Akiyama-Tanigawa)."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def zeta_neg(n):
    """zeta(-n) for n >= 0."""
    return -bernoulli_plus(n + 1) / (n + 1)


def zeta_p_value(p, k):
    """(1 - p^(k-1)) zeta(1-k)."""
    return (1 - Fraction(p) ** (k - 1)) * zeta_neg(k - 1)


class G:
    """Gaussian rational a + b i."""
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        o = o if isinstance(o, G) else G(o)
        return G(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = o if isinstance(o, G) else G(o)
        return G(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        o = o if isinstance(o, G) else G(o)
        return G(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, q):
        return G(self.a / q, self.b / q)

    def __eq__(self, o):
        o = o if isinstance(o, G) else G(o)
        return self.a == o.a and self.b == o.b

    def __repr__(self):
        return "G(%s, %s)" % (self.a, self.b)


I = G(0, 1)


def _exp_series(c, n):
    """e^(c t) to order n."""
    return [Fraction(c) ** j / factorial(j) for j in range(n)]


def _series_div(a, b, n):
    out = []
    for j in range(n):
        s = a[j] - sum(out[i] * b[j - i] for i in range(j))
        out.append(s / b[0])
    return out


def generalized_bernoulli(chi, f, kmax):
    """[B_{k,chi} for k <= kmax] with chi: int -> G (0 off the units), modulus f.

    t sum_{a=1}^f chi(a) e^(at) / (e^(ft) - 1); dividing numerator and
    denominator by t makes the denominator a unit series.
    """
    n = kmax + 1
    den = _exp_series(f, n + 1)[1:]
    out_re, out_im = [Fraction(0)] * n, [Fraction(0)] * n
    for a in range(1, f + 1):
        c = chi(a)
        if c == 0:
            continue
        q = _series_div(_exp_series(a, n), den, n)
        for j in range(n):
            out_re[j] += c.a * q[j]
            out_im[j] += c.b * q[j]
    return [G(out_re[k], out_im[k]) * factorial(k) for k in range(n)]


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def kronecker_small(d):
    """Quadratic characters of conductor 3, 4, 5, 8 as (function, f)."""
    if d == -3:
        return (lambda a: G(legendre(a, 3))), 3
    if d == -4:
        return (lambda a: G(0) if a % 2 == 0 else G(1 if a % 4 == 1 else -1)), 4
    if d == 5:
        return (lambda a: G(legendre(a, 5))), 5
    if d == 8:
        return (lambda a: G(0) if a % 2 == 0 else G(1 if a % 8 in (1, 7) else -1)), 8
    raise ValueError(d)


def omega5(i):
    """omega^i for p = 5, normalised by omega(2) = i (so the embedding sends
    i to the root of x^2 + 1 congruent to 2 mod 5)."""
    table = {1: G(1), 2: I, 3: G(0, -1), 4: G(-1)}

    def chi(a):
        a %= 5
        if a == 0:
            return G(0)
        z = G(1)
        for _ in range(i % 4):
            z = z * table[a]
        return z
    return chi


def sqrt_minus_one(p, M):
    """The root of x^2 + 1 in Z_p congruent to 2 mod 5 (p = 5)."""
    x = 2
    mod = p ** M
    for _ in range(M + 1):
        x = pow(x, p, mod)
    return x


def residue(q, p, M):
    """(e, r) with q = p^e * (r mod p^M), r a unit or 0."""
    q = Fraction(q)
    if q == 0:
        return (M, 0)
    e = 0
    n, d = q.numerator, q.denominator
    while n % p == 0:
        n //= p
        e += 1
    while d % p == 0:
        d //= p
        e -= 1
    return e, n * pow(d, -1, p ** M) % p ** M


def gaussian_to_zp(z, p, M):
    """(e, r) with z = p^-e r, r reduced mod p^M; e clears the p-part of
    the denominators."""
    e = max(ord_p(c.denominator, p) for c in (z.a, z.b))
    i = sqrt_minus_one(p, M + 4)
    mod = p ** M
    out = 0
    for c, w in ((z.a * p ** e, 1), (z.b * p ** e, i)):
        out += c.numerator * pow(c.denominator, -1, mod) * w
    return e, out % mod


def ord_p(n, p):
    n = abs(n)
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


def sigma_p_brute(k, n, p):
    return sum(d ** (k - 1) for d in range(1, n + 1) if n % d == 0 and d % p)


def quotient_exponent_brute(g, n, p):
    """v_p of the product of g over the nontrivial and trivial p^n-th roots
    minus one, i.e. of prod_{zeta^(p^n)=1} g(zeta - 1), computed as the
    resultant of g with (1+T)^(p^n) - 1 through a Sylvester determinant."""
    from math import comb
    q = p ** n
    w = [comb(q, j) for j in range(q + 1)]
    w[0] -= 1
    return ord_p(_sylvester_det(list(g), w), p)


def _sylvester_det(a, b):
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(a)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(b)) + [0] * (size - n - 1 - i))
    return _det(rows)


def _det(A):
    A = [[Fraction(x) for x in r] for r in A]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return int(det)


def _gcd_degree_mod_p(a, b, p):
    def trim(x):
        x = [c % p for c in x]
        while x and x[-1] == 0:
            x.pop()
        return x
    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            s = len(a) - len(b)
            for i, y in enumerate(b):
                a[s + i] = (a[s + i] - c * y) % p
            a = trim(a)
        a, b = b, a
    return len(a) - 1


def p_rank_brute(p, m, g, n):
    """dim_Fp of M/(p, omega_n) from gcds over F_p."""
    from math import comb
    q = p ** n
    w = [comb(q, j) for j in range(q + 1)]
    w[0] -= 1
    return len(m) * q + sum(_gcd_degree_mod_p(list(gj), w, p) for gj in g)
