"""Exact rational oracle: Bernoulli numbers and Dirichlet L-values at 1-k.

Nothing here touches p-adic arithmetic; values are embedded into Q_p (or a
cyclotomic ring) only at comparison time.
"""
import threading
from fractions import Fraction
from math import comb

from .cyclotomic import cyclotomic_poly, euler_phi, factorize
from .padic_core import embed_rational

_lock = threading.Lock()
_bern = [Fraction(1)]


def bernoulli(n):
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_bern):
        return _bern[n]
    with _lock:
        for m in range(len(_bern), n + 1):
            if m > 1 and m % 2:
                _bern.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * _bern[j] for j in range(m))
            _bern.append(-s / (m + 1))
    return _bern[n]


def bernoulli_poly(n, x):
    x = Fraction(x)
    return sum(comb(n, j) * bernoulli(j) * x ** (n - j) for j in range(n + 1))


def staudt_denominator(k):
    """prod of primes q with (q-1) | k, for even k >= 2."""
    d = 1
    for q in range(2, k + 2):
        if k % (q - 1) == 0 and all(q % r for r in range(2, int(q ** 0.5) + 1)):
            d *= q
    return d


def zeta_neg(n):
    """zeta(-n) = (-1)^n B_{n+1}/(n+1); gives zeta(0) = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (-1) ** n * bernoulli(n + 1) / (n + 1)


def euler_factor_zeta(p, k):
    """(1 - p^(k-1)) zeta(1-k) for k >= 1."""
    return (1 - Fraction(p) ** (k - 1)) * zeta_neg(k - 1)


class CycloRational:
    """An element of Q(zeta_m): rational coefficients on 1, z, ..., z^(phi(m)-1)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        phi = euler_phi(m)
        g = cyclotomic_poly(m)
        c = [Fraction(x) for x in coeffs]
        for k in range(len(c) - 1, phi - 1, -1):
            t = c[k]
            if t:
                for i in range(phi + 1):
                    c[k - phi + i] -= t * g[i]
        c = c[:phi] + [Fraction(0)] * (phi - len(c))
        self.m, self.coeffs = m, tuple(c)

    @classmethod
    def from_exponents(cls, m, weights):
        """sum_e weights[e] z^e."""
        return cls(m, weights)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("value is irrational")
        return self.coeffs[0]

    def __add__(self, other):
        if not isinstance(other, CycloRational):
            other = CycloRational(self.m, [other])
        if other.m != self.m:
            raise ValueError("different cyclotomic fields")
        return CycloRational(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycloRational(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CycloRational):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return CycloRational(self.m, out)
        return CycloRational(self.m, [a * Fraction(other) for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, q):
        return self * (1 / Fraction(q))

    def __eq__(self, other):
        if isinstance(other, CycloRational):
            return self.m == other.m and self.coeffs == other.coeffs
        return self.is_rational() and self.coeffs[0] == other

    __hash__ = None

    def __repr__(self):
        if self.is_rational():
            return "CycloRational(%s)" % self.coeffs[0]
        return "CycloRational(m=%d, %s)" % (self.m, [str(c) for c in self.coeffs])

    def realize(self, ring):
        """Image in a cyclotomic ring, as (element, k) meaning element / p^k."""
        p = ring.p
        z = ring.zeta(self.m)
        k = max([_vden(c, p) for c in self.coeffs if c] or [0])
        acc = ring.zero()
        zp = ring.one()
        for c in self.coeffs:
            if c:
                num = c * Fraction(p) ** k
                acc = acc + zp * ring.from_rational(num)
            zp = zp * z
        return acc, k

    def to_padic(self, p, M):
        """Embedding into Q_p when the value is rational or m | p-1."""
        if self.is_rational():
            return embed_rational(self.coeffs[0], p, M)
        from .cyclotomic import base_ring
        from .padic_core import PadicNumber
        ring = base_ring(p, M + 2 + max(_vden(c, p) for c in self.coeffs if c))
        el, k = self.realize(ring)
        x = PadicNumber(p, -k, el.c[0], ring.M)
        return x.with_abs_prec(x.v + M) if not x.is_zero else x


def _vden(c, p):
    d, k = c.denominator, 0
    while d % p == 0:
        d //= p
        k += 1
    return k


def generalized_bernoulli(chi, k):
    """B_{k,chi} = f^(k-1) sum_{a=1}^f chi(a) B_k(a/f), f the modulus of chi.

    For the trivial character mod 1 this is B_k(1), so B_{1,1} = +1/2.
    """
    if k < 1:
        raise ValueError("k must be positive")
    f, m = chi.modulus, chi.order
    weights = [Fraction(0)] * m
    for a in range(1, f + 1):
        e = chi.value(a)
        if e is not None:
            weights[e] += bernoulli_poly(k, Fraction(a, f))
    scale = Fraction(f) ** (k - 1)
    return CycloRational(m, [w * scale for w in weights])


def dirichlet_L_neg(chi, k):
    """L(chi, 1-k) = -B_{k,chi}/k for k >= 1."""
    return generalized_bernoulli(chi, k) * Fraction(-1, k)


def euler_factor_L(chi, p, k):
    """(1 - chi(p) p^(k-1)) L(chi, 1-k) with chi primitive."""
    chi = chi.primitive()
    L = dirichlet_L_neg(chi, k)
    e = chi.value(p)
    if e is None:
        return L
    z = [Fraction(0)] * (e + 1)
    z[e] = Fraction(p) ** (k - 1)
    return L - L * CycloRational(chi.order, z)


def kummer_raw(p, k, l, m):
    """Check (1-p^(k-1))zeta(1-k) = (1-p^(l-1))zeta(1-l) mod p^m, exactly.

    Returns None when the hypotheses fail.
    """
    if k < 1 or l < 1 or m < 1:
        return None
    if k % (p - 1) == 0 or (k - l) % ((p - 1) * p ** (m - 1)):
        return None
    d = euler_factor_zeta(p, k) - euler_factor_zeta(p, l)
    if d == 0:
        return True
    num, den = d.numerator, d.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v >= m


def check_staudt(nmax):
    """Von Staudt-Clausen denominators for B_2..B_nmax."""
    for k in range(2, nmax + 1, 2):
        if bernoulli(k).denominator != staudt_denominator(k):
            return False
    return True


__all__ = ["bernoulli", "bernoulli_poly", "zeta_neg", "generalized_bernoulli",
           "dirichlet_L_neg", "euler_factor_zeta", "euler_factor_L",
           "CycloRational", "kummer_raw", "check_staudt", "staudt_denominator",
           "factorize"]
