"""Fixed-precision p-adic numbers.

A nonzero element is stored as ``p**v * u`` with ``u`` a unit known modulo
``p**M`` (``M`` is the relative precision).  An inexact zero is stored with
``u = 0``, ``M = 0`` and ``v`` equal to its absolute precision, i.e. the
value is only known to be ``O(p**v)``.

Every operation returns the precision it can actually guarantee; nothing is
padded with made-up digits.
"""
from fractions import Fraction
from numbers import Rational

from .errors import NotAUnit, NotPrincipalUnit, OutsideConvergenceDisk

BigRational = Fraction


def vp(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_factorial(n, p):
    """v_p(n!) by Legendre's formula."""
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v


def vp_rational(q, p):
    q = Fraction(q)
    if q == 0:
        raise ValueError("valuation of 0")
    return vp(q.numerator, p) - vp(q.denominator, p)


def _strip(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return n, v


class PadicNumber:
    __slots__ = ("p", "v", "u", "M")

    def __init__(self, p, v, u, M):
        if M <= 0:
            u, M = 0, 0
        else:
            u %= p ** M
        if u == 0:
            self.p, self.v, self.u, self.M = p, v + M, 0, 0
            return
        u, k = _strip(u, p)
        self.p, self.v, self.u, self.M = p, v + k, u, M - k

    # constructors

    @classmethod
    def zero(cls, p, absprec):
        return cls(p, absprec, 0, 0)

    @classmethod
    def one(cls, p, M):
        return cls(p, 0, 1, M)

    @classmethod
    def from_rational(cls, q, p, M):
        return embed_rational(q, p, M)

    # basic properties

    @property
    def is_zero(self):
        return self.u == 0

    @property
    def abs_prec(self):
        return self.v + self.M

    @property
    def valuation(self):
        """Exact valuation, or the absolute precision for an inexact zero."""
        return self.v

    def is_unit(self):
        return not self.is_zero and self.v == 0

    def digits(self):
        """Base-p digits of the unit part, least significant first."""
        out, u = [], self.u
        for _ in range(self.M):
            out.append(u % self.p)
            u //= self.p
        return out

    def lift(self):
        """The rational p**v * u with 0 <= u < p**M."""
        return Fraction(self.u) * Fraction(self.p) ** self.v

    def residue(self, k):
        """Integer representative modulo p**k of an integral element."""
        if self.v < 0 and not self.is_zero:
            raise ValueError("element is not integral")
        if k > self.abs_prec:
            raise ValueError("not enough precision for residue mod p^%d" % k)
        if self.is_zero:
            return 0
        return self.u * self.p ** self.v % self.p ** k

    def with_abs_prec(self, a):
        """Drop precision so that the absolute precision is at most ``a``."""
        if a >= self.abs_prec:
            return self
        if self.is_zero:
            return PadicNumber.zero(self.p, a)
        return PadicNumber(self.p, self.v, self.u, a - self.v)

    # coercion

    def _coerce(self, other, absprec):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            if q == 0:
                return PadicNumber.zero(self.p, absprec)
            return embed_rational(q, self.p, max(absprec - vp_rational(q, self.p), 1))
        return NotImplemented

    # arithmetic

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicNumber(self.p, self.v, -self.u, self.M)

    def __add__(self, other):
        other = self._coerce(other, self.abs_prec)
        if other is NotImplemented:
            return other
        a = min(self.abs_prec, other.abs_prec)
        w = min(self.v, other.v)
        x = self.u * self.p ** (self.v - w) + other.u * self.p ** (other.v - w)
        return PadicNumber(self.p, w, x, a - w)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other, self.abs_prec)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, PadicNumber):
            if other == 0:
                return PadicNumber.zero(self.p, self.abs_prec)
            other = embed_rational(Fraction(other), self.p, max(self.M, 1))
        elif not isinstance(other, PadicNumber):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PadicNumber.zero(self.p, self.v + other.v)
        return PadicNumber(self.p, self.v + other.v, self.u * other.u, min(self.M, other.M))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of an inexact zero")
        return PadicNumber(self.p, -self.v, pow(self.u, -1, self.p ** self.M), self.M)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, PadicNumber):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            other = embed_rational(Fraction(other), self.p, max(self.M, 1))
        elif not isinstance(other, PadicNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return padic_power(self, n)
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_zero:
            if n == 0:
                raise ValueError("0**0 of an inexact zero")
            return PadicNumber.zero(self.p, self.v * n)
        return PadicNumber(self.p, self.v * n, pow(self.u, n, self.p ** self.M), self.M)

    # comparison

    def agreement(self, other):
        """v_p(self - other), capped by the joint absolute precision."""
        d = self - other
        return d.v

    def __eq__(self, other):
        if isinstance(other, (PadicNumber, int, Rational)):
            d = self - other
            return d.is_zero
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if self.is_zero:
            return "O(%d^%d)" % (self.p, self.v)
        return "PadicNumber(p=%d, v=%d, u=%d, M=%d)" % (self.p, self.v, self.u, self.M)

    def __str__(self):
        if self.is_zero:
            return "O(%d^%d)" % (self.p, self.v)
        return "%d^%d * %d + O(%d^%d)" % (self.p, self.v, self.u, self.p, self.abs_prec)


def embed_rational(q, p, M):
    """Image of a rational in Q_p with M significant digits."""
    q = Fraction(q)
    if q == 0:
        return PadicNumber.zero(p, M)
    num, vn = _strip(q.numerator, p)
    den, vd = _strip(q.denominator, p)
    mod = p ** M
    return PadicNumber(p, vn - vd, num * pow(den, -1, mod), M)


def _as_padic(x, p, M):
    if isinstance(x, PadicNumber):
        return x
    return embed_rational(x, p, M)


def teichmuller(x):
    """The (p-1)-th root of unity congruent to the unit x modulo p."""
    if x.is_zero or x.v != 0:
        raise NotAUnit("Teichmuller lift needs a unit, got %r" % (x,))
    p, M = x.p, x.M
    mod = p ** M
    y = x.u % mod
    for _ in range(M + 1):
        z = pow(y, p, mod)
        if z == y:
            break
        y = z
    return PadicNumber(p, 0, y, M)


def teichmuller_int(a, p, M):
    """omega(a) mod p**M as an integer, for an integer a prime to p."""
    if a % p == 0:
        raise NotAUnit("%d is divisible by %d" % (a, p))
    mod = p ** M
    y = a % mod
    for _ in range(M + 1):
        z = pow(y, p, mod)
        if z == y:
            break
        y = z
    return y


def angle(x):
    """<x> = x / omega(x), the principal-unit part of a unit."""
    return x / teichmuller(x)


def _log_terms(vy, a, p):
    """Number of series terms so that every omitted term has valuation >= a."""
    n, lg = 1, 0
    while True:
        while p ** (lg + 1) <= n:
            lg += 1
        if n * vy - lg >= a:
            return n - 1
        n += 1


def padic_log(x):
    """p-adic logarithm on 1 + pZ_p."""
    if x.is_zero or x.v != 0 or (x.u - 1) % x.p:
        raise NotPrincipalUnit("log needs x = 1 mod p, got %r" % (x,))
    p, a = x.p, x.abs_prec
    y = (x.u - 1) % p ** a
    if y == 0:
        return PadicNumber.zero(p, a)
    vy = vp(y, p)
    n0 = _log_terms(vy, a, p)
    L = 0
    while p ** (L + 1) <= n0:
        L += 1
    mod = p ** (a + L)
    s, yn = 0, 1
    for n in range(1, n0 + 1):
        yn = yn * y % mod
        n1, k = _strip(n, p)
        term = yn * pow(n1, -1, mod) * p ** (L - k)
        s += term if n % 2 else -term
    s %= mod
    assert s % p ** L == 0
    return PadicNumber(p, 0, s // p ** L, a)


def padic_exp(x):
    """p-adic exponential on pZ_p (p odd)."""
    p = x.p
    if x.is_zero:
        return PadicNumber.one(p, max(x.v, 1))
    if x.v < 1:
        raise OutsideConvergenceDisk("exp needs v(x) >= 1, got v = %d" % x.v)
    a, vx = x.abs_prec, x.v
    n = 1
    while n * vx * (p - 1) - (n - 1) < a * (p - 1):
        n += 1
    n0 = n - 1
    L = vp_factorial(n0, p)
    mod = p ** (a + L)
    xr = x.u * p ** vx % mod
    s, xn, fact_unit, fact_v = 0, 1, 1, 0
    for k in range(n0 + 1):
        if k:
            xn = xn * xr % mod
            k1, kv = _strip(k, p)
            fact_unit = fact_unit * k1 % mod
            fact_v += kv
        s += xn * pow(fact_unit, -1, mod) * p ** (L - fact_v)
    s %= mod
    assert s % p ** L == 0
    return PadicNumber(p, 0, s // p ** L, a)


def padic_power(x, s):
    """x**s = exp(s log x) for x in 1 + pZ_p and s in Z_p."""
    if not isinstance(x, PadicNumber):
        raise TypeError("base must be a PadicNumber")
    if isinstance(s, PadicNumber):
        if not s.is_zero and s.v < 0:
            raise OutsideConvergenceDisk("exponent must lie in Z_p")
    elif Fraction(s) != 0 and vp_rational(s, x.p) < 0:
        raise OutsideConvergenceDisk("exponent must lie in Z_p")
    lg = padic_log(x)
    if not isinstance(s, PadicNumber):
        s = embed_rational(s, x.p, max(lg.abs_prec, 1))
    return padic_exp(s * lg)


def binomial(s, j):
    """C(s, j) for s in Z_p as a PadicNumber (loses v_p(j!) digits)."""
    p = s.p
    if j == 0:
        return PadicNumber.one(p, max(s.abs_prec, 1))
    if s.v < 0 and not s.is_zero:
        raise ValueError("binomial needs s in Z_p")
    L = vp_factorial(j, p)
    a = s.abs_prec
    if a - L <= 0:
        return PadicNumber.zero(p, max(a - L, 0))
    mod = p ** a
    sr = s.residue(a) if not s.is_zero else 0
    num = 1
    for i in range(j):
        num = num * (sr - i) % mod
    fu, _ = _strip(_factorial(j), p)
    val = num * pow(fu, -1, mod) % mod
    assert val % p ** L == 0
    return PadicNumber(p, 0, val // p ** L, a - L)


def _factorial(n):
    r = 1
    for i in range(2, n + 1):
        r *= i
    return r
