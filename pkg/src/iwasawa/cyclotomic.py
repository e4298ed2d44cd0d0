"""Cyclotomic extensions of Z_p, Dirichlet characters and Gauss sums.

Rings are Z_p[X]/(g) truncated modulo p^M:

* ``base``: Z_p itself (degree 1, X = 1);
* ``ramified`` level n: g = Phi_{p^n}, X a primitive p^n-th root of unity;
* ``unramified`` conductor D: g a Hensel lift of one irreducible factor of
  Phi_D mod p, X a primitive D-th root of unity.

Elements carry their own absolute precision (at most the ring's M) so that
divisions by p are auditable.
"""
from functools import lru_cache
from math import gcd

from . import fppoly
from .errors import (BadConductor, DescentFailure, NotAUnit, PrecisionError,
                     RingTooSmall)
from .padic_core import PadicNumber, teichmuller_int, vp


# --- integer helpers ---------------------------------------------------------

def factorize(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n):
    r = n
    for q in factorize(n):
        r = r // q * (q - 1)
    return r


def multiplicative_order(a, n):
    if gcd(a, n) != 1:
        raise ValueError("%d is not a unit mod %d" % (a, n))
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def primitive_root(p):
    """Least primitive root modulo the odd prime p."""
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1


def discrete_log(a, g, p):
    """ind_g(a) mod p-1 by table lookup (p is small)."""
    a %= p
    x = 1
    for k in range(p - 1):
        if x == a:
            return k
        x = x * g % p
    raise ValueError("%d is not a unit mod %d" % (a, p))


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(a, b):
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    assert not any(a[:db])
    return q


# --- rings -------------------------------------------------------------------

class CycloRing:
    """Z_p[X]/(g) modulo p^M.  Build with :func:`build_ramified`,
    :func:`build_unramified` or :func:`base_ring`."""

    def __init__(self, p, M, g, kind, order, f, e, level=0, D=1):
        self.p, self.M = p, M
        self.mod = p ** M
        self.g = tuple(x % self.mod for x in g)
        self.deg = len(g) - 1
        self.kind, self.order = kind, order
        self.f, self.e = f, e
        self.level, self.D = level, D
        d = self.deg
        # X^k mod g for d <= k < 2d - 1
        self._red = []
        cur = [0] * d
        if d:
            cur = [(-c) % self.mod for c in self.g[:d]]
        for _ in range(max(d - 1, 0)):
            self._red.append(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(cur[i] - top * self.g[i]) % self.mod for i in range(d)]
        self._zeta = {}
        self._xpows = None

    def __repr__(self):
        if self.kind == "ramified":
            return "CycloRing(p=%d, ramified level %d, M=%d)" % (self.p, self.level, self.M)
        if self.kind == "unramified":
            return "CycloRing(p=%d, unramified D=%d, f=%d, M=%d)" % (self.p, self.D, self.f, self.M)
        return "CycloRing(p=%d, Z_p, M=%d)" % (self.p, self.M)

    def descriptor(self):
        if self.kind == "ramified":
            return {"kind": "ramified", "level": self.level}
        if self.kind == "unramified":
            return {"kind": "unramified", "D": self.D}
        return {"kind": "base"}

    def same_as(self, other):
        return (self.p == other.p and self.M == other.M and self.g == other.g)

    def at_precision(self, M):
        if self.kind == "ramified":
            return build_ramified(self.p, self.level, M)
        if self.kind == "unramified":
            return build_unramified(self.p, self.D, M)
        return base_ring(self.p, M)

    # raw coefficient-vector arithmetic

    def reduce(self, v):
        d, m = self.deg, self.mod
        v = list(v)
        if len(v) <= d:
            return tuple(x % m for x in v) + (0,) * (d - len(v))
        out = [x % m for x in v[:d]]
        for k in range(d, len(v)):
            c = v[k] % m
            if c:
                if k - d >= len(self._red):
                    r = fppoly.rem(list(v), list(self.g), m)
                    return tuple(r) + (0,) * (d - len(r))
                r = self._red[k - d]
                for i in range(d):
                    out[i] += c * r[i]
        return tuple(x % m for x in out)

    def zeta_coeff(self):
        # degree one rings: X is the constant root -g0
        return (-self.g[0]) % self.mod

    def mulraw(self, a, b):
        d, m = self.deg, self.mod
        if d == 1:
            return ((a[0] * b[0]) % m,)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self.reduce(prod)

    # constructors

    def element(self, coeffs, prec=None):
        return CycloElement(self, self.reduce(coeffs), self.M if prec is None else prec)

    def zero(self):
        return CycloElement(self, (0,) * self.deg, self.M)

    def one(self):
        return self.from_int(1)

    def from_int(self, a, prec=None):
        return CycloElement(self, (a % self.mod,) + (0,) * (self.deg - 1),
                            self.M if prec is None else prec)

    def from_rational(self, q):
        from fractions import Fraction
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise NotAUnit("denominator of %s is divisible by p" % q)
        return self.from_int(q.numerator * pow(q.denominator, -1, self.mod))

    def from_padic(self, x):
        if x.is_zero:
            return self.from_int(0, prec=min(self.M, max(x.abs_prec, 0)))
        if x.v < 0:
            raise PrecisionError("element %r is not integral" % (x,))
        a = min(self.M, x.abs_prec)
        return self.from_int(x.residue(a), prec=a)

    def gen(self):
        """The distinguished root of unity X."""
        if self.deg == 1:
            return self.from_int(self.zeta_coeff())
        return self.element([0, 1])

    def xpow(self, k):
        """X^k using the period of X."""
        if self._xpows is None:
            x = self.gen()
            cur = self.one()
            tab = []
            for _ in range(self.order):
                tab.append(cur.c)
                cur = cur * x
            self._xpows = tab
        return CycloElement(self, self._xpows[k % self.order], self.M)

    # roots of unity

    def zeta(self, m):
        """A primitive m-th root of unity, compatible across m.

        Prime-power pieces come from the Teichmuller lift when they divide
        p-1, from powers of X otherwise, glued by CRT.
        """
        if m in self._zeta:
            return self._zeta[m]
        if m == 1:
            r = self.one()
        else:
            r = self.one()
            for q, k in factorize(m).items():
                qk = q ** k
                piece = self._prime_power_root(q, k)
                u = pow(m // qk, -1, qk)
                r = r * piece ** u
        self._zeta[m] = r
        return r

    def _prime_power_root(self, q, k):
        qk = q ** k
        p = self.p
        if (p - 1) % qk == 0:
            w = teichmuller_int(primitive_root(p), p, self.M)
            return self.from_int(pow(w, (p - 1) // qk, self.mod))
        if q == p:
            if self.kind == "ramified" and self.level >= k:
                return self.xpow(p ** (self.level - k))
        elif self.kind == "unramified" and self.D % qk == 0:
            return self.xpow(self.D // qk)
        raise RingTooSmall("%r has no primitive %d-th root of unity" % (self, qk))

    def has_root(self, m):
        try:
            self.zeta(m)
            return True
        except RingTooSmall:
            return False

    # Galois action

    def galois_group(self):
        """Exponents c with X -> X^c running over Gal(ring / Z_p)."""
        if self.kind == "ramified":
            return [c for c in range(1, self.order) if c % self.p]
        if self.kind == "unramified":
            return [pow(self.p, i, self.D) for i in range(self.f)]
        return [1]

    def conjugate(self, x, c):
        if self.deg == 1 or c == 1:
            return x
        acc = [0] * self.deg
        for i, xi in enumerate(x.c):
            if xi:
                v = self.xpow(c * i).c
                for j in range(self.deg):
                    acc[j] += xi * v[j]
        return CycloElement(self, tuple(a % self.mod for a in acc), x.prec)

    def adjugate(self, x):
        out = self.one()
        for c in self.galois_group()[1:]:
            out = out * self.conjugate(x, c)
        return out.with_prec(x.prec)

    def norm(self, x):
        """Norm to Z_p as an integer modulo p^prec."""
        n = x * self.adjugate(x)
        if any(n.c[1:]) and self.deg > 1:
            raise DescentFailure("norm did not land in Z_p")
        return n.c[0] % self.p ** n.prec

    def trace(self, x):
        t = self.zero()
        for c in self.galois_group():
            t = t + self.conjugate(x, c)
        return t

    def valuation(self, x):
        """v_pi(x), in units where the uniformiser has valuation 1."""
        nx = self.norm(x)
        if nx == 0:
            raise PrecisionError("element is zero to the working precision")
        return vp(nx, self.p) // self.f

    def residue_int(self, x):
        """Residue of x in F_p, for rings with residue field F_p."""
        if self.kind == "unramified" and self.f > 1:
            raise ValueError("residue field is larger than F_p")
        if self.kind == "ramified":
            return sum(x.c) % self.p
        return x.c[0] % self.p if self.deg == 1 else sum(
            xi * pow(self.zeta_coeff(), i, self.p) for i, xi in enumerate(x.c)) % self.p


@lru_cache(maxsize=None)
def base_ring(p, M):
    return CycloRing(p, M, [-1, 1], "base", 1, 1, 1)


@lru_cache(maxsize=None)
def build_ramified(p, n, M):
    if n < 1:
        raise ValueError("level must be at least 1")
    g = cyclotomic_poly(p ** n)
    return CycloRing(p, M, g, "ramified", p ** n, 1, (p - 1) * p ** (n - 1), level=n)


@lru_cache(maxsize=None)
def build_unramified(p, D, M):
    if D % p == 0:
        raise BadConductor("p=%d divides D=%d" % (p, D))
    if D <= 2:
        raise BadConductor("conductor must exceed 2")
    f = multiplicative_order(p, D)
    phi = [c % p for c in cyclotomic_poly(D)]
    if f == len(phi) - 1:
        g = list(cyclotomic_poly(D))
    else:
        factors = fppoly.equal_degree_factor(phi, f, p)
        g0 = min(factors, key=lambda fac: fac[::-1])
        h0 = fppoly.divmod_monic(phi, g0, p)[0]
        g = fppoly.hensel_lift(list(cyclotomic_poly(D)), g0, h0, p, M)
    return CycloRing(p, M, g, "unramified", D, f, 1, D=D)


def smallest_ring(p, M, conductor):
    """Smallest ring holding a primitive ``conductor``-th root of unity."""
    n = 0
    c = conductor
    while c % p == 0:
        c //= p
        n += 1
    if n and c > 1:
        from .errors import ConfigurationGated
        raise ConfigurationGated(
            "mixed conductor %d needs a composite ring" % conductor)
    if n:
        return build_ramified(p, n, M)
    if c <= 2 or (p - 1) % c == 0:
        return base_ring(p, M)
    return build_unramified(p, c, M)


# --- elements ----------------------------------------------------------------

class CycloElement:
    __slots__ = ("ring", "c", "prec")

    def __init__(self, ring, c, prec):
        self.ring = ring
        self.prec = min(prec, ring.M)
        m = ring.p ** self.prec
        self.c = tuple(x % m for x in c)

    def with_prec(self, prec):
        return CycloElement(self.ring, self.c, min(prec, self.prec))

    def _other(self, y):
        if isinstance(y, CycloElement):
            if y.ring is not self.ring and not y.ring.same_as(self.ring):
                from .errors import RingMismatch
                raise RingMismatch("elements from different rings")
            return y
        if isinstance(y, PadicNumber):
            return self.ring.from_padic(y)
        if isinstance(y, int):
            return self.ring.from_int(y)
        try:
            return self.ring.from_rational(y)
        except TypeError:
            return NotImplemented

    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return CycloElement(self.ring, [a + b for a, b in zip(self.c, y.c)], min(self.prec, y.prec))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.ring, [-a for a in self.c], self.prec)

    def __sub__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return CycloElement(self.ring, [a - b for a, b in zip(self.c, y.c)], min(self.prec, y.prec))

    def __rsub__(self, y):
        return (-self) + y

    def __mul__(self, y):
        if isinstance(y, int):
            return CycloElement(self.ring, [a * y for a in self.c], self.prec)
        y = self._other(y)
        if y is NotImplemented:
            return y
        return CycloElement(self.ring, self.ring.mulraw(self.c, y.c), min(self.prec, y.prec))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r, b = self.ring.one().with_prec(self.prec), self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def is_zero(self):
        return not any(self.c)

    def __eq__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return (self - y).is_zero()

    __hash__ = None

    def is_unit(self):
        r = self.ring
        if r.kind == "ramified":
            return sum(self.c) % r.p != 0
        if r.deg == 1:
            return self.c[0] % r.p != 0
        return r.norm(self.with_prec(1)) % r.p != 0

    def inverse(self):
        r = self.ring
        if not self.is_unit():
            raise NotAUnit("element is not a unit")
        adj = r.adjugate(self)
        n = r.norm(self)
        return adj * pow(n, -1, r.p ** self.prec)

    def divide(self, y):
        """(z, k) with self / y = z / p^k."""
        y = self._other(y)
        r = self.ring
        n = r.norm(y)
        if n == 0:
            raise ZeroDivisionError("divisor vanishes to the working precision")
        k = vp(n, r.p)
        u = n // r.p ** k
        return self * r.adjugate(y) * pow(u, -1, r.p ** min(self.prec, y.prec)), k

    def div_p(self, k):
        """Exact division by p^k; loses k digits."""
        if k == 0:
            return self
        pk = self.ring.p ** k
        if any(x % pk for x in self.c):
            raise PrecisionError("element is not divisible by p^%d" % k)
        return CycloElement(self.ring, [x // pk for x in self.c], self.prec - k)

    def __truediv__(self, y):
        if isinstance(y, int) and y % self.ring.p:
            return self * pow(y, -1, self.ring.p ** self.prec)
        y = self._other(y)
        if y.is_unit():
            return self * y.inverse()
        z, k = self.divide(y)
        return z.div_p(k)

    def descends(self):
        return self.ring.deg == 1 or not any(self.c[1:])

    def to_padic(self):
        if not self.descends():
            raise DescentFailure("element does not lie in Z_p")
        p = self.ring.p
        if self.ring.deg == 1:
            return PadicNumber(p, 0, self.c[0], self.prec)
        return PadicNumber(p, 0, self.c[0], self.prec)

    def __repr__(self):
        return "CycloElement(%s, prec=%d)" % (list(self.c), self.prec)


# --- logarithm of units ------------------------------------------------------

def log_unit(u, convention="teichmuller"):
    """Iwasawa-style logarithm of a unit: log of its principal-unit part.

    ``teichmuller`` divides by the Teichmuller lift of the residue,
    ``power`` uses log(u^(q-1)) / (q-1) with q the residue field size.
    Both agree because log kills roots of unity.
    """
    r = u.ring
    if not u.is_unit():
        raise NotAUnit("log_unit needs a unit")
    q = r.p ** r.f
    if convention == "power":
        w = u ** (q - 1)
        return _log_principal(w) * pow(q - 1, -1, r.mod)
    if convention != "teichmuller":
        raise ValueError("unknown convention %r" % convention)
    return _log_principal(u * teichmuller_unit(u).inverse())


def teichmuller_unit(u):
    """The root of unity of order prime to p congruent to u."""
    r = u.ring
    if r.kind == "ramified" or r.deg == 1 and r.kind == "base":
        return r.from_int(teichmuller_int(r.residue_int(u), r.p, r.M), prec=u.prec)
    q = r.p ** r.f
    y = u
    for _ in range(r.M + 1):
        z = y ** q
        if z == y:
            break
        y = z
    return y


def _log_principal(w):
    r = w.ring
    p, e = r.p, r.e
    y = w - 1
    A = w.prec
    if A <= 0:
        return r.zero().with_prec(0)
    if r.kind == "ramified":
        if sum(y.c) % p:
            raise NotAUnit("not a principal unit")
    elif any(x % p for x in y.c):
        raise NotAUnit("not a principal unit")
    # omitted terms need n - e*v_p(n) >= e*A
    n, lg = 1, 0
    while True:
        while p ** (lg + 1) <= n:
            lg += 1
        # n - e*log_p(n) dips at powers of p, so allow for the next one
        if n - e * (lg + 1) >= e * A:
            break
        n += 1
    n0 = n - 1
    L = 0
    while p ** (L + 1) <= n0:
        L += 1
    mod = r.mod
    s = r.zero()
    yn = r.one()
    for k in range(1, n0 + 1):
        yn = yn * y
        k1, kv = k, 0
        while k1 % p == 0:
            k1 //= p
            kv += 1
        coef = pow(k1, -1, mod) * p ** (L - kv)
        s = s + yn * (coef if k % 2 else -coef)
    s = s.with_prec(A)
    return s.div_p(L)


# --- Dirichlet characters ----------------------------------------------------

class DirichletCharacter:
    """Character mod N with values stored as exponents of an abstract
    primitive root of unity of order ``order``; None off the units."""

    def __init__(self, modulus, order, table):
        self.modulus = modulus
        table = list(table)
        if len(table) != modulus:
            raise ValueError("table length must equal the modulus")
        exps = [e for e in table if e is not None]
        g = order
        for x in exps:
            g = gcd(g, x)
        if order > 1 and g > 1:
            order //= g
            table = [None if x is None else x // g for x in table]
        self.order = order
        self.table = tuple(None if x is None else x % order for x in table)
        self.conductor = self._conductor()
        self.parity = 1 if self.value(-1) == 0 else -1

    def value(self, a):
        return self.table[a % self.modulus]

    __call__ = value

    def __repr__(self):
        return "DirichletCharacter(mod %d, order %d, conductor %d)" % (
            self.modulus, self.order, self.conductor)

    def _conductor(self):
        N = self.modulus
        for d in sorted(x for x in range(1, N + 1) if N % x == 0):
            ok = True
            for a in range(N):
                if gcd(a, N) == 1 and a % d == 1 % d and self.table[a] != 0:
                    ok = False
                    break
            if ok:
                return d
        return N

    def is_trivial(self):
        return self.order == 1

    def is_even(self):
        return self.parity == 1

    def is_primitive(self):
        return self.conductor == self.modulus

    def primitive(self):
        f = self.conductor
        if f == self.modulus:
            return self
        N = self.modulus
        table = [None] * f
        for a in range(f):
            if gcd(a, f) != 1:
                continue
            b = a
            while gcd(b, N) != 1:
                b += f
            table[a] = self.table[b % N]
        return DirichletCharacter(f, self.order, table)

    def __mul__(self, other):
        N = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        m = self.order * other.order // gcd(self.order, other.order)
        s1, s2 = m // self.order, m // other.order
        table = []
        for a in range(N):
            e1, e2 = self.value(a), other.value(a)
            table.append(None if e1 is None or e2 is None else e1 * s1 + e2 * s2)
        return DirichletCharacter(N, m, table)

    def inverse(self):
        return DirichletCharacter(self.modulus, self.order,
                                  [None if e is None else -e for e in self.table])

    def __pow__(self, k):
        return DirichletCharacter(self.modulus, self.order,
                                  [None if e is None else e * k for e in self.table])

    def same(self, other):
        a, b = self.primitive(), other.primitive()
        return a.modulus == b.modulus and a.order == b.order and a.table == b.table

    def at_modulus(self, N):
        """The same character viewed modulo a multiple N of its modulus."""
        if N % self.modulus:
            raise ValueError("modulus must be a multiple")
        table = [None if gcd(a, N) != 1 else self.value(a) for a in range(N)]
        return DirichletCharacter(N, self.order, table)

    def split(self, p):
        """(chi, eta): p-power conductor part and prime-to-p part."""
        N = self.modulus
        pn = 1
        while N % (pn * p) == 0:
            pn *= p
        D = N // pn

        def crt(x, y):
            # z = x mod pn, z = y mod D
            return (x * D * pow(D, -1, pn) + y * pn * pow(pn, -1, D)) % N

        chi = [None if a % p == 0 else self.value(crt(a, 1)) for a in range(pn)]
        eta = [None if gcd(a, D) != 1 else self.value(crt(1, a)) for a in range(D)]
        return (DirichletCharacter(pn, self.order, chi),
                DirichletCharacter(D, self.order, eta))

    def teichmuller_index(self, p):
        """i with chi = omega^i (as primitive characters), or None."""
        c = self.conductor
        if c not in (1, p):
            return None
        if c == 1:
            return 0
        prim = self.primitive()
        for i in range(p - 1):
            if prim.same(teichmuller_character(p, i)):
                return i
        return None

    # realisations

    def values_in(self, ring):
        z = ring.zeta(self.order)
        pows = [z ** k for k in range(self.order)]
        return [None if e is None else pows[e] for e in self.table]

    def value_in(self, a, ring):
        e = self.value(a)
        if e is None:
            return ring.zero()
        return ring.zeta(self.order) ** e

    def int_values(self, p, M):
        """Values as integers mod p^M (requires order | p-1)."""
        if (p - 1) % self.order:
            raise RingTooSmall("values of %r do not lie in Z_%d" % (self, p))
        ring = base_ring(p, M)
        z = ring.zeta(self.order).c[0]
        pows = [pow(z, k, p ** M) for k in range(self.order)]
        return [0 if e is None else pows[e] for e in self.table]

    def int_value(self, a, p, M):
        e = self.value(a)
        if e is None:
            return 0
        if (p - 1) % self.order:
            raise RingTooSmall("values of %r do not lie in Z_%d" % (self, p))
        z = base_ring(p, M).zeta(self.order).c[0]
        return pow(z, e, p ** M)

    def descriptor(self):
        return {"modulus": self.modulus, "order": self.order,
                "conductor": self.conductor,
                "table": [None if e is None else e for e in self.table]}


def trivial_character(N=1):
    return DirichletCharacter(N, 1, [0 if gcd(a, N) == 1 else None for a in range(N)])


def teichmuller_character(p, i=1):
    """omega^i as a character mod p."""
    g = primitive_root(p)
    i %= p - 1
    m = (p - 1) // gcd(i, p - 1) if i else 1
    table = [None] * p
    for a in range(1, p):
        table[a] = i * discrete_log(a, g, p) * m // (p - 1)
    return DirichletCharacter(p, m, table)


def kronecker_symbol(d, n):
    if n == 0:
        return 1 if abs(d) == 1 else 0
    s = 1
    if n < 0:
        n = -n
        if d < 0:
            s = -s
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5):
            s = -s
    # Jacobi symbol (d / n), n odd positive
    a, m = d % n, n
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                s = -s
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            s = -s
        a %= m
    return s if m == 1 else 0


def kronecker_character(d):
    """The quadratic character a -> (d/a) of a fundamental discriminant d."""
    N = abs(d)
    table = []
    for a in range(N):
        k = kronecker_symbol(d, a) if gcd(a, N) == 1 else 0
        table.append(None if k == 0 else (0 if k == 1 else 1))
    return DirichletCharacter(N, 2, table)


def character_from_generators(N, order, images):
    """Character mod N sending each generator g to zeta_order^e, images = {g: e}."""
    table = [None] * N
    table[1 % N] = 0
    frontier = [1 % N]
    while frontier:
        nxt = []
        for a in frontier:
            for g, e in images.items():
                b = a * g % N
                if table[b] is None:
                    table[b] = table[a] + e
                    nxt.append(b)
                elif (table[b] - table[a] - e) % order:
                    raise ValueError("generator images are inconsistent")
        frontier = nxt
    for a in range(N):
        if gcd(a, N) == 1 and table[a] is None:
            raise ValueError("images do not generate (Z/%d)^x" % N)
    return DirichletCharacter(N, order, table)


def gauss_sum(chi, ring):
    """G(chi) = sum_c chi(c) eps^c with eps = ring.zeta(conductor)."""
    chi = chi.primitive()
    f = chi.modulus
    eps = ring.zeta(f)
    vals = chi.values_in(ring)
    s = ring.zero()
    e = ring.one()
    for c in range(f):
        if vals[c] is not None:
            s = s + vals[c] * e
        e = e * eps
    return s


def inverse_gauss_sum(chi, ring):
    """1/G(chi^-1) = chi(-1) G(chi) / f, as (element, k) meaning element / p^k."""
    chi = chi.primitive()
    f = chi.modulus
    G = gauss_sum(chi, ring) * chi.parity
    k = vp(f, ring.p) if f > 1 else 0
    unit = f // ring.p ** k
    return G * pow(unit, -1, ring.mod), k
