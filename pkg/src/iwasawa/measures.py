"""Measures on Z_p through their truncated Mahler (Amice) transforms.

A measure is stored as the T-coefficients a_0..a_{N-1} of
A(T) = sum a_j T^j, one integer vector per power-basis component of the
coefficient ring, all reduced modulo p^prec.

Most operators are cheapest in the coordinate U = 1 + T: the truncation
A mod T^N equals sum_{m<N} c_m U^m exactly, i.e. the Dirac combination
sum c_m delta_m, with c obtained by a Taylor shift.  phi, psi, restriction
to cosets and twisting by characters are then exponent bookkeeping.  Each
operator reports the window of T-coefficients it can still certify.
"""
from fractions import Fraction
from math import comb

from . import kernels
from .cyclotomic import CycloElement, base_ring
from .errors import (PrecisionError, RingMismatch, RingTooSmall,
                     TruncationExceeded)
from .padic_core import PadicNumber, vp, vp_factorial


def mahler_coefficients(poly, n):
    """a_k = (Delta^k f)(0) for f(x) = sum poly[i] x^i, k < n (exact)."""
    vals = [sum(Fraction(c) * j ** i for i, c in enumerate(poly)) for j in range(n)]
    out = []
    for k in range(n):
        out.append(sum((-1) ** (k - j) * comb(k, j) * vals[j] for j in range(k + 1)))
    return out


def _ceil_div(a, b):
    return -((-a) // b)


def restriction_window(N, p, prec, n):
    """Certified T-window after restricting to a class mod p^n."""
    if n == 0:
        return N
    return max(0, N - (p - 1) * p ** (n - 1) * (prec + n - 1))


def psi_window(N, p, prec):
    return max(0, _ceil_div(N - (p - 1) * prec, p))


def _binomial_series(a, n, p, prec):
    """[C(a, j) mod p^prec for j < n] for a in Z_p given as int/Fraction."""
    mod = p ** prec
    if isinstance(a, int) and a >= 0:
        out, c = [], 1
        for j in range(n):
            out.append(c % mod)
            c = c * (a - j) // (j + 1)
        return out
    L = vp_factorial(max(n - 1, 0), p)
    big = p ** (prec + L)
    if isinstance(a, PadicNumber):
        A = a.residue(min(a.abs_prec, prec + L))
    else:
        a = Fraction(a)
        A = a.numerator * pow(a.denominator, -1, big) % big
    A %= big
    out, c = [], 1
    for j in range(n):
        out.append(c % mod)
        c = c * (A - j) // (j + 1)
    return out


class Measure:
    __slots__ = ("ring", "N", "prec", "comps", "unit_supported", "polynomial", "_u")

    def __init__(self, ring, comps, N, prec=None, unit_supported=False, polynomial=False):
        self.ring = ring
        self.N = N
        self.prec = ring.M if prec is None else min(prec, ring.M)
        mod = ring.p ** max(self.prec, 0)
        cs = []
        for c in comps:
            c = [x % mod for x in c[:N]]
            c.extend([0] * (N - len(c)))
            cs.append(c)
        self.comps = tuple(cs)
        self.unit_supported = unit_supported
        self.polynomial = polynomial
        self._u = None

    # --- construction --------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, p=None, M=None, ring=None, N=None, polynomial=False):
        """Build from T-coefficients given as ints, Fractions, PadicNumbers
        or ring elements."""
        if ring is None:
            ring = base_ring(p, M)
        N = len(coeffs) if N is None else N
        d = ring.deg
        comps = [[0] * N for _ in range(d)]
        prec = ring.M
        for j, a in enumerate(coeffs[:N]):
            if isinstance(a, CycloElement):
                prec = min(prec, a.prec)
                for i in range(d):
                    comps[i][j] = a.c[i]
            elif isinstance(a, PadicNumber):
                el = ring.from_padic(a)
                prec = min(prec, el.prec)
                comps[0][j] = el.c[0]
            else:
                comps[0][j] = ring.from_rational(a).c[0]
        return cls(ring, comps, N, prec, polynomial=polynomial)

    @classmethod
    def from_dirac_weights(cls, weights, p=None, M=None, N=64, ring=None):
        """sum_m w_m delta_m for non-negative integers m (w_m ints or ring elements)."""
        if ring is None:
            ring = base_ring(p, M)
        top = max(weights) if weights else 0
        if top < N:
            u = [[0] * N for _ in range(ring.deg)]
            for m, w in weights.items():
                w = w if isinstance(w, CycloElement) else ring.from_rational(w)
                for i in range(ring.deg):
                    u[i][m] = (u[i][m] + w.c[i]) % ring.mod
            comps = [kernels.taylor_shift(c, 1, ring.mod) for c in u]
            mu = cls(ring, comps, N, polynomial=True)
            mu._u = tuple(u)
            return mu
        comps = [[0] * N for _ in range(ring.deg)]
        for m, w in weights.items():
            w = w if isinstance(w, CycloElement) else ring.from_rational(w)
            b = _binomial_series(m, N, ring.p, ring.M)
            for i in range(ring.deg):
                if w.c[i]:
                    for j in range(N):
                        comps[i][j] += w.c[i] * b[j]
        return cls(ring, comps, N)

    def empty_like(self, N=None, prec=None):
        N = self.N if N is None else N
        return Measure(self.ring, [[0] * N for _ in range(self.ring.deg)], N,
                       self.prec if prec is None else prec)

    # --- basic data ----------------------------------------------------

    @property
    def p(self):
        return self.ring.p

    @property
    def mod(self):
        return self.ring.p ** self.prec

    def coeff(self, j):
        if j >= self.N:
            raise TruncationExceeded("coefficient %d beyond window %d" % (j, self.N))
        return self._value([c[j] for c in self.comps], self.prec)

    def coefficients(self):
        return [self.coeff(j) for j in range(self.N)]

    def _value(self, vec, prec):
        if self.ring.kind == "base":
            return PadicNumber(self.p, 0, vec[0], max(prec, 0))
        return CycloElement(self.ring, vec, prec)

    def u_coeffs(self):
        """c_m with A = sum c_m U^m mod T^N."""
        if self._u is None:
            self._u = tuple(kernels.taylor_shift(c, -1, self.mod) for c in self.comps)
        return self._u

    def _from_u(self, u, N=None, prec=None, **flags):
        prec = self.prec if prec is None else prec
        mod = self.ring.p ** prec
        N = self.N if N is None else N
        comps = [kernels.taylor_shift(c, 1, mod)[:N] for c in u]
        mu = Measure(self.ring, comps, N, prec, **flags)
        if N == len(u[0]) and prec == self.prec:
            mu._u = tuple(list(c) for c in u)
        return mu

    def with_window(self, N):
        if N >= self.N:
            return self
        return Measure(self.ring, [c[:N] for c in self.comps], N, self.prec,
                       self.unit_supported, False)

    def with_prec(self, prec):
        if prec >= self.prec:
            return self
        return Measure(self.ring, self.comps, self.N, prec, self.unit_supported, self.polynomial)

    def base_change(self, ring):
        """View a Z_p-valued measure as valued in ``ring``."""
        if ring is self.ring:
            return self
        if self.ring.kind != "base":
            if self.ring.same_as(ring):
                return Measure(ring, self.comps, self.N, self.prec, self.unit_supported, self.polynomial)
            raise RingMismatch("can only extend scalars from Z_p")
        comps = [list(self.comps[0])] + [[0] * self.N for _ in range(ring.deg - 1)]
        return Measure(ring, comps, self.N, min(self.prec, ring.M), self.unit_supported, self.polynomial)

    def descend(self):
        """Back to Z_p if every coefficient lies in Z_p."""
        if self.ring.kind == "base":
            return self
        if any(any(c) for c in self.comps[1:]):
            from .errors import DescentFailure
            raise DescentFailure("measure is not Z_p-valued")
        return Measure(base_ring(self.p, self.ring.M), [self.comps[0]], self.N, self.prec,
                       self.unit_supported, self.polynomial)

    # --- linear structure ----------------------------------------------

    def _check(self, other):
        if not (other.ring is self.ring or other.ring.same_as(self.ring)):
            raise RingMismatch("measures have different coefficient rings")

    def __add__(self, other):
        self._check(other)
        N = min(self.N, other.N)
        comps = [[a + b for a, b in zip(x[:N], y[:N])] for x, y in zip(self.comps, other.comps)]
        return Measure(self.ring, comps, N, min(self.prec, other.prec),
                       self.unit_supported and other.unit_supported,
                       self.polynomial and other.polynomial)

    def __neg__(self):
        return Measure(self.ring, [[-a for a in c] for c in self.comps], self.N, self.prec,
                       self.unit_supported, self.polynomial)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by an int, Fraction with unit denominator or ring element."""
        if isinstance(c, CycloElement):
            rows = list(zip(*self.comps))
            out = [self.ring.mulraw(r, c.c) for r in rows]
            comps = [list(col) for col in zip(*out)] if out else [[] for _ in self.comps]
            return Measure(self.ring, comps, self.N, min(self.prec, c.prec),
                           self.unit_supported, self.polynomial)
        if isinstance(c, PadicNumber):
            c = self.ring.from_padic(c)
            return self.scale(c)
        if not isinstance(c, int):
            c = Fraction(c)
            c = c.numerator * pow(c.denominator, -1, self.mod)
        return Measure(self.ring, [[a * c for a in x] for x in self.comps], self.N, self.prec,
                       self.unit_supported, self.polynomial)

    def agreement(self, other):
        """(window, digits) on which two measures are compared, and whether they agree."""
        self._check(other)
        N = min(self.N, other.N)
        prec = min(self.prec, other.prec)
        mod = self.p ** prec
        ok = all((a - b) % mod == 0 for x, y in zip(self.comps, other.comps)
                 for a, b in zip(x[:N], y[:N]))
        return ok, N, prec

    def __eq__(self, other):
        if not isinstance(other, Measure):
            return NotImplemented
        return self.agreement(other)[0]

    __hash__ = None

    def is_zero(self):
        return not any(any(c) for c in self.comps)

    def __repr__(self):
        return "Measure(p=%d, N=%d, prec=%d, ring=%s)" % (self.p, self.N, self.prec, self.ring.kind)

    # --- moments --------------------------------------------------------

    def moments(self, K):
        """[(partial^k A)(0) for k < K] as ring values."""
        if K > self.N and not self.polynomial:
            raise TruncationExceeded("moment %d needs window > %d" % (K - 1, self.N))
        u = self.u_coeffs()
        sums = [kernels.power_sums(c, K, self.mod) for c in u]
        return [self._value([s[k] for s in sums], self.prec) for k in range(K)]

    def moment(self, k):
        return self.moments(k + 1)[k]

    def twisted_moments(self, chi, K, ring=None):
        """[int chi(x) x^k dmu for k < K]; chi of conductor p^n."""
        n = _p_exponent(chi.modulus, self.p)
        if K > self.N:
            raise TruncationExceeded("twisted moment %d needs window > %d" % (K - 1, self.N))
        target, vals = self._character_values(chi, ring)
        mu = self.base_change(target) if target is not self.ring else self
        u = mu.u_coeffs()
        mod = mu.mod
        N = self.N
        acc = [[0] * K for _ in range(target.deg)]
        if vals is not None and isinstance(vals[0], int):
            for i, c in enumerate(u):
                w = [c[m] * vals[m % chi.modulus] for m in range(N)]
                acc[i] = kernels.power_sums(w, K, mod)
        else:
            weighted = _weight_ring(target, u, [vals[m % chi.modulus] for m in range(N)])
            for i, c in enumerate(weighted):
                acc[i] = kernels.power_sums(c, K, mod)
        out = []
        for k in range(K):
            prec = mu.prec if self.polynomial or n == 0 else min(
                mu.prec, _ceil_div(N - k, (self.p - 1) * self.p ** (n - 1)) - n)
            vec = [a[k] for a in acc]
            if target.kind == "base":
                out.append(PadicNumber(self.p, 0, vec[0], max(prec, 0)))
            else:
                out.append(CycloElement(target, vec, prec))
        return out

    def _character_values(self, chi, ring):
        p = self.p
        if (p - 1) % chi.order == 0:
            if self.ring.kind == "base":
                return self.ring, chi.int_values(p, self.ring.M)
            return self.ring, [None if e is None else self.ring.zeta(chi.order) ** e
                               for e in chi.table]
        target = ring if ring is not None else self.ring
        if not target.has_root(chi.order):
            raise RingTooSmall("ring cannot hold the values of %r" % (chi,))
        return target, [None if v is None else v for v in chi.values_in(target)]

    def sector_sums(self, K):
        """S[r][l] = sum_{m = r mod p} c_m m^l for r = 1..p-1, l < K, with the
        precision they are certified to."""
        p = self.p
        u = self.u_coeffs()
        mod = self.mod
        out = {}
        for r in range(1, p):
            rows = []
            for c in u:
                w = [c[m] if m % p == r else 0 for m in range(self.N)]
                rows.append(kernels.power_sums(w, K, mod))
            out[r] = rows
        prec = self.prec if self.polynomial else min(self.prec, _ceil_div(self.N - K, p - 1) - 1)
        return out, prec

    # --- operators ------------------------------------------------------

    def mult_by_x(self):
        """x * mu, i.e. A -> (1+T) A'(T)."""
        u = self.u_coeffs()
        mod = self.mod
        nu = [[c[m] * m % mod for m in range(self.N)] for c in u]
        N = self.N if self.polynomial else self.N - 1
        out = self._from_u(nu, unit_supported=self.unit_supported, polynomial=self.polynomial)
        return out.with_window(N) if N < out.N else out

    def mult_by_zx(self, z):
        """z^x * mu, i.e. A -> A((1+T) z - 1), for z = 1 mod the maximal ideal."""
        ring = self.ring
        if isinstance(z, CycloElement):
            if self.ring.kind == "base" and z.ring.kind != "base":
                return self.base_change(z.ring).mult_by_zx(z)
            zr = z
        elif isinstance(z, PadicNumber):
            zr = ring.from_padic(z)
        else:
            zr = ring.from_rational(z)
        d = zr - 1
        if d.is_zero():
            vz = None
        else:
            if not (ring.kind == "ramified" and sum(d.c) % ring.p == 0) and any(x % ring.p for x in d.c):
                raise PrecisionError("z - 1 must be topologically nilpotent")
            vz = Fraction(ring.valuation(d), ring.e)
        prec = min(self.prec, zr.prec)
        u = self.u_coeffs()
        powers = ring.one()
        rows = []
        for m in range(self.N):
            rows.append(powers.c)
            powers = powers * zr
        weighted = _weight_ring(ring, u, [CycloElement(ring, r, prec) for r in rows])
        out = self._from_u(weighted, prec=prec, polynomial=self.polynomial,
                           unit_supported=self.unit_supported)
        if self.polynomial or vz is None:
            return out
        cut = int(-(-Fraction(prec) // vz))
        return out.with_window(max(0, self.N - cut))

    def act_sigma(self, a):
        """sigma_a: A -> A((1+T)^a - 1); exact modulo T^N."""
        p = self.p
        if isinstance(a, int) and a >= 0 and self.polynomial:
            u = self.u_coeffs()
            top = max((m for m in range(self.N) if any(c[m] for c in u)), default=0)
            if a * top < self.N:
                nu = [[0] * self.N for _ in u]
                for i, c in enumerate(u):
                    for m in range(top + 1):
                        if c[m]:
                            nu[i][a * m] = (nu[i][a * m] + c[m]) % self.mod
                sup = self.unit_supported and a % p != 0
                return self._from_u(nu, polynomial=True, unit_supported=sup)
        s = _binomial_series(a, self.N, p, self.prec)
        s[0] = 0
        comps = [kernels.compose_trunc(c, s, self.N, self.mod) for c in self.comps]
        unit = isinstance(a, PadicNumber) and a.valuation == 0 or (
            not isinstance(a, PadicNumber) and Fraction(a).numerator % p != 0)
        return Measure(self.ring, comps, self.N, self.prec,
                       self.unit_supported and unit, False)

    def frobenius_phi(self):
        return self.act_sigma(self.p)

    def trace_psi(self):
        """psi: keep U-exponents divisible by p and divide them by p."""
        p = self.p
        u = self.u_coeffs()
        nu = [[c[p * m] if p * m < self.N else 0 for m in range(self.N)] for c in u]
        out = self._from_u(nu, polynomial=self.polynomial)
        if self.polynomial:
            return out
        return out.with_window(psi_window(self.N, p, self.prec))

    def _filter(self, keep, n, **flags):
        u = self.u_coeffs()
        nu = [[c[m] if keep(m) else 0 for m in range(self.N)] for c in u]
        out = self._from_u(nu, polynomial=self.polynomial, **flags)
        if self.polynomial:
            return out
        return out.with_window(restriction_window(self.N, self.p, self.prec, n))

    def restrict_to_units(self):
        p = self.p
        return self._filter(lambda m: m % p != 0, 1, unit_supported=True)

    def restrict_to_coset(self, b, n):
        q = self.p ** n
        if not 0 <= b < q:
            raise ValueError("need 0 <= b < p^n")
        sup = self.unit_supported or b % self.p != 0
        return self._filter(lambda m: m % q == b, n, unit_supported=sup)

    def convolve_additive(self, other):
        self._check(other)
        N = min(self.N, other.N)
        prec = min(self.prec, other.prec)
        mod = self.p ** prec
        d = self.ring.deg
        if d == 1:
            comps = [kernels.mul_trunc(self.comps[0][:N], other.comps[0][:N], N, mod)]
        else:
            prods = {}
            for i in range(d):
                for j in range(d):
                    prods[i, j] = kernels.mul_trunc(self.comps[i][:N], other.comps[j][:N], N, mod)
            comps = _reduce_products(self.ring, prods, N, mod)
        return Measure(self.ring, comps, N, prec)

    def plus_minus_project(self, sign):
        """(mu + sign * sigma_{-1} mu) / 2."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        refl = self.act_sigma(-1)
        s = self + refl.scale(sign)
        return Measure(self.ring, s.comps, s.N, s.prec, self.unit_supported,
                       self.polynomial).scale(
            Fraction(1, 2))

    # --- twisting -------------------------------------------------------

    def twist_by_character(self, chi, ring=None, method="weighting"):
        """mu_chi with int f dmu_chi = int chi f dmu, chi of conductor p^n.

        ``weighting`` multiplies U-coefficients by chi(m); ``gauss`` uses
        (1/G(chi^-1)) sum_c chi(c)^-1 A((1+T) eps^c - 1) in a ramified ring.
        """
        if method == "gauss":
            return self._twist_gauss(chi, ring)
        n = _p_exponent(chi.modulus, self.p)
        target, vals = self._character_values(chi, ring)
        mu = self.base_change(target) if target is not self.ring else self
        u = mu.u_coeffs()
        q = chi.modulus
        if vals is not None and isinstance(vals[0], int):
            nu = [[c[m] * vals[m % q] for m in range(mu.N)] for c in u]
        else:
            nu = _weight_ring(target, u, [vals[m % q] for m in range(mu.N)])
        out = mu._from_u(nu, polynomial=mu.polynomial, unit_supported=n > 0 or mu.unit_supported)
        if mu.polynomial:
            return out
        return out.with_window(restriction_window(mu.N, self.p, mu.prec, n))

    def _twist_gauss(self, chi, ring=None):
        from .cyclotomic import build_ramified, inverse_gauss_sum
        p = self.p
        chi = chi.primitive()
        n = _p_exponent(chi.modulus, p)
        if chi.modulus != p ** n:
            raise RingTooSmall("gauss-sum twist needs a p-power conductor")
        if n == 0:
            return self
        big = ring if ring is not None else build_ramified(p, n, self.ring.M)
        if big.kind != "ramified" or big.level < n:
            raise RingTooSmall("need a ramified ring of level >= %d" % n)
        if self.ring.kind != "base":
            raise RingTooSmall("gauss-sum twist implemented for Z_p-valued measures")
        prec = self.prec
        eps = big.zeta(p ** n)
        inv = chi.inverse()
        vals = inv.values_in(big)
        N = self.N
        a = self.comps[0]
        mod = big.p ** prec
        total = [[0] * N for _ in range(big.deg)]
        for c in range(p ** n):
            if c % p == 0:
                continue
            z = eps ** c
            t = _compose_affine(big, a, z, mod)
            w = vals[c]
            rows = list(zip(*t))
            rows = [big.mulraw(r, w.c) for r in rows]
            for j, r in enumerate(rows):
                for i in range(big.deg):
                    total[i][j] += r[i]
        G, k = inverse_gauss_sum(chi, big)
        window = max(0, N - (p - 1) * p ** (n - 1) * prec)
        rows = [big.mulraw([total[i][j] % mod for i in range(big.deg)], G.c) for j in range(window)]
        pk = p ** k
        out = [[0] * window for _ in range(big.deg)]
        for j, r in enumerate(rows):
            for i in range(big.deg):
                x = r[i] % mod
                if x % pk:
                    raise PrecisionError("gauss-sum twist not divisible by p^%d" % k)
                out[i][j] = x // pk
        res = Measure(big, out, window, prec - k, unit_supported=True)
        if (p - 1) % chi.order == 0:
            return res.descend()
        return res


def _p_exponent(q, p):
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return n


def _weight_ring(ring, u, weights):
    """Multiply ring-valued U-coefficients by ring-valued weights (None = 0)."""
    d = ring.deg
    N = len(u[0])
    out = [[0] * N for _ in range(d)]
    for m in range(N):
        w = weights[m]
        if w is None:
            continue
        vec = [c[m] for c in u]
        if not any(vec):
            continue
        r = ring.mulraw(vec, w.c)
        for i in range(d):
            out[i][m] = r[i]
    return out


def _reduce_products(ring, prods, N, mod):
    d = ring.deg
    raw = [[0] * N for _ in range(2 * d - 1)]
    for (i, j), v in prods.items():
        row = raw[i + j]
        for t in range(N):
            row[t] += v[t]
    out = [[x % mod for x in raw[i]] for i in range(d)]
    for k in range(d, 2 * d - 1):
        red = ring._red[k - d]
        for t in range(N):
            c = raw[k][t] % mod
            if c:
                for i in range(d):
                    out[i][t] = (out[i][t] + c * red[i]) % mod
    return out


_PASCAL = {}


def _pascal(N, mod):
    key = (N, mod)
    if key not in _PASCAL:
        rows = []
        for i in range(N):
            rows.append([comb(i, j) % mod for j in range(i + 1)])
        _PASCAL[key] = rows
    return _PASCAL[key]


def _compose_affine(ring, a, z, mod):
    """Components of A(z(1+T) - 1) for Z_p coefficients a, z in ``ring``.

    Coefficient j is z^j sum_{i>=j} a_i C(i,j) (z-1)^(i-j) (Horner-free,
    independent of the U-coordinate route).
    """
    N = len(a)
    d = ring.deg
    zm1 = z - 1
    pw = [ring.one().c]
    for _ in range(N):
        pw.append(ring.mulraw(pw[-1], zm1.c))
    pas = _pascal(N, mod)
    zp = ring.one()
    cols = []
    for j in range(N):
        acc = [0] * d
        for i in range(j, N):
            ai = a[i]
            if ai:
                coef = ai * pas[i][j]
                v = pw[i - j]
                for t in range(d):
                    acc[t] += coef * v[t]
        acc = [x % mod for x in acc]
        cols.append(ring.mulraw(acc, zp.c))
        zp = zp * z
    return [[cols[j][i] % mod for j in range(N)] for i in range(d)]


def dirac(a, p, M, N, ring=None):
    """delta_a, transform (1+T)^a."""
    ring = ring or base_ring(p, M)
    if isinstance(a, int) and 0 <= a < N:
        return Measure.from_dirac_weights({a: 1}, N=N, ring=ring)
    prec = ring.M
    if isinstance(a, PadicNumber):
        prec = min(prec, a.abs_prec - vp_factorial(max(N - 1, 0), p))
        if prec <= 0:
            raise PrecisionError("not enough digits in a for a window of %d" % N)
    b = _binomial_series(a, N, p, prec)
    comps = [b] + [[0] * N for _ in range(ring.deg - 1)]
    return Measure(ring, comps, N, prec, unit_supported=(
        (a.valuation == 0) if isinstance(a, PadicNumber) else Fraction(a).numerator % p != 0))


__all__ = ["Measure", "dirac", "mahler_coefficients", "restriction_window", "psi_window"]
