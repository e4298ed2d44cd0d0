"""Finitely generated torsion Lambda-modules given by elementary descriptions.

Quotient sizes |Lambda/(g, omega_n)| with omega_n = (1+T)^(p^n) - 1 are read
off resultant valuations: for distinguished g, Lambda/(g) = Z_p[T]/(g) and the
size is |det(multiplication by omega_n on Z[T]/(g))|_p^-1.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import (BadParameter, FitFailure, IndeterminateInvariants,
                     LevelTooSmall, NotCoprime)
from .padic_core import vp


@dataclass
class WeierstrassData:
    mu: int
    lam: int
    P: list
    u: list
    N: int
    M: int


def weierstrass_prepare(f, p, N=None, M=20):
    """f = p^mu u(T) P(T) with P distinguished of degree lambda, u a unit.

    ``f`` holds p-integral coefficients (ints or Fractions).  Truncating f
    at T^N perturbs the division by terms that drift down lambda places per
    factor of p, so u is certified on a window of N - lambda(M - mu + 1) and
    P to the digits that drift cannot reach.  Asking for N > len(f) treats
    f as an exact polynomial, so nothing is lost on the window N.
    """
    exact = N is not None and N > len(f)
    N = len(f) if N is None else N
    mod = p ** M
    a = []
    for x in list(f[:N]) + [0] * (N - len(f)):
        x = Fraction(x)
        if x.denominator % p == 0:
            raise BadParameter("coefficients must be p-integral")
        a.append(x.numerator * pow(x.denominator, -1, mod) % mod)
    vals = [vp(x, p) if x else M for x in a]
    mu = min(vals) if vals else M
    if mu >= M:
        raise IndeterminateInvariants("all coefficients vanish modulo p^%d" % M)
    lam = vals.index(mu)
    P_ = M - mu
    want = N
    if exact:
        N += lam * (P_ + 2)
        a.extend([0] * (N - len(a)))
    m2 = p ** P_
    g = [(x // p ** mu) % m2 for x in a]
    W = N - lam
    A = g[:lam]
    B = g[lam:]
    Binv = kernels.series_inverse(B, W, m2)
    # T^lam = q g + r: q = B^-1 (1 - tau(A q)), tau dropping T^lam
    q = Binv
    for _ in range(P_ + 1):
        Aq = kernels.mul_trunc(A + [0] * (W + lam - len(A)), q + [0] * lam, W + lam, m2)
        t = [(-x) % m2 for x in Aq[lam:lam + W]]
        t[0] = (t[0] + 1) % m2
        q = kernels.mul_trunc(t, Binv, W, m2)
    qg = kernels.mul_trunc(q + [0] * lam, g[:W + lam] + [0] * max(0, W + lam - len(g)), W + lam, m2)
    r = [(-x) % m2 for x in qg[:lam]]
    P = [(-x) % m2 for x in r] + [1]
    if lam:
        P_ = min(P_, (W - lam) // lam)
        W = max(1, W - lam * (P_ + 1))
    W = min(W, want)
    if P_ < 1:
        raise IndeterminateInvariants("window too short to certify the factorisation")
    m2 = p ** P_
    P = [x % m2 for x in P[:-1]] + [1]
    P = [(x if x <= m2 // 2 else x - m2) for x in P]
    u = kernels.series_inverse([x % m2 for x in q[:W]], W, m2)
    return WeierstrassData(mu, lam, P, u, W, P_)


def recompose(w, p):
    """p^mu u P modulo (p^(M+mu), T^N)."""
    mod = p ** (w.M + w.mu)
    P = [x % mod for x in w.P]
    prod = kernels.mul_trunc(w.u, P + [0] * w.N, w.N, mod)
    return [x * p ** w.mu % mod for x in prod]


# --- exact polynomial arithmetic over Z ---------------------------------------

def _is_distinguished(g, p):
    g = list(g)
    return len(g) >= 1 and g[-1] == 1 and all(c % p == 0 for c in g[:-1])


def _polymulmod(a, b, g):
    """a b mod the monic integer polynomial g."""
    d = len(g) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    for k in range(len(out) - 1, d - 1, -1):
        c = out[k]
        if c:
            for i in range(d + 1):
                out[k - d + i] -= c * g[i]
    return (out[:d] + [0] * d)[:d]


def _omega_mod(g, n, p):
    """(1+T)^(p^n) - 1 mod g, exactly."""
    d = len(g) - 1
    if d == 0:
        return []
    base = _polymulmod([1, 1], [1], g)
    r = [1] + [0] * (d - 1)
    e = p ** n
    while e:
        if e & 1:
            r = _polymulmod(r, base, g)
        base = _polymulmod(base, base, g)
        e >>= 1
    r[0] -= 1
    return r


def bareiss_det(A):
    """Fraction-free determinant of an integer matrix."""
    A = [list(r) for r in A]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def resultant_with_omega(g, n, p):
    """Res(g, omega_n) = det of multiplication by omega_n on Z[T]/(g)."""
    d = len(g) - 1
    h = _omega_mod(g, n, p)
    cols = []
    cur = h
    for _ in range(d):
        cols.append(cur)
        cur = _polymulmod(cur, [0, 1], g)
    return bareiss_det([[cols[j][i] for j in range(d)] for i in range(d)])


def quotient_size_exponent(g, n, p):
    """e with |Lambda/(g, (1+T)^(p^n) - 1)| = p^e for distinguished g."""
    g = [int(x) for x in g]
    if not _is_distinguished(g, p):
        raise BadParameter("g must be a distinguished polynomial")
    if len(g) == 1:
        return 0
    R = resultant_with_omega(g, n, p)
    if R == 0:
        raise NotCoprime("g shares a root with (1+T)^(p^%d) - 1" % n)
    return vp(abs(R), p)


@dataclass
class LambdaModuleDesc:
    """(+) Lambda/(p^m_i) (+) (+) Lambda/(g_j)."""
    p: int
    m: tuple = ()
    g: tuple = field(default_factory=tuple)

    def __post_init__(self):
        self.m = tuple(self.m)
        self.g = tuple(tuple(int(c) for c in gj) for gj in self.g)
        if any(x < 1 for x in self.m):
            raise BadParameter("p-power exponents must be positive")
        for gj in self.g:
            if not _is_distinguished(gj, self.p):
                raise BadParameter("%r is not distinguished" % (gj,))
            if gj[0] == 0:
                raise NotCoprime("g(0) = 0 gives infinite quotients")

    def __add__(self, other):
        if other.p != self.p:
            raise BadParameter("different primes")
        return LambdaModuleDesc(self.p, self.m + other.m, self.g + other.g)

    @property
    def mu(self):
        return sum(self.m)

    @property
    def lam(self):
        return sum(len(gj) - 1 for gj in self.g)

    def exponent(self, n):
        p = self.p
        return sum(k * p ** n for k in self.m) + sum(
            quotient_size_exponent(gj, n, p) for gj in self.g)


def growth_law(desc, n_range=range(0, 6)):
    """(mu, lambda, nu, n0) with e_n = mu p^n + lambda n + nu for n >= n0.

    mu and lambda are fitted from the tail of the e_n sequence and checked
    against the description.
    """
    p = desc.p
    ns = list(n_range)
    if len(ns) < 3:
        raise FitFailure("need at least three levels")
    e = {n: desc.exponent(n) for n in ns}
    a, b, c = ns[-3:]
    rows = [[Fraction(p ** n), Fraction(n), Fraction(1), Fraction(e[n])] for n in (a, b, c)]
    sol = _solve3(rows)
    if sol is None or any(x.denominator != 1 for x in sol):
        raise FitFailure("tail of e_n is not affine in (p^n, n)")
    mu, lam, nu = (int(x) for x in sol)
    if (mu, lam) != (desc.mu, desc.lam):
        raise FitFailure("fit (%d, %d) disagrees with the description (%d, %d)"
                         % (mu, lam, desc.mu, desc.lam))
    n0 = None
    for n in ns:
        if all(e[k] == mu * p ** k + lam * k + nu for k in ns if k >= n):
            n0 = n
            break
    if n0 is None or n0 > ns[-2]:
        raise FitFailure("exactness never stabilizes in the range")
    return mu, lam, nu, n0


def growth_table(desc, n_range=range(0, 6)):
    mu, lam, nu, n0 = growth_law(desc, n_range)
    p = desc.p
    out = []
    for n in n_range:
        e = desc.exponent(n)
        pred = mu * p ** n + lam * n + nu
        out.append({"n": n, "e_n": e, "predicted": pred, "match": e == pred})
    return out


def _solve3(rows):
    m = [list(r) for r in rows]
    for i in range(3):
        piv = next((r for r in range(i, 3) if m[r][i] != 0), None)
        if piv is None:
            return None
        m[i], m[piv] = m[piv], m[i]
        for r in range(3):
            if r != i and m[r][i]:
                f = m[r][i] / m[i][i]
                m[r] = [x - f * y for x, y in zip(m[r], m[i])]
    return [m[i][3] / m[i][i] for i in range(3)]


def p_rank(desc, n):
    """F_p-dimension of M/(p, omega_n): s p^n + sum deg g_j once p^n >= deg g_j."""
    p = desc.p
    if any(len(gj) - 1 > p ** n for gj in desc.g):
        raise LevelTooSmall("need p^n >= deg g_j")
    return len(desc.m) * p ** n + desc.lam


def characteristic_ideal(desc):
    """(sum m_i, prod g_j): the ideal is generated by p^(sum m_i) prod g_j."""
    poly = [1]
    for gj in desc.g:
        out = [0] * (len(poly) + len(gj) - 1)
        for i, x in enumerate(poly):
            for j, y in enumerate(gj):
                out[i + j] += x * y
        poly = out
    return desc.mu, poly


# --- branch series of zeta_p -------------------------------------------------

def branch_series(zeta, i, J):
    """G_i(T) = int omega^(i-1)(x) (1+T)^(l(x)) d(numerator), l(x) = log<x>/log(1+p),
    so zeta_{p,i}(s) = G_i(u^-s - 1) / (omega^i(a)<a>^(1-s) - 1) with u = 1+p.

    Coefficients are Dirac sums over the U-coefficients of the numerator.
    """
    from .padic_core import angle, embed_rational, padic_log, teichmuller_int
    from .measures import _binomial_series
    num = zeta.numerator
    p = num.p
    P = num.prec
    W = P + 4
    mod = p ** P
    logu = padic_log(embed_rational(1 + p, p, W))
    u = num.u_coeffs()[0]
    out = [0] * J
    for m in range(1, num.N):
        if m % p == 0 or not u[m]:
            continue
        ell = padic_log(angle(embed_rational(m, p, W))) / logu
        w = pow(teichmuller_int(m, p, P), (i - 1) % (p - 1), mod)
        b = _binomial_series(ell, J, p, P)
        for j in range(J):
            out[j] += u[m] * w * b[j]
    return [x % mod for x in out], P - 2


def branch_invariants(zeta, i, J=12):
    """Weierstrass (mu, lambda) of the i-th branch numerator series."""
    G, P = branch_series(zeta, i, J)
    w = weierstrass_prepare(G, zeta.p, J, P)
    return w.mu, w.lam


__all__ = ["WeierstrassData", "weierstrass_prepare", "recompose", "quotient_size_exponent",
           "LambdaModuleDesc", "growth_law", "growth_table", "p_rank",
           "characteristic_ideal", "bareiss_det", "resultant_with_omega",
           "branch_series", "branch_invariants"]
