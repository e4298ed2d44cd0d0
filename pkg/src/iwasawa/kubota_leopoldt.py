"""The analytic construction of the Kubota-Leopoldt p-adic L-function.

zeta_p is kept as a pseudo-measure: a unit-supported numerator
Res(mu_a), the smoothing parameter a, and a shift t = 1 standing for the
factor x^-1.  Integrals against characters are twisted moments of the
numerator divided by the theta_a evaluation chi(a) a^k - 1.
"""
from fractions import Fraction
from math import gcd

from . import kernels
from .cyclotomic import (CycloElement, base_ring, build_ramified, gauss_sum,
                         inverse_gauss_sum, log_unit, primitive_root,
                         smallest_ring, teichmuller_character)
from .errors import (BadConductor, BadSmoothing, ConfigurationGated,
                     OddCharacter, PoleAtTrivialBranch, PoleAtTrivialCharacter,
                     TruncationExceeded)
from .measures import Measure, _binomial_series
from .padic_core import (PadicNumber, angle, embed_rational, padic_power,
                         teichmuller_int)

DEFAULT_GUARD = 3


def default_smoothing(p):
    """Least primitive root a mod p with a^(p-1) != 1 mod p^2."""
    for a in range(2, p * p):
        if a % p and primitive_root_ok(a, p) and pow(a, p - 1, p * p) != 1:
            return a
    raise BadSmoothing("no generator found")


def primitive_root_ok(a, p):
    return all(pow(a, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def build_F_a(a, p, N, M):
    """mu_a with transform F_a(T) = 1/T - a/((1+T)^a - 1)."""
    if a % p == 0 or a == 1:
        raise BadSmoothing("smoothing parameter must be prime to p and != 1")
    mod = p ** M
    b = _binomial_series(a, N + 2, p, M)
    Q = b[1:N + 1]
    R = b[2:N + 2]
    F = kernels.mul_trunc(R, kernels.series_inverse(Q, N, mod), N, mod)
    return Measure(base_ring(p, M), [F], N, M)


class PseudoMeasure:
    """numerator / theta_a with a shift x^-t; ``a is None`` means a genuine
    measure (no smoothing)."""

    def __init__(self, numerator, a=None, t=1, full=None, eta=None):
        self.numerator = numerator
        self.a = a
        self.t = t
        self.full = full
        self.eta = eta

    @property
    def p(self):
        return self.numerator.p

    @property
    def ring(self):
        return self.numerator.ring

    @property
    def unit_source(self):
        """A measure with the same restriction to Z_p^x as the numerator but
        a wider window: the unrestricted measure when it is known."""
        if self.full is not None and self.full.ring is self.numerator.ring:
            return self.full.with_prec(self.numerator.prec)
        return self.numerator

    def __repr__(self):
        return "PseudoMeasure(p=%d, a=%s, t=%d, N=%d, prec=%d)" % (
            self.p, self.a, self.t, self.numerator.N, self.numerator.prec)

    def theta_a(self, chi, k, like):
        """chi(a) a^k - 1, in the same ring as ``like``."""
        p, a = self.p, self.a
        if isinstance(like, CycloElement):
            ring = like.ring
            return chi.value_in(a, ring) * pow(a, k, ring.mod) - 1
        P = like.abs_prec + 2
        c = chi.int_value(a, p, P)
        return PadicNumber(p, 0, c * pow(a, k, p ** P) - 1, P)

    def eval(self, chi, k):
        """int chi(x) x^k d(zeta) for chi of p-power conductor and k >= 0."""
        p = self.p
        if chi.modulus % p and chi.modulus != 1:
            raise BadConductor("character must have p-power conductor")
        num = self.numerator
        j = k - self.t
        if j >= 0:
            if j >= num.N:
                raise TruncationExceeded("moment %d beyond window %d" % (j, num.N))
            top = num.twisted_moments(chi, j + 1)[j]
        else:
            i = chi.teichmuller_index(p)
            if i is None:
                raise ConfigurationGated("negative shifts need a Teichmuller-power character")
            top = mellin(self.unit_source, (i + j) % (p - 1), j)
        if self.a is None:
            return top
        den = self.theta_a(chi, k, top)
        if den.is_zero if isinstance(den, PadicNumber) else den.is_zero():
            raise PoleAtTrivialCharacter(
                "pole: trivial character at k = %d" % k, numerator=top, denominator=den)
        return top / den


def build_zeta_p(p, M, N, a=None, guard=DEFAULT_GUARD):
    """zeta_p = x^-1 Res(mu_a) / theta_a, built at M + guard digits."""
    a = default_smoothing(p) if a is None else a
    if a % p == 0 or a == 1:
        raise BadSmoothing("bad smoothing parameter %d" % a)
    mu = build_F_a(a, p, N, M + guard)
    return PseudoMeasure(mu.restrict_to_units(), a=a, t=1, full=mu)


# --- Mellin transform --------------------------------------------------------

def mellin(nu, j, sigma, digits=None):
    """int omega(x)^j <x>^sigma d nu over Z_p^x.

    Only the residue classes r = 1..p-1 enter, so nu may be the
    unrestricted measure; that avoids paying the restriction window twice.

    Expands <x>^sigma = sum_l C(sigma, l) (<x>-1)^l, which converges because
    <x> - 1 is divisible by p; only Teichmuller-twisted moments are needed.
    """
    p = nu.p
    P = nu.prec if digits is None else min(digits, nu.prec)
    J = P + 1
    if J > nu.N:
        raise TruncationExceeded("Mellin transform needs %d moments" % J)
    S, sprec = nu.sector_sums(J)
    P = min(P, sprec)
    mod = p ** P
    om = {r: teichmuller_int(r, p, P) for r in range(1, p)}
    # I[t] = int omega^(j-t)(x) x^t, per ring component
    d = nu.ring.deg
    I = []
    for t in range(J):
        e = (j - t) % (p - 1)
        vec = [sum(pow(om[r], e, mod) * S[r][i][t] for r in range(1, p)) % mod for i in range(d)]
        I.append(vec)
    C = _binomial_series(sigma, J, p, P)
    total = [0] * d
    binrow = [1]
    for l in range(J):
        if l:
            binrow = [1] + [binrow[i] + binrow[i + 1] for i in range(l - 1)] + [1]
        if C[l] == 0:
            continue
        for i in range(d):
            s = 0
            for t in range(l + 1):
                term = binrow[t] * I[t][i]
                s += term if (l - t) % 2 == 0 else -term
            total[i] += C[l] * s
    total = [x % mod for x in total]
    if nu.ring.kind == "base":
        return PadicNumber(p, 0, total[0], P)
    return CycloElement(nu.ring, total, P)


def mellin_branch(i, s, zeta):
    """zeta_{p,i}(s) = int omega^i(x) <x>^(1-s) zeta_p."""
    p = zeta.p
    i %= p - 1
    s = _as_padic(s, p, zeta.numerator.prec)
    sigma = -s
    top = mellin(zeta.unit_source, (i - zeta.t) % (p - 1), sigma)
    if zeta.a is None:
        return top
    a = zeta.a
    P = zeta.numerator.prec
    wa = PadicNumber(p, 0, teichmuller_int(a, p, P + 2) ** i, P + 2)
    one_minus_s = 1 - s
    la = padic_power(angle(embed_rational(a, p, P + 2)), one_minus_s)
    den = wa * la - 1
    if den.is_zero:
        raise PoleAtTrivialBranch("pole of zeta_{p,0} at s = 1", numerator=top, denominator=den)
    return top / den


def _as_padic(s, p, P):
    if isinstance(s, PadicNumber):
        return s
    return embed_rational(Fraction(s), p, P + 2) if Fraction(s) != 0 else PadicNumber.zero(p, P + 2)


# --- tame twists -------------------------------------------------------------

def _eta_ring(eta, p, M):
    D = eta.conductor
    ring = smallest_ring(p, M, D)
    if not ring.has_root(eta.order):
        from .cyclotomic import build_unramified
        L = D * eta.order // gcd(D, eta.order)
        ring = build_unramified(p, L, M)
    return ring


def build_F_eta(eta, p, N, M):
    """mu_eta with transform -1/G(eta^-1) sum_c eta(c)^-1 / ((1+T) eps^c - 1)."""
    eta = eta.primitive()
    D = eta.modulus
    if D == 1:
        raise BadConductor("trivial tame character: use build_zeta_p")
    if D % p == 0:
        raise BadConductor("conductor of eta must be prime to p")
    ring = _eta_ring(eta, p, M)
    eps = ring.zeta(D)
    Ginv, k = inverse_gauss_sum(eta, ring)
    assert k == 0
    inv = eta.inverse()
    vals = inv.values_in(ring)
    cols = [[0] * ring.deg for _ in range(N)]
    for c in range(1, D):
        if vals[c] is None:
            continue
        e = eps ** c
        w = (e - 1).inverse()
        # 1/((1+T)e - 1) = sum (-1)^j e^j/(e-1)^(j+1) T^j
        r = -(e * w)
        term = w * vals[c]
        for j in range(N):
            for t in range(ring.deg):
                cols[j][t] += term.c[t]
            term = term * r
    out = [ring.mulraw([-x for x in col], Ginv.c) for col in cols]
    comps = [[out[j][t] for j in range(N)] for t in range(ring.deg)]
    mu = Measure(ring, comps, N, M)
    if (p - 1) % eta.order == 0 and ring.kind != "base":
        mu = mu.descend()
    return mu


def build_zeta_eta(eta, p, M, N, guard=DEFAULT_GUARD):
    """zeta_eta = x^-1 Res(mu_eta), a genuine measure (shift t = 1)."""
    mu = build_F_eta(eta, p, N, M + guard)
    return PseudoMeasure(mu.restrict_to_units(), a=None, t=1, full=mu, eta=eta.primitive())


def Lp_theta(theta, s, p, M, N, a=None, zeta=None):
    """L_p(theta, s) = int chi(x) <x>^(1-s) zeta_eta for theta = chi eta."""
    chi, eta = theta.split(p)
    i = chi.teichmuller_index(p)
    if i is None:
        raise ConfigurationGated("wild part of conductor p^n, n >= 2, is not supported")
    if eta.primitive().modulus == 1:
        z = zeta or build_zeta_p(p, M, N, a)
        return mellin_branch(i, s, z)
    z = zeta or build_zeta_eta(eta, p, M, N)
    return mellin_branch(i, s, z)


def Lp_theta_alternative(theta, s, p, M, N, zeta=None):
    """int chi omega^-1(x) <x>^-s mu_eta by pointwise evaluation of the
    Dirac form sum c_m delta_m (independent of the Mellin expansion)."""
    chi, eta = theta.split(p)
    i = chi.teichmuller_index(p)
    if i is None:
        raise ConfigurationGated("wild part of conductor p^n, n >= 2, is not supported")
    if eta.primitive().modulus == 1:
        raise ConfigurationGated("the alternative route needs a genuine measure mu_eta")
    z = zeta or build_zeta_eta(eta, p, M, N)
    mu = z.full
    P = mu.prec
    s = _as_padic(s, p, P)
    u = mu.u_coeffs()
    ring = mu.ring
    acc = [0] * ring.deg
    mod = p ** P
    for m in range(1, mu.N):
        if m % p == 0 or not any(c[m] for c in u):
            continue
        w = pow(teichmuller_int(m, p, P + 2), (i - 1) % (p - 1), p ** (P + 2))
        x = padic_power(angle(embed_rational(m, p, P + 2)), -s)
        val = w * x.residue(min(x.abs_prec, P)) % mod
        for t in range(ring.deg):
            acc[t] += u[t][m] * val
    acc = [x % mod for x in acc]
    if ring.kind == "base":
        return PadicNumber(p, 0, acc[0], P)
    return CycloElement(ring, acc, P)


# --- the value at s = 1 ------------------------------------------------------

def lp_at_one(theta, p, M, N, a=None):
    """Both routes to L_p(theta, 1); returns (measure value, log-sum value, digits)."""
    theta_p = theta.primitive()
    if theta_p.is_trivial():
        raise PoleAtTrivialCharacter("theta must be non-trivial")
    if not theta_p.is_even():
        raise OddCharacter("odd theta: both sides vanish")
    A = Lp_theta(theta_p, 1, p, M, N, a)
    B = lp_at_one_logsum(theta_p, p, M)
    digits = A.agreement(B) if isinstance(A, PadicNumber) else None
    return A, B, digits


def lp_at_one_logsum(theta, p, M, guard=DEFAULT_GUARD):
    """-(1 - theta(p)/p) (1/G(theta^-1)) sum_a theta^-1(a) log_p(1 - xi^a)."""
    theta = theta.primitive()
    Nc = theta.modulus
    if Nc % p == 0 and Nc != p:
        raise ConfigurationGated("conductor %d: only p or prime-to-p conductors" % Nc)
    W = M + guard + 2
    if Nc == p:
        ring = build_ramified(p, 1, W)
    else:
        ring = _eta_ring(theta, p, W)
    xi = ring.zeta(Nc)
    inv = theta.inverse()
    vals = inv.values_in(ring)
    total = ring.zero()
    for c in range(1, Nc):
        if vals[c] is None:
            continue
        # (1 - xi^c)/(1 - xi) = 1 + xi + ... + xi^(c-1); log(1 - xi) drops out
        u = ring.zero()
        x = ring.one()
        for _ in range(c):
            u = u + x
            x = x * xi
        total = total + vals[c] * log_unit(u)
    G, k = inverse_gauss_sum(theta, ring)
    val = (total * G)
    val = val.div_p(k) if k else val
    ev = theta.value(p)
    if ev is not None:
        # factor (1 - theta(p)/p): theta(p) p^-1 costs one digit
        tp = theta.value_in(p, ring)
        val = (val * p - val * tp).div_p(1)
    val = -val
    if not val.descends():
        from .errors import DescentFailure
        raise DescentFailure("log-sum value does not lie in Z_p")
    return val.to_padic()


# --- Kummer congruences ------------------------------------------------------

def kummer_applicable(p, k, l, m):
    return (k >= 1 and l >= 1 and m >= 1 and k % (p - 1) != 0
            and (k - l) % ((p - 1) * p ** (m - 1)) == 0)


def kummer_check(zeta, k, l, m):
    """None when the hypotheses fail.  Otherwise: eval(k) = eval(l) mod p^m,
    with both values anchored to the rational oracle mod p^m (congruence
    between moments alone holds for every measure, so it cannot detect a
    corrupted series)."""
    p = zeta.p
    if not kummer_applicable(p, k, l, m):
        return None
    from .cyclotomic import trivial_character
    from .lvalues import euler_factor_zeta
    one = trivial_character()
    vk, vl = zeta.eval(one, k), zeta.eval(one, l)
    ok = (vk - vl).v >= m
    for k_, v in ((k, vk), (l, vl)):
        ok = ok and v.agreement(euler_factor_zeta(p, k_)) >= m
    return ok


def sample_kummer_triples(p, count, rng, kmax):
    """Random valid (k, l, m) with k, l <= kmax."""
    out = []
    while len(out) < count:
        m = rng.randint(1, 4)
        step = (p - 1) * p ** (m - 1)
        if step >= kmax:
            continue
        k = rng.randint(1, kmax - step)
        if k % (p - 1) == 0:
            continue
        l = k + step * rng.randint(1, (kmax - k) // step)
        out.append((k, l, m))
    return out


def mutated(zeta, j, delta=1):
    """zeta_p rebuilt from mu_a with the T^j coefficient shifted by delta."""
    mu = zeta.full
    comps = [list(c) for c in mu.comps]
    comps[0][j] += delta
    bad = Measure(mu.ring, comps, mu.N, mu.prec)
    return PseudoMeasure(bad.restrict_to_units(), a=zeta.a, t=zeta.t, full=bad)
