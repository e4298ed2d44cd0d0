"""Coleman power series, the norm operator and the Coleman map.

Series are handled in the U-coordinate X = 1 + T where both phi and the
norm are cheap: phi is X -> X^p, and prod_xi f(xi(1+T) - 1) is the Graeffe
product prod_xi F(xi X) = G(X^p) with N(f)(T) = G(1 + T).
"""
import random

from . import kernels
from .cyclotomic import CycloElement, build_ramified
from .errors import (BadParameter, DescentFailure, InsufficientDepth,
                     NotNormInvariant, NotPsiFixed, NotAUnit)
from .kubota_leopoldt import PseudoMeasure
from .measures import Measure, _binomial_series, psi_window
from .cyclotomic import base_ring


class UnitPowerSeries:
    """Invertible f in Z_p[[T]] known modulo (p^M, T^N).

    ``polynomial`` marks an exact polynomial (coefficients from N on are 0).
    """

    __slots__ = ("p", "M", "N", "coeffs", "polynomial", "norm_invariant")

    def __init__(self, coeffs, p, M, N=None, polynomial=False, norm_invariant=False):
        mod = p ** M
        c = [x % mod for x in coeffs]
        N = len(c) if N is None else N
        if polynomial:
            while len(c) > 1 and c[-1] == 0:
                c.pop()
            N = max(N, len(c))
        c = c[:N] + [0] * (N - len(c))
        if c[0] % p == 0:
            raise NotAUnit("constant term must be a unit")
        self.p, self.M, self.N = p, M, N
        self.coeffs = c
        self.polynomial = polynomial
        self.norm_invariant = norm_invariant

    @classmethod
    def constant(cls, v, p, M, N=1):
        return cls([v], p, M, N, polynomial=True, norm_invariant=True)

    @property
    def mod(self):
        return self.p ** self.M

    @property
    def degree(self):
        if not self.polynomial:
            return None
        c = self.coeffs
        d = len(c) - 1
        while d > 0 and c[d] == 0:
            d -= 1
        return d

    def __repr__(self):
        kind = "poly" if self.polynomial else "N=%d" % self.N
        return "UnitPowerSeries(p=%d, M=%d, %s, %s)" % (self.p, self.M, kind, self.coeffs[:6])

    def with_window(self, N):
        return UnitPowerSeries(self.coeffs[:N], self.p, self.M, N, False, self.norm_invariant)

    def with_prec(self, M):
        return UnitPowerSeries(self.coeffs, self.p, min(M, self.M), self.N, self.polynomial,
                               self.norm_invariant)

    def padded(self, N):
        """Coefficient list of length N (only meaningful up to the window)."""
        c = self.coeffs[:N]
        return c + [0] * (N - len(c))

    def __mul__(self, other):
        M = min(self.M, other.M)
        mod = self.p ** M
        if self.polynomial and other.polynomial:
            c = kernels.mul_full(self.coeffs, other.coeffs, mod)
            return UnitPowerSeries(c, self.p, M, polynomial=True)
        N = min(self.window, other.window)
        c = kernels.mul_trunc(self.padded(N), other.padded(N), N, mod)
        return UnitPowerSeries(c, self.p, M, N)

    @property
    def window(self):
        return self.N

    def inverse(self, N=None):
        N = N or self.N
        c = kernels.series_inverse(self.padded(N), N, self.mod)
        return UnitPowerSeries(c, self.p, self.M, N)

    def agreement(self, other):
        """(ok, window, digits) on the common window and precision."""
        N = min(self.N, other.N)
        if self.polynomial and other.polynomial:
            N = max(self.N, other.N)
        M = min(self.M, other.M)
        mod = self.p ** M
        a, b = self.padded(N), other.padded(N)
        return all((x - y) % mod == 0 for x, y in zip(a, b)), N, M

    def __eq__(self, other):
        if not isinstance(other, UnitPowerSeries):
            return NotImplemented
        return self.agreement(other)[0]

    __hash__ = None

    def u_coeffs(self):
        return kernels.taylor_shift(self.coeffs, -1, self.mod)

    def sigma(self, b):
        """f((1+T)^b - 1)."""
        p, mod = self.p, self.mod
        if self.polynomial and isinstance(b, int) and b >= 0:
            U = self.u_coeffs()
            out = [0] * (b * (len(U) - 1) + 1)
            for m, c in enumerate(U):
                out[b * m] = c
            return UnitPowerSeries(kernels.taylor_shift(out, 1, mod), p, self.M, polynomial=True,
                                   norm_invariant=self.norm_invariant)
        s = _binomial_series(b, self.N, p, self.M)
        s[0] = 0
        c = kernels.compose_trunc(self.coeffs, s, self.N, mod)
        return UnitPowerSeries(c, p, self.M, self.N, norm_invariant=self.norm_invariant)

    def frobenius_phi(self):
        return self.sigma(self.p)

    def evaluate_at_pi(self, n, M=None):
        """f(pi_n) = F(xi_{p^n}) in the level-n ring; truncation at T^N costs
        the digits that pi_n^N does not reach."""
        M = self.M if M is None else min(M, self.M)
        ring = build_ramified(self.p, n, M)
        U = self.u_coeffs()
        el = ring.element(ring.reduce(U), M)
        if not self.polynomial:
            el = el.with_prec(min(M, self.N // ring.e))
        return el


def _poly_to_ring(F, ring):
    return CycloElement(ring, ring.reduce(list(F)), ring.M)


# --- towers ------------------------------------------------------------------

def relative_norm(x, n):
    """Norm from level n+1 to level n of a level-(n+1) ring element."""
    ring = x.ring
    p = ring.p
    q = p ** n
    out = x
    for j in range(1, p):
        out = out * ring.conjugate(x, 1 + j * q)
    c = out.c
    if any(c[i] for i in range(len(c)) if i % p):
        raise DescentFailure("relative norm does not lie in the smaller field")
    low = build_ramified(p, n, ring.M) if n else base_ring(p, ring.M)
    vec = [c[p * i] for i in range(low.deg)]
    return CycloElement(low, vec, out.prec)


class UnitTower:
    """A norm-compatible family (u_1, ..., u_nmax) of level-n units."""

    def __init__(self, p, M, levels, check=True):
        self.p, self.M = p, M
        self.levels = dict(levels)
        self.n_max = max(self.levels)
        if check:
            for n in range(1, self.n_max):
                if not relative_norm(self.levels[n + 1], n) == self.levels[n]:
                    raise BadParameter("levels %d and %d are not norm compatible" % (n + 1, n))

    def __getitem__(self, n):
        return self.levels[n]

    def __repr__(self):
        return "UnitTower(p=%d, M=%d, n_max=%d)" % (self.p, self.M, self.n_max)

    @classmethod
    def constant(cls, v, p, n_max, M):
        levels = {n: build_ramified(p, n, M).from_int(v) for n in range(1, n_max + 1)}
        return cls(p, M, levels)

    @classmethod
    def from_series(cls, f, n_max):
        """The map R: evaluation at pi_n."""
        return cls(f.p, f.M, {n: f.evaluate_at_pi(n) for n in range(1, n_max + 1)}, check=False)


def cyclotomic_tower(a, n_max, p, M):
    """c_n(a) = (xi^a - 1)/(xi - 1) = 1 + xi + ... + xi^(a-1) at each level."""
    if a % p == 0:
        raise BadParameter("a must be prime to p")
    if (a - 1) % p ** n_max == 0 or (a + 1) % p ** n_max == 0:
        raise BadParameter("a must not be +-1 modulo p^n_max")
    levels = {}
    for n in range(1, n_max + 1):
        ring = build_ramified(p, n, M)
        a0 = a % ring.order
        vec = [0] * ring.order
        for i in range(a0):
            vec[i] = 1
        levels[n] = CycloElement(ring, ring.reduce(vec), M)
    return UnitTower(p, M, levels)


def coleman_closed_form(a, p, M):
    """f_{c(a)}(T) = ((1+T)^a - 1)/T."""
    if a % p == 0:
        raise BadParameter("a must be prime to p")
    if a < 1:
        raise BadParameter("closed form implemented for positive a")
    c = _binomial_series(a, a + 1, p, M)[1:]
    return UnitPowerSeries(c, p, M, polynomial=True, norm_invariant=True)


# --- the norm operator -------------------------------------------------------

def norm_operator(f):
    """N(f), defined by phi(N f)(T) = prod_{xi in mu_p} f(xi(1+T) - 1).

    The product runs in Z[y]/(y^p - 1) (y standing for xi) and is checked to
    descend to Z_p before the phi-preimage X^p -> X is read off.
    """
    p, mod = f.p, f.mod
    F = f.u_coeffs()
    L = len(F)
    parts = []
    for r in range(p):
        if r < L:
            part = [F[m] if m % p == r else 0 for m in range(L)]
            parts.append(part if any(part) else None)
        else:
            parts.append(None)
    P = {0: F}
    for c in range(1, p):
        Q = {}
        for e, Pe in P.items():
            for r in range(p):
                if parts[r] is None:
                    continue
                k = (e + c * r) % p
                prod = kernels.mul_full(Pe, parts[r], mod)
                if k in Q:
                    acc = Q[k]
                    if len(prod) > len(acc):
                        acc.extend([0] * (len(prod) - len(acc)))
                    for i, x in enumerate(prod):
                        acc[i] = (acc[i] + x) % mod
                else:
                    Q[k] = list(prod)
        P = Q
    size = max(len(v) for v in P.values())
    comp = [P.get(e, []) + [0] * (size - len(P.get(e, []))) for e in range(p)]
    # sum_e y^e Q_e maps to sum_e xi^e Q_e, which lies in Z_p iff Q_1 = ... = Q_{p-1}
    for e in range(2, p):
        if any((a - b) % mod for a, b in zip(comp[e], comp[1])):
            raise DescentFailure("norm product is not Z_p-valued")
    val = [(a - b) % mod for a, b in zip(comp[0], comp[1])]
    if any(val[i] for i in range(len(val)) if i % p):
        raise DescentFailure("norm product is not in the image of phi")
    G = val[::p]
    g = kernels.taylor_shift(G, 1, mod)
    if f.polynomial:
        return UnitPowerSeries(g, p, f.M, polynomial=True)
    N = psi_window(f.N, p, f.M)
    return UnitPowerSeries(g[:N], p, f.M, N)


def is_norm_invariant(f):
    g = norm_operator(f)
    ok, N, _ = g.agreement(f)
    return ok and N > 0


# --- reconstruction ----------------------------------------------------------

def interpolant(u):
    """f_n(T) = sum c_i (1+T)^i for u = sum c_i xi^i, so f_n(pi_n) = u."""
    ring = u.ring
    p = ring.p
    c = kernels.taylor_shift(list(u.c), 1, p ** u.prec)
    return UnitPowerSeries(c, p, u.prec, polynomial=True)


def coleman_reconstruct(tower, depth=None):
    """N^(2n)(f_n) at the top level n; certified to min(M, n + 1) digits."""
    n = tower.n_max if depth is None else depth
    if n not in tower.levels or n < 1:
        raise InsufficientDepth("tower has no level %d" % n)
    digits = min(tower.M, n + 1)
    f = interpolant(tower[n])
    for _ in range(2 * n):
        f = norm_operator(f)
    out = f.with_prec(digits)
    out.norm_invariant = True
    return out


# --- logarithmic derivative and the Coleman map ------------------------------

def log_derivative(f, N=None):
    """Delta f = (1+T) f'(T) / f(T) as a Z_p-valued measure."""
    p, mod = f.p, f.mod
    if N is None:
        N = f.N if f.polynomial else f.N - 1
    if not f.polynomial:
        N = min(N, f.N - 1)
    U = f.u_coeffs()
    xU = [m * c % mod for m, c in enumerate(U)]
    num = kernels.taylor_shift(xU, 1, mod)
    num = (num + [0] * N)[:N]
    inv = kernels.series_inverse(f.padded(N), N, mod)
    d = kernels.mul_trunc(num, inv, N, mod)
    return Measure(base_ring(p, f.M), [d], N, f.M)


def coleman_map(f, N=None, check=True):
    """Col(f) = x^-1 Res(Delta f), as a numerator with shift t = 1."""
    if check and not is_norm_invariant(f):
        raise NotNormInvariant("N(f) != f within the truncation")
    mu = log_derivative(f, N)
    return PseudoMeasure(mu.restrict_to_units(), a=None, t=1, full=mu)


def sigma_numerator(col, b):
    """sigma_b applied to x^-1 nu is b x^-1 sigma_b(nu)."""
    return col.numerator.act_sigma(b).scale(b)


# --- the fundamental sequence ------------------------------------------------

def _phi_sum(g, terms):
    """sum_{n < terms} phi^n(g) for a Z_p-valued measure g."""
    total = g
    cur = g
    for _ in range(1, terms):
        cur = cur.frobenius_phi()
        if cur.is_zero():
            break
        total = total + cur
    return total


def fundamental_sequence_checks(p=5, M=8, N=40, seed=0):
    """Numerical witnesses for the exact sequence around the Coleman map."""
    rng = random.Random(seed)
    ring = base_ring(p, M)
    report = {}
    # (i) (1 - phi) kills constants but not the psi-fixed F_a
    c = rng.randrange(1, p ** M)
    const = Measure(ring, [[c]], N, M)
    report["constant_in_kernel"] = (const - const.frobenius_phi()).is_zero()
    from .kubota_leopoldt import build_F_a
    Fa = build_F_a(2, p, N, M)
    report["F_a_not_in_kernel"] = not (Fa - Fa.frobenius_phi()).with_window(
        psi_window(N, p, M)).is_zero()
    # (ii) g with psi(g) = 0 and g(0) = 0: S = sum phi^n g is psi-fixed and (1 - phi)S = g
    b1, b2 = rng.choice([x for x in range(1, p * 3) if x % p]), 1
    raw = Measure.from_dirac_weights({b1: 1, b2: -1}, N=N, ring=ring)
    rand = Measure(ring, [[rng.randrange(p ** M) for _ in range(N)]], N, M).restrict_to_units()
    w = rand.coeff(0).residue(M)
    g = rand - Measure.from_dirac_weights({1: w}, N=rand.N, ring=ring) + raw.with_window(rand.N)
    terms = M + 2
    S = _phi_sum(g, terms)
    report["sum_is_psi_fixed"] = S.trace_psi().agreement(S)[0]
    report["one_minus_phi_inverts"] = (S - S.frobenius_phi()).agreement(g)[0]
    # (iii) the image of Col lies in the kernel of int x
    f = coleman_closed_form(2, p, M)
    col = coleman_map(f, N)
    report["col_moment_one_vanishes"] = col.numerator.moment(0).is_zero
    # (1 + T) is psi-killed with value 1 at 0
    d1 = Measure.from_dirac_weights({1: 1}, N=N, ring=ring)
    report["one_plus_T_psi_zero"] = d1.trace_psi().is_zero()
    report["one_plus_T_value"] = d1.coeff(0).residue(M) == 1
    return report


# --- the mod p inverse of Delta ----------------------------------------------

def delta_mod_p(g, p):
    """Delta g mod p for a unit g over F_p, same length as g."""
    n = len(g)
    gp = [(i + 1) * g[i + 1] % p for i in range(n - 1)] + [0]
    num = [(gp[i] + (gp[i - 1] if i else 0)) % p for i in range(n)]
    inv = kernels.series_inverse([x % p for x in g], n, p)
    return kernels.mul_trunc(num, inv, n, p)


def delta_preimage_modp(f, p):
    """g = prod (1 - alpha_m T^m) over F_p with Delta g = f mod T^(len f - 1).

    Reduces T/(1+T) f step by step: alpha_m = -d_m/m when d_m != 0.
    """
    n = len(f)
    f = [x % p for x in f]
    # d = T/(1+T) f, coefficients 1..n
    inv1pt = [(-1) ** i % p for i in range(n)]
    d = [0] + kernels.mul_trunc(f, inv1pt, n, p)
    g = [1] + [0] * (n - 1)
    for m in range(1, n):
        dm = d[m]
        if dm == 0:
            continue
        if m % p == 0:
            raise NotPsiFixed("coefficient %d violates d_n = d_np" % m)
        alpha = -dm * pow(m, -1, p) % p
        # T/(1+T) Delta(1 - alpha T^m) = -sum_k m alpha^k T^mk
        ak = alpha
        for k in range(m, n + 1, m):
            d[k] = (d[k] + m * ak) % p
            ak = ak * alpha % p
        fac = [1] + [0] * (n - 1)
        if m < n:
            fac[m] = -alpha % p
        g = kernels.mul_trunc(g, fac, n, p)
    return g


__all__ = ["UnitPowerSeries", "UnitTower", "cyclotomic_tower", "coleman_closed_form",
           "norm_operator", "coleman_reconstruct", "log_derivative", "coleman_map",
           "fundamental_sequence_checks", "delta_preimage_modp", "delta_mod_p",
           "relative_norm", "interpolant", "sigma_numerator", "is_norm_invariant"]
