"""The p-adic family of p-stabilised Eisenstein series, via q-expansions."""
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import base_ring, trivial_character
from .errors import BadWeight, PoleAtTrivialCharacter
from .lvalues import zeta_neg
from .measures import Measure
from .padic_core import PadicNumber, embed_rational, vp_rational


@dataclass
class QExpansion:
    weight: int
    level: str
    coeffs: list
    p: int = None

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)


def divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def sigma(k, n):
    """sigma_{k-1}(n)."""
    return sum(d ** (k - 1) for d in divisors(n))


def sigma_p(k, n, p):
    """sum of d^(k-1) over divisors d of n prime to p."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    return sum(d ** (k - 1) for d in divisors(n) if d % p)


def _check_weight(k):
    if k < 4 or k % 2:
        raise BadWeight("weight must be even and at least 4, got %r" % (k,))


def eisenstein(k, nmax):
    """E_k = zeta(1-k)/2 + sum sigma_{k-1}(n) q^n, exactly."""
    _check_weight(k)
    return QExpansion(k, "1", [zeta_neg(k - 1) / 2] + [Fraction(sigma(k, n)) for n in range(1, nmax + 1)])


def stabilized_eisenstein(k, nmax, p):
    """E_k^(p) = (1 - p^(k-1)) zeta(1-k)/2 + sum sigma^(p)_{k-1}(n) q^n."""
    _check_weight(k)
    c0 = (1 - Fraction(p) ** (k - 1)) * zeta_neg(k - 1) / 2
    return QExpansion(k, "Gamma0(%d)" % p,
                      [c0] + [Fraction(sigma_p(k, n, p)) for n in range(1, nmax + 1)], p)


def stabilization_identity(k, nmax, p):
    """E_k(q) - p^(k-1) E_k(q^p), for comparison with E_k^(p)."""
    E = eisenstein(k, nmax).coeffs
    out = list(E)
    for n in range(0, nmax + 1, p):
        out[n] -= Fraction(p) ** (k - 1) * E[n // p]
    return QExpansion(k, "Gamma0(%d)" % p, out, p)


def family_coefficient(n, p, M=20, N=None):
    """A_n = sum of delta_d over divisors d of n prime to p."""
    if n < 1:
        raise ValueError("n must be positive")
    N = N or n + 1
    weights = {d: 1 for d in divisors(n) if d % p}
    return Measure.from_dirac_weights(weights, N=max(N, n + 1), ring=base_ring(p, M))


def family_specialize(k, nmax, zeta):
    """Specialise the measure-valued family at x^(k-1).

    The constant term is (1/2) int x^(k-1) (x zeta_p) = eval(zeta_p, 1, k)/2.
    """
    _check_weight(k)
    p = zeta.p
    M = zeta.numerator.prec
    try:
        c0 = zeta.eval(trivial_character(), k) / 2
    except PoleAtTrivialCharacter:
        raise BadWeight("weight %d hits the pole" % k)
    out = [c0]
    for n in range(1, nmax + 1):
        A = family_coefficient(n, p, M)
        out.append(A.moment(k - 1))
    return QExpansion(k, "Gamma0(%d)" % p, out, p)


def padic_expansion(q, p, M):
    """Embed an exact q-expansion into Q_p."""
    return QExpansion(q.weight, q.level, [embed_rational(c, p, M) for c in q.coeffs], p)


def agreement(a, b):
    """Minimum over coefficients of v_p(a_n - b_n); None if exactly equal."""
    p = a.p or b.p
    best = None
    for x, y in zip(a.coeffs, b.coeffs):
        if isinstance(x, PadicNumber):
            v = x.agreement(y)
        elif isinstance(y, PadicNumber):
            v = y.agreement(x)
        elif x == y:
            continue
        else:
            v = vp_rational(Fraction(x) - Fraction(y), p)
        best = v if best is None else min(best, v)
    return best


def normalized(q):
    """q / (constant term), so the constant term is 1."""
    c0 = Fraction(q.coeffs[0])
    if c0 == 0:
        raise BadWeight("constant term vanishes")
    return QExpansion(q.weight, q.level, [Fraction(c) / c0 for c in q.coeffs], q.p)


def weight_congruence(k1, k2, p, nmax):
    """v_p(E_k1^(p) - E_k2^(p)) over coefficients up to q^nmax.

    When k1 = 0 mod p-1 the constant term (1-p^(k-1))zeta(1-k)/2 has a pole
    at p, so both series are compared after normalising the constant term
    to 1.  Returns (valuation, normalised?).
    """
    E1 = stabilized_eisenstein(k1, nmax, p)
    E2 = stabilized_eisenstein(k2, nmax, p)
    pole = vp_rational(E1.coeffs[0], p) < 0 or vp_rational(E2.coeffs[0], p) < 0
    if pole:
        E1, E2 = normalized(E1), normalized(E2)
    return agreement(E1, E2), pole


__all__ = ["QExpansion", "sigma_p", "sigma", "divisors", "eisenstein", "stabilized_eisenstein",
           "stabilization_identity", "family_coefficient", "family_specialize",
           "padic_expansion", "agreement", "normalized", "weight_congruence"]
