import random
from fractions import Fraction

import pytest

from iwasawa.cyclotomic import base_ring, build_ramified, teichmuller_character
from iwasawa.errors import PrecisionError, TruncationExceeded
from iwasawa.kubota_leopoldt import build_F_a
from iwasawa.measures import Measure, dirac, mahler_coefficients, psi_window, restriction_window
from iwasawa.padic_core import teichmuller_int

P, M = 5, 10


def rand_measure(N, prec=M, seed=0, p=P):
    rng = random.Random(seed)
    return Measure(base_ring(p, prec), [[rng.randrange(p ** prec) for _ in range(N)]], N)


def test_mahler_of_square():
    assert mahler_coefficients([0, 0, 1], 4) == [0, 1, 2, 0]


def test_mult_by_x_dirac():
    d = dirac(1, P, M, 8).mult_by_x()
    assert d.agreement(dirac(1, P, M, 8))[0]
    assert d.moment(0).agreement(1) >= M


def test_mult_by_x_on_F2():
    mu = build_F_a(2, P, 30, M)
    F2 = Measure.from_coeffs([Fraction(1, 2) * Fraction(-1, 2) ** j for j in range(30)], P, M)
    assert mu.agreement(F2)[0]
    assert mu.mult_by_x().coeff(0).agreement(Fraction(-1, 4)) >= M
    assert mu.moment(1).agreement(Fraction(-1, 4)) >= M


def test_mult_by_zx_dirac():
    R = build_ramified(P, 1, M)
    z = R.zeta(5)
    for a in (1, 3, 7):
        d = dirac(a, P, M, 40, ring=R).mult_by_zx(z)
        assert d.moment(0) == z ** a


def test_sigma_phi_psi_on_diracs():
    N = 60
    for a, b in [(2, 3), (3, 4), (1, 7)]:
        assert dirac(b, P, M, N).act_sigma(a).agreement(dirac(a * b, P, M, N))[0]
    assert dirac(3, P, M, N).frobenius_phi().agreement(dirac(15, P, M, N))[0]
    assert dirac(10, P, M, N).trace_psi().agreement(dirac(2, P, M, N))[0]
    assert dirac(7, P, M, N).trace_psi().is_zero()


def test_coset_restriction_matches_epsilon_average():
    N, prec = 60, 6
    mu = rand_measure(N, prec, seed=3)
    R = build_ramified(P, 1, prec)
    xi = R.zeta(5)
    muR = mu.base_change(R)
    for b in range(5):
        total = None
        for j in range(5):
            term = muR.mult_by_zx(xi ** j).scale(xi ** ((-b * j) % 5))
            total = term if total is None else total + term
        lhs = mu.restrict_to_coset(b, 1).base_change(R).scale(5)
        ok, W, _ = lhs.agreement(total)
        assert ok and W > 0


def test_convolution():
    N = 40
    assert dirac(3, P, M, N).convolve_additive(dirac(4, P, M, N)).agreement(dirac(7, P, M, N))[0]
    mu, la = rand_measure(N, seed=1), rand_measure(N, seed=2)
    c = mu.convolve_additive(la)
    m = mu.moments(2)
    l = la.moments(2)
    assert c.moment(1).agreement(m[1] * l[0] + m[0] * l[1]) >= M


def test_twisted_moment_of_dirac():
    w = teichmuller_character(P, 1)
    for a in (2, 3, 8):
        tm = dirac(a, P, M, 30).twisted_moments(w, 6)
        for k in range(6):
            want = teichmuller_int(a, P, M) * a ** k
            assert tm[k].agreement(want) >= M


def test_twist_paths_agree():
    mu = rand_measure(60, 8, seed=5)
    chi = teichmuller_character(P, 2)
    a = mu.twist_by_character(chi)
    b = mu.twist_by_character(chi, method="gauss")
    ok, W, prec = a.agreement(b)
    assert ok and W >= 8
    ma, mb = a.moments(8), b.moments(8)
    assert all(x.agreement(y) >= prec for x, y in zip(ma, mb))


def test_minus_part_even_moments_vanish():
    for a in (2, 3, 6):
        minus = dirac(a, P, M, 50).plus_minus_project(-1)
        ms = minus.moments(8)
        assert all(ms[k].is_zero for k in range(0, 8, 2))


def test_windows():
    assert psi_window(100, 5, 10) == 12
    assert restriction_window(100, 5, 10, 1) == 60
    assert restriction_window(100, 5, 10, 0) == 100
    mu = rand_measure(20)
    with pytest.raises(TruncationExceeded):
        mu.moments(25)


def test_mult_by_zx_rejects_non_principal():
    R = base_ring(P, M)
    with pytest.raises(PrecisionError):
        rand_measure(20).mult_by_zx(R.from_int(2))


def test_polynomial_measures_skip_window():
    d = Measure.from_dirac_weights({1: 1, 2: 3}, p=P, M=M, N=5)
    assert d.moment(12).agreement(1 + 3 * 2 ** 12) >= M
