"""Operator laws on measures, each run on at least 200 random inputs."""
from hypothesis import given, settings, strategies as st

from iwasawa.cyclotomic import base_ring, teichmuller_character
from iwasawa.measures import Measure

CASES = settings(max_examples=200, deadline=None)
PRIMES = st.sampled_from([3, 5, 7])


@st.composite
def measures(draw, N=120, prec=6, primes=PRIMES):
    p = draw(primes)
    mod = p ** prec
    coeffs = draw(st.lists(st.integers(0, mod - 1), min_size=N, max_size=N))
    return Measure(base_ring(p, prec), [coeffs], N)


@st.composite
def psi_fixed(draw, N=80, prec=6):
    """c + lam F_a: constants and the smoothing series F_a are psi-fixed."""
    from iwasawa.kubota_leopoldt import build_F_a, default_smoothing
    p = draw(PRIMES)
    mod = p ** prec
    c = draw(st.integers(0, mod - 1))
    lam = draw(st.one_of(st.just(0), st.sampled_from([mod, 2 * mod]), st.integers(0, mod - 1)))
    a = draw(st.sampled_from([default_smoothing(p), default_smoothing(p) + p]))
    Fa = build_F_a(a, p, N, prec)
    const = Measure(base_ring(p, prec), [[c]], N)
    return p, lam % mod, const + Fa.scale(lam)


@CASES
@given(measures())
def test_psi_phi_is_identity(mu):
    ok, W, _ = mu.frobenius_phi().trace_psi().agreement(mu)
    assert ok and W > 0


@CASES
@given(measures())
def test_res_is_one_minus_phi_psi(mu):
    r = mu.restrict_to_units()
    ok, W, _ = r.agreement(mu - mu.trace_psi().frobenius_phi())
    assert ok and W > 0
    z = r.trace_psi()
    assert z.N > 0 and z.is_zero()


@CASES
@given(measures(), st.sampled_from([2, 3, 4, 6, -1, -2]), st.sampled_from([2, 3, -1, 7]))
def test_sigma_functoriality(mu, a, b):
    if a % mu.p == 0 or b % mu.p == 0:
        return
    lhs = mu.act_sigma(a).act_sigma(b)
    ok, W, _ = lhs.agreement(mu.act_sigma(a * b))
    assert ok and W == mu.N
    ms, m0 = mu.act_sigma(a).moments(5), mu.moments(5)
    assert all(x.agreement(y * a ** k) >= mu.prec for k, (x, y) in enumerate(zip(ms, m0)))


@CASES
@given(measures(N=40, prec=5, primes=st.sampled_from([3, 5])), st.integers(1, 3))
def test_twist_paths_agree(mu, i):
    p = mu.p
    chi = teichmuller_character(p, i % (p - 1) or 1)
    a = mu.twist_by_character(chi)
    b = mu.twist_by_character(chi, method="gauss")
    ok, W, _ = a.agreement(b)
    assert ok and W > 0


@CASES
@given(measures(N=60), st.sampled_from([1, -1]))
def test_plus_minus_idempotent(mu, sign):
    e = mu.plus_minus_project(sign)
    assert e.plus_minus_project(sign).agreement(e)[0]
    assert e.plus_minus_project(-sign).is_zero()
    total = mu.plus_minus_project(1) + mu.plus_minus_project(-1)
    assert total.agreement(mu)[0]


@CASES
@given(psi_fixed())
def test_kernel_of_one_minus_phi_on_psi_fixed(pm):
    p, lam, f = pm
    ok, W, _ = f.trace_psi().agreement(f)
    assert ok and W > 0
    d = f - f.frobenius_phi()
    # Res f = (1 - phi psi) f = (1 - phi) f on psi-fixed input
    ok, W, _ = f.restrict_to_units().agreement(d)
    assert ok and W > 1
    # (1 - phi) f vanishes exactly when f is the constant c
    assert d.with_window(W).is_zero() == (lam == 0)


@CASES
@given(st.integers(0, 5 ** 6 - 1), st.sampled_from([3, 5, 7]))
def test_constants_are_phi_fixed(c, p):
    f = Measure.from_dirac_weights({0: c}, N=30, ring=base_ring(p, 6))
    assert (f - f.frobenius_phi()).is_zero()
    assert f.trace_psi().agreement(f)[0]
