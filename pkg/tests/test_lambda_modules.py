from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from iwasawa.errors import (BadParameter, FitFailure, IndeterminateInvariants, LevelTooSmall,
                            NotCoprime)
from iwasawa.lambda_modules import (LambdaModuleDesc, bareiss_det, branch_invariants,
                                    characteristic_ideal, growth_law, growth_table, p_rank,
                                    quotient_size_exponent, recompose, weierstrass_prepare)

import oracle


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_already_distinguished():
    w = weierstrass_prepare([5, 1], 5, 20, 10)
    assert (w.mu, w.lam, w.P) == (0, 1, [5, 1])
    assert w.u[0] == 1 and not any(w.u[1:])


def test_pure_p_power():
    w = weierstrass_prepare([5, 5], 5, 20, 10)
    assert (w.mu, w.lam, w.P) == (1, 0, [1])
    assert w.u[:3] == [1, 1, 0]


def test_product_round_trip():
    f = [25 * c for c in poly_mul([5, 1], [1, 1, 0, 5])]
    w = weierstrass_prepare(f, 5, 30, 12)
    assert (w.mu, w.lam, w.P) == (2, 1, [5, 1])
    mod = 5 ** (w.M + w.mu)
    want = [x % mod for x in f + [0] * w.N][:w.N]
    assert recompose(w, 5) == want


def test_indeterminate():
    with pytest.raises(IndeterminateInvariants):
        weierstrass_prepare([0, 5 ** 12], 5, 10, 8)
    with pytest.raises(BadParameter):
        weierstrass_prepare([Fraction(1, 5), 1], 5)


def test_quotient_sizes():
    assert [quotient_size_exponent([-5, 1], n, 5) for n in range(3)] == [1, 2, 3]
    e = [quotient_size_exponent([-5, 0, 1], n, 5) for n in range(2, 6)]
    assert all(b - a == 2 for a, b in zip(e, e[1:]))
    with pytest.raises(NotCoprime):
        quotient_size_exponent([0, 1], 1, 5)
    with pytest.raises(BadParameter):
        quotient_size_exponent([1, 1], 1, 5)


def test_not_coprime_cyclotomic():
    # Phi_5(1 + T) = T^4 + 5T^3 + 10T^2 + 10T + 5 divides omega_1
    with pytest.raises(NotCoprime):
        quotient_size_exponent([5, 10, 10, 5, 1], 1, 5)


@settings(max_examples=40)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.integers(0, 2),
       st.sampled_from([3, 5]))
def test_quotient_exponent_matches_sylvester(low, n, p):
    g = [p * c for c in low] + [1]
    if g[0] == 0:
        g[0] = p
    try:
        e = quotient_size_exponent(g, n, p)
    except NotCoprime:
        return
    assert e == oracle.quotient_exponent_brute(g, n, p)


def test_bareiss():
    assert bareiss_det([[2, 1], [1, 3]]) == 5
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([]) == 1


def test_growth_examples():
    p = 5
    assert growth_law(LambdaModuleDesc(p, (), ([-5, 1],))) == (0, 1, 1, 0)
    d = LambdaModuleDesc(p, (1,), ([-5, 1],))
    assert [r["e_n"] for r in growth_table(d)] == [p ** n + n + 1 for n in range(6)]
    assert growth_law(LambdaModuleDesc(p, (1,))) == (1, 0, 0, 0)


def test_p_rank():
    d = LambdaModuleDesc(5, (1, 1))
    assert p_rank(d, 1) == 10
    assert p_rank(LambdaModuleDesc(5, (1,), ([-5, 0, 1],)), 1) == 7
    with pytest.raises(LevelTooSmall):
        p_rank(LambdaModuleDesc(3, (), ([3, 3, 3, 3, 1],)), 1)


@pytest.mark.parametrize("m,g", [((1, 1), ()), ((1,), ([-5, 0, 1],)), ((), ([5, 1], [10, 5, 1])),
                                 ((2,), ([5, 0, 0, 1],))])
def test_p_rank_matches_gcd_dimension(m, g):
    d = LambdaModuleDesc(5, m, g)
    for n in (1, 2):
        assert p_rank(d, n) == oracle.p_rank_brute(5, m, g, n)


def test_description_validation():
    with pytest.raises(BadParameter):
        LambdaModuleDesc(5, (0,))
    with pytest.raises(BadParameter):
        LambdaModuleDesc(5, (), ([1, 1],))
    with pytest.raises(NotCoprime):
        LambdaModuleDesc(5, (), ([0, 1],))
    a = LambdaModuleDesc(5, (1,)) + LambdaModuleDesc(5, (), ([5, 1],))
    assert (a.mu, a.lam) == (1, 1)
    assert characteristic_ideal(a) == (1, [5, 1])


def test_fit_needs_levels():
    with pytest.raises(FitFailure):
        growth_law(LambdaModuleDesc(5, (1,)), range(2))


def test_branch_invariants(zetas):
    for p in (3, 5, 7):
        for i in range(0, p - 1, 2):
            if i == 0:
                continue
            assert branch_invariants(zetas[p], i) == (0, 0)
