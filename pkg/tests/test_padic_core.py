from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from iwasawa.errors import OutsideConvergenceDisk, PrecisionError
from iwasawa.padic_core import (PadicNumber, angle, binomial, embed_rational, padic_exp,
                                padic_log, padic_power, teichmuller, teichmuller_int, vp,
                                vp_rational)

from oracle import residue


def test_embed_one_third():
    x = PadicNumber.from_rational(Fraction(1, 3), 5, 2)
    assert (x.v, x.u) == (0, 17)


def test_embed_pole_adjacent():
    x = PadicNumber.from_rational(Fraction(-31, 30), 5, 10)
    assert x.v == -1
    assert x.u == PadicNumber.from_rational(Fraction(-31, 6), 5, 10).u


def test_teichmuller_and_angle():
    two = PadicNumber.from_rational(2, 5, 2)
    assert teichmuller(two).u == 7
    assert angle(two).u == 11
    assert angle(PadicNumber.from_rational(6, 5, 4)).u == 6
    assert teichmuller_int(2, 5, 2) == 7


def test_log_of_six():
    L = padic_log(PadicNumber.from_rational(6, 5, 4))
    assert L.v == 1
    assert L.agreement(Fraction(5) - Fraction(25, 2) + Fraction(125, 3)) >= 4


def test_square_root_by_power():
    x = padic_power(PadicNumber.from_rational(6, 5, 12), PadicNumber.from_rational(Fraction(1, 2), 5, 12))
    assert (x * x).agreement(6) >= 10


def test_log_needs_principal_unit():
    with pytest.raises(Exception):
        padic_log(PadicNumber.from_rational(2, 5, 6))


def test_exp_disk():
    with pytest.raises(OutsideConvergenceDisk):
        padic_exp(PadicNumber.from_rational(1, 5, 6))


def test_log_exp_roundtrip():
    x = PadicNumber.from_rational(5 * 7, 5, 15)
    assert padic_log(padic_exp(x)).agreement(x) >= 12


def test_zero_and_precision():
    z = PadicNumber.zero(5, 7)
    assert z.is_zero and z.abs_prec == 7
    x = PadicNumber.from_rational(3, 5, 6)
    assert (x - x).is_zero


def test_binomial_integral():
    assert binomial(PadicNumber.from_rational(Fraction(1, 2), 5, 10), 3).agreement(Fraction(1, 16)) >= 8


@given(st.fractions(max_denominator=10 ** 6).filter(lambda q: q != 0),
       st.sampled_from([3, 5, 7]))
def test_embed_matches_oracle(q, p):
    x = embed_rational(q, p, 12)
    e, r = residue(q, p, 12)
    assert x.v == e and x.u == r


@given(st.integers(1, 10 ** 9), st.integers(1, 10 ** 9), st.sampled_from([3, 5, 7]))
def test_field_laws(a, b, p):
    x = PadicNumber.from_rational(Fraction(a, b), p, 15)
    y = PadicNumber.from_rational(Fraction(b, a + 1), p, 15)
    assert ((x * y) / y).agreement(x) >= x.v + 15
    assert ((x + y) - y).agreement(x) >= min(x.abs_prec, y.abs_prec)
    assert vp_rational(Fraction(a, b), p) == vp(a, p) - vp(b, p)


@given(st.integers(1, 10 ** 6).filter(lambda n: n % 5))
def test_teichmuller_is_root_of_unity(a):
    w = teichmuller_int(a, 5, 10)
    assert pow(w, 4, 5 ** 10) == 1 and w % 5 == a % 5
