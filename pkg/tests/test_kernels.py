import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from iwasawa import _pykernels, kernels

try:
    from iwasawa import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
MOD = 5 ** 20
vec = st.lists(st.integers(0, MOD - 1), min_size=1, max_size=40)


@needs_c
@given(vec, vec)
def test_mul_agrees(a, b):
    assert _ckernels.mul_full(a, b, MOD) == _pykernels.mul_full(a, b, MOD)
    n = min(len(a), len(b))
    assert _ckernels.mul_trunc(a, b, n, MOD) == _pykernels.mul_trunc(a, b, n, MOD)


@needs_c
@given(vec, st.integers(-5, 5))
def test_shift_and_power_sums_agree(a, c):
    assert _ckernels.taylor_shift(a, c, MOD) == _pykernels.taylor_shift(a, c, MOD)
    assert _ckernels.power_sums(a, 10, MOD) == _pykernels.power_sums(a, 10, MOD)


@needs_c
@given(vec, vec)
def test_compose_and_inverse_agree(a, s):
    s = [0] + s
    n = min(len(a), len(s))
    assert _ckernels.compose_trunc(a, s, n, MOD) == _pykernels.compose_trunc(a, s, n, MOD)
    a = [1] + a
    assert _ckernels.series_inverse(a, len(a), MOD, 1) == _pykernels.series_inverse(a, len(a), MOD, 1)


@given(vec)
def test_inverse_is_inverse(a):
    a = [1] + a
    inv = kernels.series_inverse(a, len(a), MOD)
    assert kernels.mul_trunc(a, inv, len(a), MOD) == [1] + [0] * (len(a) - 1)


def test_big_moduli_fall_back():
    m = 5 ** 40
    assert kernels.mul_full([m - 1], [m - 1], m) == [1]


def test_pure_python_switch():
    env = dict(os.environ, IWASAWA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import iwasawa.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
