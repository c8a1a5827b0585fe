import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pclab import kernels
from pclab.kernels import backends

BACKENDS = backends()
ints = st.lists(st.integers(min_value=-10**30, max_value=10**30), min_size=1, max_size=40)


def naive_convolve(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("name", sorted(BACKENDS))
@settings(max_examples=50, deadline=None)
@given(a=ints, b=ints)
def test_convolve_matches_naive(name, a, b):
    n = min(len(a), len(b))
    assert list(BACKENDS[name].convolve(a, b, n)) == naive_convolve(a, b, n)


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("modulus", [7, 7 ** 5, 2**31 - 1, 7 ** 19])
@settings(max_examples=25, deadline=None)
@given(a=ints, b=ints)
def test_convolve_mod_matches_exact(name, modulus, a, b):
    n = min(len(a), len(b))
    got = [int(v) for v in BACKENDS[name].convolve_mod(a, b, n, modulus)]
    assert got == [v % modulus for v in naive_convolve(a, b, n)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
@settings(max_examples=50, deadline=None)
@given(lead=st.sampled_from([1, -1]), rest=st.lists(st.integers(-99, 99), max_size=30))
def test_inverse_roundtrip(name, lead, rest):
    a = [lead] + rest
    n = len(a)
    inv = BACKENDS[name].inverse(a, n)
    assert naive_convolve(a, list(inv), n) == [1] + [0] * (n - 1)
    inv_m = [int(v) for v in BACKENDS[name].inverse_mod(a, n, 343)]
    assert inv_m == [v % 343 for v in inv]


def test_inverse_rejects_non_unit():
    for mod in BACKENDS.values():
        with pytest.raises(ValueError):
            mod.inverse([3, 1], 2)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_partitions_backend(name):
    p = BACKENDS[name].partitions(300)
    assert p[:11] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert p[100] == 190569292
    assert p[300] == 9253082936723602
    # prefix reuse continues the same sequence
    assert BACKENDS[name].partitions(400, p) == BACKENDS[name].partitions(400)
    m = BACKENDS[name].partitions_mod(300, 7 ** 7)
    assert [int(v) for v in m] == [v % 7 ** 7 for v in p]


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("ell", [1, 2, 7, 49])
@pytest.mark.parametrize("modulus", [7, 7 ** 7, 7 ** 19])
def test_two_color_mod_matches_convolution(name, ell, modulus):
    nmax = 400
    p = BACKENDS["python"].partitions(nmax)
    reduced = np.array([v % modulus for v in p], dtype=np.int64)
    want = [sum(p[t] * p[n - ell * t] for t in range(n // ell + 1)) % modulus for n in range(nmax + 1)]
    assert [int(v) for v in BACKENDS[name].two_color_mod(reduced, ell, nmax, modulus)] == want


def test_backends_agree_on_larger_input():
    if "compiled" not in BACKENDS:
        pytest.skip("compiled kernels not built")
    c, py = BACKENDS["compiled"], BACKENDS["python"]
    assert c.partitions(3000) == py.partitions(3000)
    assert np.array_equal(np.asarray(c.partitions_mod(3000, 2**61 - 1), dtype=object),
                          np.asarray(py.partitions_mod(3000, 2**61 - 1), dtype=object))


def test_forced_pure_python_backend():
    env = dict(os.environ, PCLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import pclab.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_active_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")
