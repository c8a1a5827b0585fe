import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pclab.partitions import (OracleRangeError, PartitionTable, lambda_, partition_count,
                              partitions_brute, two_color_count, two_color_dp, two_color_value)
from pclab.series import eta_quotient, eta_series, inverse
from pclab.valuation import valuation


def test_small_values():
    p = partition_count(10)
    assert p[0] == 1
    assert p[5] == 7
    assert list(p.values) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(0, 23))
def test_against_enumeration(n, small_p):
    assert small_p[n] == partitions_brute(n)


def test_chowla_p243(small_p):
    assert valuation(small_p[243]) == 2
    assert small_p[243] % 49 == 0 and small_p[243] % 343 != 0


def test_monotone_and_matches_series(small_p):
    vals = small_p.values
    assert all(vals[n] >= vals[n - 1] for n in range(1, len(vals)))
    assert tuple(vals[:1500]) == inverse(eta_series(1, 1500)).coeffs


def test_range_error(small_p):
    with pytest.raises(OracleRangeError) as exc:
        small_p[small_p.maxN + 1]
    assert exc.value.needed == small_p.maxN + 1


def test_extend_reuses_prefix():
    t = partition_count(100)
    t2 = t.extend(500)
    assert t2.maxN == 500 and t2.values[:101] == t.values
    assert t.extend(50) is t


def test_modular_table_and_reduce(small_p):
    m = partition_count(3000, 7 ** 6)
    assert [int(v) for v in m.values] == [v % 7 ** 6 for v in small_p.values]
    r = m.reduce(49)
    assert [int(v) for v in r.values] == [v % 49 for v in small_p.values]
    with pytest.raises(ValueError):
        m.reduce(5)


def test_two_color_examples():
    t = two_color_count(7, 10)
    assert t[0] == 1
    assert t[5] == 7
    assert t[7] == 16
    assert t.values[:8] == [1, 1, 2, 3, 5, 7, 11, 16]


@pytest.mark.parametrize("ell", [1, 2, 5, 7, 49])
def test_two_color_convolution_vs_dp(ell):
    assert two_color_count(ell, 80, crosscheck=False).values == two_color_dp(ell, 80)


@pytest.mark.parametrize("ell", [7, 49, 343])
def test_oracle_matches_series(ell, small_p):
    N = 1200
    series = eta_quotient(0, f1=-1, **{f"f{ell}": -1}).compile(N)
    table = two_color_count(ell, N - 1, small_p)
    assert tuple(table.values) == series.coeffs


def test_two_color_below_ell_is_p(small_p):
    t = two_color_count(343, 342, small_p)
    assert t.values == list(small_p.values[:343])


@pytest.mark.parametrize("modulus", [7 ** 4, 7 ** 12])
def test_two_color_modular(modulus, small_p):
    exact = two_color_count(49, 2000, small_p)
    mod = two_color_count(49, 2000, small_p, modulus=modulus)
    assert mod.values == [v % modulus for v in exact.values]


@settings(max_examples=40, deadline=None)
@given(ell=st.sampled_from([7, 49, 343]), n=st.integers(min_value=0, max_value=3000))
def test_two_color_value_matches_table(ell, n, small_p):
    table = two_color_count(ell, 3000, small_p, crosscheck=False)
    assert two_color_value(ell, n, small_p) == table[n]
    m = small_p.reduce(7 ** 5)
    assert two_color_value(ell, n, m) == table[n] % 7 ** 5


def test_lambda_values():
    assert lambda_(1) == 5
    assert lambda_(2) == 47
    assert lambda_(3) == 243
    for k in range(1, 12):
        lam = lambda_(k)
        assert 0 < lam < 7 ** k and (24 * lam) % 7 ** k == 1
    with pytest.raises(ValueError):
        lambda_(0)


def test_ramanujan_mod7(small_p):
    assert all(small_p[7 * n + 5] % 7 == 0 for n in range((small_p.maxN - 5) // 7 + 1))


def test_watson_small_range(exact_p):
    for k in (1, 2):
        a, lam = 7 ** (2 * k - 1), lambda_(2 * k - 1)
        assert all(exact_p[a * n + lam] % 7 ** k == 0 for n in range((exact_p.maxN - lam) // a + 1))
    for k in (1, 2):
        a, lam = 7 ** (2 * k), lambda_(2 * k)
        assert all(exact_p[a * n + lam] % 7 ** (k + 1) == 0
                   for n in range((exact_p.maxN - lam) // a + 1))


def test_partition_table_is_plain_data():
    t = PartitionTable([1, 1, 2])
    assert t.maxN == 2 and t[2] == 2
