import pytest

from pclab.mtable import (HUFF_VARIANTS, SEED_TABLE, ConsistencyError, MTable, compare_with_seed,
                          derive_m_row_from_series, factor7, format_factored, iter_columns,
                          pi_lower_bound, read_csv, verify_huff_lemma)
from pclab.valuation import valuation


@pytest.fixture(scope="module")
def series_rows():
    return {i: derive_m_row_from_series(i, 14) for i in range(1, 8)}


def test_printed_entries(mtable):
    assert mtable[1, 1] == 7 and mtable[1, 2] == 49
    assert mtable[3, 4] == 24 * 7 ** 5
    assert mtable[5, 9] == 5 * 7 ** 13
    assert mtable[4, 2] == 82 * 7
    assert mtable[7, 13] == 7 ** 20 and mtable[7, 14] == 7 ** 20


def test_seed_rows_match_series(series_rows):
    assert compare_with_seed(list(series_rows.values())) == []
    for i, d in series_rows.items():
        assert d.residual_zero is True
        assert list(d.values) == SEED_TABLE[i]


def test_derive_small_rows():
    assert derive_m_row_from_series(1, 2, 200).values == (7, 49)
    assert derive_m_row_from_series(2, 4, 200).values == (10, 9 * 49, 2 * 7 ** 4, 7 ** 5)


def test_flagged_entries_resolved(series_rows):
    # the two identical trailing entries of row 7 are both genuinely 7^20
    assert series_rows[7].values[12] == 7 ** 20 == series_rows[7].values[13]
    # m_{4,2} = 82*7: valuation 1, and the valuation bound at (4,2) is 1
    assert valuation(series_rows[4].values[1]) == 1 == pi_lower_bound(4, 2)


def test_extend_m_examples(mtable):
    assert mtable.extend_m(8, 1) == 0 and mtable.extend_m(8, 2) == 0
    assert mtable.extend_m(8, 3) == 2464 == 7 * 190 + 35 * 27 + 49 * 1 + 7 + 7 * 10 + 21 * 3
    assert mtable.extend_m(9, 3) == 255 == 7 * 27 + 35 * 1 + 10 + 7 * 3
    with pytest.raises(ValueError):
        mtable.extend_m(7, 3)


@pytest.mark.parametrize("i", range(8, 13))
def test_recurrence_equals_series(i, mtable):
    d = derive_m_row_from_series(i, 2 * i)
    assert d.residual_zero
    assert list(d.values) == mtable.row(i, 2 * i)


def test_derive_row_8_column_3(mtable):
    assert derive_m_row_from_series(8, 3, 300).values[2] == mtable[8, 3]


def test_derive_rejects_low_precision():
    with pytest.raises(ValueError):
        derive_m_row_from_series(3, 10, 50)


def test_consistency_error_on_bad_basis(monkeypatch):
    from pclab import mtable as mt
    from pclab.series import TruncatedSeries
    monkeypatch.setattr(mt, "lhs_row_series", lambda i, N: TruncatedSeries.monomial(3, N))
    with pytest.raises(ConsistencyError):
        mt.derive_m_row_from_series(1, 2)


def test_boundary_zeros_and_support(mtable):
    mtable.ensure(60, 130)
    for i in range(4, 61):
        assert mtable[i, 1] == 0
    for i in range(8, 61):
        assert mtable[i, 2] == 0
    for i in range(1, 61):
        assert all(mtable[i, j] == 0 for j in range(2 * i + 1, 131))


def test_pmij_bound_everywhere(mtable):
    mtable.ensure(60, 130)
    for i in range(1, 61):
        for j in range(1, 131):
            v = mtable[i, j]
            if v:
                assert valuation(v) >= pi_lower_bound(i, j), (i, j)


def test_pi_lower_bound_examples():
    assert pi_lower_bound(1, 2) == 2 == valuation(49)
    assert pi_lower_bound(8, 3) == 1 == valuation(2464)
    assert pi_lower_bound(4, 2) == 1
    assert pi_lower_bound(7, 13) == 19 and pi_lower_bound(7, 14) == 20


@pytest.mark.parametrize("variant", sorted(HUFF_VARIANTS))
@pytest.mark.parametrize("i", [1, 2])
def test_huff_lemma(variant, i, mtable):
    r = verify_huff_lemma(variant, i, 300, mtable)
    assert r.passed, r


def test_huff_lemma_variant_4i2_at_400(mtable):
    assert verify_huff_lemma("4i+2", 2, 400, mtable).passed


def test_huff_lemma_detects_corruption():
    rows = {i: list(v) for i, v in SEED_TABLE.items()}
    rows[5][2] += 7 ** 4
    r = verify_huff_lemma("4i+1", 1, 200, MTable(rows))
    assert not r.passed and r.first_mismatch is not None


def test_csv_roundtrip(mtable):
    text = mtable.to_csv(range(1, 8), range(1, 15))
    back = read_csv(text)
    assert back == {(i, j): mtable[i, j] for i in range(1, 8) for j in range(1, 15)}


def test_factored_format():
    assert factor7(82 * 7) == (82, 1)
    assert format_factored(7 ** 20) == "7^20"
    assert format_factored(0) == "0"
    assert format_factored(10) == "10"


def test_iter_columns_matches_exact(mtable):
    M = 7 ** 19
    mtable.ensure(80, 40)
    for j, col in iter_columns(80, 40, M, mtable):
        assert [int(c) for c in col[1:]] == [mtable[i, j] % M for i in range(1, 81)]


def test_table_accessors(mtable):
    with pytest.raises(KeyError):
        MTable().get(30, 5)
    assert MTable().get(0, 3) == 0
    assert mtable.slice(range(1, 3), range(1, 3)) == [[7, 49], [10, 441]]
