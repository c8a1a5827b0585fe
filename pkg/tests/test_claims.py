import pytest

from pclab.claims import (CongruenceClaim, all_claims, checkable_n, claim_value, claims_for,
                          rd_claims, verify_claims, verify_congruence, watson_claims)
from pclab.partitions import OracleRangeError, partition_count, two_color_count
from pclab.report import FAIL, PASS, WARN


@pytest.fixture(scope="module")
def mod_p():
    return partition_count(60_000, 7 ** 7)


@pytest.fixture(scope="module")
def exact_small():
    return partition_count(20_000)


def by_id(claims):
    return {c.id: c for c in claims}


def test_claims_for_k1_beta0():
    c = by_id(claims_for(1, 0))
    assert (c["c1:k=1:beta=0"].ell, *c["c1:k=1:beta=0"].triple()) == (7, 7, 5, 1)
    assert (c["c3:k=1:beta=0"].ell, *c["c3:k=1:beta=0"].triple()) == (49, 49, 47, 2)
    assert [c[f"c4:k=1:beta=0:r={r}"].b for r in (3, 4, 6)] == [194, 243, 341]
    assert all(c[f"c4:k=1:beta=0:r={r}"].triple()[::2] == (343, 3) for r in (3, 4, 6))


def test_claims_for_other_examples():
    c = by_id(claims_for(1, 1))
    assert c["c1:k=1:beta=1"].triple() == (49, 33, 1)
    assert by_id(claims_for(1, 0))["c2:k=1:beta=0"].triple() == (7, 5, 1)
    assert len(all_claims(2, 1)) == 24


def test_integrality_assertion():
    with pytest.raises(ArithmeticError):
        CongruenceClaim.from_numerator(7, 7, 13, 24, 1, "bogus")


def test_residue_must_be_reduced():
    with pytest.raises(ValueError):
        CongruenceClaim(7, 7, 9, 1, "bogus")


def test_rd_specialisation():
    for beta in range(3):
        c = by_id(claims_for(1, beta))
        rd3, rd4 = rd_claims(beta)
        assert c[f"c2:k=1:beta={beta}"].triple() == rd3.triple()
        assert c[f"c3:k=1:beta={beta}"].triple() == rd4.triple()


def test_watson_claims():
    w = watson_claims(2)
    assert [c.triple() for c in w] == [(7, 5, 1), (49, 47, 2), (343, 243, 2), (2401, 2301, 3)]


def test_c1_k1_beta1_n500(mod_p, exact_small):
    c = by_id(claims_for(1, 1))["c1:k=1:beta=1"]
    r = verify_congruence(c, mod_p, nmax=500, exact=exact_small)
    assert r.status == PASS and r.details["checked"] == 501


def test_c2_k1_beta0_n2000(mod_p):
    c = by_id(claims_for(1, 0))["c2:k=1:beta=0"]
    assert verify_congruence(c, mod_p, nmax=2000).status == PASS


def test_trivial_claim_passes(mod_p):
    c = CongruenceClaim(7, 3, 1, 0, "trivial")
    assert verify_congruence(c, mod_p, nmax=100).status == PASS


def test_false_claim_gives_minimal_witness(mod_p, exact_small):
    # p(7n+5) is divisible by 7 but p(5) = 7 is not divisible by 49
    c = CongruenceClaim(None, 7, 5, 2, "too-strong")
    r = verify_congruence(c, mod_p, nmax=50)
    assert r.status == FAIL and r.details["witness"] == "n=0" and r.details["val"] == 1
    c2 = CongruenceClaim(7, 7, 3, 1, "wrong-residue")
    r2 = verify_congruence(c2, mod_p, nmax=50, exact=exact_small)
    first = next(n for n in range(51) if two_color_count(7, 400)[7 * n + 3] % 7)
    assert r2.status == FAIL and r2.details["witness"] == f"n={first}"


def test_exact_oracle_mode(exact_small):
    c = by_id(claims_for(1, 0))["c3:k=1:beta=0"]
    r = verify_congruence(c, exact_small)
    assert r.status == PASS and r.details["min_val"] == 2


def test_range_errors(mod_p):
    c = by_id(claims_for(1, 0))["c1:k=1:beta=0"]
    with pytest.raises(OracleRangeError):
        verify_congruence(c, mod_p, nmax=10 ** 6)
    with pytest.raises(OracleRangeError):
        claim_value(c, 10 ** 6, mod_p)


def test_modulus_too_small_for_claim():
    c = by_id(claims_for(1, 1))["c4:k=1:beta=1:r=3"]
    with pytest.raises(ValueError):
        verify_congruence(c, partition_count(100, 49))


def test_vacuous_claim_warns(mod_p):
    c = by_id(claims_for(2, 1))["c4:k=2:beta=1:r=3"]
    assert checkable_n(c, mod_p) == 0
    assert verify_congruence(c, mod_p).status == WARN


def test_parallel_matches_serial(mod_p):
    claims = claims_for(1, 0) + watson_claims(1)
    par = verify_claims(claims, mod_p, workers=4)
    ser = verify_claims(claims, mod_p, workers=1)
    assert [r.line() for r in par] == [r.line() for r in ser]
    assert all(r.status == PASS for r in par)


def test_report_line_grammar(mod_p):
    r = verify_congruence(CongruenceClaim(None, 7, 5, 2, "too-strong"), mod_p, nmax=3)
    line = r.line()
    assert line.startswith("CHECK too-strong FAIL ")
    assert "witness=n=0" in line and "val=1" in line
