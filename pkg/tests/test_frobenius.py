from pclab.frobenius import (frobenius_check, pentagonal_support_check, reduction_check,
                             verify_b2_step)
from pclab.report import PASS
from pclab.series import eta_quotient


def test_frobenius_500():
    assert frobenius_check(500).status == PASS


def test_support_2000():
    assert pentagonal_support_check(2000).status == PASS


def test_reduction_200():
    assert reduction_check(200).status == PASS


def test_gap_coefficients_of_f7_cubed_f1():
    s = eta_quotient(0, f7=3, f1=1).compile(400)
    assert s[3] == 0
    assert all(s[n] == 0 for n in range(400) if n % 7 in (3, 4, 6))
    assert any(s[n] for n in range(400) if n % 7 == 5)


def test_b2_steps():
    for k, beta in [(1, 0), (1, 1), (2, 0), (2, 1)]:
        results = verify_b2_step(k, beta, 150)
        assert [r.status for r in results] == [PASS] * 5, [r.line() for r in results]
