"""The mod-7 reduction behind the strongest congruence family.

``f1^7 = f7 (mod 7)`` turns ``f7^4 / f1^6`` into ``f7^3 f1`` modulo 7, and
``f1`` (pentagonal exponents) has no terms at exponents 3, 4, 6 modulo 7.
Combined with the valuations of the ``G4`` vector this forces the
``7n+3``, ``7n+4`` and ``7n+6`` coefficients of the ``G4`` right side to be
divisible by one more power of 7.
"""
from __future__ import annotations

from .identities import gf_rhs_from_vector, gf_spec
from .report import FAIL, PASS, CheckResult
from .series import TruncatedSeries, eta_quotient, eta_series, mul, power
from .vectors import VectorEngine

PENTAGONAL_RESIDUES = frozenset({0, 1, 2, 5})
GAP_RESIDUES = (3, 4, 6)


def frobenius_check(precision: int = 500) -> CheckResult:
    """Every coefficient of ``f1^7 - f7`` is divisible by 7."""
    diff = power(eta_series(1, precision), 7) - eta_series(7, precision)
    bad = next((n for n, c in enumerate(diff) if c % 7), None)
    details = {"coefficients": precision}
    if bad is not None:
        details["first_mismatch"] = bad
        return CheckResult("frobenius:f1^7=f7", FAIL, details)
    return CheckResult("frobenius:f1^7=f7", PASS, details)


def pentagonal_support_check(precision: int = 2000) -> CheckResult:
    """Nonzero coefficients of ``f1`` sit only at exponents 0, 1, 2, 5 mod 7."""
    f1 = eta_series(1, precision)
    bad = [n for n, c in enumerate(f1) if c and n % 7 not in PENTAGONAL_RESIDUES]
    details = {"exponents_below": precision, "nonzero": sum(1 for c in f1 if c)}
    if bad:
        details["first_violation"] = bad[0]
        return CheckResult("support:f1", FAIL, details)
    return CheckResult("support:f1", PASS, details)


def reduction_check(precision: int = 200) -> CheckResult:
    """``f7^4 / f1^6 = f7^3 f1 (mod 7)`` coefficientwise."""
    lhs = eta_quotient(0, f7=4, f1=-6).compile(precision, 7)
    rhs = eta_quotient(0, f7=3, f1=1).compile(precision, 7)
    bad = next((n for n in range(precision) if lhs[n] != rhs[n]), None)
    details = {"coefficients": precision}
    if bad is not None:
        details["first_mismatch"] = bad
        return CheckResult("frobenius:f7^4/f1^6=f7^3*f1", FAIL, details)
    return CheckResult("frobenius:f7^4/f1^6=f7^3*f1", PASS, details)


def _first_nonzero(s: TruncatedSeries, exps=None):
    rng = range(s.precision) if exps is None else exps
    return next((n for n in rng if s[n]), None)


def verify_b2_step(k: int, beta: int, precision: int,
                   engine: VectorEngine | None = None) -> list[CheckResult]:
    """The chain of congruences from the ``G4`` right side to the ``c4`` family.

    (i) ``f1^7 = f7 mod 7``; (ii) dropping every term but ``j = 1`` from the
    ``G4`` right side changes it only modulo ``7^(k+beta+3)``; (iii)
    ``f7^4/f1^6 = f7^3 f1 mod 7``; (iv) the right side is ``y_1 f7^3 f1``
    modulo ``7^(k+beta+2)``; (v) hence its coefficients at exponents
    3, 4, 6 mod 7 vanish modulo ``7^(k+beta+2)``.

    Series are reduced modulo the relevant power of 7; ``engine`` defaults
    to a modular one so that deep levels stay cheap.
    """
    t = k + beta + 2
    engine = engine or VectorEngine(modulus=7 ** 19)
    spec = gf_spec("G4", k, beta)
    vec = spec.vector(engine, precision)
    y = [int(v) for v in vec.values]
    tag = f"b2:k={k}:beta={beta}"
    out = [frobenius_check(precision)]

    M3 = 7 ** (t + 1)
    rhs3 = gf_rhs_from_vector(spec, y, precision, M3)
    lead3 = eta_quotient(0, f7=4, f1=-6).compile(precision, M3) * y[0]
    bad = _first_nonzero(rhs3 - lead3)
    out.append(CheckResult(f"{tag}:tail", FAIL if bad is not None else PASS,
                           {"modulus": f"7^{t + 1}", "first_mismatch": bad} if bad is not None
                           else {"modulus": f"7^{t + 1}", "coefficients": precision}))

    out.append(reduction_check(precision))

    M2 = 7 ** t
    rhs2 = TruncatedSeries(rhs3.coeffs, M2)
    approx = eta_quotient(0, f7=3, f1=1).compile(precision, M2) * y[0]
    bad = _first_nonzero(rhs2 - approx)
    out.append(CheckResult(f"{tag}:reduced", FAIL if bad is not None else PASS,
                           {"modulus": f"7^{t}", "first_mismatch": bad} if bad is not None
                           else {"modulus": f"7^{t}", "coefficients": precision}))

    gaps = [n for n in range(precision) if n % 7 in GAP_RESIDUES]
    f7_3_f1 = eta_quotient(0, f7=3, f1=1).compile(precision)
    bad_support = _first_nonzero(f7_3_f1, gaps)
    bad = _first_nonzero(rhs2, gaps)
    details = {"modulus": f"7^{t}", "gap_coefficients": len(gaps)}
    if bad is not None or bad_support is not None:
        details.update(first_mismatch=bad, support_violation=bad_support)
        out.append(CheckResult(f"{tag}:gaps", FAIL, details))
    else:
        out.append(CheckResult(f"{tag}:gaps", PASS, details))
    return out
