"""Generating-function identities linking partition counts to coefficient vectors.

Every identity has the shape

    sum_n p_{1,ell}(a n + b) q^n = sum_j v_j q^(j-1) f7^(4j + c7) / f1^(4j + c1)

for a coefficient vector ``v``; the ordinary partition function appears for
the two Watson-type families. Writing ``R = q f7^4 / f1^4`` the right side
is ``f7^(4+c7) / f1^(4+c1) * sum_j v_j R^(j-1)``, evaluated by Horner's rule
with the working precision shrinking by one per step (``R`` starts at ``q``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import OracleRangeError, PartitionTable, lambda_, two_color_value
from .report import FAIL, PASS, WARN, CheckResult
from .series import TruncatedSeries, eta_quotient, mul
from .vectors import CoeffVector, VectorEngine, default_engine


@dataclass(frozen=True)
class GFSpec:
    """One identity: left progression and right-hand eta-quotient shape."""

    id: str
    k: int
    beta: int | None
    ell: int | None  # None: ordinary p
    a: int
    b: int
    c7: int
    c1: int

    def vector(self, engine: VectorEngine, jmax: int) -> CoeffVector:
        k, beta = self.k, self.beta
        if self.id == "H1":
            return engine.x_vector(2 * k - 1, jmax)
        if self.id == "H2":
            return engine.x_vector(2 * k, jmax)
        if self.id == "G1":
            return engine.y_odd_vector(k, beta + 1, jmax)
        if self.id == "G3":
            return engine.y_even_vector(k, 2 * beta + 1, jmax)
        return engine.y_even_vector(k, 2 * beta + 2, jmax)

    def label(self) -> str:
        return self.id + f":k={self.k}" + ("" if self.beta is None else f":beta={self.beta}")

    def needed_nmax(self, n_coeffs: int) -> int:
        return self.a * (n_coeffs - 1) + self.b

    def coverage(self, oracle_max: int) -> int:
        """Number of left-hand coefficients an oracle up to ``oracle_max`` supplies."""
        return 0 if self.b > oracle_max else (oracle_max - self.b) // self.a + 1


def gf_spec(series_id: str, k: int, beta: int | None = None) -> GFSpec:
    if k < 1:
        raise ValueError("k must be positive")
    odd, even = 7 ** (2 * k - 1), 7 ** (2 * k)
    if series_id == "H1":
        return GFSpec("H1", k, None, None, odd, lambda_(2 * k - 1), -1, 0)
    if series_id == "H2":
        return GFSpec("H2", k, None, None, even, lambda_(2 * k), 0, 1)
    if beta is None or beta < 0:
        raise ValueError(f"{series_id} needs beta >= 0")
    if series_id == "G1":
        a = 7 ** (2 * k + beta - 1)
        num, c7, c1, ell = 16 * a + odd + 1, -1, 1, odd
    elif series_id == "G3":
        a = 7 ** (2 * k + 2 * beta - 1)
        num, c7, c1, ell = 10 * a + even + 1, -2, 0, even
    elif series_id == "G4":
        a = 7 ** (2 * k + 2 * beta)
        num, c7, c1, ell = 22 * a + even + 1, 0, 2, even
    else:
        raise ValueError(f"unknown series id {series_id!r}")
    if num % 24:
        raise ArithmeticError(f"{series_id} residue {num}/24 is not integral")
    return GFSpec(series_id, k, beta, ell, a, num // 24, c7, c1)


def gf_rhs_from_vector(spec: GFSpec, vec, precision: int,
                       modulus: int | None = None) -> TruncatedSeries:
    """Right-hand side for explicit vector entries ``vec[0] = v_1, ...``."""
    N = precision
    J = min(len(vec), N)
    ratio = eta_quotient(1, f7=4, f1=-4).compile(N, modulus) if J > 1 else None
    acc = TruncatedSeries.from_coeffs([vec[J - 1]] if J else [0], 1, modulus)
    for j in range(J - 1, 0, -1):
        # acc currently holds sum_{i >= j+1} v_i R^(i-j-1) to precision N-j
        p = N - j + 1
        term = mul(ratio.truncate(p), TruncatedSeries.from_coeffs(acc.coeffs, p, modulus))
        acc = term + TruncatedSeries.monomial(0, p, vec[j - 1], modulus)
    acc = TruncatedSeries.from_coeffs(acc.coeffs, N, modulus)
    prefactor = eta_quotient(0, f7=4 + spec.c7, f1=-(4 + spec.c1)).compile(N, modulus)
    return mul(prefactor, acc)


def gf_rhs(series_id: str, k: int, beta: int | None, precision: int,
           engine: VectorEngine | None = None, modulus: int | None = None) -> TruncatedSeries:
    """Exact (or reduced) right-hand side to ``precision`` coefficients."""
    spec = gf_spec(series_id, k, beta)
    engine = engine or default_engine()
    vec = spec.vector(engine, precision)
    return gf_rhs_from_vector(spec, list(vec.values), precision, modulus)


def gf_lhs(series_id: str, k: int, beta: int | None, precision: int,
           oracle: PartitionTable) -> TruncatedSeries:
    """``sum_{n < precision} p_{1,ell}(a n + b) q^n`` from the brute-force oracle."""
    spec = gf_spec(series_id, k, beta)
    need = spec.needed_nmax(precision)
    if need > oracle.maxN:
        raise OracleRangeError(need, oracle.maxN)
    vals = []
    for n in range(precision):
        m = spec.a * n + spec.b
        vals.append(int(oracle[m]) if spec.ell is None else two_color_value(spec.ell, m, oracle))
    return TruncatedSeries(tuple(vals), oracle.modulus)


def verify_gf_identity(series_id: str, k: int, beta: int | None, precision: int,
                       oracle: PartitionTable, engine: VectorEngine | None = None,
                       clamp: bool = False, target: int | None = None) -> CheckResult:
    """Compare both sides coefficientwise for ``n < precision``.

    With ``clamp`` the precision is lowered to what the oracle covers (a WARN
    when that falls below ``target``, default ``precision``); without it an
    insufficient oracle raises :class:`OracleRangeError`.
    """
    spec = gf_spec(series_id, k, beta)
    N = precision
    target = precision if target is None else target
    if clamp:
        N = min(N, spec.coverage(oracle.maxN))
    details = {"a": spec.a, "b": spec.b, "ell": spec.ell or 1, "coefficients": N}
    if N < 1:
        details["needed_nmax"] = spec.needed_nmax(1)
        return CheckResult(spec.label(), WARN, details)
    lhs = gf_lhs(series_id, k, beta, N, oracle)
    rhs = gf_rhs(series_id, k, beta, N, engine, oracle.modulus)
    bad = next((n for n in range(N) if lhs[n] != rhs[n]), None)
    if bad is not None:
        details.update(first_mismatch=bad, lhs=lhs[bad], rhs=rhs[bad])
        return CheckResult(spec.label(), FAIL, details)
    if N < target:
        details["note"] = f"oracle_range_limits_to_{N}_of_{target}_needs_nmax_{spec.needed_nmax(target)}"
        return CheckResult(spec.label(), WARN, details)
    return CheckResult(spec.label(), PASS, details)


# series-level chain steps ------------------------------------------------------

CHAIN_STEPS = {
    # target identity at (k, beta): (source id, source beta offset, residue)
    "G1": ("G1", -1, 4),
    "G3": ("G4", -1, 2),
    "G4": ("G3", 0, 6),
}


def verify_chain_step(series_id: str, k: int, beta: int, precision: int,
                      engine: VectorEngine | None = None) -> CheckResult:
    """Check that extracting one progression from the source right side gives the target.

    ``G1(k, beta)`` is the ``7n+4`` part of ``G1(k, beta-1)``, ``G3(k, beta)``
    the ``7n+2`` part of ``G4(k, beta-1)`` and ``G4(k, beta)`` the ``7n+6``
    part of ``G3(k, beta)``. The left sides satisfy these by arithmetic of the
    progressions, so agreement of the right sides exercises one vector step
    far beyond the range of the partition oracle.
    """
    src_id, dbeta, res = CHAIN_STEPS[series_id]
    src_beta = beta + dbeta
    tgt, src = gf_spec(series_id, k, beta), gf_spec(src_id, k, src_beta)
    if src.a * 7 != tgt.a or src.a * res + src.b != tgt.b:
        raise AssertionError(f"{series_id} is not the {res} mod 7 part of {src_id}")
    engine = engine or default_engine()
    big = gf_rhs(src_id, k, src_beta, 7 * precision, engine)
    small = gf_rhs(series_id, k, beta, precision, engine)
    got = big.coeffs[res::7][:precision]
    bad = next((n for n in range(precision) if got[n] != small[n]), None)
    label = f"chain:{tgt.label()}<-{src.label()}"
    details = {"coefficients": precision}
    if bad is not None:
        details.update(first_mismatch=bad)
        return CheckResult(label, FAIL, details)
    return CheckResult(label, PASS, details)
