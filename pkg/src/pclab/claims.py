"""Congruence claims ``p_{1,ell}(a n + b) = 0 (mod 7^t)`` and their verification."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .partitions import (OracleRangeError, PartitionTable, TwoColorTable, lambda_, two_color_count,
                         two_color_value)
from .report import FAIL, PASS, WARN, CheckResult
from .valuation import INF, capped_valuation, valuation

C4_RESIDUES = (3, 4, 6)


@dataclass(frozen=True)
class CongruenceClaim:
    """One arithmetic progression of a congruence family.

    ``ell is None`` stands for the ordinary partition function ``p``.
    ``family``/``k``/``beta``/``r`` record where the claim came from.
    """

    ell: int | None
    a: int
    b: int
    t: int
    family: str
    k: int | None = None
    beta: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.a < 1 or not 0 <= self.b < self.a:
            raise ValueError(f"residue {self.b} is not reduced modulo {self.a}")
        if self.t < 0:
            raise ValueError("t must be nonnegative")

    @classmethod
    def from_numerator(cls, ell, a: int, numerator: int, denominator: int, t: int,
                       family: str, **prov) -> "CongruenceClaim":
        """Build a claim whose residue is printed as ``numerator / denominator``."""
        if numerator % denominator:
            raise ArithmeticError(
                f"{family}{prov}: {numerator}/{denominator} is not an integer")
        return cls(ell, a, numerator // denominator, t, family, **prov)

    @property
    def id(self) -> str:
        parts = [self.family]
        for name in ("k", "beta", "r"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={v}")
        return ":".join(parts)

    @property
    def modulus(self) -> int:
        return 7 ** self.t

    def argument(self, n: int) -> int:
        return self.a * n + self.b

    def describe(self) -> str:
        fn = "p" if self.ell is None else f"p_1,{self.ell}"
        return f"{fn}({self.a}n+{self.b}) = 0 mod 7^{self.t}"

    def triple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.t


def claims_for(k: int, beta: int) -> list[CongruenceClaim]:
    """The four families at ``(k, beta)``: c1, c2, c3 and the three c4 branches."""
    if k < 1 or beta < 0:
        raise ValueError("need k >= 1 and beta >= 0")
    odd, even = 7 ** (2 * k - 1), 7 ** (2 * k)
    out = []
    a = 7 ** (2 * k + beta - 1)
    out.append(CongruenceClaim.from_numerator(
        odd, a, 16 * a + odd + 1, 24, k, "c1", k=k, beta=beta))
    a = 7 ** (2 * k + 2 * beta - 1)
    out.append(CongruenceClaim.from_numerator(
        even, a, 10 * a + even + 1, 24, k + beta, "c2", k=k, beta=beta))
    a = 7 ** (2 * k + 2 * beta)
    out.append(CongruenceClaim.from_numerator(
        even, a, 22 * a + even + 1, 24, k + beta + 1, "c3", k=k, beta=beta))
    for r in C4_RESIDUES:
        out.append(CongruenceClaim.from_numerator(
            even, 7 * a, (24 * r + 22) * a + even + 1, 24, k + beta + 2, "c4",
            k=k, beta=beta, r=r))
    return out


def all_claims(kmax: int, beta_max: int) -> list[CongruenceClaim]:
    return [c for k in range(1, kmax + 1) for beta in range(beta_max + 1)
            for c in claims_for(k, beta)]


def watson_claims(kmax: int) -> list[CongruenceClaim]:
    """``p(7^(2k-1) n + lambda_{2k-1})`` mod ``7^k`` and ``p(7^(2k) n + lambda_{2k})`` mod ``7^(k+1)``."""
    out = []
    for k in range(1, kmax + 1):
        out.append(CongruenceClaim(None, 7 ** (2 * k - 1), lambda_(2 * k - 1), k, "watson-odd", k=k))
        out.append(CongruenceClaim(None, 7 ** (2 * k), lambda_(2 * k), k + 1, "watson-even", k=k))
    return out


def rd_claims(beta: int) -> list[CongruenceClaim]:
    """The two earlier ``p_{1,49}`` families at ``beta``, residues over 12."""
    a3, a4 = 7 ** (2 * beta + 1), 7 ** (2 * beta + 2)
    return [
        CongruenceClaim.from_numerator(49, a3, 5 * a3 + 25, 12, beta + 1, "rd3", beta=beta),
        CongruenceClaim.from_numerator(49, a4, 11 * a4 + 25, 12, beta + 2, "rd4", beta=beta),
    ]


# verification -----------------------------------------------------------------

def claim_value(claim: CongruenceClaim, n: int, table: PartitionTable):
    """``p_{1,ell}(a n + b)`` (or ``p``) from ``table``, exact or reduced."""
    m = claim.argument(n)
    if m > table.maxN:
        raise OracleRangeError(m, table.maxN)
    if claim.ell is None:
        return int(table[m])
    return two_color_value(claim.ell, m, table)


def _seven_power(modulus: int | None) -> int | None:
    if modulus is None:
        return None
    w, m = 0, modulus
    while m % 7 == 0:
        m //= 7
        w += 1
    if m != 1:
        raise ValueError(f"oracle modulus {modulus} is not a power of 7")
    return w


def checkable_n(claim: CongruenceClaim, table: PartitionTable) -> int:
    """Number of ``n`` with ``a n + b`` inside the oracle."""
    if claim.b > table.maxN:
        return 0
    return (table.maxN - claim.b) // claim.a + 1


def verify_congruence(claim: CongruenceClaim, table: PartitionTable,
                      nmax: int | None = None, exact: PartitionTable | None = None,
                      spot_fraction: float = 0.05, seed: int = 0,
                      twocolor: TwoColorTable | None = None) -> CheckResult:
    """Check ``7^t | p_{1,ell}(a n + b)`` for ``0 <= n <= nmax``.

    ``nmax=None`` means every ``n`` the oracle reaches. ``table`` may be
    modular (a power of 7 above ``7^t``) or exact. With ``exact`` given, a
    random ``spot_fraction`` of the indices is recomputed exactly and must
    agree with the modular residue. The observed minimal valuation is
    reported as data; it is capped at the oracle's 7-power. ``twocolor``
    is an optional precomputed ``p_{1,ell}`` table derived from ``table``.
    """
    w = _seven_power(table.modulus)
    if w is not None and w < claim.t:
        raise ValueError(f"oracle modulo 7^{w} cannot decide divisibility by 7^{claim.t}")
    count = checkable_n(claim, table)
    if nmax is not None:
        if nmax + 1 > count:
            raise OracleRangeError(claim.argument(nmax), table.maxN)
        count = nmax + 1
    details = {"claim": claim.describe(), "checked": count}
    if count == 0:
        details["note"] = f"no_argument_within_{table.maxN}"
        return CheckResult(claim.id, WARN, details)

    witness = None
    min_val = INF
    if twocolor is not None and (twocolor.ell != claim.ell or twocolor.modulus != table.modulus):
        raise ValueError("two-color table does not match the claim")
    for n in range(count):
        v = twocolor.values[claim.argument(n)] if twocolor is not None else claim_value(claim, n, table)
        val = valuation(v) if w is None else capped_valuation(v, w)
        if val < min_val:
            min_val = val
        if val < claim.t and witness is None:
            witness = (n, val)
    details["min_val"] = min_val

    spots = 0
    if exact is not None and spot_fraction > 0 and w is not None:
        rng = random.Random(f"{seed}:{claim.id}")
        pool = [n for n in range(count) if claim.argument(n) <= exact.maxN]
        picks = rng.sample(pool, max(1, int(len(pool) * spot_fraction))) if pool else []
        for n in sorted(picks):
            ev = claim_value(claim, n, exact)
            mv = (twocolor.values[claim.argument(n)] if twocolor is not None
                  else claim_value(claim, n, table))
            if ev % table.modulus != mv:
                raise AssertionError(f"{claim.id}: modular oracle disagrees with exact at n={n}")
            if ev % claim.modulus and witness is None:
                witness = (n, valuation(ev))
            spots += 1
        details["exact_spots"] = spots

    if witness is not None:
        details["witness"] = f"n={witness[0]}"
        details["val"] = witness[1]
        return CheckResult(claim.id, FAIL, details)
    return CheckResult(claim.id, PASS, details)


def verify_claims(claims, table: PartitionTable, exact: PartitionTable | None = None,
                  spot_fraction: float = 0.05, workers: int = 4, seed: int = 0) -> list[CheckResult]:
    """Verify independent claims in parallel; results keep the input order.

    For a word-sized modular oracle each ``p_{1,ell}`` table is built once
    and shared, instead of summing a convolution per argument.
    """
    shared = {}
    if table.modulus is not None and table.modulus < 1 << 62:
        for ell in sorted({c.ell for c in claims if c.ell is not None and c.b <= table.maxN}):
            shared[ell] = two_color_count(ell, table.maxN, table)

    def one(c):
        return verify_congruence(c, table, exact=exact, spot_fraction=spot_fraction, seed=seed,
                                 twocolor=shared.get(c.ell))
    if workers <= 1:
        return [one(c) for c in claims]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, claims))
