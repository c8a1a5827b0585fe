"""Brute-force partition counts used as ground truth.

Nothing here touches :mod:`pclab.series`: ``p(n)`` comes from Euler's
pentagonal recurrence and ``p_{1,l}(n)`` from the convolution
``sum_t p(t) p(n - l t)``, with a direct multiset count as a second opinion.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels


class OracleRangeError(ValueError):
    """A value was requested beyond the computed table."""

    def __init__(self, needed: int, available: int):
        super().__init__(f"oracle covers n <= {available}; need nmax >= {needed}")
        self.needed = needed
        self.available = available


@dataclass
class PartitionTable:
    """``values[n] = p(n)`` for ``0 <= n <= maxN``, exact or modulo ``modulus``."""

    values: object  # list[int] when exact, int64 ndarray when modular
    modulus: int | None = None

    @property
    def maxN(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        if n > self.maxN:
            raise OracleRangeError(n, self.maxN)
        return self.values[n]

    def extend(self, nmax: int) -> "PartitionTable":
        """Table covering ``nmax``, reusing this one as a prefix."""
        if nmax <= self.maxN:
            return self
        if self.modulus is None:
            return PartitionTable(kernels.partitions(nmax, prefix=self.values))
        return partition_count(nmax, self.modulus)

    def reduce(self, modulus: int) -> "PartitionTable":
        if self.modulus is not None and self.modulus % modulus:
            raise ValueError(f"cannot reduce modulo {self.modulus} to modulo {modulus}")
        return PartitionTable(np.array([int(v) % modulus for v in self.values], dtype=np.int64),
                              modulus)


def partition_count(nmax: int, modulus: int | None = None) -> PartitionTable:
    """``p(0..nmax)`` by Euler's pentagonal recurrence."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    if modulus is None:
        return PartitionTable(kernels.partitions(nmax))
    return PartitionTable(kernels.partitions_mod(nmax, modulus), modulus)


def two_color_value(ell: int, n: int, p: PartitionTable):
    """``p_{1,ell}(n) = sum_{t >= 0, ell t <= n} p(t) p(n - ell t)``."""
    if n > p.maxN:
        raise OracleRangeError(n, p.maxN)
    if n < 0:
        return 0
    if p.modulus is None:
        vals = p.values
        return sum(vals[t] * vals[n - ell * t] for t in range(n // ell + 1))
    m = p.modulus
    vals = p.values
    T = n // ell
    if m >= 1 << 31:
        return sum(int(vals[t]) * int(vals[n - ell * t]) for t in range(T + 1)) % m
    big = vals[n - ell * np.arange(T + 1)]
    return int((vals[: T + 1] * big % m).sum() % m)


@dataclass
class TwoColorTable:
    ell: int
    values: list
    modulus: int | None = None

    @property
    def maxN(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]


def two_color_count(ell: int, nmax: int, p: PartitionTable | None = None,
                    modulus: int | None = None, crosscheck: bool = True) -> TwoColorTable:
    """``p_{1,ell}(0..nmax)`` from the partition table.

    Exact tables are convolved directly; word-sized moduli use the sparse
    pentagonal recurrence in steps of ``ell``.

    With ``crosscheck`` the first ``min(nmax, 60)`` values are compared
    against :func:`two_color_dp`.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    if p is None:
        p = partition_count(nmax, modulus)
    elif p.maxN < nmax:
        raise OracleRangeError(nmax, p.maxN)
    if modulus is not None and p.modulus != modulus:
        p = p.reduce(modulus)
    if p.modulus is None:
        pv = p.values
        out = list(pv[: nmax + 1])
        for t in range(1, nmax // ell + 1):
            pt = pv[t]
            for n in range(ell * t, nmax + 1):
                out[n] += pt * pv[n - ell * t]
    elif p.modulus < 1 << 62:
        # sparse recurrence from f_ell * sum p_{1,ell}(n) q^n = sum p(n) q^n
        out = [int(v) for v in kernels.two_color_mod(p.values, ell, nmax, p.modulus)]
    else:
        m = p.modulus
        pv = [int(v) for v in p.values[: nmax + 1]]
        out = list(pv)
        for t in range(1, nmax // ell + 1):
            pt = pv[t]
            for n in range(ell * t, nmax + 1):
                out[n] = (out[n] + pt * pv[n - ell * t]) % m
    if crosscheck:
        small = min(nmax, 60)
        ref = two_color_dp(ell, small)
        got = out[: small + 1]
        if p.modulus is not None:
            ref = [v % p.modulus for v in ref]
        if got != ref:
            bad = next(n for n in range(small + 1) if got[n] != ref[n])
            raise AssertionError(f"p_1,{ell}({bad}): convolution {got[bad]} != direct count {ref[bad]}")
    return TwoColorTable(ell, out, p.modulus)


def two_color_dp(ell: int, nmax: int) -> list[int]:
    """Direct count of multisets of two-colored parts.

    Part types are ``(s, red)`` for every ``s >= 1`` and ``(s, blue)`` for
    every multiple ``s`` of ``ell``; counted by the unbounded coin-change
    recurrence, with no reference to ``p(n)``.
    """
    ways = [1] + [0] * nmax
    parts = list(range(1, nmax + 1)) + list(range(ell, nmax + 1, ell))
    for s in parts:
        for n in range(s, nmax + 1):
            ways[n] += ways[n - s]
    return ways


def partitions_brute(n: int) -> int:
    """Count partitions of ``n`` by explicit enumeration (tiny ``n`` only)."""
    def count(rest, largest):
        if rest == 0:
            return 1
        return sum(count(rest - part, part) for part in range(min(rest, largest), 0, -1))
    return count(n, n)


def lambda_(k: int) -> int:
    """Inverse of 24 modulo ``7^k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return pow(24, -1, 7 ** k)
