"""Exact truncated power series in q with integer coefficients.

A :class:`TruncatedSeries` of precision ``N`` stores the coefficients of
``q^0 .. q^(N-1)``; everything at ``q^N`` and beyond is unknown. Values are
immutable; every operation returns a new series.

Eta-products ``f_r = prod_{m>=1} (1 - q^(r m))`` are expanded with the
pentagonal number theorem, and quotients ``q^e prod f_r^z`` are assembled by
:func:`compile_quotient` (negative exponents: invert once, then raise).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels


class PrecisionMismatchWarning(UserWarning):
    """Raised (as a warning) when operands of different precision are combined."""


class NonUnitError(ValueError):
    """Inversion of a series whose constant term is not +1 or -1."""


def _coerce_precision(a: "TruncatedSeries", b: "TruncatedSeries", op: str) -> int:
    if a.precision != b.precision:
        if __debug__:
            warnings.warn(
                f"{op}: precision {a.precision} vs {b.precision}, truncating to the minimum",
                PrecisionMismatchWarning,
                stacklevel=3,
            )
        return min(a.precision, b.precision)
    return a.precision


def _common_modulus(a: "TruncatedSeries", b: "TruncatedSeries") -> int | None:
    if a.modulus == b.modulus:
        return a.modulus
    if a.modulus is None:
        return b.modulus
    if b.modulus is None:
        return a.modulus
    raise ValueError(f"incompatible moduli {a.modulus} and {b.modulus}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of ``q^0 .. q^(precision-1)``.

    ``modulus`` is ``None`` for exact arithmetic; otherwise coefficients are
    kept reduced into ``[0, modulus)``.
    """

    coeffs: tuple
    modulus: int | None = None

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("precision must be positive")
        if self.modulus is not None:
            if self.modulus < 2:
                raise ValueError("modulus must be at least 2")
            object.__setattr__(self, "coeffs", tuple(c % self.modulus for c in self.coeffs))
        else:
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    # construction -----------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], precision: int | None = None,
                    modulus: int | None = None) -> "TruncatedSeries":
        c = list(coeffs)
        if precision is not None:
            c = (c + [0] * precision)[:precision]
        return cls(tuple(c), modulus)

    @classmethod
    def zero(cls, precision: int, modulus: int | None = None) -> "TruncatedSeries":
        return cls((0,) * precision, modulus)

    @classmethod
    def one(cls, precision: int, modulus: int | None = None) -> "TruncatedSeries":
        return cls.monomial(0, precision, modulus=modulus)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coeff: int = 1,
                 modulus: int | None = None) -> "TruncatedSeries":
        c = [0] * precision
        if exponent < precision:
            c[exponent] = coeff
        return cls(tuple(c), modulus)

    # basic protocol -------------------------------------------------------
    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self.format(8)}, precision={self.precision}" + (
            f", modulus={self.modulus})" if self.modulus else ")")

    def format(self, max_terms: int | None = None) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if max_terms is not None and len(terms) == max_terms:
                terms.append("...")
                break
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.precision})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient (``None`` for zero)."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise ValueError(f"cannot raise precision {self.precision} to {precision}")
        return TruncatedSeries(self.coeffs[:precision], self.modulus)

    def reduce(self, modulus: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, modulus)

    # arithmetic -----------------------------------------------------------
    def _wrap(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.monomial(0, self.precision, other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        n = _coerce_precision(self, other, "add")
        return TruncatedSeries(tuple(x + y for x, y in zip(self.coeffs[:n], other.coeffs[:n])),
                               _common_modulus(self, other))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.modulus)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs), self.modulus)
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        return power(self, e)

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by ``q^e`` keeping the precision."""
        if e < 0:
            raise ValueError("negative shift would need a Laurent series")
        n = self.precision
        return TruncatedSeries(((0,) * e + self.coeffs)[:n], self.modulus)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product.

    Schoolbook convolution (sparse in the right operand); at the precisions
    used here this beats anything asymptotically faster. The hook for a
    different convolution is :mod:`pclab.kernels`.
    """
    n = _coerce_precision(a, b, "mul")
    m = _common_modulus(a, b)
    # iterate over the sparser operand on the inside
    x, y = a.coeffs[:n], b.coeffs[:n]
    if sum(1 for c in x if c) < sum(1 for c in y if c):
        x, y = y, x
    if m is None:
        return TruncatedSeries(tuple(kernels.convolve(x, y, n)))
    return TruncatedSeries(tuple(kernels.convolve_mod(x, y, n, m)), m)


def inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    c0 = a.coeffs[0]
    if a.modulus is None:
        if c0 not in (1, -1):
            raise NonUnitError(f"constant term {c0} is not a unit")
        return TruncatedSeries(tuple(kernels.inverse(a.coeffs, a.precision)))
    if c0 % a.modulus not in (1, a.modulus - 1):
        raise NonUnitError(f"constant term {c0} is not +1 or -1 modulo {a.modulus}")
    return TruncatedSeries(tuple(kernels.inverse_mod(a.coeffs, a.precision, a.modulus)),
                           a.modulus)


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return power(inverse(a), -e)
    result = TruncatedSeries.one(a.precision, a.modulus)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def eta_series(r: int, precision: int, modulus: int | None = None) -> TruncatedSeries:
    """``f_r = prod_{m>=1} (1 - q^(r m))`` truncated to ``precision`` terms.

    Pentagonal number theorem: ``f_1 = sum_k (-1)^k q^(k(3k-1)/2)`` over all
    integers ``k``; ``f_r`` is the same sum in ``q^r``.
    """
    if r < 1 or precision < 1:
        raise ValueError("need r >= 1 and precision >= 1")
    c = [0] * precision
    c[0] = 1
    k = 1
    while r * k * (3 * k - 1) // 2 < precision:
        sign = -1 if k & 1 else 1
        c[r * k * (3 * k - 1) // 2] += sign
        e2 = r * k * (3 * k + 1) // 2
        if e2 < precision:
            c[e2] += sign
        k += 1
    return TruncatedSeries(tuple(c), modulus)


def extract_progression(s: TruncatedSeries, a: int, b: int) -> TruncatedSeries:
    """Series whose ``q^n`` coefficient is the ``q^(a n + b)`` coefficient of ``s``."""
    if a < 1 or not 0 <= b < a:
        raise ValueError(f"need a >= 1 and 0 <= b < a, got a={a}, b={b}")
    coeffs = s.coeffs[b::a]
    if not coeffs:
        raise ValueError(f"no coefficients of s (precision {s.precision}) at exponents {a}n+{b}")
    return TruncatedSeries(coeffs, s.modulus)


def substitute_power(s: TruncatedSeries, m: int, precision: int | None = None) -> TruncatedSeries:
    """``s(q^m)``; by default to the full known precision ``m * s.precision``."""
    if m < 1:
        raise ValueError("m must be positive")
    n = m * s.precision if precision is None else precision
    if n > m * s.precision:
        raise ValueError(f"s(q^{m}) is only known to precision {m * s.precision}")
    c = [0] * n
    for k, v in enumerate(s.coeffs):
        if m * k >= n:
            break
        c[m * k] = v
    return TruncatedSeries(tuple(c), s.modulus)


def huff7(s: TruncatedSeries) -> TruncatedSeries:
    """Keep the terms whose exponent is divisible by 7, zero the rest."""
    return TruncatedSeries(tuple(c if e % 7 == 0 else 0 for e, c in enumerate(s.coeffs)),
                           s.modulus)


def dissect(s: TruncatedSeries, a: int) -> list[TruncatedSeries]:
    """The ``a`` components ``extract_progression(s, a, b)`` for ``b < min(a, N)``."""
    return [extract_progression(s, a, b) for b in range(min(a, s.precision))]


@dataclass(frozen=True)
class EtaQuotient:
    """``q^q_prefactor * prod f_r^z`` for ``(r, z)`` in ``factors``."""

    q_prefactor: int = 0
    factors: tuple = ()

    def __post_init__(self):
        if self.q_prefactor < 0:
            raise ValueError("q prefactor must be nonnegative")
        merged: dict[int, int] = {}
        for r, z in self.factors:
            if r < 1:
                raise ValueError(f"scale must be positive, got {r}")
            merged[r] = merged.get(r, 0) + z
        object.__setattr__(
            self, "factors", tuple(sorted((r, z) for r, z in merged.items() if z)))

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        return EtaQuotient(self.q_prefactor + other.q_prefactor, self.factors + other.factors)

    def __str__(self):
        parts = []
        if self.q_prefactor:
            parts.append("q" if self.q_prefactor == 1 else f"q^{self.q_prefactor}")
        for r, z in self.factors:
            parts.append(f"f{r}" + ("" if z == 1 else f"^{z}"))
        return "*".join(parts) or "1"

    def compile(self, precision: int, modulus: int | None = None) -> TruncatedSeries:
        return compile_quotient(self, precision, modulus)


def _factor_series(r: int, z: int, precision: int, modulus: int | None) -> TruncatedSeries:
    # f_r^z is a series in q^r: raise at reduced precision, then substitute
    inner = math.ceil(precision / r)
    base = eta_series(1, inner, modulus)
    if z < 0:
        base = inverse(base)
    return substitute_power(power(base, abs(z)), r, precision)


def compile_quotient(spec: EtaQuotient, precision: int,
                     modulus: int | None = None) -> TruncatedSeries:
    """Expand an eta-quotient to ``precision`` terms."""
    if spec.q_prefactor >= precision:
        raise ValueError(f"q^{spec.q_prefactor} is beyond precision {precision}")
    inner = precision - spec.q_prefactor
    result = TruncatedSeries.one(inner, modulus)
    for r, z in spec.factors:
        result = mul(result, _factor_series(r, z, inner, modulus))
    if spec.q_prefactor:
        return TruncatedSeries((0,) * spec.q_prefactor + result.coeffs, modulus)
    return result


def eta_quotient(q_prefactor: int = 0, **factors: int) -> EtaQuotient:
    """Convenience constructor: ``eta_quotient(1, f7=4, f1=-4)``."""
    out = []
    for name, z in factors.items():
        if not name.startswith("f"):
            raise ValueError(f"factor names look like f7, got {name}")
        out.append((int(name[1:]), z))
    return EtaQuotient(q_prefactor, tuple(out))
