"""The matrix ``M = (m_{i,j})`` of the modulo-7 huffing expansion.

Row ``i`` is defined by

    H(q^{2i} f_49^i / f_1^i) = sum_j m_{i,j} q^{7j} f_49^{4j} / f_7^{4j}

where ``H`` keeps exponents divisible by 7. Rows 1..7 are seeded (hard-coded
values, or re-derived from the series), later rows follow a
ten-term recurrence. Both routes are implemented so each checks the other.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .series import EtaQuotient, TruncatedSeries, compile_quotient, huff7, mul

SEED_ROWS = 7
SEED_COLS = 14


def _c7(c: int, e: int) -> int:
    return c * 7 ** e


# Rows 1..7, columns 1..14, transcribed as printed: c x 7^e.
SEED_TABLE = {
    1: [7, _c7(1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    2: [10, _c7(9, 2), _c7(2, 4), _c7(1, 5), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    3: [3, _c7(114, 1), _c7(85, 3), _c7(24, 5), _c7(3, 7), _c7(1, 8), 0, 0, 0, 0, 0, 0, 0, 0],
    4: [0, _c7(82, 1), _c7(176, 3), _c7(845, 4), _c7(272, 6), _c7(46, 8), _c7(4, 10),
        _c7(1, 11), 0, 0, 0, 0, 0, 0],
    5: [0, 190, _c7(1265, 2), _c7(1895, 4), _c7(1233, 6), _c7(3025, 7), _c7(620, 9),
        _c7(75, 11), _c7(5, 13), _c7(1, 14), 0, 0, 0, 0],
    6: [0, 27, _c7(736, 2), _c7(16782, 3), _c7(20424, 5), _c7(12825, 7), _c7(4770, 9),
        _c7(7830, 10), _c7(1178, 12), _c7(111, 14), _c7(6, 16), _c7(1, 17), 0, 0],
    7: [0, 1, _c7(253, 2), _c7(1902, 4), _c7(4246, 6), _c7(31540, 7), _c7(19302, 9),
        _c7(7501, 11), _c7(1944, 13), _c7(2397, 14), _c7(285, 16), _c7(22, 18),
        _c7(1, 20), _c7(1, 20)],
}

# (row offset, column offset, coefficient) of the recurrence for i >= 8, j >= 3
RECURRENCE = (
    (3, 1, 7), (2, 1, 35), (1, 1, 49),
    (7, 2, 1), (6, 2, 7), (5, 2, 21), (4, 2, 49), (3, 2, 147), (2, 2, 343), (1, 2, 343),
)


def pi_lower_bound(i: int, j: int) -> int:
    """``floor((7j - 2i - 1) / 4)``, the lower bound on the 7-adic valuation of ``m_{i,j}``."""
    return (7 * j - 2 * i - 1) // 4


def factor7(v: int) -> tuple[int, int]:
    """Split ``v`` as ``(c, e)`` with ``v = c * 7^e`` and ``7 !| c`` (``(0, 0)`` for zero)."""
    if v == 0:
        return 0, 0
    e = 0
    while v % 7 == 0:
        v //= 7
        e += 1
    return v, e


def format_factored(v: int) -> str:
    c, e = factor7(v)
    if v == 0 or e == 0:
        return str(v)
    if c == 1:
        return f"7^{e}"
    return f"{c}x7^{e}" if e > 1 else f"{c}x7"


class MTable:
    """Exact entries ``m_{i,j}``, grown on demand.

    Rows ``1..7`` come from ``seed_rows`` (seed values or series
    derivations) and are zero beyond their stored length; this is justified
    by the row-support check ``m_{i,j} = 0`` for ``j > 2i``. Rows ``i >= 8``
    are filled from the recurrence in lexicographic order.
    """

    def __init__(self, seed_rows: dict[int, list[int]] | None = None, source: str = "seed"):
        seed_rows = SEED_TABLE if seed_rows is None else seed_rows
        missing = set(range(1, SEED_ROWS + 1)) - set(seed_rows)
        if missing:
            raise ValueError(f"seed rows missing: {sorted(missing)}")
        self.source = source
        self._rows: list[list[int]] = [[]] + [list(seed_rows[i]) for i in range(1, SEED_ROWS + 1)]
        self._jmax = 0  # columns filled for every recurrence row

    @property
    def imax(self) -> int:
        return len(self._rows) - 1

    @property
    def jmax(self) -> int:
        return self._jmax

    def ensure(self, imax: int, jmax: int) -> "MTable":
        """Fill rows ``8..imax`` through column ``jmax``."""
        rows = self._rows
        if jmax > self._jmax:
            for i in range(SEED_ROWS + 1, len(rows)):
                self._fill_row(i, jmax)
            self._jmax = jmax
        for i in range(len(rows), imax + 1):
            rows.append([])
            self._fill_row(i, self._jmax)
        return self

    def _fill_row(self, i: int, jmax: int) -> None:
        rows = self._rows
        row = rows[i]
        # lower rows are always at least as long as the column being filled
        refs = [(rows[i - di], dj, c) for di, dj, c in RECURRENCE if i - di >= 1]
        for j in range(len(row) + 1, jmax + 1):
            if j <= 2:
                row.append(0)
                continue
            acc = 0
            for src, dj, c in refs:
                k = j - dj
                if k <= len(src):
                    v = src[k - 1]
                    if v:
                        acc += c * v
            row.append(acc)

    def get(self, i: int, j: int) -> int:
        if i < 1 or j < 1:
            return 0
        if i > self.imax or (i > SEED_ROWS and j > self._jmax):
            raise KeyError(f"m[{i},{j}] not computed (extent {self.imax} x {self._jmax})")
        row = self._rows[i]
        return row[j - 1] if j <= len(row) else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i > self.imax or (i > SEED_ROWS and j > self._jmax):
            self.ensure(max(i, self.imax), max(j, self._jmax))
        return self.get(i, j)

    def extend_m(self, i: int, j: int) -> int:
        """``m_{i,j}`` for ``i >= 8`` from the recurrence (cached)."""
        if i <= SEED_ROWS:
            raise ValueError(f"rows 1..{SEED_ROWS} are seeds, not recurrence values (got i={i})")
        return self[i, j]

    def row(self, i: int, jmax: int) -> list[int]:
        return [self[i, j] for j in range(1, jmax + 1)]

    def slice(self, rows: range, cols: range) -> list[list[int]]:
        return [[self[i, j] for j in cols] for i in rows]

    # exports --------------------------------------------------------------
    def to_csv(self, rows: range, cols: range) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + [f"j={j}" for j in cols])
        for i in rows:
            w.writerow([i] + [str(self[i, j]) for j in cols])
        return buf.getvalue()

    def factored_report(self, rows: range, cols: range) -> str:
        cells = [[format_factored(self[i, j]) for j in cols] for i in rows]
        width = max(len(c) for r in cells for c in r) + 2
        head = "i\\j".ljust(5) + "".join(str(j).rjust(width) for j in cols)
        lines = [head]
        for i, r in zip(rows, cells):
            lines.append(str(i).ljust(5) + "".join(c.rjust(width) for c in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_series(cls, jmax: int = SEED_COLS) -> tuple["MTable", list["RowDerivation"]]:
        """Table whose rows 1..7 are derived from the series, not the printed values."""
        derived = [derive_m_row_from_series(i, jmax) for i in range(1, SEED_ROWS + 1)]
        for d in derived:
            if not d.residual_zero:
                raise ArithmeticError(f"row {d.i}: nonzero residual after {jmax} basis terms")
        return cls({d.i: list(d.values) for d in derived}, source="series"), derived


def read_csv(text: str) -> dict[tuple[int, int], int]:
    """Parse :meth:`MTable.to_csv` output back into ``{(i, j): value}``."""
    rows = list(csv.reader(io.StringIO(text)))
    cols = [int(h.split("=")[1]) for h in rows[0][1:]]
    out = {}
    for r in rows[1:]:
        i = int(r[0])
        for j, v in zip(cols, r[1:]):
            out[i, j] = int(v)
    return out


# series derivation ----------------------------------------------------------

class ConsistencyError(ArithmeticError):
    """The huffed series has a term the basis cannot represent."""


@dataclass
class RowDerivation:
    i: int
    values: tuple
    precision: int
    residual_zero: bool | None  # None when jmax < 2i, i.e. support not checked
    first_residual: int | None = None


def lhs_row_series(i: int, precision: int) -> TruncatedSeries:
    return huff7(compile_quotient(EtaQuotient(2 * i, ((49, i), (1, -i))), precision))


def derive_m_row_from_series(i: int, jmax: int, precision: int | None = None) -> RowDerivation:
    """Read off ``m_{i,1..jmax}`` by triangular elimination against ``q^{7j} f_49^{4j}/f_7^{4j}``.

    Each basis element starts at ``q^{7j}`` with coefficient 1, so
    ``m_{i,j}`` is the ``q^{7j}`` coefficient of the running residual.
    """
    N = 7 * jmax + 14 if precision is None else precision
    if N < 7 * jmax + 1:
        raise ValueError(f"precision {N} cannot resolve column {jmax}")
    residual = lhs_row_series(i, N)
    step = compile_quotient(EtaQuotient(7, ((49, 4), (7, -4))), N)
    basis = step
    values = []
    for j in range(1, jmax + 1):
        lead = 7 * j
        for e in range(lead):
            if residual[e]:
                raise ConsistencyError(
                    f"row {i}: coefficient {residual[e]} at q^{e} below basis term {j}")
        c = residual[lead]
        values.append(c)
        if c:
            residual = residual - basis * c
        if j < jmax:
            basis = mul(basis, step)
    first = residual.valuation()
    checked = jmax >= 2 * i
    return RowDerivation(i, tuple(values), N, (first is None) if checked else None, first)


def compare_with_seed(derived: list[RowDerivation]) -> list[tuple[int, int, int, int]]:
    """``(i, j, printed, derived)`` for every disagreement with the seed rows."""
    out = []
    for d in derived:
        printed = SEED_TABLE.get(d.i)
        if printed is None:
            continue
        for j, v in enumerate(d.values, start=1):
            p = printed[j - 1] if j <= len(printed) else 0
            if p != v:
                out.append((d.i, j, p, v))
    return out


# huffing lemma (three residue variants) -------------------------------------

# variant -> (row offset v, q exponent offset, f_1 extra exponent, f_49 deficit)
HUFF_VARIANTS = {
    "4i": (0, 0, 0, 0),
    "4i+1": (1, 2, 1, 1),
    "4i+2": (2, 4, 2, 2),
}


@dataclass
class LemmaReport:
    variant: str
    i: int
    precision: int
    passed: bool
    first_mismatch: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    terms: int = 0


def verify_huff_lemma(variant: str, i: int, precision: int, table: MTable) -> LemmaReport:
    """Expand both sides of

        H(q^{i+a} f_7^{4i} / f_1^{4i+v}) = sum_j m_{4i+v, i+j} q^{7j} f_49^{4j-d} / f_7^{4j}

    exactly and compare.
    """
    if variant not in HUFF_VARIANTS:
        raise ValueError(f"variant must be one of {sorted(HUFF_VARIANTS)}")
    v, a, extra, d = HUFF_VARIANTS[variant]
    N = precision
    lhs = huff7(compile_quotient(EtaQuotient(i + a, ((7, 4 * i), (1, -(4 * i + v)))), N))
    row = 4 * i + v
    rhs = TruncatedSeries.zero(N)
    terms = 0
    j = 1
    while 7 * j < N:
        c = table[row, i + j]
        if c:
            term = compile_quotient(EtaQuotient(7 * j, ((49, 4 * j - d), (7, -4 * j))), N)
            rhs = rhs + term * c
            terms += 1
        j += 1
    for e in range(N):
        if lhs[e] != rhs[e]:
            return LemmaReport(variant, i, N, False, e, lhs[e], rhs[e], terms)
    return LemmaReport(variant, i, N, True, terms=terms)


# modular column generator ---------------------------------------------------

def iter_columns(imax: int, jmax: int, modulus: int, table: MTable | None = None):
    """Yield ``(j, col)`` with ``col[i] = m_{i,j} mod modulus`` for ``0 <= i <= imax``.

    Columns depend only on the two previous columns, so memory stays
    ``O(imax)``; used for vector recursions too deep for an exact table.
    ``modulus`` must keep ``343 * modulus`` inside int64.
    """
    if 343 * 2 * modulus >= 1 << 63:
        raise ValueError("modulus too large for int64 column recurrence")
    table = MTable() if table is None else table
    R = max(imax, SEED_ROWS)
    prev2 = np.zeros(R + 1, dtype=np.int64)
    prev1 = np.zeros(R + 1, dtype=np.int64)
    for j in range(1, jmax + 1):
        col = np.zeros(R + 1, dtype=np.int64)
        for i in range(1, SEED_ROWS + 1):
            col[i] = table.get(i, j) % modulus
        if j >= 3 and R >= 8:
            acc = np.zeros(R - 7, dtype=np.int64)
            for di, dj, c in RECURRENCE:
                src = prev1 if dj == 1 else prev2
                acc = (acc + c * src[8 - di: R + 1 - di]) % modulus
            col[8:] = acc
        yield j, col[: imax + 1]
        prev2, prev1 = prev1, col
