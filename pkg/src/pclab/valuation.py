"""7-adic valuations and the lower bounds they are checked against."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .mtable import MTable, pi_lower_bound
from .vectors import VectorEngine

INF = math.inf


def valuation(n: int) -> int | float:
    """Exponent of the largest power of 7 dividing ``n``; ``inf`` for zero."""
    n = int(n)
    if n == 0:
        return INF
    e = 0
    while n % 7 == 0:
        n //= 7
        e += 1
    return e


def capped_valuation(residue: int, cap: int) -> int:
    """``min(valuation, cap)`` for a value known only modulo ``7^cap``."""
    v = valuation(int(residue) % 7 ** cap)
    return cap if v == INF else v


# bounds, keyed by lemma label ------------------------------------------------

def bound_x_odd(k: int, j: int) -> int:
    """``x_{2k+1,j}``: ``k + 1 + floor((7j - 4)/4)``."""
    return k + 1 + (7 * j - 4) // 4


def bound_x_even(k: int, j: int) -> int:
    """``x_{2k,j}``: ``k + 1 + floor((7j - 6)/4)``."""
    return k + 1 + (7 * j - 6) // 4


def bound_y_odd(k: int, beta: int, j: int) -> int:
    """``y^(2k-1)_{beta+1,j}``: ``k + floor((7j - 4)/4)``."""
    return k + (7 * j - 4) // 4


def bound_y_even_odd_level(k: int, beta: int, j: int) -> int:
    """``y^(2k)_{2beta+1,j}``: ``k + beta + floor((7j - 6)/4)``."""
    return k + beta + (7 * j - 6) // 4


def bound_y_even_even_level(k: int, beta: int, j: int) -> int:
    """``y^(2k)_{2beta+2,j}``: ``k + beta + 1 + floor((7j - 6)/4)``."""
    return k + beta + 1 + (7 * j - 6) // 4


@dataclass
class BoundCheck:
    lemma: str
    label: str
    entries: list = field(default_factory=list)  # (j, valuation, bound)
    cap: int | None = None
    equality: bool = False  # the bound must be attained exactly

    @property
    def violations(self):
        if self.equality:
            return [(j, v, b) for j, v, b in self.entries if v != b]
        return [(j, v, b) for j, v, b in self.entries if v < b]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def slack(self) -> list:
        """``valuation - bound`` per entry (a capped valuation gives a lower bound)."""
        return [v - b for _, v, b in self.entries]


def _vector_checks(engine: VectorEngine, kmax: int, beta_max: int, jmax: int, cap: int | None):
    def vals(vec):
        out = []
        for j in range(1, jmax + 1):
            v = vec[j] if (j <= len(vec) or vec.complete) else None
            if v is None:
                break
            out.append((j, capped_valuation(v, cap) if cap else valuation(v)))
        return out

    checks = []
    c = BoundCheck("pi1", "x_1", cap=cap, equality=True)
    c.entries = [(j, v, j) for j, v in vals(engine.x_vector(1, 2)) if j <= 2]
    checks.append(c)
    for k in range(1, kmax + 1):
        c = BoundCheck("pi1", f"x_{2 * k + 1}", cap=cap)
        c.entries = [(j, v, bound_x_odd(k, j)) for j, v in vals(engine.x_vector(2 * k + 1, jmax))]
        checks.append(c)
        c = BoundCheck("pi11", f"x_{2 * k}", cap=cap)
        c.entries = [(j, v, bound_x_even(k, j)) for j, v in vals(engine.x_vector(2 * k, jmax))]
        checks.append(c)
        for beta in range(beta_max + 1):
            y = engine.y_odd_vector(k, beta + 1, jmax)
            c = BoundCheck("pi4+1", f"{y.name} (k={k}, beta={beta})", cap=cap)
            c.entries = [(j, v, bound_y_odd(k, beta, j)) for j, v in vals(y)]
            checks.append(c)
            y = engine.y_even_vector(k, 2 * beta + 1, jmax)
            c = BoundCheck("pi4", f"{y.name} (k={k}, beta={beta})", cap=cap)
            c.entries = [(j, v, bound_y_even_odd_level(k, beta, j)) for j, v in vals(y)]
            checks.append(c)
            y = engine.y_even_vector(k, 2 * beta + 2, jmax)
            c = BoundCheck("pi5", f"{y.name} (k={k}, beta={beta})", cap=cap)
            c.entries = [(j, v, bound_y_even_even_level(k, beta, j)) for j, v in vals(y)]
            checks.append(c)
    return checks


def check_m_bounds(table: MTable, imax: int, jmax: int) -> BoundCheck:
    """``pi(m_{i,j}) >= floor((7j - 2i - 1)/4)`` over a rectangle of the exact table."""
    c = BoundCheck("pmij", f"m_(i,j), i<={imax}, j<={jmax}")
    for i in range(1, imax + 1):
        for j in range(1, jmax + 1):
            v = table[i, j]
            if v:
                c.entries.append(((i, j), valuation(v), pi_lower_bound(i, j)))
    return c


def check_valuation_lemmas(kmax: int = 2, beta_max: int = 2, jmax: int = 6,
                           cap: int = 19, table: MTable | None = None,
                           m_extent: tuple[int, int] = (40, 80)) -> list[BoundCheck]:
    """Check every valuation bound entrywise.

    Vectors are computed modulo ``7^cap``: valuations below ``cap`` are
    exact and a residue of 0 certifies any bound below ``cap``. Exact
    computation is infeasible for the deepest even levels at ``k = 2``.
    """
    table = MTable() if table is None else table
    engine = VectorEngine(table, modulus=7 ** cap)
    checks = _vector_checks(engine, kmax, beta_max, jmax, cap)
    for c in checks:
        for j, v, b in c.entries:
            if b >= cap:
                raise ValueError(f"bound {b} for {c.label} j={j} needs cap > {b}")
    checks.append(check_m_bounds(table, *m_extent))
    return checks
