"""Coefficient vectors ``x_k``, ``y^(2k-1)_b`` and ``y^(2k)_b``.

Every vector is reached from ``x_1 = (7, 49)`` by a chain of steps

    v'_j = sum_i v_i * m_{4i+e, j+i}        (e in {0, 1, 2})

with ``e`` fixed per step. Two facts about ``M`` make the sums finite and
let us compute only what is asked for:

* ``m_{r,c} = 0`` for ``c > 2r`` (row support), so a vector with finite
  support ``I`` yields one with support at most ``7I + 2e``;
* ``m_{r,c} = 0`` for ``7c < 2r`` (leading power of the huffed series), so
  ``v'_j`` only involves ``v_i`` with ``i <= 7j - 2e``.

Levels are 1-based as in the recursions: ``y_odd_vector(k, b)`` is
``y^(2k-1)_b`` and ``y_even_vector(k, b)`` is ``y^(2k)_b``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mtable import MTable, iter_columns


@dataclass(frozen=True)
class CoeffVector:
    """Entries ``v_1 .. v_len`` of a finite-support vector.

    ``complete`` means every entry past ``len(values)`` is known to vanish.
    With ``modulus`` set the entries are residues.
    """

    family: str  # "x", "y_odd" or "y_even"
    k: int
    level: int
    values: tuple
    complete: bool
    modulus: int | None = None

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j: int):
        if j < 1:
            raise IndexError("entries are indexed from 1")
        if j <= len(self.values):
            return self.values[j - 1]
        if self.complete:
            return 0
        raise IndexError(f"entry {j} of {self.name} not computed (have {len(self.values)})")

    @property
    def name(self) -> str:
        if self.family == "x":
            return f"x_{self.k}"
        upper = 2 * self.k - 1 if self.family == "y_odd" else 2 * self.k
        return f"y^({upper})_{self.level}"

    @property
    def support(self) -> int | None:
        """Index of the last nonzero entry, when the vector is complete."""
        if not self.complete:
            return None
        nz = [j for j, v in enumerate(self.values, start=1) if v]
        return nz[-1] if nz else 0


X1 = (7, 49)


def x_path(k: int) -> list[int]:
    """Step offsets from ``x_1`` to ``x_k``: ``m_{4j}`` after odd ``k``, ``m_{4j+1}`` after even."""
    if k < 1:
        raise ValueError("k must be positive")
    return [0 if t % 2 else 1 for t in range(1, k)]


def y_odd_path(k: int, level: int) -> list[int]:
    if level < 1:
        raise ValueError("level must be positive")
    return x_path(2 * k - 1) + [1] * (level - 1)


def y_even_path(k: int, level: int) -> list[int]:
    if level < 1:
        raise ValueError("level must be positive")
    return x_path(2 * k - 1) + [0 if b % 2 else 2 for b in range(1, level)]


def demand(path: list[int], jmax: int) -> list[int]:
    """Entries needed at each level (``[0]`` is ``x_1``) to get ``jmax`` at the end."""
    need = [0] * (len(path) + 1)
    need[-1] = jmax
    for lvl in range(len(path), 0, -1):
        need[lvl - 1] = max(1, 7 * need[lvl] - 2 * path[lvl - 1])
    return need


class VectorEngine:
    """Computes and memoises vectors, exactly or modulo ``modulus``.

    Exact mode reads an :class:`MTable` grown to the required extent; modular
    mode streams columns of ``M`` from :func:`iter_columns` and never stores
    the table, which is what makes the deep levels feasible.
    """

    def __init__(self, table: MTable | None = None, modulus: int | None = None):
        self.table = MTable() if table is None else table
        self.modulus = modulus
        self._memo: dict[tuple, tuple[tuple, bool]] = {}

    def run(self, path: list[int], jmax: int) -> tuple[tuple, bool]:
        need = demand(path, jmax)
        vals: tuple = X1 if self.modulus is None else tuple(v % self.modulus for v in X1)
        complete = True
        for lvl, e in enumerate(path, start=1):
            key = tuple(path[:lvl])
            hit = self._memo.get(key)
            if hit is not None and (hit[1] or len(hit[0]) >= need[lvl]):
                vals, complete = hit
                continue
            vals, complete = self._step(vals, complete, e, need[lvl])
            self._memo[key] = (vals, complete)
        if len(vals) > jmax:
            complete = complete and not any(vals[jmax:])
            vals = vals[:jmax]
        return vals, complete

    def _step(self, prev: tuple, prev_complete: bool, e: int, J: int) -> tuple[tuple, bool]:
        I = len(prev)
        complete = False
        if prev_complete:
            while I and not prev[I - 1]:
                I -= 1
            bound = 7 * I + 2 * e
            if J >= bound:
                J, complete = bound, True
        # entries v_i with i > 7J - 2e cannot reach index J
        I = min(I, max(0, 7 * J - 2 * e))
        if J == 0 or I == 0:
            return (0,) * J, complete
        if self.modulus is None:
            out = self._step_exact(prev, I, e, J)
        else:
            out = self._step_mod(prev, I, e, J)
        return tuple(out), complete

    def _step_exact(self, prev, I, e, J):
        t = self.table
        t.ensure(4 * I + e, J + I)
        out = []
        for j in range(1, J + 1):
            acc = 0
            for i in range(1, min(I, 7 * j - 2 * e) + 1):
                v = prev[i - 1]
                if v:
                    m = t.get(4 * i + e, j + i)
                    if m:
                        acc += v * m
            out.append(acc)
        return out

    def _step_mod(self, prev, I, e, J):
        M = self.modulus
        pv = np.array([int(v) % M for v in prev[:I]], dtype=object)
        out = np.zeros(J + 1, dtype=object)
        rows_all = 4 * np.arange(1, I + 1) + e
        for c, col in iter_columns(4 * I + e, J + I, M, self.table):
            lo, hi = max(1, c - J), min(I, c - 1)
            if lo > hi:
                continue
            idx = np.arange(lo, hi + 1)
            mv = col[rows_all[idx - 1]]
            nz = mv != 0
            if not nz.any():
                continue
            idx = idx[nz]
            out[c - idx] += pv[idx - 1] * mv[nz].astype(object)
        return [int(v) % M for v in out[1:]]

    # public helpers ------------------------------------------------------
    def x_vector(self, k: int, jmax: int) -> CoeffVector:
        vals, complete = self.run(x_path(k), jmax)
        return CoeffVector("x", k, k, vals, complete, self.modulus)

    def y_odd_vector(self, k: int, level: int, jmax: int) -> CoeffVector:
        vals, complete = self.run(y_odd_path(k, level), jmax)
        return CoeffVector("y_odd", k, level, vals, complete, self.modulus)

    def y_even_vector(self, k: int, level: int, jmax: int) -> CoeffVector:
        vals, complete = self.run(y_even_path(k, level), jmax)
        return CoeffVector("y_even", k, level, vals, complete, self.modulus)


_default: VectorEngine | None = None


def default_engine() -> VectorEngine:
    global _default
    if _default is None:
        _default = VectorEngine()
    return _default


def x_vector(k: int, jmax: int, engine: VectorEngine | None = None) -> CoeffVector:
    return (engine or default_engine()).x_vector(k, jmax)


def y_odd_vector(k: int, level: int, jmax: int, engine: VectorEngine | None = None) -> CoeffVector:
    return (engine or default_engine()).y_odd_vector(k, level, jmax)


def y_even_vector(k: int, level: int, jmax: int, engine: VectorEngine | None = None) -> CoeffVector:
    return (engine or default_engine()).y_even_vector(k, level, jmax)
