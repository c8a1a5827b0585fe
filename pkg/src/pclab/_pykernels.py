"""Pure-Python reference kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is unavailable and as the cross-check in the test suite.
"""
import numpy as np


def convolve(a, b, n):
    """Cauchy product of coefficient lists ``a`` and ``b`` truncated to ``n`` terms."""
    out = [0] * n
    nz_b = [(j, y) for j, y in enumerate(b[:n]) if y]
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        lim = n - i
        for j, y in nz_b:
            if j >= lim:
                break
            out[i + j] += x * y
    return out


def convolve_mod(a, b, n, modulus):
    out = [0] * n
    nz_b = [(j, y % modulus) for j, y in enumerate(b[:n]) if y % modulus]
    for i, x in enumerate(a[:n]):
        x %= modulus
        if not x:
            continue
        lim = n - i
        for j, y in nz_b:
            if j >= lim:
                break
            out[i + j] += x * y
    return [c % modulus for c in out]


def inverse(a, n):
    """Reciprocal of a series whose constant term is +1 or -1."""
    a0 = a[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term {a0} is not a unit")
    nz = [(k, c) for k, c in enumerate(a[:n]) if c and k]
    out = [0] * n
    out[0] = a0
    for m in range(1, n):
        acc = 0
        for k, c in nz:
            if k > m:
                break
            acc += c * out[m - k]
        out[m] = -a0 * acc
    return out


def inverse_mod(a, n, modulus):
    a0 = a[0] % modulus
    if a0 not in (1, modulus - 1):
        raise ValueError(f"constant term {a[0]} is not +1 or -1")
    s = 1 if a0 == 1 else -1
    nz = [(k, c % modulus) for k, c in enumerate(a[:n]) if k and c % modulus]
    out = [0] * n
    out[0] = a0
    for m in range(1, n):
        acc = 0
        for k, c in nz:
            if k > m:
                break
            acc += c * out[m - k]
        out[m] = (-s * acc) % modulus
    return out


def _pentagonal_steps(n):
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > n:
            return
        yield k, g, g + k
        k += 1


def partitions(nmax, prefix=None):
    """p(0), ..., p(nmax) by Euler's pentagonal recurrence.

    ``prefix`` is an already-computed initial segment that is extended
    instead of recomputed.
    """
    p = list(prefix) if prefix else [1]
    p = p[: nmax + 1]
    for n in range(len(p), nmax + 1):
        acc = 0
        for k, g1, g2 in _pentagonal_steps(n):
            t = p[n - g1]
            if g2 <= n:
                t += p[n - g2]
            if k & 1:
                acc += t
            else:
                acc -= t
        p.append(acc)
    return p


def partitions_mod(nmax, modulus):
    p = [1 % modulus]
    for n in range(1, nmax + 1):
        acc = 0
        for k, g1, g2 in _pentagonal_steps(n):
            t = p[n - g1]
            if g2 <= n:
                t += p[n - g2]
            if k & 1:
                acc += t
            else:
                acc -= t
        p.append(acc % modulus)
    return np.array(p, dtype=np.int64)


def two_color_mod(p, ell, nmax, modulus):
    """p_{1,ell}(0..nmax) mod ``modulus`` from ``p`` (already reduced).

    Uses f_ell * A = sum p(n) q^n, i.e. A(n) = p(n) + sum over the
    pentagonal recurrence in steps of ``ell``.
    """
    a = []
    for n in range(nmax + 1):
        acc = int(p[n])
        for k, g1, g2 in _pentagonal_steps(n // ell):
            t = a[n - ell * g1]
            if g2 * ell <= n:
                t += a[n - ell * g2]
            if k & 1:
                acc += t
            else:
                acc -= t
        a.append(acc % modulus)
    return np.array(a, dtype=np.int64)
