"""Mod-p array kernels: numba-jitted hot loops with a pure-numpy fallback.

All GF(p) matrices are int64 arrays with entries canonicalized to [0, p).
The jitted kernels are used by default when numba is importable; setting
the environment variable HOPFMONAD_PURE_NUMPY=1 forces the numpy path
(useful for debugging and for the benchmark in benchmarks/).

Overflow safety: p is capped at 2**20 (see exactla.FieldSpec), so a dot
product of length up to 2**22 stays below 2**62 and never wraps int64.
"""

from __future__ import annotations

import os

import numpy as np

PURE_NUMPY = os.environ.get("HOPFMONAD_PURE_NUMPY", "").lower() in ("1", "true", "yes")

try:  # pragma: no cover - exercised through backend_name()
    if PURE_NUMPY:
        raise ImportError("pure-numpy backend forced by HOPFMONAD_PURE_NUMPY")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

# Longest safe dot product: sum of k terms < p**2 each must fit in int64.
MAX_ACCUM = 1 << 22


def _matmul_mod_numpy(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    k = a.shape[1]
    if k <= MAX_ACCUM:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, k, MAX_ACCUM):
        out = (out + a[:, lo:lo + MAX_ACCUM] @ b[lo:lo + MAX_ACCUM, :]) % p
    return out


def _rref_mod_numpy(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = m % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


if HAVE_NUMBA:

    @njit(cache=True)
    def _matmul_mod_numba(a, b, p):  # pragma: no cover - jitted
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for l in range(k):
                v = a[i, l]
                if v == 0:
                    continue
                for j in range(m):
                    out[i, j] += v * b[l, j]
            if (i + 1) % 64 == 0 or k > (1 << 20):
                for j in range(m):
                    out[i, j] %= p
        for i in range(n):
            for j in range(m):
                out[i, j] %= p
        return out

    @njit(cache=True)
    def _pow_mod(base, exp, p):  # pragma: no cover - jitted
        result = 1
        base %= p
        while exp > 0:
            if exp & 1:
                result = (result * base) % p
            base = (base * base) % p
            exp >>= 1
        return result

    @njit(cache=True)
    def _rref_mod_numba(m, p):  # pragma: no cover - jitted
        rows, cols = m.shape
        for i in range(rows):
            for j in range(cols):
                m[i, j] %= p
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        npiv = 0
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            sel = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                for j in range(cols):
                    tmp = m[r, j]
                    m[r, j] = m[sel, j]
                    m[sel, j] = tmp
            inv = _pow_mod(m[r, c], p - 2, p)
            for j in range(cols):
                m[r, j] = (m[r, j] * inv) % p
            for i in range(rows):
                if i == r:
                    continue
                f = m[i, c]
                if f == 0:
                    continue
                for j in range(cols):
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
            pivots[npiv] = c
            npiv += 1
            r += 1
        return m, pivots[:npiv]


def backend_name() -> str:
    """Name of the active GF(p) kernel backend."""
    return "numba" if HAVE_NUMBA else "numpy"


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product of two int64 matrices modulo p."""
    if HAVE_NUMBA:
        return _matmul_mod_numba(a, b, p)
    return _matmul_mod_numpy(a, b, p)


def rref_mod(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot columns).

    Pivoting is deterministic: first nonzero entry in column order.
    The input array is consumed (pass a copy if it must survive).
    """
    if HAVE_NUMBA:
        r, piv = _rref_mod_numba(m, p)
        return r, [int(c) for c in piv]
    return _rref_mod_numpy(m, p)
