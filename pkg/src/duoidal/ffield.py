"""Exact linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries in [0, p).  Everything here is
plain Gauss-Jordan elimination; the sizes we deal with are tiny.
"""
from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def mod(mat, p: int) -> np.ndarray:
    return np.asarray(mat, dtype=np.int64) % p


def inv_scalar(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(int(a), p - 2, p)


def rref(mat, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    a = mod(mat, p).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv_scalar(int(a[r, c]), p)) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank(mat, p: int) -> int:
    m = np.asarray(mat)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(mat, p: int) -> np.ndarray:
    """Columns form a basis of {x : mat @ x = 0}."""
    m = mod(mat, p)
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, fc]) % p
    return basis


def inverse(mat, p: int) -> np.ndarray | None:
    m = mod(mat, p)
    n, k = m.shape
    if n != k:
        return None
    if n == 0:
        return m.copy()
    aug = np.concatenate([m, np.eye(n, dtype=np.int64)], axis=1)
    r, pivots = rref(aug, p)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        return None
    return r[:, n:].copy()


def solve(a, b, p: int) -> np.ndarray | None:
    """Some X with a @ X = b (mod p), or None when inconsistent."""
    a = mod(a, p)
    b = mod(b, p)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    rows, cols = a.shape
    if rows == 0:
        return np.zeros((cols, b.shape[1]), dtype=np.int64)
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    if any(c >= cols for c in pivots):
        return None
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x
