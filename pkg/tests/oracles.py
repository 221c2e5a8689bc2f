"""Brute-force reference computations, independent of the package internals."""
from __future__ import annotations

from itertools import permutations, product

import numpy as np


def monoids_up_to_iso(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All monoid tables on {0..n-1} with unit 0, one per isomorphism class.

    Backtracking fill of the non-unit block with associativity pruning;
    the canonical representative is the least relabelled table.
    """
    if n == 1:
        return [((0,),)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    t = [[None] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = i
        t[i][0] = i
    found = set()

    def assoc_ok():
        for a, b, c in product(range(n), repeat=3):
            ab = t[a][b]
            bc = t[b][c]
            if ab is None or bc is None:
                continue
            x, y = t[ab][c], t[a][bc]
            if x is not None and y is not None and x != y:
                return False
        return True

    def fill(k):
        if k == len(cells):
            found.add(canonical(tuple(tuple(r) for r in t)))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if assoc_ok():
                fill(k + 1)
        t[i][j] = None

    fill(0)
    return sorted(found)


def canonical(table) -> tuple:
    n = len(table)
    best = None
    for perm in permutations(range(1, n)):
        s = (0,) + perm          # s[old] = new
        inv = [0] * n
        for old, new in enumerate(s):
            inv[new] = old
        relabelled = tuple(tuple(s[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or relabelled < best:
            best = relabelled
    return best


def is_group(table) -> bool:
    n = len(table)
    return all(any(table[a][b] == 0 and table[b][a] == 0 for b in range(n)) for a in range(n))


def rank_mod_p(mat, p: int) -> int:
    m = [[int(x) % p for x in row] for row in np.asarray(mat).tolist()]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def set_classes(n: int, pairs) -> list[int]:
    """Equivalence-class labels by repeated relaxation (no union-find)."""
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            lo = min(label[x], label[y])
            for z in (x, y):
                if label[z] != lo:
                    old = label[z]
                    label = [lo if v == old else v for v in label]
                    changed = True
    return label


def group_algebra_convolution(p: int, n: int) -> dict:
    """Convolution on End(F_p[Z/n]) with group-like comultiplication, by matrices.

    Returns {(i, j): flattened product} for basis matrices E_i, E_j (row-major).
    """
    dim = n
    mult = np.zeros((dim, dim * dim), dtype=np.int64)
    for g, h in product(range(n), repeat=2):
        mult[(g + h) % n, g * dim + h] = 1
    comult = np.zeros((dim * dim, dim), dtype=np.int64)
    for g in range(n):
        comult[g * dim + g, g] = 1
    basis = []
    for k in range(dim * dim):
        e = np.zeros(dim * dim, dtype=np.int64)
        e[k] = 1
        basis.append(e.reshape(dim, dim))
    out = {}
    for i, f in enumerate(basis):
        for j, g in enumerate(basis):
            out[(i, j)] = tuple(int(x) for x in ((mult @ np.kron(f, g) @ comult) % p).reshape(-1))
    return out
