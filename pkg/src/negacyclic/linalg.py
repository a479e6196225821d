"""Row reduction over F_p on numpy int64 arrays."""

from __future__ import annotations

import numpy as np


def inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        table[a] = pow(a, -1, p)
    return table


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form mod p with zero rows dropped, plus pivot columns."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        return np.zeros((0, m.shape[-1] if m.ndim == 2 else 0), dtype=np.int64), []
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(mat, p: int) -> int:
    return len(rref(mat, p)[1])


def batched_rank(mats: np.ndarray, p: int, inv: np.ndarray | None = None) -> np.ndarray:
    """Ranks of a stack of matrices of shape (B, k, m), all mod p.

    Each step picks a pivot in one row, clears that pivot's column in
    every row (the pivot row itself included) and counts the pivot.
    Rows are processed in order, so the work is k passes of O(B*k*m).
    """
    m = np.array(mats, dtype=np.int64) % p
    if m.ndim != 3:
        raise ValueError("expected a 3-d stack")
    B, k, _ = m.shape
    if inv is None:
        inv = inverse_table(p)
    ranks = np.zeros(B, dtype=np.int64)
    idx = np.arange(B)
    for i in range(k):
        row = m[:, i, :]
        nz = row != 0
        has = nz.any(axis=1)
        if not has.any():
            continue
        j = nz.argmax(axis=1)
        pv = row[idx, j]
        rown = row * inv[pv][:, None] % p
        colvals = m[idx, :, j]
        m = (m - colvals[:, :, None] * rown[:, None, :]) % p
        ranks += has
    return ranks


def left_kernel_vector(mat, p: int) -> np.ndarray | None:
    """A nonzero y with y @ mat = 0 mod p, or None if the rows are independent."""
    a = np.array(mat, dtype=np.int64) % p
    k = a.shape[0]
    aug = np.concatenate([a, np.eye(k, dtype=np.int64)], axis=1)
    ncols = a.shape[1]
    # rows whose left block was eliminated carry kernel vectors in the right block
    full, _ = _row_echelon_keep_rows(aug, p, ncols)
    for row in full:
        if not row[:ncols].any() and row[ncols:].any():
            return row[ncols:] % p
    return None


def _row_echelon_keep_rows(aug: np.ndarray, p: int, ncols: int):
    m = aug.copy() % p
    rows = m.shape[0]
    r = 0
    for c in range(ncols):
        nz = np.nonzero(m[r:, c])[0] if r < rows else []
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        r += 1
    return m, r


def same_row_space(a, b, p: int) -> bool:
    ra, _ = rref(a, p)
    rb, _ = rref(b, p)
    return ra.shape == rb.shape and np.array_equal(ra, rb)


def in_row_space(basis_rref: np.ndarray, pivots: list[int], vec, p: int) -> bool:
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(basis_rref, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return not v.any()
