"""Numpy implementation of the hot kernels.

Every function works on 0-based positions over a C-contiguous ``uint8``
matrix ``a`` and must stay signature-compatible with ``_ckernels``.
"""
import numpy as np

NAME = "python"


def row_is_zero(a, i, n):
    return not a[i, :n].any()


def first_nonzero(a, j, n):
    row = a[j, :n]
    c = int(row.argmax()) if n else 0
    return c if n and row[c] else -1


def first_nonzero_all(a, p, n, out):
    """Fill ``out[j - p]`` with the leftmost 1 of row ``j`` (or -1)."""
    block = a[p:n, :n]
    if block.size == 0:
        out[: n - p] = -1
        return
    k = block.argmax(axis=1)
    k[~block.any(axis=1)] = -1
    out[: n - p] = k


def pivot(a, p, n, limit):
    """Return ``(s, q)``: the smallest row in ``p..n-1`` whose leftmost 1 is leftmost.

    ``limit`` bounds the columns that need scanning first; when some row has
    a 1 left of it, the answer is found without touching the rest.
    ``s == -1`` when every candidate row is zero.
    """
    limit = min(limit, n)
    for width in ((limit, n) if 0 < limit < n else (n,)):
        block = a[p:n, :width]
        hit = block.any(axis=1)
        if hit.any():
            k = np.where(hit, block.argmax(axis=1), width)
            off = int(k.argmin())
            return p + off, int(k[off])
    return -1, -1


def swap(a, label_at, position_of, x, y):
    if x == y:
        return
    a[[x, y], :] = a[[y, x], :]
    a[:, [x, y]] = a[:, [y, x]]
    lx, ly = label_at[x], label_at[y]
    label_at[x], label_at[y] = ly, lx
    position_of[ly], position_of[lx] = x, y


def cut_holds(a, i, n):
    if a[i, i + 1 : n].any():
        return False
    return not a[i + 1 : n, : i + 1].any()
