"""Numpy fallback for the dense mod-p row reduction kernel."""
from __future__ import annotations

import numpy as np


def rref_inplace(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Bring ``a`` (int64, entries in [0, p)) to reduced row echelon form.

    Pivot choice is the first row at or below the current rank with a
    nonzero entry in the current column.  Returns ``(rank, pivot_columns)``.
    """
    nrows, ncols = a.shape
    rank = 0
    pivots: list[int] = []
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        if inv != 1:
            a[rank, c:] = (a[rank, c:] * inv) % p
        col = a[:, c].copy()
        col[rank] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            a[rows, c:] = (a[rows, c:] - np.outer(col[rows], a[rank, c:])) % p
        pivots.append(c)
        rank += 1
    return rank, pivots
