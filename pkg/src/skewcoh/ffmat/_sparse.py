"""Row-wise sparse elimination over F_p (dict-of-rows storage)."""
from __future__ import annotations


def _axpy(row: dict[int, int], f: int, other: dict[int, int], p: int) -> None:
    # row += f * other, dropping zeros
    for c, v in other.items():
        w = (row.get(c, 0) + f * v) % p
        if w:
            row[c] = w
        else:
            row.pop(c, None)


def echelon(rows: list[dict[int, int]], p: int) -> dict[int, dict[int, int]]:
    """Forward elimination.  Returns ``{pivot_column: monic row}``.

    Rows are consumed in order; each new pivot is the first nonzero column of
    the fully reduced row, so the outcome is deterministic.
    """
    piv: dict[int, dict[int, int]] = {}
    for src in rows:
        row = {c: v % p for c, v in src.items() if v % p}
        while row:
            c = min(row)
            prow = piv.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                if inv != 1:
                    row = {k: (v * inv) % p for k, v in row.items()}
                piv[c] = row
                break
            _axpy(row, p - row[c], prow, p)
    return piv


def rref(rows: list[dict[int, int]], p: int) -> tuple[list[int], list[dict[int, int]]]:
    """Reduced row echelon form; returns sorted pivots and matching rows."""
    piv = echelon(rows, p)
    cols = sorted(piv)
    pivset = set(cols)
    for c in reversed(cols):
        row = piv[c]
        for k in sorted(k for k in row if k in pivset and k != c):
            if k in row:
                _axpy(row, p - row[k], piv[k], p)
    return cols, [piv[c] for c in cols]
