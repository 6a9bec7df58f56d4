from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _sparse
from .field import PrimeField
from .kernels import dense_rref_inplace

# dense elimination below this many entries, sparse above (when stored sparse)
SPARSE_THRESHOLD = 10**6


class FMatrix:
    """An immutable matrix over F_p, stored densely or as sparse rows.

    Dense storage is an int64 array with entries in [0, p); sparse storage is
    a list of ``{column: value}`` dicts, one per row.
    """

    __slots__ = ("p", "nrows", "ncols", "_dense", "_rows", "_rref")

    def __init__(self, p: int, nrows: int, ncols: int, dense=None, rows=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimension")
        self.p = PrimeField(p).p
        self.nrows = nrows
        self.ncols = ncols
        self._dense = dense
        self._rows = rows
        self._rref = None
        if dense is None and rows is None:
            self._rows = [{} for _ in range(nrows)]

    # construction ------------------------------------------------------

    @classmethod
    def from_dense(cls, p: int, data) -> "FMatrix":
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("dense data must be two-dimensional")
        arr %= p
        arr.setflags(write=False)
        return cls(p, arr.shape[0], arr.shape[1], dense=arr)

    @classmethod
    def from_rows(cls, p: int, ncols: int, rows: Iterable[dict[int, int]]) -> "FMatrix":
        clean = []
        for r in rows:
            d = {}
            for c, v in r.items():
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} out of range for {ncols} columns")
                v %= p
                if v:
                    d[c] = v
            clean.append(d)
        return cls(p, len(clean), ncols, rows=clean)

    @classmethod
    def from_entries(cls, p: int, nrows: int, ncols: int,
                     entries: Iterable[tuple[int, int, int]]) -> "FMatrix":
        """Build from ``(row, col, value)`` triples; repeated positions add up."""
        rows: list[dict[int, int]] = [{} for _ in range(nrows)]
        for i, j, v in entries:
            r = rows[i]
            r[j] = (r.get(j, 0) + v) % p
        return cls.from_rows(p, ncols, rows)

    @classmethod
    def zeros(cls, p: int, nrows: int, ncols: int) -> "FMatrix":
        return cls(p, nrows, ncols)

    @classmethod
    def identity(cls, p: int, n: int) -> "FMatrix":
        return cls.from_rows(p, n, [{i: 1} for i in range(n)])

    # views ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_sparse(self) -> bool:
        return self._dense is None

    def nnz(self) -> int:
        if self._dense is not None:
            return int(np.count_nonzero(self._dense))
        return sum(len(r) for r in self._rows)

    def to_dense(self) -> np.ndarray:
        if self._dense is not None:
            return self._dense.copy()
        arr = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                arr[i, j] = v
        return arr

    def to_rows(self) -> list[dict[int, int]]:
        if self._rows is not None:
            return [dict(r) for r in self._rows]
        out = []
        for row in self._dense:
            nz = np.flatnonzero(row)
            out.append({int(j): int(row[j]) for j in nz})
        return out

    def transpose(self) -> "FMatrix":
        if self._dense is not None:
            return FMatrix.from_dense(self.p, self._dense.T)
        cols: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return FMatrix(self.p, self.ncols, self.nrows, rows=cols)

    T = property(transpose)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FMatrix):
            return NotImplemented
        return (self.p, self.shape) == (other.p, other.shape) and self.to_rows() == other.to_rows()

    def __repr__(self) -> str:
        kind = "sparse" if self.is_sparse else "dense"
        return f"FMatrix({self.nrows}x{self.ncols} over F_{self.p}, {kind})"

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix-vector product ``M @ v``."""
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        if self._dense is not None:
            return [int(x) for x in (self._dense @ np.asarray(v, dtype=np.int64)) % self.p]
        return [sum(c * v[j] for j, c in r.items()) % self.p for r in self._rows]

    def __matmul__(self, other):
        if isinstance(other, FMatrix):
            if self.ncols != other.nrows:
                raise ValueError("inner dimensions differ")
            # entries < 2**16 and products summed in int64; reduce in chunks
            a, b = self.to_dense(), other.to_dense()
            out = np.zeros((self.nrows, other.ncols), dtype=np.int64)
            step = max(1, (1 << 30) // (self.p * self.p))
            for k in range(0, self.ncols, step):
                out = (out + a[:, k:k + step] @ b[k:k + step, :]) % self.p
            return FMatrix.from_dense(self.p, out)
        return self.apply(other)

    def hstack(self, other: "FMatrix") -> "FMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        if self._dense is not None and other._dense is not None:
            return FMatrix.from_dense(self.p, np.hstack([self._dense, other._dense]))
        left, right = self.to_rows(), other.to_rows()
        off = self.ncols
        rows = left
        for r, extra in zip(rows, right):
            for j, v in extra.items():
                r[j + off] = v
        return FMatrix(self.p, self.nrows, self.ncols + other.ncols, rows=rows)

    # elimination ---------------------------------------------------------

    def _use_sparse(self) -> bool:
        return self.is_sparse and self.nrows * self.ncols > SPARSE_THRESHOLD

    def rref(self) -> tuple[list[int], list[dict[int, int]]]:
        """Reduced row echelon form as ``(pivot_columns, nonzero_rows)``."""
        if self._rref is None:
            if self.nrows == 0 or self.ncols == 0:
                self._rref = ([], [])
            elif self._use_sparse():
                self._rref = _sparse.rref(self._rows, self.p)
            else:
                a = np.ascontiguousarray(self.to_dense())
                rank, piv = dense_rref_inplace(a, self.p)
                rows = []
                for i in range(rank):
                    nz = np.flatnonzero(a[i])
                    rows.append({int(j): int(a[i, j]) for j in nz})
                self._rref = (list(piv), rows)
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[0])

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def kernel_basis(self) -> list[list[int]]:
        piv, rows = self.rref()
        pivset = set(piv)
        basis = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            x = [0] * self.ncols
            x[f] = 1
            for c, r in zip(piv, rows):
                v = r.get(f)
                if v:
                    x[c] = (-v) % self.p
            basis.append(x)
        return basis

    def solve(self, v: Sequence[int]) -> list[int] | None:
        """Some ``x`` with ``M @ x == v``, or ``None`` when ``v`` is not in the column span."""
        if len(v) != self.nrows:
            raise ValueError(f"right-hand side has length {len(v)}, expected {self.nrows}")
        col = FMatrix.from_rows(self.p, 1, [{0: x} for x in v])
        piv, rows = self.hstack(col).rref()
        if piv and piv[-1] == self.ncols:
            return None
        x = [0] * self.ncols
        for c, r in zip(piv, rows):
            x[c] = r.get(self.ncols, 0)
        return x


def rank(m: FMatrix) -> int:
    return m.rank()


def kernel_basis(m: FMatrix) -> list[list[int]]:
    return m.kernel_basis()


def solve_membership(m: FMatrix, v: Sequence[int]) -> list[int] | None:
    return m.solve(v)
