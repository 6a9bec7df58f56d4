# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense mod-p row reduction.  Same contract as ``_dense_py``."""

cdef long long _inv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(long long[:, ::1] a, long long p):
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t rank = 0, c, r, i, j
    cdef long long inv, f, tmp
    pivots = []
    for c in range(ncols):
        if rank == nrows:
            break
        r = rank
        while r < nrows and a[r, c] == 0:
            r += 1
        if r == nrows:
            continue
        if r != rank:
            for j in range(c, ncols):
                tmp = a[r, j]
                a[r, j] = a[rank, j]
                a[rank, j] = tmp
        inv = _inv(a[rank, c], p)
        if inv != 1:
            for j in range(c, ncols):
                a[rank, j] = (a[rank, j] * inv) % p
        for i in range(nrows):
            if i == rank:
                continue
            f = a[i, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, ncols):
                if a[rank, j] != 0:
                    a[i, j] = (a[i, j] + f * a[rank, j]) % p
        pivots.append(c)
        rank += 1
    return rank, pivots
