import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from skewcoh.ffmat import FMatrix, PrimeField, is_prime
from skewcoh.ffmat import _sparse
from skewcoh.ffmat._dense_py import rref_inplace as rref_py
from skewcoh.ffmat.kernels import dense_rref_inplace

PRIMES = [3, 5, 7, 101]


@st.composite
def matrices(draw, max_side=8):
    p = draw(st.sampled_from(PRIMES))
    r = draw(st.integers(0, max_side))
    c = draw(st.integers(0, max_side))
    vals = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
    return p, np.array(vals, dtype=np.int64).reshape(r, c)


def sparse_copy(p, arr):
    rows = [{j: int(v) for j, v in enumerate(row) if v} for row in arr]
    return FMatrix.from_rows(p, arr.shape[1], rows)


def test_prime_field_rejects_bad_moduli():
    for bad in (1, 2, 4, 9, 65537):
        with pytest.raises(ValueError):
            PrimeField(bad)
    F = PrimeField(7)
    assert F.half == 4
    assert F.inv(3) == 5
    assert F.signed(6) == -1
    assert is_prime(65521) and not is_prime(65535)


def test_known_rank_and_kernel(backend):
    m = FMatrix.from_dense(3, [[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    # second row is twice the first mod 3
    assert m.rank() == 2
    (k,) = m.kernel_basis()
    assert m.apply(k) == [0, 0, 0]
    assert k == [1, 1, 0]


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(matrices())
def test_rank_nullity_and_kernel(backend, pm):
    p, arr = pm
    m = FMatrix.from_dense(p, arr)
    ker = m.kernel_basis()
    assert m.rank() + len(ker) == m.ncols
    for v in ker:
        assert not any(m.apply(v))
    assert m.rank() == m.T.rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_backends_and_sparse_path_agree(pm):
    p, arr = pm
    if arr.size == 0:
        return
    a1 = np.ascontiguousarray(arr.copy())
    r1, piv1 = rref_py(a1, p)
    for name in ("python", "cython"):
        try:
            a2 = np.ascontiguousarray(arr.copy())
            r2, piv2 = dense_rref_inplace(a2, p, backend=name)
        except KeyError:
            continue
        assert r1 == r2 and list(piv1) == list(piv2)
        assert (a1 == a2).all()
    piv3, rows3 = _sparse.rref([{j: int(v) for j, v in enumerate(row) if v} for row in arr], p)
    assert piv3 == list(piv1)
    dense_rows = [{j: int(v) for j, v in enumerate(a1[i]) if v} for i in range(r1)]
    assert rows3 == dense_rows


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(matrices(), st.data())
def test_solve_membership(backend, pm, data):
    p, arr = pm
    m = sparse_copy(p, arr)
    x = data.draw(st.lists(st.integers(0, p - 1), min_size=m.ncols, max_size=m.ncols))
    b = m.apply(x)
    sol = m.solve(b)
    assert sol is not None and m.apply(sol) == b


def test_solve_detects_non_members(backend):
    m = FMatrix.from_dense(5, [[1, 0], [0, 0]])
    assert m.solve([0, 1]) is None
    assert m.solve([3, 0]) == [3, 0]
    with pytest.raises(ValueError):
        m.solve([1, 2, 3])


def test_constructors_agree():
    p = 7
    entries = [(0, 1, 3), (2, 0, 6), (1, 1, 1)]
    m = FMatrix.from_entries(p, 3, 2, entries)
    d = FMatrix.from_dense(p, [[0, 3], [0, 1], [6, 0]])
    assert m == d
    assert (m @ FMatrix.identity(p, 2)) == m
    assert m.T.shape == (2, 3)
    assert FMatrix.zeros(p, 2, 2).rank() == 0
    assert m.hstack(d).shape == (3, 4)


def test_large_sparse_matrix_uses_sparse_path():
    from skewcoh.ffmat import SPARSE_THRESHOLD

    n = int(SPARSE_THRESHOLD ** 0.5) + 10
    rows = [{i: 1, (i + 1) % n: 2} for i in range(n)]
    m = FMatrix.from_rows(3, n, rows)
    assert m._use_sparse()
    # circulant of 1 + 2x = 2(x - 1) mod x^n - 1: the gcd has degree 1
    assert m.rank() == n - 1
