import random

import pytest
from hypothesis import given, settings, strategies as st

from skewcoh.algebras import build_A
from skewcoh.barcoh import BudgetExceeded
from skewcoh.lhs import (
    ConvergenceError, GModule, convergence_check, cyclic_cohomology, e2_page, g_module_of_cohomology,
)
from skewcoh.verify import _random_module


def test_module_order_is_checked():
    with pytest.raises(ValueError):
        GModule(3, [[2]])
    with pytest.raises(ValueError):
        GModule(3, [[1, 0]])
    GModule(3, [[1, 0], [1, 1]])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trivial_and_regular(p):
    assert [cyclic_cohomology(GModule.trivial(p), n) for n in range(6)] == [1] * 6
    assert [cyclic_cohomology(GModule.regular(p), n) for n in range(6)] == [1, 0, 0, 0, 0, 0]


def test_h1_module_of_A3():
    M = GModule(3, [[1, 0], [1, 1]])
    assert cyclic_cohomology(M, 0) == 1
    assert [cyclic_cohomology(M, n) for n in range(1, 5)] == [1, 1, 1, 1]


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(0, 2**32 - 1), st.sampled_from([3, 5, 7]))
def test_periodicity_and_rank_identity(seed, p):
    M = _random_module(p, random.Random(seed))
    for n in range(1, 6):
        assert cyclic_cohomology(M, n) == cyclic_cohomology(M, n + 2)
    assert cyclic_cohomology(M, 0) + M.g_minus_one().rank() == M.dim


def test_jordan_blocks():
    # a Jordan block of size p is free; smaller blocks have cohomology 1 in every degree
    p = 5
    for size in range(1, p + 1):
        mat = [[1 if i == j or i == j + 1 else 0 for j in range(size)] for i in range(size)]
        expect = 0 if size == p else 1
        assert cyclic_cohomology(GModule(p, mat), 3) == expect


def test_g_module_of_cohomology():
    A = build_A(3)
    assert g_module_of_cohomology(A, 0).matrix == [[1]]
    assert g_module_of_cohomology(A, 1).matrix == [[1, 0], [1, 1]]
    M2 = g_module_of_cohomology(A, 2)
    assert M2.dim == 3
    with pytest.raises(BudgetExceeded):
        g_module_of_cohomology(A, 4)


def test_e2_page():
    page = e2_page(3, 4, 2)
    assert page.rows()[0] == [1] * 5
    assert page[(1, 0)] == 1 and page[(0, 1)] == 1
    assert page.total(1) == 2
    assert "q\\s" in page.format()


def test_convergence_inequality():
    r0, r1, r2 = (convergence_check(3, n) for n in range(3))
    assert (r0.smash_dim, r0.e2_total) == (1, 1)
    assert (r1.smash_dim, r1.e2_total) == (2, 2) and r1.equality
    assert r2.ok and r2.smash_dim == 5 and r2.e2_total == 5
    assert issubclass(ConvergenceError, AssertionError)
