import pytest

from skewcoh.algebras import build_A, build_S, build_smash_p
from skewcoh.anick import AnickResolution, chain_degree_profile, chains, closed_form_chains, ext_dims
from skewcoh.barcoh import ext_dim_oracle
from skewcoh.verify import expected_profile


def test_low_chains_for_A3():
    A = build_A(3)
    assert sorted(chains(A.gb, 2).format(A.names)) == ["a^3", "b^3", "ba"]
    assert sorted(chains(A.gb, 3).format(A.names)) == ["a^4", "b^3a", "b^4", "ba^3"]
    assert sorted(chains(A.gb, 4).format(A.names)) == ["a^6", "b^3a^3", "b^4a", "b^6", "ba^4"]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_chains_match_closed_form(p):
    A = build_A(p)
    for n in range(9):
        cs = chains(A.gb, n)
        assert set(cs.format(A.names)) == closed_form_chains(p, n)
        assert len(cs) == n + 1
        assert chain_degree_profile(cs) == expected_profile(p, n)


def test_second_differential():
    res = AnickResolution(build_A(3), 2)
    i = res.chains[2].index[(1, 0)]
    assert res.format_differential(2, i) == "b(x)[a] + 2*a(x)[b] + a(x)[a]"


@pytest.mark.parametrize("p", [3, 5])
def test_resolution_is_a_minimal_complex(p):
    res = AnickResolution(build_A(p), 6)
    for n in range(1, 7):
        assert res.d_squared_zero(n)
        assert res.preserves_degree(n)
    ed = ext_dims(res, 5)
    assert ed.dims == [1, 2, 3, 4, 5, 6]
    assert all(ed.minimal)


def test_resolution_is_exact():
    res = AnickResolution(build_A(3), 5)
    assert res.homology_dims(4) == [1, 0, 0, 0, 0]


def test_associated_graded_has_same_dims():
    for p in (3, 5):
        a = ext_dims(AnickResolution(build_A(p), 9), 8).dims
        s = ext_dims(AnickResolution(build_S(p), 9), 8).dims
        assert a == s == list(range(1, 10))


def test_smash_product_resolution_agrees_with_bar_oracle():
    sm = build_smash_p(3)
    res = AnickResolution(sm, 3)
    assert [len(c) for c in res.chains] == [1, 3, 6, 10]
    for n in range(1, 4):
        assert res.d_squared_zero(n)
    ed = ext_dims(res, 2)
    assert ed.dims == [ext_dim_oracle(sm, n) for n in range(3)] == [1, 2, 5]
    assert ed.minimal[0] and not all(ed.minimal)


def test_ext_dims_needs_one_more_degree():
    res = AnickResolution(build_A(3), 3)
    with pytest.raises(ValueError):
        ext_dims(res, 3)
