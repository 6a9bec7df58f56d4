import pytest
from hypothesis import given, settings, strategies as st

from skewcoh.algebras import build_B, presentation_A, presentation_B
from skewcoh.freealg import (
    CONFIRMED, DEGREE_CAPPED, FreeElement, MonomialOrder, complete, enumerate_normal_words,
    format_word, word_from_powers,
)
from skewcoh.presentation import ParseError, parse_element, parse_presentation

words = st.lists(st.integers(0, 1), max_size=7).map(tuple)


def ab_order():
    return presentation_B(3).order


def test_weighted_order_puts_b_above_a_powers():
    o = ab_order()
    a, b = (0,), (1,)
    assert o.compare(b, a * 10) == 1
    assert o.compare(a * 2, a + b) == -1
    assert o.compare(b + a, a + b) == 1


@given(words, words, words, words)
def test_order_is_monomial(u, v, x, y):
    o = ab_order()
    c = o.compare(u, v)
    assert o.compare(v, u) == -c
    assert (c == 0) == (u == v)
    assert o.compare(x + u + y, x + v + y) == c


def test_format_and_powers():
    names = ("a", "b")
    assert format_word((1, 1, 1, 0, 0), names) == "b^3a^2"
    assert format_word((), names) == "1"
    assert word_from_powers(names, ("b", 2), ("a", 1)) == (1, 1, 0)


def test_parse_element_arithmetic():
    names = ("a", "b")
    f = parse_element("b*a - a*b - (1/2)*a^2", names, 3)
    assert f.terms == {(1, 0): 1, (0, 1): 2, (0, 0): 1}
    g = parse_element("(a + b)^2 - a^2 - b^2", names, 5)
    assert g.terms == {(0, 1): 1, (1, 0): 1}
    assert parse_element("-a + 3", names, 7).terms == {(0,): 6, (): 3}
    for bad in ("a +", "c*a", "a / b", "a ^ b", "a $ b", ""):
        with pytest.raises(ParseError):
            parse_element(bad, names, 3)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(words, st.integers(1, 4), max_size=5), st.sampled_from([5, 7]))
def test_format_parse_round_trip(terms, p):
    o = ab_order()
    f = FreeElement(p, terms)
    if not f:
        return
    assert parse_element(f.format(o.names, o), o.names, p) == f


def test_B_is_one_element_pbw_basis():
    pres = presentation_B(5)
    gb = complete(pres.relations, pres.order)
    assert gb.status == CONFIRMED
    assert gb.tips == [(1, 0)]
    assert gb.overlaps() == []
    assert gb.is_pbw()


def test_A_tips():
    for p in (3, 5, 7):
        pres = presentation_A(p)
        gb = complete(pres.relations, pres.order)
        assert gb.confirmed
        assert sorted(format_word(t, gb.names) for t in gb.tips) == sorted(["ba", f"a^{p}", f"b^{p}"])
        assert len(enumerate_normal_words(gb)) == p * p


def test_capped_completion_is_flagged():
    o = MonomialOrder(("a", "b"), kind="deglex", precedence=("b", "a"))
    gb = complete([parse_element("a*b*a - b*a*b", o.names, 3)], o, degree_cap=8)
    assert gb.status == DEGREE_CAPPED
    assert gb.unchecked_overlaps > 0
    with pytest.raises(ValueError):
        complete([parse_element("a*b*a", o.names, 3)], o, degree_cap=2)


@settings(max_examples=80, deadline=None)
@given(words, words, words)
def test_normal_form_is_associative_in_B(u, v, w):
    B = build_B(5)
    gb = B.gb
    left = B.mul(B.mul({u: 1}, {v: 1}), {w: 1})
    right = B.mul({u: 1}, B.mul({v: 1}, {w: 1}))
    assert left == right
    assert all(gb.is_normal(x) for x in left)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(words, st.integers(1, 6), max_size=4))
def test_certificate_reconstructs_the_input(terms):
    p = 7
    pres = presentation_A(p)
    gb = complete(pres.relations, pres.order)
    f = FreeElement(p, terms)
    nf, steps = gb.normal_form_with_certificate(f)
    acc = nf
    for c, left, i, right in steps:
        acc = acc + c * (FreeElement.word(p, left) * gb.relations[i] * FreeElement.word(p, right))
    assert acc == f
    assert gb.normal_form(nf) == nf


def test_normal_form_examples():
    B = build_B(3)
    assert B.normal_form(parse_element("b*a", B.names, 3)) == {(0, 1): 1, (0, 0): 2}
    B5 = build_B(5)
    assert B5.normal_form(parse_element("b*a^2", B5.names, 5)) == {(0, 0, 1): 1, (0, 0, 0): 1}


def test_presentation_file_round_trip():
    pres = presentation_A(5)
    again = parse_presentation(pres.to_text())
    assert again.p == 5 and again.names == pres.names
    assert [f for f in again.relations] == pres.relations
    assert again.order.describe() == pres.order.describe()


def test_presentation_parse_errors():
    with pytest.raises(ParseError):
        parse_presentation("field: 3\n")
    with pytest.raises(ParseError):
        parse_presentation("field: 3\ngenerators: a\nbogus: 1\n")
    with pytest.raises(ValueError):
        parse_presentation("field: 4\ngenerators: a\n")
