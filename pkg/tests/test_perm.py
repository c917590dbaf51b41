from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sylprob.errors import DegreeMismatch, ParseError
from sylprob.perm import Permutation, compose, format_cycles, inverse, parse_cycles

from oracles import mul


def perms(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(range(n)).map(Permutation))


def same_degree_pair(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)),
                            st.permutations(range(n)))).map(lambda t: tuple(map(Permutation, t)))


def test_transposition_squared_is_identity():
    t = parse_cycles(2, "(1 2)")
    assert compose(t, t).is_identity()


def test_three_cycle_squared():
    c = parse_cycles(3, "(1 2 3)")
    assert compose(c, c) == parse_cycles(3, "(1 3 2)")


def test_left_to_right_convention():
    # (1 2) first, then (2 3): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
    r = compose(parse_cycles(3, "(1 2)"), parse_cycles(3, "(2 3)"))
    assert r == parse_cycles(3, "(1 3 2)")
    assert format_cycles(r) == "(1 3 2)"


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(2), Permutation.identity(3))


@pytest.mark.parametrize("text,degree,expected", [
    ("(1 2)", 3, (1, 0, 2)),
    ("", 4, (0, 1, 2, 3)),
    ("(1 2 3)(4 5)", 5, (1, 2, 0, 4, 3)),
    ("(1,2,3)", 3, (1, 2, 0)),
    (" ( 2 3 ) ", 3, (0, 2, 1)),
])
def test_parse_cycles(text, degree, expected):
    assert tuple(parse_cycles(degree, text)) == expected


def test_parsed_order_six():
    assert parse_cycles(5, "(1 2 3)(4 5)").order() == 6


@pytest.mark.parametrize("bad", ["(1 2", "1 2)", "(1 1)", "(1 9)", "(0 1)", "(a b)", "(1 2)(2 3)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_cycles(4, bad)


def test_not_a_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@given(perms())
def test_inverse_roundtrip(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


@given(perms())
def test_cycle_string_roundtrip(p):
    assert parse_cycles(len(p), format_cycles(p)) == p


@given(same_degree_pair())
def test_associative_and_matches_oracle(t):
    a, b, c = t
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert tuple(compose(a, b)) == mul(tuple(a), tuple(b))


@given(perms())
def test_order_and_power(p):
    k = p.order()
    assert (p ** k).is_identity()
    assert all(not (p ** j).is_identity() for j in range(1, k))
    assert p ** -1 == inverse(p)
