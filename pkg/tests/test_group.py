from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sylprob import _arrays as ar
from sylprob.config import use_config
from sylprob.corpus import builtin_corpus
from sylprob.errors import BudgetExceeded, DegreeMismatch, NotASubgroup
from sylprob.group import (
    PermutationGroup,
    SubgroupHandle,
    centralizer,
    centralizer_of_subgroup,
    conjugate_subgroup,
    conjugates,
    contains,
    enumerate_elements,
    generated_subgroup,
    group_order,
    intersection,
    is_normal,
    normal_closure,
    normalizer,
)
from sylprob.perm import Permutation, parse_cycles
from sylprob.structure import sylow_subgroup

import oracles as O

SMALL = [e.expr for e in builtin_corpus() if e.expr != "InvolutionExample(5)"]


def P(deg, s):
    return parse_cycles(deg, s)


def G(deg, *gens):
    return generated_subgroup(deg, [P(deg, s) for s in gens])


@pytest.mark.parametrize("expr,order", [("Sym(5)", 120), ("PSL2(7)", 168), ("Alt(6)", 360)])
def test_group_order(group, expr, order):
    assert group_order(group(expr)) == order


def test_psl27_order_by_closure(group):
    g = group("PSL2(7)")
    assert len(O.closure(g.generators, g.degree)) == 168


def test_contains(group):
    a4 = group("Alt(4)")
    assert contains(a4, P(4, "(1 2 3)"))
    assert not contains(a4, P(4, "(1 2)"))
    assert contains(group("Sym(4)"), P(4, "(1 2)(3 4)"))
    with pytest.raises(DegreeMismatch):
        contains(a4, P(5, "(1 2 3)"))


def test_enumerate_small(group):
    assert len(set(enumerate_elements(group("C(6)")))) == 6
    s3 = {tuple(x) for x in enumerate_elements(group("Sym(3)"))}
    assert s3 == set(O.symmetric_set(3))


def test_enumeration_budget(group):
    with use_config(enumeration_budget=100):
        g = PermutationGroup(group("Sym(5)").generators)
        with pytest.raises(BudgetExceeded):
            list(enumerate_elements(g))


def test_generated_subgroup():
    assert generated_subgroup(3, []).order == 1
    assert G(3, "(1 2)", "(1 2 3)").order == 6
    assert G(5, "(1 2 3 4 5)", "(3 4 5)").order == 60


@pytest.mark.parametrize("expr", SMALL)
def test_chain_order_matches_enumeration(group, expr):
    g = group(expr)
    if g.order > 5000:
        pytest.skip("enumeration oracle limited to order 5000")
    elems = O.closure(g.generators, g.degree)
    assert len(elems) == g.order
    arr = g.elements_array()
    assert {tuple(r) for r in arr.tolist()} == set(elems)


@pytest.mark.parametrize("expr", ["Alt(5)", "PSL2(7)", "D(9)", "Sym(3) * Alt(4)", "Alt(6)"])
def test_membership_soundness(group, expr):
    g = group(expr)
    rng = random.Random(1)
    elems = O.closure(g.generators, g.degree)
    for x in list(elems)[:200]:
        assert g.contains(x)
    outside = 0
    for _ in range(200):
        x = list(range(g.degree))
        rng.shuffle(x)
        assert g.contains(x) == (tuple(x) in elems)
        outside += tuple(x) not in elems
    assert outside > 0


def test_centralizer_examples(group):
    s3, a5 = group("Sym(3)"), group("Alt(5)")
    assert centralizer(s3, P(3, "(1 2 3)")).order == 3
    assert centralizer(s3, s3.identity) == s3
    assert centralizer(a5, P(5, "(1 2)(3 4)")).order == 4
    with pytest.raises(NotASubgroup):
        centralizer(group("Alt(4)"), P(4, "(1 2)"))


def test_centralizer_of_subgroup(group):
    c12 = group("C(12)")
    assert centralizer_of_subgroup(c12, c12) == c12
    a5 = group("Alt(5)")
    p5 = sylow_subgroup(a5, 5)
    assert centralizer_of_subgroup(a5, p5) == p5
    s4 = group("Sym(4)")
    v4 = G(4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert centralizer_of_subgroup(s4, v4) == v4


def test_normalizer_examples(group):
    s3 = group("Sym(3)")
    assert normalizer(s3, G(3, "(1 2 3)")) == s3
    a5 = group("Alt(5)")
    assert normalizer(a5, sylow_subgroup(a5, 5)).order == 10
    assert normalizer(a5, a5) == a5


def test_normalizer_matches_brute_force(group):
    g = group("Sym(4)")
    h = G(4, "(1 2)")
    elems = O.closure(g.generators, 4)
    H = O.closure(h.generators, 4)
    expected = {x for x in elems if O.conjugate_set(H, x) == H}
    got = {tuple(r) for r in normalizer(g, h).elements_array().tolist()}
    assert got == expected


def test_conjugate_subgroup():
    h = G(3, "(1 2)")
    assert conjugate_subgroup(h, Permutation.identity(3)) == h
    assert conjugate_subgroup(h, P(3, "(2 3)")) == G(3, "(1 3)")
    assert conjugate_subgroup(h, P(3, "(1 2 3)")) == G(3, "(2 3)")
    with pytest.raises(DegreeMismatch):
        conjugate_subgroup(h, Permutation.identity(4))


def test_is_normal(group):
    assert is_normal(group("Sym(4)"), G(4, "(1 2)(3 4)", "(1 3)(2 4)"))
    assert not is_normal(group("Sym(3)"), G(3, "(1 2)"))
    c12 = group("C(12)")
    assert all(is_normal(c12, PermutationGroup([g ** k], 12)) for g in c12.generators for k in range(1, 12))
    with pytest.raises(NotASubgroup):
        is_normal(group("Alt(4)"), G(4, "(1 2)"))


def test_subgroup_handle(group):
    h = SubgroupHandle(group("Sym(4)"), G(4, "(1 2 3)"))
    assert h.index == 8
    with pytest.raises(NotASubgroup):
        SubgroupHandle(group("Alt(4)"), G(4, "(1 2)"))


def test_normal_closure_and_intersection(group):
    s4 = group("Sym(4)")
    assert normal_closure(s4, [P(4, "(1 2)(3 4)")]).order == 4
    assert normal_closure(s4, [P(4, "(1 2 3)")]).order == 12
    a = G(4, "(1 2)", "(3 4)")
    b = G(4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert intersection(a, b).order == 2


@pytest.mark.parametrize("expr", ["Sym(4)", "Alt(5)", "D(6)", "PSL2(7)", "Sym(5) * Sym(3)"])
def test_class_equation(group, expr):
    """|g| = |x^g| |C_g(x)| for every element."""
    g = group(expr)
    E = g.elements_array()
    for row in E:
        cls = np.unique(ar.row_keys(ar.conjugate_rows_of(row, E)))
        assert len(cls) * centralizer(g, row.tolist()).order == g.order


def test_conjugates_walk_counts_sylows(group):
    a5 = group("Alt(5)")
    assert sum(1 for _ in conjugates(a5, sylow_subgroup(a5, 5))) == 6
    assert sum(1 for _ in conjugates(a5, sylow_subgroup(a5, 2))) == 5


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["Sym(5)", "PSL2(8)", "Alt(6)"]))
def test_conjugation_preserves_order(seed, expr):
    g = _cached(expr)
    rng = random.Random(seed)
    h = generated_subgroup(g.degree, [g.random_element(rng)])
    x = g.random_element(rng)
    assert conjugate_subgroup(h, x).order == h.order


_CACHE = {}


def _cached(expr):
    from sylprob.builders import build_expression
    if expr not in _CACHE:
        _CACHE[expr] = build_expression(expr)
    return _CACHE[expr]


def test_orbit_lengths_and_order():
    g = G(6, "(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)")
    assert g.order == 18
    assert np.prod(g.chain.orbit_lengths()) == 18
