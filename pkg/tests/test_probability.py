from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sylprob.builders import build_expression
from sylprob.errors import DegreeMismatch, NotNormal
from sylprob.group import conjugate_subgroup, generated_subgroup
from sylprob.perm import parse_cycles
from sylprob.probability import (
    InconsistentCount,
    _centralizer_sum,
    _rows,
    build_h0,
    check_product_rule,
    check_quotient_inequality,
    class_size_bound,
    lemma_exponent_bound,
    omega_product,
    omega_set,
    pr,
    pr_no_pq_formula,
    pr_star,
    pr_star_product,
    qualifying_pairs,
    sylow_pair_bound,
    xy_inequality_check,
)
from sylprob.structure import PrimeSet, has_element_of_order, p_core, sylow_subgroup

import oracles as O


def G(deg, *gens):
    return generated_subgroup(deg, [parse_cycles(deg, s) for s in gens])


def as_set(h):
    return frozenset(tuple(r) for r in h.elements_array().tolist())


# -- pr ------------------------------------------------------------------

def test_pr_examples(group):
    assert pr(G(3, "(1 2)"), G(3, "(1 2 3)")) == F(2, 3)
    c = group("C(12)")
    assert pr(c, c) == 1
    a5 = group("Alt(5)")
    assert pr(sylow_subgroup(a5, 2), sylow_subgroup(a5, 5)) == F(2, 5)


def test_pr_on_element_sets():
    xs = [parse_cycles(3, "(1 2)"), parse_cycles(3, "")]
    ys = [parse_cycles(3, "(1 2 3)")]
    assert pr(xs, ys) == F(1, 2)


def test_pr_errors():
    with pytest.raises(DegreeMismatch):
        pr(G(3, "(1 2)"), G(4, "(1 2)"))
    with pytest.raises(ValueError):
        pr([], G(3, "(1 2)"))


@pytest.mark.parametrize("expr", ["Sym(4)", "Alt(5)", "D(6)", "PSL2(7)", "InvolutionExample(2)"])
def test_pr_matches_brute_force(group, expr):
    g = group(expr)
    for p, q in qualifying_pairs(O.primes_of(g.order), PrimeSet.all(), PrimeSet.all()):
        P, Q = sylow_subgroup(g, p), sylow_subgroup(g, q)
        assert pr(P, Q, verify=True) == O.brute_pr(as_set(P), as_set(Q))
    assert pr(g, g) == O.brute_pr(as_set(g), as_set(g))


def test_pr_symmetry_and_centralizer_sum(group):
    g = group("Sym(5)")
    for p, q in ((2, 3), (2, 5), (3, 5)):
        P, Q = sylow_subgroup(g, p), sylow_subgroup(g, q)
        assert pr(P, Q) == pr(Q, P)
        assert _centralizer_sum(P, _rows(P), _rows(Q)) == pr(P, Q)


def test_inconsistent_count_is_assertion_error():
    assert issubclass(InconsistentCount, AssertionError)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from(["Sym(5)", "PSL2(7)", "Alt(6)", "Sym(3) * Alt(4)"]))
def test_conjugation_invariance(seed, expr):
    g = build_expression(expr)
    rng = random.Random(seed)
    P, Q = sylow_subgroup(g, 2), sylow_subgroup(g, 3)
    x = g.random_element(rng)
    assert pr(conjugate_subgroup(P, x), conjugate_subgroup(Q, x)) == pr(P, Q)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_monotonicity_under_subgroups(seed):
    g = build_expression("Sym(5)")
    rng = random.Random(seed)
    H = generated_subgroup(5, [g.random_element(rng), g.random_element(rng)])
    H0 = generated_subgroup(5, [H.random_element(rng)])
    K = generated_subgroup(5, [g.random_element(rng)])
    assert pr(H0, K) >= pr(H, K)


# -- closed formula -------------------------------------------------------

@pytest.mark.parametrize("a,b,expected", [(4, 5, F(2, 5)), (8, 9, F(2, 9)), (9, 1, F(1)), (2, 3, F(2, 3))])
def test_pr_no_pq_formula(a, b, expected):
    assert pr_no_pq_formula(a, b) == expected


@pytest.mark.parametrize("a,b", [(4, 8), (6, 5), (3, 9)])
def test_pr_no_pq_formula_errors(a, b):
    with pytest.raises(ValueError):
        pr_no_pq_formula(a, b)


@pytest.mark.parametrize("expr", ["Alt(5)", "PSL2(7)", "PSL2(8)", "Alt(6)", "Sym(5)", "PSL2(11)"])
def test_no_pq_formula_holds_when_no_pq_elements(group, expr):
    g = group(expr)
    for p, q in qualifying_pairs(O.primes_of(g.order), PrimeSet.all(), PrimeSet.all()):
        if has_element_of_order(g, p * q):
            continue
        expected = pr_no_pq_formula(sylow_subgroup(g, p).order, sylow_subgroup(g, q).order)
        assert omega_set(g, p, q).values == [expected]


# -- Omega and pr* ---------------------------------------------------------

def test_omega_sym5(group):
    g = group("Sym(5)")
    assert omega_set(g, 2, 3).values == [F(5, 12), F(1, 2)]
    assert omega_set(g, 2, 5).values == [F(3, 10)]
    assert omega_set(g, 3, 5).values == [F(7, 15)]
    assert omega_set(g, 3, 2).values == [F(5, 12), F(1, 2)]


def test_omega_matches_brute_sweep(group):
    g = group("Sym(4)")
    elems = O.closure(g.generators, 4)
    Ps = O.all_conjugates(elems, as_set(sylow_subgroup(g, 2)))
    Qs = O.all_conjugates(elems, as_set(sylow_subgroup(g, 3)))
    brute = sorted({O.brute_pr(P, Q) for P in Ps for Q in Qs})
    assert omega_set(g, 2, 3).values == brute


def test_omega_witnesses_attain_values(group):
    rep = omega_set(group("Sym(5)"), 2, 3)
    for v in rep.values:
        w = rep.witness_pairs[v]
        assert pr(w.P, w.Q) == v
        assert w.P.order == 8 and w.Q.order == 3
    d = rep.as_dict()
    assert d["values"] == ["5/12", "1/2"]


def test_omega_trivial_sylow(group):
    assert omega_set(group("Sym(4)"), 2, 5).values == [F(1)]


@pytest.mark.parametrize("expr,pi1,pi2,expected", [
    ("Sym(5)", "*", "*", F(3, 10)),
    ("Alt(5)", "*", "*", F(2, 5)),
    ("Alt(5)", "2", "5'", F(1, 2)),
    ("Alt(5)", "2'", "2'", F(7, 15)),
    ("Alt(5)", "2", "2'", F(2, 5)),
    ("Alt(5)", "2", "3'", F(2, 5)),
    ("C(30)", "*", "*", F(1)),
    ("Sym(3)", "*", "*", F(2, 3)),
    ("D(4)", "*", "*", F(1)),
    ("Sym(4)", "3", "3", F(1)),
])
def test_pr_star(group, expr, pi1, pi2, expected):
    rep = pr_star(group(expr), PrimeSet.parse(pi1), PrimeSet.parse(pi2))
    assert rep.value == expected
    if rep.per_pair:
        assert rep.value == min(m.value for m in rep.per_pair.values())


def test_qualifying_pairs():
    assert qualifying_pairs([2, 3, 5], PrimeSet.all(), PrimeSet.all()) == [(2, 3), (2, 5), (3, 5)]
    assert qualifying_pairs([2, 3, 5], PrimeSet.single(2), PrimeSet.complement(5)) == [(2, 3)]
    assert qualifying_pairs([3], PrimeSet.all(), PrimeSet.all()) == []


def test_product_rule_examples(group):
    s5, s3 = group("Sym(5)"), group("Sym(3)")
    assert omega_product([s5, s3], 2, 3) == [F(5, 18), F(1, 3)]
    assert omega_set(group("Sym(5) * Sym(3)"), 2, 3).values == [F(5, 18), F(1, 3)]
    assert pr_star_product([s5, s3, s3]) == F(2, 9)
    trivial = generated_subgroup(3, [])
    P, Q = sylow_subgroup(s5, 2), sylow_subgroup(s5, 3)
    assert check_product_rule(s5, s3, P, trivial, Q, trivial)
    assert check_product_rule(s5, s3, P, sylow_subgroup(s3, 2), Q, sylow_subgroup(s3, 3))


# -- bounds ---------------------------------------------------------------

def test_class_size_bound_examples(group):
    c = group("C(12)")
    assert class_size_bound(c, c) == 1
    s3 = group("Sym(3)")
    P2, P3 = sylow_subgroup(s3, 2), sylow_subgroup(s3, 3)
    assert class_size_bound(P2, P3) == F(2, 3) == pr(P2, P3)
    a5 = group("Alt(5)")
    P2, P5 = sylow_subgroup(a5, 2), sylow_subgroup(a5, 5)
    assert class_size_bound(P2, P5) == F(2, 5) == pr(P2, P5)


@pytest.mark.parametrize("expr", ["Sym(5)", "PSL2(7)", "Sym(4)", "D(12)", "InvolutionExample(3)"])
def test_class_size_bound_holds(group, expr):
    g = group(expr)
    for p, q in qualifying_pairs(O.primes_of(g.order), PrimeSet.all(), PrimeSet.all()):
        P, Q = sylow_subgroup(g, p), sylow_subgroup(g, q)
        assert pr(P, Q) <= class_size_bound(P, Q)
        assert pr(Q, P) <= class_size_bound(Q, P)
        assert pr(P, Q) <= sylow_pair_bound(P, Q, p, q)


@pytest.mark.parametrize("x,y", [(1, 1), (2, 3), (100, 100)])
def test_xy_examples(x, y):
    assert xy_inequality_check(x, y)


@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
def test_xy_property(x, y):
    assert xy_inequality_check(x, y)


def test_lemma_exponent_bound():
    assert lemma_exponent_bound(F(1)) == 2 ** 6
    assert lemma_exponent_bound(F(1, 2)) == 4 ** 12
    assert lemma_exponent_bound(F(4, 5)) == 1526  # ceil((5/2) ** ceil(30/4))


def test_build_h0_examples(group):
    c = group("C(12)")
    r = build_h0(c, c, F(1))
    assert r.H0 == c and r.index == 1 and len(r.X) == 12
    a5 = group("Alt(5)")
    P2, P3 = sylow_subgroup(a5, 2), sylow_subgroup(a5, 3)
    r = build_h0(P2, P3, F(1, 2))
    assert r.H0 == P2 and len(r.X) == 4
    s3 = group("Sym(3)")
    r = build_h0(sylow_subgroup(s3, 2), sylow_subgroup(s3, 3), F(2, 3))
    assert r.index == 1 and r.H0.order == 2


def test_build_h0_precondition(group):
    a5 = group("Alt(5)")
    with pytest.raises(ValueError):
        build_h0(sylow_subgroup(a5, 2), sylow_subgroup(a5, 5), F(1, 2))


def test_quotient_inequality_examples(group):
    s4 = group("Sym(4)")
    P2, P3 = sylow_subgroup(s4, 2), sylow_subgroup(s4, 3)
    assert check_quotient_inequality(s4, p_core(s4, 2), P2, P3)
    assert check_quotient_inequality(s4, generated_subgroup(4, []), P2, P3)
    assert check_quotient_inequality(s4, s4, P2, P3)
    with pytest.raises(NotNormal):
        check_quotient_inequality(s4, G(4, "(1 2)"), P2, P3)
