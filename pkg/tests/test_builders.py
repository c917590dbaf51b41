from __future__ import annotations

import math

import pytest

from sylprob.builders import (
    Alt,
    Cyclic,
    Dihedral,
    DirectProduct,
    FromGenerators,
    InvolutionExample,
    Power,
    PSL2,
    Sym,
    build,
    build_expression,
    direct_product,
    parse_expression,
)
from sylprob.corpus import builtin_corpus
from sylprob.errors import ParseError
from sylprob.structure import element_orders, fitting_subgroup, has_element_of_order

import oracles as O


@pytest.mark.parametrize("expr,order", [
    (Sym(4), 24), (Alt(5), 60), (Cyclic(7), 7), (Dihedral(4), 8), (Dihedral(15), 30),
    (PSL2(4), 60), (PSL2(5), 60), (PSL2(7), 168), (PSL2(8), 504), (PSL2(9), 360),
    (PSL2(11), 660), (PSL2(13), 1092), (InvolutionExample(2), 60),
    (InvolutionExample(3), 3 * 5 * 7 * 8), (Power(Sym(3), 2), 36),
    (DirectProduct((Sym(5), Power(Sym(3), 2))), 4320),
])
def test_predicted_orders(expr, order):
    assert expr.expected_order() == order
    assert build(expr).order == order


def test_psl2_acts_on_projective_line():
    g = build(PSL2(7))
    assert g.degree == 8
    assert build(PSL2(8)).degree == 9


@pytest.mark.parametrize("entry", builtin_corpus(), ids=lambda e: e.label)
def test_corpus_orders_predicted(entry):
    e = parse_expression(entry.expr)
    assert build_expression(entry.expr).order == e.expected_order()


def test_direct_product_examples():
    s3 = build(Sym(3))
    one = direct_product([s3])
    assert one.order == 6 and one.degree == 3
    assert direct_product([s3, s3]).order == 36
    assert direct_product([s3, s3]).degree == 6


def test_direct_product_exposes_blocks():
    g = build_expression("Sym(5) * Pow(Sym(3), 2)")
    blocks = g.origin.blocks
    assert [(b.order, off) for b, off in blocks] == [(120, 0), (36, 5)]


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_involution_example_structure(s):
    g = build(InvolutionExample(s))
    primes = (3, 5, 7, 11)[:s]
    assert g.order == math.prod(primes) * 2 ** s
    f = fitting_subgroup(g)
    assert f.order == math.prod(primes)
    assert g.order // f.order == 2 ** s
    # each involution inverts exactly one rotation and centralizes the others
    gens = g.generators
    rotations = [x for x in gens if x.order() > 2]
    involutions = [x for x in gens if x.order() == 2]
    assert len(rotations) == len(involutions) == s
    for a in involutions:
        inverted = [r for r in rotations if r.conjugate(a) == ~r]
        fixed = [r for r in rotations if a.commutes_with(r)]
        assert len(inverted) == 1 and len(fixed) == s - 1


def test_involution_example_two_has_fitting_15():
    g = build_expression("InvolutionExample(2)")
    assert g.order == 60
    assert fitting_subgroup(g).order == 15


def test_involution_example_range():
    with pytest.raises(ValueError):
        build(InvolutionExample(0))


def test_psl27_no_element_of_order_6():
    g = build_expression("PSL2(7)")
    census = element_orders(g)
    assert 6 not in set(census.tolist())
    assert not has_element_of_order(g, 6)
    assert sorted(set(census.tolist())) == [1, 2, 3, 4, 7]
    # the brute-force census agrees
    elems = O.closure(g.generators, g.degree)
    assert {O.order_of(x) for x in elems} == set(census.tolist())


@pytest.mark.parametrize("text,expected", [
    ("Sym(5)", Sym(5)),
    ("C(12)", Cyclic(12)),
    ("D(8)", Dihedral(8)),
    ("Pow(Sym(3), 2)", Power(Sym(3), 2)),
    ("Sym(5) * Sym(3)", DirectProduct((Sym(5), Sym(3)))),
    ('Perm(deg=4; gens="(1 2 3 4), (1 3)")', FromGenerators(4, ("(1 2 3 4)", "(1 3)"))),
])
def test_parser(text, expected):
    assert parse_expression(text) == expected


@pytest.mark.parametrize("text", ["Sym(5) * Pow(Sym(3), 2)", "InvolutionExample(3)", "PSL2(7)",
                                  'Perm(deg=4; gens="(1 2 3 4), (1 3)")'])
def test_parser_roundtrip(text):
    e = parse_expression(text)
    assert parse_expression(str(e)) == e


@pytest.mark.parametrize("text", ["Sym(", "Foo(3)", "Sym(5) *", "PSL2(6)", "Sym(0)", "C(3) C(4)",
                                  'Perm(deg=3; gens="(1 4)")', ""])
def test_parser_errors(text):
    with pytest.raises(ParseError):
        build_expression(text)


def test_from_generators():
    g = build_expression('Perm(deg=4; gens="(1 2 3 4), (1 3)")')
    assert g.order == 8
