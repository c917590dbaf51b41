"""Group expressions and the constructors that turn them into permutation groups.

Expression grammar (whitespace-insensitive, case-sensitive keywords)::

    Sym(5)  Alt(6)  C(12)  D(8)  PSL2(7)  Sp62  InvolutionExample(4)
    A * B   Pow(A, 3)   (A)
    Perm(deg=5; gens="(1 2 3)(4 5), (1 2)")

``D(n)`` is the dihedral group of order ``2n`` acting on the n-gon.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError
from .fields import field_of_order, prime_power
from .group import PermutationGroup
from .perm import Permutation, _mk, parse_cycles

ODD_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


class GroupExpression:
    """Base class of the construction language."""

    def build(self) -> PermutationGroup:
        return build(self)

    def expected_order(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Sym(GroupExpression):
    n: int

    def __str__(self):
        return f"Sym({self.n})"

    def expected_order(self):
        return math.factorial(self.n)


@dataclass(frozen=True)
class Alt(GroupExpression):
    n: int

    def __str__(self):
        return f"Alt({self.n})"

    def expected_order(self):
        return max(1, math.factorial(self.n) // 2)


@dataclass(frozen=True)
class Cyclic(GroupExpression):
    n: int

    def __str__(self):
        return f"C({self.n})"

    def expected_order(self):
        return self.n


@dataclass(frozen=True)
class Dihedral(GroupExpression):
    n: int  # order 2n

    def __str__(self):
        return f"D({self.n})"

    def expected_order(self):
        return 2 * self.n


@dataclass(frozen=True)
class PSL2(GroupExpression):
    q: int

    def __str__(self):
        return f"PSL2({self.q})"

    def expected_order(self):
        q = self.q
        return q * (q * q - 1) // math.gcd(2, q - 1)


@dataclass(frozen=True)
class Sp62(GroupExpression):
    def __str__(self):
        return "Sp62"

    def expected_order(self):
        return 1451520


@dataclass(frozen=True)
class DirectProduct(GroupExpression):
    factors: tuple[GroupExpression, ...]

    def __str__(self):
        return " * ".join(_wrap(f) for f in self.factors)

    def expected_order(self):
        return math.prod(f.expected_order() for f in self.factors)


@dataclass(frozen=True)
class Power(GroupExpression):
    expr: GroupExpression
    t: int

    def __str__(self):
        return f"Pow({self.expr}, {self.t})"

    def expected_order(self):
        return self.expr.expected_order() ** self.t


@dataclass(frozen=True)
class InvolutionExample(GroupExpression):
    """``H = C_3 x C_5 x ... `` (first s odd primes) extended by ``A = 2^s``,
    where the i-th basis involution inverts the i-th cyclic factor only."""

    s: int

    def __str__(self):
        return f"InvolutionExample({self.s})"

    @property
    def primes(self) -> tuple[int, ...]:
        return ODD_PRIMES[: self.s]

    def expected_order(self):
        return math.prod(self.primes) * 2 ** self.s


@dataclass(frozen=True)
class FromGenerators(GroupExpression):
    degree: int
    gens: tuple[str, ...]

    def __str__(self):
        return f'Perm(deg={self.degree}; gens="{", ".join(self.gens)}")'

    def expected_order(self):
        return build(self).order


def _wrap(e: GroupExpression) -> str:
    return f"({e})" if isinstance(e, DirectProduct) else str(e)


@dataclass(frozen=True, eq=False)
class Origin:
    """How a group was built; lets structure code reuse known factors."""

    expr: GroupExpression
    blocks: tuple[tuple[PermutationGroup, int], ...] = ()


# ---------------------------------------------------------------------------
# constructors


def _cycle(degree: int, pts: Sequence[int]) -> Permutation:
    return Permutation.from_cycles(degree, [list(pts)])


def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("Sym(n) needs n >= 1")
    gens = []
    if n >= 2:
        gens = [_cycle(n, [0, 1]), _cycle(n, range(n))]
    return PermutationGroup(gens, n)


def alternating_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("Alt(n) needs n >= 1")
    gens = []
    if n >= 3:
        long = range(n) if n % 2 else range(1, n)
        gens = [_cycle(n, [0, 1, 2]), _cycle(n, long)]
    return PermutationGroup(gens, n)


def cyclic_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("C(n) needs n >= 1")
    return PermutationGroup([_cycle(n, range(n))] if n > 1 else [], n)


def dihedral_group(n: int) -> PermutationGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("D(n) needs n >= 3")
    rot = _cycle(n, range(n))
    refl = _mk([(-i) % n for i in range(n)])
    return PermutationGroup([rot, refl], n)


def psl2(q: int) -> PermutationGroup:
    """PSL(2, q) acting on the q + 1 points of the projective line."""
    prime_power(q)
    F = field_of_order(q)
    inf = q
    one = 1

    def act(m):
        a, b, c, d = m
        img = []
        for x in range(q + 1):
            # column vector (x, 1) or (1, 0) for the point at infinity
            vx, vy = (x, one) if x != inf else (one, 0)
            nx = F.add[F.mul[a][vx]][F.mul[b][vy]]
            ny = F.add[F.mul[c][vx]][F.mul[d][vy]]
            img.append(inf if ny == 0 else F.mul[nx][F.inv(ny)])
        return _mk(img)

    gens = [act((one, e, 0, one)) for e in F.additive_basis()]
    gens.append(act((0, one, F.neg(one), 0)))
    return PermutationGroup(gens, q + 1)


def _symplectic_form(u: int, v: int) -> int:
    # B(u, v) = sum_i u_i v_{i+3} + u_{i+3} v_i over GF(2)
    lo_u, hi_u = u & 7, u >> 3
    lo_v, hi_v = v & 7, v >> 3
    return (bin(lo_u & hi_v).count("1") + bin(hi_u & lo_v).count("1")) & 1


def sp62() -> PermutationGroup:
    """Sp(6, 2) on the 63 nonzero vectors of GF(2)^6, generated by transvections."""
    target = Sp62().expected_order()
    transvections = []
    for v in range(1, 64):
        img = [(x ^ v if _symplectic_form(x, v) else x) - 1 for x in range(1, 64)]
        transvections.append(_mk(img))
    G = PermutationGroup([], 63)
    for t in transvections:
        if not G.contains(t):
            G = G.extended(t)
            if G.order == target:
                break
    return PermutationGroup(G.generators, 63, chain_gens=G.chain.strong_generators)


def direct_product(gs: Sequence[PermutationGroup]) -> PermutationGroup:
    """Direct product acting on the disjoint union of the factors' domains."""
    if not gs:
        raise ValueError("direct_product needs at least one factor")
    degree = sum(g.degree for g in gs)
    gens = []
    blocks = []
    offset = 0
    for g in gs:
        blocks.append((g, offset))
        gens.extend(embed(p, offset, degree) for p in g.generators)
        offset += g.degree
    return PermutationGroup(gens, degree, origin=Origin(DirectProduct(()), tuple(blocks)))


def embed(p: Sequence[int], offset: int, degree: int) -> Permutation:
    """Place ``p`` on the points ``offset .. offset + len(p) - 1`` of a larger domain."""
    img = list(range(degree))
    for i, v in enumerate(p):
        img[offset + i] = offset + v
    return _mk(img)


def embed_subgroup(h: PermutationGroup, offset: int, degree: int) -> PermutationGroup:
    return PermutationGroup([embed(g, offset, degree) for g in h.generators], degree)


def involution_example(s: int) -> PermutationGroup:
    if not 1 <= s <= len(ODD_PRIMES):
        raise ValueError(f"InvolutionExample(s) needs 1 <= s <= {len(ODD_PRIMES)}")
    blocks = [dihedral_group(p) for p in ODD_PRIMES[:s]]
    G = direct_product(blocks)
    return G


def build(expr: GroupExpression) -> PermutationGroup:
    """Build the permutation group described by ``expr``.

    The result's order is checked against the family's predicted order.
    """
    if isinstance(expr, Sym):
        g = symmetric_group(expr.n)
    elif isinstance(expr, Alt):
        g = alternating_group(expr.n)
    elif isinstance(expr, Cyclic):
        g = cyclic_group(expr.n)
    elif isinstance(expr, Dihedral):
        g = dihedral_group(expr.n)
    elif isinstance(expr, PSL2):
        g = psl2(expr.q)
    elif isinstance(expr, Sp62):
        g = sp62()
    elif isinstance(expr, (DirectProduct, Power)):
        factors = expr.factors if isinstance(expr, DirectProduct) else (expr.expr,) * expr.t
        if not factors:
            raise ValueError("empty product")
        g = direct_product([build(f) for f in factors])
    elif isinstance(expr, InvolutionExample):
        g = involution_example(expr.s)
    elif isinstance(expr, FromGenerators):
        g = PermutationGroup([parse_cycles(expr.degree, s) for s in expr.gens], expr.degree)
        g.origin = Origin(expr)
        return g
    else:
        raise TypeError(f"not a group expression: {expr!r}")
    blocks = g.origin.blocks if g.origin is not None else ()
    g.origin = Origin(expr, blocks)
    if g.order != expr.expected_order():
        raise AssertionError(f"{expr} built with order {g.order}, expected {expr.expected_order()}")
    return g


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r'\s*(?:(?P<str>"[^"]*")|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()*,;=]))')

_UNARY = {"Sym": Sym, "Alt": Alt, "C": Cyclic, "D": Dihedral, "PSL2": PSL2,
          "InvolutionExample": InvolutionExample}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos} in {self.text!r}")
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None, kind=None):
        k, v = self.peek()
        if k is None or (value is not None and v != value) or (kind is not None and k != kind):
            want = value or kind
            raise ParseError(f"expected {want!r} but found {v!r} in {self.text!r}")
        self.i += 1
        return v

    def number(self) -> int:
        return int(self.take(kind="num"))

    def expr(self) -> GroupExpression:
        terms = [self.term()]
        while self.peek()[1] == "*":
            self.take("*")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else DirectProduct(tuple(terms))

    def term(self) -> GroupExpression:
        kind, val = self.peek()
        if val == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        name = self.take(kind="name")
        if name == "Sp62":
            return Sp62()
        if name in _UNARY:
            self.take("(")
            n = self.number()
            self.take(")")
            return _UNARY[name](n)
        if name == "Pow":
            self.take("(")
            e = self.expr()
            self.take(",")
            t = self.number()
            self.take(")")
            if t < 1:
                raise ParseError("Pow exponent must be positive")
            return Power(e, t)
        if name == "Perm":
            self.take("(")
            self.take("deg")
            self.take("=")
            deg = self.number()
            self.take(";")
            self.take("gens")
            self.take("=")
            body = self.take(kind="str")[1:-1]
            self.take(")")
            gens = tuple(g.strip() for g in re.findall(r"(?:\([^()]*\))+|\(\)", body))
            rest = re.sub(r"(?:\([^()]*\))+|\(\)", "", body).replace(",", "").strip()
            if rest:
                raise ParseError(f"bad generator list {body!r}")
            for g in gens:
                parse_cycles(deg, g)
            return FromGenerators(deg, gens)
        raise ParseError(f"unknown group family {name!r}")


def parse_expression(text: str) -> GroupExpression:
    p = _Parser(text)
    e = p.expr()
    if p.peek()[0] is not None:
        raise ParseError(f"trailing input {p.peek()[1]!r} in {text!r}")
    _validate(e)
    return e


def _validate(e: GroupExpression) -> None:
    if isinstance(e, (Sym, Alt, Cyclic)) and e.n < 1:
        raise ParseError(f"{e}: parameter must be positive")
    if isinstance(e, Dihedral) and e.n < 3:
        raise ParseError(f"{e}: D(n) needs n >= 3")
    if isinstance(e, PSL2):
        try:
            prime_power(e.q)
        except ValueError:
            raise ParseError(f"{e}: q must be a prime power") from None
    if isinstance(e, InvolutionExample) and not 1 <= e.s <= len(ODD_PRIMES):
        raise ParseError(f"{e}: s must lie in 1..{len(ODD_PRIMES)}")
    for sub in getattr(e, "factors", ()):
        _validate(sub)
    if isinstance(e, Power):
        _validate(e.expr)


def build_expression(text: str) -> PermutationGroup:
    return build(parse_expression(text))
