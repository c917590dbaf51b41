"""Sylow subgroups, cores, quotients, the Fitting series and related predicates.

All routines work on enumerable groups: normalizers and cores are found by
vectorized scans over the ambient element array.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _arrays as ar
from .builders import embed_subgroup
from .config import get_config
from .errors import BudgetExceeded, NotNormal, NotSoluble, SearchFailed
from .group import (
    PermutationGroup,
    _require_subgroup,
    conjugate_subgroup,
    intersection,
    is_normal,
    normal_closure,
    normalizer,
    trivial_group,
)
from .perm import Permutation, _mk, compose, inverse

# ---------------------------------------------------------------------------
# arithmetic helpers


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_divisors(n) == [n]


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def _is_pi_number(n: int, primes: "PrimeSet") -> bool:
    return all(primes.contains(r) for r in prime_divisors(n))


# ---------------------------------------------------------------------------
# prime sets


@dataclass(frozen=True)
class PrimeSet:
    """A set of primes: ``all``, ``odd`` (= 2'), ``single``, ``complement`` or ``explicit``."""

    kind: str
    primes: tuple[int, ...] = ()

    KINDS = ("all", "odd", "single", "complement", "explicit")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown prime-set kind {self.kind!r}")
        if self.kind in ("single", "complement") and len(self.primes) != 1:
            raise ValueError(f"{self.kind} prime set needs exactly one prime")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", tuple(sorted(set(self.primes))))

    @classmethod
    def all(cls) -> "PrimeSet":
        return cls("all")

    @classmethod
    def odd(cls) -> "PrimeSet":
        return cls("odd")

    @classmethod
    def single(cls, p: int) -> "PrimeSet":
        return cls("single", (p,))

    @classmethod
    def complement(cls, p: int) -> "PrimeSet":
        return cls("complement", (p,))

    @classmethod
    def explicit(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls("explicit", tuple(primes))

    def contains(self, r: int) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "odd":
            return r != 2
        if self.kind == "complement":
            return r != self.primes[0]
        return r in self.primes

    __contains__ = contains

    def restrict(self, primes: Iterable[int]) -> list[int]:
        return [r for r in primes if self.contains(r)]

    def __str__(self) -> str:
        if self.kind == "all":
            return "*"
        if self.kind == "odd":
            return "2'"
        if self.kind == "single":
            return str(self.primes[0])
        if self.kind == "complement":
            return f"{self.primes[0]}'"
        return "{" + ",".join(map(str, self.primes)) + "}"

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        """Parse ``*``, ``2``, ``2'``, ``odd`` or ``{2,3}``."""
        t = text.strip().replace("′", "'")
        if t in ("*", "all"):
            return cls.all()
        if t == "odd":
            return cls.odd()
        if t.startswith("{") and t.endswith("}"):
            body = t[1:-1].strip()
            items = [x.strip() for x in body.split(",")] if body else []
            if not all(x.isdigit() for x in items):
                raise ValueError(f"bad prime set {text!r}")
            return cls.explicit(int(x) for x in items)
        if t.endswith("'") and t[:-1].isdigit():
            p = int(t[:-1])
            return cls.odd() if p == 2 else cls.complement(p)
        if t.isdigit():
            return cls.single(int(t))
        raise ValueError(f"bad prime set {text!r}")


# ---------------------------------------------------------------------------
# Sylow subgroups and cores


def _p_elements_outside(rows: np.ndarray, p: int, P: PermutationGroup,
                        orders: np.ndarray | None = None) -> np.ndarray:
    """p-parts of rows whose p-part lies outside ``P`` (possibly empty)."""
    if orders is None:
        orders = ar.element_orders(rows)
    found = []
    for o in np.unique(orders):
        o = int(o)
        if o % p:
            continue
        sel = rows[orders == o]
        z = ar.power_rows(sel, o // p_part(o, p))
        if P.is_trivial():
            keep = ~ar.identity_mask(z)
        else:
            keep = ~ar.isin_rows(z, P.elements_array())
        if keep.any():
            found.append(z[keep])
            break
    return found[0] if found else rows[:0]


def sylow_subgroup(g: PermutationGroup, p: int) -> PermutationGroup:
    """A Sylow ``p``-subgroup of ``g`` (trivial when ``p`` does not divide the order).

    Ascent: while ``P`` is not Sylow, ``N_G(P)/P`` has order divisible by
    ``p``, so some ``y`` in ``N_G(P)`` has a ``p``-part outside ``P``;
    adjoining it gives a larger ``p``-subgroup.
    """
    key = ("sylow", p)
    if key in g._cache:
        return g._cache[key]
    target = p_part(g.order, p)
    P = trivial_group(g.degree)
    rng = np.random.default_rng(p)
    while P.order < target:
        N = normalizer(g, P)
        E = N.elements_array()
        z = None
        # a few random probes first, then an exhaustive scan
        for _ in range(3):
            idx = rng.integers(0, len(E), size=min(len(E), 256))
            cand = _p_elements_outside(E[idx], p, P)
            if len(cand):
                z = cand[0]
                break
        if z is None:
            cand = _p_elements_outside(E, p, P)
            if not len(cand):
                raise SearchFailed(f"no {p}-element outside a non-Sylow {p}-subgroup")
            z = cand[0]
        P = P.extended(z.tolist())
    g._cache[key] = P
    return P


def p_core(g: PermutationGroup, p: int) -> PermutationGroup:
    """``O_p(g)``: the intersection of the conjugates of a Sylow ``p``-subgroup.

    Replaces ``C`` by ``C ∩ C^x`` over the generators until stable; the fixed
    point is normal, contained in every Sylow ``p``-subgroup, and contains
    every normal ``p``-subgroup.
    """
    key = ("core", p)
    if key in g._cache:
        return g._cache[key]
    C = core(g, sylow_subgroup(g, p))
    g._cache[key] = C
    return C


def core(g: PermutationGroup, h: PermutationGroup) -> PermutationGroup:
    """Largest normal subgroup of ``g`` contained in ``h``."""
    C = h
    changed = True
    while changed and not C.is_trivial():
        changed = False
        for x in g.generators:
            D = conjugate_subgroup(C, x)
            if D != C:
                C = intersection(C, D)
                changed = True
    return C


def fitting_subgroup(g: PermutationGroup) -> PermutationGroup:
    """``F(g)``, generated by the ``p``-cores for every prime divisor."""
    if "fitting" in g._cache:
        return g._cache["fitting"]
    gens = []
    for p in prime_divisors(g.order):
        gens.extend(p_core(g, p).generators)
    F = PermutationGroup(gens, g.degree)
    g._cache["fitting"] = F
    return F


def pi_core(g: PermutationGroup, primes: PrimeSet) -> PermutationGroup:
    """``O_pi(g)``: generated by the elements whose normal closure is a pi-group.

    Conjugacy classes are visited one representative at a time.
    """
    E = g.elements_array()
    K = trivial_group(g.degree)
    pending = np.ones(len(E), dtype=bool)
    orders = ar.element_orders(E)
    for i in range(len(E)):
        if not pending[i]:
            continue
        x = E[i]
        cls = ar.conjugate_rows_of(x, E)
        pending &= ~ar.isin_rows(E, cls)
        if orders[i] == 1 or not _is_pi_number(int(orders[i]), primes):
            continue
        xl = x.tolist()
        if K.contains(xl):
            continue
        M = normal_closure(g, [xl])
        if _is_pi_number(M.order, primes):
            K = K.extended(*M.generators)
    return K


# ---------------------------------------------------------------------------
# quotients


def _canonical(chain, g: Sequence[int]) -> Permutation:
    """Canonical representative of the right coset ``N g``.

    At each chain level, choose the orbit point ``c`` minimizing the image
    under the current representative and premultiply by the transversal
    element taking the base point to ``c``.  The result minimizes the
    sequence of base images over the coset.
    """
    g = _mk(g)
    for tr in chain.transversal:
        c = min(tr, key=g.__getitem__)
        u = tr[c]
        g = _mk(map(g.__getitem__, u))
    return g


@dataclass
class QuotientMap:
    """The action of ``ambient`` on the right cosets of ``kernel``.

    When the kernel is trivial the map is the identity on ``ambient``.
    """

    ambient: PermutationGroup
    kernel: PermutationGroup
    image: PermutationGroup
    reps: list[Permutation] | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def _coset(self, x: Sequence[int]) -> int:
        return self._index[_canonical(self.kernel.chain, x)]

    def __call__(self, x: Sequence[int]) -> Permutation:
        if self.reps is None:
            return _mk(x)
        return _mk(self._coset(compose(r, x)) for r in self.reps)

    def image_of(self, h: PermutationGroup) -> PermutationGroup:
        """``hN/N`` as a subgroup of ``image``."""
        return PermutationGroup([self(x) for x in h.generators], self.image.degree)

    def preimage(self, k: PermutationGroup) -> PermutationGroup:
        """Full preimage of a subgroup of ``image``."""
        if self.reps is None:
            return k
        gens = list(self.kernel.generators)
        gens += [self.reps[y[0]] for y in k.generators]
        return PermutationGroup(gens, self.ambient.degree)


def quotient_group(g: PermutationGroup, n: PermutationGroup) -> QuotientMap:
    _require_subgroup(g, n)
    if not is_normal(g, n):
        raise NotNormal("quotient by a subgroup that is not normal")
    if n.is_trivial():
        return QuotientMap(g, n, g)
    index = g.order // n.order
    budget = get_config().quotient_degree_budget
    if index > budget:
        raise BudgetExceeded(f"quotient degree {index} exceeds budget {budget}")
    ident = _canonical(n.chain, g.identity)
    reps = [ident]
    idx = {ident: 0}
    for r in reps:
        for x in g.generators:
            c = _canonical(n.chain, compose(r, x))
            if c not in idx:
                idx[c] = len(reps)
                reps.append(c)
    q = QuotientMap(g, n, trivial_group(1), reps, idx)
    if index == 1:
        return q
    q.image = PermutationGroup([q(x) for x in g.generators], index)
    assert q.image.order == index, "coset action is not regular"
    return q


# ---------------------------------------------------------------------------
# Fitting series


@dataclass
class FittingSeriesReport:
    """``F_1 <= F_2 <= ...``; ``stabilized_at`` is the number of distinct terms."""

    terms: list[PermutationGroup]
    stabilized_at: int

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def upper_fitting_series(g: PermutationGroup) -> FittingSeriesReport:
    if "fitting_series" in g._cache:
        return g._cache["fitting_series"]
    terms = [fitting_subgroup(g)]
    while terms[-1].order < g.order:
        q = quotient_group(g, terms[-1])
        nxt = q.preimage(fitting_subgroup(q.image))
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    rep = FittingSeriesReport(terms, len(terms))
    g._cache["fitting_series"] = rep
    return rep


def soluble_radical(g: PermutationGroup) -> PermutationGroup:
    return upper_fitting_series(g).terms[-1]


# ---------------------------------------------------------------------------
# derived series and predicates


def commutator(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """``a^-1 b^-1 a b``."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def derived_subgroup(g: PermutationGroup) -> PermutationGroup:
    gens = g.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(g, comms)


def is_soluble(g: PermutationGroup) -> bool:
    if "soluble" in g._cache:
        return g._cache["soluble"]
    h = g
    while not h.is_trivial():
        d = derived_subgroup(h)
        if d.order == h.order:
            break
        h = d
    g._cache["soluble"] = h.is_trivial()
    return g._cache["soluble"]


def is_nilpotent(g: PermutationGroup) -> bool:
    """Every Sylow subgroup is normal."""
    return all(is_normal(g, sylow_subgroup(g, p)) for p in prime_divisors(g.order))


def is_p_soluble(g: PermutationGroup, p: int) -> bool:
    """Alternately quotient by ``O_p'`` and ``O_p``; p-soluble iff this reaches 1."""
    if g.order % p or is_soluble(g):
        return True
    # the soluble radical is p-soluble, so only the quotient matters
    h = quotient_group(g, soluble_radical(g)).image
    pprime = PrimeSet.complement(p)
    for _ in range(g.order):
        if h.is_trivial():
            return True
        k = pi_core(h, pprime)
        if k.is_trivial():
            k = p_core(h, p)
        if k.is_trivial():
            return False
        h = quotient_group(h, k).image
    return h.is_trivial()


def is_p_group(g: PermutationGroup, p: int) -> bool:
    return p_part(g.order, p) == g.order


def frattini_of_p_group(pgrp: PermutationGroup, p: int) -> PermutationGroup:
    """``Phi(P)``: normal closure of generator ``p``-th powers and commutators."""
    if not is_p_group(pgrp, p):
        raise ValueError(f"group of order {pgrp.order} is not a {p}-group")
    gens = pgrp.generators
    seeds = [g ** p for g in gens]
    seeds += [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(pgrp, seeds)


def element_orders(g: PermutationGroup) -> np.ndarray:
    if "orders" not in g._cache:
        g._cache["orders"] = ar.element_orders(g.elements_array())
    return g._cache["orders"]


def has_element_of_order(g: PermutationGroup, m: int) -> bool:
    if m < 1:
        raise ValueError("element orders are positive")
    if g.order % m:
        return False
    return bool((element_orders(g) == m).any())


# ---------------------------------------------------------------------------
# Hall complements


@dataclass(frozen=True)
class HallResult:
    group: PermutationGroup
    method: str  # "trivial", "construction" or "random"


def _hall_by_construction(g: PermutationGroup, p: int) -> PermutationGroup | None:
    origin = g.origin
    if origin is None or not origin.blocks:
        return None
    gens = []
    for block, offset in origin.blocks:
        h = hall_p_complement_with_method(block, p).group
        gens.extend(embed_subgroup(h, offset, g.degree).generators)
    H = PermutationGroup(gens, g.degree)
    return H if H.order == g.order // p_part(g.order, p) else None


def _hall_by_search(g: PermutationGroup, p: int, target: int,
                    attempts: int = 500, width: int = 20, seed: int = 0) -> PermutationGroup:
    E = g.elements_array()
    pool = E[element_orders(g) % p != 0]
    rng = random.Random(seed)
    best = trivial_group(g.degree)
    for _ in range(attempts):
        H = trivial_group(g.degree)
        for _ in range(width):
            x = pool[rng.randrange(len(pool))].tolist()
            if H.contains(x):
                continue
            H2 = H.extended(x)
            if H2.order % p == 0:
                continue
            H = H2
            if H.order == target:
                return H
        if H.order > best.order:
            best = H
    raise SearchFailed(f"no Hall {p}'-subgroup found; largest {p}'-subgroup reached has order {best.order}")


def hall_p_complement_with_method(g: PermutationGroup, p: int) -> HallResult:
    key = ("hall", p)
    if key in g._cache:
        return g._cache[key]
    if not is_soluble(g):
        raise NotSoluble("Hall p'-subgroups are only searched for in soluble groups")
    target = g.order // p_part(g.order, p)
    if target == g.order:
        res = HallResult(g, "trivial")
    elif target == 1:
        res = HallResult(trivial_group(g.degree), "trivial")
    elif p_part(target, prime_divisors(target)[0]) == target:
        # a single other prime: the complement is a Sylow subgroup
        res = HallResult(sylow_subgroup(g, prime_divisors(target)[0]), "construction")
    else:
        H = _hall_by_construction(g, p)
        res = HallResult(H, "construction") if H is not None else \
            HallResult(_hall_by_search(g, p, target), "random")
    g._cache[key] = res
    return res


def hall_p_complement(g: PermutationGroup, p: int) -> PermutationGroup:
    """A subgroup of order the ``p'``-part of ``|g|`` (``g`` soluble)."""
    return hall_p_complement_with_method(g, p).group
