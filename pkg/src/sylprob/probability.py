"""Exact commuting probabilities between subgroups and Sylow-pair invariants.

Every probability is a :class:`fractions.Fraction`.  ``pr`` counts commuting
pairs directly and, when enabled in the run configuration, re-derives the
value from centralizer orders; a disagreement raises immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _arrays as ar
from .builders import embed_subgroup
from .config import get_config
from .errors import DegreeMismatch, NotNormal
from .group import (
    PermutationGroup,
    conjugate_subgroup,
    conjugates,
    generated_subgroup,
    intersection,
    is_normal,
)
from .perm import format_cycles
from .structure import PrimeSet, prime_divisors, quotient_group, sylow_subgroup

ExactRational = Fraction


class InconsistentCount(AssertionError):
    """The two counting routes for ``pr`` disagreed."""


# ---------------------------------------------------------------------------
# pr


def _rows(x) -> np.ndarray:
    if isinstance(x, PermutationGroup):
        return x.elements_array()
    if isinstance(x, np.ndarray):
        return x.reshape(len(x), -1) if x.ndim == 2 else x.reshape(1, -1)
    items = list(x)
    if not items:
        raise ValueError("empty element set")
    return ar.as_array(items, len(items[0]))


def _centralizer_sum(X, Xr: np.ndarray, Yr: np.ndarray) -> Fraction:
    """``(1/|Y|) sum_y |C_X(y)| / |X|``.

    When ``X`` is a group, ``|C_X(y)| = |X| / |y^X|`` and the class size is
    counted from the distinct conjugates of ``y``; otherwise ``C_X(y)`` is
    found by filtering ``X``.
    """
    total = Fraction(0)
    nx = len(Xr)
    for y in Yr:
        if isinstance(X, PermutationGroup):
            cls = ar.conjugate_rows_of(y, Xr)
            total += Fraction(1, len(np.unique(ar.row_keys(cls))))
        else:
            total += Fraction(int(ar.centralizing_mask(Xr, y).sum()), nx)
    return total / len(Yr)


def pr(x_set, y_set, *, verify: bool | None = None) -> Fraction:
    """Probability that random ``x`` in ``x_set`` and ``y`` in ``y_set`` commute.

    Either argument may be a :class:`PermutationGroup`, an element array or a
    sequence of permutations.
    """
    Xr, Yr = _rows(x_set), _rows(y_set)
    if len(Xr) == 0 or len(Yr) == 0:
        raise ValueError("empty element set")
    if Xr.shape[1] != Yr.shape[1]:
        raise DegreeMismatch("element sets act on different degrees")
    value = Fraction(ar.commuting_pairs(Xr, Yr), len(Xr) * len(Yr))
    if verify is None:
        verify = get_config().verify_pr
    if verify:
        # iterate over the smaller side
        if len(Yr) <= len(Xr):
            other = _centralizer_sum(x_set, Xr, Yr)
        else:
            other = _centralizer_sum(y_set, Yr, Xr)
        if other != value:
            raise InconsistentCount(f"pair count gives {value}, centralizer sum gives {other}")
    return value


def pr_no_pq_formula(p_order: int, q_order: int) -> Fraction:
    """``(a + b - 1) / (ab)`` for a ``p``-power ``a`` and a ``q``-power ``b``, ``p != q``."""
    if p_order < 1 or q_order < 1:
        raise ValueError("orders must be positive")
    pa, pb = prime_divisors(p_order), prime_divisors(q_order)
    if len(pa) > 1 or len(pb) > 1:
        raise ValueError("arguments must be prime powers")
    if pa and pa == pb:
        raise ValueError("arguments must be powers of distinct primes")
    return Fraction(p_order + q_order - 1, p_order * q_order)


# ---------------------------------------------------------------------------
# Sylow sweeps


@dataclass
class Witness:
    P: PermutationGroup
    Q: PermutationGroup

    def as_dict(self) -> dict:
        return {"P": [format_cycles(g) for g in self.P.generators],
                "Q": [format_cycles(g) for g in self.Q.generators]}


@dataclass
class OmegaReport:
    """Values of ``pr(P, Q)`` over all Sylow ``p``- and ``q``-subgroups."""

    p: int
    q: int
    values: list[Fraction]
    witness_pairs: dict[Fraction, Witness] = field(default_factory=dict, repr=False)
    conjugates_swept: int = 0
    swept_prime: int = 0

    @property
    def max(self) -> Fraction:
        return self.values[-1]

    @property
    def min(self) -> Fraction:
        return self.values[0]

    def as_dict(self) -> dict:
        return {
            "kind": "omega",
            "p": self.p,
            "q": self.q,
            "values": [str(v) for v in self.values],
            "witnesses": {str(v): self.witness_pairs[v].as_dict() for v in self.values
                          if v in self.witness_pairs},
            "conjugates_swept": self.conjugates_swept,
            "swept_prime": self.swept_prime,
        }


def _sweep_lockstep(g: PermutationGroup, P: PermutationGroup, Q: PermutationGroup):
    """Walk the conjugates of ``P`` and ``Q`` in lockstep; return the side that ends first.

    Returns ``(fixed, swept_arrays, swept_is_Q)``.  Since ``pr(P^x, Q^x) =
    pr(P, Q)``, every Sylow pair is conjugate to one with either side fixed,
    so sweeping the shorter orbit suffices.
    """
    itP, itQ = conjugates(g, P), conjugates(g, Q)
    seenP, seenQ = [], []
    while True:
        nq = next(itQ, None)
        if nq is None:
            return P, seenQ, True
        seenQ.append(nq)
        np_ = next(itP, None)
        if np_ is None:
            return Q, seenP, False
        seenP.append(np_)


def omega_set(g: PermutationGroup, p: int, q: int) -> OmegaReport:
    if p == q:
        raise ValueError("omega_set needs distinct primes")
    key = ("omega", min(p, q), max(p, q))
    rep = g._cache.get(key)
    if rep is None:
        lo, hi = min(p, q), max(p, q)
        P, Q = sylow_subgroup(g, lo), sylow_subgroup(g, hi)
        fixed, swept, swept_is_q = _sweep_lockstep(g, P, Q)
        Fr = fixed.elements_array()
        other = Q if swept_is_q else P
        found: dict[Fraction, tuple] = {}
        for arr, t in swept:
            v = _pr_fixed(fixed, Fr, arr)
            if v not in found:
                found[v] = (arr, t)
        witnesses = {}
        for v, (arr, t) in found.items():
            conj = conjugate_subgroup(other, t)
            witnesses[v] = Witness(fixed, conj) if swept_is_q else Witness(conj, fixed)
        rep = OmegaReport(lo, hi, sorted(found), witnesses, len(swept), hi if swept_is_q else lo)
        g._cache[key] = rep
    if (rep.p, rep.q) == (p, q):
        return rep
    return OmegaReport(p, q, rep.values,
                       {v: Witness(w.Q, w.P) for v, w in rep.witness_pairs.items()},
                       rep.conjugates_swept, rep.swept_prime)


def _pr_fixed(fixed: PermutationGroup, Fr: np.ndarray, arr: np.ndarray) -> Fraction:
    """``pr`` between a group and a subgroup given by its element array."""
    direct = Fraction(ar.commuting_pairs(Fr, arr), len(Fr) * len(arr))
    if not get_config().verify_pr:
        return direct
    # centralizer-sum route: average of 1 / |y^fixed| over the swept subgroup
    other = _centralizer_sum(fixed, Fr, arr)
    if other != direct:
        raise InconsistentCount(f"pair count gives {direct}, centralizer sum gives {other}")
    return direct


# ---------------------------------------------------------------------------
# pr*


@dataclass
class PairMax:
    value: Fraction
    witness: Witness | None


@dataclass
class PrStarReport:
    pi1: PrimeSet
    pi2: PrimeSet
    value: Fraction
    per_pair: dict[tuple[int, int], PairMax] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "kind": "prstar",
            "pi1": str(self.pi1),
            "pi2": str(self.pi2),
            "value": str(self.value),
            "per_pair": {f"{p},{q}": {"max": str(m.value),
                                      "witness": m.witness.as_dict() if m.witness else None}
                         for (p, q), m in sorted(self.per_pair.items())},
        }


def qualifying_pairs(primes: Sequence[int], pi1: PrimeSet, pi2: PrimeSet) -> list[tuple[int, int]]:
    """Unordered pairs ``{p, q}`` of distinct primes with one in each set."""
    pairs = set()
    for p in primes:
        for q in primes:
            if p != q and pi1.contains(p) and pi2.contains(q):
                pairs.add((min(p, q), max(p, q)))
    return sorted(pairs)


def pr_star(g: PermutationGroup, pi1: PrimeSet | None = None,
            pi2: PrimeSet | None = None) -> PrStarReport:
    """Minimum over qualifying prime pairs of the best Sylow-pair probability."""
    pi1 = pi1 or PrimeSet.all()
    pi2 = pi2 or PrimeSet.all()
    per_pair = {}
    for p, q in qualifying_pairs(prime_divisors(g.order), pi1, pi2):
        om = omega_set(g, p, q)
        per_pair[(p, q)] = PairMax(om.max, om.witness_pairs.get(om.max))
    value = min((m.value for m in per_pair.values()), default=Fraction(1))
    return PrStarReport(pi1, pi2, value, per_pair)


def omega_product(groups: Sequence[PermutationGroup], p: int, q: int) -> list[Fraction]:
    """``Omega_{p,q}`` of a direct product from the factors' sets.

    Sylow subgroups of a direct product are products of Sylow subgroups of
    the factors, chosen independently, so the value set is the set of
    products of factor values.
    """
    values = {Fraction(1)}
    for h in groups:
        factor = omega_set(h, p, q).values
        values = {a * b for a in values for b in factor}
    return sorted(values)


def pr_star_product(groups: Sequence[PermutationGroup], pi1: PrimeSet | None = None,
                    pi2: PrimeSet | None = None) -> Fraction:
    """``pr*`` of the direct product of ``groups`` via the product rule."""
    pi1 = pi1 or PrimeSet.all()
    pi2 = pi2 or PrimeSet.all()
    primes = sorted({r for h in groups for r in prime_divisors(h.order)})
    best = Fraction(1)
    for p, q in qualifying_pairs(primes, pi1, pi2):
        best = min(best, math.prod((omega_set(h, p, q).max for h in groups), start=Fraction(1)))
    return best


# ---------------------------------------------------------------------------
# bounds and identities


def _centralizer_counts(H: np.ndarray, K: np.ndarray) -> np.ndarray:
    """``|C_K(x)|`` for each row ``x`` of ``H``."""
    return ar.commute_matrix(H, K).sum(axis=1)


def class_size_bound(h: PermutationGroup, k: PermutationGroup) -> Fraction:
    """``(n + m - 1) / (nm)`` with ``n = |H : C_H(K)|`` and ``m`` the least
    ``|K : C_K(x)|`` over ``x`` in ``H`` outside ``C_H(K)``."""
    if h.degree != k.degree:
        raise DegreeMismatch("groups act on different degrees")
    counts = _centralizer_counts(h.elements_array(), k.elements_array())
    central = counts == k.order
    n = h.order // int(central.sum())
    if n == 1:
        return Fraction(1)
    m = min(k.order // int(c) for c in counts[~central])
    return Fraction(n + m - 1, n * m)


def xy_inequality_check(x: int, y: int) -> bool:
    """``((x+1) + y - 1) / ((x+1) y) <= (x + y - 1) / (xy)``."""
    if x < 1 or y < 1:
        raise ValueError("x and y must be positive integers")
    return Fraction(x + y, (x + 1) * y) <= Fraction(x + y - 1, x * y)


def sylow_pair_bound(P: PermutationGroup, Q: PermutationGroup, p: int, q: int) -> Fraction:
    """``(p^a + q - 1) / (p^a q)`` for the largest ``p^a <= |P : C_P(Q)|``.

    With ``a = 0`` the bound is 1; with ``[P, Q] != 1`` it is at most
    ``(p + q - 1) / (pq)``.
    """
    counts = _centralizer_counts(P.elements_array(), Q.elements_array())
    n = P.order // int((counts == Q.order).sum())
    pa = 1
    while pa * p <= n:
        pa *= p
    if pa == 1:
        return Fraction(1)
    return Fraction(pa + q - 1, pa * q)


def lemma_exponent_bound(eps: Fraction) -> int:
    """Integer upper bound for ``(2/eps)^(6/eps)``: the exponent is rounded up."""
    eps = Fraction(eps)
    base = Fraction(2) / eps
    e = math.ceil(Fraction(6) / eps)
    return math.ceil(base ** e)


@dataclass
class H0Result:
    X: np.ndarray
    H0: PermutationGroup
    index: int
    max_class_X: int
    max_class_H0: int


def build_h0(h: PermutationGroup, k: PermutationGroup, eps) -> H0Result:
    """``X = {x in H : |x^K| <= 2/eps}`` and ``H0 = <X>``; postconditions asserted."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    value = pr(h, k)
    if value < eps:
        raise ValueError(f"pr(h, k) = {value} is below eps = {eps}")
    H = h.elements_array()
    K = k.elements_array()
    classes = k.order // _centralizer_counts(H, K)  # |x^K| = |K : C_K(x)|
    X = H[classes * eps <= 2]
    H0 = generated_subgroup(h.degree, [r.tolist() for r in X])
    index = h.order // H0.order
    max_X = int(classes[classes * eps <= 2].max()) if len(X) else 0
    max_H0 = int((k.order // _centralizer_counts(H0.elements_array(), K)).max())
    assert index <= 2 / eps - 1, "index bound violated"
    assert max_X <= 2 / eps, "class-size bound on X violated"
    assert max_H0 <= lemma_exponent_bound(eps), "class-size bound on H0 violated"
    return H0Result(X, H0, index, max_X, max_H0)


def check_quotient_inequality(g: PermutationGroup, n: PermutationGroup,
                              h: PermutationGroup, k: PermutationGroup) -> bool:
    """``pr(H, K) <= pr(HN/N, KN/N) * pr(N ∩ H, N ∩ K)``."""
    if not is_normal(g, n):
        raise NotNormal("n is not normal in g")
    q = quotient_group(g, n)
    lhs = pr(h, k)
    top = pr(q.image_of(h), q.image_of(k))
    bottom = pr(intersection(n, h), intersection(n, k))
    return lhs <= top * bottom


def check_product_rule(g1: PermutationGroup, g2: PermutationGroup,
                       h1: PermutationGroup, h2: PermutationGroup,
                       k1: PermutationGroup, k2: PermutationGroup) -> bool:
    """``pr(H1 x H2, K1 x K2) == pr(H1, K1) pr(H2, K2)`` inside ``g1 x g2``."""
    deg = g1.degree + g2.degree

    def lift(a, b):
        A = embed_subgroup(a, 0, deg)
        B = embed_subgroup(b, g1.degree, deg)
        return generated_subgroup(deg, list(A.generators) + list(B.generators))

    return pr(lift(h1, h2), lift(k1, k2)) == pr(h1, k1) * pr(h2, k2)


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)
