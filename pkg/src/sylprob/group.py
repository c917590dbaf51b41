"""Permutation groups certified by a stabilizer chain (Schreier-Sims)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _arrays as ar
from .config import get_config
from .errors import BudgetExceeded, DegreeMismatch, NotASubgroup
from .perm import Permutation, _mk, compose, format_cycles, inverse


def _first_moved(g: Sequence[int]) -> int | None:
    for i, v in enumerate(g):
        if i != v:
            return i
    return None


def _is_id(g: Sequence[int]) -> bool:
    return _first_moved(g) is None


class StabilizerChain:
    """Base, strong generators and transversals for a permutation group.

    ``transversal[i][c]`` maps ``base[i]`` to ``c`` and lies in the pointwise
    stabilizer of ``base[:i]``.
    """

    def __init__(self, degree: int, gens: Iterable[Sequence[int]], base: Sequence[int] = ()):
        self.degree = degree
        self.base: list[int] = list(base)
        self.strong: list[list[Permutation]] = []
        self.transversal: list[dict[int, Permutation]] = []
        self.inv_transversal: list[dict[int, Permutation]] = []
        self._build([_mk(g) for g in gens if not _is_id(g)])

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        ident = _mk(range(self.degree))
        tr = {b: ident}
        queue = [b]
        gens = self.strong[i]
        for pt in queue:
            u = tr[pt]
            for s in gens:
                img = s[pt]
                if img not in tr:
                    tr[img] = _mk(map(s.__getitem__, u))
                    queue.append(img)
        self.transversal[i] = tr
        self.inv_transversal[i] = {c: inverse(u) for c, u in tr.items()}

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversal.append({})
        self.inv_transversal.append({})

    def _build(self, gens: list[Permutation]) -> None:
        for _ in self.base:
            self.strong.append([])
            self.transversal.append({})
            self.inv_transversal.append({})
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._new_level(_first_moved(g))
        for i in range(len(self.base)):
            fixed = self.base[:i]
            self.strong[i] = [g for g in gens if all(g[b] == b for b in fixed)]
            self._orbit(i)

        i = len(self.base) - 1
        while i >= 0:
            restart = None
            for beta, u in list(self.transversal[i].items()):
                for s in self.strong[i]:
                    gamma = s[beta]
                    us = _mk(map(s.__getitem__, u))
                    ug_inv = self.inv_transversal[i][gamma]
                    h = _mk(map(ug_inv.__getitem__, us))
                    if _is_id(h):
                        continue
                    h, j = self.sift(h, start=i + 1)
                    if j < len(self.base) or not _is_id(h):
                        if j == len(self.base):
                            self._new_level(_first_moved(h))
                        for lvl in range(i + 1, j + 1):
                            self.strong[lvl].append(h)
                            self._orbit(lvl)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1
        # levels with trivial orbits carry no information
        keep = [k for k, tr in enumerate(self.transversal) if len(tr) > 1]
        self.base = [self.base[k] for k in keep]
        self.strong = [self.strong[k] for k in keep]
        self.transversal = [self.transversal[k] for k in keep]
        self.inv_transversal = [self.inv_transversal[k] for k in keep]

    def sift(self, g: Sequence[int], start: int = 0) -> tuple[Permutation, int]:
        for i in range(start, len(self.base)):
            c = g[self.base[i]]
            ui = self.inv_transversal[i].get(c)
            if ui is None:
                return _mk(g), i
            g = _mk(map(ui.__getitem__, g))
        return _mk(g), len(self.base)

    def contains(self, g: Sequence[int]) -> bool:
        h, j = self.sift(g)
        return j == len(self.base) and _is_id(h)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversal)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for lvl in self.strong:
            for g in lvl:
                seen.setdefault(g, None)
        return list(seen)

    def orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.transversal]


class PermutationGroup:
    """A permutation group of a fixed degree.

    The stabilizer chain is built eagerly, so order and membership queries are
    cheap.  Instances are treated as immutable; derived data is cached.
    """

    def __init__(self, generators: Iterable[Sequence[int]] = (), degree: int | None = None,
                 *, base: Sequence[int] = (), chain_gens: Iterable[Sequence[int]] = (),
                 origin=None):
        gens = []
        seen = set()
        for g in generators:
            p = g if isinstance(g, Permutation) else Permutation(g)
            if degree is None:
                degree = len(p)
            if len(p) != degree:
                raise DegreeMismatch(f"generator of degree {len(p)} in a group of degree {degree}")
            if p not in seen and not _is_id(p):
                seen.add(p)
                gens.append(p)
        if degree is None:
            raise ValueError("degree is required when there are no generators")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        # chain_gens: extra elements of the same group (e.g. old strong generators)
        self.chain = StabilizerChain(degree, list(chain_gens) + gens, base)
        self.origin = origin
        self._cache: dict = {}

    # basic queries -------------------------------------------------------
    @property
    def order(self) -> int:
        return self.chain.order

    def __len__(self) -> int:
        return self.order

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.degree:
            raise DegreeMismatch(f"element of degree {len(x)} vs group of degree {self.degree}")
        return self.chain.contains(x)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return (self.degree == other.degree and other.order % self.order == 0
                and all(other.contains(g) for g in self.generators))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (self.degree == other.degree and self.order == other.order
                and all(other.contains(g) for g in self.generators))

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators) or "()"
        return f"PermutationGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    # construction helpers ------------------------------------------------
    def extended(self, *elements: Sequence[int]) -> "PermutationGroup":
        """The group generated by this group and ``elements``."""
        new = [e for e in elements if not self.contains(e)]
        if not new:
            return self
        return PermutationGroup(list(self.generators) + new, self.degree,
                                base=self.chain.base,
                                chain_gens=self.chain.strong_generators)

    # elements ------------------------------------------------------------
    def _check_budget(self) -> None:
        budget = get_config().enumeration_budget
        if self.order > budget:
            raise BudgetExceeded(f"group of order {self.order} exceeds enumeration budget {budget}")

    def elements_array(self) -> np.ndarray:
        """All elements as a ``(order, degree)`` array, cached."""
        arr = self._cache.get("elements")
        if arr is None:
            self._check_budget()
            dt = ar.dtype_for(self.degree)
            arr = np.arange(self.degree, dtype=dt)[None, :]
            for tr in reversed(self.chain.transversal):
                U = np.array(list(tr.values()), dtype=dt)
                arr = U[:, arr.astype(np.intp)].reshape(-1, self.degree)
            arr.setflags(write=False)
            self._cache["elements"] = arr
        return arr

    def elements(self) -> Iterator[Permutation]:
        for row in self.elements_array():
            yield _mk(row.tolist())

    def random_element(self, rng: random.Random) -> Permutation:
        g = _mk(range(self.degree))
        for tr in reversed(self.chain.transversal):
            u = rng.choice(list(tr.values()))
            g = compose(g, u)
        return g

    def generator_strings(self) -> list[str]:
        return [format_cycles(g) for g in self.generators]


@dataclass(frozen=True)
class SubgroupHandle:
    ambient: PermutationGroup
    sub: PermutationGroup

    def __post_init__(self):
        if not self.sub.is_subgroup_of(self.ambient):
            raise NotASubgroup("sub is not contained in ambient")

    @property
    def index(self) -> int:
        return self.ambient.order // self.sub.order


# ---------------------------------------------------------------------------
# operations


def group_order(g: PermutationGroup) -> int:
    return g.order


def contains(g: PermutationGroup, x: Sequence[int]) -> bool:
    return g.contains(x)


def enumerate_elements(g: PermutationGroup) -> Iterator[Permutation]:
    """Yield every element once; raises ``BudgetExceeded`` past the enumeration budget."""
    g._check_budget()
    return g.elements()


def generated_subgroup(degree: int, gens: Iterable[Sequence[int]]) -> PermutationGroup:
    return PermutationGroup(gens, degree)


def trivial_group(degree: int) -> PermutationGroup:
    return PermutationGroup((), degree)


def subgroup_from_elements(degree: int, elements: np.ndarray, order: int | None = None,
                           seed_gens: Iterable[Sequence[int]] = (), seed: int = 0) -> PermutationGroup:
    """The subgroup formed by ``elements``, which must be closed under products.

    Rows are added as generators in a seeded shuffled order until the chain
    order matches the number of rows.
    """
    order = len(elements) if order is None else order
    H = PermutationGroup(seed_gens, degree)
    if H.order == order:
        return H
    rng = np.random.default_rng(seed)
    idx = rng.permutation(len(elements))
    for k in idx:
        row = elements[k].tolist()
        if not H.contains(row):
            H = H.extended(row)
            if H.order == order:
                return H
    if H.order != order:
        raise ValueError(f"rows do not form a group: generated order {H.order}, expected {order}")
    return H


def _require_subgroup(g: PermutationGroup, h: PermutationGroup) -> None:
    if g.degree != h.degree:
        raise DegreeMismatch("groups act on different degrees")
    if not h.is_subgroup_of(g):
        raise NotASubgroup("subgroup is not contained in the ambient group")


def centralizer(g: PermutationGroup, x: Sequence[int]) -> PermutationGroup:
    """``{y in g : xy = yx}`` by exhaustive vectorized scan."""
    if not g.contains(x):
        raise NotASubgroup("element is not in the group")
    E = g.elements_array()
    mask = ar.centralizing_mask(E, x)
    return subgroup_from_elements(g.degree, E[mask], seed_gens=[x])


def centralizer_of_subgroup(g: PermutationGroup, h: PermutationGroup) -> PermutationGroup:
    _require_subgroup(g, h)
    E = g.elements_array()
    mask = np.ones(len(E), dtype=bool)
    for x in h.generators:
        mask &= ar.centralizing_mask(E, x)
    return subgroup_from_elements(g.degree, E[mask])


def normalizer_mask(E: np.ndarray, h: PermutationGroup) -> np.ndarray:
    """Mask of rows ``e`` with ``h^e == h``."""
    H = h.elements_array()
    mask = np.ones(len(E), dtype=bool)
    step = max(1, ar._CHUNK_CELLS // max(1, E.shape[1]))
    for x in h.generators:
        idx = np.flatnonzero(mask)
        for s in range(0, len(idx), step):
            part = idx[s:s + step]
            conj = ar.conjugate_rows_of(x, E[part])
            mask[part] = ar.isin_rows(conj, H)
    return mask


def normalizer(g: PermutationGroup, h: PermutationGroup) -> PermutationGroup:
    _require_subgroup(g, h)
    if h.is_trivial() or h.order == g.order:
        return g
    E = g.elements_array()
    mask = normalizer_mask(E, h)
    return subgroup_from_elements(g.degree, E[mask], seed_gens=h.generators)


def conjugate_subgroup(h: PermutationGroup, x: Sequence[int]) -> PermutationGroup:
    """The group ``x^-1 h x``."""
    if len(x) != h.degree:
        raise DegreeMismatch("conjugating element has the wrong degree")
    xi = inverse(x)
    gens = [compose(compose(xi, g), x) for g in h.generators]
    return PermutationGroup(gens, h.degree)


def is_normal(g: PermutationGroup, n: PermutationGroup) -> bool:
    _require_subgroup(g, n)
    for x in g.generators:
        xi = inverse(x)
        for a in n.generators:
            if not n.contains(compose(compose(xi, a), x)):
                return False
    return True


def normal_closure(g: PermutationGroup, gens: Iterable[Sequence[int]]) -> PermutationGroup:
    """Smallest normal subgroup of ``g`` containing ``gens``."""
    K = PermutationGroup(gens, g.degree)
    queue = list(K.generators)
    inv = [(x, inverse(x)) for x in g.generators]
    while queue:
        a = queue.pop()
        for x, xi in inv:
            c = compose(compose(xi, a), x)
            if not K.contains(c):
                K = K.extended(c)
                queue.append(c)
    return K


def intersection(a: PermutationGroup, b: PermutationGroup) -> PermutationGroup:
    if a.degree != b.degree:
        raise DegreeMismatch("groups act on different degrees")
    small, big = (a, b) if a.order <= b.order else (b, a)
    S = small.elements_array()
    if big.order <= get_config().enumeration_budget and "elements" in big._cache:
        mask = ar.isin_rows(S, big.elements_array())
    else:
        mask = np.fromiter((big.contains(r.tolist()) for r in S), dtype=bool, count=len(S))
    return subgroup_from_elements(a.degree, S[mask])


def conjugates(g: PermutationGroup, h: PermutationGroup) -> Iterator[tuple[np.ndarray, Permutation]]:
    """Breadth-first walk of the distinct conjugates of ``h`` under ``g``.

    Yields ``(elements, t)`` with ``elements`` the element array of ``h^t``.
    Conjugates are deduplicated by their sorted element-set fingerprint.
    """
    start = h.elements_array()
    ident = Permutation.identity(g.degree)
    seen = {ar.fingerprint(start)}
    queue = [(start, ident)]
    yield start, ident
    for arr, t in queue:
        for s in g.generators:
            c = ar.conjugate_by(arr, s)
            fp = ar.fingerprint(c)
            if fp not in seen:
                seen.add(fp)
                item = (c, compose(t, s))
                queue.append(item)
                yield item


def element_order_census(g: PermutationGroup) -> dict[int, int]:
    orders = ar.element_orders(g.elements_array())
    vals, counts = np.unique(orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}
