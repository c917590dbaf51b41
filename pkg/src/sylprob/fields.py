"""Tiny finite fields GF(p^k) as explicit add/mul tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise for non prime powers."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _poly_mulmod(a, b, mod, p):
    k = len(mod) - 1
    res = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    # reduce by the monic modulus (coefficients low to high)
    for d in range(len(res) - 1, k - 1, -1):
        c = res[d]
        if c:
            for i in range(k + 1):
                res[d - k + i] = (res[d - k + i] - c * mod[i]) % p
    return res[:k]


def _irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree ``k``."""
    if k == 1:
        return (0, 1)
    for low in product(range(p), repeat=k):
        poly = tuple(low[::-1]) + (1,)
        if poly[0] == 0:
            continue
        if not any(_divides(f, poly, p) for d in range(1, k // 2 + 1) for f in _monics(p, d)):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


def _monics(p, d):
    for low in product(range(p), repeat=d):
        yield tuple(low) + (1,)


def _divides(f, g, p):
    g = list(g)
    df = len(f) - 1
    while len(g) - 1 >= df and any(g):
        c = g[-1]
        shift = len(g) - 1 - df
        for i in range(df + 1):
            g[shift + i] = (g[shift + i] - c * f[i]) % p
        g.pop()
        while g and g[-1] == 0:
            g.pop()
    return not any(g)


@dataclass(frozen=True)
class GF:
    """GF(q); elements are ints ``0..q-1`` encoding coefficient vectors base p."""

    q: int
    p: int = field(init=False)
    k: int = field(init=False)
    modulus: tuple[int, ...] = field(init=False)
    add: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    mul: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        p, k = prime_power(self.q)
        mod = _irreducible(p, k)
        vecs = [self._digits(x, p, k) for x in range(self.q)]
        enc = {tuple(v): x for x, v in enumerate(vecs)}
        add = tuple(tuple(enc[tuple((a + b) % p for a, b in zip(va, vb))] for vb in vecs) for va in vecs)
        mul = tuple(tuple(enc[tuple(_poly_mulmod(va, vb, mod, p))] for vb in vecs) for va in vecs)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)

    @staticmethod
    def _digits(x, p, k):
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return out

    def neg(self, a: int) -> int:
        return next(b for b in range(self.q) if self.add[a][b] == 0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return next(b for b in range(1, self.q) if self.mul[a][b] == 1)

    def additive_basis(self) -> list[int]:
        """The elements 1, x, x^2, ... (encoded p^0, p^1, ...)."""
        return [self.p ** i for i in range(self.k)]


@lru_cache(maxsize=None)
def field_of_order(q: int) -> GF:
    return GF(q)
