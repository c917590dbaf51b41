"""Permutations of {0..n-1}, with 1-based cycle notation at the I/O boundary.

Products read left to right: ``a * b`` applies ``a`` first, then ``b``,
so ``(a * b)[i] == b[a[i]]``.  Every routine in the package honours this.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, ParseError


class Permutation(tuple):
    """A bijection of ``range(degree)`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return _mk(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles; fixed points are implicit."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt + 1} out of range 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt + 1} repeated")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return _mk(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return inverse(self) ** (-k)
        out = list(range(len(self)))
        for cyc in self.cycles():
            m = len(cyc)
            s = k % m
            for idx, pt in enumerate(cyc):
                out[pt] = cyc[(idx + s) % m]
        return _mk(out)

    def conjugate(self, x: "Permutation") -> "Permutation":
        """Return ``x^-1 * self * x``."""
        return compose(compose(inverse(x), self), x)

    def commutes_with(self, other: "Permutation") -> bool:
        return compose(self, other) == compose(other, self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self))

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self[i]
            out.append(cyc)
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self) if i != v]

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_string(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={len(self)})"


def _mk(images) -> Permutation:
    # unchecked constructor for internal hot paths
    return tuple.__new__(Permutation, images)


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """``a`` then ``b``."""
    if len(a) != len(b):
        raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
    return _mk(map(b.__getitem__, a))


def inverse(a: Sequence[int]) -> Permutation:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return _mk(out)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(degree: int, s: str) -> Permutation:
    """Parse disjoint-cycle notation over ``1..degree``, e.g. ``"(1 2 3)(4 5)"``.

    Points may be separated by spaces or commas.  The empty string and ``"()"``
    give the identity.
    """
    text = s.strip()
    if text.count("(") != text.count(")"):
        raise ParseError(f"unbalanced parentheses in {s!r}")
    leftover = _CYCLE_RE.sub("", text).strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r} in {s!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in {s!r}") from None
        if pts:
            cycles.append(pts)
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_cycles(p: Sequence[int]) -> str:
    cyc = Permutation.cycles(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)
