"""A total order on points, index lists and signed permutations.

Canonical forms are minima with respect to an order derived from a base
(an ordered list of points): base points come first, in base order, and the
remaining points follow in increasing natural order.  Lists compare
lexicographically under the point order, and signed permutations compare by
the image list of the full ordered point list — signs are disregarded.
"""

from __future__ import annotations

from typing import Sequence

from .perm import SignedPermutation

__all__ = ["BaseOrder"]


class BaseOrder:
    """Point order induced by a base; ``ordered_points`` lists all n points."""

    __slots__ = ("ordered_points", "_rank")

    def __init__(self, ordered_points: Sequence[int]):
        pts = tuple(ordered_points)
        n = len(pts)
        if sorted(pts) != list(range(1, n + 1)):
            raise ValueError(f"ordered points {list(pts)} are not a permutation of 1..{n}")
        rank = [0] * (n + 1)
        for r, p in enumerate(pts):
            rank[p] = r
        object.__setattr__(self, "ordered_points", pts)
        object.__setattr__(self, "_rank", tuple(rank))

    def __setattr__(self, name, value):
        raise AttributeError("BaseOrder is immutable")

    @classmethod
    def from_base(cls, base: Sequence[int], degree: int) -> "BaseOrder":
        """Base points first (in base order), then the rest ascending."""
        base = tuple(base)
        if len(set(base)) != len(base):
            raise ValueError(f"base {list(base)} contains repeats")
        rest = [p for p in range(1, degree + 1) if p not in set(base)]
        return cls(base + tuple(rest))

    @classmethod
    def for_chain(cls, chain) -> "BaseOrder":
        return cls.from_base(chain.base, chain.degree)

    @property
    def degree(self) -> int:
        return len(self.ordered_points)

    def rank(self, p: int) -> int:
        """Position of point p in the order (0 for the minimal point)."""
        if not 1 <= p <= self.degree:
            raise ValueError(f"point {p} out of range 1..{self.degree}")
        return self._rank[p]

    def point_less(self, p: int, q: int) -> bool:
        return self.rank(p) < self.rank(q)

    def list_less(self, xs: Sequence[int], ys: Sequence[int]) -> bool:
        """Strict lexicographic comparison of equal-length point lists."""
        if len(xs) != len(ys):
            raise ValueError("lists must have equal length")
        rank = self._rank
        for x, y in zip(xs, ys):
            if x != y:
                return rank[x] < rank[y]
        return False

    def perm_key(self, s: SignedPermutation) -> tuple:
        """Sort key for signed permutations: ranks of the base image, sign ignored."""
        if s.degree != self.degree:
            raise ValueError(f"degree mismatch: {s.degree} vs {self.degree}")
        rank = self._rank
        img0 = s._img0
        return tuple(rank[img0[p - 1] + 1] for p in self.ordered_points)

    def signed_perm_less(self, s1: SignedPermutation, s2: SignedPermutation) -> bool:
        """Strict order on signed permutations; equal permutations are unordered."""
        return self.perm_key(s1) < self.perm_key(s2)

    def __repr__(self) -> str:
        return f"BaseOrder({list(self.ordered_points)})"
