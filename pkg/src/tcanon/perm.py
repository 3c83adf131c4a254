"""Signed permutations of the points {1, .., n}.

A signed permutation is a pair (sign, pi): a sign in {+1, -1} together with
an ordinary permutation pi of the first n positive integers.  The sign is a
decoration that multiplies through products; it carries the "picks up a
minus sign" part of a tensor symmetry and has nothing to do with the parity
of pi.

Composition reads left to right: ``a * b`` means "apply a, then b", so
``(a * b).apply(p) == b.apply(a.apply(p))``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = [
    "SignedPermutation",
    "ParseError",
    "compose",
    "parse_cycles",
    "format_cycles",
]


class ParseError(ValueError):
    """Malformed input text.  ``position`` is a 0-based offset into the text."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


class SignedPermutation:
    """An element (sign, pi) of the direct product of {+1,-1} with S_n.

    Points are 1-based throughout the public interface.  ``images`` holds
    the image of each point: ``images[k-1] == apply(k)``.  Instances are
    immutable and hashable.
    """

    __slots__ = ("sign", "_img0")

    def __init__(self, sign: int, images: Sequence[int]):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        n = len(images)
        img0 = tuple(p - 1 for p in images)
        if sorted(img0) != list(range(n)):
            raise ValueError(f"images {list(images)} are not a permutation of 1..{n}")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "_img0", img0)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @classmethod
    def _from_img0(cls, sign: int, img0: tuple) -> "SignedPermutation":
        # Internal constructor that skips validation; img0 is 0-based.
        self = object.__new__(cls)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "_img0", img0)
        return self

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._from_img0(1, tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int, sign: int = 1) -> "SignedPermutation":
        """Build from disjoint cycles of 1-based points, fixed points omitted."""
        img0 = list(range(n))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} out of range 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} appears in more than one cycle")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:]):
                img0[a - 1] = b - 1
            if len(cyc) > 1:
                img0[cyc[-1] - 1] = cyc[0] - 1
        return cls._from_img0(1 if sign >= 0 else -1, tuple(img0))

    @property
    def degree(self) -> int:
        return len(self._img0)

    @property
    def images(self) -> tuple:
        """1-based image tuple: images[k-1] is the image of point k."""
        return tuple(x + 1 for x in self._img0)

    def apply(self, p: int) -> int:
        """Image of the 1-based point p."""
        if not 1 <= p <= len(self._img0):
            raise ValueError(f"point {p} out of range 1..{len(self._img0)}")
        return self._img0[p - 1] + 1

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Left-to-right product: self is applied first, then other."""
        a, b = self._img0, other._img0
        if len(a) != len(b):
            raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
        return SignedPermutation._from_img0(self.sign * other.sign, tuple(map(b.__getitem__, a)))

    def inverse(self) -> "SignedPermutation":
        img0 = self._img0
        inv = [0] * len(img0)
        for p, q in enumerate(img0):
            inv[q] = p
        return SignedPermutation._from_img0(self.sign, tuple(inv))

    def is_identity(self) -> bool:
        """True when the permutation part is the identity, whatever the sign."""
        img0 = self._img0
        return all(p == q for p, q in enumerate(img0))

    def moved_points(self) -> tuple:
        return tuple(p + 1 for p, q in enumerate(self._img0) if p != q)

    def to_cycles(self) -> tuple:
        """Disjoint cycles, each rotated to start at its smallest point."""
        seen = [False] * len(self._img0)
        cycles = []
        for p in range(len(self._img0)):
            if seen[p] or self._img0[p] == p:
                continue
            cyc = []
            q = p
            while not seen[q]:
                seen[q] = True
                cyc.append(q + 1)
                q = self._img0[q]
            cycles.append(tuple(cyc))
        return tuple(cycles)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.sign == other.sign and self._img0 == other._img0

    def __hash__(self) -> int:
        return hash((self.sign, self._img0))

    def __repr__(self) -> str:
        return format_cycles(self)


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Product of signed permutations, a applied first: compose(a, b) == a * b."""
    return a * b


_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<lpar>\()|(?P<rpar>\))|(?P<comma>,)|(?P<num>\d+)|(?P<id>id))")


def parse_cycles(text: str, n: int) -> SignedPermutation:
    """Parse signed cycle notation such as ``-(1,2)``, ``+(1,3)(2,4)`` or ``-id``.

    Grammar: an optional sign (default ``+``), then either the token ``id``
    or any number of parenthesised cycles of comma-separated points.  A bare
    sign denotes the signed identity, so ``-`` parses to (-1, id).
    Whitespace between tokens is ignored.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()

    sign = 1
    i = 0
    if i < len(tokens) and tokens[i][0] == "sign":
        sign = 1 if tokens[i][1] == "+" else -1
        i += 1
    if i < len(tokens) and tokens[i][0] == "id":
        i += 1
        if i < len(tokens):
            raise ParseError("trailing input after 'id'", tokens[i][2])
        return SignedPermutation._from_img0(sign, tuple(range(n)))

    cycles = []
    seen = set()
    while i < len(tokens):
        kind, _, at = tokens[i]
        if kind != "lpar":
            raise ParseError("expected '('", at)
        i += 1
        cyc = []
        while True:
            if i >= len(tokens):
                raise ParseError("unclosed cycle", len(text))
            kind, val, at = tokens[i]
            if kind == "num":
                p = int(val)
                if not 1 <= p <= n:
                    raise ParseError(f"point {p} out of range 1..{n}", at)
                if p in seen:
                    raise ParseError(f"point {p} repeated", at)
                seen.add(p)
                cyc.append(p)
                i += 1
                kind, val, at = tokens[i] if i < len(tokens) else ("end", "", len(text))
                if kind == "comma":
                    i += 1
                    continue
                if kind == "rpar":
                    i += 1
                    break
                raise ParseError("expected ',' or ')'", at)
            raise ParseError("expected a point", at)
        if not cyc:
            raise ParseError("empty cycle", at)
        cycles.append(cyc)
    return SignedPermutation.from_cycles(cycles, n, sign)


def format_cycles(sp: SignedPermutation) -> str:
    """Signed cycle notation; inverse of parse_cycles on its own output."""
    sign = "+" if sp.sign > 0 else "-"
    cycles = sp.to_cycles()
    if not cycles:
        return sign + "id"
    return sign + "".join("(" + ",".join(str(p) for p in cyc) + ")" for cyc in cycles)
