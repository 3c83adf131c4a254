"""Stabilizer chains for groups of signed permutations.

The chain fixes a base b_1, .., b_m.  Level i holds the strong generators
that fix b_1, .., b_{i-1}, the orbit of b_i under them, and a Schreier
vector for that orbit.  Together these give group order, membership tests,
element enumeration and right cosets without ever touching more than one
orbit at a time.

Signs ride along: products multiply signs, and if the construction ever
proves that (-1, id) lies in the generated group the chain records
``sign_residue = True`` (the offending element is discarded rather than
stored as a generator).  A tensor whose symmetry group contains (-1, id)
is identically zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .order import BaseOrder
from .perm import SignedPermutation

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "SignConflictError",
    "SymmetryGroup",
    "SchreierVector",
    "ChainLevel",
    "StabilizerChain",
    "Membership",
    "orbit_and_vector",
    "trace",
    "schreier_sims",
    "membership",
    "detect_zero",
    "enumerate_elements",
    "right_coset",
    "independent_transversal",
]

DEFAULT_CAP = 100000


class CapExceeded(RuntimeError):
    """An enumeration would produce more elements than the caller allowed."""

    def __init__(self, message: str, size: int):
        super().__init__(message)
        self.size = size


class SignConflictError(ValueError):
    """The group contains (-1, id), so no canonical signed form exists."""


class SymmetryGroup:
    """A finite group of signed permutations given by generators."""

    __slots__ = ("degree", "generators")

    def __init__(self, degree: int, generators: Sequence[SignedPermutation]):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} does not match group degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", gens)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetryGroup is immutable")

    def __repr__(self) -> str:
        return f"SymmetryGroup({self.degree}, {list(self.generators)})"


class SchreierVector:
    """Orbit tree in edge-label form.

    ``entries`` maps each orbit point to the generator whose action reached
    it from an earlier point; the root maps to None.  ``trace`` walks the
    labels back to the root and multiplies them out.
    """

    __slots__ = ("root", "entries", "degree")

    def __init__(self, root: int, entries: dict, degree: int):
        self.root = root
        self.entries = entries
        self.degree = degree

    def __contains__(self, point: int) -> bool:
        return point in self.entries

    def __repr__(self) -> str:
        return f"SchreierVector(root={self.root}, orbit_size={len(self.entries)})"


def orbit_and_vector(gens: Sequence[SignedPermutation], root: int, degree: Optional[int] = None):
    """Orbit of ``root`` under ``gens`` plus its Schreier vector.

    The orbit is returned in discovery order: breadth-first, expanding
    points in the order found and generators in the order given, so the
    result is reproducible.
    """
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")
    if not 1 <= root <= degree:
        raise ValueError(f"root {root} out of range 1..{degree}")

    entries: dict = {root: None}
    orbit = [root]
    i = 0
    while i < len(orbit):
        p0 = orbit[i] - 1
        i += 1
        for g in gens:
            q = g._img0[p0] + 1
            if q not in entries:
                entries[q] = g
                orbit.append(q)
    return tuple(orbit), SchreierVector(root, entries, degree)


def trace(q: int, sv: SchreierVector) -> SignedPermutation:
    """The signed permutation accumulated along the orbit tree from the root to q.

    Satisfies ``trace(q, sv).apply(sv.root) == q``; signs multiply along the
    path.  Raises ValueError when q is not in the orbit.
    """
    if q not in sv.entries:
        raise ValueError(f"point {q} is not in the orbit of {sv.root}")
    labels = []
    p = q
    while (g := sv.entries[p]) is not None:
        labels.append(g)
        p = g._img0.index(p - 1) + 1
    w = SignedPermutation.identity(sv.degree)
    for g in reversed(labels):
        w = w * g
    return w


@dataclass(frozen=True)
class ChainLevel:
    """One level of a stabilizer chain."""

    base_point: int
    generators: tuple
    orbit: tuple
    vector: SchreierVector


class StabilizerChain:
    """Base, strong generating set and per-level orbit data."""

    __slots__ = ("degree", "base", "levels", "strong_generators", "sign_residue")

    def __init__(self, degree, base, levels, strong_generators, sign_residue):
        self.degree = degree
        self.base = base
        self.levels = levels
        self.strong_generators = strong_generators
        self.sign_residue = sign_residue

    def order(self) -> int:
        """Order of the generated signed group (doubled when (-1, id) is inside)."""
        total = 1
        for lvl in self.levels:
            total *= len(lvl.orbit)
        return total * 2 if self.sign_residue else total

    def permutation_order(self) -> int:
        """Order of the plain permutation group obtained by dropping signs."""
        total = 1
        for lvl in self.levels:
            total *= len(lvl.orbit)
        return total

    def __repr__(self) -> str:
        return (
            f"StabilizerChain(degree={self.degree}, base={list(self.base)}, "
            f"order={self.order()}, sign_residue={self.sign_residue})"
        )


# ---------------------------------------------------------------------------
# Schreier-Sims
#
# Deterministic bottom-up construction.  Levels are verified deepest first;
# every Schreier generator of a level is sifted through the (already
# verified) chain below it.  A sift that fails contributes a new strong
# generator and verification resumes at the level it failed on.  The inner
# loop works on whole batches of Schreier generators at once as integer
# matrices, which keeps the n^5-ish verification affordable at high rank;
# the algorithm itself is the plain textbook one.
# ---------------------------------------------------------------------------


class _EngineLevel:
    __slots__ = ("beta", "gen_ids", "orbit", "pos", "U", "Us", "Uinv", "wm_pts", "wm_gens")


class _Engine:
    def __init__(self, n: int, hint0: list):
        self.n = n
        self.dtype = np.int16 if n <= 32767 else np.int32
        self.ident = np.arange(n, dtype=self.dtype)
        self.hint0 = hint0
        self.cursor = 0
        self.arrs: list = []
        self.signs: list = []
        self.sps: list = []
        self.base0: list = []
        self.levels: list = []
        self.sign_residue = False

    def add_input_gen(self, sp: SignedPermutation):
        if sp.is_identity():
            if sp.sign < 0:
                self.sign_residue = True
            return
        self.arrs.append(np.array(sp._img0, dtype=self.dtype))
        self.signs.append(sp.sign)
        self.sps.append(sp)

    # -- base selection -----------------------------------------------------

    def _next_base_point(self, candidate_gen_ids) -> int:
        # Base-list points are consumed from the hint first (in hint order,
        # even if currently fixed — the caller's point order must stay a
        # prefix-extension of the base).  Otherwise: smallest moved point.
        if self.cursor < len(self.hint0):
            b = self.hint0[self.cursor]
            self.cursor += 1
            return b
        moved = self.n
        for k in candidate_gen_ids:
            d = np.flatnonzero(self.arrs[k] != self.ident)
            if len(d) and d[0] < moved:
                moved = int(d[0])
        if moved == self.n:
            raise AssertionError("no moved point among candidate generators")
        return moved

    def _derived_gen_ids(self, t: int) -> list:
        prefix = self.base0[:t]
        out = []
        for k, arr in enumerate(self.arrs):
            if all(int(arr[b]) == b for b in prefix):
                out.append(k)
        return out

    def _stab_gen_ids(self) -> list:
        return self._derived_gen_ids(len(self.base0))

    # -- level structures ---------------------------------------------------

    def _build_level(self, t: int, gen_ids: list) -> _EngineLevel:
        n, dtype = self.n, self.dtype
        beta = self.base0[t]
        pos = np.full(n, -1, dtype=np.int32)
        orbit = [beta]
        pos[beta] = 0
        urows = [self.ident]
        usigns = [1]
        i = 0
        while i < len(orbit):
            p = orbit[i]
            u = urows[i]
            us = usigns[i]
            for gid in gen_ids:
                arr = self.arrs[gid]
                q = int(arr[p])
                if pos[q] < 0:
                    pos[q] = len(orbit)
                    orbit.append(q)
                    urows.append(arr[u])
                    usigns.append(us * self.signs[gid])
            i += 1
        lvl = _EngineLevel()
        lvl.beta = beta
        lvl.gen_ids = gen_ids
        lvl.orbit = np.array(orbit, dtype=np.int32)
        lvl.pos = pos
        lvl.U = np.vstack(urows)
        lvl.Us = np.array(usigns, dtype=np.int8)
        r = len(orbit)
        Uinv = np.empty_like(lvl.U)
        Uinv[np.arange(r)[:, None], lvl.U] = self.ident[None, :]
        lvl.Uinv = Uinv
        lvl.wm_pts = 0
        lvl.wm_gens = 0
        return lvl

    def _ensure_level(self, t: int):
        derived = self._derived_gen_ids(t)
        lvl = self.levels[t]
        if lvl is None or lvl.gen_ids != derived:
            self.levels[t] = self._build_level(t, derived)

    # -- verification -------------------------------------------------------

    def _scan_level(self, t: int):
        """Sift all unprocessed Schreier generators of level t.

        Returns None when every one lies in the group below (watermark is
        then advanced), otherwise ("fail", row, sign, level) for the first
        residue in processing order, where ``level`` is the level whose
        orbit the residue escapes (None: it fixes the whole base).
        """
        lvl = self.levels[t]
        n, dtype, ident = self.n, self.dtype, self.ident
        r = len(lvl.orbit)
        G = len(lvl.gen_ids)
        if lvl.wm_pts == r and lvl.wm_gens == G:
            return None
        qidx = []
        gidx = []
        for pi in range(r):
            for gi in range(G):
                if pi >= lvl.wm_pts or gi >= lvl.wm_gens:
                    qidx.append(pi)
                    gidx.append(gi)
        m = len(qidx)
        qarr = np.array(qidx, dtype=np.intp)
        garr_sel = np.array(gidx, dtype=np.intp)

        E = np.empty((m, n), dtype=dtype)
        Es = np.ones(m, dtype=np.int8)
        for gi in range(G):
            sel = np.flatnonzero(garr_sel == gi)
            if not len(sel):
                continue
            rows = qarr[sel]
            gid = lvl.gen_ids[gi]
            arr = self.arrs[gid]
            A = lvl.U[rows]
            B = arr[A]                      # compose(u_q, g)
            qg = arr[lvl.orbit[rows]]
            cpos = lvl.pos[qg]
            D = lvl.Uinv[cpos]
            E[sel] = np.take_along_axis(D, B.astype(np.intp, copy=False), axis=1)
            Es[sel] = lvl.Us[rows] * self.signs[gid] * lvl.Us[cpos]

        def drop_identities(E, Es):
            done = (E == ident).all(axis=1)
            if done.any():
                if (Es[done] < 0).any():
                    self.sign_residue = True
                keep = ~done
                return E[keep], Es[keep]
            return E, Es

        E, Es = drop_identities(E, Es)
        for k in range(t + 1, len(self.levels)):
            if not len(E):
                break
            lk = self.levels[k]
            c = E[:, lk.beta]
            cpos = lk.pos[c]
            bad = np.flatnonzero(cpos < 0)
            if len(bad):
                j = int(bad[0])
                return ("fail", E[j].copy(), int(Es[j]), k)
            moved = np.flatnonzero(c != lk.beta)
            if len(moved):
                sub = cpos[moved]
                E[moved] = np.take_along_axis(
                    lk.Uinv[sub], E[moved].astype(np.intp, copy=False), axis=1
                )
                Es[moved] = Es[moved] * lk.Us[sub]
                E, Es = drop_identities(E, Es)
        if len(E):
            return ("fail", E[0].copy(), int(Es[0]), None)
        lvl.wm_pts = r
        lvl.wm_gens = G
        return None

    # -- main loop ----------------------------------------------------------

    def run(self):
        remaining = list(range(len(self.arrs)))
        while remaining:
            b = self._next_base_point(remaining)
            self.base0.append(b)
            remaining = [k for k in remaining if int(self.arrs[k][b]) == b]
        self.levels = [None] * len(self.base0)
        if not self.levels:
            return
        i = len(self.levels) - 1
        while i >= 0:
            self._ensure_level(i)
            res = self._scan_level(i)
            if res is None:
                i -= 1
                continue
            _, row, sgn, fail_level = res
            sp = SignedPermutation._from_img0(sgn, tuple(int(x) for x in row))
            self.arrs.append(np.array(row, dtype=self.dtype))
            self.signs.append(sgn)
            self.sps.append(sp)
            if fail_level is not None:
                i = fail_level
                continue
            # The residue fixes every current base point: extend the base.
            arr = self.arrs[-1]
            while all(int(arr[b]) == b for b in self.base0):
                b = self._next_base_point(self._stab_gen_ids())
                self.base0.append(b)
                self.levels.append(None)
            i = len(self.levels) - 1

    def build_chain(self) -> StabilizerChain:
        n = self.n
        base = tuple(b + 1 for b in self.base0)
        levels = []
        for t in range(len(self.base0)):
            gens = tuple(self.sps[k] for k in self._derived_gen_ids(t))
            orbit, sv = orbit_and_vector(gens, self.base0[t] + 1, degree=n)
            levels.append(ChainLevel(self.base0[t] + 1, gens, orbit, sv))
        return StabilizerChain(
            degree=n,
            base=base,
            levels=tuple(levels),
            strong_generators=tuple(self.sps),
            sign_residue=self.sign_residue,
        )


def schreier_sims(group: SymmetryGroup, base_hint: Optional[Sequence[int]] = None) -> StabilizerChain:
    """Build a stabilizer chain with a strong generating set for ``group``.

    Base points are chosen deterministically: points from ``base_hint`` are
    consumed first (in order), after that the smallest point moved by the
    current stabilizer's generators.  Generators equal to (+1, id) are
    dropped; (-1, id), whether passed in or discovered while sifting, sets
    ``sign_residue`` instead of being kept.
    """
    n = group.degree
    hint0: list = []
    if base_hint is not None:
        seen = set()
        for p in base_hint:
            if not 1 <= p <= n:
                raise ValueError(f"base hint point {p} out of range 1..{n}")
            if p in seen:
                raise ValueError(f"base hint repeats point {p}")
            seen.add(p)
            hint0.append(p - 1)
    engine = _Engine(n, hint0)
    for sp in group.generators:
        engine.add_input_gen(sp)
    engine.run()
    return engine.build_chain()


class Membership(enum.Enum):
    IN_GROUP = "in group"
    OPPOSITE_SIGN = "opposite sign"
    NOT_IN_GROUP = "not in group"


def membership(chain: StabilizerChain, s: SignedPermutation) -> Membership:
    """Sift ``s`` through the chain.

    NOT_IN_GROUP when the permutation part fails to factor through the
    chain; otherwise IN_GROUP / OPPOSITE_SIGN according to whether the
    accumulated sign matches ``s.sign``.  When the chain has a sign
    residue, both signs of a factoring permutation belong to the group.
    """
    if s.degree != chain.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {chain.degree}")
    w = s
    for lvl in chain.levels:
        c = w.apply(lvl.base_point)
        if c == lvl.base_point:
            continue
        if c not in lvl.vector.entries:
            return Membership.NOT_IN_GROUP
        w = w * trace(c, lvl.vector).inverse()
    if not w.is_identity():
        return Membership.NOT_IN_GROUP
    if w.sign == 1 or chain.sign_residue:
        return Membership.IN_GROUP
    return Membership.OPPOSITE_SIGN


def detect_zero(group: SymmetryGroup) -> bool:
    """True when (-1, id) lies in the generated group: the tensor vanishes."""
    return schreier_sims(group).sign_residue


def enumerate_elements(chain: StabilizerChain, cap: int = DEFAULT_CAP) -> list:
    """All elements of the chain's group, in a fixed deterministic order."""
    total = chain.order()
    if total > cap:
        raise CapExceeded(f"group order {total} exceeds cap {cap}", total)
    n = chain.degree
    elems = [SignedPermutation.identity(n)]
    for lvl in reversed(chain.levels):
        reps = [trace(q, lvl.vector) for q in lvl.orbit]
        elems = [h * u for u in reps for h in elems]
    if chain.sign_residue:
        flip = SignedPermutation._from_img0(-1, tuple(range(n)))
        elems = elems + [flip * e for e in elems]
    return elems


def right_coset(chain: StabilizerChain, s: SignedPermutation, cap: int = DEFAULT_CAP) -> list:
    """The right coset S*s = [g * s for g in S], in enumeration order."""
    if s.degree != chain.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {chain.degree}")
    return [g * s for g in enumerate_elements(chain, cap)]


def independent_transversal(chain: StabilizerChain, order: BaseOrder, cap: int = DEFAULT_CAP) -> list:
    """Minimal representatives, one per right coset of the group in all of S_n.

    Each representative carries sign +1 and is the order-minimal signed
    permutation of its coset; the list is sorted by the order.  Refuses
    sign-residue chains (every coset would collapse to zero) and indexes
    larger than ``cap``.
    """
    if chain.sign_residue:
        raise SignConflictError("the group contains (-1, id); the tensor is identically zero")
    n = chain.degree
    index = math.factorial(n) // chain.permutation_order()
    if index > cap:
        raise CapExceeded(f"transversal size {index} exceeds cap {cap}", index)
    from .canonical import canonical_rep

    start_rep = canonical_rep(chain, order, SignedPermutation.identity(n)).rep
    start = SignedPermutation._from_img0(1, start_rep._img0)
    reps = {start._img0: start}
    frontier = [start]
    swaps = [SignedPermutation.from_cycles([(i, i + 1)], n) for i in range(1, n)]
    while frontier:
        x = frontier.pop()
        for t in swaps:
            y = canonical_rep(chain, order, x * t).rep
            key = y._img0
            if key not in reps:
                fresh = SignedPermutation._from_img0(1, key)
                reps[key] = fresh
                frontier.append(fresh)
    return sorted(reps.values(), key=order.perm_key)
