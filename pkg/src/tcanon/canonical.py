"""Minimal right-coset representatives.

Given a stabilizer chain for a symmetry group S and an input element
(sign, pi), the coset S*(sign, pi) collects every signed permutation that
relabels the input into an equivalent form.  ``canonical_rep`` returns the
order-minimal element of that coset by walking the base: at each level it
moves the smallest reachable image onto the current base point and then
descends into the stabilizer.  One orbit, one Schreier-vector trace and one
product per level — no enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import SignConflictError, StabilizerChain, orbit_and_vector, trace
from .order import BaseOrder
from .perm import SignedPermutation

__all__ = ["LoopStep", "CanonicalRep", "canonical_rep", "canonical_sign_of_coset"]


@dataclass(frozen=True)
class LoopStep:
    """State after one level of the minimisation loop.

    ``orbit`` is the orbit of ``base_point`` under the surviving generators,
    ``orbit_image`` its image under the running product, ``k`` the 1-based
    position of the order-minimal image, ``p`` the orbit point at that
    position, ``omega`` the traced transversal element and ``lam`` the
    running product after multiplying ``omega`` in.
    """

    base_point: int
    orbit: tuple
    orbit_image: tuple
    k: int
    p: int
    omega: SignedPermutation
    lam: SignedPermutation


@dataclass(frozen=True)
class CanonicalRep:
    rep: SignedPermutation
    base_image: tuple
    steps: tuple


def _check_order_compatible(chain: StabilizerChain, order: BaseOrder):
    if order.degree != chain.degree:
        raise ValueError(f"degree mismatch: order {order.degree} vs chain {chain.degree}")
    if order.ordered_points == BaseOrder.for_chain(chain).ordered_points:
        return
    # A custom order is fine as long as every point ranked before a base
    # point (and not itself an earlier base point) is fixed by that level's
    # generators; otherwise the greedy minimisation would not be minimal.
    earlier: set = set()
    for i, lvl in enumerate(chain.levels):
        rb = order.rank(lvl.base_point)
        for p in order.ordered_points[:rb]:
            if p in earlier:
                continue
            for g in lvl.generators:
                if g._img0[p - 1] != p - 1:
                    raise ValueError(
                        f"point order {list(order.ordered_points)} is incompatible with "
                        f"the chain base {list(chain.base)}: point {p} precedes base point "
                        f"{lvl.base_point} but is moved by its stabilizer"
                    )
        earlier.add(lvl.base_point)


def canonical_rep(chain: StabilizerChain, order: BaseOrder, s: SignedPermutation) -> CanonicalRep:
    """The order-minimal element of the right coset S*s, with its sign.

    The chain must be free of sign residues: if (-1, id) were in S the
    coset would contain both signs of every permutation and no canonical
    sign would exist (the tensor is zero; handle that before calling).
    """
    if chain.sign_residue:
        raise SignConflictError(
            "the group contains (-1, id); canonical forms are not defined (tensor is zero)"
        )
    if s.degree != chain.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {chain.degree}")
    _check_order_compatible(chain, order)

    n = chain.degree
    rank = order._rank
    lam = s
    gens = list(chain.strong_generators)
    steps = []
    for b in chain.base:
        orbit, sv = orbit_and_vector(gens, b, degree=n)
        lam_img0 = lam._img0
        images = tuple(lam_img0[p - 1] + 1 for p in orbit)
        kpos = min(range(len(images)), key=lambda t: rank[images[t]])
        p = orbit[kpos]
        omega = trace(p, sv)
        lam = omega * lam
        steps.append(LoopStep(b, orbit, images, kpos + 1, p, omega, lam))
        b0 = b - 1
        gens = [g for g in gens if g._img0[b0] == b0]
    base_image = tuple(lam._img0[b - 1] + 1 for b in chain.base)
    return CanonicalRep(rep=lam, base_image=base_image, steps=tuple(steps))


def canonical_sign_of_coset(chain: StabilizerChain, order: BaseOrder, s: SignedPermutation) -> int:
    """Sign carried by the order-minimal element of S*s."""
    return canonical_rep(chain, order, s).rep.sign
