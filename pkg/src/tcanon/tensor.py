"""Tensors with free indices and permutation symmetries.

A tensor species is its name, rank and the signed permutations generating
its slot symmetry.  A configuration is the tensor written with concrete
index labels in some order, possibly with an overall minus sign.  Sorting
the labels gives the standard configuration; any other configuration is a
signed permutation applied to it, which is what the group machinery acts
on.  ``canonicalize`` rewrites a configuration into the unique minimal
form (or reports that the symmetry forces the tensor to vanish).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .canonical import canonical_rep
from .chain import (
    DEFAULT_CAP,
    StabilizerChain,
    SymmetryGroup,
    right_coset,
    schreier_sims,
)
from .order import BaseOrder
from .perm import SignedPermutation

__all__ = [
    "FreeIndexViolation",
    "TensorSymmetrySpec",
    "TensorConfiguration",
    "CanonicalForm",
    "shortcut_generators",
    "config_to_perm",
    "perm_to_config",
    "symmetry_chain",
    "canonicalize",
    "equivalent_configs",
]


class FreeIndexViolation(ValueError):
    """A free index appeared more than once in a configuration."""


def shortcut_generators(kind: str, slots: Sequence[int], rank: int) -> tuple:
    """Generators for a (anti)symmetric block of slots.

    Adjacent transpositions over the listed slots, each carrying sign +1
    for ``symmetric`` or -1 for ``antisymmetric``.
    """
    if kind not in ("symmetric", "antisymmetric"):
        raise ValueError(f"unknown symmetry kind {kind!r}")
    slots = list(slots)
    if len(slots) < 2:
        raise ValueError("a symmetry block needs at least two slots")
    if len(set(slots)) != len(slots):
        raise ValueError(f"slots {slots} contain repeats")
    for s in slots:
        if not 1 <= s <= rank:
            raise ValueError(f"slot {s} out of range 1..{rank}")
    sign = 1 if kind == "symmetric" else -1
    return tuple(
        SignedPermutation.from_cycles([(slots[t], slots[t + 1])], rank, sign)
        for t in range(len(slots) - 1)
    )


@dataclass(frozen=True)
class TensorSymmetrySpec:
    """Name, rank and symmetry generators of one tensor species."""

    name: str
    rank: int
    generators: tuple = ()
    provenance: tuple = ()

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"tensor name {self.name!r} is not an identifier")
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        for g in self.generators:
            if g.degree != self.rank:
                raise ValueError(
                    f"generator degree {g.degree} does not match rank {self.rank}"
                )

    def group(self) -> SymmetryGroup:
        return SymmetryGroup(self.rank, self.generators)

    def _key(self) -> tuple:
        gens = tuple(sorted((g.sign, g._img0) for g in self.generators))
        return (self.name, self.rank, gens)


@dataclass(frozen=True)
class TensorConfiguration:
    """A tensor written with concrete labels, e.g. -T[b,a,c]."""

    name: str
    labels: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        seen = set()
        for lab in self.labels:
            if lab in seen:
                raise FreeIndexViolation(f"free index {lab!r} appears more than once")
            seen.add(lab)


@dataclass(frozen=True)
class CanonicalForm:
    """Result of canonicalization: either zero or a signed label list."""

    zero: bool
    sign: Optional[int] = None
    labels: Optional[tuple] = None

    @classmethod
    def zero_form(cls) -> "CanonicalForm":
        return cls(zero=True)

    @classmethod
    def of(cls, sign: int, labels: Sequence[str]) -> "CanonicalForm":
        return cls(zero=False, sign=sign, labels=tuple(labels))


def config_to_perm(spec: TensorSymmetrySpec, config: TensorConfiguration) -> SignedPermutation:
    """The signed permutation carrying the standard configuration to ``config``.

    Standard labels are the configuration's labels sorted ascending; slot k
    of the configuration holds standard label number apply(k).
    """
    _check_config(spec, config)
    std = sorted(config.labels)
    index = {lab: i + 1 for i, lab in enumerate(std)}
    images = [index[lab] for lab in config.labels]
    return SignedPermutation(config.sign, images)


def perm_to_config(
    spec: TensorSymmetrySpec, s: SignedPermutation, standard_labels: Sequence[str]
) -> TensorConfiguration:
    """Inverse of ``config_to_perm`` for a given sorted label alphabet."""
    if s.degree != spec.rank:
        raise ValueError(f"degree {s.degree} does not match rank {spec.rank}")
    std = list(standard_labels)
    if len(std) != spec.rank:
        raise ValueError(f"expected {spec.rank} labels, got {len(std)}")
    labels = tuple(std[s._img0[k]] for k in range(spec.rank))
    return TensorConfiguration(spec.name, labels, s.sign)


def _check_config(spec: TensorSymmetrySpec, config: TensorConfiguration):
    if config.name != spec.name:
        raise ValueError(f"configuration is for {config.name!r}, spec is {spec.name!r}")
    if len(config.labels) != spec.rank:
        raise ValueError(
            f"configuration has {len(config.labels)} labels, rank is {spec.rank}"
        )


_chain_cache: dict = {}
_chain_lock = threading.Lock()


def symmetry_chain(
    spec: TensorSymmetrySpec, base_override: Optional[Sequence[int]] = None
) -> StabilizerChain:
    """Stabilizer chain for the spec's symmetry group, cached per spec."""
    key = (spec._key(), tuple(base_override) if base_override is not None else None)
    chain = _chain_cache.get(key)
    if chain is None:
        chain = schreier_sims(spec.group(), base_override)
        with _chain_lock:
            _chain_cache.setdefault(key, chain)
            chain = _chain_cache[key]
    return chain


def _base_order(spec, chain, base_override) -> BaseOrder:
    if base_override is None:
        return BaseOrder.for_chain(chain)
    override = tuple(base_override)
    if sorted(override) != list(range(1, spec.rank + 1)):
        raise ValueError(
            f"base override {list(override)} is not a permutation of 1..{spec.rank}"
        )
    return BaseOrder(override)


def canonicalize(
    spec: TensorSymmetrySpec,
    config: TensorConfiguration,
    base_override: Optional[Sequence[int]] = None,
) -> CanonicalForm:
    """Unique minimal form of ``config`` under the spec's symmetries.

    Returns the zero form when the symmetry group contains (-1, id), i.e.
    when the tensor is identically zero.
    """
    _check_config(spec, config)
    chain = symmetry_chain(spec, base_override)
    if chain.sign_residue:
        return CanonicalForm.zero_form()
    order = _base_order(spec, chain, base_override)
    rep = canonical_rep(chain, order, config_to_perm(spec, config)).rep
    std = sorted(config.labels)
    labels = tuple(std[rep._img0[k]] for k in range(spec.rank))
    return CanonicalForm.of(rep.sign, labels)


def equivalent_configs(
    spec: TensorSymmetrySpec, config: TensorConfiguration, cap: int = DEFAULT_CAP
) -> list:
    """Every configuration equal to ``config`` up to symmetry, signs included."""
    _check_config(spec, config)
    chain = symmetry_chain(spec)
    coset = right_coset(chain, config_to_perm(spec, config), cap)
    std = sorted(config.labels)
    return [perm_to_config(spec, s, std) for s in coset]
