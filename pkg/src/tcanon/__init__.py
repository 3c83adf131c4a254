"""Canonical forms for tensors with free indices and permutation symmetries.

The package puts tensor expressions such as ``-T[b,a,d,c]`` into a unique
canonical form with the right overall sign, using stabilizer chains over
groups of signed permutations: sorting the index labels gives a standard
configuration, every other configuration is a signed permutation away from
it, and the canonical form is the minimal element of the symmetry group's
right coset through that permutation.
"""

from .perm import SignedPermutation, ParseError, compose, parse_cycles, format_cycles
from .order import BaseOrder
from .chain import (
    DEFAULT_CAP,
    CapExceeded,
    SignConflictError,
    SymmetryGroup,
    SchreierVector,
    ChainLevel,
    StabilizerChain,
    Membership,
    orbit_and_vector,
    trace,
    schreier_sims,
    membership,
    detect_zero,
    enumerate_elements,
    right_coset,
    independent_transversal,
)
from .canonical import LoopStep, CanonicalRep, canonical_rep, canonical_sign_of_coset
from .tensor import (
    FreeIndexViolation,
    TensorSymmetrySpec,
    TensorConfiguration,
    CanonicalForm,
    shortcut_generators,
    config_to_perm,
    perm_to_config,
    symmetry_chain,
    canonicalize,
    equivalent_configs,
)

__version__ = "0.1.0"

__all__ = [
    "SignedPermutation",
    "ParseError",
    "compose",
    "parse_cycles",
    "format_cycles",
    "BaseOrder",
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
    "LoopStep",
    "CanonicalRep",
    "canonical_rep",
    "canonical_sign_of_coset",
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
    "__version__",
]
