"""Canonical forms for an antisymmetric tensor, and detecting identically
zero tensors.

An antisymmetric rank-3 tensor has one independent component: every
ordering of three distinct indices reduces to the sorted one with a sign.
A tensor that is both symmetric and antisymmetric in the same pair of
slots must vanish; the library reports that as a zero canonical form.
"""

from tcanon.tensor import (
    TensorConfiguration,
    TensorSymmetrySpec,
    canonicalize,
    shortcut_generators,
    symmetry_chain,
)


def all_orderings(spec):
    from itertools import permutations

    for labels in permutations("abc"):
        config = TensorConfiguration(spec.name, labels)
        form = canonicalize(spec, config)
        sign = "-" if form.sign < 0 else "+"
        print("  T[{}] -> {}T[{}]".format(",".join(labels), sign, ",".join(form.labels)))


if __name__ == "__main__":
    antisym = TensorSymmetrySpec(
        "T", 3, shortcut_generators("antisymmetric", [1, 2, 3], 3)
    )
    print("antisymmetric rank 3, all 6 orderings:")
    all_orderings(antisym)

    print()
    print("repeated index is rejected (these are free indices):")
    try:
        canonicalize(antisym, TensorConfiguration("T", ("a", "a", "b")))
    except Exception as e:
        print("  ", type(e).__name__, "-", e)

    # symmetric and antisymmetric in the same slots: T[b,a] = T[a,b] = -T[a,b]
    zero = TensorSymmetrySpec(
        "Z", 2,
        shortcut_generators("symmetric", [1, 2], 2)
        + shortcut_generators("antisymmetric", [1, 2], 2),
    )
    chain = symmetry_chain(zero)
    print()
    print("symmetric + antisymmetric in the same pair:")
    print("  group contains the negated identity:", chain.sign_residue)
    form = canonicalize(zero, TensorConfiguration("Z", ("a", "b")))
    print("  canonical form of Z[a,b]:", form)
