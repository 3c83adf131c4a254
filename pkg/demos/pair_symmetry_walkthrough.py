"""Walk through a rank-4 tensor with two index symmetries.

T is antisymmetric in its first two slots and invariant under swapping
the front pair with the back pair:

    T[b,a,c,d] = -T[a,b,c,d]
    T[c,d,a,b] =  T[a,b,c,d]

The demo builds the symmetry group, canonicalizes one configuration while
showing every loop step, then prints the full equivalence class and the
transversal of minimal representatives.
"""

from tcanon.canonical import canonical_rep
from tcanon.chain import independent_transversal
from tcanon.order import BaseOrder
from tcanon.perm import format_cycles, parse_cycles
from tcanon.tensor import (
    TensorConfiguration,
    TensorSymmetrySpec,
    canonicalize,
    config_to_perm,
    equivalent_configs,
    perm_to_config,
    symmetry_chain,
)


def show_group(spec, base):
    chain = symmetry_chain(spec, base_override=base)
    print("group order:", chain.order())
    print("base:", chain.base)
    print("strong generators:", ", ".join(format_cycles(g) for g in chain.strong_generators))
    for level in chain.levels:
        print(f"  stabilizer of {level.base_point}: orbit {level.orbit}")
    return chain


def show_canonicalization(spec, chain, base, labels):
    config = TensorConfiguration(spec.name, tuple(labels))
    s = config_to_perm(spec, config)
    print()
    print("input configuration:", "T[" + ",".join(labels) + "]", "=", format_cycles(s))
    result = canonical_rep(chain, BaseOrder(base), s)
    for step in result.steps:
        print(f"  base point {step.base_point}: orbit {step.orbit} maps to {step.orbit_image},")
        print(f"    minimal image at position {step.k} -> send {step.base_point} to {step.p}"
              f" via {format_cycles(step.omega)}, running product {format_cycles(step.lam)}")
    rep = result.rep
    out = perm_to_config(spec, rep, tuple(sorted(labels)))
    sign = "-" if out.sign < 0 else ""
    print("canonical representative:", format_cycles(rep),
          "=", sign + "T[" + ",".join(out.labels) + "]")


def show_class_and_transversal(spec, base, labels):
    config = TensorConfiguration(spec.name, tuple(labels))
    print()
    print("equivalence class of T[" + ",".join(labels) + "]:")
    for member in equivalent_configs(spec, config):
        sign = "-" if member.sign < 0 else " "
        print("  " + sign + "T[" + ",".join(member.labels) + "]")

    chain = symmetry_chain(spec, base_override=base)
    reps = independent_transversal(chain, BaseOrder(base))
    print()
    print("one minimal representative per coset ({} cosets):".format(len(reps)))
    for rep in reps:
        out = perm_to_config(spec, rep, tuple(sorted(labels)))
        print("  T[" + ",".join(out.labels) + "]   (" + format_cycles(rep) + ")")


if __name__ == "__main__":
    spec = TensorSymmetrySpec(
        "T", 4, (parse_cycles("-(1,2)", 4), parse_cycles("+(1,3)(2,4)", 4))
    )
    base = [1, 3, 2, 4]

    chain = show_group(spec, base)
    # the worked input: T[b,c,a,d] comes out as -T[a,d,c,b]
    show_canonicalization(spec, chain, base, ["b", "c", "a", "d"])
    show_class_and_transversal(spec, base, ["a", "b", "c", "d"])
