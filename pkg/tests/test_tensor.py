import pytest

from tcanon.chain import CapExceeded
from tcanon.perm import SignedPermutation, parse_cycles
from tcanon.tensor import (
    CanonicalForm,
    FreeIndexViolation,
    TensorConfiguration,
    TensorSymmetrySpec,
    canonicalize,
    config_to_perm,
    equivalent_configs,
    perm_to_config,
    shortcut_generators,
    symmetry_chain,
)


def antisym3():
    return TensorSymmetrySpec("T", 3, shortcut_generators("antisymmetric", [1, 2, 3], 3))


def pair_spec():
    return TensorSymmetrySpec(
        "T", 4, (parse_cycles("-(1,2)", 4), parse_cycles("+(1,3)(2,4)", 4))
    )


def cfg(labels, sign=1, name="T"):
    return TensorConfiguration(name, tuple(labels), sign)


def test_shortcut_generators():
    gens = shortcut_generators("antisymmetric", [1, 2, 3], 3)
    assert [repr(g) for g in gens] == ["-(1,2)", "-(2,3)"]
    gens = shortcut_generators("symmetric", [2, 4], 4)
    assert [repr(g) for g in gens] == ["+(2,4)"]
    with pytest.raises(ValueError):
        shortcut_generators("cyclic", [1, 2], 2)
    with pytest.raises(ValueError):
        shortcut_generators("symmetric", [1], 2)
    with pytest.raises(ValueError):
        shortcut_generators("symmetric", [1, 1], 2)
    with pytest.raises(ValueError):
        shortcut_generators("symmetric", [1, 5], 4)


def test_spec_validation():
    with pytest.raises(ValueError):
        TensorSymmetrySpec("2bad", 3)
    with pytest.raises(ValueError):
        TensorSymmetrySpec("T", 0)
    with pytest.raises(ValueError):
        TensorSymmetrySpec("T", 3, (parse_cycles("+(1,2)", 4),))


def test_config_rejects_repeated_index():
    with pytest.raises(FreeIndexViolation):
        TensorConfiguration("T", ("a", "b", "a"))


def test_config_perm_round_trip():
    spec = pair_spec()
    c = cfg(["b", "c", "a", "d"])
    s = config_to_perm(spec, c)
    assert s == parse_cycles("+(1,2,3)", 4)
    assert perm_to_config(spec, s, ["a", "b", "c", "d"]) == c
    c2 = cfg(["d", "b", "c", "a"], sign=-1)
    s2 = config_to_perm(spec, c2)
    assert s2.sign == -1 and s2.images == (4, 2, 3, 1)
    assert perm_to_config(spec, s2, ["a", "b", "c", "d"]) == c2


def test_config_perm_validation():
    spec = pair_spec()
    with pytest.raises(ValueError):
        config_to_perm(spec, cfg(["a", "b", "c", "d"], name="U"))
    with pytest.raises(ValueError):
        config_to_perm(spec, cfg(["a", "b", "c"]))
    with pytest.raises(ValueError):
        perm_to_config(spec, SignedPermutation.identity(3), ["a", "b", "c"])
    with pytest.raises(ValueError):
        perm_to_config(spec, SignedPermutation.identity(4), ["a", "b"])


def test_antisymmetric_canonical_forms():
    spec = antisym3()
    assert canonicalize(spec, cfg(["c", "b", "a"])) == CanonicalForm.of(-1, ("a", "b", "c"))
    assert canonicalize(spec, cfg(["a", "b", "c"])) == CanonicalForm.of(1, ("a", "b", "c"))
    assert canonicalize(spec, cfg(["b", "c", "a"])) == CanonicalForm.of(1, ("a", "b", "c"))
    assert canonicalize(spec, cfg(["b", "a", "c"])) == CanonicalForm.of(-1, ("a", "b", "c"))
    # a leading minus sign on the input flips the result
    assert canonicalize(spec, cfg(["c", "b", "a"], sign=-1)) == CanonicalForm.of(1, ("a", "b", "c"))
    # the label alphabet is whatever the configuration uses
    assert canonicalize(spec, cfg(["z", "q", "m"])) == CanonicalForm.of(-1, ("m", "q", "z"))


def test_pair_spec_canonical_form_with_base_override():
    spec = pair_spec()
    form = canonicalize(spec, cfg(["b", "c", "a", "d"]), base_override=[1, 3, 2, 4])
    assert form == CanonicalForm.of(-1, ("a", "d", "c", "b"))
    # the default base for this group gives the same order and the same answer
    assert canonicalize(spec, cfg(["b", "c", "a", "d"])) == form


def test_equivalent_configs_of_standard():
    spec = pair_spec()
    got = {(c.sign, "".join(c.labels)) for c in equivalent_configs(spec, cfg("abcd"))}
    assert got == {
        (1, "abcd"), (-1, "bacd"), (-1, "abdc"), (1, "badc"),
        (1, "cdab"), (-1, "cdba"), (-1, "dcab"), (1, "dcba"),
    }


def test_equivalent_configs_of_swapped():
    spec = pair_spec()
    got = {(c.sign, "".join(c.labels)) for c in equivalent_configs(spec, cfg("acbd"))}
    assert got == {
        (1, "acbd"), (-1, "cabd"), (-1, "acdb"), (1, "cadb"),
        (1, "bdac"), (-1, "bdca"), (-1, "dbac"), (1, "dbca"),
    }
    assert len(equivalent_configs(spec, cfg("acbd"))) == 8


def test_equivalent_configs_cap():
    with pytest.raises(CapExceeded):
        equivalent_configs(antisym3(), cfg(["a", "b", "c"]), cap=5)


def test_zero_symmetry():
    spec = TensorSymmetrySpec(
        "Z",
        2,
        shortcut_generators("symmetric", [1, 2], 2)
        + shortcut_generators("antisymmetric", [1, 2], 2),
    )
    form = canonicalize(spec, cfg(["a", "b"], name="Z"))
    assert form.zero
    assert form == CanonicalForm.zero_form()
    assert form.sign is None and form.labels is None


def test_chain_cache_reuses_equal_specs():
    a = pair_spec()
    b = pair_spec()
    assert a is not b
    assert symmetry_chain(a) is symmetry_chain(b)
    assert symmetry_chain(a) is not symmetry_chain(a, base_override=[4, 3, 2, 1])


def test_base_override_validation():
    spec = pair_spec()
    with pytest.raises(ValueError):
        canonicalize(spec, cfg("abcd"), base_override=[1, 3])
    with pytest.raises(ValueError):
        canonicalize(spec, cfg("abcd"), base_override=[1, 1, 2, 4])


def test_canonical_form_constant_on_a_class():
    spec = pair_spec()
    start = cfg(["d", "a", "c", "b"], sign=-1)
    form = canonicalize(spec, start)
    for other in equivalent_configs(spec, start):
        assert canonicalize(spec, other) == form
