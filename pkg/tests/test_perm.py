import random

import pytest

from tcanon.perm import (
    ParseError,
    SignedPermutation,
    compose,
    format_cycles,
    parse_cycles,
)

from oracles import all_signed_perms, raw_mul


def sp(text, n=4):
    return parse_cycles(text, n)


def test_identity():
    e = SignedPermutation.identity(3)
    assert e.sign == 1
    assert e.images == (1, 2, 3)
    assert e.is_identity()
    assert e.degree == 3
    with pytest.raises(ValueError):
        SignedPermutation.identity(0)


def test_constructor_validates():
    s = SignedPermutation(-1, [2, 1, 3])
    assert s.sign == -1
    assert s.images == (2, 1, 3)
    with pytest.raises(ValueError):
        SignedPermutation(0, [1, 2])
    with pytest.raises(ValueError):
        SignedPermutation(1, [1, 1, 3])
    with pytest.raises(ValueError):
        SignedPermutation(1, [1, 2, 4])


def test_immutable_and_hashable():
    s = sp("-(1,2)")
    with pytest.raises(AttributeError):
        s.sign = 1
    assert s == sp("-(1,2)")
    assert s != sp("+(1,2)")
    assert len({s, sp("-(1,2)"), sp("+(1,2)")}) == 2


def test_apply():
    s = sp("+(1,3)(2,4)")
    assert [s.apply(p) for p in (1, 2, 3, 4)] == [3, 4, 1, 2]
    with pytest.raises(ValueError):
        s.apply(0)
    with pytest.raises(ValueError):
        s.apply(5)


def test_composition_worked_values():
    # (1,3)(2,4) followed by (1,2,3) is (2,4,3); composing the result with
    # -(3,4) gives -(2,4).
    a = sp("+(1,3)(2,4)")
    b = sp("+(1,2,3)")
    assert a * b == sp("+(2,4,3)")
    assert compose(a, b) == a * b
    assert sp("-(3,4)") * sp("+(2,4,3)") == sp("-(2,4)")


def test_composition_is_left_to_right():
    rng = random.Random(5)
    perms = all_signed_perms(4)
    for _ in range(200):
        sa, ia = rng.choice(perms)
        sb, ib = rng.choice(perms)
        a = SignedPermutation(sa, ia)
        b = SignedPermutation(sb, ib)
        c = a * b
        for p in range(1, 5):
            assert c.apply(p) == b.apply(a.apply(p))
        assert (c.sign, c.images) == raw_mul((sa, ia), (sb, ib))


def test_degree_mismatch():
    with pytest.raises(ValueError):
        sp("+(1,2)", 3) * sp("+(1,2)", 4)


def test_inverse():
    rng = random.Random(9)
    for _ in range(100):
        imgs = list(range(1, 7))
        rng.shuffle(imgs)
        s = SignedPermutation(rng.choice((1, -1)), imgs)
        e = s * s.inverse()
        assert e.is_identity()
        assert e.sign == 1
        assert s.inverse().sign == s.sign


def test_sign_is_not_parity():
    # an odd permutation may carry sign +1 and vice versa
    assert SignedPermutation(1, [2, 1]).sign == 1
    assert SignedPermutation(-1, [1, 2]).sign == -1
    assert not SignedPermutation(-1, [1, 2]).is_identity() or True
    # is_identity looks at the permutation only
    assert SignedPermutation(-1, [1, 2]).is_identity()


def test_moved_points_and_cycles():
    s = sp("-(1,4)(2,3)")
    assert s.moved_points() == (1, 2, 3, 4)
    assert s.to_cycles() == ((1, 4), (2, 3))
    assert sp("+id").to_cycles() == ()
    assert sp("+(2,4,3)").to_cycles() == ((2, 4, 3),)
    # cycles start at their smallest point
    assert SignedPermutation.from_cycles([(3, 1, 2)], 4).to_cycles() == ((1, 2, 3),)


def test_from_cycles_validation():
    with pytest.raises(ValueError):
        SignedPermutation.from_cycles([(1, 5)], 4)
    with pytest.raises(ValueError):
        SignedPermutation.from_cycles([(1, 2), (2, 3)], 4)


def test_parse_basics():
    assert parse_cycles("-(1,2)", 4) == SignedPermutation(-1, [2, 1, 3, 4])
    assert parse_cycles("+(1,3)(2,4)", 4) == SignedPermutation(1, [3, 4, 1, 2])
    assert parse_cycles("(1,2)", 4).sign == 1
    assert parse_cycles("id", 4) == SignedPermutation.identity(4)
    assert parse_cycles("-id", 4) == SignedPermutation(-1, [1, 2, 3, 4])
    assert parse_cycles("-", 4) == parse_cycles("-id", 4)
    assert parse_cycles("", 4) == SignedPermutation.identity(4)
    assert parse_cycles("  + ( 1 , 2 ) ", 4) == parse_cycles("+(1,2)", 4)


def test_parse_errors_carry_position():
    for text, n in [
        ("(1,2", 4),
        ("(1,,2)", 4),
        ("(1 2)", 4),
        ("()", 4),
        ("(1,2)x", 4),
        ("(0,1)", 4),
        ("(1,5)", 4),
        ("(1,2)(2,3)", 4),
        ("id(1,2)", 4),
        ("--", 4),
    ]:
        with pytest.raises(ParseError) as err:
            parse_cycles(text, n)
        assert isinstance(err.value.position, int)
        assert err.value.position >= 0


def test_format_round_trip():
    rng = random.Random(3)
    for _ in range(300):
        imgs = list(range(1, 8))
        rng.shuffle(imgs)
        s = SignedPermutation(rng.choice((1, -1)), imgs)
        assert parse_cycles(format_cycles(s), 7) == s
    assert format_cycles(sp("+id")) == "+id"
    assert format_cycles(sp("-(1,2)")) == "-(1,2)"
    assert format_cycles(sp("+(1,3)(2,4)")) == "+(1,3)(2,4)"
    assert repr(sp("-(2,4)")) == "-(2,4)"


def test_composition_is_associative():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 6)
        a, b, c = (
            SignedPermutation(rng.choice((1, -1)), rng.sample(range(1, n + 1), n))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


def test_negated_identity_is_central():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(1, 6)
        neg = SignedPermutation(-1, range(1, n + 1))
        s = SignedPermutation(rng.choice((1, -1)), rng.sample(range(1, n + 1), n))
        assert neg * s == s * neg
        assert (neg * s).sign == -s.sign
        assert (neg * s).images == s.images


def test_apply_law_exhaustive_small_degrees():
    from itertools import permutations

    for n in range(1, 6):
        perms = [SignedPermutation(1, imgs) for imgs in permutations(range(1, n + 1))]
        for a in perms:
            for b in perms:
                ab = a * b
                for p in range(1, n + 1):
                    assert ab.apply(p) == b.apply(a.apply(p))
