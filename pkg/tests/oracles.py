"""Brute-force reference implementations the tests check the library against.

Everything here works on raw (sign, images) pairs, where images is a 1-based
tuple, and never calls into tcanon.  A bug in the package cannot hide behind
an oracle that shares its code.
"""

from itertools import permutations


def raw_identity(n):
    return (1, tuple(range(1, n + 1)))


def raw_mul(a, b):
    """Apply a first, then b: the image of k is b[a[k]]."""
    sa, ia = a
    sb, ib = b
    return (sa * sb, tuple(ib[p - 1] for p in ia))


def raw_inverse(a):
    sa, ia = a
    inv = [0] * len(ia)
    for k, q in enumerate(ia, start=1):
        inv[q - 1] = k
    return (sa, tuple(inv))


def close(gens, n, limit=20000):
    """The full element set generated by raw signed permutations."""
    elems = {raw_identity(n)}
    frontier = list(elems)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = raw_mul(x, g)
                if y not in elems:
                    elems.add(y)
                    fresh.append(y)
        if len(elems) > limit:
            raise RuntimeError(f"closure exceeded {limit} elements")
        frontier = fresh
    return elems


def has_sign_conflict(elems):
    """True when some permutation appears with both signs."""
    seen = {}
    for sign, imgs in elems:
        if seen.setdefault(imgs, sign) != sign:
            return True
    return False


def perm_count(elems):
    return len({imgs for _, imgs in elems})


def rank_table(base, n):
    """Point order: base points first, the rest ascending."""
    ordered = list(base) + [p for p in range(1, n + 1) if p not in set(base)]
    rank = {p: r for r, p in enumerate(ordered)}
    return ordered, rank


def raw_key(x, ordered, rank):
    """Comparison key of a raw pair: ranks of the images of the ordered points."""
    _, imgs = x
    return tuple(rank[imgs[p - 1]] for p in ordered)


def min_coset_rep(elems, s, ordered, rank):
    """The order-minimal element of {g * s : g in elems}, sign included."""
    best = None
    best_key = None
    for g in elems:
        x = raw_mul(g, s)
        k = raw_key(x, ordered, rank)
        if best_key is None or k < best_key:
            best_key = k
            best = x
    return best


def all_signed_perms(n):
    out = []
    for imgs in permutations(range(1, n + 1)):
        out.append((1, imgs))
        out.append((-1, imgs))
    return out


def parity(imgs):
    """+1 for even permutations, -1 for odd ones."""
    seen = [False] * len(imgs)
    sign = 1
    for k in range(len(imgs)):
        if seen[k]:
            continue
        length = 0
        q = k
        while not seen[q]:
            seen[q] = True
            q = imgs[q] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def random_raw_gens(rng, n, count, sign_mode):
    """Random generators; sign_mode is 'plus', 'parity' or 'free'.

    'plus' and 'parity' always produce a conflict-free group, 'free' may not.
    """
    gens = []
    for _ in range(count):
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        imgs = tuple(imgs)
        if sign_mode == "plus":
            sign = 1
        elif sign_mode == "parity":
            sign = parity(imgs)
        else:
            sign = rng.choice((1, -1))
        gens.append((sign, imgs))
    return gens
