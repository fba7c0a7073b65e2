from itertools import product

import pytest

from toroidal_irreps import lattice
from toroidal_irreps.lattice import gcd_all, gcd_unimodular, hnf, quotient_reps


def brute_members(gens, radius, coeff=6):
    """Integer combinations of ``gens`` landing in the box, by enumeration."""
    out = set()
    for cs in product(range(-coeff, coeff + 1), repeat=len(gens)):
        v = tuple(sum(c * g[i] for c, g in zip(cs, gens)) for i in range(len(gens[0])))
        if all(abs(x) <= radius for x in v):
            out.add(v)
    return out


@pytest.mark.parametrize(
    "n, expected",
    [((5,), [[1]]), ((4, 6), [[-1, 1], [3, -2]]), ((0, 3), [[0, 1], [1, 0]])],
)
def test_gcd_examples(n, expected):
    assert gcd_unimodular(n) == expected


def test_gcd_zero_vector():
    with pytest.raises(ValueError, match="undefined gcd direction"):
        gcd_unimodular([0, 0, 0])


def test_gcd_random(rng):
    for _ in range(200):
        k = rng.randint(1, 5)
        n = [rng.randint(-50, 50) for _ in range(k)]
        if not any(n):
            continue
        B = gcd_unimodular(n)
        image = [sum(b * x for b, x in zip(row, n)) for row in B]
        assert image[0] == gcd_all(n) > 0
        assert image[1:] == [0] * (k - 1)
        assert abs(lattice.determinant(B)) == 1


def test_hnf_examples():
    assert hnf([(2,), (4,)]).basis == ((2,),)
    L = hnf([(2, 0), (0, 2), (1, 1)])
    assert L.basis == ((1, 1), (0, 2))
    assert L.index() == 2
    assert hnf([], ambient_rank=3).rank == 0


def test_hnf_matches_brute_force_membership():
    gens = [(2, 0), (0, 2), (1, 1)]
    L = hnf(gens)
    members = brute_members(gens, 4)
    for v in product(range(-4, 5), repeat=2):
        assert L.contains(v) == (v in members)


def test_hnf_random_properties(rng):
    for _ in range(50):
        k = rng.randint(1, 3)
        gens = [tuple(rng.randint(-6, 6) for _ in range(k)) for _ in range(rng.randint(1, 4))]
        L = hnf(gens, k)
        assert hnf(L.basis, k) == L
        for g in gens:
            assert L.contains(g)
            coords = L.coordinates(g)
            assert tuple(sum(c * b[i] for c, b in zip(coords, L.basis)) for i in range(k)) == g
        for row, p in zip(L.basis, L.pivots):
            assert row[p] > 0
            for other in L.basis:
                if other is not row:
                    assert 0 <= other[p] < row[p] or other[p] == 0


def test_quotient_reps():
    assert quotient_reps(hnf([(2,)])) == [(0,), (1,)]
    assert quotient_reps(hnf([(1, 0), (0, 1)])) == [(0, 0)]
    L = hnf([(1, 1), (0, 2)])
    reps = quotient_reps(L)
    assert len(reps) == abs(lattice.determinant(L.basis)) == 2
    for a in reps:
        for b in reps:
            if a != b:
                assert not L.contains(tuple(x - y for x, y in zip(a, b)))


def test_quotient_reps_random(rng):
    for _ in range(30):
        k = rng.randint(1, 3)
        gens = [tuple(rng.randint(-5, 5) for _ in range(k)) for _ in range(k + 1)]
        L = hnf(gens, k)
        if not L.is_full_rank():
            with pytest.raises(ValueError, match="infinite quotient"):
                quotient_reps(L)
            continue
        reps = quotient_reps(L)
        assert len(reps) == abs(lattice.determinant(L.basis))
        assert len({L.reduce(r) for r in reps}) == len(reps)
