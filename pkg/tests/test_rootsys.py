from itertools import product

import pytest

from toroidal_irreps.rootsys import build_root_system, cartan_matrix

CLASSICAL_COUNTS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 12, ("B", 2): 8, ("B", 3): 18, ("C", 3): 18,
    ("D", 4): 24, ("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
}


def closure_roots(cartan):
    """All roots as the orbit of the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        beta = todo.pop()
        for i in range(n):
            pairing = sum(beta[j] * cartan[j][i] for j in range(n))
            img = tuple(b - pairing * int(j == i) for j, b in enumerate(beta))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    return seen


@pytest.mark.parametrize("letter, rank", sorted(CLASSICAL_COUNTS))
def test_root_counts_match_reflection_closure(letter, rank):
    rs = build_root_system(letter, rank)
    oracle = closure_roots(rs.cartan)
    assert set(rs.roots) == oracle
    assert len(rs.roots) == CLASSICAL_COUNTS[(letter, rank)]
    positives = [r for r in oracle if all(c >= 0 for c in r)]
    assert rs.theta == max(positives, key=sum)
    assert rs.root_norm(rs.theta) == 2


def test_small_examples():
    a1 = build_root_system("A1")
    assert set(a1.roots) == {(1,), (-1,)} and a1.theta == (1,)
    a2 = build_root_system("A2")
    assert a2.theta == (1, 1)
    assert build_root_system("G2").theta == (3, 2)
    assert build_root_system("B2").theta_s != build_root_system("B2").theta


def test_invalid_type():
    with pytest.raises(ValueError):
        cartan_matrix("B", 1)
    with pytest.raises(ValueError):
        build_root_system("Q3")


def test_form_is_weyl_invariant():
    for code in ("A2", "B2", "G2"):
        rs = build_root_system(code)
        for x, y in product(rs.roots, repeat=2):
            for a in rs.simple_roots:
                sx = rs.weight_to_root(rs.reflect(rs.root_to_weight(x), a))
                sy = rs.weight_to_root(rs.reflect(rs.root_to_weight(y), a))
                assert rs.form_roots(sx, sy) == rs.form_roots(x, y)


def test_reflect_examples(rng):
    a1 = build_root_system("A1")
    assert a1.reflect((2,), (1,)) == (-2,)
    a2 = build_root_system("A2")
    assert a2.reflect((1, 0), (1, 0)) == (-1, 1)  # omega_1 - alpha_1
    for code in ("A2", "B2", "G2"):
        rs = build_root_system(code)
        for _ in range(100):
            lam = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
            alpha = rng.choice(rs.roots)
            assert rs.reflect(rs.reflect(lam, alpha), alpha) == lam


def test_multiplicity_examples():
    a1 = build_root_system("A1")
    assert a1.finite_multiplicities((2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    a2 = build_root_system("A2")
    adj = a2.finite_multiplicities((1, 1))
    assert adj[(0, 0)] == 2 and sum(adj.values()) == 8
    with pytest.raises(ValueError):
        a1.finite_multiplicities((-1,))


@pytest.mark.parametrize("code", ["A1", "A2", "B2", "G2"])
def test_multiplicities_sum_to_weyl_dimension(code, rng):
    rs = build_root_system(code)
    bound = 2 if code == "G2" else 3
    for _ in range(20):
        lam = tuple(rng.randint(0, bound) for _ in range(rs.rank))
        mult = rs.finite_multiplicities(lam)
        assert sum(mult.values()) == rs.weyl_dimension(lam)
        for mu, m in mult.items():
            for i in range(rs.rank):
                assert mult.get(rs.simple_reflect(mu, i)) == m


def dominant_reps_of_coset(rs, lam, bound):
    """Dominant weights congruent to ``lam`` mod Q with coordinates at most ``bound``."""
    out = []
    for w in product(range(bound + 1), repeat=rs.rank):
        diff = tuple(a - b for a, b in zip(lam, w))
        if rs.in_root_lattice(diff):
            out.append(w)
    return out


@pytest.mark.parametrize("code, lam, want", [("A1", (3,), (1,)), ("A2", (2, 0), (0, 1)), ("A2", (1, 1), (0, 0)), ("G2", (2, 1), (0, 0))])
def test_minimal_coset_rep(code, lam, want):
    rs = build_root_system(code)
    _, rep = rs.minimal_coset_rep(lam)
    assert rep == want
    reps = dominant_reps_of_coset(rs, lam, 4)
    for w in reps:
        # rep is below every other dominant representative
        coords = rs.weight_to_root(tuple(a - b for a, b in zip(w, rep)))
        assert all(c >= 0 for c in coords)


def test_gamma_class_count_is_cartan_determinant():
    from toroidal_irreps.lattice import determinant

    for code in ("A1", "A2", "A3", "B2", "D4", "G2", "E6"):
        rs = build_root_system(code)
        assert len(rs.gamma_classes()) == abs(determinant(rs.cartan))
