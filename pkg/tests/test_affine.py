from fractions import Fraction
from itertools import product

import pytest

from toroidal_irreps.affine import (
    AffineData,
    AffineWeight,
    LoopModule,
    build_irreducible,
    freudenthal_affine,
    freudenthal_table,
    is_dominant,
    loop_action,
    weight_membership_prop24iv,
)
from toroidal_irreps.hwmodule import (
    TruncationError,
    combine,
    commutator,
    operators_equal,
    verma_gram,
)
from toroidal_irreps import _exact
from toroidal_irreps.rootsys import build_root_system

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def partitions(n):
    """Partition counts by the pentagonal-free recursion over largest part."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for m in range(n + 1):
        table[0][m] = 1
    for total in range(1, n + 1):
        for m in range(1, n + 1):
            table[total][m] = table[total][m - 1] + (table[total - m][m] if m <= total else 0)
    return [table[j][n] for j in range(n + 1)]


def test_is_dominant_examples():
    assert is_dominant(AffineWeight(1, (0,)), A1)
    assert not is_dominant(AffineWeight(1, (2,)), A1)
    assert is_dominant(AffineWeight(1, (0,), Fraction(15, 2)), A1)


def test_basic_module_partition_numbers():
    mod = build_irreducible(A1, AffineWeight(1, (0,)), 6)
    table = freudenthal_table(A1, AffineWeight(1, (0,)), 6)
    want = partitions(6)
    assert want == [1, 1, 2, 3, 5, 7, 11]
    assert [mod.dim((j, j)) for j in range(7)] == want
    assert [table[(j, j)] for j in range(7)] == want


def test_build_examples():
    lam = AffineWeight(1, (0,))
    mod = build_irreducible(A1, lam, 3)
    assert mod.mult(lam) == 1
    assert mod.mult(lam - AffineData(A1).simple_root(1)) == 1
    assert freudenthal_affine(A1, lam, lam - AffineData(A1).delta.scaled(2), 3) == 2
    assert freudenthal_affine(A1, lam, lam + AffineData(A1).simple_root(0), 3) == 0
    with pytest.raises(TruncationError):
        mod.mult(lam - AffineData(A1).delta.scaled(5))


def test_build_errors():
    with pytest.raises(ValueError, match="use LoopModule"):
        build_irreducible(A1, AffineWeight(0, (0,)), 2)
    with pytest.raises(ValueError, match="not dominant"):
        build_irreducible(A1, AffineWeight(1, (2,)), 2)


@pytest.mark.parametrize(
    "rs, lam, depth",
    [
        (A1, AffineWeight(1, (1,)), 5),
        (A1, AffineWeight(2, (0,)), 4),
        (A1, AffineWeight(2, (1,)), 4),
        (A1, AffineWeight(2, (2,)), 4),
        (A2, AffineWeight(1, (0, 0)), 3),
        (A2, AffineWeight(1, (1, 0)), 2),
    ],
)
def test_gram_rank_matches_freudenthal(rs, lam, depth):
    mod = build_irreducible(rs, lam, depth)
    table = freudenthal_table(rs, lam, depth)
    assert {k: d for k, d in mod.module.dims.items() if d} == table


def test_full_word_gram_agrees():
    data = AffineData(A1)
    lam = AffineWeight(2, (1,))
    mod = build_irreducible(A1, lam, 2)
    for beta in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        _, gram = verma_gram(data.cartan, data.labels(lam), beta)
        assert _exact.rank(gram) == mod.dim(beta)


def test_chevalley_relations():
    for rs, lam, depth in [(A1, AffineWeight(2, (1,)), 3), (A2, AffineWeight(1, (0, 1)), 2)]:
        mod = build_irreducible(rs, lam, depth)
        data = mod.data
        m = rs.rank + 1
        for i, j in product(range(m), repeat=2):
            bracket = commutator(mod.e(i), mod.f(j))
            if i == j:
                h = mod.module.diagonal([int(a == i) for a in range(m)])
                assert operators_equal(bracket, h)
            else:
                assert bracket.is_zero()
            hi = mod.module.diagonal([int(a == i) for a in range(m)])
            ej = mod.e(j)
            lhs = commutator(hi, ej)
            assert operators_equal(lhs, ej.scaled(data.cartan[i][j]))


def test_integrability_strings():
    mod = build_irreducible(A1, AffineWeight(2, (1,)), 4)
    for i in range(2):
        f = mod.f(i)
        for key in mod.keys:
            p = int(mod.module.pairing(key, i))
            q = 0
            while mod.dim(tuple(c - (q + 1) * int(j == i) for j, c in enumerate(key))):
                q += 1
            # the i-string through key runs from key - q alpha_i down p + q steps
            for r in range(mod.dim(key)):
                vec = {key: [Fraction(int(c == r)) for c in range(mod.dim(key))]}
                try:
                    for _ in range(max(p + q + 1, 0)):
                        vec = f.apply(vec)
                except TruncationError:
                    continue
                assert not vec


def test_loop_realizer_brackets():
    mod = build_irreducible(A1, AffineWeight(1, (0,)), 4)
    h1 = mod.cartan_op((1,))
    K = mod.cartan_op((), K=1)
    lhs = commutator(mod.loop("E12", 1), mod.loop("E21", -1))
    assert operators_equal(lhs, combine([(1, h1), (1, K)]))
    lhs = commutator(mod.cartan_loop((1,), 1), mod.cartan_loop((1,), -1))
    assert operators_equal(lhs, K.scaled(2))
    lhs = commutator(mod.cartan_loop((1,), 1), mod.loop("E12", 1))
    assert operators_equal(lhs, mod.loop("E12", 2).scaled(2))


def test_loop_realizer_a2():
    mod = build_irreducible(A2, AffineWeight(1, (0, 0)), 3)
    lhs = commutator(mod.loop("E12", 1), mod.loop("E23", 0))
    assert operators_equal(lhs, mod.loop("E13", 1))
    lhs = commutator(mod.loop("E13", 1), mod.loop("E31", -1))
    rhs = combine([(1, mod.cartan_op((1, 1))), (1, mod.cartan_op((), K=1))])
    assert operators_equal(lhs, rhs)


def test_weight_membership():
    for lam, r in [
        (AffineWeight(1, (0,)), 0),
        (AffineWeight(2, (2,)), -1),
        (AffineWeight(2, (2,)), 0),
        (AffineWeight(2, (1,), 3), 2),
        (AffineWeight(2, (0,)), -2),
    ]:
        mod = build_irreducible(A1, lam, 3)
        assert weight_membership_prop24iv(mod, r)
    mod = build_irreducible(A2, AffineWeight(2, (1, 1)), 2)
    assert weight_membership_prop24iv(mod, -1)
    with pytest.raises(TruncationError):
        weight_membership_prop24iv(build_irreducible(A1, AffineWeight(1, (0,)), 1), -3)


def test_loop_module_examples():
    m = LoopModule(A1, [(0,)], [2], Fraction(1, 2), window=(-2, 2))
    (lab,) = [b for b in m.basis() if b[1] == 0]
    assert loop_action(m, "E12", 1, {lab: 1}) == {}
    assert loop_action(m, "K", 0, {lab: 1}) == {}
    assert loop_action(m, "d", 0, {lab: 1}) == {lab: Fraction(1, 2)}

    m = LoopModule(A1, [(2,)], [2], 0, window=(-2, 2))
    top = [b for b in m.basis() if b[1] == 0 and m.weight(b).finite == (2,)][0]
    out = loop_action(m, "E21", 1, {top: 1})
    assert len(out) == 1
    (lab, c), = out.items()
    assert lab[1] == 1 and m.weight(lab).finite == (0,)
    fx = loop_action(m, "E21", 0, {top: 1})
    assert list(fx.values()) == [c / 2]
    with pytest.raises(TruncationError):
        loop_action(m, "E12", 3, {top: 1})


def test_loop_module_brackets(rng):
    m = LoopModule(A1, [(1,), (2,)], [Fraction(1), Fraction(-3)], 0, window=(-4, 4))
    basis = m.basis()
    labels = ["E12", "E21", "H1"]
    for _ in range(50):
        x, y = rng.choice(labels), rng.choice(labels)
        s, u = rng.randint(-1, 1), rng.randint(-1, 1)
        start = rng.choice([b for b in basis if abs(b[1]) <= 2])
        vec = {start: 1}
        lhs = {}
        for k, v in loop_action(m, x, s, loop_action(m, y, u, vec)).items():
            lhs[k] = lhs.get(k, 0) + v
        for k, v in loop_action(m, y, u, loop_action(m, x, s, vec)).items():
            lhs[k] = lhs.get(k, 0) - v
        lhs = {k: v for k, v in lhs.items() if v}
        from toroidal_irreps.lie import sl

        br = sl(1).bracket({x: 1}, {y: 1})
        rhs = loop_action(m, dict(br), s + u, vec) if br else {}
        assert lhs == rhs


def test_loop_module_weight_dims():
    m = LoopModule(A1, [(1,), (2,)], [1, 2], 0, window=(0, 0))
    dims = m.weight_dims()
    a = A1.finite_multiplicities((1,))
    b = A1.finite_multiplicities((2,))
    want = {}
    for (x, ma), (y, mb) in product(a.items(), b.items()):
        want[(x[0] + y[0],)] = want.get((x[0] + y[0],), 0) + ma * mb
    assert {mu.finite: d for mu, d in dims.items()} == want
