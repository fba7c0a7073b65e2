"""Invariant suite behind ``toroidal-irreps verify``.

Each check returns ``(name, ok, detail)``; sizes are kept small so the whole
suite runs in well under a minute. The test suite runs larger versions.
"""

import random
from fractions import Fraction

from . import lattice
from .affine import AffineWeight, build_irreducible, freudenthal_table
from .garland import evaluate_under_pi, garland_p, newton_under_pi, verify_garland_on_module
from .pimod import (
    PiFunction,
    build_L,
    central_triviality_check,
    compute_G_pi,
    decompose,
    highest_vectors,
    iso_check,
    weyl_invariance_check,
)
from .rootsys import build_root_system
from .toroidal import ToroidalAlgebra, ToroidalElement, ToroidalRoot, ToroidalWeight, composite_reflection_formula


def partition_counts(n):
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            p[total] += p[total - part]
    return p


def check_partitions(depth=6):
    rs = build_root_system("A", 1)
    lam = AffineWeight(1, (0,))
    mod = build_irreducible(rs, lam, depth)
    table = freudenthal_table(rs, lam, depth)
    gram = [mod.dim((j, j)) for j in range(depth + 1)]
    freud = [table.get((j, j), 0) for j in range(depth + 1)]
    want = partition_counts(depth)
    return "partition multiplicities", gram == want == freud, {"gram": gram, "freudenthal": freud}


def check_garland(rng):
    ok = all(garland_p(s) for s in range(7))
    rs = build_root_system("A", 1)
    mod = build_irreducible(rs, AffineWeight(1, (1,)), 3)
    rep = verify_garland_on_module(mod, 1)
    ok &= rep["first"] and rep["second"]
    for _ in range(10):
        pi = _random_pi(rng, 2, 2)
        a = (rng.randint(-2, 2),)
        alpha, r = rng.choice([((1,), 0), ((-1,), 1), ((1,), 1)])
        top = int(sum(pi.pair_coroot(w, alpha, r) for w in pi.weights))
        for s in range(top + 3):
            v = evaluate_under_pi(pi, alpha, r, a, s)
            ok &= v == newton_under_pi(pi, alpha, r, a, s)
            if s > top:
                ok &= v == 0
    return "garland", ok, rep


def check_gcd(rng, count=50):
    bad = 0
    for _ in range(count):
        k = rng.randint(1, 5)
        n = [rng.randint(-50, 50) for _ in range(k)]
        if not any(n):
            n[0] = 1
        B = lattice.gcd_unimodular(n)
        image = [sum(b * x for b, x in zip(row, n)) for row in B]
        g = lattice.gcd_all(n)
        if image != [g] + [0] * (k - 1) or abs(lattice.determinant(B)) != 1:
            bad += 1
    return "gcd unimodular", bad == 0, {"instances": count, "failures": bad}


def _random_element(alg, rng):
    labels = ["H1", "E12", "E21"]
    loop = {(rng.choice(labels), tuple(rng.randint(-3, 3) for _ in range(alg.k))): rng.randint(-2, 2) for _ in range(2)}
    central = {tuple(rng.randint(-2, 2) for _ in range(alg.k)): tuple(rng.randint(-2, 2) for _ in range(alg.k))}
    deriv = [rng.randint(-1, 1) for _ in range(alg.k)]
    return ToroidalElement(alg.k, loop, central, deriv)


def check_toroidal(rng, count=50):
    ok = True
    for k in (2, 3):
        alg = ToroidalAlgebra("A1", k)
        for _ in range(count // 2):
            x, y, z = (_random_element(alg, rng) for _ in range(3))
            br = alg.bracket
            total = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))
            ok &= total.is_zero()
    alg = ToroidalAlgebra("A1", 2)
    for _ in range(10):
        beta = ToroidalRoot((rng.choice([1, -1]),), (rng.randint(-3, 3), rng.randint(-3, 3)))
        e, f, h = alg.sl2_triple(beta)
        ok &= alg.bracket(e, f) == h and alg.bracket(h, e) == e.scale(2) and alg.bracket(h, f) == f.scale(-2)
        lam = ToroidalWeight((rng.randint(-3, 3),), (rng.randint(1, 3), 0), (rng.randint(-3, 3), rng.randint(-6, 6)))
        alpha = ToroidalRoot((1,), (0, 0))
        b1 = ToroidalRoot((1,), (1, 0))
        ok &= alg.reflect(alg.reflect(lam, b1), alpha) == composite_reflection_formula(alg, lam, (1,), 0, 1)
        m = alg.pair(lam, alg.affine_root(0))
        if m > 0:
            red, _ = alg.box_reduce(lam)
            ok &= 0 <= red.d[1] < m
    return "toroidal core", ok, {}


def _random_pi(rng, k, levels=1):
    pts = set()
    while len(pts) < 2:
        pts.add(tuple(Fraction(rng.choice([1, -1, 2, -2, 3])) for _ in range(k - 1)))
    weights = []
    for _ in pts:
        level = rng.randint(1, levels)
        fin = rng.randint(0, level)
        weights.append(AffineWeight(level, (fin,)))
    return PiFunction(k, tuple(sorted(pts)), tuple(weights), "A1")


def check_pipeline():
    w = AffineWeight(1, (0,))
    pi = PiFunction(2, ((Fraction(1),), (Fraction(-1),)), (w, w), "A1")
    G = compute_G_pi(pi)
    L = build_L(pi, 2, 2)
    comps, rep = decompose(L, G)
    ok = G.basis == ((2,),) and len(comps) == 2 and rep["ok"]
    ok &= bool(highest_vectors(L)) and central_triviality_check(L)["ok"]
    ok &= weyl_invariance_check(L)["ok"]
    return "classification pipeline", ok, {"G": [list(r) for r in G.basis], "components": len(comps)}


def check_iso():
    w = AffineWeight(1, (0,))
    pi = PiFunction(2, ((Fraction(1),), (Fraction(-1),)), (w, w), "A1")
    scaled = pi.scaled((Fraction(3),))
    ok = iso_check((pi, (0,)), (scaled, (0,)))[0]
    ok &= not iso_check((pi, (0,)), (pi, (1,)))[0]
    ok &= iso_check((pi, (0,)), (pi, (2,)))[0]
    return "isomorphism test", ok, {}


def run_all(seed=0):
    rng = random.Random(seed)
    return [
        check_partitions(),
        check_garland(rng),
        check_gcd(rng),
        check_toroidal(rng),
        check_pipeline(),
        check_iso(),
    ]
