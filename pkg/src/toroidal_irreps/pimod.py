"""Pi-functions and the modules built from them.

A pi-function assigns dominant affine weights of positive level to finitely
many rational points ``b`` of ``(Q^*)^{k-1}``. From it we build the tensor
product ``X_pi`` of truncated standard modules, the looped module
``L(X_pi) = X_pi (x) C[t_2^{+-1}, ..., t_k^{+-1}]`` on a finite monomial
window, the lattice ``G_pi``, the decomposition into the pieces generated by
``v_pi (x) t^g``, and the isomorphism test.

In ``L(X_pi)`` the element ``Y (x) t_1^s t^m`` acts by
``sum_f b_f^m Y^{(f)}`` followed by ``t^m``; ``K_1 t^{(0,m)}`` acts by the
scalar ``sum_f level_f b_f^m`` followed by ``t^m``; every other central
element acts as 0 and ``d_j`` (``j >= 2``) acts by ``m_j``.
"""

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from . import _exact
from .affine import AffineData, AffineWeight, build_irreducible
from .hwmodule import Operator, commutator, operators_equal
from .lattice import hnf, quotient_reps
from .rootsys import build_root_system, parse_type
from .toroidal import ToroidalAlgebra, ToroidalRoot, ToroidalWeight


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def monomial_value(point, m):
    out = Fraction(1)
    for b, e in zip(point, m):
        out *= b ** e
    return out


@dataclass(frozen=True)
class PiFunction:
    k: int
    points: tuple
    weights: tuple
    type_code: str = "A1"

    def __post_init__(self):
        pts = tuple(tuple(_frac(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(pts) != len(self.weights):
            raise ValueError("one weight per point is required")
        if not pts:
            raise ValueError("pi must have nonempty support")
        if any(len(p) != self.k - 1 for p in pts):
            raise ValueError("points must have k-1 coordinates")
        if any(x == 0 for p in pts for x in p):
            raise ValueError("points must have nonzero coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        data = AffineData(self.root_system)
        for w in self.weights:
            if w.level <= 0:
                raise ValueError("every value of pi needs positive level")
            if not data.is_dominant(w):
                raise ValueError(f"value {w} is not dominant")

    @property
    def root_system(self):
        return build_root_system(*parse_type(self.type_code))

    @property
    def support(self):
        return self.points

    @cached_property
    def wt(self):
        total = self.weights[0]
        for w in self.weights[1:]:
            total = total + w
        return total

    @property
    def level(self):
        return self.wt.level

    def value(self, point):
        point = tuple(_frac(x) for x in point)
        for p, w in zip(self.points, self.weights):
            if p == point:
                return w
        return None

    def monomial_value(self, point, m):
        return monomial_value(point, m)

    def pair_coroot(self, weight, alpha, r=0):
        """``<weight, (alpha + r delta_1)^vee>``."""
        rs = self.root_system
        base = sum(Fraction(w) * c for w, c in zip(weight.finite, rs.coroot(tuple(alpha))))
        return base + Fraction(2 * r) / rs.root_norm(tuple(alpha)) * weight.level

    def scaled(self, b):
        """The pi-function with every point multiplied coordinatewise by ``b``."""
        b = tuple(_frac(x) for x in b)
        pts = tuple(tuple(x * y for x, y in zip(p, b)) for p in self.points)
        return PiFunction(self.k, pts, self.weights, self.type_code)

    def to_json(self):
        return {
            "k": self.k,
            "type": self.type_code,
            "points": [[[x.numerator, x.denominator] for x in p] for p in self.points],
            "weights": [
                {"level": w.level, "finite": [int(x) for x in w.finite], "delta1": [w.delta1.numerator, w.delta1.denominator]}
                for w in self.weights
            ],
        }

    @classmethod
    def from_json(cls, data):
        def frac(v):
            if isinstance(v, list):
                if len(v) != 2:
                    raise ValueError("rationals are [numerator, denominator] pairs")
                return Fraction(int(v[0]), int(v[1]))
            if isinstance(v, (int, str)):
                return Fraction(v)
            raise ValueError(f"bad rational {v!r}")

        k = int(data["k"])
        points = [tuple(frac(x) for x in p) for p in data["points"]]
        weights = [
            AffineWeight(int(w["level"]), tuple(int(x) for x in w["finite"]), frac(w.get("delta1", [0, 1])))
            for w in data["weights"]
        ]
        return cls(k, tuple(points), tuple(weights), data.get("type", "A1"))


# ------------------------------------------------------------------ phi, G
@dataclass(frozen=True)
class HElement:
    """``sum c_i alpha_i^vee + K K_1 + d d_1`` in ``h_aff``."""

    coroot: tuple = ()
    K: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def value(self, weight):
        val = sum(Fraction(c) * w for c, w in zip(self.coroot, weight.finite))
        return val + Fraction(self.K) * weight.level + Fraction(self.d) * weight.delta1


def phi_pi(pi, h, m):
    """``sum_i pi(M_i)(h) b_i^m``."""
    return sum((h.value(w) * monomial_value(p, m) for p, w in zip(pi.points, pi.weights)), Fraction(0))


def _h_basis(pi):
    n = pi.root_system.rank
    # d_1 is a derivation and is not looped, so only coroots and K_1 enter
    return [HElement(tuple(int(i == j) for j in range(n))) for i in range(n)] + [HElement((), 1)]


def _g_pi_at(pi, box):
    basis = _h_basis(pi)
    gens = [m for m in product(range(-box, box + 1), repeat=pi.k - 1) if any(phi_pi(pi, h, m) for h in basis)]
    return hnf(gens, pi.k - 1)


def compute_G_pi(pi, box=4):
    """HNF lattice generated by the monomials where ``phi_pi`` is not identically 0.

    The answer at ``box`` is recomputed at ``2 * box`` and must agree.
    """
    if box < 2:
        raise ValueError("box must be at least 2")
    small, large = _g_pi_at(pi, box), _g_pi_at(pi, 2 * box)
    if not large.is_full_rank():
        raise ValueError("box too small: G_pi is not of full rank")
    if small != large:
        raise ValueError("G_pi is not stable under doubling the box; increase --box")
    return small


# ------------------------------------------------------------------ tensor
class EvalTensorModule:
    """Tensor product of truncated modules, graded by the total key, cut at total depth."""

    def __init__(self, factors, depth):
        self.factors = factors
        self.depth = depth
        self.decomp = {}
        for combo in product(*(sorted(f.keys) for f in factors)):
            tot = tuple(sum(c) for c in zip(*combo))
            if tot[-1] <= depth:
                self.decomp.setdefault(tot, []).append(combo)
        self.blocks = {}
        self.dims = {}
        for tot, combos in self.decomp.items():
            combos.sort()
            off = 0
            table = {}
            for combo in combos:
                sizes = tuple(f.dim(c) for f, c in zip(factors, combo))
                table[combo] = (off, sizes)
                size = 1
                for s in sizes:
                    size *= s
                off += size
            self.blocks[tot] = table
            self.dims[tot] = off

    @property
    def keys(self):
        return sorted(self.dims)

    def dim(self, key):
        return self.dims.get(tuple(key), 0)

    def in_cap(self, key):
        return key[-1] <= self.depth

    def lift(self, terms):
        """Operator ``sum c * Y^{(f)}`` for ``(f, Y, c)`` terms sharing one shift."""
        shift = terms[0][1].shift
        blocks = {}
        for tot, table in self.blocks.items():
            tgt = tuple(a + b for a, b in zip(tot, shift))
            if not self.in_cap(tgt):
                continue
            ds, dt = self.dims[tot], self.dim(tgt)
            mat = [[Fraction(0)] * ds for _ in range(dt)]
            ok = True
            for combo, (off, sizes) in table.items():
                for f, op, c in terms:
                    if not c:
                        continue
                    src = combo[f]
                    if src not in op.blocks:
                        ok = False
                        break
                    y = op.blocks[src]
                    tcombo = combo[:f] + (tuple(a + b for a, b in zip(src, shift)),) + combo[f + 1:]
                    if tcombo not in self.blocks.get(tgt, {}):
                        continue
                    toff, tsizes = self.blocks[tgt][tcombo]
                    _kron_into(mat, y, c, f, off, sizes, toff, tsizes)
                if not ok:
                    break
            if ok:
                blocks[tot] = mat
        return Operator(self, shift, blocks)


def _strides(sizes):
    out = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        out[i] = out[i + 1] * sizes[i + 1]
    return out


def _kron_into(mat, y, c, f, off, sizes, toff, tsizes):
    """Add ``c * (I (x) .. Y at slot f .. (x) I)`` from one block into another."""
    ss, ts = _strides(sizes), _strides(tsizes)
    others = [range(s) if i != f else [0] for i, s in enumerate(sizes)]
    nz = [(j, i, v) for j, row in enumerate(y) for i, v in enumerate(row) if v]
    if not nz:
        return
    for idx in product(*others):
        base_s = off + sum(a * b for a, b in zip(idx, ss))
        base_t = toff + sum(a * b for a, b in zip(idx, ts))
        for j, i, v in nz:
            mat[base_t + j * ts[f]][base_s + i * ss[f]] += c * v


# ------------------------------------------------------------------ L(X_pi)
def _threads():
    try:
        return max(1, int(os.environ.get("TOROIDAL_THREADS", "1")))
    except ValueError:
        return 1


class LoopedModule:
    """``L(X_pi)`` truncated at ``depth`` and the monomial box ``[-window, window]^{k-1}``."""

    def __init__(self, pi, depth, window, threads=None):
        self.pi = pi
        self.rs = pi.root_system
        self.data = AffineData(self.rs)
        self.depth = depth
        self.window = window
        self.n = self.rs.rank
        workers = threads or _threads()
        build = lambda w: build_irreducible(self.rs, w, depth)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                factors = list(pool.map(build, pi.weights))
        else:
            factors = [build(w) for w in pi.weights]
        self.factors = factors
        self.tensor = EvalTensorModule(factors, depth)
        self.monomials = list(product(range(-window, window + 1), repeat=pi.k - 1))
        self._mono = set(self.monomials)
        self._cache = {}

    # space interface
    def split(self, key):
        return tuple(key[: self.n + 1]), tuple(key[self.n + 1:])

    def in_window(self, m):
        return tuple(m) in self._mono

    def dim(self, key):
        tot, m = self.split(key)
        return self.tensor.dim(tot) if self.in_window(m) else 0

    def in_cap(self, key):
        tot, m = self.split(key)
        return self.tensor.in_cap(tot) and self.in_window(m)

    @property
    def keys(self):
        return [tot + m for tot in self.tensor.keys for m in self.monomials]

    def interior(self, margin=1):
        """Keys whose monomial lies ``margin`` away from the window boundary."""
        return [k for k in self.keys if all(abs(x) <= self.window - margin for x in self.split(k)[1])]

    # weights
    def affine_weight(self, key):
        return self.data.weight_of_key(self.pi.wt, self.split(key)[0])

    def weight(self, key):
        mu = self.affine_weight(key)
        m = self.split(key)[1]
        return ToroidalWeight(mu.finite, (mu.level,) + (0,) * (self.pi.k - 1), (mu.delta1,) + m)

    def key_of(self, lam):
        """Key of a toroidal weight, or None when it is not below ``wt(pi)``."""
        if any(lam.K[1:]) or lam.K[0] != self.pi.level:
            return None
        if any(x.denominator != 1 for x in lam.d[1:]) or any(x.denominator != 1 for x in lam.finite):
            return None
        mu = AffineWeight(int(lam.K[0]), tuple(int(x) for x in lam.finite), lam.d[0])
        tot = self.data.key_of_weight(self.pi.wt, mu)
        if tot is None:
            return None
        return tot + tuple(int(x) for x in lam.d[1:])

    def highest_vector(self, g):
        return {(0,) * (self.n + 1) + tuple(g): [Fraction(1)]}

    # operators
    def _extend(self, top, mshift):
        mshift = tuple(mshift)
        blocks = {}
        for tot, mat in top.blocks.items():
            for m in self.monomials:
                if self.in_window(tuple(a + b for a, b in zip(m, mshift))):
                    blocks[tot + m] = mat
        return Operator(self, top.shift + mshift, blocks)

    def _evaluated(self, make, mshift, name):
        key = (name, tuple(mshift))
        if key not in self._cache:
            terms = [(f, make(fac), monomial_value(p, mshift)) for f, (fac, p) in enumerate(zip(self.factors, self.pi.points))]
            self._cache[key] = self._extend(self.tensor.lift(terms), mshift)
        return self._cache[key]

    def chevalley(self, kind, i, mshift):
        """``e_i`` or ``f_i`` (0-based, ``n`` the affine node) times ``t^mshift``."""
        pick = (lambda fac: fac.e(i)) if kind == "e" else (lambda fac: fac.f(i))
        return self._evaluated(pick, mshift, (kind, i))

    def cartan(self, coroot=(), K=0, s=0, mshift=None):
        """``(sum c_i alpha_i^vee + K K_1) (x) t_1^s t^mshift``."""
        mshift = tuple(mshift or (0,) * (self.pi.k - 1))
        coroot = tuple(coroot)
        if s == 0:
            make = lambda fac: fac.cartan_op(coroot, K=K)
        else:
            # K_1 t^r with r_1 != 0 acts as 0
            make = lambda fac: fac.cartan_loop(coroot, s)
        return self._evaluated(make, mshift, ("h", coroot, Fraction(K), s))

    def loop(self, label, s, mshift):
        """``x (x) t_1^s t^mshift`` for an sl(n+1) basis label (type A)."""
        return self._evaluated(lambda fac: fac.loop(label, s), mshift, ("x", label, s))

    def central_K(self, j, r):
        """``K_j t^r`` (``j`` 0-based, ``r`` in ``Z^k``)."""
        r = tuple(r)
        mshift = r[1:]
        if j == 0 and r[0] == 0:
            return self.cartan((), K=1, s=0, mshift=mshift)
        shift = (0,) * (self.n + 1) + mshift
        blocks = {}
        for key in self.keys:
            tgt = tuple(a + b for a, b in zip(key, shift))
            if self.in_cap(tgt):
                blocks[key] = [[Fraction(0)] * self.dim(key) for _ in range(self.dim(tgt))]
        return Operator(self, shift, blocks)

    def derivation(self, j):
        """``d_{j+1}``: ``d_1`` through the affine weight, ``d_j`` by the monomial degree."""
        blocks = {}
        for key in self.keys:
            val = self.affine_weight(key).delta1 if j == 0 else Fraction(self.split(key)[1][j - 1])
            d = self.dim(key)
            blocks[key] = [[val if a == b else Fraction(0) for b in range(d)] for a in range(d)]
        return Operator(self, (0,) * len(self.keys[0]), blocks)

    def slice_dims(self):
        return {key: self.dim(key) for key in self.keys}


def build_L(pi, depth, window, threads=None):
    return LoopedModule(pi, depth, window, threads)


# ------------------------------------------------------------- decompose
@dataclass
class Component:
    coset: tuple
    dims: dict
    spaces: dict = field(repr=False, default_factory=dict)


def _generators(L):
    k1 = L.pi.k - 1
    span = range(-2 * L.window, 2 * L.window + 1)
    shifts = list(product(span, repeat=k1))
    ops = []
    for m in shifts:
        for i in range(L.n + 1):
            ops.append(L.chevalley("e", i, m))
            ops.append(L.chevalley("f", i, m))
        if any(m):
            for i in range(L.n):
                ops.append(L.cartan(tuple(int(j == i) for j in range(L.n)), 0, 0, m))
            ops.append(L.cartan((), 1, 0, m))
    return ops


def generate(L, start, ops=None):
    """Span of everything reachable from ``start`` inside the truncation, per key."""
    ops = ops if ops is not None else _generators(L)
    spaces = {}
    queue = deque()

    def push(key, vec):
        space = spaces.setdefault(key, _exact.RowSpace(L.dim(key)))
        if space.add(vec):
            queue.append((key, space.rows[-1]))

    for key, vec in start.items():
        push(key, vec)
    while queue:
        key, vec = queue.popleft()
        for op in ops:
            mat = op.blocks.get(key)
            if mat is None or not mat:
                continue
            img = _exact.matvec(mat, vec)
            if any(img):
                push(op.target(key), img)
    return spaces


def decompose(L, G=None, margin=1):
    """Pieces generated by ``v_pi (x) t^g`` for the coset representatives of ``G_pi``.

    Returns ``(components, report)``; the report compares dimensions on the
    window interior (monomials ``margin`` inside the window, every depth).
    """
    G = G or compute_G_pi(L.pi)
    reps = quotient_reps(G)
    for g in reps:
        for row in G.basis:
            up = tuple(a + b for a, b in zip(g, row))
            down = tuple(a - b for a, b in zip(g, row))
            if not L.in_window(g) or not (L.in_window(up) or L.in_window(down)):
                raise ValueError("window too small for the coset system of G_pi")
    ops = _generators(L)
    comps = []
    for g in reps:
        spaces = generate(L, L.highest_vector(g), ops)
        comps.append(Component(tuple(g), {k: len(s) for k, s in spaces.items() if len(s)}, spaces))
    interior = L.interior(margin)
    mismatch = []
    overlap = []
    for key in interior:
        total = sum(c.dims.get(key, 0) for c in comps)
        if total != L.dim(key):
            mismatch.append(key)
        rows = [r for c in comps if key in c.spaces for r in c.spaces[key].rows]
        if rows and _exact.rank(rows) != len(rows):
            overlap.append(key)
    report = {
        "cosets": [list(g) for g in reps],
        "interior_keys": len(interior),
        "mismatched": [list(k) for k in mismatch],
        "overlapping": [list(k) for k in overlap],
        "ok": not mismatch and not overlap,
    }
    return comps, report


# ------------------------------------------------------------ highest space
def highest_vectors(L):
    """Basis of vectors killed by every ``e_i (x) t^m`` that stays inside the window."""
    span = range(-2 * L.window, 2 * L.window + 1)
    ops = [L.chevalley("e", i, m) for m in product(span, repeat=L.pi.k - 1) for i in range(L.n + 1)]
    out = []
    for key in L.keys:
        d = L.dim(key)
        if not d:
            continue
        rows = []
        for op in ops:
            mat = op.blocks.get(key)
            if mat:
                rows.extend(mat)
        for v in _exact.nullspace(rows, cols=d):
            out.append((key, v))
    return out


# ------------------------------------------------------- central triviality
def central_triviality_check(L, degree=1):
    """Check the centre acts as the construction prescribes, and that brackets agree.

    Beyond the zero maps for ``K_j t^r`` (``j >= 2``) and ``K_1 t^r``
    (``r_1 != 0``), commutators of the operators of ``h (x) t_1^a t^m`` are
    compared with the central part of the toroidal bracket after canonical
    reduction, read through the same rules.
    """
    pi = L.pi
    k = pi.k
    failures = []
    rng = range(-degree, degree + 1)
    for j in range(k):
        for r in product(rng, repeat=k):
            if j == 0 and r[0] == 0:
                continue
            if not L.central_K(j, r).is_zero():
                failures.append(f"K_{j + 1} t^{list(r)} is not zero")
    # bracket consistency on h-loops (type A only: needs t_1-degree loops)
    if L.rs.type_letter == "A":
        alg = ToroidalAlgebra(pi.type_code, k)
        n = L.n
        coroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        for c1, c2 in product(coroots, repeat=2):
            for m in product(rng, repeat=k):
                for p in product(rng, repeat=k):
                    a = L.cartan(c1, 0, m[0], m[1:])
                    b = L.cartan(c2, 0, p[0], p[1:])
                    lhs = commutator(a, b)
                    x = alg.loop(f"H{c1.index(1) + 1}", m)
                    y = alg.loop(f"H{c2.index(1) + 1}", p)
                    br = alg.bracket(x, y)
                    r = tuple(u + v for u, v in zip(m, p))
                    coeff = br.central.get(r, (Fraction(0),) * k)
                    scale = coeff[0] if r[0] == 0 else Fraction(0)
                    rhs = L.cartan((), scale, 0, r[1:]) if scale else None
                    ok = lhs.is_zero() if rhs is None else operators_equal(lhs, rhs)
                    if not ok:
                        failures.append(f"[h t^{list(m)}, h t^{list(p)}] disagrees with the reduced bracket")
    v = L.highest_vector((0,) * (k - 1))
    k1 = L.cartan((), 1, 0, (0,) * (k - 1)).apply(v)
    if k1 != {key: [x * pi.level for x in vec] for key, vec in v.items()}:
        failures.append("K_1 does not act by the level on v_pi")
    return {"ok": not failures, "failures": failures}


# ----------------------------------------------------------- Weyl / boxes
def weyl_invariance_check(L, max_exp=2, margin=1):
    """``dim V_lam = dim V_{r_beta lam}`` for real ``beta = alpha + delta_m``, ``|m_i| <= max_exp``."""
    alg = ToroidalAlgebra(L.pi.type_code, L.pi.k)
    interior = set(L.interior(margin))
    roots = [ToroidalRoot(a, m) for a in L.rs.roots for m in product(range(-max_exp, max_exp + 1), repeat=L.pi.k)]
    compared, failures = 0, []
    for key in sorted(interior):
        d = L.dim(key)
        if not d:
            continue
        lam = L.weight(key)
        for beta in roots:
            other = alg.reflect(lam, beta)
            okey = L.key_of(other)
            if okey is None:
                failures.append((key, beta))
                continue
            if okey not in interior:
                continue
            compared += 1
            if L.dim(okey) != d:
                failures.append((key, beta))
    return {"compared": compared, "failures": failures, "ok": not failures}


def box_reduction_check(L, margin=1):
    """Every weight meeting the box hypotheses reduces to a weight of ``L``."""
    alg = ToroidalAlgebra(L.pi.type_code, L.pi.k)
    checked, failures = 0, []
    for key in L.interior(margin):
        if not L.dim(key):
            continue
        lam = L.weight(key)
        if alg.pair(lam, alg.affine_root(0)) <= 0:
            continue
        red, _ = alg.box_reduce(lam)
        m = alg.pair(lam, alg.affine_root(0))
        okey = L.key_of(red)
        checked += 1
        inside = all(0 <= x < m for x in red.d[1:])
        if not inside or okey is None or (L.in_cap(okey) and L.dim(okey) == 0):
            failures.append(key)
    return {"checked": checked, "failures": failures, "ok": not failures}


# -------------------------------------------------------------- isomorphism
def _same_class(w1, w2):
    # d_1 is not part of the acting algebra, so delta_1-shifts are invisible
    return w1.level == w2.level and tuple(w1.finite) == tuple(w2.finite)


def _match(pi, pi2):
    """Witnesses ``b`` with ``b * supp(pi) = supp(pi2)`` and matching values; ``b = 1`` first."""
    if pi.k != pi2.k:
        raise ValueError("mismatched k")
    if pi.type_code != pi2.type_code or len(pi.points) != len(pi2.points):
        return []
    ones = (Fraction(1),) * (pi.k - 1)
    cands = sorted({tuple(q / p for p, q in zip(P, Q)) for P in pi.points for Q in pi2.points}, key=lambda b: (b != ones, b))
    out = []
    for b in cands:
        ok = True
        for p, w in zip(pi.points, pi.weights):
            image = tuple(x * y for x, y in zip(p, b))
            w2 = pi2.value(image)
            if w2 is None or not _same_class(w, w2):
                ok = False
                break
        if ok:
            out.append(b)
    return out


def iso_check(first, second, box=4):
    """Decide ``X_pi^g`` vs ``X_pi'^g'``; returns ``(True, b)`` or ``(False, reason)``."""
    (pi, g), (pi2, g2) = first, second
    if pi.k != pi2.k:
        raise ValueError("mismatched k")
    witnesses = _match(pi, pi2)
    if not witnesses:
        return False, "no scaling maps supp(pi) onto supp(pi') with isomorphic values"
    G = compute_G_pi(pi, box)
    diff = tuple(a - b for a, b in zip(g, g2))
    if not G.contains(diff):
        return False, "g and g' are not congruent modulo G_pi"
    G2 = compute_G_pi(pi2, box)
    if G != G2:
        raise AssertionError("accepted pair with different G_pi")
    return True, witnesses[0]


def iso_check_evaluation(pi, pi2):
    """``X_pi`` vs ``X_pi'``: conditions on supports and values only."""
    return bool(_match(pi, pi2))
