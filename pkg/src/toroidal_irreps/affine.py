"""Untwisted affine algebra: weights, roots, truncated standard modules, loop modules.

An affine weight is ``level * Lambda_{n+1} + finite + delta1 * delta_1`` with
``finite`` in fundamental-weight coordinates. Simple roots are
``alpha_1..alpha_n`` and ``alpha_{n+1} = delta_1 - theta``, with coroot
``alpha_{n+1}^vee = K_1 - theta^vee``. Inside a truncated module a weight
``mu`` is addressed by its key ``beta`` with ``Lambda - mu = sum beta_i alpha_i``;
the depth of ``mu`` is ``beta_{n+1}``, its distance below ``Lambda`` in ``delta_1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

from . import _exact
from .hwmodule import Operator, TruncationError, WeightModule, combine, commutator
from .lie import sl, sparse_comm


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class AffineWeight:
    level: int
    finite: tuple
    delta1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(self.finite))
        object.__setattr__(self, "delta1", _frac(self.delta1))

    def __add__(self, other):
        return AffineWeight(
            self.level + other.level,
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            self.delta1 + other.delta1,
        )

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return AffineWeight(c * self.level, tuple(c * a for a in self.finite), c * self.delta1)

    def to_json(self):
        return [self.level, *[int(x) if Fraction(x).denominator == 1 else [Fraction(x).numerator, Fraction(x).denominator] for x in self.finite],
                [self.delta1.numerator, self.delta1.denominator]]

    def __str__(self):
        fin = ",".join(str(x) for x in self.finite)
        return f"({self.level}; {fin}; {self.delta1})"


class AffineData:
    """Root datum of the untwisted affinisation of a finite root system."""

    def __init__(self, rs):
        self.rs = rs
        self.n = rs.rank

    @cached_property
    def theta_weight(self):
        return self.rs.root_to_weight(self.rs.theta)

    @cached_property
    def dual_coxeter(self):
        return 1 + sum(self.rs.comarks)

    @cached_property
    def cartan(self):
        """Affine Cartan matrix ``A[i][j] = <alpha_j, alpha_i^vee>``."""
        n, rs = self.n, self.rs
        a = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(n):
            for j in range(n):
                a[i][j] = rs.cartan[j][i]
            a[i][n] = -self.theta_weight[i]
            a[n][i] = -sum(c * rs.cartan[i][l] for l, c in enumerate(rs.comarks))
        a[n][n] = 2
        return tuple(tuple(r) for r in a)

    @cached_property
    def half_lengths(self):
        return tuple(self.rs.half_lengths) + (Fraction(1),)

    @cached_property
    def symmetric_form(self):
        """``(alpha_i|alpha_j)`` on the affine simple roots."""
        d = self.half_lengths
        a = self.cartan
        m = self.n + 1
        return tuple(tuple(a[j][i] * d[j] for j in range(m)) for i in range(m))

    def simple_root(self, i):
        if i < self.n:
            return AffineWeight(0, self.rs.cartan[i], 0)
        return AffineWeight(0, tuple(-x for x in self.theta_weight), 1)

    def fundamental(self, i):
        """``Lambda_i``: level equal to the comark, finite part ``omega_i``."""
        if i == self.n:
            return AffineWeight(1, (0,) * self.n, 0)
        return AffineWeight(self.rs.comarks[i], tuple(int(j == i) for j in range(self.n)), 0)

    @property
    def delta(self):
        return AffineWeight(0, (0,) * self.n, 1)

    def pairing(self, lam, i):
        """``<lam, alpha_i^vee>`` for ``i`` in ``0..n`` (``n`` is the affine node)."""
        if i < self.n:
            return lam.finite[i]
        return lam.level - sum(c * x for c, x in zip(self.rs.comarks, lam.finite))

    def labels(self, lam):
        return tuple(self.pairing(lam, i) for i in range(self.n + 1))

    def is_dominant(self, lam):
        return all(x >= 0 and Fraction(x).denominator == 1 for x in self.labels(lam))

    def weight_of_key(self, top, key):
        out = top
        for i, c in enumerate(key):
            if c:
                out = out - self.simple_root(i).scaled(c)
        return out

    def key_of_weight(self, top, mu):
        """Key ``beta`` with ``top - mu = sum beta_i alpha_i``, or None if not in ``Q^+``."""
        if mu.level != top.level:
            return None
        depth = top.delta1 - mu.delta1
        if depth.denominator != 1 or depth < 0:
            return None
        depth = int(depth)
        diff = tuple(a - b for a, b in zip(top.finite, mu.finite))
        coords = self.rs.weight_to_root(diff)
        coords = [c + depth * t for c, t in zip(coords, self.rs.theta)]
        if any(c.denominator != 1 or c < 0 for c in coords):
            return None
        return tuple(int(c) for c in coords) + (depth,)

    def form(self, x, y):
        """Invariant form on affine weights: ``(Lambda_{n+1}|delta) = 1``."""
        return self.rs.form(x.finite, y.finite) + x.level * y.delta1 + y.level * x.delta1

    @cached_property
    def rho(self):
        return AffineWeight(self.dual_coxeter, (1,) * self.n, 0)

    def positive_roots(self, max_depth):
        """Positive roots with ``delta_1``-degree up to ``max_depth`` as ``(key, multiplicity)``."""
        out = [(tuple(r) + (0,), 1) for r in self.rs.positive_roots]
        theta = self.rs.theta
        for j in range(1, max_depth + 1):
            base = tuple(j * t for t in theta)
            for r in self.rs.roots:
                out.append((tuple(b + c for b, c in zip(base, r)) + (j,), 1))
            out.append((base + (j,), self.n))
        return out

    def is_root_key(self, key):
        """Classify a key as ``'real'``, ``'imaginary'`` or None, with its finite part."""
        j = key[-1]
        fin = tuple(c - j * t for c, t in zip(key[:-1], self.rs.theta))
        if not any(fin):
            return ("imaginary", fin, j) if j else (None, fin, j)
        return ("real", fin, j) if fin in set(self.rs.roots) else (None, fin, j)


def is_dominant(lam, rs):
    return AffineData(rs).is_dominant(lam)


# ----------------------------------------------------------------- modules
class TruncatedModule:
    """Irreducible highest-weight module ``X(Lambda)`` kept up to a given depth."""

    def __init__(self, rs, highest, depth):
        self.rs = rs
        self.data = AffineData(rs)
        self.highest = highest
        self.depth = depth
        self.module = WeightModule(self.data.cartan, self.data.labels(highest), depth=depth, depth_index=rs.rank)
        self._spaces = {}

    # weights
    @property
    def keys(self):
        return self.module.keys

    def dim(self, key):
        return self.module.dim(key)

    def in_cap(self, key):
        return self.module.in_cap(key)

    def weight(self, key):
        return self.data.weight_of_key(self.highest, key)

    def key(self, mu):
        return self.data.key_of_weight(self.highest, mu)

    def mult(self, mu):
        key = self.key(mu)
        if key is None:
            return 0
        if key[-1] > self.depth:
            raise TruncationError(f"weight at depth {key[-1]}")
        return self.dim(key)

    def multiplicities(self):
        return {self.weight(k): d for k, d in sorted(self.module.dims.items())}

    def to_json(self):
        return [{"weight": mu.to_json(), "mult": d} for mu, d in self.multiplicities().items()]

    # Chevalley generators, 0-based; index n is the affine node
    def e(self, i):
        return self.module.raising(i)

    def f(self, i):
        return self.module.lowering(i)

    def cartan_op(self, coroot=(), K=0, d=0):
        """``sum c_i alpha_i^vee + K K_1 + d d_1`` (finite coroots only in ``coroot``)."""
        blocks = {}
        for key, dim in self.module.dims.items():
            mu = self.weight(key)
            val = sum(Fraction(c) * mu.finite[i] for i, c in enumerate(coroot) if c)
            val += Fraction(K) * mu.level + Fraction(d) * mu.delta1
            blocks[key] = [[val if r == c else Fraction(0) for c in range(dim)] for r in range(dim)]
        return Operator(self.module, (0,) * (self.rs.rank + 1), blocks)

    # loop elements x (x) t_1^j, via the sl(n+1) realisation
    def _realizer(self):
        if self.rs.type_letter != "A":
            raise ValueError("unsupported type for structure constants")
        if "real" not in self._spaces:
            self._spaces["real"] = LoopRealizer(self)
        return self._spaces["real"]

    def loop(self, label, j):
        """Operator of ``x (x) t_1^j`` for a basis label of sl(n+1)."""
        return self._realizer().element(label, j)

    def cartan_loop(self, coroot, j):
        """Operator of ``h (x) t_1^j`` with ``h = sum c_i alpha_i^vee``."""
        if j == 0:
            return self.cartan_op(coroot)
        return self._realizer().cartan(coroot, j)


def build_irreducible(rs, highest, depth):
    data = AffineData(rs)
    if highest.level == 0:
        raise ValueError("level 0: use LoopModule")
    if highest.level < 0:
        raise ValueError("negative level is not supported")
    if not data.is_dominant(highest):
        raise ValueError(f"highest weight {highest} is not dominant")
    return TruncatedModule(rs, highest, depth)


class LoopRealizer:
    """Root-vector operators of a module, found by nested brackets of Chevalley generators.

    Each operator carries its image in the loop realisation (a traceless
    matrix and a ``t_1`` degree), so a required element ``x (x) t^j`` is
    obtained by solving in the corresponding root space.
    """

    def __init__(self, module, degree_of=None):
        self.mod = module
        self.alg = sl(module.rs.rank)
        self.n = module.rs.rank
        self.affine = degree_of is None
        self.pos = {}
        self.neg = {}
        n = self.n
        for i in range(n):
            self.pos[self._unit(i)] = [({(i + 1, i + 2): Fraction(1)}, 0, module.e(i))]
            self.neg[self._unit(i)] = [({(i + 2, i + 1): Fraction(1)}, 0, module.f(i))]
        if self.affine:
            self.pos[self._unit(n)] = [({(n + 1, 1): Fraction(1)}, 1, module.e(n))]
            self.neg[self._unit(n)] = [({(1, n + 1): Fraction(1)}, -1, module.f(n))]

    def _unit(self, i):
        size = self.n + 1 if self.affine else self.n
        return tuple(int(j == i) for j in range(size))

    def _root_dim(self, key):
        if not self.affine:
            return 1 if tuple(key) in set(self.mod.rs.positive_roots) else 0
        kind, _, _ = self.mod.data.is_root_key(key)
        return {"real": 1, "imaginary": self.n}.get(kind, 0)

    def _space(self, key, sign):
        table = self.pos if sign > 0 else self.neg
        key = tuple(key)
        if key in table:
            return table[key]
        need = self._root_dim(key)
        found = []
        if need:
            entries = []
            gens = range(len(key))
            for i in gens:
                if not key[i]:
                    continue
                prev = tuple(c - int(j == i) for j, c in enumerate(key))
                if not any(prev) or not self._root_dim(prev):
                    continue
                (gm, gd, gop), = table[self._unit(i)]
                for m, d, op in self._space(prev, sign):
                    mat = sparse_comm(gm, m)
                    if not mat:
                        continue
                    for k in mat:
                        if k not in entries:
                            entries.append(k)
                    if self._independent(found, mat, entries):
                        found.append((mat, gd + d, commutator(gop, op)))
                        if len(found) == need:
                            break
                if len(found) == need:
                    break
            if len(found) < need:
                raise ArithmeticError(f"root space {key} not spanned")
        table[key] = found
        return found

    @staticmethod
    def _independent(found, mat, entries):
        rows = [[m.get(k, 0) for k in entries] for m, _, _ in found]
        rows.append([mat.get(k, 0) for k in entries])
        return _exact.rank(rows) == len(rows)

    def _solve(self, space, target):
        entries = sorted({k for m, _, _ in space for k in m} | set(target))
        a = [[m.get(k, 0) for m, _, _ in space] for k in entries]
        b = [[target.get(k, 0)] for k in entries]
        coeffs = _exact.solve(a, b)
        return combine([(c[0], op) for c, (_, _, op) in zip(coeffs, space)])

    def _key(self, label, j):
        fin = self.alg.root_of(label)
        if not self.affine:
            if j:
                raise ValueError("finite module has no loop degree")
            return fin
        return tuple(c + j * t for c, t in zip(fin, self.mod.rs.theta)) + (j,)

    def element(self, label, j=0):
        if label.startswith("H"):
            coroot = [0] * self.n
            coroot[int(label[1:]) - 1] = 1
            return self.cartan(coroot, j)
        key = self._key(label, j)
        target = self.alg.matrix(label)
        if all(c >= 0 for c in key):
            return self._solve(self._space(key, 1), target)
        return self._solve(self._space(tuple(-c for c in key), -1), target)

    def cartan(self, coroot, j):
        if j == 0:
            if self.affine:
                return self.mod.cartan_op(coroot)
            return self.mod.diagonal(list(coroot))
        target = self.alg.to_matrix(self.alg.coroot_element(coroot))
        key = tuple(abs(j) * t for t in self.mod.rs.theta) + (abs(j),)
        return self._solve(self._space(key, 1 if j > 0 else -1), target)


# ----------------------------------------------------------------- oracle
def freudenthal_table(rs, highest, depth):
    """Multiplicities of ``X(Lambda)`` up to ``depth`` by Freudenthal's recursion.

    Independent of the module construction: it uses only the invariant form
    and the affine root multiplicities (1 for real roots, ``n`` for ``j delta``).
    """
    data = AffineData(rs)
    if not data.is_dominant(highest):
        raise ValueError("highest weight is not dominant")
    m = rs.rank + 1
    labels = data.labels(highest)
    d = data.half_lengths
    b = data.symmetric_form
    roots = data.positive_roots(depth)

    def form(x, y):
        return sum(x[i] * b[i][j] * y[j] for i in range(m) if x[i] for j in range(m) if y[j])

    def lam_dot(x):
        return sum(x[i] * d[i] * labels[i] for i in range(m))

    zero = (0,) * m
    mult = {zero: 1}
    layer = [zero]
    while layer:
        cands = sorted({tuple(c + int(i == j) for j, c in enumerate(k)) for k in layer for i in range(m)})
        layer = []
        for beta in cands:
            if beta[-1] > depth:
                continue
            denom = 2 * sum(beta[i] * d[i] * (labels[i] + 1) for i in range(m)) - form(beta, beta)
            if denom <= 0:
                continue
            acc = Fraction(0)
            for gamma, gm in roots:
                kappa = tuple(x - y for x, y in zip(beta, gamma))
                while all(x >= 0 for x in kappa):
                    if kappa in mult:
                        acc += gm * mult[kappa] * (lam_dot(gamma) - form(kappa, gamma))
                    kappa = tuple(x - y for x, y in zip(kappa, gamma))
            val = 2 * acc / denom
            if val:
                if val.denominator != 1 or val < 0:
                    raise ArithmeticError(f"bad Freudenthal value {val} at {beta}")
                mult[beta] = int(val)
                layer.append(beta)
    return mult


def freudenthal_affine(rs, highest, mu, depth):
    """Multiplicity of ``mu`` in ``X(highest)`` from the Freudenthal oracle."""
    key = AffineData(rs).key_of_weight(highest, mu)
    if key is None:
        return 0
    if key[-1] > depth:
        raise TruncationError(f"weight at depth {key[-1]}")
    return freudenthal_table(rs, highest, depth).get(key, 0)


def weight_membership_prop24iv(module, r):
    """Check that the minimal-coset weights at ``delta_1``-value ``r`` occur in ``module``.

    For ``lam = module.highest`` with ``lam(d_1) - r`` a non-negative integer,
    ``lam(K_1) Lambda_{n+1} + varpi_lam + r delta_1`` must be a weight, where
    ``varpi_lam`` is the minimal dominant weight congruent to ``lam|_h``. If
    ``lam|_h`` is a nonzero dominant element of ``Q^+``, the weight with finite
    part ``theta`` (``theta_s`` when not simply laced) is checked as well.
    """
    lam = module.highest
    rs = module.rs
    s = lam.delta1 - _frac(r)
    if s.denominator != 1 or s < 0:
        raise ValueError("lam(d_1) - r must be a non-negative integer")
    if s > module.depth:
        raise TruncationError(f"depth {s} exceeds module depth {module.depth}")
    _, varpi = rs.minimal_coset_rep(lam.finite)
    ok = module.mult(AffineWeight(lam.level, varpi, r)) > 0
    coords = rs.weight_to_root(lam.finite)
    if any(lam.finite) and all(c.denominator == 1 and c >= 0 for c in coords):
        beta = rs.theta if rs.is_simply_laced() else rs.theta_s
        ok = ok and module.mult(AffineWeight(lam.level, rs.root_to_weight(beta), r)) > 0
    return ok


# ------------------------------------------------------------ loop modules
def finite_module(rs, lam):
    """``V(lam)`` as a :class:`WeightModule` over the finite Cartan matrix."""
    kac = [[rs.cartan[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    return WeightModule(kac, lam)


class _FiniteFactor:
    def __init__(self, rs, lam):
        self.rs = rs
        self.lam = tuple(lam)
        self.module = finite_module(rs, lam)
        self._realizer = None

    def operator(self, x):
        """Operator of a basis element: ``e<i>``, ``f<i>``, ``h<i>`` or an sl label."""
        mod = self.module
        if x[0] in "efh" and x[1:].isdigit():
            i = int(x[1:]) - 1
            return {"e": mod.raising, "f": mod.lowering}.get(x[0], lambda i: mod.diagonal([int(j == i) for j in range(mod.n)]))(i)
        if self.rs.type_letter != "A":
            raise ValueError("unsupported type for structure constants")
        if self._realizer is None:
            self._realizer = LoopRealizer(self, degree_of=False)
        return self._realizer.element(x, 0)

    # the realizer reaches the module through these
    def e(self, i):
        return self.module.raising(i)

    def f(self, i):
        return self.module.lowering(i)

    def diagonal(self, coeffs):
        return self.module.diagonal(coeffs)

    def weight(self, key):
        w = list(self.lam)
        for j, c in enumerate(key):
            for i in range(self.rs.rank):
                w[i] -= c * self.rs.cartan[j][i]
        return tuple(w)


class LoopModule:
    """``V(lam_1) (x) ... (x) V(lam_r) (x) C[t_1^{+-1}]`` on the window ``p_min..p_max``.

    ``x (x) t_1^s`` acts by ``sum_i a_i^s x^{(i)}`` and raises the ``t_1``
    degree by ``s``; ``K_1`` acts as 0 and ``d_1`` has eigenvalue ``b + p``
    on the ``t_1^p`` component.
    """

    def __init__(self, rs, lams, points, b, window=(-3, 3)):
        if len(lams) != len(points):
            raise ValueError("need one evaluation point per factor")
        points = [_frac(a) for a in points]
        if any(a == 0 for a in points):
            raise ValueError("evaluation points must be nonzero")
        if len(set(points)) != len(points):
            raise ValueError("evaluation points must be pairwise distinct")
        for lam in lams:
            if any(x < 0 for x in lam):
                raise ValueError("loop module factors need dominant weights")
        self.rs = rs
        self.points = points
        self.b = _frac(b)
        self.window = tuple(window)
        self.factors = [_FiniteFactor(rs, lam) for lam in lams]

    def basis(self):
        """Basis labels ``(((key, idx), ...), p)`` in a fixed order."""
        per = [[(k, i) for k, d in sorted(f.module.dims.items()) for i in range(d)] for f in self.factors]
        return [(combo, p) for p in range(self.window[0], self.window[1] + 1) for combo in product(*per)]

    def weight(self, label):
        combo, p = label
        fin = [0] * self.rs.rank
        for f, (k, _) in zip(self.factors, combo):
            for i, x in enumerate(f.weight(k)):
                fin[i] += x
        return AffineWeight(0, tuple(fin), self.b + p)

    def weight_dims(self):
        """Dimension of each weight space inside the window."""
        out = {}
        for label in self.basis():
            mu = self.weight(label)
            out[mu] = out.get(mu, 0) + 1
        return out

    def act(self, x, s, vec):
        return loop_action(self, x, s, vec)


def loop_action(m, x, s, vec):
    """``(x (x) t_1^s) . vec`` in a :class:`LoopModule`.

    ``x`` is a basis label, ``"K"`` for ``K_1``, ``"d"`` for ``d_1`` or a dict of
    labels to coefficients. ``vec`` maps basis labels to coefficients.
    """
    if isinstance(x, dict):
        out = {}
        for label, c in x.items():
            for k, v in loop_action(m, label, s, vec).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}
    if x == "K":
        return {}
    if x == "d":
        return {lab: (m.b + lab[1]) * c for lab, c in vec.items() if (m.b + lab[1]) * c}
    out = {}
    for (combo, p), c in vec.items():
        if not c:
            continue
        q = p + s
        if not m.window[0] <= q <= m.window[1]:
            raise TruncationError(f"t_1 degree {q}")
        for i, factor in enumerate(m.factors):
            scale = c * m.points[i] ** s
            op = factor.operator(x)
            key, idx = combo[i]
            if key not in op.blocks:
                continue
            img = {key: [Fraction(int(j == idx)) for j in range(factor.module.dim(key))]}
            for tkey, coords in op.apply(img).items():
                for j, v in enumerate(coords):
                    if v:
                        lab = (combo[:i] + ((tkey, j),) + combo[i + 1:], q)
                        out[lab] = out.get(lab, 0) + scale * v
    return {k: v for k, v in out.items() if v}
