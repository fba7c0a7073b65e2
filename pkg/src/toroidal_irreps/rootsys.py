"""Finite root systems from Cartan matrices.

Weights are tuples of coordinates on the fundamental weights, roots are
tuples of coordinates on the simple roots. The Cartan matrix uses
``cartan[i][j] = <alpha_i, alpha_j^vee>`` so row ``i`` is ``alpha_i`` in the
weight basis. The invariant form is normalised so the highest root has
squared length 2.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import _exact


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _e_type(n):
    # Bourbaki numbering: 1-3-4-5-..., node 2 hangs off node 4
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return a


def cartan_matrix(type_letter, rank):
    """Cartan matrix ``<alpha_i, alpha_j^vee>`` in Bourbaki numbering."""
    t, n = type_letter.upper(), int(rank)
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if not valid.get(t, False):
        raise ValueError(f"invalid root system type {type_letter}{rank}")
    if t in "ABCD":
        a = _chain(n)
        if t == "B":
            a[n - 2][n - 1] = -2
        elif t == "C":
            a[n - 1][n - 2] = -2
        elif t == "D":
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if t == "E":
        return _e_type(n)
    if t == "F":
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    return [[2, -1], [-3, 2]]


def parse_type(code):
    """``"A2"`` -> ``("A", 2)``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", str(code))
    if not m:
        raise ValueError(f"invalid root system code {code!r}")
    return m.group(1).upper(), int(m.group(2))


@dataclass(frozen=True)
class GammaClass:
    """Class of a weight in P/Q: ``index`` is ``i`` for ``omega_i mod Q``, None for 0."""

    index: object = None

    def __str__(self):
        return "0" if self.index is None else f"omega_{self.index + 1}"


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_letter: str
    rank: int
    cartan: tuple = field(repr=False)

    # ------------------------------------------------------------------ form
    @cached_property
    def half_lengths(self):
        """``d_i = (alpha_i|alpha_i)/2`` with the highest root of length 2."""
        n, a = self.rank, self.cartan
        d = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] and d[j] is None:
                    d[j] = Fraction(a[j][i]) * d[i] / a[i][j]
                    stack.append(j)
        theta = self._raw_positive_roots[-1]
        norm = sum(c * sum(theta[i] * a[i][j] * d[j] for i in range(n)) for j, c in enumerate(theta))
        return tuple(x * 2 / norm for x in d)

    @cached_property
    def symmetric_form(self):
        """Gram matrix ``(alpha_i|alpha_j)``."""
        d = self.half_lengths
        return tuple(tuple(self.cartan[i][j] * d[j] for j in range(self.rank)) for i in range(self.rank))

    # ----------------------------------------------------------------- roots
    @cached_property
    def _raw_positive_roots(self):
        n, a = self.rank, self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    pairing = sum(beta[j] * a[j][i] for j in range(n))
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in roots:
                            p += 1
                        else:
                            break
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            nxt.sort(reverse=True)
            ordered.extend(nxt)
            layer = nxt
        return tuple(ordered)

    @property
    def positive_roots(self):
        """Positive roots ordered by height, as simple-root coordinates."""
        return self._raw_positive_roots

    @cached_property
    def roots(self):
        pos = self.positive_roots
        return pos + tuple(tuple(-c for c in r) for r in pos)

    @property
    def simple_roots(self):
        return self.positive_roots[: self.rank]

    @property
    def theta(self):
        return self.positive_roots[-1]

    @cached_property
    def theta_s(self):
        """Highest short root (equal to theta when simply laced)."""
        shortest = min(self.root_norm(r) for r in self.positive_roots)
        return max((r for r in self.positive_roots if self.root_norm(r) == shortest), key=sum)

    def is_simply_laced(self):
        return len(set(self.half_lengths)) == 1

    def root_norm(self, root):
        """``(alpha|alpha)`` for ``alpha`` in simple-root coordinates."""
        return self.form_roots(root, root)

    def form_roots(self, x, y):
        b = self.symmetric_form
        return sum(x[i] * b[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    def coroot(self, root):
        """Simple-coroot coordinates of ``root^vee``."""
        norm = self.root_norm(root) / 2
        out = []
        for c, d in zip(root, self.half_lengths):
            v = c * d / norm
            if v.denominator != 1:
                raise ValueError("coroot has non-integral coordinates")
            out.append(int(v))
        return tuple(out)

    @cached_property
    def comarks(self):
        """``theta^vee = sum a_i^vee alpha_i^vee``."""
        return self.coroot(self.theta)

    # --------------------------------------------------------------- weights
    def root_to_weight(self, root):
        """Simple-root coordinates to fundamental-weight coordinates."""
        a = self.cartan
        return tuple(sum(root[j] * a[j][i] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root(self, weight):
        """Fundamental-weight coordinates to (rational) simple-root coordinates."""
        at = [[Fraction(self.cartan[j][i]) for j in range(self.rank)] for i in range(self.rank)]
        sol = _exact.solve(at, [[Fraction(w)] for w in weight])
        return tuple(row[0] for row in sol)

    def pair(self, weight, root):
        """``<weight, root^vee>``."""
        return sum(w * c for w, c in zip(weight, self.coroot(root)))

    def form(self, x, y):
        """``(x|y)`` for weights in fundamental-weight coordinates."""
        yc = self.weight_to_root(y)
        return sum(Fraction(w) * c * d for w, c, d in zip(x, yc, self.half_lengths))

    def in_root_lattice(self, weight):
        return all(c.denominator == 1 for c in self.weight_to_root(weight))

    @cached_property
    def rho(self):
        return (1,) * self.rank

    def reflect(self, weight, root):
        """``s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha``."""
        k = self.pair(weight, root)
        alpha = self.root_to_weight(root)
        return tuple(w - k * a for w, a in zip(weight, alpha))

    def simple_reflect(self, weight, i):
        k = weight[i]
        return tuple(w - k * a for w, a in zip(weight, self.cartan[i]))

    def dominant_conjugate(self, weight):
        w = tuple(weight)
        while True:
            i = next((j for j, x in enumerate(w) if x < 0), None)
            if i is None:
                return w
            w = self.simple_reflect(w, i)

    def weyl_dimension(self, weight):
        num = Fraction(1)
        lr = tuple(w + 1 for w in weight)
        for alpha in self.positive_roots:
            num *= Fraction(self.pair(lr, alpha), self.pair(self.rho, alpha))
        return int(num)

    def finite_multiplicities(self, weight):
        """Weight multiplicities of ``V(lambda)`` via Freudenthal's recursion."""
        lam = tuple(int(x) for x in weight)
        if len(lam) != self.rank or any(x < 0 for x in lam):
            raise ValueError("finite_multiplicities needs a dominant integral weight")
        rho = self.rho
        pos = [(r, self.root_to_weight(r)) for r in self.positive_roots]
        norm = lambda v: self.form(v, v)
        top = norm(tuple(x + y for x, y in zip(lam, rho)))
        mult = {lam: 1}
        layer = [lam]
        while layer:
            candidates = sorted({tuple(m - a for m, a in zip(mu, self.cartan[i])) for mu in layer for i in range(self.rank)}, reverse=True)
            layer = []
            for mu in candidates:
                denom = top - norm(tuple(x + y for x, y in zip(mu, rho)))
                if denom <= 0:
                    continue
                acc = Fraction(0)
                for root, aw in pos:
                    k = 1
                    nu = tuple(m + a for m, a in zip(mu, aw))
                    while nu in mult:
                        acc += mult[nu] * self.form(nu, aw)
                        k += 1
                        nu = tuple(m + a for m, a in zip(nu, aw))
                m = 2 * acc / denom
                if m:
                    if m.denominator != 1:
                        raise ArithmeticError("non-integral Freudenthal multiplicity")
                    mult[mu] = int(m)
                    layer.append(mu)
        return mult

    def minimal_coset_rep(self, weight):
        """Minimal dominant weight congruent to ``weight`` modulo the root lattice."""
        w = self.dominant_conjugate(weight)
        pos = [self.root_to_weight(r) for r in self.positive_roots]
        changed = True
        while changed:
            changed = False
            for aw in pos:
                nu = tuple(x - y for x, y in zip(w, aw))
                if all(x >= 0 for x in nu):
                    w, changed = nu, True
                    break
        if not any(w):
            return GammaClass(None), w
        idx = next(i for i, x in enumerate(w) if x)
        return GammaClass(idx), w

    def gamma_classes(self):
        """Representatives of P/Q as minimal dominant weights."""
        seen = {}
        zero = (0,) * self.rank
        for w in [zero] + [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]:
            cls, rep = self.minimal_coset_rep(w)
            seen.setdefault(rep, cls)
        return sorted(seen.items(), key=lambda kv: (sum(kv[0]) > 0, kv[0]))

    def to_json(self):
        return {
            "type": f"{self.type_letter}{self.rank}",
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
            "theta": list(self.theta),
            "theta_s": list(self.theta_s),
            "half_lengths": [[x.numerator, x.denominator] for x in self.half_lengths],
        }


_CACHE = {}


def build_root_system(type_letter, rank=None):
    """Root system for ``("A", 2)`` or the code ``"A2"``."""
    if rank is None:
        type_letter, rank = parse_type(type_letter)
    key = (type_letter.upper(), int(rank))
    if key not in _CACHE:
        a = cartan_matrix(*key)
        _CACHE[key] = RootSystem(key[0], key[1], tuple(tuple(r) for r in a))
    return _CACHE[key]
