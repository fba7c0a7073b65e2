"""The k-toroidal algebra: elements, canonical centre, bracket, roots and reflections.

Elements are ``x (x) t^m`` (``x`` an sl(n+1) basis label), central vectors
``sum_i c_i t^r K_i`` modulo ``sum_i r_i t^r K_i = 0``, and derivations
``d_1..d_k``. The bracket is

    [x t^m, y t^p] = [x,y] t^{m+p} + (x|y) sum_i m_i t^{m+p} K_i,

centre is central, and ``d_i`` multiplies anything of degree ``m`` by ``m_i``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import gcd_unimodular
from .lie import sl
from .rootsys import build_root_system, parse_type


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _frac_json(x):
    x = _frac(x)
    return [x.numerator, x.denominator]


def _from_json_frac(v):
    if isinstance(v, list):
        return Fraction(int(v[0]), int(v[1]))
    return Fraction(v)


# ------------------------------------------------------------------ centre
@dataclass(frozen=True)
class CentralVector:
    """``sum_i c_i t^r K_i`` in canonical form."""

    r: tuple
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        object.__setattr__(self, "c", tuple(_frac(x) for x in self.c))

    def reduced(self):
        return reduce_central(self)

    def is_zero(self):
        return not any(self.reduced().c)


def reduce_central(v):
    """Zero the coordinate at the first nonzero entry of ``r`` using the relation."""
    r, c = v.r, v.c
    i0 = next((i for i, x in enumerate(r) if x), None)
    if i0 is None:
        return CentralVector(r, c)
    f = c[i0] / r[i0]
    return CentralVector(r, tuple(ci - f * ri for ci, ri in zip(c, r)))


# ---------------------------------------------------------------- elements
class ToroidalElement:
    """Finite sum of loop, central and derivation parts, kept canonical."""

    __slots__ = ("loop", "central", "deriv", "k")

    def __init__(self, k, loop=None, central=None, deriv=None):
        self.k = k
        self.loop = {}
        for (label, m), c in (loop or {}).items():
            c = _frac(c)
            if c:
                key = (label, tuple(int(x) for x in m))
                self.loop[key] = self.loop.get(key, 0) + c
        self.loop = {key: c for key, c in self.loop.items() if c}
        self.central = {}
        for r, c in (central or {}).items():
            r = tuple(int(x) for x in r)
            prev = self.central.get(r, (Fraction(0),) * k)
            self.central[r] = tuple(a + _frac(b) for a, b in zip(prev, c))
        red = {}
        for r, c in self.central.items():
            c = reduce_central(CentralVector(r, c)).c
            if any(c):
                red[r] = c
        self.central = red
        d = tuple(_frac(x) for x in (deriv or ()))
        self.deriv = d + (Fraction(0),) * (k - len(d))

    def _canon(self):
        return (
            tuple(sorted(self.loop.items())),
            tuple(sorted(self.central.items())),
            self.deriv,
        )

    def __eq__(self, other):
        return isinstance(other, ToroidalElement) and self.k == other.k and self._canon() == other._canon()

    def __hash__(self):
        return hash(self._canon())

    def __add__(self, other):
        return self.combine(other, 1)

    def __sub__(self, other):
        return self.combine(other, -1)

    def combine(self, other, c):
        loop = dict(self.loop)
        for key, v in other.loop.items():
            loop[key] = loop.get(key, 0) + c * v
        central = dict(self.central)
        for r, v in other.central.items():
            prev = central.get(r, (Fraction(0),) * self.k)
            central[r] = tuple(a + c * b for a, b in zip(prev, v))
        deriv = tuple(a + c * b for a, b in zip(self.deriv, other.deriv))
        return ToroidalElement(self.k, loop, central, deriv)

    def scale(self, c):
        return ToroidalElement(self.k).combine(self, c)

    def is_zero(self):
        return not self.loop and not self.central and not any(self.deriv)

    def __repr__(self):
        return f"ToroidalElement({self.to_json()})"

    def to_json(self):
        return {
            "loop": [{"elt": label, "m": list(m), "coeff": _frac_json(c)} for (label, m), c in sorted(self.loop.items())],
            "central": [{"r": list(r), "c": [_frac_json(x) for x in c]} for r, c in sorted(self.central.items())],
            "deriv": [_frac_json(x) for x in self.deriv],
        }

    @classmethod
    def from_json(cls, k, data):
        loop = {}
        for item in data.get("loop", []):
            key = (item["elt"], tuple(item["m"]))
            loop[key] = loop.get(key, 0) + _from_json_frac(item.get("coeff", 1))
        central = {}
        for item in data.get("central", []):
            r = tuple(item["r"])
            c = tuple(_from_json_frac(x) for x in item["c"])
            prev = central.get(r, (Fraction(0),) * k)
            central[r] = tuple(a + b for a, b in zip(prev, c))
        deriv = [_from_json_frac(x) for x in data.get("deriv", [])]
        return cls(k, loop, central, deriv)


# ----------------------------------------------------------- roots/weights
@dataclass(frozen=True)
class ToroidalRoot:
    """``alpha + delta_m`` with ``alpha`` in simple-root coordinates (zero allowed)."""

    alpha: tuple
    m: tuple

    def is_real(self):
        return any(self.alpha)

    def is_imaginary(self):
        return not any(self.alpha) and any(self.m)


@dataclass(frozen=True)
class ToroidalWeight:
    """Values of a weight on simple coroots, on ``K_1..K_k`` and on ``d_1..d_k``."""

    finite: tuple
    K: tuple
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(_frac(x) for x in self.finite))
        object.__setattr__(self, "K", tuple(_frac(x) for x in self.K))
        object.__setattr__(self, "d", tuple(_frac(x) for x in self.d))

    def __add__(self, other):
        return ToroidalWeight(
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            tuple(a + b for a, b in zip(self.K, other.K)),
            tuple(a + b for a, b in zip(self.d, other.d)),
        )

    def scaled(self, c):
        return ToroidalWeight(tuple(c * x for x in self.finite), tuple(c * x for x in self.K), tuple(c * x for x in self.d))

    def __sub__(self, other):
        return self + other.scaled(-1)


class ToroidalAlgebra:
    """``T(g)`` for a finite type code and ``k`` variables."""

    def __init__(self, type_code, k):
        if k < 1:
            raise ValueError("k must be positive")
        self.rs = build_root_system(*parse_type(type_code))
        self.k = k

    # -- elements
    def _alg(self):
        if self.rs.type_letter != "A":
            raise ValueError("unsupported type for structure constants")
        return sl(self.rs.rank)

    def zero(self):
        return ToroidalElement(self.k)

    def loop(self, label, m, c=1):
        return ToroidalElement(self.k, {(label, tuple(m)): c})

    def central(self, r, c):
        return ToroidalElement(self.k, central={tuple(r): tuple(c)})

    def derivation(self, i, c=1):
        d = [0] * self.k
        d[i] = c
        return ToroidalElement(self.k, deriv=d)

    def bracket(self, a, b):
        """Lie bracket; central parts come out reduced."""
        alg = self._alg()
        loop, central = {}, {}

        def add_loop(label, m, c):
            key = (label, m)
            loop[key] = loop.get(key, 0) + c

        def add_central(r, vec):
            prev = central.get(r, (Fraction(0),) * self.k)
            central[r] = tuple(x + y for x, y in zip(prev, vec))

        for (x, m), cx in a.loop.items():
            for (y, p), cy in b.loop.items():
                s = tuple(i + j for i, j in zip(m, p))
                for label, c in alg.bracket({x: 1}, {y: 1}).items():
                    add_loop(label, s, cx * cy * c)
                f = alg.form({x: 1}, {y: 1})
                if f:
                    add_central(s, tuple(cx * cy * f * mi for mi in m))
        # derivations: [d, X] = deg(X) . X
        for one, other, sign in ((a, b, 1), (b, a, -1)):
            if not any(one.deriv):
                continue
            for (y, p), cy in other.loop.items():
                w = sum(di * pi for di, pi in zip(one.deriv, p))
                if w:
                    add_loop(y, p, sign * w * cy)
            for r, c in other.central.items():
                w = sum(di * ri for di, ri in zip(one.deriv, r))
                if w:
                    add_central(r, tuple(sign * w * x for x in c))
        return ToroidalElement(self.k, loop, central)

    # -- roots
    def form_roots(self, alpha, beta):
        return self.rs.form_roots(alpha, beta)

    def is_root(self, beta):
        alpha = tuple(beta.alpha)
        if any(alpha):
            return alpha in set(self.rs.roots)
        return any(beta.m)

    def coroot(self, beta):
        """``beta^vee = alpha^vee + (2/(alpha|alpha)) sum m_i K_i`` for a real root."""
        if not beta.is_real():
            raise ValueError("coroot of an imaginary root is undefined")
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a root")
        cv = self.rs.coroot(beta.alpha)
        scale = Fraction(2) / self.rs.root_norm(beta.alpha)
        loop = {(f"H{i + 1}", (0,) * self.k): c for i, c in enumerate(cv) if c}
        central = {(0,) * self.k: tuple(scale * mi for mi in beta.m)}
        return ToroidalElement(self.k, loop, central)

    def root_vectors(self, beta):
        """``(e, f)`` with ``e = x_alpha t^m``, ``f = x_{-alpha} t^{-m}`` (type A)."""
        alg = self._alg()
        e = self.loop(alg.label_of_root(beta.alpha), beta.m)
        f = self.loop(alg.label_of_root(tuple(-c for c in beta.alpha)), tuple(-x for x in beta.m))
        return e, f

    def simple_roots(self):
        """``alpha_1..alpha_n`` and ``alpha_{n+i} = delta_i - theta``."""
        n = self.rs.rank
        out = [ToroidalRoot(tuple(int(i == j) for j in range(n)), (0,) * self.k) for i in range(n)]
        theta = self.rs.theta
        for i in range(self.k):
            out.append(ToroidalRoot(tuple(-t for t in theta), tuple(int(i == j) for j in range(self.k))))
        return out

    def express_in_simple_system(self, beta):
        """Integer coefficients of ``beta`` on ``alpha_1..alpha_{n+k}``."""
        if not self.is_root(beta):
            raise ValueError(f"{beta} is not a toroidal root")
        total = sum(beta.m)
        fin = tuple(a + total * t for a, t in zip(beta.alpha, self.rs.theta))
        return fin + tuple(beta.m)

    # -- weights
    def root_as_weight(self, beta):
        return ToroidalWeight(self.rs.root_to_weight(beta.alpha), (0,) * self.k, beta.m)

    def pair(self, lam, beta):
        """``<lam, beta^vee>``."""
        base = sum(w * c for w, c in zip(lam.finite, self.rs.coroot(beta.alpha)))
        scale = Fraction(2) / self.rs.root_norm(beta.alpha)
        return base + scale * sum(mi * ki for mi, ki in zip(beta.m, lam.K))

    def reflect(self, lam, beta):
        """``r_beta(lam) = lam - <lam, beta^vee> beta``."""
        if not beta.is_real():
            raise ValueError("reflection needs a real root")
        p = self.pair(lam, beta)
        if p.denominator != 1:
            raise ValueError("non-integrable weight: pairing with a real coroot is not an integer")
        return lam - self.root_as_weight(beta).scaled(p)

    reflect_toroidal = reflect

    def sl2_triple(self, beta):
        """``(e, f, h)`` for a real root with ``h = beta^vee``."""
        e, f = self.root_vectors(beta)
        return e, f, self.coroot(beta)

    def affine_root(self, j=0):
        """``alpha_{n+1} = delta_1 - theta`` (``j=0``) as a toroidal root."""
        m = [0] * self.k
        m[j] = 1
        return ToroidalRoot(tuple(-t for t in self.rs.theta), tuple(m))

    def box_reduce(self, lam):
        """Move the ``d_j`` values (``j >= 2``) of ``lam`` into ``[0, m)``.

        Requires ``<lam, alpha_{n+1}^vee> = m > 0`` and ``lam(K_j) = 0`` for
        ``j >= 2``. Each step applies ``r_{alpha_{n+1}} r_{beta_j}`` (lowers
        ``d_j`` by ``m``) or ``r_{alpha_{n+1}} r_{gamma_j}`` (raises it), with
        ``beta_j = delta_j + alpha_{n+1}`` and ``gamma_j = delta_j - alpha_{n+1}``.
        Returns the reduced weight and the word as a list of
        ``(name, j)`` pairs.
        """
        a = self.affine_root(0)
        m = self.pair(lam, a)
        if m <= 0:
            raise ValueError("box reduction needs <lam, alpha_{n+1}^vee> > 0")
        if any(lam.K[j] for j in range(1, self.k)):
            raise ValueError("box reduction needs lam(K_j) = 0 for j >= 2")
        word = []
        theta = self.rs.theta
        for j in range(1, self.k):
            m_beta = tuple(int(i == 0) + int(i == j) for i in range(self.k))
            m_gamma = tuple(int(i == j) - int(i == 0) for i in range(self.k))
            beta = ToroidalRoot(tuple(-t for t in theta), m_beta)
            gamma = ToroidalRoot(tuple(theta), m_gamma)
            while lam.d[j] >= m or lam.d[j] < 0:
                step, name = (beta, "beta") if lam.d[j] >= m else (gamma, "gamma")
                lam = self.reflect(self.reflect(lam, step), a)
                word.append((name, j + 1))
        return lam, word


def composite_reflection_formula(alg, lam, alpha, i, mi):
    """Closed form of ``r_alpha r_beta(lam)`` for ``beta = alpha + m_i delta_i``.

    ``lam + c alpha - (<lam, alpha^vee> + c) m_i delta_i`` with
    ``c = (2/(alpha|alpha)) m_i lam(K_i)``; for ``m_i = 1`` this is the
    formula usually quoted without the factor ``m_i``.
    """
    c = Fraction(2) / alg.rs.root_norm(alpha) * mi * lam.K[i]
    p = sum(w * x for w, x in zip(lam.finite, alg.rs.coroot(alpha)))
    fin = tuple(w + c * x for w, x in zip(lam.finite, alg.rs.root_to_weight(alpha)))
    d = list(lam.d)
    d[i] -= (p + c) * mi
    return ToroidalWeight(fin, lam.K, d)


def normalize_levels(levels):
    """Unimodular change of ``K_1..K_k`` putting the central charge on ``K_1``.

    Returns ``(B, levels')`` with ``levels' = B levels = (gcd, 0, ..., 0)``.
    """
    levels = [int(x) for x in levels]
    B = gcd_unimodular(levels)
    return B, tuple(sum(b * x for b, x in zip(row, levels)) for row in B)
