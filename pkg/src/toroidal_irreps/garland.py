"""Garland polynomials and their evaluations.

``p^s`` is the coefficient of ``u^s`` in ``exp(-sum_r h_r u^r / r)`` where
``h_r`` stands for ``alpha^vee (x) t^r``. Polynomials in the ``h_r`` are dicts
from monomials (sorted tuples of ``(r, exponent)``) to Fractions.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .hwmodule import TruncationError, vector_add, vector_scale, vectors_equal


def _mono_mul(a, b):
    exps = dict(a)
    for r, e in b:
        exps[r] = exps.get(r, 0) + e
    return tuple(sorted(exps.items()))


def poly_mul(p, q):
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = _mono_mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def poly_add(p, q, c=1):
    out = dict(p)
    for m, v in q.items():
        out[m] = out.get(m, 0) + c * v
    return {m: v for m, v in out.items() if v}


def poly_degree(mono):
    """Weighted degree with ``deg h_r = r``."""
    return sum(r * e for r, e in mono)


@lru_cache(maxsize=None)
def _garland(s):
    if s == 0:
        return ((((), Fraction(1)),))
    acc = {}
    for r in range(1, s + 1):
        acc = poly_add(acc, poly_mul({((r, 1),): Fraction(1)}, dict(_garland(s - r))))
    return tuple(sorted(((m, -c / s) for m, c in acc.items() if c)))


def garland_p(s):
    """``p^s`` from the Newton recursion ``s p^s = -sum_{r=1}^s h_r p^{s-r}``."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return dict(_garland(s))


def evaluate(poly, values):
    """Substitute numbers ``values[r]`` for ``h_r``."""
    total = Fraction(0)
    for mono, c in poly.items():
        term = Fraction(c)
        for r, e in mono:
            term *= Fraction(values[r]) ** e
        total += term
    return total


def _exponent_vector(mono):
    top = max((r for r, _ in mono), default=0)
    exps = [0] * top
    for r, e in mono:
        exps[r - 1] = e
    return exps


def format_poly(poly, var="h"):
    """Sorted monomial list, e.g. ``(1/2)h1^2 - (1/2)h2``."""
    if not poly:
        return "0"
    width = max((r for m in poly for r, _ in m), default=0)

    def order(mono):
        exps = _exponent_vector(mono) + [0] * width
        return tuple(-e for e in exps[:width])

    parts = []
    for mono in sorted(poly, key=order):
        c = Fraction(poly[mono])
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = "*".join(f"{var}{r}" + (f"^{e}" if e > 1 else "") for r, e in mono)
        body = body.replace("*", "")
        if not body:
            coef = f"{a.numerator}" if a.denominator == 1 else f"({a.numerator}/{a.denominator})"
        elif a == 1:
            coef = ""
        elif a.denominator == 1:
            coef = f"{a.numerator}"
        else:
            coef = f"({a.numerator}/{a.denominator})"
        parts.append((sign, coef + body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# --------------------------------------------------------------- transport
def transport(poly, rs, alpha, r, a):
    """Image of ``poly`` under ``h_s -> (alpha^vee + (2r/(alpha|alpha)) K_1) (x) a^s``.

    The result is a polynomial in the commuting symbols ``("h", i, m)`` for
    ``alpha_i^vee (x) t^m`` and ``("K", m)`` for ``K_1 (x) t^m`` with ``m`` a
    monomial exponent in ``t_2..t_k``. Requires ``alpha + r delta_1`` to be a
    positive real affine root.
    """
    alpha = tuple(alpha)
    if alpha not in set(rs.roots) or r < 0 or (r == 0 and alpha not in set(rs.positive_roots)):
        raise ValueError("transport needs a positive real affine root alpha + r delta_1")
    cv = rs.coroot(alpha)
    kc = Fraction(2 * r) / rs.root_norm(alpha)
    a = tuple(a)

    def image(s):
        m = tuple(s * x for x in a)
        lin = {(("h", i, m),): Fraction(c) for i, c in enumerate(cv) if c}
        if kc:
            lin[(("K", m),)] = kc
        return {tuple(sorted((sym, 1) for sym in mono)): c for mono, c in lin.items()}

    out = {}
    for mono, c in poly.items():
        term = {(): Fraction(c)}
        for s, e in mono:
            for _ in range(e):
                term = poly_mul(term, image(s))
        out = poly_add(out, term)
    return out


def evaluate_under_pi(pi, alpha, r, a, s):
    """Coefficient of ``u^s`` in ``prod_M (1 - ev_M(a) u)^{pi(M)(beta^vee)}``.

    ``beta = alpha + r delta_1`` and ``a`` is an exponent vector in ``Z^{k-1}``.
    """
    alpha = tuple(alpha)
    series = [Fraction(1)]
    for point, weight in zip(pi.points, pi.weights):
        val = pi.pair_coroot(weight, alpha, r)
        if val.denominator != 1 or val < 0:
            raise ValueError("pi(M)(beta^vee) must be a non-negative integer")
        ev = pi.monomial_value(point, a)
        for _ in range(int(val)):
            nxt = series + [Fraction(0)]
            for i in range(len(series)):
                nxt[i + 1] -= ev * series[i]
            series = nxt
    return series[s] if s < len(series) else Fraction(0)


def newton_under_pi(pi, alpha, r, a, s):
    """Same number via ``p^s`` with ``h_j -> sum_M pi(M)(beta^vee) ev_M(a)^j``."""
    values = {}
    for j in range(1, s + 1):
        values[j] = sum(
            pi.pair_coroot(w, alpha, r) * pi.monomial_value(p, a) ** j for p, w in zip(pi.points, pi.weights)
        )
    return evaluate(garland_p(s), values)


# ------------------------------------------------------ on-module identities
def apply_poly(poly, h_op, vec):
    """Apply a polynomial in commuting operators ``h_op(r)`` to a vector."""
    out = {}
    for mono, c in poly.items():
        w = vec
        for r, e in mono:
            op = h_op(r)
            for _ in range(e):
                w = op.apply(w)
        out = vector_add(out, w, c)
    return out


def _power(op, e, vec):
    for _ in range(e):
        vec = op.apply(vec)
    return vec


def garland_identities(xplus, xminus, h_op, vec, r):
    """Check both divided-power identities on a vector killed by ``x^+ (x) C[t]``.

    ``xplus(j)``, ``xminus(j)`` and ``h_op(j)`` return operators of
    ``x^+ (x) t^j``, ``x^- (x) t^j`` and ``alpha^vee (x) t^j``. With divided
    powers ``X^{(j)} = X^j / j!``:

    * ``(x^+ t)^{(r)} (x^-)^{(r+1)} v = (-1)^r sum_{s=0}^r (x^- t^{r-s}) p^s v``
    * ``(x^+ t)^{(r+1)} (x^-)^{(r+1)} v = (-1)^{r+1} p^{r+1} v``

    Returns ``(first_ok, second_ok, nontrivial)`` where ``nontrivial`` says
    whether any side was a nonzero vector.
    """
    low = _power(xminus(0), r + 1, vec)
    lhs1 = vector_scale(_power(xplus(1), r, low), Fraction(1, factorial(r) * factorial(r + 1)))
    rhs1 = {}
    for s in range(r + 1):
        ps = apply_poly(garland_p(s), h_op, vec)
        rhs1 = vector_add(rhs1, xminus(r - s).apply(ps))
    rhs1 = vector_scale(rhs1, (-1) ** r)
    lhs2 = vector_scale(_power(xplus(1), r + 1, low), Fraction(1, factorial(r + 1) ** 2))
    rhs2 = vector_scale(apply_poly(garland_p(r + 1), h_op, vec), (-1) ** (r + 1))
    nontrivial = any(bool(v) for v in (lhs1, rhs1, lhs2, rhs2))
    return vectors_equal(lhs1, rhs1), vectors_equal(lhs2, rhs2), nontrivial


def current_singular_vectors(module, xplus, max_degree):
    """Basis of vectors killed by ``x^+ (x) t^j`` for ``0 <= j <= max_degree``, per weight."""
    from . import _exact

    out = []
    ops = [xplus(j) for j in range(max_degree + 1)]
    for key in sorted(module.keys):
        d = module.dim(key)
        rows = []
        for op in ops:
            if key not in op.blocks:
                raise TruncationError()
            rows.extend(op.blocks[key])
        for v in _exact.nullspace(rows, cols=d):
            out.append({key: v})
    return out


def verify_garland_on_module(module, r, alpha_label=("E12", "E21"), coroot=(1,)):
    """Run both identities for ``r`` on every current-singular basis vector.

    ``module`` is a truncated affine module of type A. Returns a report dict.
    """
    if module.depth < r + 1:
        raise ValueError("module depth must be at least r + 1")
    plus, minus = alpha_label
    xplus = lambda j: module.loop(plus, j)
    xminus = lambda j: module.loop(minus, j)
    h_op = lambda j: module.cartan_loop(coroot, j)
    vecs = current_singular_vectors(module, xplus, module.depth)
    ok1 = ok2 = True
    nontrivial = 0
    checked = 0
    for v in vecs:
        try:
            a, b, nz = garland_identities(xplus, xminus, h_op, v, r)
        except TruncationError:
            continue
        checked += 1
        ok1 &= a
        ok2 &= b
        nontrivial += int(nz)
    return {"r": r, "checked": checked, "nontrivial": nontrivial, "first": ok1, "second": ok2}
