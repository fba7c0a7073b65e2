"""Irreducible highest-weight modules of a Kac-Moody algebra, truncated by depth.

The construction only uses the Chevalley relations ``[e_i, f_j] = delta_ij h_i``
and ``e_i v = 0``. Weight spaces are built in order of height: the candidate
vectors at a weight are ``f_i b`` for basis vectors ``b`` one step above,
their contravariant (Shapovalov) Gram matrix is computed from data already
known, and the weight space is the span of the candidates modulo the Gram
radical. Since the radical of the contravariant form is the maximal
submodule, this yields the irreducible quotient for any Cartan matrix.

Weight keys are tuples ``beta`` of non-negative integers with
``mu = Lambda - sum beta_i alpha_i``.
"""

from fractions import Fraction

from . import _exact


class TruncationError(ValueError):
    """Raised when an action leaves the truncated range."""

    def __init__(self, what="action"):
        super().__init__(f"extend truncation: {what} leaves the truncated range")


def _unit(n, k):
    v = [Fraction(0)] * n
    v[k] = Fraction(1)
    return v


def _shift(key, delta, sign=1):
    return tuple(a + sign * b for a, b in zip(key, delta))


class WeightModule:
    """Irreducible quotient ``L(Lambda)`` of the Verma module, truncated in one coordinate.

    Parameters
    ----------
    cartan : matrix with ``cartan[i][j] = <alpha_j, alpha_i^vee>``
    highest : values ``<Lambda, alpha_i^vee>``
    depth, depth_index : keep only keys with ``beta[depth_index] <= depth``;
        ``depth=None`` builds everything (finite type only).
    """

    def __init__(self, cartan, highest, depth=None, depth_index=None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.n = len(self.cartan)
        self.highest = tuple(Fraction(x) for x in highest)
        if len(self.highest) != self.n:
            raise ValueError("highest weight has the wrong length")
        self.depth = depth
        self.depth_index = depth_index
        self._build()

    # --------------------------------------------------------------- basics
    def in_cap(self, key):
        return self.depth is None or key[self.depth_index] <= self.depth

    def dim(self, key):
        return self.dims.get(tuple(key), 0)

    @property
    def keys(self):
        return list(self.dims)

    def pairing(self, key, i):
        """``<mu, alpha_i^vee>`` for the weight ``mu`` of ``key``."""
        return self.highest[i] - sum(self.cartan[i][j] * key[j] for j in range(self.n))

    def unit(self, i):
        return tuple(int(j == i) for j in range(self.n))

    # ---------------------------------------------------------------- build
    def _build(self):
        n = self.n
        zero = (0,) * n
        self.dims = {zero: 1}
        self.forms = {zero: [[Fraction(1)]]}
        self.words = {zero: [()]}
        self.F = [dict() for _ in range(n)]
        self.E = [dict() for _ in range(n)]
        layer = [zero]
        while layer:
            targets = sorted({_shift(k, self.unit(i)) for k in layer for i in range(n)})
            layer = [b for b in targets if self.in_cap(b) and self._build_weight(b)]
        # zero maps into non-weights inside the cap
        for key, d in self.dims.items():
            for i in range(n):
                up = _shift(key, self.unit(i))
                if up not in self.dims and self.in_cap(up):
                    self.F[i][key] = []
                if key not in self.E[i]:
                    self.E[i][key] = []

    def _build_weight(self, beta):
        n = self.n
        cands = []
        for i in range(n):
            if beta[i]:
                src = _shift(beta, self.unit(i), -1)
                cands += [(i, b) for b in range(self.dims.get(src, 0))]
        if not cands:
            return 0
        # W[i][c] = e_i f_{i'} b' for candidate c = (i', b'), inside L_{beta - e_i}
        W = {}
        for i in range(n):
            tgt = _shift(beta, self.unit(i), -1)
            dt = self.dims.get(tgt, 0)
            if not dt:
                continue
            cols = []
            for ip, bp in cands:
                src = _shift(beta, self.unit(ip), -1)
                vec = _unit(dt, bp) if ip == i else [Fraction(0)] * dt
                if ip == i:
                    h = self.pairing(src, i)
                    vec = [h * x for x in vec]
                mid = _shift(src, self.unit(i), -1)
                if mid in self.dims:
                    u = [row[bp] for row in self.E[i][src]]
                    fu = _exact.matvec(self.F[ip][mid], u)
                    vec = [x + y for x, y in zip(vec, fu)]
                cols.append(vec)
            W[i] = cols
        gram = []
        for i, b in cands:
            s_row = self.forms[_shift(beta, self.unit(i), -1)][b]
            gram.append([sum((x * y for x, y in zip(s_row, col) if x and y), Fraction(0)) for col in W[i]])
        piv = _exact.independent_columns(gram)
        d = len(piv)
        if not d:
            return 0
        g_bb = [[gram[r][c] for c in piv] for r in piv]
        g_b = [gram[r] for r in piv]
        coords = _exact.solve(g_bb, g_b)
        self.dims[beta] = d
        self.forms[beta] = g_bb
        self.words[beta] = []
        for c in piv:
            i, b = cands[c]
            self.words[beta].append((i,) + self.words[_shift(beta, self.unit(i), -1)][b])
        index = {c: k for k, c in enumerate(cands)}
        for i in range(n):
            src = _shift(beta, self.unit(i), -1)
            ds = self.dims.get(src, 0)
            if ds:
                self.F[i][src] = [[coords[r][index[(i, b)]] for b in range(ds)] for r in range(d)]
            if i in W:
                rows = len(W[i][0])
                self.E[i][beta] = [[W[i][piv[k]][r] for k in range(d)] for r in range(rows)]
        return d

    # ------------------------------------------------------------ operators
    def lowering(self, i):
        """Operator of ``f_i``."""
        return Operator(self, self.unit(i), dict(self.F[i]))

    def raising(self, i):
        """Operator of ``e_i``."""
        return Operator(self, tuple(-x for x in self.unit(i)), dict(self.E[i]))

    def diagonal(self, coeffs, const=0):
        """Operator of ``sum c_i alpha_i^vee`` plus a scalar ``const``."""
        blocks = {}
        for key, d in self.dims.items():
            val = Fraction(const) + sum(Fraction(c) * self.pairing(key, i) for i, c in enumerate(coeffs) if c)
            blocks[key] = [[val if r == c else Fraction(0) for c in range(d)] for r in range(d)]
        return Operator(self, (0,) * self.n, blocks)

    def identity(self):
        return self.diagonal([], 1)

    def highest_vector(self):
        return {(0,) * self.n: [Fraction(1)]}


class Operator:
    """Linear map on a graded space that shifts keys by a fixed vector.

    ``blocks[k]`` is the matrix from the space at ``k`` to the space at
    ``k + shift``. A missing source key with nonzero dimension means the
    image leaves the truncation.
    """

    def __init__(self, space, shift, blocks):
        self.space = space
        self.shift = tuple(shift)
        self.blocks = blocks

    def target(self, key):
        return _shift(key, self.shift)

    def block(self, key):
        key = tuple(key)
        if key in self.blocks:
            return self.blocks[key]
        tgt = self.target(key)
        if self.space.dim(key) == 0 and self.space.in_cap(tgt):
            return [[] for _ in range(self.space.dim(tgt))]
        raise TruncationError()

    def defined_at(self, key):
        key = tuple(key)
        return key in self.blocks or (self.space.dim(key) == 0 and self.space.in_cap(self.target(key)))

    def apply(self, vec):
        """Apply to a vector given as ``{key: coordinates}``."""
        out = {}
        for key, coords in vec.items():
            if not any(coords):
                continue
            if key not in self.blocks:
                raise TruncationError()
            tgt = self.target(key)
            img = _exact.matvec(self.blocks[key], coords)
            if img and any(img):
                prev = out.get(tgt)
                out[tgt] = img if prev is None else [x + y for x, y in zip(prev, img)]
        return {k: v for k, v in out.items() if any(v)}

    def __matmul__(self, other):
        return compose(self, other)

    def scaled(self, c):
        c = Fraction(c)
        return Operator(self.space, self.shift, {k: _exact.scale(m, c) for k, m in self.blocks.items()})

    def is_zero(self):
        return all(_exact.is_zero(m) for m in self.blocks.values())


def compose(a, b):
    """``a o b`` on the keys where both steps stay inside the truncation."""
    space = b.space
    blocks = {}
    for key, mb in b.blocks.items():
        mid = b.target(key)
        tgt = a.target(mid)
        ds, dt = space.dim(key), space.dim(tgt)
        if space.dim(mid) == 0 or ds == 0:
            if space.in_cap(tgt):
                blocks[key] = [[Fraction(0)] * ds for _ in range(dt)]
            continue
        if mid not in a.blocks:
            continue
        blocks[key] = _exact.matmul(a.blocks[mid], mb, cols=ds) if dt else []
    return Operator(space, _shift(a.shift, b.shift), blocks)


def combine(terms):
    """``sum c * op`` for ``(c, op)`` pairs sharing one shift; domain is the intersection."""
    terms = [(Fraction(c), op) for c, op in terms]
    if not terms:
        raise ValueError("empty combination")
    shift = terms[0][1].shift
    if any(op.shift != shift for _, op in terms):
        raise ValueError("cannot add operators with different shifts")
    space = terms[0][1].space
    common = set(terms[0][1].blocks)
    for _, op in terms[1:]:
        common &= set(op.blocks)
    blocks = {}
    for key in common:
        acc = None
        for c, op in terms:
            m = op.blocks[key]
            if not c:
                continue
            m = _exact.scale(m, c)
            acc = m if acc is None else _exact.add(acc, m)
        if acc is None:
            ds, dt = space.dim(key), space.dim(_shift(key, shift))
            acc = [[Fraction(0)] * ds for _ in range(dt)]
        blocks[key] = acc
    return Operator(space, shift, blocks)


def commutator(a, b):
    return combine([(1, compose(a, b)), (-1, compose(b, a))])


def operators_equal(a, b, keys=None):
    """Exact equality on the common domain (or on ``keys``)."""
    if a.shift != b.shift:
        return False
    common = set(a.blocks) & set(b.blocks) if keys is None else set(keys)
    for key in common:
        ma, mb = a.block(key), b.block(key)
        if [list(r) for r in ma] != [list(r) for r in mb]:
            if not _exact.is_zero(_exact.sub(ma, mb)):
                return False
    return True


def vector_add(u, v, c=1):
    out = {k: list(x) for k, x in u.items()}
    for k, x in v.items():
        if k in out:
            out[k] = [a + c * b for a, b in zip(out[k], x)]
        else:
            out[k] = [c * b for b in x]
    return {k: x for k, x in out.items() if any(x)}


def vector_scale(u, c):
    return {k: [c * x for x in v] for k, v in u.items() if c}


def vectors_equal(u, v):
    return not vector_add(u, v, -1)


# ------------------------------------------------------------------ oracle
def verma_gram(cartan, highest, beta):
    """Contravariant Gram matrix on all lowering words of weight ``Lambda - beta``.

    Words are products ``f_{i1} ... f_{ir} v`` of Chevalley generators in
    every order, so the matrix is larger than the weight space; its rank is
    the multiplicity in the irreducible quotient. Returns ``(words, gram)``.
    """
    cartan = [list(r) for r in cartan]
    n = len(cartan)
    lam = [Fraction(x) for x in highest]
    beta = tuple(beta)

    words = []

    def gen(prefix, remaining):
        if not any(remaining):
            words.append(tuple(prefix))
            return
        for i in range(n):
            if remaining[i]:
                rem = list(remaining)
                rem[i] -= 1
                gen(prefix + [i], rem)

    gen([], list(beta))

    def pairing(word, i):
        # weight of the vector f_word v, paired with alpha_i^vee
        return lam[i] - sum(cartan[i][j] for j in word)

    memo = {}

    def apply_e(i, word):
        key = (i, word)
        if key not in memo:
            out = {}
            for k, j in enumerate(word):
                if j == i:
                    coef = pairing(word[k + 1:], i)
                    if coef:
                        w = word[:k] + word[k + 1:]
                        out[w] = out.get(w, 0) + coef
            memo[key] = out
        return memo[key]

    def form(w1, w2):
        vec = {w2: Fraction(1)}
        for i in w1:
            nxt = {}
            for w, c in vec.items():
                for w3, c3 in apply_e(i, w).items():
                    nxt[w3] = nxt.get(w3, 0) + c * c3
            vec = {w: c for w, c in nxt.items() if c}
            if not vec:
                return Fraction(0)
        return vec.get((), Fraction(0))

    gram = [[form(a, b) for b in words] for a in words]
    return words, gram
