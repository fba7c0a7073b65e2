"""Small exact linear algebra over the rationals.

Matrices are lists of rows, entries are ``int`` or ``Fraction``. Everything
here is dense and meant for the few-dozen-dimensional weight spaces that the
module constructions produce.
"""

from fractions import Fraction


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(a, cols=None):
    """Shape of ``a``; ``cols`` disambiguates empty matrices."""
    if not a:
        return (0, cols or 0)
    return (len(a), len(a[0]))


def matmul(a, b, inner=None, cols=None):
    """Product ``a @ b``.

    Empty operands lose their column count, so callers pass ``cols`` (number
    of columns of ``b``) when ``a`` or ``b`` may have zero rows.
    """
    if cols is None:
        cols = len(b[0]) if b else 0
    if not a:
        return []
    if not b:
        return [[Fraction(0)] * cols for _ in a]
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), Fraction(0)) for col in bt])
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[c * x for x in row] for row in a]


def transpose(a, cols=None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero(a):
    return all(not x for row in a for x in row)


def rref(a):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def nullspace(a, cols=None):
    """Basis of the right kernel ``{x : a x = 0}`` as a list of vectors."""
    if not a:
        n = cols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """Solve ``a X = b`` for a matrix ``b``; raise ``ValueError`` if inconsistent.

    ``a`` need not be square; when the solution is not unique the free
    variables are set to zero.
    """
    rows = len(a)
    ncols = len(a[0]) if a else 0
    nb = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(rows)]
    r, pivots = rref(aug)
    x = zeros(ncols, nb)
    for i, p in enumerate(pivots):
        if p >= ncols:
            raise ValueError("inconsistent linear system")
        for j in range(nb):
            x[p][j] = r[i][ncols + j]
    return x


def independent_columns(a):
    """Indices of a maximal set of linearly independent columns (greedy, left to right)."""
    if not a:
        return []
    return rref(a)[1]


def det(a):
    """Exact determinant (Bareiss for integer input, Gaussian otherwise)."""
    n = len(a)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        m = [list(row) for row in a]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k]), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    m = [[Fraction(x) for x in row] for row in a]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


class RowSpace:
    """Incrementally maintained row space with an echelon basis.

    ``add`` returns True when the vector enlarged the space.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # echelon rows, pivot entry normalised to 1
        self.pivots = []
        self.original = []  # vectors as supplied, same order as rows

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v):
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        self.rows.append([x * inv for x in w])
        self.pivots.append(p)
        self.original.append(list(v))
        return True

    def contains(self, v):
        return not any(self.reduce(v))

    def __len__(self):
        return len(self.rows)
