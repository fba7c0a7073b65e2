"""Matrix realisation of sl(n+1) with the trace form.

Elements are dicts ``label -> Fraction`` over the Chevalley basis
``H1..Hn`` (``E_ii - E_{i+1,i+1}``) and ``Eab`` (matrix units, ``a != b``).
The trace form gives ``(theta|theta) = 2``, matching the normalisation of
:mod:`rootsys`.
"""

from fractions import Fraction
from functools import lru_cache


def sparse_mul(x, y):
    out = {}
    by_row = {}
    for (r, c), v in y.items():
        by_row.setdefault(r, []).append((c, v))
    for (r, k), u in x.items():
        for c, v in by_row.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + u * v
    return {k: v for k, v in out.items() if v}


def sparse_comm(x, y):
    out = sparse_mul(x, y)
    for k, v in sparse_mul(y, x).items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def sparse_add(x, y, c=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def sparse_trace(x):
    return sum((v for (r, c), v in x.items() if r == c), Fraction(0))


class SlAlgebra:
    """Chevalley basis, bracket and trace form of ``sl(rank+1)``."""

    def __init__(self, rank):
        if rank < 1 or rank > 8:
            raise ValueError("sl(n+1) realisation supports rank 1..8")
        self.rank = rank
        self.size = rank + 1
        hs = [f"H{i}" for i in range(1, rank + 1)]
        es = [f"E{a}{b}" for a in range(1, self.size + 1) for b in range(1, self.size + 1) if a != b]
        self.basis = tuple(hs + es)

    def matrix(self, label):
        if label[0] == "H":
            i = int(label[1:])
            return {(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)}
        if label[0] == "E" and len(label) == 3:
            a, b = int(label[1]), int(label[2])
            if a != b and 1 <= a <= self.size and 1 <= b <= self.size:
                return {(a, b): Fraction(1)}
        raise ValueError(f"unknown basis element {label!r}")

    def to_matrix(self, elt):
        out = {}
        for label, c in elt.items():
            out = sparse_add(out, self.matrix(label), c)
        return out

    def from_matrix(self, m):
        """Coordinates of a traceless matrix in the Chevalley basis."""
        if sparse_trace(m):
            raise ValueError("matrix is not traceless")
        out = {}
        acc = Fraction(0)
        for i in range(1, self.size):
            acc += m.get((i, i), 0)
            if acc:
                out[f"H{i}"] = acc
        for (r, c), v in m.items():
            if r != c and v:
                out[f"E{r}{c}"] = Fraction(v)
        return out

    def bracket(self, x, y):
        return self.from_matrix(sparse_comm(self.to_matrix(x), self.to_matrix(y)))

    def form(self, x, y):
        """Trace form ``tr(xy)``."""
        return sparse_trace(sparse_mul(self.to_matrix(x), self.to_matrix(y)))

    def root_of(self, label):
        """Simple-root coordinates of the root of a basis element (zero for ``H``)."""
        coords = [0] * self.rank
        if label[0] == "H":
            return tuple(coords)
        a, b = int(label[1]), int(label[2])
        lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
        for i in range(lo - 1, hi - 1):
            coords[i] = sign
        return tuple(coords)

    def label_of_root(self, root):
        root = tuple(root)
        nz = [i for i, c in enumerate(root) if c]
        if not nz:
            raise ValueError("zero is not a root")
        lo, hi = nz[0], nz[-1]
        sign = root[lo]
        if sign not in (1, -1) or any(root[i] != sign for i in range(lo, hi + 1)) or len(nz) != hi - lo + 1:
            raise ValueError(f"{root} is not a root of A{self.rank}")
        a, b = lo + 1, hi + 2
        return f"E{a}{b}" if sign > 0 else f"E{b}{a}"

    def coroot_element(self, coroot):
        """``sum c_i alpha_i^vee`` as an element."""
        return {f"H{i + 1}": Fraction(c) for i, c in enumerate(coroot) if c}

    def cartan_part(self, elt):
        """Coefficients of ``H1..Hn`` in ``elt``."""
        return tuple(Fraction(elt.get(f"H{i}", 0)) for i in range(1, self.rank + 1))


@lru_cache(maxsize=None)
def sl(rank):
    return SlAlgebra(rank)
