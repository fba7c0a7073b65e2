"""Integer lattices: unimodular gcd matrices, Hermite normal form, finite quotients."""

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from . import _exact


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    if b == 0:
        if a == 0:
            return 0, 0, 0
        return abs(a), (1 if a > 0 else -1), 0
    if a == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    sa, sb = (1 if a > 0 else -1), (1 if b > 0 else -1)
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = abs(a), abs(b)
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return r0, sa * x0, sb * y0


def gcd_unimodular(n):
    """Integer matrix ``B`` with ``|det B| = 1`` and ``B @ n = (gcd(n), 0, ..., 0)``.

    Built by folding the extended Euclidean algorithm over the coordinates:
    after step ``j`` the first row realises ``gcd(n_1..n_j)`` and rows
    ``2..j`` annihilate ``n``. A zero running gcd is handled by a row swap.
    """
    n = [int(x) for x in n]
    k = len(n)
    if k == 0 or all(x == 0 for x in n):
        raise ValueError("undefined gcd direction: zero vector")
    B = [[int(i == j) for j in range(k)] for i in range(k)]
    g = n[0]
    for j in range(1, k):
        if n[j] == 0:
            continue
        if g == 0:
            B[0], B[j] = B[j], B[0]
            g = n[j]
            continue
        d, x, y = xgcd(g, n[j])
        u, v = n[j] // d, -(g // d)
        r0, rj = B[0], B[j]
        B[0] = [x * a + y * b for a, b in zip(r0, rj)]
        B[j] = [u * a + v * b for a, b in zip(r0, rj)]
        g = d
    if g < 0:
        B[0] = [-a for a in B[0]]
    return B


def _hnf_rows(rows, ncols):
    rows = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while rows and col < ncols:
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not active:
            col += 1
            continue
        # Euclid on the column until a single row carries it.
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[i] = [a - q * b for a, b in zip(r, piv)]
        out.append(piv)
        rows = [r for r in rest if any(r)]
        col += 1
    return out


@dataclass(frozen=True)
class Lattice:
    """Subgroup of ``Z^ambient_rank`` stored by its row Hermite normal form.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``, so
    two generating sets give equal ``Lattice`` objects iff they generate the
    same subgroup.
    """

    ambient_rank: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def is_full_rank(self):
        return self.rank == self.ambient_rank

    def index(self):
        """Order of ``Z^n / L``; raises for rank-deficient lattices."""
        if not self.is_full_rank():
            raise ValueError("infinite quotient: lattice is not of full rank")
        return prod(row[i] for i, row in enumerate(self.basis))

    def reduce(self, v):
        """Canonical representative of ``v`` modulo the lattice."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            q = v[p] // row[p]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v):
        """Exact membership: ``v`` is an integer combination of the basis."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            if v[p] % row[p]:
                return False
            q = v[p] // row[p]
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def coordinates(self, v):
        """Integer coordinates of a member ``v`` in the HNF basis."""
        v = list(v)
        coords = []
        for row, p in zip(self.basis, self.pivots):
            if v[p] % row[p]:
                raise ValueError(f"{tuple(v)} is not in the lattice")
            q = v[p] // row[p]
            coords.append(q)
            v = [a - q * b for a, b in zip(v, row)]
        if any(v):
            raise ValueError("vector is not in the lattice")
        return tuple(coords)

    def to_json(self):
        return {"ambient_rank": self.ambient_rank, "basis": [list(r) for r in self.basis]}


def hnf(generators, ambient_rank=None):
    """Lattice generated by ``generators`` (all of equal length)."""
    generators = [tuple(int(x) for x in g) for g in generators]
    if ambient_rank is None:
        if not generators:
            raise ValueError("ambient_rank is required for an empty generator list")
        ambient_rank = len(generators[0])
    if any(len(g) != ambient_rank for g in generators):
        raise ValueError("generators must all have the same length")
    basis = _hnf_rows(generators, ambient_rank)
    return Lattice(ambient_rank, tuple(tuple(r) for r in basis))


def quotient_reps(lat):
    """Coset representatives of ``Z^n / lat`` inside the HNF fundamental box."""
    if not lat.is_full_rank():
        raise ValueError("infinite quotient: lattice is not of full rank")
    diag = [lat.basis[i][i] for i in range(lat.ambient_rank)]
    return [tuple(x) for x in product(*(range(d) for d in diag))]


def determinant(rows):
    return _exact.det([list(r) for r in rows])


def gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g
