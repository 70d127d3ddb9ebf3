"""Exact linear algebra used as independent ground truth.

The tangent space of X_L at a point P is the kernel of the Jacobian of
the binomial generators at P, so its dimension is #L - rank. Nothing here
consults the combinatorial cotangent machinery.
"""
from fractions import Fraction
from math import lcm

from hibi import kernels
from hibi.errors import NotOnVariety
from hibi.toric import VarietyPoint, binomial_relations, distinguished_point, on_variety, semigroup_generators


class RationalMatrix:
    """Immutable matrix of Fractions."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def integer_rows(self):
        """Rows scaled by the lcm of their denominators (rank-preserving)."""
        out = []
        for r in self.rows:
            scale = lcm(*(v.denominator for v in r)) if r else 1
            out.append([int(v * scale) for v in r])
        return out

    def rank(self):
        return rank(self)

    def kernel_basis(self):
        return kernel_basis(self)


def rank(m):
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return kernels.int_rank(m.integer_rows())


def _rref(m):
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(m):
    """Basis of the right kernel, one vector per free column (Gauss-Jordan)."""
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def jacobian_at(l, p):
    """Partial derivatives of every binomial generator, evaluated at ``p``."""
    if not isinstance(p, VarietyPoint):
        p = VarietyPoint(p)
    if not on_variety(l, p):
        raise NotOnVariety("Jacobian requested at a point off the variety")
    n = len(l)
    x = p.coords
    rows = []
    for rel in binomial_relations(l):
        a, b = rel.skew
        j, m = rel.main
        row = [Fraction(0)] * n
        row[a] += x[b]
        row[b] += x[a]
        row[j] -= x[m]
        row[m] -= x[j]
        rows.append(row)
    return RationalMatrix(rows, ncols=n)


def tangent_dim_at(l, p):
    return len(l) - rank(jacobian_at(l, p))


def tangent_dim_oracle(l, subset):
    return tangent_dim_at(l, distinguished_point(l, subset))


def semigroup_rank_oracle(l):
    return rank(RationalMatrix(semigroup_generators(l)))
