"""Dense exact-rational linear algebra and a small subspace calculus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


class RationalMatrix:
    """Dense matrix of :class:`fractions.Fraction` entries, stored row-major."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "RationalMatrix":
        cols = [list(c) for c in columns]
        if any(len(c) != nrows for c in cols):
            raise ValueError("column length does not match nrows")
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def copy(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.ncols)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    T = property(transpose)

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return RationalMatrix(
                [[_dot(r, c) for c in cols] for r in self.rows], other.ncols
            )
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return [_dot(r, vec) for r in self.rows]

    def __neg__(self):
        return RationalMatrix([[-x for x in r] for r in self.rows], self.ncols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_int_rows(self) -> list:
        out = []
        for r in self.rows:
            if any(x.denominator != 1 for x in r):
                raise ValueError("matrix has non-integer entries")
            out.append([int(x) for x in r])
        return out

    def rref(self, method: str = "gauss"):
        return rref(self, method)

    def rank(self) -> int:
        return rref(self)[1]

    def nullspace(self) -> list:
        return nullspace_basis(self)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b) if x and y), Fraction(0))


def hstack(mats: Sequence[RationalMatrix]) -> RationalMatrix:
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("hstack needs equal row counts")
    rows = [list(itertools.chain.from_iterable(m.rows[i] for m in mats)) for i in range(nrows)]
    return RationalMatrix(rows, sum(m.ncols for m in mats))


def vstack(mats: Sequence[RationalMatrix], ncols: int | None = None) -> RationalMatrix:
    if ncols is None:
        ncols = mats[0].ncols if mats else 0
    if any(m.ncols != ncols for m in mats):
        raise ValueError("vstack needs equal column counts")
    return RationalMatrix([r for m in mats for r in m.rows], ncols)


def rref(A: RationalMatrix, method: str = "gauss"):
    """Reduced row echelon form.

    Returns ``(R, rank, pivot_columns)`` where ``R`` has the same shape as
    ``A`` with zero rows last.  ``method`` is ``"gauss"`` (rational
    Gauss-Jordan, smallest nonzero pivot) or ``"bareiss"`` (fraction-free
    integer elimination); both produce the same canonical ``R``.
    """
    if method == "gauss":
        rows, pivots = _rref_gauss(A)
    elif method == "bareiss":
        rows, pivots = _rref_bareiss(A)
    else:
        raise ValueError(f"unknown elimination method {method!r}")
    rows += [[Fraction(0)] * A.ncols for _ in range(A.nrows - len(rows))]
    return RationalMatrix(rows, A.ncols), len(pivots), pivots


def _rref_gauss(A: RationalMatrix):
    rows = [list(r) for r in A.rows]
    m, n = A.nrows, A.ncols
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        best = None
        for i in range(r, m):
            v = rows[i][c]
            if v and (best is None or abs(v) < abs(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        support = [(j, prow[j]) for j in range(c, n) if prow[j]]
        for i in range(m):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j, v in support:
                    row[j] -= f * v
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rref_bareiss(A: RationalMatrix):
    # clear denominators row by row; row scaling does not change the RREF
    rows = []
    for r in A.rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * den) for x in r])
    m, n = A.nrows, A.ncols
    pivots = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        best = None
        for i in range(r, m):
            v = rows[i][c]
            if v and (best is None or abs(v) < abs(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        p = rows[r][c]
        prow = rows[r]
        for i in range(m):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            # fraction-free Gauss-Jordan step; the division by the previous
            # pivot is exact
            rows[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
        prev = p
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        p = rows[i][c]
        out.append([Fraction(x, p) for x in rows[i]])
    return out, pivots


def rank(A: RationalMatrix) -> int:
    return rref(A)[1]


def nullspace_basis(A: RationalMatrix, method: str = "gauss") -> list:
    """Kernel basis, one vector per free column with that free variable set to 1."""
    R, rk, pivots = rref(A, method)
    pivot_set = set(pivots)
    basis = []
    for free in range(A.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * A.ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R.rows[i][free]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace given by independent spanning columns.

    The basis is kept in reduced column form: the transposed nonzero rows of
    the RREF of the spanning vectors, so equal subspaces have equal bases.
    """

    ambient_dim: int
    basis: RationalMatrix

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        if not vecs:
            return cls(ambient_dim, RationalMatrix([[] for _ in range(ambient_dim)], 0))
        R, rk, _ = rref(RationalMatrix(vecs, ambient_dim))
        return cls(ambient_dim, RationalMatrix.from_columns(R.rows[:rk], ambient_dim))

    @classmethod
    def column_space(cls, A: RationalMatrix) -> "Subspace":
        return cls.span(A.nrows, A.columns())

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def vectors(self) -> list:
        return self.basis.columns()

    def contains(self, other: "Subspace") -> bool:
        return subspace_sum([self, other]).dim == self.dim


def _check_ambient(spaces):
    if not spaces:
        raise ValueError("need at least one subspace")
    n = spaces[0].ambient_dim
    if any(s.ambient_dim != n for s in spaces):
        raise ValueError("subspaces live in different ambient spaces")
    return n


def subspace_sum(spaces: Sequence[Subspace]) -> Subspace:
    n = _check_ambient(spaces)
    return Subspace.span(n, [v for s in spaces for v in s.vectors()])


def subspace_intersection(spaces: Sequence[Subspace]) -> Subspace:
    """Intersection via kernels: ``U cap V = {A x : A x = B y}``."""
    n = _check_ambient(spaces)
    current = spaces[0]
    for other in spaces[1:]:
        if current.dim == 0 or other.dim == 0:
            return Subspace.span(n, [])
        stacked = hstack([current.basis, -other.basis])
        kernel = nullspace_basis(stacked)
        a = current.dim
        current = Subspace.span(n, [current.basis @ v[:a] for v in kernel])
    return current


def subspace_sum_dim(spaces: Sequence[Subspace]) -> int:
    return subspace_sum(spaces).dim


def subspace_intersection_dim(spaces: Sequence[Subspace]) -> int:
    return subspace_intersection(spaces).dim


@dataclass(frozen=True)
class InclusionExclusion:
    lhs: int
    rhs: int
    intersection_dims: dict

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs


MAX_IE_SUBSPACES = 6


def inclusion_exclusion_check(spaces: Sequence[Subspace]) -> InclusionExclusion:
    """Compare ``dim(U_1 + ... + U_n)`` with the alternating sum of intersection dims.

    The left side never exceeds the right; equality can fail (three lines in
    a plane give 2 < 3).
    """
    if len(spaces) > MAX_IE_SUBSPACES:
        raise ValueError(f"at most {MAX_IE_SUBSPACES} subspaces supported")
    _check_ambient(spaces)
    lhs = subspace_sum_dim(spaces)
    rhs = 0
    dims = {}
    for r in range(1, len(spaces) + 1):
        for subset in itertools.combinations(range(len(spaces)), r):
            d = subspace_intersection_dim([spaces[i] for i in subset])
            dims[subset] = d
            rhs += (-1) ** (r + 1) * d
    return InclusionExclusion(lhs, rhs, dims)
