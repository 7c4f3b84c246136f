"""Sparse exact-rational polynomials in the entries of an array."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .monomials import Monomial, Shape


class ShapeMismatch(ValueError):
    pass


def _add_exps(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Polynomial over the rationals keyed by exponent tuples.

    Instances are treated as immutable: every operation returns a new
    polynomial and zero coefficients are never stored.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: Shape, terms: Mapping | Iterable = ()):
        self.shape = shape
        ncells = shape.total_cells
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            exps = key.exponents if isinstance(key, Monomial) else tuple(key)
            if len(exps) != ncells:
                raise ShapeMismatch(f"exponent tuple {exps} does not fit shape {shape}")
            c = Fraction(c)
            if c:
                c = clean.get(exps, 0) + c
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, shape: Shape) -> "Polynomial":
        return cls(shape)

    @classmethod
    def constant(cls, shape: Shape, c=1) -> "Polynomial":
        return cls(shape, {(0,) * shape.total_cells: c})

    @classmethod
    def variable(cls, shape: Shape, index) -> "Polynomial":
        """The indeterminate at the 1-based multi-index ``index``."""
        exps = [0] * shape.total_cells
        exps[shape.cell_position[tuple(index)]] = 1
        return cls(shape, {tuple(exps): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(m.shape, {m.exponents: c})

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, m) -> Fraction:
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return self.terms.get(exps, Fraction(0))

    def items(self):
        """``(Monomial, coefficient)`` pairs in ascending canonical order."""
        for exps in sorted(self.terms):
            yield Monomial(self.shape, exps), self.terms[exps]

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return Monomial(self.shape, max(self.terms))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.shape == other.shape and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.shape, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.shape, frozenset(self.terms.items())))

    def __repr__(self):
        from .formats import polynomial_text

        return f"Polynomial({self.shape}, {polynomial_text(self)})"

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.shape != self.shape:
                raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.shape, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return _raw(self.shape, terms)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.shape, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.shape)
        return _raw(self.shape, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return _raw(self.shape, terms)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.shape)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # normalisation, evaluation, group action

    def normalize_primitive(self) -> "Polynomial":
        """Scale to coprime integer coefficients with a positive leading coefficient.

        The leading monomial is the canonically largest one.
        """
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        den = lcm(*(c.denominator for c in self.terms.values()))
        ints = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in ints:
            g = gcd(g, v)
        factor = Fraction(den, g)
        if self.terms[max(self.terms)] < 0:
            factor = -factor
        return self.scale(factor)

    def evaluate(self, values) -> Fraction:
        """Value at an array given flat (lex cell order) or as ``{multi_index: value}``."""
        if isinstance(values, Mapping):
            flat = [Fraction(0)] * self.shape.total_cells
            for idx, v in values.items():
                flat[self.shape.cell_position[tuple(idx)]] = Fraction(v)
        else:
            flat = [Fraction(v) for v in values]
            if len(flat) != self.shape.total_cells:
                raise ShapeMismatch("wrong number of values for shape")
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(flat, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def substitute_direction(self, direction: int, matrix) -> "Polynomial":
        """Act by an ``n_l x n_l`` matrix along ``direction`` (1-based).

        Every indeterminate ``x_{..j..}`` becomes ``sum_i m[i][j] x_{..i..}``
        with ``i, j`` the indices in that direction.
        """
        from .linalg import RationalMatrix

        shape = self.shape
        if not 1 <= direction <= shape.k:
            raise ValueError(f"direction must be in 1..{shape.k}")
        ell = direction - 1
        n = shape.dims[ell]
        rows = matrix.rows if isinstance(matrix, RationalMatrix) else matrix
        M = [[Fraction(x) for x in r] for r in rows]
        if len(M) != n or any(len(r) != n for r in M):
            raise ValueError(f"direction {direction} needs a {n}x{n} matrix")

        ncells = shape.total_cells
        unit = [tuple(int(q == p) for q in range(ncells)) for p in range(ncells)]
        linear = []
        for pos, idx in enumerate(shape.cells):
            j = idx[ell] - 1
            form = {}
            for i in range(n):
                if M[i][j]:
                    target = shape.shifted(pos, ell, i - j)
                    form[unit[target]] = M[i][j]
            linear.append(form)

        powers = {}

        def power(pos, e):
            key = (pos, e)
            if key not in powers:
                if e == 1:
                    powers[key] = linear[pos]
                else:
                    powers[key] = _mul_terms(power(pos, e - 1), linear[pos])
            return powers[key]

        result = {}
        zero = (0,) * ncells
        for exps, c in self.terms.items():
            acc = {zero: c}
            for pos, e in enumerate(exps):
                if e:
                    acc = _mul_terms(acc, power(pos, e))
                    if not acc:
                        break
            for e2, c2 in acc.items():
                s = result.get(e2, 0) + c2
                if s:
                    result[e2] = s
                else:
                    del result[e2]
        return _raw(shape, result)


def _mul_terms(a: dict, b: dict) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = _add_exps(e1, e2)
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _raw(shape: Shape, terms: dict) -> Polynomial:
    # trusted constructor: terms already clean
    p = Polynomial.__new__(Polynomial)
    p.shape = shape
    p.terms = terms
    return p


def cayley_hyperdeterminant() -> Polynomial:
    """Cayley's hyperdeterminant of a 2x2x2 array, built from its defining expression."""
    shape = Shape((2, 2, 2))

    def x(ijk):
        return Polynomial.variable(shape, tuple(int(c) + 1 for c in ijk))

    def prod(*labels):
        out = Polynomial.constant(shape)
        for lab in labels:
            out = out * x(lab)
        return out

    squares = sum(
        (prod(a, a, b, b) for a, b in [("000", "111"), ("001", "110"), ("010", "101"), ("011", "100")]),
        Polynomial.zero(shape),
    )
    faces = sum(
        (
            prod(*q)
            for q in [
                ("000", "001", "110", "111"),
                ("000", "010", "101", "111"),
                ("000", "011", "100", "111"),
                ("001", "010", "101", "110"),
                ("001", "011", "100", "110"),
                ("010", "011", "100", "101"),
            ]
        ),
        Polynomial.zero(shape),
    )
    tetra = prod("000", "011", "101", "110") + prod("001", "010", "100", "111")
    return squares - 2 * faces + 4 * tetra


def determinant(n: int) -> Polynomial:
    """The ``n x n`` determinant as a polynomial on shape ``(n, n)``, via permutations."""
    import itertools

    shape = Shape((n, n))
    out = {}
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        exps = [0] * (n * n)
        for i, j in enumerate(perm):
            exps[i * n + j] = 1
        out[tuple(exps)] = (-1) ** inversions
    return Polynomial(shape, out)
