"""Action of the Lie algebra sl(n_1) + ... + sl(n_k) on polynomials.

Generators act on indeterminates through the natural representation and on
monomials by the derivation rule, so ``D(x^e) = e x^(e-1) D(x)``.  Directions
and root indices are 1-based, as in ``E^(l)_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import RationalMatrix, vstack
from .monomials import (
    Monomial,
    MonomialBasis,
    Shape,
    enumerate_eps_arrays,
    enumerate_weight_space,
    weight_of_exponents,
)
from .polynomial import Polynomial, _raw

KINDS = ("H", "E", "F")


@dataclass(frozen=True)
class Generator:
    kind: str
    direction: int
    index: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"generator kind must be one of {KINDS}, got {self.kind!r}")

    def check(self, shape: Shape):
        if not 1 <= self.direction <= shape.k:
            raise ValueError(f"{self} has no direction {self.direction} in shape {shape}")
        if not 1 <= self.index <= shape.dims[self.direction - 1] - 1:
            raise ValueError(f"{self} has no root index {self.index} in shape {shape}")

    def label(self, shape: Shape | None = None) -> str:
        if shape is not None and shape.dims[self.direction - 1] == 2:
            return f"{self.kind}{self.direction}"
        return f"{self.kind}({self.direction})_{self.index}"

    def __str__(self):
        return self.label()


def generators(shape: Shape, kinds: str = "HEF") -> list:
    """All generators of the given kinds, ordered by kind, direction, index."""
    return [
        Generator(kind, ell, i)
        for kind in kinds
        for ell in range(1, shape.k + 1)
        for i in range(1, shape.dims[ell - 1])
    ]


def raised_weight(shape: Shape, direction: int, index: int, sign: int = 1) -> tuple:
    """Weight shift of ``E^(l)_i`` (``sign=-1`` for ``F``): a Killing-Cartan row in direction ``l``."""
    out = []
    for ell, n in enumerate(shape.dims, start=1):
        comp = [0] * (n - 1)
        if ell == direction:
            for j in range(n - 1):
                if j + 1 == index:
                    comp[j] = 2 * sign
                elif abs(j + 1 - index) == 1:
                    comp[j] = -sign
        out.append(tuple(comp))
    return tuple(out)


def _apply(g: Generator, shape: Shape, exps: tuple) -> dict:
    """Generator applied to one monomial, as ``{exponents: integer coefficient}``."""
    ell = g.direction - 1
    i = g.index
    if g.kind == "H":
        w = weight_of_exponents(shape, exps)[ell][i - 1]
        return {exps: w} if w else {}
    if g.kind == "E":
        src, delta = i + 1, -1  # E_i = U_{i,i+1} sends index i+1 to i
    else:
        src, delta = i, +1  # F_i = U_{i+1,i} sends index i to i+1
    out = {}
    for pos in shape.slices[ell][src - 1]:
        e = exps[pos]
        if not e:
            continue
        dest = shape.shifted(pos, ell, delta)
        new = list(exps)
        new[pos] -= 1
        new[dest] += 1
        new = tuple(new)
        out[new] = out.get(new, 0) + e
    return out


def apply_generator(g: Generator, m: Monomial) -> Polynomial:
    g.check(m.shape)
    return Polynomial(m.shape, _apply(g, m.shape, m.exponents))


def apply_generator_poly(g: Generator, p: Polynomial) -> Polynomial:
    g.check(p.shape)
    terms = {}
    for exps, c in p.terms.items():
        for new, a in _apply(g, p.shape, exps).items():
            s = terms.get(new, 0) + c * a
            if s:
                terms[new] = s
            else:
                del terms[new]
    return _raw(p.shape, terms)


@dataclass(frozen=True)
class WeightMapMatrix:
    """Matrix of a generator between two monomial bases (column j = image of source j)."""

    source: MonomialBasis
    target: MonomialBasis
    matrix: RationalMatrix
    generator: Generator


def weight_map_matrix(g: Generator, source: MonomialBasis, target: MonomialBasis) -> WeightMapMatrix:
    shape = source.shape
    g.check(shape)
    index = target.index
    rows = [[0] * len(source) for _ in range(len(target))]
    for j, m in enumerate(source):
        for new, a in _apply(g, shape, m.exponents).items():
            try:
                rows[index[new]][j] += a
            except KeyError:
                raise ValueError(
                    f"{g} maps {m} outside the target weight space {target.weight}"
                ) from None
    return WeightMapMatrix(source, target, RationalMatrix(rows, len(source)), g)


@dataclass(frozen=True)
class RaisingMatrix:
    """The raising map on the zero weight space, one block per ``E^(l)_i``."""

    source: MonomialBasis
    blocks: tuple

    @property
    def matrix(self) -> RationalMatrix:
        return vstack([b.matrix for b in self.blocks], len(self.source))

    @property
    def row_labels(self) -> list:
        return [lab for b in self.blocks for lab in b.target.labels()]

    @property
    def shape(self) -> tuple:
        return (sum(len(b.target) for b in self.blocks), len(self.source))


def raising_matrix(shape: Shape, degree: int, source: MonomialBasis | None = None) -> RaisingMatrix:
    """Blocks for every simple raising operator, by direction then root index."""
    if source is None:
        source = enumerate_eps_arrays(shape, degree)
    blocks = []
    for g in generators(shape, "E"):
        w = raised_weight(shape, g.direction, g.index)
        target = enumerate_weight_space(shape, degree, w)
        blocks.append(weight_map_matrix(g, source, target))
    return RaisingMatrix(source, tuple(blocks))


def lowering_matrix(shape: Shape, degree: int, from_weight, direction: int) -> WeightMapMatrix:
    """Matrix of ``F_l`` from ``W(d; from_weight)`` to the weight lowered by 2 in slot ``l``.

    Defined on the cube of weights with entries in {0, 2} for arrays whose
    dimensions are all 2.
    """
    if any(n != 2 for n in shape.dims):
        raise ValueError("lowering maps on the weight cube need every dimension equal to 2")
    w = tuple(int(a[0]) if isinstance(a, (tuple, list)) else int(a) for a in from_weight)
    if len(w) != shape.k or any(a not in (0, 2) for a in w):
        raise ValueError(f"weight {from_weight} is not a vertex of the {{0,2}} cube")
    if not 1 <= direction <= shape.k or w[direction - 1] != 2:
        raise ValueError(f"cannot lower weight {w} by 2 in direction {direction}")
    lowered = list(w)
    lowered[direction - 1] = 0
    src = enumerate_weight_space(shape, degree, tuple((a,) for a in w))
    dst = enumerate_weight_space(shape, degree, tuple((a,) for a in lowered))
    return weight_map_matrix(Generator("F", direction), src, dst)


def bracket_on(g1: Generator, g2: Generator, p: Polynomial) -> Polynomial:
    """``(g1 g2 - g2 g1) . p``."""
    return apply_generator_poly(g1, apply_generator_poly(g2, p)) - apply_generator_poly(
        g2, apply_generator_poly(g1, p)
    )


def kernel_vectors_to_polynomials(basis: MonomialBasis, vectors) -> list:
    out = []
    for v in vectors:
        out.append(
            Polynomial(basis.shape, {m.exponents: Fraction(c) for m, c in zip(basis, v) if c})
        )
    return out
