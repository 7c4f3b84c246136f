"""Invariant polynomials as the kernel of the raising map, plus invariance checks."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .formats import matrix_to_dict, polynomial_to_dict
from .lie import (
    Generator,
    apply_generator_poly,
    generators,
    kernel_vectors_to_polynomials,
    lowering_matrix,
    raising_matrix,
)
from .linalg import RationalMatrix, Subspace, inclusion_exclusion_check, nullspace_basis
from .monomials import Shape, count_weight_space, enumerate_eps_arrays
from .polynomial import Polynomial

DEFAULT_COLUMN_CAP = 20000


class ColumnCapExceeded(RuntimeError):
    pass


def column_cap() -> int:
    env = os.environ.get("HYPERINV_COLUMN_CAP")
    return int(env) if env else DEFAULT_COLUMN_CAP


@dataclass
class InvariantReport:
    shape: tuple
    degree: int
    zero_weight_dim: int
    matrix_dims: tuple
    rank: int
    kernel_dim: int
    invariants: list
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = False, include_matrix: RationalMatrix | None = None) -> dict:
        out = {
            "shape": list(self.shape),
            "degree": self.degree,
            "zero_weight_dim": self.zero_weight_dim,
            "matrix_dims": list(self.matrix_dims),
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "invariants": [polynomial_to_dict(p) for p in self.invariants],
        }
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        if include_matrix is not None:
            out["matrix"] = matrix_to_dict(include_matrix)
        return out


def invariant_basis(shape: Shape, degree: int, cap: int | None = None, method: str = "gauss") -> InvariantReport:
    """Basis of the degree-``degree`` invariants of ``shape``.

    Kernel vectors of the stacked raising matrix are read as polynomials over
    the zero-weight monomials, normalised to primitive integer form and sorted
    by leading monomial.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    cap = column_cap() if cap is None else cap
    timings = {}
    t0 = time.perf_counter()
    ncols = count_weight_space(shape, degree, shape.zero_weight())
    if ncols > cap:
        raise ColumnCapExceeded(
            f"zero weight space of {shape} in degree {degree} has {ncols} monomials (cap {cap})"
        )
    source = enumerate_eps_arrays(shape, degree)
    timings["basis"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    raising = raising_matrix(shape, degree, source)
    A = raising.matrix
    timings["matrix"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    kernel = nullspace_basis(A, method)
    timings["kernel"] = time.perf_counter() - t0

    polys = [p.normalize_primitive() for p in kernel_vectors_to_polynomials(source, kernel)]
    polys.sort(key=lambda p: max(p.terms))
    return InvariantReport(
        shape=shape.dims,
        degree=degree,
        zero_weight_dim=len(source),
        matrix_dims=A.shape,
        rank=len(source) - len(kernel),
        kernel_dim=len(kernel),
        invariants=polys,
        timings=timings,
    )


@dataclass
class Verification:
    ok: bool
    witness: str | None = None
    residual: Polynomial | None = None
    failures: list = field(default_factory=list)
    checked: int = 0

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "witness": self.witness,
            "residual": polynomial_to_dict(self.residual) if self.residual is not None else None,
            "failures": list(self.failures),
            "checked": self.checked,
        }


def verify_invariance_lie(p: Polynomial) -> Verification:
    """True iff every ``E``, ``F`` and ``H`` generator annihilates ``p``.

    The witness is the first failing generator, checked in the order E, F, H.
    """
    result = Verification(True)
    for g in generators(p.shape, "EFH"):
        r = apply_generator_poly(g, p)
        result.checked += 1
        if r:
            name = g.label(p.shape)
            if result.ok:
                result.ok, result.witness, result.residual = False, name, r
            result.failures.append(name)
    return result


FIXED_PARAMETERS = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2))


def transvection(n: int, i: int, j: int, t) -> list:
    """``I + t U_ij`` (1-based, ``i != j``)."""
    M = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    M[i - 1][j - 1] += Fraction(t)
    return M


def torus(n: int, i: int, t) -> list:
    """Diagonal with ``t`` at position ``i`` and ``1/t`` at ``i+1`` (1-based)."""
    t = Fraction(t)
    M = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    M[i - 1][i - 1] = t
    M[i][i] = 1 / t
    return M


def _random_parameter(rng: random.Random) -> Fraction:
    nonzero = [v for v in range(-9, 10) if v]
    return Fraction(rng.choice(nonzero), rng.choice(nonzero))


def group_elements(shape: Shape, trials: int = 20, seed: int = 0):
    """``(description, direction, matrix)`` for the fixed and random test elements."""
    out = []
    for ell, n in enumerate(shape.dims, start=1):
        for t in FIXED_PARAMETERS:
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j:
                        out.append((f"dir {ell}: I + {t} U{i}{j}", ell, transvection(n, i, j, t)))
            for i in range(1, n):
                out.append((f"dir {ell}: torus_{i}({t})", ell, torus(n, i, t)))
    rng = random.Random(seed)
    movable = [ell for ell, n in enumerate(shape.dims, start=1) if n > 1]
    for _ in range(trials if movable else 0):
        ell = rng.choice(movable)
        n = shape.dims[ell - 1]
        t = _random_parameter(rng)
        if rng.random() < 0.5:
            i, j = rng.sample(range(1, n + 1), 2)
            out.append((f"dir {ell}: I + {t} U{i}{j}", ell, transvection(n, i, j, t)))
        else:
            i = rng.randint(1, n - 1)
            out.append((f"dir {ell}: torus_{i}({t})", ell, torus(n, i, t)))
    return out


def verify_invariance_group(p: Polynomial, trials: int = 20, seed: int = 0) -> Verification:
    """True iff ``p`` is fixed by every test element of SL(n_1) x ... x SL(n_k).

    Test elements are the transvections ``I + t U_ij`` and torus elements
    for ``t`` in {1, 2, -3, 1/2} in every direction, then ``trials`` seeded
    random ones with parameters ``a/b``, ``a, b`` in [-9, 9] without 0.
    """
    result = Verification(True)
    for name, ell, M in group_elements(p.shape, trials, seed):
        diff = p.substitute_direction(ell, M) - p
        result.checked += 1
        if diff:
            if result.ok:
                result.ok, result.witness, result.residual = False, name, diff
            result.failures.append(name)
    return result


# the 2x2x2 weight cube: vertices are weights with entries in {0, 2}

def cube_lowering_maps(degree: int, k: int = 3) -> dict:
    """Every edge map ``F_l: W(v) -> W(v - 2 e_l)`` keyed by ``(v, l)``."""
    import itertools

    shape = Shape((2,) * k)
    maps = {}
    for v in itertools.product((0, 2), repeat=k):
        for ell in range(1, k + 1):
            if v[ell - 1] == 2:
                maps[(v, ell)] = lowering_matrix(shape, degree, v, ell)
    return maps


def _lower(v, ell):
    w = list(v)
    w[ell - 1] = 0
    return tuple(w)


def cube_commutes(degree: int, k: int = 3, maps: dict | None = None) -> bool:
    """``F_a F_b = F_b F_a`` on every face of the cube."""
    maps = maps or cube_lowering_maps(degree, k)
    for (v, a) in maps:
        for b in range(a + 1, k + 1):
            if v[b - 1] != 2:
                continue
            ab = maps[(_lower(v, a), b)].matrix @ maps[(v, a)].matrix
            ba = maps[(_lower(v, b), a)].matrix @ maps[(v, b)].matrix
            if ab != ba:
                return False
    return True


def cube_image_family(degree: int, k: int = 3) -> list:
    """Images of ``F_l: W(2 e_l) -> W(0)`` as subspaces of the zero weight space."""
    out = []
    for ell in range(1, k + 1):
        v = tuple(2 if i == ell - 1 else 0 for i in range(k))
        m = lowering_matrix(Shape((2,) * k), degree, v, ell)
        out.append(Subspace.column_space(m.matrix))
    return out


def cube_inclusion_exclusion(degree: int):
    """Inclusion-exclusion on the three image subspaces inside ``W(d;0,0,0)``."""
    return inclusion_exclusion_check(cube_image_family(degree))
