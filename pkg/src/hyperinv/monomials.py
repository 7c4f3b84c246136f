"""Array shapes, exponent arrays (monomials), weights and their enumeration.

Cells of an ``n_1 x ... x n_k`` array are stored flat in lexicographic order of
their multi-indices.  Multi-indices are 1-based internally; the ``2x2x2`` case
is rendered with 0-based subscripts (``x000`` .. ``x111``) by the formatting
layer.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

Weight = tuple  # tuple of per-direction tuples of ints


@dataclass(frozen=True)
class Shape:
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not dims:
            raise ValueError("a shape needs at least one direction")
        if any(n < 1 for n in dims):
            raise ValueError(f"array dimensions must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse ``"2,2,2"`` (also accepts ``x`` as a separator)."""
        parts = text.replace("x", ",").replace("×", ",").split(",")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad shape {text!r}: {exc}") from None

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def total_cells(self) -> int:
        return math.prod(self.dims)

    @property
    def lcm_degree(self) -> int:
        return math.lcm(*self.dims)

    @property
    def is_cube222(self) -> bool:
        return self.dims == (2, 2, 2)

    @cached_property
    def cells(self) -> tuple:
        """Multi-indices (1-based) in lexicographic order."""
        return tuple(itertools.product(*(range(1, n + 1) for n in self.dims)))

    @cached_property
    def cell_position(self) -> dict:
        return {idx: pos for pos, idx in enumerate(self.cells)}

    @cached_property
    def slices(self) -> tuple:
        """``slices[l][i]`` lists the flat positions of cells with index ``i+1`` in direction ``l``."""
        out = []
        for ell, n in enumerate(self.dims):
            groups = [[] for _ in range(n)]
            for pos, idx in enumerate(self.cells):
                groups[idx[ell] - 1].append(pos)
            out.append(tuple(tuple(g) for g in groups))
        return tuple(out)

    def shifted(self, pos: int, direction: int, delta: int) -> int | None:
        """Flat position of the neighbour of ``pos`` with index ``direction`` moved by ``delta``."""
        idx = list(self.cells[pos])
        idx[direction] += delta
        if not 1 <= idx[direction] <= self.dims[direction]:
            return None
        return self.cell_position[tuple(idx)]

    def zero_weight(self) -> Weight:
        return tuple((0,) * (n - 1) for n in self.dims)

    def __str__(self):
        return "x".join(str(n) for n in self.dims)


@dataclass(frozen=True)
class Monomial:
    """A monomial in the array entries, identified with its exponent array.

    Ordering is lexicographic on the exponent sequence (cells in lex order),
    which is the order used for every basis and matrix in this package.
    """

    shape: Shape
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.shape.total_cells:
            raise ValueError(
                f"shape {self.shape} has {self.shape.total_cells} cells, got {len(exps)} exponents"
            )
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_cells(cls, shape: Shape, cells: dict) -> "Monomial":
        """Build from ``{multi_index: exponent}`` with 1-based multi-indices."""
        exps = [0] * shape.total_cells
        for idx, e in cells.items():
            exps[shape.cell_position[tuple(idx)]] += e
        return cls(shape, tuple(exps))

    @classmethod
    def parse(cls, shape: Shape, text: str) -> "Monomial":
        """Parse the compact digit form ``"01101001"`` or the bracket form ``"[0,1,12,...]"``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated monomial {text!r}")
            body = text[1:-1].strip()
            exps = tuple(int(t) for t in body.split(",")) if body else ()
        else:
            if not text.isdigit():
                raise ValueError(f"bad monomial {text!r}")
            exps = tuple(int(c) for c in text)
        return cls(shape, exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __lt__(self, other: "Monomial"):
        return self.exponents < other.exponents

    def __le__(self, other: "Monomial"):
        return self.exponents <= other.exponents

    def __gt__(self, other: "Monomial"):
        return self.exponents > other.exponents

    def __ge__(self, other: "Monomial"):
        return self.exponents >= other.exponents

    def text(self) -> str:
        return exponents_text(self.exponents)

    def __str__(self):
        return self.text()


def exponents_text(exps: Sequence[int]) -> str:
    if all(e <= 9 for e in exps):
        return "".join(str(e) for e in exps)
    return "[" + ",".join(str(e) for e in exps) + "]"


def slice_sums(shape: Shape, exps: Sequence[int]) -> tuple:
    """Per direction, the entry sums of the parallel slices."""
    return tuple(
        tuple(sum(exps[p] for p in group) for group in groups) for groups in shape.slices
    )


def weight_of(m: Monomial) -> Weight:
    """Eigenvalues of every Cartan generator ``H^(l)_i`` on ``m``.

    Component ``(l, i)`` is the sum over slice ``i`` minus the sum over slice
    ``i+1`` in direction ``l``.
    """
    return weight_of_exponents(m.shape, m.exponents)


def weight_of_exponents(shape: Shape, exps: Sequence[int]) -> Weight:
    sums = slice_sums(shape, exps)
    return tuple(tuple(s[i] - s[i + 1] for i in range(len(s) - 1)) for s in sums)


def check_weight(shape: Shape, weight) -> Weight:
    weight = tuple(tuple(int(a) for a in comp) for comp in weight)
    if len(weight) != shape.k or any(
        len(comp) != n - 1 for comp, n in zip(weight, shape.dims)
    ):
        raise ValueError(
            f"weight {weight} does not fit shape {shape}: "
            f"expected component lengths {[n - 1 for n in shape.dims]}"
        )
    return weight


def parse_weight(shape: Shape, text: str) -> Weight:
    """Parse ``"0;0,0"`` (groups per direction) or a flat ``"0,0,0"`` list.

    A flat list is split into consecutive groups of length ``n_l - 1``.
    """
    text = text.strip()
    try:
        if ";" in text:
            groups = [g.strip() for g in text.split(";")]
            weight = [tuple(int(a) for a in g.split(",")) if g else () for g in groups]
        else:
            flat = [int(a) for a in text.split(",")] if text else []
            need = [n - 1 for n in shape.dims]
            if len(flat) != sum(need):
                raise ValueError(f"expected {sum(need)} weight entries, got {len(flat)}")
            weight, start = [], 0
            for m in need:
                weight.append(tuple(flat[start:start + m]))
                start += m
    except ValueError as exc:
        raise ValueError(f"bad weight {text!r}: {exc}") from None
    return check_weight(shape, weight)


def slice_targets(shape: Shape, degree: int, weight) -> tuple | None:
    """Slice sums forced by ``degree`` and ``weight``; ``None`` when infeasible.

    In direction ``l`` the sums ``s_1..s_n`` satisfy ``s_i - s_{i+1} = a_i`` and
    ``sum(s) = degree``, which determines them uniquely.
    """
    weight = check_weight(shape, weight)
    targets = []
    for n, comp in zip(shape.dims, weight):
        # s_i = s_n + offset_i, offset_i = a_i + ... + a_{n-1}
        offsets = [sum(comp[i:]) for i in range(n)]
        rest = degree - sum(offsets)
        if rest % n:
            return None
        last = rest // n
        sums = tuple(last + o for o in offsets)
        if any(s < 0 for s in sums):
            return None
        targets.append(sums)
    return tuple(targets)


class _SlicePlan:
    """Per-cell bookkeeping shared by the enumerator and the counter."""

    def __init__(self, shape: Shape):
        self.shape = shape
        ncells = shape.total_cells
        # slice_of[pos][l] = slice index of cell pos in direction l
        self.slice_of = [tuple(idx[l] - 1 for l in range(shape.k)) for idx in shape.cells]
        last_pos = {}
        for l, groups in enumerate(shape.slices):
            for i, group in enumerate(groups):
                last_pos[(l, i)] = group[-1]
        self.closes = [[] for _ in range(ncells)]
        for (l, i), pos in last_pos.items():
            self.closes[pos].append((l, i))


@lru_cache(maxsize=None)
def _plan(shape: Shape) -> _SlicePlan:
    return _SlicePlan(shape)


def iter_weight_space(shape: Shape, degree: int, weight) -> Iterator[tuple]:
    """Exponent tuples of the given degree and weight, in ascending lex order.

    Depth-first over cells in lex order.  Each cell's value is bounded by the
    remaining budget of every slice through it, and is forced when the cell
    closes a slice.
    """
    targets = slice_targets(shape, degree, weight)
    if targets is None:
        return
    plan = _plan(shape)
    k = shape.k
    ncells = shape.total_cells
    remaining = [list(t) for t in targets]
    exps = [0] * ncells
    out = []

    def dfs(pos):
        if pos == ncells:
            out.append(tuple(exps))
            return
        sl = plan.slice_of[pos]
        hi = min(remaining[l][sl[l]] for l in range(k))
        closes = plan.closes[pos]
        if closes:
            forced = {remaining[l][i] for l, i in closes}
            if len(forced) != 1:
                return
            v = forced.pop()
            if v > hi:
                return
            values = (v,)
        else:
            values = range(hi + 1)
        for v in values:
            exps[pos] = v
            for l in range(k):
                remaining[l][sl[l]] -= v
            dfs(pos + 1)
            for l in range(k):
                remaining[l][sl[l]] += v
        exps[pos] = 0

    dfs(0)
    yield from out


@dataclass(frozen=True)
class MonomialBasis:
    shape: Shape
    degree: int
    weight: Weight
    monomials: tuple

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    @cached_property
    def index(self) -> dict:
        """Map from exponent tuple to position in the basis."""
        return {m.exponents: i for i, m in enumerate(self.monomials)}

    def labels(self) -> list:
        return [m.text() for m in self.monomials]


def enumerate_weight_space(shape: Shape, degree: int, weight) -> MonomialBasis:
    weight = check_weight(shape, weight)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    monos = tuple(Monomial(shape, e) for e in iter_weight_space(shape, degree, weight))
    return MonomialBasis(shape, degree, weight, monos)


def enumerate_eps_arrays(shape: Shape, degree: int) -> MonomialBasis:
    """Equal-parallel-slice arrays summing to ``degree`` (the zero weight space)."""
    return enumerate_weight_space(shape, degree, shape.zero_weight())


def count_weight_space(shape: Shape, degree: int, weight) -> int:
    """Dimension of a weight space without listing it.

    Memoised recursion over cells with the remaining slice budgets as state,
    used where enumeration would be too slow (e.g. 2x2x2x2 in degree 16).
    """
    targets = slice_targets(shape, degree, weight)
    if targets is None:
        return 0
    plan = _plan(shape)
    k = shape.k
    ncells = shape.total_cells

    @lru_cache(maxsize=None)
    def count(pos, remaining):
        if pos == ncells:
            return 1
        sl = plan.slice_of[pos]
        hi = min(remaining[l][sl[l]] for l in range(k))
        closes = plan.closes[pos]
        if closes:
            forced = {remaining[l][i] for l, i in closes}
            if len(forced) != 1:
                return 0
            v = forced.pop()
            values = (v,) if v <= hi else ()
        else:
            values = range(hi + 1)
        total = 0
        for v in values:
            nxt = tuple(
                tuple(r - v if i == sl[l] else r for i, r in enumerate(remaining[l]))
                for l in range(k)
            )
            total += count(pos + 1, nxt)
        return total

    result = count(0, targets)
    count.cache_clear()
    return result


def count_contingency_2x2(r0: int, r1: int, c0: int, c1: int) -> int:
    """Number of non-negative integer 2x2 matrices with the given margins."""
    if min(r0, r1, c0, c1) < 0:
        raise ValueError("margins must be non-negative")
    if r0 + r1 != c0 + c1:
        raise ValueError(f"inconsistent margins: rows sum to {r0 + r1}, columns to {c0 + c1}")
    return min(r0, r1, c0, c1) + 1


def sum_min_square(k: int) -> int:
    """Closed form of ``sum_{i,j=1..k} min(i, j)**2``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return k * (k + 1) * (k * k + k + 1) // 6


def admissible_degrees(shape: Shape, max_degree: int, include_zero: bool = False) -> list:
    """Degrees up to ``max_degree`` that can carry zero-weight monomials.

    These are the multiples of ``lcm(n_1, ..., n_k)``.  Degree 0 (the constants)
    is admissible too but excluded unless ``include_zero``.
    """
    N = shape.lcm_degree
    start = 0 if include_zero else N
    return list(range(start, max_degree + 1, N))
