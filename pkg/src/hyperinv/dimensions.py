"""Closed-form weight-space dimensions for 2x2x2 arrays and quasi-polynomial fitting."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .monomials import Shape, count_weight_space, enumerate_weight_space

CUBE = Shape((2, 2, 2))

# weight label -> weight vector on the 2x2x2 cube
CASE_WEIGHTS = {
    "000": ((0,), (0,), (0,)),
    "200": ((2,), (0,), (0,)),
    "220": ((2,), (2,), (0,)),
    "222": ((2,), (2,), (2,)),
}


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_eval(coeffs, x):
    """Horner evaluation; ``coeffs`` in ascending powers."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate(points):
    """Coefficients (ascending) of the unique polynomial through ``points``.

    Lagrange form expanded exactly over the rationals.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = [Fraction(0)] * len(points)
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = poly_mul(basis, [-xj, Fraction(1)])
                denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            total[k] += scale * c
    return _trim(total)


def _expand(*factors):
    out = [Fraction(1)]
    for f in factors:
        out = poly_mul(out, [Fraction(c) for c in f])
    return [c / 384 for c in out]


@dataclass(frozen=True)
class DimFormulaCase:
    """One of the eight degree-4 polynomials, valid for ``d % 4 == residue``."""

    label: str
    residue: int
    coefficients: tuple  # ascending powers of d

    @property
    def tag(self) -> str:
        return f"{self.label}-{self.residue}"

    def __call__(self, d: int) -> Fraction:
        return poly_eval(self.coefficients, d)


# factors listed in ascending powers, e.g. (4, 1) is d + 4
DIM_FORMULAS = {
    c.tag: c
    for c in [
        DimFormulaCase("000", 0, tuple(_expand((4, 1), (4, 1), (24, 8, 1)))),
        DimFormulaCase("000", 2, tuple(_expand((2, 1), (6, 1), (28, 8, 1)))),
        DimFormulaCase("200", 0, tuple(_expand((0, 1), (4, 1), (4, 1), (8, 1)))),
        DimFormulaCase("200", 2, tuple(_expand((2, 1), (6, 1), (4, 8, 1)))),
        DimFormulaCase("220", 0, tuple(_expand((0, 1), (4, 1), (8, 12, 1)))),
        DimFormulaCase("220", 2, tuple(_expand((2, 1), (-24, 28, 14, 1)))),
        DimFormulaCase("222", 0, tuple(_expand((0, 1), (32, 32, 16, 1)))),
        DimFormulaCase("222", 2, tuple(_expand((2, 1), (24, 4, 14, 1)))),
    ]
}


def dim_formula(d: int, case: str) -> int:
    """Dimension of ``W(d; case)`` on the 2x2x2 cube from the closed forms.

    ``case`` is a weight label (``"000"``, ``"200"``, ``"220"``, ``"222"``) or a
    full tag such as ``"000-2"``; a tag whose residue disagrees with ``d``
    raises.  Odd degrees give 0.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    label, _, residue = case.partition("-")
    if label not in CASE_WEIGHTS or residue not in ("", "0", "2"):
        raise ValueError(f"unknown dimension case {case!r}")
    if d % 2:
        return 0
    r = d % 4
    if residue and int(residue) != r:
        raise ValueError(f"case {case} applies to d = {residue} mod 4, got d = {d}")
    value = DIM_FORMULAS[f"{label}-{r}"](d)
    if value.denominator != 1:
        raise ArithmeticError(f"formula {label}-{r} is not integral at d = {d}")
    return int(value)


@dataclass
class DimCheckRow:
    degree: int
    case: str
    formula: int
    enumerated: int

    @property
    def ok(self) -> bool:
        return self.formula == self.enumerated


def dim_formula_check(max_d: int, include_odd: bool = True) -> list:
    """Closed forms against enumerated bases for every case and ``d <= max_d``."""
    rows = []
    for d in range(0, max_d + 1):
        if d % 2 and not include_odd:
            continue
        for label, w in CASE_WEIGHTS.items():
            rows.append(
                DimCheckRow(d, label, dim_formula(d, label), len(enumerate_weight_space(CUBE, d, w)))
            )
    return rows


def alternating_sum_222(d: int) -> int:
    """``dim W000 - 3 dim W200 + 3 dim W220 - dim W222`` from the closed forms."""
    if d % 2:
        raise ValueError("alternating sum is defined for even degrees")
    return (
        dim_formula(d, "000")
        - 3 * dim_formula(d, "200")
        + 3 * dim_formula(d, "220")
        - dim_formula(d, "222")
    )


class InsufficientData(ValueError):
    pass


def conjectured_degree(shape: Shape) -> int:
    """``prod(n) - sum(n) + k - 1``: cells minus independent linear constraints."""
    return math.prod(shape.dims) - sum(shape.dims) + shape.k - 1


@dataclass
class ResidueFit:
    residue: int
    degree: int
    coefficients: list
    points: list
    fitted: int
    agreeing: int

    @property
    def agrees(self) -> bool | None:
        checked = len(self.points) - self.fitted
        return None if checked == 0 else self.agreeing == checked


@dataclass
class ConjectureReport:
    shape: tuple
    max_degree: int
    predicted_degree: int
    period: int
    status: str  # "consistent", "inconsistent" or "insufficient-data"
    fits: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        for f, raw in zip(self.fits, out["fits"]):
            raw["coefficients"] = [str(c) for c in f.coefficients]
            raw["agrees"] = f.agrees
        return out


def _fit_class(residue, points, degree):
    fitted = min(degree + 1, len(points))
    coeffs = interpolate(points[:fitted])
    agreeing = sum(1 for x, y in points[fitted:] if poly_eval(coeffs, x) == y)
    return ResidueFit(residue, len(coeffs) - 1 if any(coeffs) else 0, coeffs, points, fitted, agreeing)


def conjecture_fit(shape: Shape, max_degree: int, period: int | None = None, strict: bool = False) -> ConjectureReport:
    """Fit zero-weight dimension counts by polynomials of the conjectured degree.

    Counts at the admissible degrees ``0, N, 2N, ...`` are split into residue
    classes modulo a period (a multiple of ``N = lcm(dims)``).  Without an
    explicit ``period`` the smallest multiple of ``N`` is chosen for which
    every class can be both fitted and checked and all checks agree.  When no
    period leaves a check point, the report falls back to the highest-degree
    interpolant the data allows with status ``"insufficient-data"``; pass
    ``strict=True`` to raise instead.  Report only: the conjecture is unproven.
    """
    N = shape.lcm_degree
    D = conjectured_degree(shape)
    zero = shape.zero_weight()
    degrees = list(range(0, max_degree + 1, N))
    if len(degrees) < 2:
        raise InsufficientData(f"need at least two admissible degrees up to {max_degree}")
    counts = {d: count_weight_space(shape, d, zero) for d in degrees}

    def classes(P):
        return {
            r: [(d, counts[d]) for d in degrees if d % P == r] for r in range(0, P, N)
        }

    candidates = [period] if period else [N * m for m in range(1, len(degrees) + 1)]
    if period is not None and period % N:
        raise ValueError(f"period must be a multiple of {N}")
    last_testable = None
    for P in candidates:
        groups = classes(P)
        if any(len(pts) < D + 2 for pts in groups.values()):
            continue
        fits = [_fit_class(r, pts, D) for r, pts in groups.items()]
        last_testable = (P, fits)
        if all(f.agrees for f in fits):
            return ConjectureReport(shape.dims, max_degree, D, P, "consistent", fits)
        if period:
            break
    if last_testable is not None:
        P, fits = last_testable
        return ConjectureReport(shape.dims, max_degree, D, P, "inconsistent", fits)
    if strict:
        raise InsufficientData(
            f"degree-{D} fits need at least {D + 2} points per residue class; "
            f"only {len(degrees)} admissible degrees up to {max_degree}"
        )
    P = period or N
    fits = [_fit_class(r, pts, len(pts) - 1) for r, pts in classes(P).items() if pts]
    return ConjectureReport(shape.dims, max_degree, D, P, "insufficient-data", fits)
