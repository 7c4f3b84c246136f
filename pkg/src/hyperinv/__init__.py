"""Exact computation of SL-invariant polynomials of multidimensional arrays."""

from .dimensions import (
    DIM_FORMULAS,
    alternating_sum_222,
    conjecture_fit,
    dim_formula,
    dim_formula_check,
)
from .engine import (
    ColumnCapExceeded,
    InvariantReport,
    invariant_basis,
    verify_invariance_group,
    verify_invariance_lie,
)
from .lie import (
    Generator,
    apply_generator,
    apply_generator_poly,
    lowering_matrix,
    raising_matrix,
)
from .linalg import (
    RationalMatrix,
    Subspace,
    inclusion_exclusion_check,
    nullspace_basis,
    rref,
    subspace_intersection_dim,
    subspace_sum_dim,
)
from .monomials import (
    Monomial,
    MonomialBasis,
    Shape,
    admissible_degrees,
    count_contingency_2x2,
    count_weight_space,
    enumerate_eps_arrays,
    enumerate_weight_space,
    sum_min_square,
    weight_of,
)
from .polynomial import Polynomial, cayley_hyperdeterminant, determinant

__version__ = "0.1.0"
