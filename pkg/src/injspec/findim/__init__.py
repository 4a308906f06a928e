"""Finite-dimensional algebras over F_p and their modules."""

from .algebra import (
    Algebra,
    Rep,
    check_rep,
    direct_sum,
    dualize,
    full_matrix,
    isomorphic,
    matrix_unit_algebra,
    product_of_fields,
    quotient_rep,
    regular_rep,
    submodule_rep,
    truncated_polynomial,
    upper_triangular,
    validate_algebra,
)
from .structure import (
    SubmoduleLattice,
    annihilator,
    composition_factors,
    element_ann,
    end_ring_analysis,
    indecomposable_injectives,
    indecomposable_projectives,
    injective_hull,
    is_prime_ring,
    radical_simples,
    sigma_member,
    socle_basis,
    submodule_lattice,
    trace_and_support,
)

__all__ = [
    "Algebra", "Rep", "SubmoduleLattice", "annihilator", "check_rep", "composition_factors",
    "direct_sum", "dualize", "element_ann", "end_ring_analysis", "full_matrix",
    "indecomposable_injectives", "indecomposable_projectives", "injective_hull", "is_prime_ring",
    "isomorphic", "matrix_unit_algebra", "product_of_fields", "quotient_rep", "radical_simples",
    "regular_rep", "sigma_member", "socle_basis", "submodule_lattice", "submodule_rep",
    "trace_and_support", "truncated_polynomial", "upper_triangular", "validate_algebra",
]
