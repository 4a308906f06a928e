"""Exact arithmetic substrate: F_p linear algebra, F_p[x], Smith normal form."""

from .linalg import (
    Fp,
    Mat,
    RankBasis,
    hom_space,
    rank_basis,
    subspace_ops,
)
from .poly import Poly, gcd, irreducibles, is_irreducible, lcm, parse_poly, poly_factor
from .smith import PolyMat, SmithForm, determinantal_gcd, smith_normal_form

__all__ = [
    "Fp",
    "Mat",
    "Poly",
    "PolyMat",
    "RankBasis",
    "SmithForm",
    "determinantal_gcd",
    "gcd",
    "hom_space",
    "irreducibles",
    "is_irreducible",
    "lcm",
    "parse_poly",
    "poly_factor",
    "rank_basis",
    "smith_normal_form",
    "subspace_ops",
]
