"""Built-in spaces and modules used by the law runner, the CLI and the tests."""

from __future__ import annotations

from functools import cache
from itertools import combinations_with_replacement

from .core.types import SpaceHandle
from .exactalg.poly import Poly, irreducibles
from .findim import structure as fs
from .findim.algebra import (
    direct_sum,
    full_matrix,
    isomorphic,
    product_of_fields,
    truncated_polynomial,
    upper_triangular,
)
from .gradedline import GradedModule
from .polyline import PolyModule

ALGEBRAS = {
    "T2(F_2)": lambda: upper_triangular(2, 2),
    "M2(F_2)": lambda: full_matrix(2, 2),
    "F_2xF_2": lambda: product_of_fields(2, 2),
    "F_2[t]/(t^2)": lambda: truncated_polynomial((0, 0, 1), 2, "F_2[t]/(t^2)"),
    "F_4": lambda: truncated_polynomial((1, 1, 1), 2, "F_4"),
    "T2(F_3)": lambda: upper_triangular(2, 3),
    "F_3xF_3": lambda: product_of_fields(2, 3),
    "T3(F_2)": lambda: upper_triangular(3, 2),
}

#: algebras small enough for exhaustive module sweeps
SMALL = ("T2(F_2)", "M2(F_2)", "F_2xF_2", "F_2[t]/(t^2)", "F_4", "T2(F_3)", "F_3xF_3")


@cache
def algebra(name: str):
    return ALGEBRAS[name]()


@cache
def space(name: str) -> SpaceHandle:
    if name.startswith("polyline"):
        return SpaceHandle.polyline(int(name.split("p=")[1]))
    if name.startswith("graded"):
        return SpaceHandle.graded(int(name.split("p=")[1]))
    return SpaceHandle.findim(algebra(name), name)


def findim_names(include_large=True):
    return list(ALGEBRAS) if include_large else list(SMALL)


def all_space_names():
    return findim_names() + ["polyline p=2", "polyline p=3", "graded p=2"]


@cache
def _indecomposables(name):
    a = algebra(name)
    pieces = list(fs.radical_simples(a).simples)
    pieces += list(fs.indecomposable_projectives(a)) + list(fs.indecomposable_injectives(a))
    out = []
    for m in pieces:
        if not any(isomorphic(m, n) for n in out):
            out.append(m)
    return tuple(sorted(out, key=lambda m: m.dim))


@cache
def findim_modules(name: str, max_dim: int = 4) -> tuple:
    """Nonzero direct sums of simples, projectives and injectives up to max_dim, one per iso class.

    For the catalog algebras these are all the indecomposables of small
    dimension.  Distinct multisets of pairwise non-isomorphic
    indecomposables give non-isomorphic sums (Krull-Schmidt), so no
    isomorphism test is needed.
    """
    blocks = [m for m in _indecomposables(name) if m.dim <= max_dim]
    out = []
    for count in range(1, max_dim + 1):
        grew = False
        for combo in combinations_with_replacement(range(len(blocks)), count):
            if sum(blocks[i].dim for i in combo) > max_dim:
                continue
            grew = True
            out.append(direct_sum(*[blocks[i] for i in combo]))
        if not grew:
            break
    return tuple(out)


@cache
def poly_modules(p: int, max_degree: int = 2) -> tuple:
    """Small modules over F_p[x]: torsion from low-degree prime powers, optionally plus a free part."""
    irr = irreducibles(p, max_degree)
    torsion = [PolyModule.cyclic(q) for q in irr]
    x = Poly.x(p)
    torsion += [PolyModule.cyclic(x ** 2), PolyModule.cyclic(x * (x + Poly.one(p)))]
    torsion += [PolyModule.from_elementary(p, [(irr[0], 1), (irr[0], 1)])]
    torsion += [PolyModule.from_elementary(p, [(irr[0], 2), (irr[1], 1)])]
    out = list(torsion)
    out += [PolyModule.free(p), PolyModule.free(p, 2)]
    out += [PolyModule(t.p, t.factors, 1) for t in torsion[:3]]
    return tuple(out)


@cache
def graded_modules(p: int = 2) -> tuple:
    out = [GradedModule.simple(p, i) for i in (-2, 0, 3)]
    out += [GradedModule.simple(p, 1, 2)]
    out += [GradedModule.make(p, [], [(0, 2)]), GradedModule.make(p, [], [(-1, 3), (2, 1)])]
    out += [GradedModule.make(p, [a]) for a in (-1, 0, 2)]
    out += [GradedModule.make(p, [0, 3]), GradedModule.make(p, [1], [(-3, 2)])]
    return tuple(out)


def modules(name: str):
    sp = space(name)
    if sp.backend == "findim":
        return findim_modules(name)
    if sp.backend == "polyline":
        return poly_modules(sp.p)
    return graded_modules(sp.p)


def describe() -> list:
    rows = []
    for name in all_space_names():
        sp = space(name)
        row = {"name": name, "backend": sp.backend, "p": sp.p}
        if sp.backend == "findim":
            row["dim"] = sp.algebra.dim
        rows.append(row)
    return rows
