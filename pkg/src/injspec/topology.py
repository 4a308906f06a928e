"""Point-set topology of the weak Zariski topology on representable point sets.

Closed families per backend:

* findim: every subset (each set of simples is the support of their sum),
  so the topology is discrete;
* graded line: every representable set (a y-set is the support of a simple
  family, and ``{z}`` is the intersection of ``{z} + Ray(n)`` over n), again
  discrete on representable sets;
* affine line: finite sets of closed points, and the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gradedline as gl
from . import polyline as pl
from . import spectrum as sp
from .core.types import (
    FINDIM,
    GRADED,
    POLYLINE,
    Point,
    PointSet,
    Sigma,
    SpaceHandle,
    WeaklyClosedSpec,
    Zero,
)
from .errors import BackendMismatch, InternalAssertionFailed, PointNotInSubspace
from .exactalg.poly import Poly
from .findim import structure as fs
from .findim.algebra import direct_sum


def _same_backend(a: PointSet, b: PointSet):
    if a.backend != b.backend:
        raise BackendMismatch("point sets live on different backends")


def pointset_algebra(a: PointSet, b: PointSet, which: str):
    _same_backend(a, b)
    if which == "union":
        return a | b
    if which == "intersect":
        return a & b
    if which == "subset":
        return a.issubset(b)
    if which == "equal":
        return a == b
    raise ValueError(f"unknown operation {which!r}")


def _check_in_space(space: SpaceHandle, s: PointSet):
    if s.backend != space.backend:
        raise BackendMismatch("point set from another backend")
    if space.backend == FINDIM:
        n = sp.num_points(space)
        if any(not 0 <= j < n for j in s.plus):
            raise BackendMismatch("point index out of range")


def is_basic_closed(space: SpaceHandle, s: PointSet):
    """(basic?, witness spec with V(witness) = s, or None)."""
    _check_in_space(space, s)
    if s.is_empty:
        return True, Zero()
    if space.backend == FINDIM:
        simples = fs.radical_simples(space.algebra).simples
        return True, Sigma((direct_sum(*[simples[j] for j in s.closed_labels()]),))
    if space.backend == POLYLINE:
        if s.has_generic:
            if s == PointSet.whole(POLYLINE):
                return True, Sigma((pl.PolyModule.free(space.p),))
            return False, None
        if not s.is_finite:
            return False, None
        d = Poly.one(space.p)
        for q in s.closed_labels():
            d = d * q
        return True, Sigma((pl.PolyModule.cyclic(d),))
    return gl.is_basic_closed_graded(s, space.p)


def is_closed(space: SpaceHandle, s: PointSet) -> bool:
    _check_in_space(space, s)
    if space.backend != POLYLINE:
        return True
    return (s.is_finite and not s.has_generic) or s == PointSet.whole(POLYLINE)


def closure(space: SpaceHandle, s: PointSet) -> PointSet:
    _check_in_space(space, s)
    if is_closed(space, s):
        return s
    return PointSet.whole(POLYLINE)


@dataclass(frozen=True)
class IrreducibleReport:
    irreducible: bool
    closed_set: PointSet
    closure_taken: bool
    witness: object  # generic Point, a pair of closed sets, or None


def _without(s: PointSet, label) -> PointSet:
    return PointSet.make(s.backend, s.has_generic, s.base, s.ray, s.plus - {label}, s.minus | {label})


def _some_label(s: PointSet):
    if s.plus:
        return min(s.plus, key=lambda x: x.sort_key() if isinstance(x, Poly) else x)
    if s.base == "ray":
        return s.ray
    raise ValueError("no closed point to split off")


def is_irreducible_set(space: SpaceHandle, s: PointSet) -> IrreducibleReport:
    c = closure(space, s)
    taken = c != s
    if c.is_empty:
        return IrreducibleReport(False, c, taken, None)
    if space.backend == POLYLINE and c.has_generic:
        return IrreducibleReport(True, c, taken, Point(POLYLINE, "generic"))
    # discrete (findim, graded) or a finite closed set of the affine line
    if c.has_generic and c.base == "empty" and not c.plus:
        return IrreducibleReport(True, c, taken, Point(space.backend, "z"))
    if not c.has_generic and c.is_finite and len(c.plus) == 1:
        (lab,) = c.plus
        return IrreducibleReport(True, c, taken, Point(space.backend, _kind(space), lab))
    if c.has_generic:
        a = PointSet.make(space.backend, True)
        b = PointSet.make(space.backend, False, c.base, c.ray, c.plus, c.minus)
    else:
        lab = _some_label(c)
        a = PointSet.finite(space.backend, [lab])
        b = _without(c, lab)
    if not (a | b == c and a != c and b != c and is_closed(space, a) and is_closed(space, b)):
        raise InternalAssertionFailed("bad decomposition witness")
    return IrreducibleReport(False, c, taken, (a, b))


def _kind(space):
    return {FINDIM: "simple", POLYLINE: "irr", GRADED: "y"}[space.backend]


@dataclass(frozen=True)
class TransportReport:
    points: PointSet
    closure_in_subspace: PointSet
    closure_in_ambient: PointSet
    irreducible_in_subspace: bool
    irreducible_in_ambient: bool
    agree: bool


def transport(space: SpaceHandle, z: WeaklyClosedSpec, s: PointSet) -> TransportReport:
    """Read s as a subset of Inj(Z) ~ V(Z) and compare subspace and ambient topology.

    Closed sets of Inj(Z) are the traces on V(Z) of closed sets of X; the
    subspace closure is computed from that description and compared with
    the ambient closure intersected with V(Z).
    """
    vz = sp.v_of(space, z)
    if not s.issubset(vz):
        raise PointNotInSubspace("point set is not contained in V(Z)", set=str(s), v=str(vz))
    amb = closure(space, s) & vz
    sub = _subspace_closure(space, vz, s)
    irr_amb = not amb.is_empty and is_irreducible_set(space, closure(space, s)).irreducible
    irr_sub = _subspace_irreducible(space, vz, sub)
    agree = amb == sub and irr_amb == irr_sub
    if not agree:
        raise InternalAssertionFailed("subspace and ambient topology disagree")
    return TransportReport(s, sub, amb, irr_sub, irr_amb, agree)


def _subspace_closure(space, vz: PointSet, s: PointSet) -> PointSet:
    if space.backend != POLYLINE or is_closed(space, s):
        return s
    return vz


def _subspace_irreducible(space, vz: PointSet, c: PointSet) -> bool:
    if c.is_empty:
        return False
    if space.backend == POLYLINE and c.has_generic:
        return True
    return is_irreducible_set(space, c).irreducible


__all__ = [
    "IrreducibleReport",
    "TransportReport",
    "closure",
    "is_basic_closed",
    "is_closed",
    "is_irreducible_set",
    "pointset_algebra",
    "transport",
]
