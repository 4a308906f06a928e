"""Domain types shared by every backend."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import BackendMismatch, DimensionTooDeep

FINDIM = "findim"
POLYLINE = "polyline"
GRADED = "graded"
BACKENDS = (FINDIM, POLYLINE, GRADED)


# -- Krull dimension values ------------------------------------------------------


@dataclass(frozen=True, order=True)
class KdimValue:
    """-1 (zero module) or a finite value; shipped backends stop at 1."""

    value: int

    def __post_init__(self):
        if self.value < -1:
            raise ValueError("Krull dimension is at least -1")
        if self.value > 1:
            raise DimensionTooDeep(f"dimension {self.value} exceeds the supported range {{-1, 0, 1}}")

    @property
    def is_minus_one(self):
        return self.value == -1

    def __str__(self):
        return str(self.value)


MINUS_ONE = KdimValue(-1)
KDIM0 = KdimValue(0)
KDIM1 = KdimValue(1)


# -- points -------------------------------------------------------------------------


def simple_label(index: int) -> str:
    return chr(ord("a") + index) if index < 26 else f"s{index}"


@dataclass(frozen=True)
class Point:
    """An element of Inj(X).

    kind: ``simple`` (data = simple index), ``generic``, ``irr`` (data = monic
    irreducible Poly), ``z`` or ``y`` (data = integer degree).
    """

    backend: str
    kind: str
    data: Any = None

    @property
    def key(self) -> str:
        if self.kind == "simple":
            return f"E(S{simple_label(self.data)})"
        if self.kind == "generic":
            return "generic"
        if self.kind == "irr":
            return f"y({self.data})"
        if self.kind == "z":
            return "z"
        if self.kind == "y":
            return f"y_{self.data}"
        raise ValueError(f"unknown point kind {self.kind!r}")

    @property
    def label(self):
        """The closed-point label used inside PointSets (None for generic points)."""
        if self.kind in ("simple", "irr", "y"):
            return self.data
        return None

    @property
    def is_generic(self):
        return self.kind in ("generic", "z")

    def sort_key(self):
        if self.kind == "irr":
            return (1, self.data.sort_key())
        if self.kind in ("generic", "z"):
            return (0, ())
        return (1, (self.data,))

    def __str__(self):
        return self.key


def generic_point(backend: str) -> Point:
    if backend == POLYLINE:
        return Point(POLYLINE, "generic")
    if backend == GRADED:
        return Point(GRADED, "z")
    raise BackendMismatch(f"backend {backend} has no generic point")


def closed_point(backend: str, label) -> Point:
    kind = {FINDIM: "simple", POLYLINE: "irr", GRADED: "y"}[backend]
    return Point(backend, kind, label)


# -- point sets ----------------------------------------------------------------------


def _label_key(label):
    return label.sort_key() if hasattr(label, "sort_key") else (label,)


@dataclass(frozen=True)
class PointSet:
    """A finitely described subset of Inj(X).

    The set is ``(base minus minus) union plus`` together with the generic
    point when ``has_generic``.  ``base`` is ``empty``, ``ray`` (graded
    indices ``>= ray``) or ``all`` (every closed point).  Instances built via
    :meth:`make` are normalized, so equality of sets is equality of values.
    """

    backend: str
    has_generic: bool = False
    base: str = "empty"
    ray: int | None = None
    plus: frozenset = field(default_factory=frozenset)
    minus: frozenset = field(default_factory=frozenset)

    @classmethod
    def make(cls, backend, has_generic=False, base="empty", ray=None, plus=(), minus=()):
        if base not in ("empty", "ray", "all"):
            raise ValueError(f"unknown base {base!r}")
        if base == "ray" and backend != GRADED:
            raise BackendMismatch("rays only exist on the graded line")
        if has_generic and backend == FINDIM:
            raise BackendMismatch("finite-dimensional spaces have no generic point")
        if base != "ray":
            ray = None
        minus = set(minus)
        plus = set(plus) - minus
        if base == "ray":
            # a ray never carries holes: move its start past the last one
            holes = [i for i in minus if i >= ray]
            if holes:
                start = max(holes) + 1
                plus |= {i for i in range(ray, start) if i not in minus}
                ray = start
            minus = set()
            while ray - 1 in plus:
                ray -= 1

        def in_base(label):
            if base == "all":
                return True
            if base == "ray":
                return label >= ray
            return False

        plus = frozenset(x for x in plus if not in_base(x) and x not in minus)
        minus = frozenset(x for x in minus if in_base(x))
        return cls(backend, bool(has_generic), base, ray, plus, minus)

    @classmethod
    def empty(cls, backend):
        return cls.make(backend)

    @classmethod
    def finite(cls, backend, labels, has_generic=False):
        return cls.make(backend, has_generic=has_generic, plus=labels)

    @classmethod
    def whole(cls, backend, universe=None):
        """Every point; ``universe`` lists the simple indices for findim."""
        if backend == FINDIM:
            return cls.make(backend, plus=universe or ())
        return cls.make(backend, has_generic=True, base="all")

    def _in_base(self, label):
        if self.base == "all":
            return True
        if self.base == "ray":
            return label >= self.ray
        return False

    def contains_label(self, label) -> bool:
        if label in self.plus:
            return True
        return self._in_base(label) and label not in self.minus

    def contains(self, point: Point) -> bool:
        if point.backend != self.backend:
            raise BackendMismatch("point and set live on different backends")
        if point.is_generic:
            return self.has_generic
        return self.contains_label(point.label)

    __contains__ = contains

    @property
    def is_empty(self):
        return not self.has_generic and self.base == "empty" and not self.plus

    @property
    def is_finite(self):
        return self.base == "empty"

    def closed_labels(self):
        """Labels of a set with finitely many closed points, sorted."""
        if self.base != "empty":
            raise ValueError("set has infinitely many closed points")
        return sorted(self.plus, key=_label_key)

    def _combine(self, other, op):
        if other.backend != self.backend:
            raise BackendMismatch("point sets live on different backends")
        bases = {self.base, other.base}
        if op == "or":
            if "all" in bases:
                base, ray = "all", None
            elif "ray" in bases:
                base = "ray"
                ray = min(r for r in (self.ray, other.ray) if r is not None)
            else:
                base, ray = "empty", None
        else:
            if "empty" in bases:
                base, ray = "empty", None
            elif bases == {"all"}:
                base, ray = "all", None
            else:
                base = "ray"
                ray = max(r for r in (self.ray, other.ray) if r is not None)
        candidates = self.plus | self.minus | other.plus | other.minus
        plus, minus = set(), set()
        for c in candidates:
            a, b = self.contains_label(c), other.contains_label(c)
            inside = (a or b) if op == "or" else (a and b)
            in_base = base == "all" or (base == "ray" and c >= ray)
            if inside and not in_base:
                plus.add(c)
            elif in_base and not inside:
                minus.add(c)
        gen = (self.has_generic or other.has_generic) if op == "or" else (
            self.has_generic and other.has_generic)
        return PointSet.make(self.backend, gen, base, ray, plus, minus)

    def union(self, other):
        return self._combine(other, "or")

    def intersect(self, other):
        return self._combine(other, "and")

    __or__ = union
    __and__ = intersect

    def issubset(self, other):
        return self.union(other) == other

    def points_in_window(self, window):
        """Points of the set whose labels lie in ``window`` (an iterable of labels)."""
        out = []
        if self.has_generic:
            out.append(generic_point(self.backend))
        for label in window:
            if self.contains_label(label):
                out.append(closed_point(self.backend, label))
        return out

    def shift(self, s):
        if self.backend != GRADED:
            raise BackendMismatch("shifts only exist on the graded line")
        return PointSet.make(
            GRADED, self.has_generic, self.base,
            None if self.ray is None else self.ray + s,
            {x + s for x in self.plus}, {x + s for x in self.minus},
        )

    def to_json(self):
        def enc(label):
            if self.backend == POLYLINE:
                return str(label)
            if self.backend == FINDIM:
                return simple_label(label)
            return label

        return {
            "z": self.has_generic,
            "ray": self.ray,
            "all_y": self.base == "all",
            "plus": [enc(x) for x in sorted(self.plus, key=_label_key)],
            "minus": [enc(x) for x in sorted(self.minus, key=_label_key)],
        }

    def __str__(self):
        parts = []
        if self.has_generic:
            parts.append("generic" if self.backend == POLYLINE else "z")
        if self.base == "all":
            parts.append("all closed points")
        elif self.base == "ray":
            parts.append(f"y_i (i >= {self.ray})")
        for x in sorted(self.plus, key=_label_key):
            parts.append(closed_point(self.backend, x).key)
        text = "{" + ", ".join(parts) + "}"
        if self.minus:
            text += " minus {" + ", ".join(
                closed_point(self.backend, x).key for x in sorted(self.minus, key=_label_key)) + "}"
        return text


# -- weakly closed subspaces -----------------------------------------------------------


class WeaklyClosedSpec:
    """Symbolic description of a weakly closed subspace."""


@dataclass(frozen=True)
class Sigma(WeaklyClosedSpec):
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("Sigma needs at least one generator")
        for g in self.generators:
            if g.is_zero():
                raise ValueError("Sigma generators must be nonzero")


@dataclass(frozen=True)
class SimpleFamily(WeaklyClosedSpec):
    points: PointSet

    def __post_init__(self):
        if self.points.has_generic:
            raise ValueError("a simple family contains closed points only")


@dataclass(frozen=True)
class DimBelow(WeaklyClosedSpec):
    alpha: KdimValue

    def __post_init__(self):
        if isinstance(self.alpha, int):
            object.__setattr__(self, "alpha", KdimValue(self.alpha))


@dataclass(frozen=True)
class GabrielProduct(WeaklyClosedSpec):
    factors: tuple

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("a Gabriel product needs at least two factors")


@dataclass(frozen=True)
class Saturation(WeaklyClosedSpec):
    inner: WeaklyClosedSpec


@dataclass(frozen=True)
class Intersect(WeaklyClosedSpec):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("an intersection needs at least one part")


@dataclass(frozen=True)
class Whole(WeaklyClosedSpec):
    pass


@dataclass(frozen=True)
class Zero(WeaklyClosedSpec):
    pass


# -- outputs of the dimension theory ------------------------------------------------------


@dataclass(frozen=True)
class CriticalSeries:
    factors: tuple  # of (module handle or label, KdimValue)

    def __len__(self):
        return len(self.factors)

    @property
    def dims(self):
        return tuple(d for _, d in self.factors)


@dataclass(frozen=True)
class TildeDescriptor:
    """Largest critical submodule of an indecomposable injective.

    kind: ``finite`` (module given), ``function_field``, ``laurent``,
    ``prufer`` (poly given) or ``graded_copoly`` (index given).
    """

    kind: str
    module: Any = None
    poly: Any = None
    index: int | None = None

    def __str__(self):
        if self.kind == "finite":
            return f"finite({self.module.describe()})"
        if self.kind == "function_field":
            return "k(x)"
        if self.kind == "laurent":
            return "k[x,x^-1]"
        if self.kind == "prufer":
            return f"Prufer({self.poly})"
        return f"k[x^-1]({self.index})"


@dataclass(frozen=True)
class DivisionRingDescriptor:
    """kind: ``finite_field`` (p, degree), ``rational_function_field`` (p) or ``end_ring``."""

    kind: str
    p: int
    degree: int | None = None
    dim: int | None = None
    is_division: bool | None = None

    @classmethod
    def finite_field(cls, p, degree):
        return cls("finite_field", p, degree=degree, is_division=True)

    @classmethod
    def rational_function_field(cls, p):
        return cls("rational_function_field", p, is_division=True)

    def __str__(self):
        if self.kind == "finite_field":
            return f"F_{self.p ** self.degree}"
        if self.kind == "rational_function_field":
            return f"F_{self.p}(x)"
        return f"End(dim={self.dim}, division={self.is_division})"


# -- spaces -------------------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceHandle:
    backend: str
    p: int
    algebra: Any = None
    name: str | None = None

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == FINDIM and self.algebra is None:
            raise ValueError("a finite-dimensional space needs an algebra")

    @classmethod
    def findim(cls, algebra, name=None):
        from ..findim.algebra import validate_algebra

        violations = validate_algebra(algebra)
        if violations:
            from ..errors import InvalidAlgebra

            raise InvalidAlgebra("structure constants fail the algebra axioms", violations=violations[:5])
        return cls(FINDIM, algebra.p, algebra, name or algebra.name)

    @classmethod
    def polyline(cls, p):
        from ..exactalg.linalg import Fp

        Fp(p)
        return cls(POLYLINE, p, name=f"F_{p}[x]")

    @classmethod
    def graded(cls, p):
        from ..exactalg.linalg import Fp

        Fp(p)
        return cls(GRADED, p, name=f"GrMod F_{p}[x]")

    @property
    def top_dimension(self) -> KdimValue:
        return KDIM0 if self.backend == FINDIM else KDIM1

    def check_module(self, m):
        if getattr(m, "backend", None) != self.backend:
            raise BackendMismatch(f"module belongs to {getattr(m, 'backend', '?')}, space is {self.backend}")
        if m.p != self.p:
            raise BackendMismatch(f"module has characteristic {m.p}, space has {self.p}")
        if self.backend == FINDIM and m.alg_dim != self.algebra.dim:
            raise BackendMismatch("module action count does not match the algebra dimension")

    def __str__(self):
        return self.name or self.backend
