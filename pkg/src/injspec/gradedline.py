"""Finitely generated graded modules over F_p[x] (deg x = 1).

Every such module is a sum of shifted frees ``k[x](-a)`` (nonzero exactly
in degrees >= a) and shifted truncations ``(k[x]/x^n)(-b)`` (nonzero in
degrees b .. b+n-1).  Points: ``y_i`` for the simple ``S_i`` concentrated in
degree i, and ``z`` for the Laurent module ``k[x, x^-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core.types import (
    GRADED,
    KDIM0,
    KDIM1,
    MINUS_ONE,
    DivisionRingDescriptor,
    Point,
    PointSet,
    TildeDescriptor,
)
from .errors import (
    BackendMismatch,
    InhomogeneousRelation,
    InvalidModule,
    NoPrimeSubmodule,
    UnknownPoint,
    ZeroModule,
)
from .exactalg.linalg import Fp
from .exactalg.smith import PolyMat


@dataclass(frozen=True)
class GradedModule:
    p: int
    frees: tuple = ()  # shifts a: k[x](-a)
    torsions: tuple = ()  # (start degree b, length n >= 1)

    backend = GRADED

    def __post_init__(self):
        Fp(self.p)
        if tuple(sorted(self.frees)) != tuple(self.frees):
            raise InvalidModule("frees must be sorted")
        if tuple(sorted(self.torsions)) != tuple(self.torsions):
            raise InvalidModule("torsions must be sorted")
        for b, n in self.torsions:
            if n < 1:
                raise InvalidModule(f"torsion length must be >= 1, got {n}")

    @classmethod
    def make(cls, p, frees=(), torsions=()):
        return cls(p, tuple(sorted(int(a) for a in frees)),
                   tuple(sorted((int(b), int(n)) for b, n in torsions)))

    @classmethod
    def simple(cls, p, i, m=1):
        return cls(p, (), ((i, 1),) * m)

    def is_zero(self):
        return not self.frees and not self.torsions

    def component_dim(self, i) -> int:
        return sum(1 for a in self.frees if a <= i) + sum(1 for b, n in self.torsions if b <= i < b + n)

    def shift(self, s):
        return GradedModule.make(self.p, [a + s for a in self.frees],
                                 [(b + s, n) for b, n in self.torsions])

    def describe(self):
        parts = [f"k[x](-{a})" if a >= 0 else f"k[x](+{-a})" for a in self.frees]
        parts += [f"(k[x]/x^{n})(-{b})" if b >= 0 else f"(k[x]/x^{n})(+{-b})" for b, n in self.torsions]
        return " + ".join(parts) or "0"

    def sort_key(self):
        return (self.frees, self.torsions)

    def to_json(self):
        return {"frees": list(self.frees), "torsions": [list(t) for t in self.torsions]}

    def __str__(self):
        return self.describe()


def direct_sum(*mods: GradedModule) -> GradedModule:
    return GradedModule.make(mods[0].p, [a for m in mods for a in m.frees],
                             [t for m in mods for t in m.torsions])


# -- classification ------------------------------------------------------------------------


def _monomial(entry, i, j):
    """(coefficient, exponent) of a monomial entry, None for zero."""
    if entry.is_zero():
        return None
    nz = [e for e, c in enumerate(entry.coeffs) if c]
    if len(nz) != 1:
        raise InhomogeneousRelation(f"entry ({i},{j}) = {entry} is not a monomial", row=i, col=j)
    return entry.coeffs[nz[0]], nz[0]


def classify_graded(gen_degrees, relations: PolyMat) -> GradedModule:
    """Normal form of the cokernel; rows of ``relations`` are generators."""
    p = relations.p
    gens = list(gen_degrees)
    if relations.nrows != len(gens):
        raise InvalidModule("relation matrix rows must match the generators")
    nr, nc = relations.nrows, relations.ncols
    a = [[_monomial(relations.entries[i][j], i, j) for j in range(nc)] for i in range(nr)]
    coldeg = []
    for j in range(nc):
        deg = None
        for i in range(nr):
            if a[i][j] is not None:
                d = gens[i] + a[i][j][1]
                if deg is None:
                    deg = d
                elif d != deg:
                    raise InhomogeneousRelation(
                        f"entry ({i},{j}) has degree {d}, column degree is {deg}", row=i, col=j)
        coldeg.append(deg)
    rows, cols = set(range(nr)), set(range(nc))
    torsions = []
    while True:
        best = None
        for i in sorted(rows):
            for j in sorted(cols):
                if a[i][j] is not None and (best is None or a[i][j][1] < best[0]):
                    best = (a[i][j][1], i, j)
        if best is None:
            break
        e, i, j = best
        c = a[i][j][0]
        cinv = pow(c, p - 2, p)
        # clear column j through generator changes (row operations)
        for i2 in rows:
            if i2 != i and a[i2][j] is not None:
                f = (a[i2][j][0] * cinv) % p
                for k in cols:
                    if a[i][k] is None:
                        continue
                    coef = (-f * a[i][k][0]) % p
                    exp = a[i][k][1] + a[i2][j][1] - e
                    cur = a[i2][k]
                    total = ((cur[0] if cur else 0) + coef) % p
                    a[i2][k] = (total, exp) if total else None
        # clear row i through relation changes (column operations)
        for k in cols:
            if k != j:
                a[i][k] = None
        rows.discard(i)
        cols.discard(j)
        if e > 0:
            torsions.append((gens[i], e))
    return GradedModule.make(p, [gens[i] for i in rows], torsions)


def presentation(m: GradedModule):
    """(generator degrees, relation matrix) presenting the normal form."""
    gens = list(m.frees) + [b for b, _ in m.torsions]
    p = m.p
    from .exactalg.poly import Poly

    cols = []
    for t, (b, n) in enumerate(m.torsions):
        col = [Poly.zero(p)] * len(gens)
        col[len(m.frees) + t] = Poly.monomial(n, p)
        cols.append(col)
    entries = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(len(gens)))
    return gens, PolyMat(p, len(gens), len(cols), entries)


# -- dimension theory ----------------------------------------------------------------------


def kdim(m: GradedModule):
    if m.is_zero():
        return MINUS_ONE
    return KDIM1 if m.frees else KDIM0


def is_critical(m: GradedModule) -> bool:
    if m.is_zero():
        raise ZeroModule("criticality of the zero module")
    if m.frees:
        return len(m.frees) == 1 and not m.torsions
    return len(m.torsions) == 1 and m.torsions[0][1] == 1


def critical_series(m: GradedModule) -> list:
    if m.is_zero():
        raise ZeroModule("critical series of the zero module")
    degrees = sorted(d for b, n in m.torsions for d in range(b, b + n))
    out = [(GradedModule.simple(m.p, d), KDIM0) for d in degrees]
    out.extend((GradedModule.make(m.p, [a]), KDIM1) for a in m.frees)
    return out


# -- points and supports -------------------------------------------------------------------


def check_point(x: Point):
    if x.backend != GRADED or x.kind not in ("z", "y"):
        raise UnknownPoint(f"{x.key} is not a point of the graded line")


def support_rule_graded(m: GradedModule) -> PointSet:
    if m.is_zero():
        raise ZeroModule("support of the zero module")
    plus = {d for b, n in m.torsions for d in range(b, b + n)}
    if m.frees:
        return PointSet.make(GRADED, True, "ray", min(m.frees), plus)
    return PointSet.make(GRADED, False, "empty", None, plus)


def residue_data(x: Point, p: int):
    check_point(x)
    if x.kind == "z":
        return TildeDescriptor("laurent"), DivisionRingDescriptor.finite_field(p, 1), "laurent"
    return (TildeDescriptor("finite", module=GradedModule.simple(p, x.data)),
            DivisionRingDescriptor.finite_field(p, 1), f"k[x^-1]({x.data})")


def is_basic_closed_graded(s: PointSet, p: int = 2):
    """(basic?, generating witness spec or None).

    A set without z is the support of a family of simples.  A set with z is
    basic exactly when it also contains a full ray of y-points, realized by a
    shifted free module.
    """
    from .core.types import GabrielProduct, Sigma, SimpleFamily, Whole, Zero

    if s.backend != GRADED:
        raise BackendMismatch("not a graded-line point set")
    if not s.has_generic:
        return True, (SimpleFamily(s) if not s.is_empty else Zero())
    if s.base == "empty":
        return False, None
    if s.base == "ray":
        # {z} plus Ray(c) is the support of k[x](-c); stray y-points come from simples
        c = max([s.ray] + [i + 1 for i in s.minus])
        extra = sorted(set(s.plus) | {i for i in range(s.ray, c) if i not in s.minus})
        gens = [GradedModule.make(p, [c])] + [GradedModule.simple(p, i) for i in extra]
        return True, Sigma(tuple(gens))
    if not s.minus:
        return True, Whole()
    c = max(s.minus) + 1
    ys = PointSet.make(GRADED, False, s.base, s.ray, s.plus, s.minus)
    return True, GabrielProduct((SimpleFamily(ys), Sigma((GradedModule.make(p, [c]),))))


# -- membership and support functors --------------------------------------------------------


def _torsion_covered(b, k, m: GradedModule) -> bool:
    if any(c <= b for c in m.frees):
        return True
    return any(b2 <= b and b + k <= b2 + n2 for b2, n2 in m.torsions)


def sigma_member(n: GradedModule, m: GradedModule) -> bool:
    """n in sigma[m]: each summand of n is a subquotient of one summand type of m."""
    if n.p != m.p:
        raise BackendMismatch("characteristics differ")
    for a in n.frees:
        if not any(c <= a for c in m.frees):
            return False
    return all(_torsion_covered(b, k, m) for b, k in n.torsions)


def support_submodule(n: GradedModule, m: GradedModule) -> GradedModule:
    """Largest submodule of n in sigma[m], summand by summand."""
    frees = []
    if m.frees:
        cmin = min(m.frees)
        frees = [max(a, cmin) for a in n.frees]
    torsions = []
    for b, k in n.torsions:
        for t in range(k):
            if _torsion_covered(b + t, k - t, m):
                torsions.append((b + t, k - t))
                break
    return GradedModule.make(n.p, frees, torsions)


def quotient_by_support(n: GradedModule, m: GradedModule) -> GradedModule:
    """n / i^!(n), summand by summand."""
    torsions = []
    if m.frees:
        cmin = min(m.frees)
        for a in n.frees:
            if cmin > a:
                torsions.append((a, cmin - a))
        frees = []
    else:
        frees = list(n.frees)
    for b, k in n.torsions:
        kept = 0
        for t in range(k):
            if _torsion_covered(b + t, k - t, m):
                kept = k - t
                break
        if k - kept:
            torsions.append((b, k - kept))
    return GradedModule.make(n.p, frees, torsions)


# -- primes and spec -----------------------------------------------------------------------


def is_prime(m: GradedModule) -> bool:
    if m.is_zero():
        raise ZeroModule("primality of the zero module")
    return not m.frees and len({t for t in m.torsions}) == 1 and m.torsions[0][1] == 1


def has_prime_submodule(m: GradedModule) -> bool:
    if m.is_zero():
        raise ZeroModule("zero module")
    return bool(m.torsions)


def prime_filtration(m: GradedModule) -> list:
    """Isotypic simple layers of the torsion part, socle first."""
    if m.is_zero():
        raise ZeroModule("filtration of the zero module")
    if m.frees:
        raise NoPrimeSubmodule(
            "a free summand k[x](-a) survives in a quotient, and it has no prime submodule",
            frees=list(m.frees))
    layers = []
    depth = max(n for _, n in m.torsions)
    for level in range(depth):
        counts = {}
        for b, n in m.torsions:
            if level < n:
                d = b + n - 1 - level
                counts[d] = counts.get(d, 0) + 1
        for d in sorted(counts):
            layers.append(GradedModule.simple(m.p, d, counts[d]))
    return layers


def in_spec(m: GradedModule) -> bool:
    if m.is_zero():
        raise ZeroModule("zero module")
    return is_prime(m)


def phi(m: GradedModule) -> Point:
    return Point(GRADED, "y", m.torsions[0][0])
