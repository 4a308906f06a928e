"""Finitely generated modules over F_p[x].

A module is ``F_p[x]^rank`` plus the torsion part ``⊕ F_p[x]/(d_i)`` with
``d_1 | d_2 | ...``.  Points of the injective spectrum are the monic
irreducibles (the hull of ``F_p[x]/(q)`` is the Prüfer module at ``q``)
together with the generic point, whose injective is the fraction field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core.types import (
    KDIM0,
    KDIM1,
    MINUS_ONE,
    POLYLINE,
    DivisionRingDescriptor,
    Point,
    PointSet,
    TildeDescriptor,
)
from .errors import BackendMismatch, InvalidModule, UnknownPoint, ZeroModule
from .exactalg.linalg import Fp, hom_space
from .exactalg.poly import Poly, is_irreducible, poly_factor
from .exactalg.smith import PolyMat, smith_normal_form


@dataclass(frozen=True)
class PolyModule:
    p: int
    factors: tuple  # monic nonunit Polys, each dividing the next
    rank: int = 0

    backend = POLYLINE

    def __post_init__(self):
        Fp(self.p)
        if self.rank < 0:
            raise InvalidModule("rank must be nonnegative")
        for d in self.factors:
            if d.p != self.p:
                raise BackendMismatch("factor characteristic differs from the module")
            if not d.is_monic() or d.degree < 1:
                raise InvalidModule(f"invariant factor {d} is not monic of positive degree")
        for a, b in zip(self.factors, self.factors[1:]):
            if not a.divides(b):
                raise InvalidModule(f"{a} does not divide {b}")

    @classmethod
    def free(cls, p, rank=1):
        return cls(p, (), rank)

    @classmethod
    def cyclic(cls, d: Poly):
        return cls(d.p, (d.monic(),) if d.degree > 0 else (), 0)

    @classmethod
    def from_elementary(cls, p, prime_powers, rank=0):
        """Build from a list of (irreducible, exponent) pairs."""
        exps = {}
        for q, e in prime_powers:
            if e > 0:
                exps.setdefault(q.monic(), []).append(e)
        for v in exps.values():
            v.sort(reverse=True)
        length = max((len(v) for v in exps.values()), default=0)
        factors = []
        for t in range(length):
            d = Poly.one(p)
            for q, v in exps.items():
                if t < len(v):
                    d = d * q ** v[t]
            factors.append(d)
        return cls(p, tuple(reversed(factors)), rank)

    def is_zero(self):
        return not self.factors and self.rank == 0

    @property
    def is_torsion(self):
        return self.rank == 0

    @property
    def last(self):
        return self.factors[-1] if self.factors else None

    @property
    def torsion_dim(self):
        return sum(d.degree for d in self.factors)

    def elementary_divisors(self):
        """Sorted list of (irreducible, exponent) over all invariant factors."""
        out = []
        for d in self.factors:
            out.extend(poly_factor(d))
        out.sort(key=lambda t: (t[0].sort_key(), t[1]))
        return out

    def torsion_part(self):
        return PolyModule(self.p, self.factors, 0)

    def describe(self):
        parts = [f"F_{self.p}[x]/({d})" for d in self.factors]
        if self.rank:
            parts.append(f"F_{self.p}[x]^{self.rank}" if self.rank > 1 else f"F_{self.p}[x]")
        return " + ".join(parts) or "0"

    def sort_key(self):
        return (self.rank, tuple(d.sort_key() for d in self.factors))

    def to_json(self):
        return {"factors": [d.to_json() for d in self.factors], "rank": self.rank}

    def __str__(self):
        return self.describe()


def direct_sum(*mods: PolyModule) -> PolyModule:
    p = mods[0].p
    pp = [t for m in mods for t in m.elementary_divisors()]
    return PolyModule.from_elementary(p, pp, sum(m.rank for m in mods))


def presentation(m: PolyModule) -> PolyMat:
    """Diagonal presentation: one generator per factor plus rank free generators."""
    return PolyMat.diagonal(list(m.factors), m.p, len(m.factors) + m.rank)


def classify(pres: PolyMat) -> PolyModule:
    snf = smith_normal_form(pres)
    return PolyModule(pres.p, snf.invariant_factors, snf.rank_defect)


# -- dimension theory -----------------------------------------------------------------------


def kdim(m: PolyModule):
    if m.is_zero():
        return MINUS_ONE
    return KDIM1 if m.rank > 0 else KDIM0


def is_critical(m: PolyModule) -> bool:
    if m.is_zero():
        raise ZeroModule("criticality of the zero module")
    if m.rank:
        return m.rank == 1 and not m.factors
    return len(m.factors) == 1 and is_irreducible(m.factors[0])


def critical_series(m: PolyModule) -> list:
    """(factor, dimension) pairs: one simple per prime-power step, then free factors."""
    if m.is_zero():
        raise ZeroModule("critical series of the zero module")
    simples = []
    for q, e in m.elementary_divisors():
        simples.extend([PolyModule.cyclic(q)] * e)
    simples.sort(key=lambda s: s.factors[0].sort_key())
    out = [(s, KDIM0) for s in simples]
    out.extend((PolyModule.free(m.p), KDIM1) for _ in range(m.rank))
    return out


# -- points ------------------------------------------------------------------------------


def generic(p) -> Point:
    return Point(POLYLINE, "generic")


def point_at(q: Poly) -> Point:
    if not q.is_monic() or not is_irreducible(q):
        raise UnknownPoint(f"{q} is not a monic irreducible")
    return Point(POLYLINE, "irr", q)


def check_point(x: Point, p: int):
    if x.backend != POLYLINE or x.kind not in ("generic", "irr"):
        raise UnknownPoint(f"{x.key} is not a point of the affine line")
    if x.kind == "irr" and (x.data.p != p or not is_irreducible(x.data) or not x.data.is_monic()):
        raise UnknownPoint(f"{x.key} is not a monic irreducible over F_{p}")


def support_rule(m: PolyModule) -> PointSet:
    if m.is_zero():
        raise ZeroModule("support of the zero module")
    if m.rank > 0:
        return PointSet.whole(POLYLINE)
    return PointSet.finite(POLYLINE, [q for q, _ in poly_factor(m.last)])


def residue_data(x: Point, p: int):
    """(tilde, D(x), injective descriptor) at a point."""
    check_point(x, p)
    if x.kind == "generic":
        return (TildeDescriptor("function_field"), DivisionRingDescriptor.rational_function_field(p),
                "function_field")
    q = x.data
    return (TildeDescriptor("finite", module=PolyModule.cyclic(q)),
            DivisionRingDescriptor.finite_field(p, q.degree), f"Prufer({q})")


# -- explicit F_p-linear models of torsion modules ------------------------------------------


def companion(d: Poly) -> tuple:
    """x-action on F_p[x]/(d) in the monomial basis, row convention."""
    n = d.degree
    rows = []
    for i in range(n):
        if i + 1 < n:
            rows.append(tuple(1 if j == i + 1 else 0 for j in range(n)))
        else:
            rows.append(tuple((-c) % d.p for c in d.coeffs[:n]))
    return tuple(rows)


def x_action(m: PolyModule) -> tuple:
    """Block-diagonal x-action on the torsion part."""
    blocks = [companion(d) for d in m.factors]
    n = sum(len(b) for b in blocks)
    rows, off = [], 0
    for b in blocks:
        for r in b:
            rows.append((0,) * off + r + (0,) * (n - off - len(b)))
        off += len(b)
    return tuple(rows)


def hom_to_injective(m: PolyModule, x: Point) -> bool:
    """Hom(m, E(x)) != 0, computed on explicit models.

    For a closed point the torsion part maps into the truncation
    F_p[x]/(q^N) of the Prüfer module, N one more than any exponent in m; a
    free summand always maps onto the generator of a truncation.  Only free
    summands map nontrivially into the fraction field.
    """
    check_point(x, m.p)
    if m.is_zero():
        return False
    if x.kind == "generic":
        return m.rank > 0
    if m.rank > 0:
        return True
    q = x.data
    n = 1 + max((e for _, e in m.elementary_divisors()), default=0)
    trunc = companion(q ** n)
    return bool(hom_space([x_action(m)], [trunc], m.p))


# -- primes and the class rule ------------------------------------------------------------


def is_prime(m: PolyModule) -> bool:
    if m.is_zero():
        raise ZeroModule("primality of the zero module")
    if m.rank > 0:
        return not m.factors
    q = m.factors[0]
    return is_irreducible(q) and all(d == q for d in m.factors)


def prime_filtration(m: PolyModule) -> list:
    """Factors of a filtration with prime subquotients: isotypic socle layers, then the free part."""
    if m.is_zero():
        raise ZeroModule("filtration of the zero module")
    out = []
    exps = {}
    for q, e in m.elementary_divisors():
        exps.setdefault(q, []).append(e)
    for q in sorted(exps, key=Poly.sort_key):
        v = exps[q]
        for layer in range(1, max(v) + 1):
            count = sum(1 for e in v if e >= layer)
            out.append(PolyModule(m.p, (q,) * count, 0))
    if m.rank:
        out.append(PolyModule.free(m.p, m.rank))
    return out


def sigma_member(n: PolyModule, m: PolyModule) -> bool:
    """n in sigma[m]."""
    if n.p != m.p:
        raise BackendMismatch("characteristics differ")
    if n.is_zero():
        return True
    if m.rank > 0:
        return True
    if n.rank > 0 or m.is_zero():
        return False
    return n.last.divides(m.last)


def support_submodule(n: PolyModule, m: PolyModule) -> PolyModule:
    """Largest submodule of n lying in sigma[m]."""
    if m.rank > 0:
        return n
    if m.is_zero():
        return PolyModule(n.p, (), 0)
    d = m.last
    pp = []
    for q, e in n.elementary_divisors():
        k = 0
        while k < e and (q ** (k + 1)).divides(d):
            k += 1
        pp.append((q, k))
    return PolyModule.from_elementary(n.p, pp, 0)


def quotient_by_support(n: PolyModule, m: PolyModule) -> PolyModule:
    """n / i^!(n) for Z = sigma[m], using the elementary divisor split."""
    if m.rank > 0:
        return PolyModule(n.p, (), 0)
    if m.is_zero():
        return n
    d = m.last
    pp = []
    for q, e in n.elementary_divisors():
        k = 0
        while k < e and (q ** (k + 1)).divides(d):
            k += 1
        pp.append((q, e - k))
    return PolyModule.from_elementary(n.p, pp, n.rank)


def in_spec(m: PolyModule) -> bool:
    """Free modules and isotypic semisimple torsion modules."""
    if m.is_zero():
        raise ZeroModule("zero module")
    if m.rank > 0:
        return not m.factors
    return is_prime(m)


def phi(m: PolyModule) -> Point:
    if m.rank > 0:
        return generic(m.p)
    return Point(POLYLINE, "irr", m.factors[0])
