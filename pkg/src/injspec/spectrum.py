"""Operations on the injective spectrum, dispatched to the three backends."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import _kernels
from . import gradedline as gl
from . import polyline as pl
from .core.dimension import kdim, tilde
from .core.types import (
    FINDIM,
    GRADED,
    KDIM1,
    POLYLINE,
    DimBelow,
    DivisionRingDescriptor,
    GabrielProduct,
    Intersect,
    Point,
    PointSet,
    Saturation,
    Sigma,
    SimpleFamily,
    SpaceHandle,
    TildeDescriptor,
    WeaklyClosedSpec,
    Whole,
    Zero,
    simple_label,
)
from .errors import (
    InternalAssertionFailed,
    NoPrimeSubmodule,
    NotInSpec,
    NotSupportedForBackend,
    PointNotInSubspace,
    UnknownPoint,
    ZeroModule,
)
from .exactalg.linalg import left_nullspace, lincomb, reduce_mod, solve, span, vecmat
from .exactalg.poly import irreducibles
from .findim import structure as fs
from .findim.algebra import (
    Rep,
    direct_sum,
    element_action,
    homs,
    is_injective_map,
    isomorphic,
    quotient_data,
    quotient_rep,
    regular_rep,
    submodule_rep,
    zero_rep,
)

DEFAULT_DEGREE_WINDOW = 3
DEFAULT_INDEX_WINDOW = (-8, 8)


# -- points ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class InjPoints:
    points: tuple
    infinite: bool
    window: object = None


def num_points(space: SpaceHandle) -> int:
    return len(fs.radical_simples(space.algebra).simples)


def inj_points(space: SpaceHandle, window=None) -> InjPoints:
    if space.backend == FINDIM:
        return InjPoints(tuple(Point(FINDIM, "simple", j) for j in range(num_points(space))), False)
    if space.backend == POLYLINE:
        deg = DEFAULT_DEGREE_WINDOW if window is None else int(window)
        pts = [Point(POLYLINE, "generic")] + [Point(POLYLINE, "irr", q) for q in irreducibles(space.p, deg)]
        return InjPoints(tuple(pts), True, deg)
    lo, hi = DEFAULT_INDEX_WINDOW if window is None else window
    pts = [Point(GRADED, "z")] + [Point(GRADED, "y", i) for i in range(lo, hi + 1)]
    return InjPoints(tuple(pts), True, (lo, hi))


def closed_window(space: SpaceHandle, window=None) -> list:
    """Closed-point labels inside a window."""
    return [x.label for x in inj_points(space, window).points if not x.is_generic]


def check_point(space: SpaceHandle, x: Point):
    if x.backend != space.backend:
        raise UnknownPoint(f"{x.key} is not a point of {space}")
    if space.backend == FINDIM:
        if x.kind != "simple" or not 0 <= x.data < num_points(space):
            raise UnknownPoint(f"{x.key} is not a point of {space}")
    elif space.backend == POLYLINE:
        pl.check_point(x, space.p)
    else:
        gl.check_point(x)


def injective_at(space: SpaceHandle, x: Point):
    """E(x): an explicit Rep for findim, a descriptor string otherwise."""
    check_point(space, x)
    if space.backend == FINDIM:
        return fs.indecomposable_injectives(space.algebra)[x.data]
    if space.backend == POLYLINE:
        return pl.residue_data(x, space.p)[2]
    return gl.residue_data(x, space.p)[2]


def whole_set(space: SpaceHandle) -> PointSet:
    if space.backend == FINDIM:
        return PointSet.whole(FINDIM, range(num_points(space)))
    return PointSet.whole(space.backend)


def closed_points_set(space: SpaceHandle) -> PointSet:
    """Every closed point (all points of critical dimension 0)."""
    if space.backend == FINDIM:
        return whole_set(space)
    return PointSet.make(space.backend, False, "all")


# -- supports and V -------------------------------------------------------------------------


def support(space: SpaceHandle, m) -> PointSet:
    """V(sigma[m]) by the backend support rule (composition factors for findim)."""
    space.check_module(m)
    if m.is_zero():
        return PointSet.empty(space.backend)
    if space.backend == FINDIM:
        idx = {fs.simple_index(space.algebra, f) for f in fs.composition_factors(m)}
        return PointSet.finite(FINDIM, idx)
    if space.backend == POLYLINE:
        return pl.support_rule(m)
    return gl.support_rule_graded(m)


def hom_to_point(space: SpaceHandle, m, x: Point) -> bool:
    """Hom(m, E(x)) != 0, by an explicit computation or a summand rule."""
    check_point(space, x)
    if m.is_zero():
        return False
    if space.backend == FINDIM:
        return bool(homs(m, injective_at(space, x)))
    if space.backend == POLYLINE:
        return pl.hom_to_injective(m, x)
    # E(z) = k[x, x^-1] receives maps exactly from free summands; E(y_i) = k[x^-1](i)
    # lives in degrees <= i and receives a map from a summand iff that summand is
    # nonzero in degree i.
    if x.kind == "z":
        return bool(m.frees)
    i = x.data
    return any(a <= i for a in m.frees) or any(b <= i < b + n for b, n in m.torsions)


def _sum(space, mods):
    if space.backend == FINDIM:
        return direct_sum(*mods)
    if space.backend == POLYLINE:
        return pl.direct_sum(*mods)
    return gl.direct_sum(*mods)


def zero_module(space: SpaceHandle):
    if space.backend == FINDIM:
        return zero_rep(space.algebra)
    if space.backend == POLYLINE:
        return pl.PolyModule(space.p, (), 0)
    return gl.GradedModule(space.p)


def v_of(space: SpaceHandle, z: WeaklyClosedSpec) -> PointSet:
    if isinstance(z, Sigma):
        out = PointSet.empty(space.backend)
        for g in z.generators:
            out = out | support(space, g)
        return out
    if isinstance(z, SimpleFamily):
        if space.backend != GRADED:
            raise NotSupportedForBackend("simple families are only used on the graded line")
        return z.points
    if isinstance(z, DimBelow):
        if z.alpha.value <= 0:
            return PointSet.empty(space.backend)
        return closed_points_set(space)
    if isinstance(z, GabrielProduct):
        out = PointSet.empty(space.backend)
        for f in z.factors:
            out = out | v_of(space, f)
        return out
    if isinstance(z, Saturation):
        return v_of(space, z.inner)
    if isinstance(z, Intersect):
        out = v_of(space, z.parts[0])
        for part in z.parts[1:]:
            out = out & v_of(space, part)
        return out
    if isinstance(z, Whole):
        return whole_set(space)
    if isinstance(z, Zero):
        return PointSet.empty(space.backend)
    raise TypeError(f"unknown weakly closed spec {z!r}")


# -- membership -----------------------------------------------------------------------------


def sigma_member(space: SpaceHandle, n, m) -> bool:
    """n in sigma[m]."""
    space.check_module(n)
    space.check_module(m)
    if space.backend == FINDIM:
        return fs.sigma_member(space.algebra, n, m)
    if space.backend == POLYLINE:
        return pl.sigma_member(n, m)
    return gl.sigma_member(n, m)


def _is_semisimple_graded(n) -> bool:
    return not n.frees and all(k == 1 for _, k in n.torsions)


def member(space: SpaceHandle, n, z: WeaklyClosedSpec) -> bool:
    """n lies in the weakly closed subspace z."""
    space.check_module(n)
    if n.is_zero():
        return True
    if isinstance(z, Sigma):
        return sigma_member(space, n, _sum(space, z.generators))
    if isinstance(z, SimpleFamily):
        if space.backend != GRADED:
            raise NotSupportedForBackend("simple families are only used on the graded line")
        return _is_semisimple_graded(n) and all(z.points.contains_label(b) for b, _ in n.torsions)
    if isinstance(z, DimBelow):
        return kdim(space, n) < z.alpha
    if isinstance(z, GabrielProduct):
        return gabriel_member(space, n, z.factors[0], _product_tail(z))
    if isinstance(z, Saturation):
        return support(space, n).issubset(v_of(space, z.inner))
    if isinstance(z, Intersect):
        return all(member(space, n, part) for part in z.parts)
    if isinstance(z, Whole):
        return True
    if isinstance(z, Zero):
        return False
    raise TypeError(f"unknown weakly closed spec {z!r}")


def _product_tail(z: GabrielProduct):
    rest = z.factors[1:]
    return rest[0] if len(rest) == 1 else GabrielProduct(rest)


def _findim_largest(space, n: Rep, z) -> tuple:
    """Basis of the largest submodule of n lying in z (findim)."""
    a = space.algebra
    if n.dim == 0:
        return ()
    if isinstance(z, Sigma):
        return fs.support_submodule(a, _sum(space, z.generators), n)
    if isinstance(z, (Whole,)) or (isinstance(z, DimBelow) and z.alpha.value >= 1):
        return span([tuple(1 if i == j else 0 for j in range(n.dim)) for i in range(n.dim)], n.dim, n.p)
    if isinstance(z, (Zero, DimBelow)):
        return ()
    if isinstance(z, Intersect):
        cur = _findim_largest(space, n, Whole())
        while True:
            before = cur
            for part in z.parts:
                sub = submodule_rep(n, cur)
                inner = _findim_largest(space, sub, part)
                cur = span([vecmat(v, cur, n.p) for v in inner], n.dim, n.p) if inner else ()
            if cur == before:
                return cur
    if isinstance(z, Saturation):
        allowed = v_of(space, z.inner)
        lat = fs.submodule_lattice(n)
        ok = [u for u in lat.elements
              if support(space, submodule_rep(n, u) if u else zero_rep(a)).issubset(allowed)]
        return span([r for u in ok for r in u], n.dim, n.p) if ok else ()
    if isinstance(z, GabrielProduct):
        tail = _product_tail(z)
        b2 = _findim_largest(space, n, tail)
        q, proj = quotient_data(n, b2)
        b1 = _findim_largest(space, q, z.factors[0])
        # preimage of b1 under the projection
        if not b1:
            return b2
        piv = [next(j for j, x in enumerate(r) if x) for r in b1]
        rows = tuple(reduce_mod(b1, tuple(piv), row, n.p) for row in proj)
        return span(left_nullspace(rows, q.dim, n.p), n.dim, n.p)
    raise NotSupportedForBackend(f"no support functor for {type(z).__name__}")


def largest_in(space: SpaceHandle, n, z: WeaklyClosedSpec):
    """(i^!(n), n / i^!(n)) for the weakly closed subspace z."""
    space.check_module(n)
    if space.backend == FINDIM:
        basis = _findim_largest(space, n, z)
        sub = submodule_rep(n, basis) if basis else zero_rep(space.algebra)
        return sub, quotient_rep(n, basis)
    mod = pl if space.backend == POLYLINE else gl
    zero = zero_module(space)
    if isinstance(z, Sigma):
        gen = _sum(space, z.generators)
        return mod.support_submodule(n, gen), mod.quotient_by_support(n, gen)
    if isinstance(z, Whole) or (isinstance(z, DimBelow) and z.alpha.value >= 2):
        return n, zero
    if isinstance(z, Zero) or (isinstance(z, DimBelow) and z.alpha.value <= 0):
        return zero, n
    if isinstance(z, DimBelow):  # C_{<1}: the torsion part
        if space.backend == POLYLINE:
            return n.torsion_part(), pl.PolyModule.free(n.p, n.rank) if n.rank else zero
        return gl.GradedModule.make(n.p, [], n.torsions), gl.GradedModule.make(n.p, n.frees)
    raise NotSupportedForBackend(f"no support functor for {type(z).__name__} on {space.backend}")


def gabriel_member(space: SpaceHandle, n, z1: WeaklyClosedSpec, z2: WeaklyClosedSpec) -> bool:
    """n in z1 . z2: the largest z2-submodule B* is optimal since z1 is quotient-closed."""
    if isinstance(z1, Whole):
        return True
    _, quo = largest_in(space, n, z2)
    return member(space, quo, z1)


# -- saturation and localization ---------------------------------------------------------------


@dataclass(frozen=True)
class SaturationDescriptor:
    points: PointSet  # simples allowed as subquotients (plus generic flag)
    has_free: bool
    notes: str

    def contains(self, space, n) -> bool:
        return n.is_zero() or support(space, n).issubset(self.points)


def saturation_closure(space: SpaceHandle, z: WeaklyClosedSpec) -> SaturationDescriptor:
    if not isinstance(z, Sigma):
        raise NotSupportedForBackend("saturation is computed for sigma subspaces")
    pts = v_of(space, z)
    if v_of(space, Saturation(z)) != pts:
        raise InternalAssertionFailed("V(Mod_Z X) differs from V(Z)")
    if space.backend == FINDIM:
        note = "members: modules whose composition factors all lie in the listed simples"
    else:
        note = "members: modules whose support lies in the listed set"
    return SaturationDescriptor(pts, pts.has_generic, note)


@dataclass(frozen=True)
class SupportedAt:
    result: bool
    by_support: bool
    by_hom: bool


def supported_at(space: SpaceHandle, m, x: Point) -> SupportedAt:
    space.check_module(m)
    if m.is_zero():
        raise ZeroModule("support of the zero module")
    check_point(space, x)
    a = support(space, m).contains(x)
    b = hom_to_point(space, m, x)
    if a != b:
        raise InternalAssertionFailed("support rule and Hom criterion disagree", point=x.key)
    return SupportedAt(a, a, b)


def localize(space: SpaceHandle, x: Point) -> dict:
    t, d = tilde(space, x)
    name = f"S{simple_label(x.data)}" if space.backend == FINDIM else (
        t.module.describe() if t.kind == "finite" else str(t))
    return {
        "simple": name,
        "division_ring": str(d),
        "notes": [
            "the localized category has a unique simple object, the image of the tilde module",
            "its endomorphism ring is D(x)",
            ("the subcategory X_x is covered by Mod X via localization; the local category has a "
            "quasi-final object"),
        ],
    }


# -- topology-level predicates ---------------------------------------------------------------


def is_topologically_irreducible(space: SpaceHandle):
    """(irreducible?, witness): a generic point, or two proper closed sets covering Inj."""
    if space.backend == FINDIM:
        n = num_points(space)
        if n == 1:
            return True, Point(FINDIM, "simple", 0)
        return False, (PointSet.finite(FINDIM, [0]), PointSet.finite(FINDIM, range(1, n)))
    if space.backend == POLYLINE:
        return True, Point(POLYLINE, "generic")
    a = v_of(space, DimBelow(KDIM1))
    b = v_of(space, Sigma((gl.GradedModule.make(space.p, [0]),)))
    return False, (a, b)


# -- primes ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeReport:
    is_prime: bool
    has_prime_submodule: bool
    filtration: tuple | None
    filtration_error: object = None
    notes: tuple = ()


def _findim_is_prime(a, m: Rep) -> bool:
    whole = fs.annihilator(a, m)
    for v in fs._normalized(m.dim, m.p):
        if fs.element_ann(a, m, v) != whole:
            return False
    return True


def _findim_prime_filtration(a, m: Rep) -> list:
    out = []
    cur = m
    while cur.dim:
        best = None
        for c in _kernels.cyclic_subspaces(cur.action, cur.dim, cur.p):
            ann = fs.ann_of_subspace(a, cur, c)
            if best is None or (len(ann), ann) > (len(best), best):
                best = ann
        # the part of cur killed by the maximal annihilator is a prime submodule
        blocks = [element_action(cur, x) for x in best]
        if blocks:
            wide = tuple(tuple(x for blk in blocks for x in blk[i]) for i in range(cur.dim))
            killed = span(left_nullspace(wide, cur.dim * len(blocks), cur.p), cur.dim, cur.p)
        else:
            killed = span([tuple(1 if i == j else 0 for j in range(cur.dim)) for i in range(cur.dim)],
                          cur.dim, cur.p)
        piece = submodule_rep(cur, killed)
        if not _findim_is_prime(a, piece):
            raise InternalAssertionFailed("filtration step is not prime")
        out.append(piece)
        cur = quotient_rep(cur, killed)
    return out


def prime_ops(space: SpaceHandle, m) -> PrimeReport:
    space.check_module(m)
    if m.is_zero():
        raise ZeroModule("primality of the zero module")
    if space.backend == FINDIM:
        a = space.algebra
        return PrimeReport(_findim_is_prime(a, m), True, tuple(_findim_prime_filtration(a, m)))
    if space.backend == POLYLINE:
        return PrimeReport(pl.is_prime(m), True, tuple(pl.prime_filtration(m)))
    notes = (("isotypic sums S_i^m are prime under the annihilator-free definition "
             "(pi[S_i^m] = pi[S_i]), not only the simples S_i themselves"),)
    try:
        filt, err = tuple(gl.prime_filtration(m)), None
    except NoPrimeSubmodule as exc:
        filt, err = None, exc
    return PrimeReport(gl.is_prime(m), gl.has_prime_submodule(m), filt, err, notes)


# -- X_red, integrality, Mori -------------------------------------------------------------------


@dataclass(frozen=True)
class XRedReport:
    descriptor: object
    is_reduced: bool
    homeomorphism: dict


def x_red(space: SpaceHandle) -> XRedReport:
    if space.backend == GRADED:
        raise NotSupportedForBackend("X_red is not determined for the graded line")
    if space.backend == POLYLINE:
        return XRedReport(f"Mod F_{space.p}[x]", True,
                          {"same_points": True, "discrete_both": False, "note": "X_red = X"})
    a = space.algebra
    rs = fs.radical_simples(a)
    quo, _keep = fs.quotient_algebra(a, rs.radical)
    n_quo = len(fs.radical_simples(quo).simples)
    report = {"points_X": len(rs.simples), "points_Xred": n_quo,
              "same_points": n_quo == len(rs.simples), "discrete_both": True}
    return XRedReport(quo, not rs.radical, report)


@dataclass(frozen=True)
class IntegralReport:
    integral: bool
    big_injective: Point | None
    reasons: tuple = ()


def is_integral(space: SpaceHandle) -> IntegralReport:
    if space.backend == POLYLINE:
        return IntegralReport(True, Point(POLYLINE, "generic"),
                              (("the fraction field is an injective with End a field and "
                               "F_p[x] embeds in it"),))
    if space.backend == GRADED:
        return IntegralReport(True, Point(GRADED, "z"),
                              (("k[x,x^-1] has degree-0 endomorphisms F_p and every k[x](-a) "
                               "embeds in it; torsion modules are quotients of frees"),))
    a = space.algebra
    reg = regular_rep(a)
    reasons = []
    for j, e in enumerate(fs.indecomposable_injectives(a)):
        end = fs.end_ring_analysis(e)
        if not (end.radical_dim == 0 and end.is_division):
            reasons.append(f"E(S{simple_label(j)}): End is not a division ring")
            continue
        if not fs.sigma_member(a, reg, e):
            reasons.append(f"E(S{simple_label(j)}): R is not in sigma[E]")
            continue
        return IntegralReport(True, Point(FINDIM, "simple", j), tuple(reasons))
    return IntegralReport(False, None, tuple(reasons))


@dataclass(frozen=True)
class MoriReport:
    condition_b: bool
    condition_c: bool
    division_ring: DivisionRingDescriptor | None
    alpha: int


def mori_check(space: SpaceHandle) -> MoriReport:
    """Conditions (b) and (c) of the division-ring-quotient theorem.

    (b): exactly one point of critical dimension alpha, and its injective is
    critical.  (c): some critical injective E of dimension alpha has
    Mod X = sigma[E] . C_{<alpha}.
    """
    if space.backend == POLYLINE:
        return MoriReport(True, True, DivisionRingDescriptor.rational_function_field(space.p), 1)
    if space.backend == GRADED:
        # Every 1-critical graded module k[x](-a) has hull k[x,x^-1](-a), isomorphic to
        # k[x,x^-1] via multiplication by x^a; a module modulo its torsion is free, hence
        # in sigma[k[x,x^-1]].
        return MoriReport(True, True, DivisionRingDescriptor.finite_field(space.p, 1), 1)
    a = space.algebra
    rs = fs.radical_simples(a)
    inj = fs.indecomposable_injectives(a)
    critical = [j for j, e in enumerate(inj) if e.dim == rs.simples[j].dim]
    cond_b = len(inj) == 1 and critical == [0]
    reg = regular_rep(a)
    cond_c = any(fs.sigma_member(a, reg, inj[j]) for j in critical)
    if cond_b != cond_c:
        raise InternalAssertionFailed("conditions (b) and (c) disagree")
    d = fs.end_ring_analysis(rs.simples[0]).descriptor if cond_b else None
    return MoriReport(cond_b, cond_c, d, 0)


# -- weak points ----------------------------------------------------------------------------


@dataclass(frozen=True)
class WeakPoint:
    at: Point
    tilde: TildeDescriptor
    is_point: bool
    subspace: object = None  # None for Mod X, else the Sigma spec it lives in
    module: object = None  # explicit tilde module where available


def tiny_test(space: SpaceHandle, x: Point) -> bool:
    """The tilde module at x is tiny.

    findim: the tilde module is finite-dimensional over its endomorphism
    field.  Affine line: dimension 1 over the residue field or over k(x).
    Graded line: Hom from each summand type into S_i or k[x,x^-1] is at most
    one-dimensional in degree 0.
    """
    check_point(space, x)
    if space.backend == FINDIM:
        s = fs.radical_simples(space.algebra).simples[x.data]
        return s.dim % fs.end_ring_analysis(s).descriptor.degree == 0
    return True


def weak_point(space: SpaceHandle, x: Point) -> WeakPoint:
    t, _ = tilde(space, x)
    return WeakPoint(x, t, tiny_test(space, x), None, t.module)


def _socle_simple(space, m: Rep) -> Rep:
    basis, _ = fs.socle_decomposition(space.algebra, m)[0]
    return submodule_rep(m, basis)


def restrict(space: SpaceHandle, z: Sigma, w: WeakPoint) -> WeakPoint:
    """W|_Z: tilde of i^!E(x), computed through the trace in the hull."""
    if space.backend != FINDIM:
        raise NotSupportedForBackend("restriction of weak points is computed in findim")
    if not v_of(space, z).contains(w.at):
        raise PointNotInSubspace(f"{w.at.key} is not in V(Z)")
    e = injective_at(space, w.at)
    sub, _ = largest_in(space, e, z)
    s = _socle_simple(space, sub)
    return WeakPoint(w.at, TildeDescriptor("finite", module=s), True, z, s)


def extend(space: SpaceHandle, w: WeakPoint) -> WeakPoint:
    """W|^X: tilde of the hull in X of the subspace tilde module."""
    if space.backend != FINDIM:
        raise NotSupportedForBackend("extension of weak points is computed in findim")
    hull = fs.injective_hull(space.algebra, w.module)
    j = hull.summands[0]
    s = _socle_simple(space, hull.module)
    return WeakPoint(Point(FINDIM, "simple", j), TildeDescriptor("finite", module=s), True, None, s)


def same_weak_point(w1: WeakPoint, w2: WeakPoint) -> bool:
    return w1.at == w2.at and isomorphic(w1.module, w2.module)


def tilde_is_injective_in_weak_point(space: SpaceHandle, x: Point, sample) -> bool:
    """Every embedding of the tilde module into a member of sigma[tilde] splits."""
    s = fs.radical_simples(space.algebra).simples[x.data]
    for n in sample:
        if n.dim == 0 or not fs.sigma_member(space.algebra, n, s):
            continue
        for f in _injective_maps(s, n):
            back = homs(n, s)
            # need g with f g = id on s
            eqs, rhs = [], []
            for r in range(s.dim):
                imgs = [vecmat(f[r], g, s.p) for g in back]
                for t in range(s.dim):
                    eqs.append(tuple(im[t] for im in imgs))
                    rhs.append(1 if r == t else 0)
            if not back or solve(tuple(eqs), len(back), tuple(rhs), s.p) is None:
                return False
    return True


def _injective_maps(s: Rep, n: Rep):
    basis = homs(s, n)
    for coeffs in product(range(s.p), repeat=len(basis)):
        if any(coeffs):
            f = lincomb(coeffs, basis, s.p, s.dim, n.dim)
            if is_injective_map(f, n.dim, s.p):
                yield f


# -- Spec and Phi -----------------------------------------------------------------------------


def is_in_spec(space: SpaceHandle, m) -> bool:
    """m is finitely subgenerated by each of its nonzero submodules."""
    space.check_module(m)
    if m.is_zero():
        raise ZeroModule("the zero module is not in Spec")
    if space.backend == FINDIM:
        lat = fs.submodule_lattice(m)
        return all(fs.sigma_member(space.algebra, m, submodule_rep(m, u)) for u in lat.elements if u)
    if space.backend == POLYLINE:
        return pl.in_spec(m)
    return gl.in_spec(m)


def phi(space: SpaceHandle, m) -> Point:
    """The point of the hull of a critical submodule of m."""
    if not is_in_spec(space, m):
        raise NotInSpec("module is not in Spec")
    return _phi_member(space, m)


def _phi_member(space: SpaceHandle, m) -> Point:
    if space.backend == FINDIM:
        return Point(FINDIM, "simple", fs.socle_decomposition(space.algebra, m)[0][1])
    if space.backend == POLYLINE:
        return pl.phi(m)
    return gl.phi(m)


def inj_leq(space: SpaceHandle, x: Point, y: Point) -> bool:
    """x <= y: i^!E(x) != 0 for sigma[E(y)]."""
    check_point(space, x)
    check_point(space, y)
    if space.backend == FINDIM:
        s = fs.radical_simples(space.algebra).simples[x.data]
        return fs.sigma_member(space.algebra, s, injective_at(space, y))
    if space.backend == POLYLINE:
        return y.kind == "generic" or x == y
    if y.kind == "z":
        return True
    return x.kind == "y" and x.data <= y.data


def spec_representative(space: SpaceHandle, x: Point):
    """The natural candidate class for x: its tilde module (or k[x] for the generic points)."""
    if space.backend == FINDIM:
        return fs.radical_simples(space.algebra).simples[x.data]
    if space.backend == POLYLINE:
        return pl.PolyModule.free(space.p) if x.kind == "generic" else pl.PolyModule.cyclic(x.data)
    return gl.GradedModule.make(space.p, [0]) if x.kind == "z" else gl.GradedModule.simple(space.p, x.data)


@dataclass
class SpecReport:
    is_in_spec: bool | None = None
    phi: Point | None = None
    image_window: list = field(default_factory=list)
    injective: bool = True
    preorder_pairs: int = 0
    preorder_ok: bool = True


def spec_and_phi(space: SpaceHandle, m=None, window=None, extra=()) -> SpecReport:
    """Membership and Phi for m; the image of Phi on a window; injectivity and monotonicity.

    A point is hit when some Spec class maps to it.  Graded line: the only
    1-critical modules are the k[x](-a), none of which is in Spec, so z is
    never hit.
    """
    rep = SpecReport()
    if m is not None:
        rep.is_in_spec = is_in_spec(space, m)
        rep.phi = phi(space, m) if rep.is_in_spec else None
    classes = []
    for x in inj_points(space, window).points:
        cand = spec_representative(space, x)
        candidates = [cand]
        if space.backend == GRADED and x.kind == "z":
            candidates = [gl.GradedModule.make(space.p, [a]) for a in range(*(window or DEFAULT_INDEX_WINDOW))]
        hit = False
        for c in candidates:
            if is_in_spec(space, c):
                classes.append(c)
                hit = hit or phi(space, c) == x
        rep.image_window.append((x, hit))
    for c in extra:
        if not c.is_zero() and is_in_spec(space, c):
            classes.append(c)
    # injectivity: equivalent classes <-> equal images
    images = [_phi_member(space, c) for c in classes]
    below = [[sigma_member(space, c1, c2) for c2 in classes] for c1 in classes]
    for i, j in product(range(len(classes)), repeat=2):
        if (below[i][j] and below[j][i]) != (images[i] == images[j]):
            rep.injective = False
        if below[i][j]:
            rep.preorder_pairs += 1
            if not inj_leq(space, images[i], images[j]):
                rep.preorder_ok = False
    return rep


__all__ = [
    "InjPoints",
    "extend",
    "gabriel_member",
    "hom_to_point",
    "inj_leq",
    "inj_points",
    "is_in_spec",
    "is_integral",
    "is_topologically_irreducible",
    "largest_in",
    "localize",
    "member",
    "mori_check",
    "phi",
    "prime_ops",
    "restrict",
    "saturation_closure",
    "sigma_member",
    "spec_and_phi",
    "support",
    "supported_at",
    "tiny_test",
    "v_of",
    "weak_point",
    "x_red",
]
