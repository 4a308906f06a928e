"""Property suites over the built-in catalog.

Each suite returns a list of law records ``{"law", "instances", "passed",
"counterexample"}``; a law holds when every instance passes.  Sampling is
driven by ``random.Random(seed)`` and records are emitted in a fixed order,
so a run is reproducible from its seed.
"""

from __future__ import annotations

import random
from itertools import product

from . import catalog
from . import gradedline as gl
from . import polyline as pl
from . import spectrum as sp
from . import topology as tp
from .core.dimension import (
    critical_series,
    dimension_axiom_harness,
    is_critical,
    kdim,
    validate_critical_series,
)
from .core.types import (
    FINDIM,
    GRADED,
    KDIM0,
    KDIM1,
    POLYLINE,
    GabrielProduct,
    Intersect,
    Point,
    PointSet,
    Saturation,
    Sigma,
)
from .errors import InjSpecError
from .findim import structure as fs
from .findim.algebra import isomorphic, quotient_rep, submodule_rep, zero_rep

SUITES = ("union", "intersection", "hom", "endiso", "series", "thm614", "thm73", "phi",
          "roundtrip", "axioms")
PROBE_SHIFT = 64  # k[x](-a) with a beyond any window probes the point z


class _Law:
    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.passed = 0
        self.counterexample = None
        self.per_backend = {}

    def check(self, ok, what):
        if isinstance(what, dict) and "space" in what:
            b = catalog.space(what["space"]).backend
            self.per_backend[b] = self.per_backend.get(b, 0) + 1
        self.instances += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = what

    def record(self):
        return {"law": self.name, "instances": self.instances, "passed": self.passed,
                "per_backend": dict(sorted(self.per_backend.items())),
                "counterexample": self.counterexample}


def _label(m):
    return m.describe()


# -- probes: x is in V(Z) iff the probe module of x lies in Z ----------------------------------


def _probe(space, x: Point):
    if space.backend == FINDIM:
        return fs.radical_simples(space.algebra).simples[x.data]
    if space.backend == POLYLINE:
        return pl.PolyModule.free(space.p) if x.is_generic else pl.PolyModule.cyclic(x.data)
    if x.is_generic:
        return gl.GradedModule.make(space.p, [PROBE_SHIFT])
    return gl.GradedModule.simple(space.p, x.data)


def _pointwise(space, z, window):
    """V(Z) restricted to the window, decided by i^!E(x) (findim) or by probes."""
    pts = sp.inj_points(space, window).points
    out = set()
    for x in pts:
        if space.backend == FINDIM:
            e = sp.injective_at(space, x)
            hit = sp.largest_in(space, e, z)[0].dim > 0
        else:
            hit = sp.member(space, _probe(space, x), z)
        if hit:
            out.add(x.key)
    return out


def _window_keys(space, s: PointSet, window):
    return {x.key for x in sp.inj_points(space, window).points if s.contains(x)}


def _default_window(space, window):
    if space.backend == GRADED:
        return window or (-8, 8)
    if space.backend == POLYLINE:
        return 2
    return None


def _pairs(rng, mods, count, space=None):
    if space is not None and space.backend != FINDIM:
        count *= 3
    pairs = [(a, b) for a in range(len(mods)) for b in range(len(mods))]
    rng.shuffle(pairs)
    return pairs[:count]


# -- suites ------------------------------------------------------------------------------------


def suite_union(rng, window, per_space=24):
    """V(Z1 . Z2) = V(Z1) u V(Z2); Gabriel membership vs lattice search; decomposition along submodules; saturation."""
    union = _Law("union: V(Z1.Z2) = V(Z1) u V(Z2)")
    witness = _Law("gabriel membership agrees with a lattice search (findim)")
    decomp = _Law("V(sigma[M]) = V(sigma[N]) u V(sigma[M/N]) (findim, dim <= 4)")
    sat = _Law("V(Mod_Z X) = V(Z)")
    for name in catalog.all_space_names():
        space = catalog.space(name)
        win = _default_window(space, window)
        mods = catalog.modules(name)
        if space.backend == FINDIM and space.algebra.dim > 4:
            mods = [m for m in mods if m.dim <= 3]
        for i, j in _pairs(rng, mods, per_space, space):
            z1, z2 = Sigma((mods[i],)), Sigma((mods[j],))
            gp = GabrielProduct((z1, z2))
            expect = sp.v_of(space, z1) | sp.v_of(space, z2)
            what = {"space": name, "z1": _label(mods[i]), "z2": _label(mods[j])}
            union.check(sp.v_of(space, gp) == expect
                        and _pointwise(space, gp, win) == _window_keys(space, expect, win), what)
            sat.check(sp.v_of(space, Saturation(z1)) == sp.v_of(space, z1), what)
            if space.backend == FINDIM:
                for n in mods[:8]:
                    witness.check(sp.gabriel_member(space, n, z1, z2) == _gabriel_search(space, n, z1, z2),
                                  dict(what, n=_label(n)))
        if space.backend == FINDIM and name in catalog.SMALL and space.p == 2:
            for m in mods:
                vm = sp.support(space, m)
                for u in fs.submodule_lattice(m).elements:
                    sub = submodule_rep(m, u) if u else zero_rep(space.algebra)
                    decomp.check(vm == sp.support(space, sub) | sp.support(space, quotient_rep(m, u)),
                                 {"space": name, "m": _label(m), "sub_dim": len(u)})
    return [union, witness, decomp, sat]


def _gabriel_search(space, n, z1, z2):
    """Some lattice submodule B has B in z2 and n/B in z1."""
    for u in fs.submodule_lattice(n).elements:
        sub = submodule_rep(n, u) if u else zero_rep(space.algebra)
        if sp.member(space, sub, z2) and sp.member(space, quotient_rep(n, u), z1):
            return True
    return False


def _random_pointset(rng, backend, lo, hi):
    gen = rng.random() < 0.5
    base = rng.choice(["empty", "ray", "all"])
    ray = rng.randint(lo, hi) if base == "ray" else None
    plus = {rng.randint(lo, hi) for _ in range(rng.randint(0, 3))}
    minus = {rng.randint(lo, hi) for _ in range(rng.randint(0, 3))} - plus
    return PointSet.make(backend, gen, base, ray, plus, minus)


def suite_intersection(rng, window, per_space=24, triples=40):
    inter = _Law("intersection: V(Z1 n ... n Zn) = n V(Zj)")
    lattice = _Law("point sets form a distributive lattice (pointwise on a window)")
    closure = _Law("closure is extensive, idempotent and monotone")
    for name in catalog.all_space_names():
        space = catalog.space(name)
        win = _default_window(space, window)
        mods = catalog.modules(name)
        if space.backend == FINDIM and space.algebra.dim > 4:
            mods = [m for m in mods if m.dim <= 3]
        for i, j in _pairs(rng, mods, per_space, space):
            k = rng.randrange(len(mods))
            parts = tuple(Sigma((mods[t],)) for t in (i, j, k))
            z = Intersect(parts)
            expect = sp.v_of(space, parts[0]) & sp.v_of(space, parts[1]) & sp.v_of(space, parts[2])
            inter.check(sp.v_of(space, z) == expect
                        and _pointwise(space, z, win) == _window_keys(space, expect, win),
                        {"space": name, "parts": [_label(mods[t]) for t in (i, j, k)]})
    lo, hi = -16, 16
    keys = list(range(lo - 2, hi + 3))
    for _ in range(triples):
        a, b, c = (_random_pointset(rng, GRADED, lo, hi) for _ in range(3))

        def pts(s):
            return (s.has_generic, frozenset(t for t in keys if s.contains_label(t)))

        ok = (a | (b | c) == (a | b) | c and a & (b & c) == (a & b) & c
              and a | b == b | a and a & b == b & a
              and a | (a & b) == a and a & (a | b) == a
              and a & (b | c) == (a & b) | (a & c)
              and pts(a | b) == (pts(a)[0] or pts(b)[0], pts(a)[1] | pts(b)[1])
              and pts(a & b) == (pts(a)[0] and pts(b)[0], pts(a)[1] & pts(b)[1]))
        lattice.check(ok, {"a": str(a), "b": str(b), "c": str(c)})
    for name in ("polyline p=2", "graded p=2", "T2(F_2)"):
        space = catalog.space(name)
        sets = _catalog_sets(space)
        for s in sets:
            c = tp.closure(space, s)
            ok = s.issubset(c) and tp.closure(space, c) == c
            ok = ok and all(tp.closure(space, s).issubset(tp.closure(space, t))
                            for t in sets if s.issubset(t))
            closure.check(ok, {"space": name, "set": str(s)})
    return [inter, lattice, closure]


def _catalog_sets(space):
    out = [sp.support(space, m) for m in catalog.modules(space.name or "")] if space.backend == FINDIM else []
    if space.backend == POLYLINE:
        out = [sp.support(space, m) for m in catalog.poly_modules(space.p)]
        out += [PointSet.make(POLYLINE, True), PointSet.make(POLYLINE, False, "all")]
    if space.backend == GRADED:
        out = [sp.support(space, m) for m in catalog.graded_modules(space.p)]
        out += [PointSet.make(GRADED, True), PointSet.make(GRADED, False, "all")]
    out.append(PointSet.empty(space.backend))
    return out


def suite_hom(rng, window):
    law = _Law("support rule and Hom criterion agree")
    for name in catalog.all_space_names():
        space = catalog.space(name)
        if space.backend == GRADED:
            continue
        win = _default_window(space, window)
        for m in catalog.modules(name):
            for x in sp.inj_points(space, win).points:
                try:
                    r = sp.supported_at(space, m, x)
                    ok = r.by_support == r.by_hom
                except InjSpecError:
                    ok = False
                law.check(ok, {"space": name, "m": _label(m), "x": x.key})
    return [law]


def suite_endiso(rng, window):
    endo = _Law("End(E(x))/rad and End(tilde O_x) have equal dimension and are division rings")
    uniq = _Law("critical M in sigma[N] of equal dimension have isomorphic hulls")
    hull = _Law("socle(E(M)) is isomorphic to socle(M)")
    tiny = _Law("tiny test holds at every findim and affine-line point")
    for name in catalog.findim_names():
        space = catalog.space(name)
        a = space.algebra
        rs = fs.radical_simples(a)
        for j, e in enumerate(fs.indecomposable_injectives(a)):
            re, rt = fs.end_ring_analysis(e), fs.end_ring_analysis(rs.simples[j])
            top = re.dim - re.radical_dim
            endo.check(top == rt.dim and re.is_division and rt.is_division,
                       {"space": name, "point": j})
            tiny.check(sp.tiny_test(space, Point(FINDIM, "simple", j)), {"space": name, "point": j})
        mods = catalog.modules(name)
        crit = [m for m in mods if is_critical(space, m)]
        for m, n in product(crit, crit):
            if sp.sigma_member(space, m, n):
                hm, hn = fs.injective_hull(a, m).module, fs.injective_hull(a, n).module
                uniq.check(isomorphic(hm, hn), {"space": name, "m": _label(m), "n": _label(n)})
        if space.p == 2 and name in catalog.SMALL:
            for m in mods:
                h = fs.injective_hull(a, m)
                soc_e = submodule_rep(h.module, fs.socle_basis(a, h.module))
                soc_m = submodule_rep(m, fs.socle_basis(a, m))
                hull.check(isomorphic(soc_e, soc_m), {"space": name, "m": _label(m)})
    for p in (2, 3):
        space = catalog.space(f"polyline p={p}")
        for x in sp.inj_points(space, 2).points:
            tiny.check(sp.tiny_test(space, x), {"space": f"polyline p={p}", "point": x.key})
    return [endo, uniq, hull, tiny]


def suite_series(rng, window):
    law = _Law("two critical series have equal length and subisomorphic factors")
    for name in catalog.findim_names():
        space = catalog.space(name)
        for m in catalog.modules(name):
            try:
                rep = validate_critical_series(space, m, critical_series(space, m))
                ok = rep["valid"] and rep["length"] == rep["independent_length"]
            except InjSpecError:
                ok = False
            law.check(ok, {"space": name, "m": _label(m)})
    for name in ("polyline p=2", "polyline p=3", "graded p=2"):
        space = catalog.space(name)
        for m in catalog.modules(name):
            try:
                ok = validate_critical_series(space, m, critical_series(space, m))["valid"]
            except InjSpecError:
                ok = False
            law.check(ok, {"space": name, "m": _label(m)})
    space = catalog.space("polyline p=2")
    x = pl.Poly.x(2)
    m = pl.PolyModule(2, (x * (x + pl.Poly.one(2)),), 1)
    law.check(critical_series(space, m).dims == (KDIM0, KDIM0, KDIM1),
              {"space": "polyline p=2", "m": _label(m)})
    return [law]


def suite_irreducible_prime(rng, window):
    law = _Law("topologically irreducible iff R/rad is prime")
    for name in catalog.findim_names():
        space = catalog.space(name)
        irr, _ = sp.is_topologically_irreducible(space)
        red = sp.x_red(space).descriptor
        law.check(irr == fs.is_prime_ring(red), {"space": name, "irreducible": irr})
    return [law]


def suite_integral_prime(rng, window):
    law = _Law("reduced and integral iff R is prime")
    homeo = _Law("X and X_red have the same points")
    for name in catalog.findim_names():
        space = catalog.space(name)
        xr = sp.x_red(space)
        integral = sp.is_integral(space).integral
        law.check((xr.is_reduced and integral) == fs.is_prime_ring(space.algebra),
                  {"space": name, "reduced": xr.is_reduced, "integral": integral})
        homeo.check(xr.homeomorphism["same_points"] and xr.homeomorphism["discrete_both"],
                    {"space": name})
    return [law, homeo]


def suite_phi(rng, window):
    inj = _Law("Phi is injective on the window")
    order = _Law("Phi preserves the preorder")
    graded = _Law("graded line: every y_i is hit and z is not")
    for name in catalog.all_space_names():
        space = catalog.space(name)
        win = _default_window(space, window)
        rep = sp.spec_and_phi(space, None, win, catalog.modules(name))
        inj.check(rep.injective, {"space": name})
        order.check(rep.preorder_ok, {"space": name, "pairs": rep.preorder_pairs})
        if space.backend == GRADED:
            ok = all(hit == (x.kind == "y") for x, hit in rep.image_window)
            graded.check(ok, {"space": name, "window": list(win)})
    return [inj, order, graded]


def suite_roundtrip(rng, window):
    rt = _Law("(W|_Z)|^X = W for x in V(Z)")
    rt2 = _Law("(W|^X)|_Z = W for weak points of Z")
    injl = _Law("tilde O_x is injective inside W(x)")
    for name in catalog.findim_names(include_large=False):
        space = catalog.space(name)
        mods = catalog.modules(name)
        for m in mods:
            z = Sigma((m,))
            for x in sp.inj_points(space).points:
                if not sp.v_of(space, z).contains(x):
                    continue
                w = sp.weak_point(space, x)
                wz = sp.restrict(space, z, w)
                rt.check(sp.same_weak_point(sp.extend(space, wz), w),
                         {"space": name, "z": _label(m), "x": x.key})
                back = sp.restrict(space, z, sp.extend(space, wz))
                rt2.check(sp.same_weak_point(back, wz), {"space": name, "z": _label(m), "x": x.key})
        for x in sp.inj_points(space).points:
            injl.check(sp.tilde_is_injective_in_weak_point(space, x, mods), {"space": name, "x": x.key})
    return [rt, rt2, injl]


def suite_axioms(rng, window):
    law = _Law("dimension axioms (a)-(d)")
    crit = _Law("critical modules are homogeneous of their dimension")
    for name in catalog.all_space_names():
        space = catalog.space(name)
        mods = catalog.modules(name)
        if space.backend == FINDIM and space.algebra.dim > 4:
            mods = [m for m in mods if m.dim <= 3]
        rep = dimension_axiom_harness(space, list(mods))
        for inst in rep["instances"]:
            law.check(inst["pass"], dict(inst, space=name))
        for m in mods:
            if is_critical(space, m):
                crit.check(kdim(space, m) in (KDIM0, KDIM1), {"space": name, "m": _label(m)})
    return [law, crit]


_RUNNERS = {
    "union": suite_union, "intersection": suite_intersection, "hom": suite_hom,
    "endiso": suite_endiso, "series": suite_series, "thm614": suite_irreducible_prime,
    "thm73": suite_integral_prime, "phi": suite_phi, "roundtrip": suite_roundtrip, "axioms": suite_axioms,
}


def run(suite="all", seed=0, window=None) -> dict:
    names = SUITES if suite == "all" else (suite,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    for n in names:
        rng = random.Random(f"{seed}:{n}")
        for law in _RUNNERS[n](rng, tuple(window) if window else None):
            out.append(dict(law.record(), suite=n))
    return {
        "suite": suite, "seed": seed,
        "window": list(window) if window else None,
        "laws": out,
        "passed": all(r["passed"] == r["instances"] for r in out),
    }
