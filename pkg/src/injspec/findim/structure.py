"""Lattices, radicals, simples, hulls, traces and annihilators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import pairwise, product

from .. import _kernels
from ..caps import check_elements, check_lattice
from ..core.types import DivisionRingDescriptor
from ..errors import InternalAssertionFailed, ZeroModule
from ..exactalg.linalg import (
    coords_in,
    identity,
    left_nullspace,
    lincomb,
    matmul,
    pivots_of,
    reduce_mod,
    rref,
    solve,
    span,
    subspace_contains,
    subspace_intersect,
    vecmat,
)
from .algebra import (
    Algebra,
    Rep,
    direct_sum,
    dualize,
    element_action,
    homs,
    isomorphic,
    regular_rep,
    submodule_rep,
    subquotient,
)

# -- submodule lattices ----------------------------------------------------------------


@dataclass(frozen=True)
class SubmoduleLattice:
    p: int
    n: int
    elements: tuple  # canonical rref bases, sorted by (dimension, basis)

    def __len__(self):
        return len(self.elements)

    @property
    def zero(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    def contains(self, big, small) -> bool:
        return subspace_contains(big, small, self.n, self.p)

    def maximals(self):
        """Maximal proper submodules."""
        proper = [u for u in self.elements if len(u) < self.n]
        return [u for u in proper
                if not any(len(v) > len(u) and self.contains(v, u) for v in proper)]

    def minimals(self):
        """Minimal nonzero submodules (the atoms)."""
        nonzero = [u for u in self.elements if u]
        return [u for u in nonzero
                if not any(len(v) < len(u) and self.contains(u, v) for v in nonzero)]

    def below(self, u):
        return [v for v in self.elements if len(v) <= len(u) and self.contains(u, v)]


def _key(basis):
    return (len(basis), basis)


def submodule_lattice(m: Rep) -> SubmoduleLattice:
    """All submodules: cyclic submodules closed under sums."""
    n, p = m.dim, m.p
    if n == 0:
        return SubmoduleLattice(p, 0, ((),))
    check_elements(p, n, "submodule enumeration")
    return _lattice_cached(m)


@lru_cache(maxsize=512)
def _lattice_cached(m: Rep) -> SubmoduleLattice:
    n, p = m.dim, m.p
    cyclic = _kernels.cyclic_subspaces(m.action, n, p)
    found = {()}
    for c in cyclic:
        if c in found:
            continue
        new = set()
        for u in found:
            s = span(u + c, n, p)
            if s not in found:
                new.add(s)
        found |= new
        check_lattice(len(found))
    return SubmoduleLattice(p, n, tuple(sorted(found, key=_key)))


def composition_chain(m: Rep, strategy: str = "bottom") -> list:
    """A maximal chain 0 = U_0 < ... < U_r = m of lattice elements.

    ``bottom`` grows from 0 by the smallest covering element; ``top``
    descends from m by the largest maximal subelement.  The two choices are
    independent heuristics used to cross-check each other.
    """
    lat = submodule_lattice(m)
    if strategy == "bottom":
        chain = [lat.zero]
        while len(chain[-1]) < m.dim:
            cur = chain[-1]
            nxt = min((u for u in lat.elements if len(u) > len(cur) and lat.contains(u, cur)), key=_key)
            chain.append(nxt)
        return chain
    chain = [lat.top]
    while chain[-1]:
        cur = chain[-1]
        nxt = max((u for u in lat.elements if len(u) < len(cur) and lat.contains(cur, u)), key=_key)
        chain.append(nxt)
    return chain[::-1]


def composition_factors(m: Rep, strategy: str = "bottom") -> list:
    chain = composition_chain(m, strategy)
    return [subquotient(m, hi, lo) for lo, hi in pairwise(chain)]


# -- radical and simples -------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalSimples:
    radical: tuple  # rref basis of the Jacobson radical inside R
    simples: tuple  # pairwise non-isomorphic simple Reps, canonical order
    annihilators: tuple  # ann(S_j), the sort key


@lru_cache(maxsize=128)
def radical_simples(a: Algebra) -> RadicalSimples:
    reg = regular_rep(a)
    lat = submodule_lattice(reg)
    rad = lat.top
    for u in lat.maximals():
        rad = subspace_intersect(rad, u, a.dim, a.p)
    simples = []
    for s in composition_factors(reg):
        if not any(s.dim == t.dim and homs(s, t) for t in simples):
            simples.append(s)
    keyed = sorted(((annihilator(a, s), s) for s in simples), key=lambda t: t[0])
    return RadicalSimples(rad, tuple(s for _, s in keyed), tuple(k for k, _ in keyed))


def simple_index(a: Algebra, s: Rep) -> int:
    for j, t in enumerate(radical_simples(a).simples):
        if t.dim == s.dim and homs(s, t):
            return j
    raise InternalAssertionFailed("module is not isomorphic to a known simple")


def quotient_algebra(a: Algebra, ideal) -> tuple[Algebra, tuple]:
    """R / I for a two-sided ideal basis (rref); basis = non-pivot coordinates."""
    piv = pivots_of(ideal)
    keep = [j for j in range(a.dim) if j not in set(piv)]

    def proj(v):
        w = reduce_mod(ideal, piv, v, a.p)
        return tuple(w[j] for j in keep)

    mult = tuple(tuple(proj(a.mult[i][j]) for j in keep) for i in keep)
    unit = proj(a.unit)
    name = f"{a.name}/rad" if a.name else None
    return Algebra(a.p, len(keep), mult, unit, name), tuple(keep)


# -- idempotents, projectives, injectives ---------------------------------------------------


@lru_cache(maxsize=128)
def primitive_idempotents(a: Algebra) -> tuple:
    """Orthogonal primitive idempotents summing to 1, split greedily."""
    check_elements(a.p, a.dim, "idempotent enumeration")
    idem = [e for e in _kernels.idempotents(a.mult, a.dim, a.p) if any(e)]
    work, out = [a.unit], []
    while work:
        e = work.pop(0)
        f = next((f for f in idem if f != e and a.mul(e, f) == f and a.mul(f, e) == f), None)
        if f is None:
            out.append(e)
        else:
            rest = tuple((x - y) % a.p for x, y in zip(e, f))
            work[0:0] = [f, rest]
    return tuple(out)


def projective_at(a: Algebra, e) -> Rep:
    """The right ideal eR as a module."""
    rows = [a.mul(e, a.basis_vector(b)) for b in range(a.dim)]
    return submodule_rep(regular_rep(a), span(rows, a.dim, a.p))


def indecomposable_projectives(a: Algebra) -> list:
    return [projective_at(a, e) for e in primitive_idempotents(a)]


@lru_cache(maxsize=128)
def indecomposable_injectives(a: Algebra) -> tuple:
    """E(S_j) for each simple S_j, in simple order: duals of projectives of R^op."""
    opp = a.opposite()
    found = {}
    for e in primitive_idempotents(opp):
        _, d = dualize(opp, projective_at(opp, e))
        soc = socle_basis(a, d)
        j = simple_index(a, submodule_rep(d, soc))
        found.setdefault(j, d)
    n = len(radical_simples(a).simples)
    if sorted(found) != list(range(n)):
        raise InternalAssertionFailed("some simple has no indecomposable injective")
    return tuple(found[j] for j in range(n))


# -- socle and hulls ------------------------------------------------------------------------


def socle_basis(a: Algebra, m: Rep) -> tuple:
    """{v : v x = 0 for x in rad R}."""
    rad = radical_simples(a).radical
    if not rad:
        return identity(m.dim)
    blocks = [element_action(m, x) for x in rad]
    wide = tuple(tuple(x for blk in blocks for x in blk[i]) for i in range(m.dim))
    kern = left_nullspace(wide, m.dim * len(blocks), m.p)
    return span(kern, m.dim, m.p)


def socle_decomposition(a: Algebra, m: Rep) -> list:
    """Simple summands of the socle: list of (rref basis in m coords, simple index)."""
    soc = socle_basis(a, m)
    srep = submodule_rep(m, soc)
    lat = submodule_lattice(srep)
    acc, out = (), []
    for atom in lat.minimals():
        if len(acc) == len(soc):
            break
        if subspace_intersect(acc, atom, len(soc), m.p):
            continue
        acc = span(acc + atom, len(soc), m.p)
        basis = span([vecmat(c, soc, m.p) for c in atom], m.dim, m.p)
        out.append((basis, simple_index(a, submodule_rep(m, basis))))
    return out


def socle_multiplicities(a: Algebra, m: Rep) -> tuple:
    counts = [0] * len(radical_simples(a).simples)
    for _, j in socle_decomposition(a, m):
        counts[j] += 1
    return tuple(counts)


@dataclass(frozen=True)
class Hull:
    module: Rep
    embedding: tuple  # dim m x dim E, injective
    summands: tuple  # simple index of each indecomposable summand


@lru_cache(maxsize=1024)
def injective_hull(a: Algebra, m: Rep) -> Hull:
    if m.dim == 0:
        raise ZeroModule("the zero module has no indecomposable hull summands")
    p = m.p
    inj = indecomposable_injectives(a)
    parts = socle_decomposition(a, m)
    blocks = [inj[j] for _, j in parts]
    e = direct_sum(*blocks)
    # socle embedding, summand by summand
    src_rows, img_rows = [], []
    off = 0
    for (basis, j), blk in zip(parts, blocks):
        psi = homs(submodule_rep(m, basis), blk)[0]
        for v, w in zip(basis, psi):
            src_rows.append(v)
            img_rows.append((0,) * off + tuple(w) + (0,) * (e.dim - off - blk.dim))
        off += blk.dim
    # extend along m: T = sum lambda_k H_k with v_r T = image_r
    hb = homs(m, e)
    eqs, rhs = [], []
    for v, w in zip(src_rows, img_rows):
        images = [vecmat(v, h, p) for h in hb]
        for t in range(e.dim):
            eqs.append(tuple(img[t] for img in images))
            rhs.append(w[t])
    lam = solve(tuple(eqs), len(hb), tuple(rhs), p)
    if lam is None:
        raise InternalAssertionFailed("socle embedding does not extend to the module")
    t = lincomb(lam, hb, p, m.dim, e.dim)
    if len(rref(t, e.dim, p)[0]) != m.dim:
        raise InternalAssertionFailed("hull extension has a kernel")
    return Hull(e, t, tuple(j for _, j in parts))


# -- traces and support --------------------------------------------------------------------


def trace(gen: Rep, target: Rep) -> tuple:
    """Sum of the images of all homs gen -> target."""
    rows = [r for h in homs(gen, target) for r in h]
    return span(rows, target.dim, target.p)


def support_submodule(a: Algebra, gen: Rep, target: Rep) -> tuple:
    """i^!(target) for Z = sigma[gen]: target meets trace(gen, E(target))."""
    if target.dim == 0:
        return ()
    hull = injective_hull(a, target)
    tr = trace(gen, hull.module)
    piv = pivots_of(tr)
    reduced = tuple(reduce_mod(tr, piv, row, target.p) for row in hull.embedding)
    kern = left_nullspace(reduced, hull.module.dim, target.p)
    return span(kern, target.dim, target.p)


def trace_and_support(a: Algebra, gen: Rep, target: Rep):
    return trace(gen, target), support_submodule(a, gen, target)


def sigma_member(a: Algebra, n: Rep, m: Rep) -> bool:
    """n lies in sigma[m]."""
    if n.dim == 0:
        return True
    if m.dim == 0:
        return False
    return len(support_submodule(a, m, n)) == n.dim


# -- annihilators and ring predicates -------------------------------------------------------


def ann_of_subspace(a: Algebra, m: Rep, rows) -> tuple:
    """{r : w r = 0 for every w in rows}."""
    rows = tuple(rows)
    if not rows:
        return identity(a.dim)
    mat = tuple(tuple(x for w in rows for x in vecmat(w, m.action[b], m.p)) for b in range(a.dim))
    return span(left_nullspace(mat, len(rows) * m.dim, m.p), a.dim, a.p)


def annihilator(a: Algebra, m: Rep) -> tuple:
    return ann_of_subspace(a, m, identity(m.dim))


def cyclic_basis(m: Rep, v) -> tuple:
    return span([vecmat(v, mat, m.p) for mat in m.action], m.dim, m.p)


def element_ann(a: Algebra, m: Rep, v) -> tuple:
    """Annihilator of the cyclic submodule vR."""
    return ann_of_subspace(a, m, cyclic_basis(m, v))


def _normalized(n, p):
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def prime_ring_witness(a: Algebra):
    """None if R is prime, else a pair (x, y) of nonzero elements with xRy = 0."""
    check_elements(a.p, a.dim, "prime test")
    e = [a.basis_vector(i) for i in range(a.dim)]
    for x in _normalized(a.dim, a.p):
        u = [a.mul(x, eb) for eb in e]
        rows = tuple(tuple(c for ub in u for c in a.mul(ub, ej)) for ej in e)
        kern = left_nullspace(rows, a.dim * a.dim, a.p)
        if kern:
            return x, kern[0]
    return None


def is_prime_ring(a: Algebra) -> bool:
    return prime_ring_witness(a) is None


def is_division_algebra(a: Algebra) -> bool:
    """Every nonzero element has an invertible left multiplication."""
    check_elements(a.p, a.dim, "division test")
    for x in _normalized(a.dim, a.p):
        if len(rref(a.left_mult_matrix(x), a.dim, a.p)[0]) < a.dim:
            return False
    return True


# -- endomorphism rings ---------------------------------------------------------------------


def hom_algebra(m: Rep) -> Algebra:
    """End(m) with basis the rref of the flattened hom space; product = composition order."""
    n, p = m.dim, m.p
    flat = [tuple(x for r in h for x in r) for h in homs(m, m)]
    basis, piv = rref(flat, n * n, p)
    mats = [tuple(tuple(b[i * n:(i + 1) * n]) for i in range(n)) for b in basis]
    d = len(mats)
    check_elements(p, d, "endomorphism ring")

    def coords(mat):
        c = coords_in(basis, piv, tuple(x for r in mat for x in r), p)
        if c is None:
            raise InternalAssertionFailed("hom space not closed under composition")
        return c

    mult = tuple(tuple(coords(matmul(mats[i], mats[j], p, n)) for j in range(d)) for i in range(d))
    return Algebra(p, d, mult, coords(identity(n)), "End")


@dataclass(frozen=True)
class EndRingReport:
    dim: int
    radical_dim: int
    is_division: bool
    descriptor: DivisionRingDescriptor


@lru_cache(maxsize=1024)
def end_ring_analysis(m: Rep) -> EndRingReport:
    if m.dim == 0:
        raise ZeroModule("End of the zero module")
    end = hom_algebra(m)
    rad = radical_simples(end).radical
    top, _ = quotient_algebra(end, rad)
    division = is_division_algebra(top)
    if division:
        desc = DivisionRingDescriptor.finite_field(m.p, top.dim)
    else:
        desc = DivisionRingDescriptor("end_ring", m.p, dim=end.dim, is_division=False)
    return EndRingReport(end.dim, len(rad), division, desc)


__all__ = [
    "EndRingReport",
    "Hull",
    "RadicalSimples",
    "SubmoduleLattice",
    "ann_of_subspace",
    "annihilator",
    "composition_chain",
    "composition_factors",
    "cyclic_basis",
    "element_ann",
    "end_ring_analysis",
    "hom_algebra",
    "indecomposable_injectives",
    "indecomposable_projectives",
    "injective_hull",
    "is_division_algebra",
    "is_prime_ring",
    "isomorphic",
    "prime_ring_witness",
    "primitive_idempotents",
    "projective_at",
    "quotient_algebra",
    "radical_simples",
    "sigma_member",
    "simple_index",
    "socle_basis",
    "socle_decomposition",
    "socle_multiplicities",
    "submodule_lattice",
    "support_submodule",
    "trace",
    "trace_and_support",
]
