"""Finite-dimensional algebras by structure constants and their representations.

Modules are right modules in the row-vector convention: basis element
``e_b`` acts on ``v`` by ``v @ action[b]``, so ``action`` of a product is
the product of actions in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..caps import check_elements
from ..errors import DimensionMismatch, InvalidModule
from ..exactalg.linalg import (
    Fp,
    coords_in,
    hom_space,
    identity,
    inverse,
    lincomb,
    matmul,
    pivots_of,
    rref,
    vecmat,
    zeros,
)


@dataclass(frozen=True)
class Algebra:
    p: int
    dim: int
    mult: tuple  # mult[i][j] = coefficient tuple of e_i * e_j
    unit: tuple
    name: str | None = None

    def __post_init__(self):
        Fp(self.p)
        if len(self.mult) != self.dim or any(len(r) != self.dim for r in self.mult):
            raise DimensionMismatch("structure constants are not dim x dim x dim")
        if any(len(c) != self.dim for r in self.mult for c in r) or len(self.unit) != self.dim:
            raise DimensionMismatch("structure constants are not dim x dim x dim")
        check_elements(self.p, self.dim, "algebra")

    @classmethod
    def from_constants(cls, mult, unit, p, name=None):
        dim = len(unit)
        mult = tuple(tuple(tuple(x % p for x in c) for c in row) for row in mult)
        return cls(p, dim, mult, tuple(x % p for x in unit), name)

    def mul(self, x, y):
        p, n = self.p, self.dim
        acc = [0] * n
        for i, xi in enumerate(x):
            if xi:
                row = self.mult[i]
                for j, yj in enumerate(y):
                    if yj:
                        f = xi * yj
                        for k, c in enumerate(row[j]):
                            if c:
                                acc[k] += f * c
        return tuple(a % p for a in acc)

    def basis_vector(self, i):
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def elements(self):
        check_elements(self.p, self.dim, "element enumeration")
        return product(range(self.p), repeat=self.dim)

    def opposite(self) -> Algebra:
        mult = tuple(tuple(self.mult[j][i] for j in range(self.dim)) for i in range(self.dim))
        name = f"{self.name}^op" if self.name else None
        return Algebra(self.p, self.dim, mult, self.unit, name)

    def left_mult_matrix(self, x):
        """Matrix of y -> x*y in the row convention (row i = x*e_i)."""
        return tuple(self.mul(x, self.basis_vector(i)) for i in range(self.dim))

    def __str__(self):
        return self.name or f"Algebra(p={self.p}, dim={self.dim})"


def validate_algebra(a: Algebra) -> list:
    """Associativity on all basis triples and two-sided unit laws; [] means ok."""
    out = []
    e = [a.basis_vector(i) for i in range(a.dim)]
    for i, j, k in product(range(a.dim), repeat=3):
        left = a.mul(a.mult[i][j], e[k])
        right = a.mul(e[i], a.mult[j][k])
        if left != right:
            out.append({"law": "associativity", "triple": [i, j, k]})
    for i in range(a.dim):
        if a.mul(a.unit, e[i]) != e[i]:
            out.append({"law": "left unit", "index": i})
        if a.mul(e[i], a.unit) != e[i]:
            out.append({"law": "right unit", "index": i})
    return out


# -- catalog constructors ---------------------------------------------------------------


def matrix_unit_algebra(n, p, pattern=None, name=None) -> Algebra:
    """Span of matrix units e_ij, (i, j) in pattern, with the usual product."""
    if pattern is None:
        pattern = [(i, j) for i in range(n) for j in range(n)]
    pattern = sorted(pattern)
    index = {ij: t for t, ij in enumerate(pattern)}
    d = len(pattern)
    mult = []
    for (i, j) in pattern:
        row = []
        for (k, l) in pattern:
            c = [0] * d
            if j == k:
                c[index[(i, l)]] = 1
            row.append(tuple(c))
        mult.append(tuple(row))
    unit = tuple(1 if i == j else 0 for (i, j) in pattern)
    return Algebra(p, d, tuple(mult), unit, name)


def upper_triangular(n, p) -> Algebra:
    return matrix_unit_algebra(n, p, [(i, j) for i in range(n) for j in range(i, n)], f"T{n}(F_{p})")


def full_matrix(n, p) -> Algebra:
    return matrix_unit_algebra(n, p, None, f"M{n}(F_{p})")


def product_of_fields(copies, p) -> Algebra:
    mult = tuple(
        tuple(tuple(1 if (i == j == k) else 0 for k in range(copies)) for j in range(copies))
        for i in range(copies)
    )
    return Algebra(p, copies, mult, (1,) * copies, "x".join([f"F_{p}"] * copies))


def truncated_polynomial(modulus, p, name=None) -> Algebra:
    """F_p[t]/(f) on the monomial basis 1, t, ..., t^(d-1); f monic, lowest first."""
    from ..exactalg.poly import _mod

    f = tuple(c % p for c in modulus)
    d = len(f) - 1
    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            mono = (0,) * (i + j) + (1,)
            r = _mod(mono, f, p)
            row.append(tuple(r) + (0,) * (d - len(r)))
        mult.append(tuple(row))
    return Algebra(p, d, tuple(mult), (1,) + (0,) * (d - 1), name)


# -- representations ---------------------------------------------------------------------


@dataclass(frozen=True)
class Rep:
    p: int
    dim: int
    action: tuple  # one dim x dim matrix per algebra basis element

    backend = "findim"

    def __post_init__(self):
        for m in self.action:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise DimensionMismatch("action matrices must be dim x dim")

    @classmethod
    def from_matrices(cls, mats, p, dim=None):
        mats = tuple(tuple(tuple(x % p for x in r) for r in m) for m in mats)
        if dim is None:
            dim = len(mats[0]) if mats else 0
        return cls(p, dim, mats)

    @property
    def alg_dim(self):
        return len(self.action)

    def is_zero(self):
        return self.dim == 0

    def act(self, v, r):
        """v . r for an algebra element r given by coefficients."""
        return vecmat(v, element_action(self, r), self.p)

    def describe(self):
        return f"Rep(dim={self.dim})"

    def to_json(self):
        return {"dim": self.dim, "action": [[list(r) for r in m] for m in self.action]}


def zero_rep(a: Algebra) -> Rep:
    return Rep(a.p, 0, tuple(() for _ in range(a.dim)))


def element_action(m: Rep, r) -> tuple:
    return lincomb(r, m.action, m.p, m.dim, m.dim)


def check_rep(a: Algebra, m: Rep) -> list:
    """Violations of the module axioms; [] means ok."""
    if m.p != a.p or m.alg_dim != a.dim:
        return [{"law": "shape", "detail": "action count or characteristic differs from the algebra"}]
    out = []
    if m.dim and element_action(m, a.unit) != identity(m.dim):
        out.append({"law": "unit acts as identity"})
    for i, j in product(range(a.dim), repeat=2):
        lhs = matmul(m.action[i], m.action[j], m.p, m.dim)
        rhs = element_action(m, a.mult[i][j])
        if m.dim and lhs != rhs:
            out.append({"law": "multiplicativity", "pair": [i, j]})
    return out


def require_rep(a: Algebra, m: Rep) -> Rep:
    bad = check_rep(a, m)
    if bad:
        raise InvalidModule("action matrices do not define a module", violations=bad[:5])
    return m


def regular_rep(a: Algebra) -> Rep:
    action = tuple(
        tuple(a.mult[i][b] for i in range(a.dim)) for b in range(a.dim)
    )
    return Rep(a.p, a.dim, action)


def dualize(a: Algebra, m: Rep) -> tuple[Algebra, Rep]:
    """Vector-space dual: transposed actions, a right module over the opposite algebra."""
    action = tuple(tuple(tuple(row[i] for row in mat) for i in range(m.dim)) for mat in m.action)
    return a.opposite(), Rep(m.p, m.dim, action)


def direct_sum(*reps: Rep) -> Rep:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    p, g = reps[0].p, reps[0].alg_dim
    n = sum(r.dim for r in reps)
    action = []
    for b in range(g):
        rows = []
        off = 0
        for r in reps:
            for row in r.action[b]:
                rows.append((0,) * off + tuple(row) + (0,) * (n - off - r.dim))
            off += r.dim
        action.append(tuple(rows))
    return Rep(p, n, tuple(action))


def power(m: Rep, t: int) -> Rep:
    return direct_sum(*([m] * t))


def submodule_rep(m: Rep, basis) -> Rep:
    """The submodule spanned by an rref basis, in that basis."""
    basis = tuple(basis)
    piv = pivots_of(basis)
    action = []
    for mat in m.action:
        rows = []
        for v in basis:
            c = coords_in(basis, piv, vecmat(v, mat, m.p), m.p)
            if c is None:
                raise InvalidModule("subspace is not closed under the action")
            rows.append(c)
        action.append(tuple(rows))
    return Rep(m.p, len(basis), tuple(action))


def quotient_data(m: Rep, basis):
    """(quotient module, projection matrix dim m x dim quotient) for an rref basis."""
    from ..exactalg.linalg import reduce_mod

    basis = tuple(basis)
    piv = pivots_of(basis)
    free = [j for j in range(m.dim) if j not in set(piv)]

    def proj(v):
        w = reduce_mod(basis, piv, v, m.p)
        return tuple(w[j] for j in free)

    projection = tuple(proj(tuple(1 if i == j else 0 for j in range(m.dim))) for i in range(m.dim))
    action = []
    for mat in m.action:
        action.append(tuple(proj(mat[j]) for j in free))
    return Rep(m.p, len(free), tuple(action)), projection


def quotient_rep(m: Rep, basis) -> Rep:
    return quotient_data(m, basis)[0]


def subquotient(m: Rep, upper, lower) -> Rep:
    """upper / lower for rref bases lower <= upper <= m."""
    upper = tuple(upper)
    piv = pivots_of(upper)
    sub = submodule_rep(m, upper)
    inner = [coords_in(upper, piv, v, m.p) for v in lower]
    inner_basis = rref(inner, len(upper), m.p)[0] if inner else ()
    return quotient_rep(sub, inner_basis)


def homs(m: Rep, n: Rep) -> list:
    return hom_space(m.action, n.action, m.p, m.dim, n.dim)


def image_basis(t, ncols, p):
    return rref(t, ncols, p)[0]


def is_injective_map(t, ncols, p) -> bool:
    return len(rref(t, ncols, p)[0]) == len(t)


def find_hom(m: Rep, n: Rep, want: str):
    """Some hom m -> n that is ``injective``, ``surjective`` or ``bijective``; None if absent.

    Searches the hom space exhaustively under the element cap.
    """
    basis = homs(m, n)
    p = m.p
    if want in ("injective", "bijective") and m.dim > n.dim:
        return None
    if want in ("surjective", "bijective") and n.dim > m.dim:
        return None
    if m.dim == 0:
        if want == "surjective" and n.dim:
            return None
        return zeros(0, n.dim)
    if not basis:
        return None
    check_elements(p, len(basis), "hom-space search")
    target = m.dim if want == "injective" else n.dim
    for coeffs in product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        t = lincomb(coeffs, basis, p, m.dim, n.dim)
        r = len(rref(t, n.dim, p)[0])
        if r == target and (want != "bijective" or m.dim == n.dim):
            return t
    return None


def isomorphic(m: Rep, n: Rep) -> bool:
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    return find_hom(m, n, "bijective") is not None


def embeds(m: Rep, n: Rep) -> bool:
    """m is isomorphic to a submodule of n."""
    return m.dim == 0 or find_hom(m, n, "injective") is not None


def is_invertible(t, p) -> bool:
    return inverse(t, p) is not None
