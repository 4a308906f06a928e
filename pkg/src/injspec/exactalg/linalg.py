"""Dense linear algebra over prime fields F_p.

Vectors are tuples of ints in ``[0, p)``; matrices are tuples of row
tuples. Row-vector convention throughout: a matrix ``A`` acts on a row
vector ``v`` as ``v @ A``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .. import _kernels
from ..errors import DimensionMismatch

Vec = tuple
Rows = tuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Fp:
    """The prime field F_p (2 <= p <= 97)."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= 97 and is_prime(self.p)):
            raise ValueError(f"characteristic must be a prime in [2, 97], got {self.p}")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)


@dataclass(frozen=True)
class Mat:
    """Row-major matrix over F_p."""

    p: int
    nrows: int
    ncols: int
    rows: Rows

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("row data does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> Mat:
        rows = tuple(tuple(x % p for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(p, len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int, p: int) -> Mat:
        return cls(p, n, n, identity(n))

    @classmethod
    def zero(cls, nrows: int, ncols: int, p: int) -> Mat:
        return cls(p, nrows, ncols, zeros(nrows, ncols))

    def transpose(self) -> Mat:
        return Mat(self.p, self.ncols, self.nrows, transpose(self.rows, self.ncols))

    def __matmul__(self, other: Mat) -> Mat:
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        return Mat(self.p, self.nrows, other.ncols, matmul(self.rows, other.rows, self.p, other.ncols))


@dataclass(frozen=True)
class RankBasis:
    rank: int
    row_space_basis: Mat
    kernel_basis: Mat  # columns span the right kernel


def identity(n: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(nrows: int, ncols: int) -> Rows:
    return tuple((0,) * ncols for _ in range(nrows))


def transpose(rows: Rows, ncols: int) -> Rows:
    return tuple(tuple(r[j] for r in rows) for j in range(ncols))


def matmul(a: Rows, b: Rows, p: int, ncols_b: int | None = None) -> Rows:
    if ncols_b is None:
        ncols_b = len(b[0]) if b else 0
    out = []
    for r in a:
        acc = [0] * ncols_b
        for x, brow in zip(r, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(v % p for v in acc))
    return tuple(out)


def vecmat(v: Vec, a: Rows, p: int) -> Vec:
    n = len(a[0]) if a else 0
    acc = [0] * n
    for x, arow in zip(v, a):
        if x:
            for j, y in enumerate(arow):
                if y:
                    acc[j] += x * y
    return tuple(t % p for t in acc)


def mat_add(a: Rows, b: Rows, p: int) -> Rows:
    return tuple(tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Rows, s: int, p: int) -> Rows:
    return tuple(tuple((x * s) % p for x in r) for r in a)


def lincomb(coeffs: Sequence[int], mats: Sequence[Rows], p: int, nrows: int, ncols: int) -> Rows:
    acc = [[0] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if c:
            for i, r in enumerate(m):
                ai = acc[i]
                for j, x in enumerate(r):
                    if x:
                        ai[j] += c * x
    return tuple(tuple(x % p for x in r) for r in acc)


def is_zero(rows: Rows) -> bool:
    return not any(any(r) for r in rows)


def rref(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[Rows, tuple]:
    """Canonical reduced echelon basis of the row space and its pivots."""
    return _kernels.rref(rows, ncols, p)


def span(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Rows:
    return _kernels.rref(rows, ncols, p)[0]


def rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(_kernels.rref(rows, ncols, p)[0])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Rows:
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    basis, pivots = _kernels.rref(rows, ncols, p)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [0] * ncols
        x[free] = 1
        for r, pc in zip(basis, pivots):
            x[pc] = (-r[free]) % p
        out.append(tuple(x))
    return tuple(out)


def left_nullspace(rows: Rows, ncols: int, p: int) -> Rows:
    """Basis of {y : y A = 0} for A with the given rows."""
    return nullspace(transpose(rows, ncols), len(rows), p)


def solve(rows: Rows, ncols: int, rhs: Vec, p: int) -> Vec | None:
    """One solution x of A x = rhs, or None."""
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    basis, pivots = _kernels.rref(aug, ncols + 1, p)
    if pivots and pivots[-1] == ncols:
        return None
    x = [0] * ncols
    for r, pc in zip(basis, pivots):
        x[pc] = r[ncols]
    return tuple(x)


def coords_in(basis: Rows, pivots: tuple, v: Vec, p: int) -> Vec | None:
    """Coordinates of v in an rref basis, or None when v is not in the span."""
    coeffs = tuple(v[pc] % p for pc in pivots)
    w = list(v)
    for c, r in zip(coeffs, basis):
        if c:
            for j, x in enumerate(r):
                if x:
                    w[j] -= c * x
    if any(x % p for x in w):
        return None
    return coeffs


def reduce_mod(basis: Rows, pivots: tuple, v: Vec, p: int) -> Vec:
    """v minus its projection onto the rref basis along pivot coordinates."""
    w = [x % p for x in v]
    for r, pc in zip(basis, pivots):
        c = w[pc]
        if c:
            for j, x in enumerate(r):
                if x:
                    w[j] = (w[j] - c * x) % p
    return tuple(w)


def pivots_of(basis: Rows) -> tuple:
    out = []
    for r in basis:
        for j, x in enumerate(r):
            if x:
                out.append(j)
                break
    return tuple(out)


def inverse(a: Rows, p: int) -> Rows | None:
    n = len(a)
    aug = [tuple(r) + e for r, e in zip(a, identity(n))]
    basis, pivots = _kernels.rref(aug, 2 * n, p)
    if len(basis) < n or pivots[n - 1] != n - 1:
        return None
    return tuple(r[n:] for r in basis)


# -- public operations --------------------------------------------------------


def rank_basis(m: Mat) -> RankBasis:
    basis, _ = _kernels.rref(m.rows, m.ncols, m.p)
    kern = nullspace(m.rows, m.ncols, m.p)
    row_space = Mat(m.p, len(basis), m.ncols, basis)
    kernel = Mat(m.p, m.ncols, len(kern), transpose(kern, m.ncols) if kern else tuple(() for _ in range(m.ncols)))
    return RankBasis(len(basis), row_space, kernel)


def _check_ambient(a: Mat, b: Mat):
    if a.ncols != b.ncols:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ncols} vs {b.ncols}")
    if a.p != b.p:
        raise DimensionMismatch(f"characteristics differ: {a.p} vs {b.p}")


def subspace_sum(a: Rows, b: Rows, n: int, p: int) -> Rows:
    return span(tuple(a) + tuple(b), n, p)


def subspace_intersect(a: Rows, b: Rows, n: int, p: int) -> Rows:
    if not a or not b:
        return ()
    # (x, y) with x A - y B = 0, i.e. left kernel of the stacked system
    stacked = tuple(a) + tuple(tuple((-x) % p for x in r) for r in b)
    sols = left_nullspace(stacked, n, p)
    k = len(a)
    return span([vecmat(s[:k], a, p) for s in sols], n, p)


def subspace_contains(a: Rows, b: Rows, n: int, p: int) -> bool:
    """True when the row space of b lies inside the row space of a."""
    return rank(tuple(a) + tuple(b), n, p) == rank(a, n, p)


def subspace_ops(a: Mat, b: Mat, which: str):
    _check_ambient(a, b)
    n, p = a.ncols, a.p
    if which == "sum":
        rows = subspace_sum(a.rows, b.rows, n, p)
    elif which == "intersect":
        rows = subspace_intersect(a.rows, b.rows, n, p)
    elif which == "contains":
        return subspace_contains(a.rows, b.rows, n, p)
    elif which == "equal":
        return span(a.rows, n, p) == span(b.rows, n, p)
    else:
        raise ValueError(f"unknown subspace operation {which!r}")
    return Mat(p, len(rows), n, rows)


def hom_space(action_a: Sequence[Rows], action_b: Sequence[Rows], p: int,
              dim_a: int | None = None, dim_b: int | None = None) -> list[Rows]:
    """Basis of intertwiners T (dim_a x dim_b) with A_i T = T B_i for all i.

    With the row-vector convention a module map is ``v -> v T``; the
    intertwining condition ``f(v r) = f(v) r`` reads ``A_r T = T B_r``.
    """
    if len(action_a) != len(action_b):
        raise DimensionMismatch("action lists have different lengths")
    if dim_a is None:
        dim_a = len(action_a[0]) if action_a else 0
    if dim_b is None:
        dim_b = len(action_b[0]) if action_b else 0
    for a in action_a:
        if len(a) != dim_a or any(len(r) != dim_a for r in a):
            raise DimensionMismatch("action matrices of the source are not square of its dimension")
    for b in action_b:
        if len(b) != dim_b or any(len(r) != dim_b for r in b):
            raise DimensionMismatch("action matrices of the target are not square of its dimension")
    nvars = dim_a * dim_b
    if nvars == 0:
        return []
    eqs = []
    for a, b in zip(action_a, action_b):
        # (A T - T B)_{jk} = sum_l A_{jl} t_{lk} - sum_l t_{jl} B_{lk}
        for j in range(dim_a):
            for k in range(dim_b):
                row = [0] * nvars
                for l in range(dim_a):
                    if a[j][l]:
                        row[l * dim_b + k] += a[j][l]
                for l in range(dim_b):
                    if b[l][k]:
                        row[j * dim_b + l] -= b[l][k]
                if any(row):
                    eqs.append(row)
    sols = nullspace(eqs, nvars, p)
    return [tuple(tuple(s[j * dim_b:(j + 1) * dim_b]) for j in range(dim_a)) for s in sols]
