"""Smith normal form over F_p[x]."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DimensionMismatch
from .poly import Poly, _add, _divmod, _gcd, _monic, _mul, _sub


@dataclass(frozen=True)
class PolyMat:
    """Matrix over F_p[x]; rows index generators, columns index relations."""

    p: int
    nrows: int
    ncols: int
    entries: tuple  # tuple of row tuples of Poly

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise DimensionMismatch("entries do not match the declared shape")

    @classmethod
    def from_coeffs(cls, rows, p, nrows=None, ncols=None):
        """Build from nested coefficient lists (lowest degree first)."""
        entries = tuple(tuple(Poly(c, p) for c in r) for r in rows)
        if nrows is None:
            nrows = len(entries)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if nrows and not entries:
            entries = tuple(() for _ in range(nrows))
        return cls(p, nrows, ncols, entries)

    @classmethod
    def diagonal(cls, polys, p, nrows=None):
        n = len(polys)
        nrows = n if nrows is None else nrows
        entries = tuple(
            tuple(polys[j] if i == j else Poly.zero(p) for j in range(n)) for i in range(nrows)
        )
        return cls(p, nrows, n, entries)


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple  # monic nonunit Polys, d_1 | d_2 | ...
    rank_defect: int  # generators with no pivot, i.e. the free rank of the cokernel


def smith_normal_form(m: PolyMat) -> SmithForm:
    """Diagonalize by invertible row/column operations.

    The divisibility chain makes the output canonical: it depends only on
    the cokernel, not on the order of operations.
    """
    p = m.p
    a = [[e.coeffs for e in row] for row in m.entries]
    nr, nc = m.nrows, m.ncols
    diag = []
    t = 0
    while t < nr and t < nc:
        # pivot: nonzero entry of least degree in the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = a[i][j]
                if e and (best is None or len(e) < best[0]):
                    best = (len(e), i, j)
        if best is None:
            break
        _, i0, j0 = best
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            changed = False
            piv = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    q, r = _divmod(a[i][t], piv, p)
                    a[i] = [_sub(x, _mul(q, y, p), p) for x, y in zip(a[i], a[t])]
                    if r:
                        a[t], a[i] = a[i], a[t]
                        piv = a[t][t]
                        changed = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q, r = _divmod(a[t][j], piv, p)
                    for row in a:
                        row[j] = _sub(row[j], _mul(q, row[t], p), p)
                    if r:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        piv = a[t][t]
                        changed = True
            if changed:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] and _divmod(a[i][j], piv, p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [_add(x, y, p) for x, y in zip(a[t], a[bad])]
        diag.append(_monic(a[t][t], p))
        t += 1
    factors = tuple(Poly._raw(d, p) for d in diag if len(d) > 1)
    return SmithForm(factors, nr - len(diag))


def determinantal_gcd(m: PolyMat, k: int) -> Poly:
    """gcd of all k x k minors (monic); brute force, for small oracles."""
    from itertools import combinations

    p = m.p
    g = ()
    for rows in combinations(range(m.nrows), k):
        for cols in combinations(range(m.ncols), k):
            minor = _det([[m.entries[i][j].coeffs for j in cols] for i in rows], p)
            g = _gcd(g, minor, p) if g else _monic(minor, p)
    return Poly._raw(g, p)


def _det(a, p):
    n = len(a)
    if n == 0:
        return (1,)
    if n == 1:
        return a[0][0]
    total = ()
    for j in range(n):
        if not a[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in a[1:]]
        term = _mul(a[0][j], _det(sub, p), p)
        total = _sub(total, term, p) if j % 2 else _add(total, term, p)
    return total
