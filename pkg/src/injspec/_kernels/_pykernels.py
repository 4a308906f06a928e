"""Pure-Python reference kernels (used when the compiled module is absent)."""

from itertools import product

IMPL = "python"


def _inverses(p):
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref(rows, ncols, p):
    """Reduced row echelon form over F_p.

    Returns ``(basis, pivots)`` where ``basis`` is a tuple of nonzero row
    tuples and ``pivots`` the pivot column of each row.
    """
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    inv = _inverses(p)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = inv[m[r][c]]
        row = [(x * s) % p for x in m[r]]
        m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(mi, row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(m[i]) for i in range(r)), tuple(pivots)


def _normalized_vectors(n, p):
    # nonzero vectors whose first nonzero entry is 1
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def cyclic_subspaces(actions, n, p):
    """Distinct subspaces ``span{v A : A in actions}`` over all nonzero v.

    Each result is a canonical rref basis; the list is sorted.
    """
    mats = [[list(row) for row in a] for a in actions]
    seen = set()
    for v in _normalized_vectors(n, p):
        support = [(i, x) for i, x in enumerate(v) if x]
        rows = []
        for a in mats:
            w = [0] * n
            for i, x in support:
                ai = a[i]
                for j in range(n):
                    if ai[j]:
                        w[j] += x * ai[j]
            rows.append(w)
        seen.add(rref(rows, n, p)[0])
    return sorted(seen)


def idempotents(mult, dim, p):
    """All elements e (coefficient tuples) with e*e == e, in product order."""
    terms = []
    for i in range(dim):
        for j in range(dim):
            c = mult[i][j]
            nz = [(k, c[k]) for k in range(dim) if c[k] % p]
            if nz:
                terms.append((i, j, nz))
    out = []
    for x in product(range(p), repeat=dim):
        sq = [0] * dim
        for i, j, nz in terms:
            xi = x[i]
            if xi:
                xj = x[j]
                if xj:
                    f = xi * xj
                    for k, c in nz:
                        sq[k] += f * c
        if all((sq[k] - x[k]) % p == 0 for k in range(dim)):
            out.append(x)
    return out
