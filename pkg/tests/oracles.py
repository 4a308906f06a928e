"""Brute-force oracles that share no code with the library.

Subspaces are represented as frozensets of all their vectors, which is only
viable for the tiny modules the tests use.
"""

from itertools import product


def act(v, mat, p):
    n = len(mat[0]) if mat else 0
    return tuple(sum(v[i] * mat[i][j] for i in range(len(v))) % p for j in range(n))


def add(u, v, p):
    return tuple((a + b) % p for a, b in zip(u, v))


def closure(vectors, n, p):
    """All F_p-combinations of the given vectors."""
    out = {tuple([0] * n)}
    for v in vectors:
        new = set(out)
        for w in out:
            cur = w
            for _ in range(p - 1):
                cur = add(cur, v, p)
                new.add(cur)
        out = new
    return frozenset(out)


def all_vectors(n, p):
    return [tuple(v) for v in product(range(p), repeat=n)]


def cyclic(v, action, p):
    n = len(v)
    return closure([act(v, m, p) for m in action], n, p)


def submodules(dim, action, p):
    """Every submodule, as sums of cyclic submodules closed to a fixed point."""
    cyc = {cyclic(v, action, p) for v in all_vectors(dim, p)}
    subs = set(cyc)
    frontier = set(cyc)
    while frontier:
        nxt = set()
        for a in frontier:
            for c in cyc:
                s = closure(list(a) + list(c), dim, p) if not c <= a else a
                if s not in subs:
                    nxt.add(s)
        subs |= nxt
        frontier = nxt
    return subs


def socle(dim, action, p):
    """Sum of the minimal nonzero cyclic submodules."""
    zero = tuple([0] * dim)
    cyc = {v: cyclic(v, action, p) for v in all_vectors(dim, p) if v != zero}
    minimal = [c for v, c in cyc.items() if all(cyc[w] == c for w in c if w != zero)]
    gens = [v for c in minimal for v in c]
    return closure(basis_of(gens, dim, p), dim, p)


def basis_of(vectors, n, p):
    """A greedy spanning subset."""
    picked, seen = [], {tuple([0] * n)}
    for v in vectors:
        if v not in seen:
            picked.append(v)
            seen = set(closure(picked, n, p))
    return picked


def is_intertwiner(t, src, dst, p):
    """v -> v t commutes with the two actions."""
    for a, b in zip(src, dst):
        for i in range(len(t)):
            lhs = act(tuple(a[i]), t, p)
            rhs = act(tuple(t[i]), b, p)
            if lhs != rhs:
                return False
    return True


def hom_count(src, dst, dim_src, dim_dst, p):
    """Number of module maps, by enumerating every matrix."""
    count = 0
    for flat in product(range(p), repeat=dim_src * dim_dst):
        t = [flat[i * dim_dst:(i + 1) * dim_dst] for i in range(dim_src)]
        if is_intertwiner(t, src, dst, p):
            count += 1
    return count
