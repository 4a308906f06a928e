# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free

IMPL = "cython"


cdef void _fill_inverses(int p, int* inv) noexcept nogil:
    cdef int a, b
    inv[0] = 0
    for a in range(1, p):
        for b in range(1, p):
            if (a * b) % p == 1:
                inv[a] = b
                break


cdef int _rref(int* m, int nrows, int ncols, int p, const int* inv, int* pivots) noexcept nogil:
    cdef int r = 0, c, i, j, piv, s, f, t
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                t = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = t
        s = inv[m[r * ncols + c]]
        for j in range(ncols):
            m[r * ncols + j] = (m[r * ncols + j] * s) % p
        for i in range(nrows):
            if i != r:
                f = m[i * ncols + c]
                if f != 0:
                    for j in range(ncols):
                        m[i * ncols + j] = (m[i * ncols + j] + (p - f) * m[r * ncols + j]) % p
        pivots[r] = c
        r += 1
    return r


def rref(rows, int ncols, int p):
    rows = list(rows)
    cdef int nrows = len(rows)
    cdef int i, j, rank
    if nrows == 0 or ncols == 0:
        return (), ()
    cdef int* m = <int*> malloc(nrows * ncols * sizeof(int))
    cdef int* pivots = <int*> malloc(nrows * sizeof(int))
    cdef int* inv = <int*> malloc(p * sizeof(int))
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                m[i * ncols + j] = (<int> row[j]) % p
                if m[i * ncols + j] < 0:
                    m[i * ncols + j] += p
        _fill_inverses(p, inv)
        rank = _rref(m, nrows, ncols, p, inv, pivots)
        basis = tuple(tuple(m[i * ncols + j] for j in range(ncols)) for i in range(rank))
        return basis, tuple(pivots[i] for i in range(rank))
    finally:
        free(m)
        free(pivots)
        free(inv)


def cyclic_subspaces(actions, int n, int p):
    cdef int g = len(actions)
    cdef int i, j, k, b, rank, lead, pos
    if n == 0:
        return []
    cdef int* a = <int*> malloc(g * n * n * sizeof(int))
    cdef int* v = <int*> malloc(n * sizeof(int))
    cdef int* m = <int*> malloc(g * n * sizeof(int))
    cdef int* pivots = <int*> malloc(g * sizeof(int))
    cdef int* inv = <int*> malloc(p * sizeof(int))
    seen = set()
    try:
        for b in range(g):
            for i in range(n):
                row = actions[b][i]
                for j in range(n):
                    a[(b * n + i) * n + j] = (<int> row[j]) % p
        _fill_inverses(p, inv)
        for lead in range(n):
            for i in range(n):
                v[i] = 0
            v[lead] = 1
            while True:
                for b in range(g):
                    for j in range(n):
                        m[b * n + j] = 0
                    for i in range(lead, n):
                        if v[i] != 0:
                            for j in range(n):
                                m[b * n + j] += v[i] * a[(b * n + i) * n + j]
                    for j in range(n):
                        m[b * n + j] %= p
                rank = _rref(m, g, n, p, inv, pivots)
                seen.add(tuple(tuple(m[i * n + j] for j in range(n)) for i in range(rank)))
                # odometer over positions lead+1 .. n-1
                pos = n - 1
                while pos > lead:
                    v[pos] += 1
                    if v[pos] < p:
                        break
                    v[pos] = 0
                    pos -= 1
                if pos == lead:
                    break
        return sorted(seen)
    finally:
        free(a)
        free(v)
        free(m)
        free(pivots)
        free(inv)


def idempotents(mult, int dim, int p):
    cdef int i, j, k, pos, ok
    cdef long f
    cdef int* c = <int*> malloc(dim * dim * dim * sizeof(int))
    cdef int* x = <int*> malloc(dim * sizeof(int))
    cdef long* sq = <long*> malloc(dim * sizeof(long))
    out = []
    try:
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    c[(i * dim + j) * dim + k] = (<int> mult[i][j][k]) % p
        for i in range(dim):
            x[i] = 0
        while True:
            for k in range(dim):
                sq[k] = 0
            for i in range(dim):
                if x[i] != 0:
                    for j in range(dim):
                        if x[j] != 0:
                            f = x[i] * x[j]
                            for k in range(dim):
                                sq[k] += f * c[(i * dim + j) * dim + k]
            ok = 1
            for k in range(dim):
                if (sq[k] - x[k]) % p != 0:
                    ok = 0
                    break
            if ok:
                out.append(tuple(x[k] for k in range(dim)))
            # odometer, last coordinate fastest (matches itertools.product)
            pos = dim - 1
            while pos >= 0:
                x[pos] += 1
                if x[pos] < p:
                    break
                x[pos] = 0
                pos -= 1
            if pos < 0:
                break
        return out
    finally:
        free(c)
        free(x)
        free(sq)
