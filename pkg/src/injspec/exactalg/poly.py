"""Univariate polynomials over F_p and their factorization.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial has the empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import random
import re
from functools import total_ordering
from itertools import product

from ..errors import ZeroPolynomial

EDF_SEED = 0x5EED


# -- coefficient-tuple primitives ---------------------------------------------


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim([v % p for v in out])


def _scale(a, s, p):
    s %= p
    if not s:
        return ()
    return tuple((x * s) % p for x in a)


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = (r[k + db] * inv) % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                if y:
                    r[k + j] = (r[k + j] - c * y) % p
    return _trim(q), _trim(r[:db])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    return _scale(a, pow(a[-1], p - 2, p), p)


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(a, e, m, p):
    result = (1,)
    base = _mod(a, m, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _mod(_mul(base, base, p), m, p)
    return result


def _deriv(a, p):
    return _trim([(i * a[i]) % p for i in range(1, len(a))])


def _pth_root(a, p):
    # valid when a' = 0: a(x) = b(x^p) and Frobenius is the identity on F_p
    return _trim([a[i] for i in range(0, len(a), p)])


# -- Poly ------------------------------------------------------------------------


@total_ordering
class Poly:
    """Immutable polynomial over F_p."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _trim([c % p for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs, p):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, p):
        return cls._raw((0, 1), p)

    @classmethod
    def one(cls, p):
        return cls._raw((1,), p)

    @classmethod
    def zero(cls, p):
        return cls._raw((), p)

    @classmethod
    def monomial(cls, e, p, c=1):
        return cls((0,) * e + (c,), p)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_unit(self):
        return len(self.coeffs) == 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        return Poly._raw(_monic(self.coeffs, self.p), self.p)

    def _check(self, other):
        if isinstance(other, int):
            return Poly((other,), self.p)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"characteristics differ: {self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly._raw(_add(self.coeffs, other.coeffs, self.p), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly._raw(_sub(self.coeffs, other.coeffs, self.p), self.p)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Poly._raw(_scale(self.coeffs, -1, self.p), self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly._raw(_scale(self.coeffs, other, self.p), self.p)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly._raw(_mul(self.coeffs, other.coeffs, self.p), self.p)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.p)
        return Poly._raw(q, self.p), Poly._raw(r, self.p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        result = Poly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divides(self, other):
        return (other % self).is_zero()

    def derivative(self):
        return Poly._raw(_deriv(self.coeffs, self.p), self.p)

    def __call__(self, a):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def __eq__(self, other):
        return isinstance(other, Poly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "x" if e == 1 else f"x^{e}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({str(self)!r}, p={self.p})"

    def to_json(self):
        return list(self.coeffs)


_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse ``"x^2+2x+1"`` style text (``-`` allowed) into a Poly."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("-", "+-")
    coeffs = {}
    for term in s.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
    top = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(top + 1)], p)


def gcd(a: Poly, b: Poly) -> Poly:
    return Poly._raw(_gcd(a.coeffs, b.coeffs, a.p), a.p)


def lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.p)
    return ((a * b) // gcd(a, b)).monic()


def xgcd(a: Poly, b: Poly):
    """(g, s, t) with s*a + t*b = g monic."""
    p = a.p
    r0, r1 = a.coeffs, b.coeffs
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if not r0:
        return Poly.zero(p), Poly.zero(p), Poly.zero(p)
    inv = pow(r0[-1], p - 2, p)
    return (Poly._raw(_scale(r0, inv, p), p), Poly._raw(_scale(s0, inv, p), p),
            Poly._raw(_scale(t0, inv, p), p))


# -- factorization ---------------------------------------------------------------


def _squarefree(f, p):
    """Squarefree decomposition of a monic f: list of (g, multiplicity)."""
    out = []
    df = _deriv(f, p)
    if not df:
        if len(f) > 1:
            for g, m in _squarefree(_pth_root(f, p), p):
                out.append((g, m * p))
        return out
    c = _gcd(f, df, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((_monic(z, p), i))
        i += 1
        w = y
        c = _divmod(c, y, p)[0]
    if len(c) > 1:
        for g, m in _squarefree(_pth_root(_monic(c, p), p), p):
            out.append((g, m * p))
    return out


def _distinct_degree(f, p):
    out = []
    x = (0, 1)
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
    if len(f) > 1:
        out.append((_monic(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = _mod(_mul(t, t, p), f, p)
                acc = _add(acc, t, p)
            b = acc
        else:
            b = _sub(_powmod(a, (p**d - 1) // 2, f, p), (1,), p)
        g = _gcd(f, b, p)
        if 1 < len(g) < len(f):
            return (_equal_degree(g, d, p, rng)
                    + _equal_degree(_divmod(f, g, p)[0], d, p, rng))


def poly_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, coefficients).

    Squarefree split, then distinct-degree, then Cantor-Zassenhaus
    equal-degree splitting with a fixed seed.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    p = f.p
    rng = random.Random(EDF_SEED)
    mult = {}
    for g, m in _squarefree(_monic(f.coeffs, p), p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                key = _monic(irr, p)
                mult[key] = mult.get(key, 0) + m
    factors = [(Poly._raw(c, p), m) for c, m in mult.items()]
    factors.sort(key=lambda t: t[0].sort_key())
    return factors


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fac = poly_factor(f)
    return len(fac) == 1 and fac[0][1] == 1


def monic_polys(p: int, degree: int):
    """All monic polynomials of exactly the given degree."""
    for tail in product(range(p), repeat=degree):
        yield Poly._raw(tuple(reversed(tail)) + (1,), p) if degree else Poly.one(p)


def irreducibles(p: int, max_degree: int) -> list[Poly]:
    """Monic irreducibles of degree 1..max_degree in canonical order."""
    out = []
    for d in range(1, max_degree + 1):
        for f in monic_polys(p, d):
            if _is_irreducible_rabin(f.coeffs, p):
                out.append(f)
    out.sort(key=Poly.sort_key)
    return out


def _is_irreducible_rabin(f, p):
    n = len(f) - 1
    if n == 1:
        return True
    x = (0, 1)
    if _sub(_powmod(x, p**n, f, p), x, p):
        return False
    for q in _prime_divisors(n):
        h = _sub(_powmod(x, p ** (n // q), f, p), x, p)
        if len(_gcd(f, h, p)) > 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def expand(factors, p) -> Poly:
    acc = Poly.one(p)
    for g, m in factors:
        acc = acc * g**m
    return acc
