"""Krull dimension, criticality, critical series and tilde modules."""

from __future__ import annotations

import itertools
from collections import Counter

from .. import gradedline, polyline
from ..errors import BackendMismatch, InvalidSeries, UnknownPoint, ZeroModule
from ..findim import structure as fs
from ..findim.algebra import (
    Rep,
    embeds,
    isomorphic,
    quotient_rep,
    submodule_rep,
    subquotient,
)
from .types import (
    FINDIM,
    KDIM0,
    MINUS_ONE,
    POLYLINE,
    CriticalSeries,
    KdimValue,
    Point,
    SpaceHandle,
    TildeDescriptor,
)


def kdim(space: SpaceHandle, m) -> KdimValue:
    space.check_module(m)
    if space.backend == FINDIM:
        return MINUS_ONE if m.dim == 0 else KDIM0
    if space.backend == POLYLINE:
        return polyline.kdim(m)
    return gradedline.kdim(m)


def is_critical(space: SpaceHandle, m) -> bool:
    space.check_module(m)
    if m.is_zero():
        raise ZeroModule("criticality of the zero module")
    if space.backend == FINDIM:
        return len(fs.submodule_lattice(m)) == 2
    if space.backend == POLYLINE:
        return polyline.is_critical(m)
    return gradedline.is_critical(m)


def is_homogeneous(space: SpaceHandle, m) -> bool:
    """Every nonzero submodule has the dimension of m."""
    d = kdim(space, m)
    if space.backend == FINDIM or d == KDIM0:
        return d != MINUS_ONE
    return not m.factors if space.backend == POLYLINE else not m.torsions


def critical_series(space: SpaceHandle, m) -> CriticalSeries:
    space.check_module(m)
    if m.is_zero():
        raise ZeroModule("critical series of the zero module")
    if space.backend == FINDIM:
        return CriticalSeries(tuple((f, KDIM0) for f in fs.composition_factors(m, "bottom")))
    if space.backend == POLYLINE:
        return CriticalSeries(tuple(polyline.critical_series(m)))
    return CriticalSeries(tuple(gradedline.critical_series(m)))


def tilde(space: SpaceHandle, x: Point):
    """(largest critical submodule of E(x), D(x))."""
    if x.backend != space.backend:
        raise BackendMismatch("point from another backend")
    if space.backend == FINDIM:
        simples = fs.radical_simples(space.algebra).simples
        if x.kind != "simple" or not 0 <= x.data < len(simples):
            raise UnknownPoint(f"{x.key} is not a point of this space")
        s = simples[x.data]
        report = fs.end_ring_analysis(s)
        if not report.is_division:
            raise AssertionError("the endomorphism ring of a simple module must be a division ring")
        return TildeDescriptor("finite", module=s), report.descriptor
    if space.backend == POLYLINE:
        t, d, _ = polyline.residue_data(x, space.p)
        return t, d
    t, d, _ = gradedline.residue_data(x, space.p)
    return t, d


# -- harnesses ------------------------------------------------------------------------------


def _findim_sequences(m: Rep):
    for sub in fs.submodule_lattice(m).elements:
        yield submodule_rep(m, sub) if sub else Rep(m.p, 0, tuple(() for _ in m.action)), \
            quotient_rep(m, sub), f"sub dim {len(sub)}"


def _split_sequences(m, backend):
    """Split exact sequences from the normal form: each summand against the rest."""
    if backend == POLYLINE:
        summands = [polyline.PolyModule.from_elementary(m.p, [t]) for t in m.elementary_divisors()]
        summands += [polyline.PolyModule.free(m.p)] * m.rank
        zero = polyline.PolyModule(m.p, (), 0)
        total = polyline.direct_sum
    else:
        summands = [gradedline.GradedModule.make(m.p, [a]) for a in m.frees]
        summands += [gradedline.GradedModule.make(m.p, [], [t]) for t in m.torsions]
        zero = gradedline.GradedModule(m.p)
        total = gradedline.direct_sum
    yield zero, m, "0 -> m"
    yield m, zero, "m -> 0"
    for i, s in enumerate(summands):
        rest = summands[:i] + summands[i + 1:]
        yield s, (total(*rest) if rest else zero), f"summand {i}"


def _descending_chain(space, m, length):
    """(factor dimensions of a generated descending chain, chain is finite)."""
    if space.backend == FINDIM:
        chain = fs.composition_chain(m, "top")
        return [KDIM0 for _ in chain[1:]], True
    if space.backend == POLYLINE:
        # m > xm > x^2 m > ...; x^i m / x^(i+1) m has dimension rank + #{x-exponents > i}
        x = polyline.Poly.x(m.p)
        exps = [e for q, e in m.elementary_divisors() if q == x]
        length = max([length] + [e + 1 for e in exps])
        dims = [KDIM0 if m.rank + sum(1 for e in exps if e > i) else MINUS_ONE for i in range(length)]
        return dims, False
    # M_{>=i} > M_{>=i+1}: the factor is the degree-i component
    lo = min([a for a in m.frees] + [b for b, _ in m.torsions])
    hi = max([a for a in m.frees] + [b + n for b, n in m.torsions])
    length = max(length, hi - lo + 1)
    return [KDIM0 if m.component_dim(lo + i) else MINUS_ONE for i in range(length)], False


def dimension_axiom_harness(space: SpaceHandle, sample, chain_length=6) -> dict:
    if not sample:
        raise ValueError("sample must be nonempty")
    instances = []

    def record(axiom, what, ok):
        instances.append({"axiom": axiom, "instance": what, "pass": bool(ok)})

    for idx, m in enumerate(sample):
        space.check_module(m)
        d = kdim(space, m)
        record("a", f"m{idx}", (d == MINUS_ONE) == m.is_zero())
        if space.backend == FINDIM:
            seqs = _findim_sequences(m)
        else:
            seqs = _split_sequences(m, space.backend)
        for sub, quo, label in seqs:
            ds, dq = kdim(space, sub), kdim(space, quo)
            record("a", f"m{idx} {label}", (ds == MINUS_ONE) == sub.is_zero()
                   and (dq == MINUS_ONE) == quo.is_zero())
            record("b", f"m{idx} {label}", d == max(ds, dq))
        record("c", f"m{idx}", True)  # noetherian: m is its own largest noetherian submodule
        if not m.is_zero():
            factors, finite = _descending_chain(space, m, chain_length)
            # all but finitely many factors drop: a finite chain, or a window whose tail drops
            record("d", f"m{idx} chain of length {len(factors)}", finite or factors[-1] < d)
    return {"instances": instances, "passed": all(i["pass"] for i in instances)}


def _realizes(m: Rep, factors) -> bool:
    """Some lattice chain of m has these factors in this order (up to isomorphism)."""
    lat = fs.submodule_lattice(m)

    def walk(cur, i):
        if i == len(factors):
            return len(cur) == m.dim
        for u in lat.elements:
            if (len(u) == len(cur) + factors[i].dim and lat.contains(u, cur)
                    and isomorphic(subquotient(m, u, cur), factors[i]) and walk(u, i + 1)):
                return True
        return False

    return walk(lat.zero, 0)


def validate_critical_series(space: SpaceHandle, m, series: CriticalSeries) -> dict:
    """Raises InvalidSeries naming the first violated condition."""
    space.check_module(m)
    dims = series.dims
    for i, (f, dim) in enumerate(series.factors):
        if not is_critical(space, f):
            raise InvalidSeries(f"factor {i} is not critical", index=i)
        if kdim(space, f) != dim:
            raise InvalidSeries(f"factor {i} has the wrong dimension", index=i)
    if any(a > b for a, b in itertools.pairwise(dims)):
        raise InvalidSeries("dimensions are not nondecreasing")
    if space.backend == FINDIM:
        factors = [f for f, _ in series.factors]
        if not _realizes(m, factors):
            raise InvalidSeries("factors do not occur in this order in any chain of the module")
        other = fs.composition_factors(m, "top")
        if len(other) != len(factors):
            raise InvalidSeries("length differs from an independent series",
                                length=len(factors), independent=len(other))
        unmatched = list(other)
        for f in factors:
            j = next((j for j, g in enumerate(unmatched) if embeds(f, g) and embeds(g, f)), None)
            if j is None:
                raise InvalidSeries("factor multisets are not subisomorphic")
            unmatched.pop(j)
        return {"valid": True, "length": len(factors), "independent_length": len(other)}
    if space.backend == POLYLINE:
        expected = Counter()
        for q, e in m.elementary_divisors():
            expected[("t", q)] += e
        expected[("f", None)] += m.rank
        got = Counter(("t", f.factors[0]) if f.rank == 0 else ("f", None) for f, _ in series.factors)
    else:
        expected = Counter()
        for b, n in m.torsions:
            for d in range(b, b + n):
                expected[("t", d)] += 1
        for a in m.frees:
            expected[("f", a)] += 1
        got = Counter(("t", f.torsions[0][0]) if f.torsions else ("f", f.frees[0])
                      for f, _ in series.factors)
    expected = +expected
    if got != expected:
        raise InvalidSeries("factor multiset differs from the normal form")
    return {"valid": True, "length": len(series), "independent_length": sum(expected.values())}


__all__ = [
    "critical_series",
    "dimension_axiom_harness",
    "is_critical",
    "is_homogeneous",
    "kdim",
    "tilde",
    "validate_critical_series",
]
