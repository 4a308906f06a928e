import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injspec import catalog
from injspec import gradedline as gl
from injspec import polyline as pl
from injspec.core import dimension as d
from injspec.core.types import (
    CriticalSeries,
    KdimValue,
    PointSet,
    closed_point,
    generic_point,
)
from injspec.errors import BackendMismatch, InvalidSeries
from injspec.exactalg.poly import Poly
from injspec.findim import structure as fs

X = Poly.x(2)
ONE = Poly.one(2)


@pytest.fixture(scope="module")
def t2():
    sp = catalog.space("T2(F_2)")
    a = sp.algebra
    sa, sb = fs.radical_simples(a).simples
    return sp, sa, sb, fs.indecomposable_projectives(a)[1]


def test_kdim_values(t2):
    sp, _, _, p1 = t2
    assert d.kdim(catalog.space("polyline p=2"), pl.PolyModule(2, (), 0)).is_minus_one
    assert d.kdim(catalog.space("polyline p=2"), pl.PolyModule.free(2)) == KdimValue(1)
    assert d.kdim(catalog.space("graded p=2"), gl.GradedModule.make(2, [], [(0, 3)])) == KdimValue(0)
    assert d.kdim(sp, p1) == KdimValue(0)


def test_criticality(t2):
    sp, sa, _, p1 = t2
    assert d.is_critical(sp, sa)
    assert not d.is_critical(sp, p1)
    assert not d.is_critical(catalog.space("polyline p=2"), pl.PolyModule.cyclic(X * X))
    assert d.is_critical(catalog.space("graded p=2"), gl.GradedModule.make(2, [2]))


def test_critical_series_of_projective(t2):
    sp, sa, sb, p1 = t2
    cs = d.critical_series(sp, p1)
    assert [m for m, _ in cs.factors] == [sb, sa]
    assert d.validate_critical_series(sp, p1, cs)["valid"]


def test_reversed_series_rejected(t2):
    sp, _, _, p1 = t2
    cs = d.critical_series(sp, p1)
    with pytest.raises(InvalidSeries):
        d.validate_critical_series(sp, p1, CriticalSeries(tuple(reversed(cs.factors))))


def test_simple_series_is_itself(t2):
    sp, sa, _, _ = t2
    assert [m for m, _ in d.critical_series(sp, sa).factors] == [sa]


def test_independent_series_lengths_agree():
    sp = catalog.space("polyline p=2")
    m = pl.PolyModule.from_elementary(2, [(X, 1), (X, 1), (X + ONE, 1)])
    report = d.validate_critical_series(sp, m, d.critical_series(sp, m))
    assert report["length"] == report["independent_length"] == 3


def test_tilde_descriptors(t2):
    sp, _, sb, _ = t2
    til, ring = d.tilde(sp, closed_point("findim", 1))
    assert til.module == sb and ring.degree == 1
    til, ring = d.tilde(catalog.space("graded p=2"), generic_point("graded"))
    assert til.kind == "laurent" and ring.degree == 1
    til, ring = d.tilde(catalog.space("polyline p=2"), pl.point_at(X * X + X + ONE))
    assert ring.degree == 2


def test_axiom_harness(t2):
    sp, _, _, p1 = t2
    assert d.dimension_axiom_harness(sp, [p1])["passed"]
    rep = d.dimension_axiom_harness(catalog.space("polyline p=2"), [pl.PolyModule.free(2)])
    assert rep["passed"]
    assert any(i["axiom"] == "d" and "length 6" in i["instance"] for i in rep["instances"])


def test_pointset_ops():
    a = PointSet.make("graded", True, "ray", 0)
    b = PointSet.make("graded", True, "ray", 3)
    assert a.intersect(b) == b
    u = PointSet.make("graded", True, "ray", 2).union(PointSet.finite("graded", [0]))
    assert u == PointSet.make("graded", True, "ray", 2, {0})
    assert a.union(a) == a and a.intersect(a) == a


def test_backend_mixing_rejected():
    with pytest.raises(BackendMismatch):
        PointSet.make("findim", True)
    with pytest.raises(BackendMismatch):
        PointSet.make("polyline", False, "ray", 0)


WINDOW = range(-12, 13)

graded_sets = st.builds(
    lambda gen, base, ray, plus, minus: PointSet.make("graded", gen, base, ray, plus, minus),
    st.booleans(), st.sampled_from(["empty", "ray", "all"]), st.integers(-5, 5),
    st.frozensets(st.integers(-8, 8), max_size=4), st.frozensets(st.integers(-8, 8), max_size=4),
)


def members(s):
    return (s.has_generic, frozenset(i for i in WINDOW if s.contains_label(i)), s.contains_label(100))


@settings(max_examples=200, deadline=None)
@given(graded_sets, graded_sets)
def test_equality_is_set_equality(a, b):
    assert (a == b) == (members(a) == members(b))


@settings(max_examples=200, deadline=None)
@given(graded_sets, graded_sets)
def test_union_intersection_pointwise(a, b):
    u, i = a.union(b), a.intersect(b)
    for k in list(WINDOW) + [100]:
        assert u.contains_label(k) == (a.contains_label(k) or b.contains_label(k))
        assert i.contains_label(k) == (a.contains_label(k) and b.contains_label(k))
