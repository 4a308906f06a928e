import pytest

from injspec import catalog
from injspec import gradedline as gl
from injspec import polyline as pl
from injspec import spectrum as S
from injspec.core.types import (
    DimBelow,
    GabrielProduct,
    PointSet,
    Sigma,
    Whole,
    closed_point,
    generic_point,
)
from injspec.errors import NoPrimeSubmodule, NotInSpec, NotSupportedForBackend
from injspec.exactalg.poly import Poly
from injspec.findim import structure as fs
from injspec.findim.algebra import direct_sum

X = Poly.x(2)
ONE = Poly.one(2)
G = gl.GradedModule
PA, PB = closed_point("findim", 0), closed_point("findim", 1)


@pytest.fixture(scope="module")
def t2():
    sp = catalog.space("T2(F_2)")
    sa, sb = fs.radical_simples(sp.algebra).simples
    return sp, sa, sb, fs.indecomposable_projectives(sp.algebra)[1]


@pytest.fixture(scope="module")
def graded():
    return catalog.space("graded p=2")


@pytest.fixture(scope="module")
def line():
    return catalog.space("polyline p=2")


def test_point_enumeration(t2, graded, line):
    assert S.num_points(t2[0]) == 2
    pts = S.inj_points(graded, (-1, 1))
    assert pts.infinite and [p.key for p in pts.points] == ["z", "y_-1", "y_0", "y_1"]
    pts = S.inj_points(line, 2)
    assert [p.data for p in pts.points[1:]] == [X, X + ONE, X * X + X + ONE]
    assert pts.points[0].is_generic


def test_v_of(t2, graded):
    sp, _, _, p1 = t2
    assert S.v_of(graded, Sigma((G.make(2, [0]),))) == PointSet.make("graded", True, "ray", 0)
    assert S.v_of(graded, DimBelow(1)) == PointSet.make("graded", False, "all")
    assert S.v_of(sp, Sigma((p1,))) == PointSet.finite("findim", [0, 1])


def test_sigma_member(t2, graded):
    sp, sa, sb, p1 = t2
    assert S.sigma_member(sp, sb, p1)
    assert not S.sigma_member(sp, p1, direct_sum(sa, sb))
    assert S.sigma_member(graded, G.make(2, [2]), G.make(2, [0]))
    assert not S.sigma_member(graded, G.make(2, [-1]), G.make(2, [0]))


def test_gabriel_member(t2):
    sp, sa, sb, p1 = t2
    assert S.gabriel_member(sp, p1, Sigma((sa,)), Sigma((sb,)))
    assert not S.gabriel_member(sp, p1, Sigma((sb,)), Sigma((sa,)))
    assert S.gabriel_member(sp, p1, Whole(), Whole())
    assert S.member(sp, p1, GabrielProduct((Sigma((sa,)), Sigma((sb,)))))


def test_largest_in(t2):
    sp, sa, sb, p1 = t2
    sub, quot = S.largest_in(sp, p1, Sigma((sb,)))
    assert sub.dim == 1 and quot == sa
    sub, _ = S.largest_in(sp, p1, Sigma((sa,)))
    assert sub.dim == 0


def test_saturation(t2, graded):
    sp, sa, _, p1 = t2
    d = S.saturation_closure(sp, Sigma((p1,)))
    assert d.points == PointSet.finite("findim", [0, 1])
    assert not S.saturation_closure(sp, Sigma((sa,))).contains(sp, p1)
    d = S.saturation_closure(graded, Sigma((G.make(2, [0]),)))
    assert d.has_free and d.points == PointSet.make("graded", True, "ray", 0)


def test_supported_at(t2, line):
    sp, _, _, p1 = t2
    r = S.supported_at(sp, p1, PA)
    assert r.result and r.by_support and r.by_hom
    r = S.supported_at(line, pl.PolyModule.cyclic(X * X), pl.point_at(X + ONE))
    assert not r.result and r.by_support == r.by_hom


def test_localize(t2, line):
    sp = t2[0]
    assert S.localize(sp, PB)["simple"] == "Sb"
    assert S.localize(sp, PB)["division_ring"] == "F_2"
    assert S.localize(line, generic_point("polyline"))["division_ring"] == "F_2(x)"
    assert S.localize(line, pl.point_at(X))["division_ring"] == "F_2"


def test_irreducibility(t2, graded, line):
    assert S.is_topologically_irreducible(catalog.space("M2(F_2)"))[0]
    ok, (a, b) = S.is_topologically_irreducible(t2[0])
    assert not ok and {a, b} == {PointSet.finite("findim", [0]), PointSet.finite("findim", [1])}
    ok, (a, b) = S.is_topologically_irreducible(graded)
    assert not ok
    assert a == PointSet.make("graded", False, "all")
    assert b == PointSet.make("graded", True, "ray", 0)
    assert S.is_topologically_irreducible(line)[0]


def test_prime_ops(t2, graded, line):
    sp, sa, sb, p1 = t2
    r = S.prime_ops(sp, p1)
    assert not r.is_prime and r.has_prime_submodule and list(r.filtration) == [sb, sa]
    r = S.prime_ops(graded, G.make(2, [0]))
    assert not r.has_prime_submodule and isinstance(r.filtration_error, NoPrimeSubmodule)
    assert S.prime_ops(line, pl.PolyModule.from_elementary(2, [(X, 1), (X, 1)])).is_prime


def test_x_red(t2, graded, line):
    r = S.x_red(t2[0])
    assert not r.is_reduced and r.descriptor.dim == 2
    assert S.x_red(catalog.space("M2(F_2)")).is_reduced
    assert S.x_red(line).is_reduced
    with pytest.raises(NotSupportedForBackend):
        S.x_red(graded)


def test_integral(t2):
    r = S.is_integral(t2[0])
    assert r.integral and r.big_injective == PB
    assert S.is_integral(catalog.space("M2(F_2)")).integral
    assert not S.is_integral(catalog.space("F_2xF_2")).integral


def test_mori(graded, line):
    r = S.mori_check(graded)
    assert r.condition_b and r.condition_c and r.division_ring.degree == 1
    r = S.mori_check(line)
    assert r.condition_b and r.division_ring.kind == "rational_function_field"
    assert not S.mori_check(catalog.space("F_2xF_2")).condition_b


def test_weak_points(t2, graded):
    sp, sa, sb, _ = t2
    w = S.weak_point(sp, PA)
    back = S.extend(sp, S.restrict(sp, Sigma((direct_sum(sa, sb),)), w))
    assert S.same_weak_point(back, w)
    assert S.weak_point(graded, closed_point("graded", 5)).is_point
    assert S.weak_point(graded, generic_point("graded")).is_point


def test_tiny(t2, line, graded):
    for x in S.inj_points(t2[0]).points:
        assert S.tiny_test(t2[0], x)
    assert S.tiny_test(line, generic_point("polyline"))
    assert S.tiny_test(graded, generic_point("graded"))


def test_spec_and_phi(graded, t2):
    sp, _, sb, p1 = t2
    assert S.is_in_spec(sp, sb) and S.phi(sp, sb) == PB
    assert not S.is_in_spec(sp, p1)
    with pytest.raises(NotInSpec):
        S.phi(sp, p1)
    assert not S.is_in_spec(graded, G.make(2, [0]))
    rep = S.spec_and_phi(graded)
    hits = {p.key: hit for p, hit in rep.image_window}
    assert hits.pop("z") is False
    assert all(hits.values()) and len(hits) == 17
    assert rep.injective and rep.preorder_ok
