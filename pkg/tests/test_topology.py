import pytest

from injspec import catalog
from injspec import gradedline as gl
from injspec import spectrum as S
from injspec import topology as T
from injspec.core.types import PointSet, Sigma, Zero
from injspec.errors import BackendMismatch, PointNotInSubspace
from injspec.exactalg.poly import Poly
from injspec.findim import structure as fs

X = Poly.x(2)
ONE = Poly.one(2)


def g(gen=False, base="empty", ray=None, plus=(), minus=()):
    return PointSet.make("graded", gen, base, ray, plus, minus)


@pytest.fixture(scope="module")
def spaces():
    return {n: catalog.space(n) for n in ("T2(F_2)", "graded p=2", "polyline p=2")}


def test_pointset_algebra():
    a, b = g(True, "ray", 0), g(True, "ray", 3)
    assert T.pointset_algebra(a, b, "intersect") == b
    assert T.pointset_algebra(g(True, "ray", 2), g(plus={0}), "union") == g(True, "ray", 2, {0})
    assert T.pointset_algebra(a, a, "equal")
    with pytest.raises(BackendMismatch):
        T.pointset_algebra(a, PointSet.finite("findim", [0]), "union")


def test_basic_closed_with_verified_witness(spaces):
    sp = spaces["graded p=2"]
    assert not T.is_basic_closed(sp, g(True))[0]
    for s in [g(True, "ray", 0), g(plus={3, 7}), g(True, "ray", 2, {-4}, {5})]:
        ok, w = T.is_basic_closed(sp, s)
        assert ok and S.v_of(sp, w) == s


def test_basic_closed_findim(spaces):
    sp = spaces["T2(F_2)"]
    ok, w = T.is_basic_closed(sp, PointSet.finite("findim", [0]))
    assert ok and w == Sigma((fs.radical_simples(sp.algebra).simples[0],))
    assert T.is_basic_closed(sp, PointSet.empty("findim")) == (True, Zero())


def test_basic_closed_affine_line(spaces):
    sp = spaces["polyline p=2"]
    s = PointSet.finite("polyline", [X, X + ONE])
    ok, w = T.is_basic_closed(sp, s)
    assert ok and S.v_of(sp, w) == s
    assert not T.is_basic_closed(sp, PointSet.make("polyline", True))[0]


def test_closures(spaces):
    line = spaces["polyline p=2"]
    assert T.closure(line, PointSet.make("polyline", True)) == S.whole_set(line)
    assert T.closure(spaces["graded p=2"], g(True)) == g(True)
    s = PointSet.finite("findim", [1])
    assert T.closure(spaces["T2(F_2)"], s) == s
    assert T.is_closed(spaces["graded p=2"], g(True))


def test_irreducible_sets(spaces):
    r = T.is_irreducible_set(spaces["graded p=2"], g(True, "ray", 0))
    assert not r.irreducible
    a, b = r.witness
    assert a == g(True) and b == g(False, "ray", 0)
    r = T.is_irreducible_set(spaces["polyline p=2"], S.whole_set(spaces["polyline p=2"]))
    assert r.irreducible and r.witness.is_generic
    assert T.is_irreducible_set(spaces["T2(F_2)"], PointSet.finite("findim", [0])).irreducible


def test_transport(spaces):
    sp = spaces["graded p=2"]
    z = Sigma((gl.GradedModule.make(2, [0]),))
    r = T.transport(sp, z, g(True))
    assert r.agree and r.closure_in_subspace == g(True)
    r = T.transport(sp, z, g(True, "ray", 0))
    assert r.agree and not r.irreducible_in_subspace
    t2 = spaces["T2(F_2)"]
    sa = fs.radical_simples(t2.algebra).simples[0]
    r = T.transport(t2, Sigma((sa,)), PointSet.finite("findim", [0]))
    assert r.agree and r.irreducible_in_subspace
    assert T.transport(t2, Sigma((sa,)), PointSet.empty("findim")).points.is_empty
    with pytest.raises(PointNotInSubspace):
        T.transport(t2, Sigma((sa,)), PointSet.finite("findim", [1]))
