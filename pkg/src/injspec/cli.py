"""Command-line front end.

Subcommands: ``query FILE``, ``laws``, ``catalog list`` and ``schema print``.
Exit codes: 0 success, 1 malformed input, 2 domain error, 3 law failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path

import jsonschema

from . import caps as caps_mod
from . import catalog, laws
from . import gradedline as gl
from . import polyline as pl
from . import spectrum as sp
from . import topology as tp
from .core.dimension import critical_series, kdim, tilde
from .core.types import (
    FINDIM,
    GRADED,
    POLYLINE,
    DimBelow,
    GabrielProduct,
    Intersect,
    KdimValue,
    Point,
    PointSet,
    Saturation,
    Sigma,
    SimpleFamily,
    SpaceHandle,
    Whole,
    Zero,
    simple_label,
)
from .errors import InjSpecError, NotSupportedForBackend
from .exactalg.poly import Poly, parse_poly
from .exactalg.smith import PolyMat
from .findim import structure as fs
from .findim.algebra import Algebra, Rep, direct_sum, homs, regular_rep, require_rep


class Malformed(Exception):
    def __init__(self, message, **where):
        super().__init__(message)
        self.where = where


def load_schema() -> dict:
    return json.loads(resources.files("injspec").joinpath("schema.json").read_text("utf-8"))


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise Malformed(exc.msg, line=exc.lineno, column=exc.colno) from None
    err = jsonschema.exceptions.best_match(
        jsonschema.Draft202012Validator(load_schema()).iter_errors(doc))
    if err is not None:
        raise Malformed(err.message, path="/" + "/".join(str(x) for x in err.absolute_path))
    return doc


# -- parsing ----------------------------------------------------------------------------------


def parse_space(obj) -> SpaceHandle:
    backend = obj["backend"]
    if "catalog" in obj:
        name = obj["catalog"]
        if name not in catalog.all_space_names():
            raise Malformed(f"unknown catalog space {name!r}", path="/space/catalog")
        space = catalog.space(name)
        if space.backend != backend:
            raise Malformed(f"catalog space {name!r} is not a {backend} space", path="/space")
        return space
    if "p" not in obj:
        raise Malformed("space needs a characteristic p or a catalog name", path="/space")
    p = obj["p"]
    if backend == POLYLINE:
        return SpaceHandle.polyline(p)
    if backend == GRADED:
        return SpaceHandle.graded(p)
    if "mult" not in obj or "unit" not in obj:
        raise Malformed("a findim space needs mult and unit (or a catalog name)", path="/space")
    alg = Algebra.from_constants(obj["mult"], obj["unit"], p, obj.get("name"))
    return SpaceHandle.findim(alg, obj.get("name"))


def _poly(space, v) -> Poly:
    try:
        return parse_poly(v, space.p) if isinstance(v, str) else Poly(v, space.p)
    except ValueError as exc:
        raise Malformed(str(exc)) from None


def _simple_index(space, text) -> int:
    label = text
    for prefix, suffix in (("E(S", ")"), ("S", "")):
        if text.startswith(prefix) and text.endswith(suffix) and len(text) > len(prefix) + len(suffix):
            label = text[len(prefix):len(text) - len(suffix)]
            break
    for j in range(sp.num_points(space)):
        if simple_label(j) == label:
            return j
    raise Malformed(f"unknown simple {text!r}")


def parse_module(space, obj):
    keys = set(obj)
    if space.backend == FINDIM:
        a = space.algebra
        if "sum" in obj:
            return direct_sum(*[parse_module(space, m) for m in obj["sum"]])
        if "simple" in obj:
            return fs.radical_simples(a).simples[_simple_index(space, obj["simple"])]
        if "injective" in obj:
            return fs.indecomposable_injectives(a)[_simple_index(space, obj["injective"])]
        if "projective" in obj:
            j = _simple_index(space, obj["projective"])
            s = fs.radical_simples(a).simples[j]
            # an indecomposable projective has a simple top, so it maps onto exactly one simple
            return next(pr for pr in fs.indecomposable_projectives(a) if homs(pr, s))
        if obj.get("regular"):
            return regular_rep(a)
        if "action" in obj:
            dim = obj.get("dim")
            try:
                m = Rep.from_matrices(obj["action"], space.p, dim)
            except InjSpecError as exc:
                raise Malformed(str(exc)) from None
            return require_rep(a, m)
        raise Malformed(f"cannot read a findim module from keys {sorted(keys)}")
    if space.backend == POLYLINE:
        rank = obj.get("rank", 0)
        if "presentation" in obj:
            rows = [[_poly(space, c) for c in r] for r in obj["presentation"]]
            ncols = len(rows[0]) if rows else 0
            if any(len(r) != ncols for r in rows):
                raise Malformed("presentation rows have different lengths")
            return pl.classify(PolyMat(space.p, len(rows), ncols, tuple(tuple(r) for r in rows)))
        if "cyclic" in obj:
            parts = [pl.PolyModule.cyclic(_poly(space, c)) for c in obj["cyclic"]]
            parts.append(pl.PolyModule.free(space.p, rank))
            return pl.direct_sum(*parts)
        factors = tuple(_poly(space, c) for c in obj.get("factors", []))
        if any(f.is_zero() for f in factors):
            raise Malformed("invariant factors must be nonzero")
        return pl.PolyModule(space.p, tuple(f.monic() for f in factors), rank)
    if "presentation" in obj:
        rows = [[_poly(space, c) for c in r] for r in obj["presentation"]]
        ncols = len(rows[0]) if rows else 0
        degs = obj.get("gen_degrees")
        if degs is None or len(degs) != len(rows):
            raise Malformed("a graded presentation needs one generator degree per row")
        return gl.classify_graded(degs, PolyMat(space.p, len(rows), ncols, tuple(tuple(r) for r in rows)))
    return gl.GradedModule.make(space.p, obj.get("frees", []), obj.get("torsions", []))


def parse_point(space, v) -> Point:
    if space.backend == FINDIM:
        if not isinstance(v, str):
            raise Malformed("findim points are written E(Sa), Sa or a")
        return Point(FINDIM, "simple", _simple_index(space, v))
    if space.backend == POLYLINE:
        if v == "generic":
            return Point(POLYLINE, "generic")
        if isinstance(v, str) and v.startswith("y(") and v.endswith(")"):
            v = v[2:-1]
        if isinstance(v, int):
            raise Malformed("affine-line points are polynomials or 'generic'")
        q = _poly(space, v)
        return pl.point_at(q)
    if v == "z":
        return Point(GRADED, "z")
    if isinstance(v, str) and v.startswith("y_"):
        try:
            v = int(v[2:])
        except ValueError:
            raise Malformed(f"bad graded point {v!r}") from None
    if not isinstance(v, int):
        raise Malformed("graded points are 'z', 'y_i' or an integer")
    return Point(GRADED, "y", v)


def parse_pointset(space, obj) -> PointSet:
    def label(v):
        return parse_point(space, v).label

    ray = obj.get("ray")
    base = "all" if obj.get("all_y") else ("ray" if ray is not None else "empty")
    if base == "ray" and space.backend != GRADED:
        raise Malformed("rays only exist on the graded line")
    if obj.get("z") and space.backend == FINDIM:
        raise Malformed("finite-dimensional spaces have no generic point")
    return PointSet.make(space.backend, bool(obj.get("z")), base, ray,
                         [label(v) for v in obj.get("plus", [])],
                         [label(v) for v in obj.get("minus", [])])


def parse_subspace(space, obj):
    (key, val), = obj.items()
    if key == "sigma":
        return Sigma(tuple(parse_module(space, m) for m in val))
    if key == "simple_family":
        return SimpleFamily(parse_pointset(space, val))
    if key == "dim_below":
        return DimBelow(KdimValue(val))
    if key == "gabriel":
        return GabrielProduct(tuple(parse_subspace(space, z) for z in val))
    if key == "saturation":
        return Saturation(parse_subspace(space, val))
    if key == "intersect":
        return Intersect(tuple(parse_subspace(space, z) for z in val))
    if key == "whole":
        return Whole()
    return Zero()


# -- canonical forms ---------------------------------------------------------------------------


def space_json(space):
    if space.name in catalog.all_space_names():
        return {"backend": space.backend, "catalog": space.name}
    out = {"backend": space.backend, "p": space.p}
    if space.backend == FINDIM:
        a = space.algebra
        out.update(mult=[[list(c) for c in r] for r in a.mult], unit=list(a.unit))
        if a.name:
            out["name"] = a.name
    return out


def module_json(m):
    return m.to_json()


def module_summary(space, m):
    if space.backend == FINDIM:
        if m.is_zero():
            return "0"
        labels = sorted(simple_label(fs.simple_index(space.algebra, f)) for f in fs.composition_factors(m))
        return f"dim {m.dim}, factors " + " ".join("S" + x for x in labels)
    return m.describe()


def subspace_json(z):
    if isinstance(z, Sigma):
        return {"sigma": [module_json(m) for m in z.generators]}
    if isinstance(z, SimpleFamily):
        return {"simple_family": z.points.to_json()}
    if isinstance(z, DimBelow):
        return {"dim_below": z.alpha.value}
    if isinstance(z, GabrielProduct):
        return {"gabriel": [subspace_json(f) for f in z.factors]}
    if isinstance(z, Saturation):
        return {"saturation": subspace_json(z.inner)}
    if isinstance(z, Intersect):
        return {"intersect": [subspace_json(f) for f in z.parts]}
    if isinstance(z, Whole):
        return {"whole": True}
    return {"zero": True}


def pointset_out(s: PointSet):
    d = s.to_json()
    return {"has_z": d["z"], "ray": d["ray"], "all_y": d["all_y"], "plus": d["plus"],
            "minus": d["minus"], "text": str(s)}


# -- dispatch ----------------------------------------------------------------------------------


def _window(space, options):
    w = options.get("window")
    if w is None:
        return None
    if space.backend == POLYLINE:
        if not isinstance(w, int):
            raise Malformed("the affine-line window is a maximal degree", path="/options/window")
        return w
    if space.backend == GRADED:
        if not isinstance(w, list):
            raise Malformed("the graded window is a pair [lo, hi]", path="/options/window")
        return tuple(w)
    return None


def _need(q, key):
    if key not in q:
        raise Malformed(f"query {q['op']!r} needs {key!r}", path=f"/query/{key}")
    return q[key]


def run_query(doc: dict) -> tuple[dict, int]:
    """(report, exit code) for an already validated document."""
    space = parse_space(doc["space"])
    options = doc.get("options", {})
    window = _window(space, options)
    q = doc["query"]
    op = q["op"]
    echo = {"format": 1, "space": space_json(space), "query": {"op": op}}
    if options:
        echo["options"] = options

    def module(key="module"):
        m = parse_module(space, _need(q, key))
        echo["query"][key] = module_json(m)
        return m

    def point():
        x = parse_point(space, _need(q, "point"))
        sp.check_point(space, x)
        echo["query"]["point"] = x.key
        return x

    def subspace(key="subspace"):
        z = parse_subspace(space, _need(q, key))
        echo["query"][key] = subspace_json(z)
        return z

    def pointset():
        s = parse_pointset(space, _need(q, "set"))
        echo["query"]["set"] = s.to_json()
        return s

    notes = []
    code = 0
    if op == "inj":
        r = sp.inj_points(space, window)
        result = {"points": [x.key for x in r.points], "infinite": r.infinite}
        if r.infinite:
            notes.append("the true set is infinite; only the window is listed")
    elif op == "support":
        m = module()
        result = pointset_out(sp.support(space, m))
        notes.append("decided by the backend support rule")
    elif op == "supported-at":
        m, x = module(), point()
        r = sp.supported_at(space, m, x)
        result = {"supported": r.result, "by_support": r.by_support, "by_hom": r.by_hom}
        notes.append("support-set membership and Hom(M, E(x)) != 0 computed independently")
    elif op == "sigma-member":
        n, m = module(), module("other")
        result = {"member": sp.sigma_member(space, n, m)}
    elif op == "member":
        n, z = module(), subspace()
        result = {"member": sp.member(space, n, z)}
    elif op == "gabriel-member":
        n, z1, z2 = module(), subspace("z1"), subspace("z2")
        result = {"member": sp.gabriel_member(space, n, z1, z2)}
        notes.append("largest z2-submodule first; its quotient is tested against z1")
    elif op == "saturate":
        d = sp.saturation_closure(space, subspace())
        result = {"points": pointset_out(d.points), "free": d.has_free}
        notes.append(d.notes)
    elif op == "localize":
        result = sp.localize(space, point())
        notes.extend(result.pop("notes"))
    elif op == "irreducible":
        irr, wit = sp.is_topologically_irreducible(space)
        result = {"irreducible": irr, "witness": _witness(wit)}
    elif op == "prime":
        r = sp.prime_ops(space, module())
        result = {"is_prime": r.is_prime, "has_prime_submodule": r.has_prime_submodule}
        notes.extend(r.notes)
    elif op == "prime-filtration":
        r = sp.prime_ops(space, module())
        if r.filtration_error is not None:
            raise r.filtration_error
        result = {"filtration": [module_summary(space, f) for f in r.filtration]}
        notes.extend(r.notes)
    elif op == "xred":
        r = sp.x_red(space)
        result = {"reduced": r.is_reduced, "homeomorphism": r.homeomorphism}
        if space.backend == FINDIM:
            a = r.descriptor
            result["algebra"] = {"dim": a.dim, "mult": [[list(c) for c in row] for row in a.mult],
                                 "unit": list(a.unit)}
        else:
            result["descriptor"] = r.descriptor
    elif op == "integral":
        r = sp.is_integral(space)
        result = {"integral": r.integral,
                  "big_injective": r.big_injective.key if r.big_injective else None}
        notes.extend(r.reasons)
    elif op == "mori":
        r = sp.mori_check(space)
        result = {"condition_b": r.condition_b, "condition_c": r.condition_c,
                  "division_ring": str(r.division_ring) if r.division_ring else None,
                  "alpha": r.alpha}
    elif op == "weak-point":
        w = sp.weak_point(space, point())
        result = {"point": w.at.key, "tilde": str(w.tilde), "is_point": w.is_point}
    elif op == "tiny":
        result = {"tiny": sp.tiny_test(space, point())}
    elif op == "spec":
        m = module() if "module" in q else None
        r = sp.spec_and_phi(space, m, window)
        result = {"image": [{"point": x.key, "hit": h} for x, h in r.image_window],
                  "injective": r.injective, "preorder_ok": r.preorder_ok}
        if m is not None:
            result["in_spec"] = r.is_in_spec
            result["phi"] = r.phi.key if r.phi else None
    elif op == "phi":
        result = {"phi": sp.phi(space, module()).key}
    elif op == "closure":
        result = pointset_out(tp.closure(space, pointset()))
    elif op == "basic":
        ok, wit = tp.is_basic_closed(space, pointset())
        result = {"basic": ok, "witness": subspace_json(wit) if wit is not None else None}
    elif op == "irreducible-set":
        r = tp.is_irreducible_set(space, pointset())
        result = {"irreducible": r.irreducible, "closure_taken": r.closure_taken,
                  "witness": _witness(r.witness)}
    elif op == "transport":
        z, s = subspace(), pointset()
        r = tp.transport(space, z, s)
        result = {"points": pointset_out(r.points), "closure": pointset_out(r.closure_in_subspace),
                  "irreducible": r.irreducible_in_subspace, "agree": r.agree}
    elif op == "v":
        result = pointset_out(sp.v_of(space, subspace()))
    elif op == "kdim":
        result = {"kdim": kdim(space, module()).value}
    elif op == "critical-series":
        s = critical_series(space, module())
        result = {"series": [{"factor": module_summary(space, f), "dim": d.value} for f, d in s.factors]}
    elif op == "hull":
        if space.backend != FINDIM:
            raise NotSupportedForBackend("explicit hulls are computed for findim modules")
        h = fs.injective_hull(space.algebra, module())
        result = {"dim": h.module.dim, "summands": [Point(FINDIM, "simple", j).key for j in h.summands]}
    elif op == "tilde":
        t, d = tilde(space, point())
        result = {"tilde": str(t), "division_ring": str(d)}
    else:  # laws
        rep = laws.run(q.get("suite", "all"), q.get("seed", 0), window)
        result = rep
        code = 0 if rep["passed"] else 3
    if space.backend == GRADED and op in ("closure", "basic", "irreducible-set", "transport"):
        notes.append("point sets are restricted to finitely describable ones "
                     "(z, a ray, finitely many added or removed y_i)")
    if space.backend == GRADED and op in ("spec", "phi"):
        notes.append("the graded line does not have enough prime modules, so no claim is made "
                     "that every prime class is hit")
    return {"input": echo, "result": result, "notes": notes}, code


def _witness(w):
    if w is None:
        return None
    if isinstance(w, Point):
        return {"generic_point": w.key}
    if isinstance(w, tuple) and len(w) == 2 and all(isinstance(s, PointSet) for s in w):
        return {"decomposition": [pointset_out(s) for s in w]}
    return str(w)


# -- entry point -------------------------------------------------------------------------------


def _emit(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n")


def _query_text(text: str, timing: bool) -> tuple[dict, int]:
    start = time.perf_counter()
    old_caps = caps_mod.CAPS
    try:
        doc = load_document(text)
        caps = doc.get("options", {}).get("caps")
        if caps:
            caps_mod.set_caps(**caps)
        report, code = run_query(doc)
    except Malformed as exc:
        return {"error": dict({"error": "Malformed", "message": str(exc)}, **exc.where)}, 1
    except InjSpecError as exc:
        return {"error": exc.to_dict()}, 2
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        return {"error": {"error": "Malformed", "message": str(exc)}}, 1
    finally:
        caps_mod.CAPS = old_caps
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report, code


def build_parser():
    ap = argparse.ArgumentParser(prog="injspec", description="Injective spectra of small spaces.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    q = sub.add_parser("query", help="run a JSON query document ('-' reads stdin)")
    q.add_argument("file")
    q.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    lw = sub.add_parser("laws", help="run the property suites")
    lw.add_argument("--suite", default="all", choices=("all",) + laws.SUITES)
    lw.add_argument("--seed", type=int, default=0)
    lw.add_argument("--window", type=int, nargs=2, metavar=("A", "B"))
    c = sub.add_parser("catalog", help="built-in spaces")
    c.add_argument("action", choices=("list",))
    s = sub.add_parser("schema", help="query document schema")
    s.add_argument("action", choices=("print",))
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "query":
        try:
            text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            _emit({"error": {"error": "Malformed", "message": f"cannot read {args.file}: {exc.strerror}"}})
            return 1
        report, code = _query_text(text, args.timing)
        _emit(report)
        return code
    if args.cmd == "laws":
        rep = laws.run(args.suite, args.seed, args.window)
        _emit(rep)
        return 0 if rep["passed"] else 3
    if args.cmd == "catalog":
        _emit({"spaces": catalog.describe()})
        return 0
    _emit(load_schema())
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
