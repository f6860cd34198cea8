"""JSON schemas for every structure, with canonical serialization.

Key sets are exact: unknown keys are rejected so that a witness file means
the same thing to every consumer.  Canonical output (sorted keys, no
insignificant whitespace, one trailing newline) makes round trips
byte-exact, which the replay tests rely on.
"""

import json

from .degenerate import DegenerateCategory, DegNatTrans, OBJECT_LABEL, check_nat_trans
from .doubly import (
    DDBicat,
    DDFunctor,
    DDModification,
    DDTransformation,
    check_dd_functor,
    check_dd_transformation,
    check_ddbicat,
    check_modification,
    eckmann_hilton_report,
)
from .fincat import CatFunctor, FiniteCategory, check_category
from .monads import (
    FinEndofunctor,
    FinMonad,
    MonadFunctor,
    MonadFunctorTransformation,
    check_monad,
    check_monad_functor,
    check_monad_transformation,
)
from .monoidal import (
    DegenerateBicategory,
    DegModification,
    DegTransformation,
    FinMonoidalCategory,
    MonoidalFunctor,
    MonoidalTransformation,
    check_deg_modification,
    check_deg_transformation,
    check_degenerate_bicat,
    check_monoidal,
    check_monoidal_functor,
    check_monoidal_transformation,
    shift_from_bicat,
)
from .monoids import (
    CMonDIE,
    FiniteMonoid,
    MonoidHom,
    check_cmon_die,
    check_commutative,
    check_monoid,
    invert,
)
from .report import StructuralError, ValidationReport


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def _require_keys(payload: dict, required: set, optional: set = frozenset()):
    keys = set(payload)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise StructuralError(f"missing keys: {sorted(missing)}")
    if unknown:
        raise StructuralError(f"unknown keys: {sorted(unknown)}")


def _rows(t):
    return [list(r) for r in t]


def _rows3(t):
    return [[list(c) for c in p] for p in t]


# -- payload builders ---------------------------------------------------------


def monoid_payload(m: FiniteMonoid) -> dict:
    return {"kind": "monoid", "size": m.size, "unit": m.unit, "mul": _rows(m.mul)}


def cmon_die_payload(s: CMonDIE) -> dict:
    payload = monoid_payload(s.monoid)
    payload["die"] = s.die
    return payload


def degenerate_category_payload(c: DegenerateCategory) -> dict:
    return {"kind": "degenerate_category", "hom": monoid_payload(c.hom)}


def nat_trans_payload(t: DegNatTrans) -> dict:
    return {
        "kind": "nat_trans",
        "source": monoid_payload(t.source_functor.source),
        "target": monoid_payload(t.source_functor.target),
        "F": list(t.source_functor.map),
        "G": list(t.target_functor.map),
        "d": t.component,
    }


def ddbicat_payload(b: DDBicat) -> dict:
    return {
        "kind": "ddbicat",
        "cells": b.cells,
        "id2": b.id2,
        "vcomp": _rows(b.vcomp),
        "hcomp": _rows(b.hcomp),
        "assoc": b.assoc,
        "assoc_inv": b.assoc_inv,
        "lunit": b.lunit,
        "lunit_inv": b.lunit_inv,
        "runit": b.runit,
        "runit_inv": b.runit_inv,
    }


def dd_functor_payload(f: DDFunctor) -> dict:
    return {
        "kind": "dd_functor",
        "source": cmon_die_payload(f.source),
        "target": cmon_die_payload(f.target),
        "map": list(f.hom_map.map),
        "m2": f.m,
        "m0": f.m0,
    }


def dd_transformation_payload(t: DDTransformation) -> dict:
    return {
        "kind": "dd_transformation",
        "source_functor": dd_functor_payload(t.source_functor),
        "target_functor": dd_functor_payload(t.target_functor),
        "sigma": t.sigma,
    }


def dd_modification_payload(m: DDModification) -> dict:
    return {
        "kind": "dd_modification",
        "boundary": dd_transformation_payload(m.boundary),
        "gamma": m.gamma,
    }


def category_payload(c: FiniteCategory) -> dict:
    return {
        "kind": "category",
        "objects": c.n_objects,
        "morphisms": [{"src": s, "tgt": t} for s, t in c.morphisms],
        "identities": list(c.identities),
        "comp": _rows(c.comp),
    }


def moncat_payload(mc: FinMonoidalCategory) -> dict:
    return {
        "kind": "moncat",
        "objects": mc.base.n_objects,
        "morphisms": [{"src": s, "tgt": t} for s, t in mc.base.morphisms],
        "identities": list(mc.base.identities),
        "comp": _rows(mc.base.comp),
        "tensor_obj": _rows(mc.tensor_obj),
        "tensor_mor": _rows(mc.tensor_mor),
        "unit": mc.unit_obj,
        "assoc": _rows3(mc.assoc),
        "assoc_inv": _rows3(mc.assoc_inv),
        "lunit": list(mc.lunit),
        "lunit_inv": list(mc.lunit_inv),
        "runit": list(mc.runit),
        "runit_inv": list(mc.runit_inv),
    }


def degenerate_bicat_payload(b: DegenerateBicategory) -> dict:
    return {
        "kind": "degenerate_bicat",
        "one_cells": b.one_cells,
        "two_cells": [{"src": s, "tgt": t} for s, t in b.two_cells],
        "identities": list(b.identities),
        "vcomp": _rows(b.vcomp),
        "hcomp_one": _rows(b.hcomp_one),
        "hcomp_two": _rows(b.hcomp_two),
        "unit_one": b.unit_one,
        "assoc": _rows3(b.assoc),
        "assoc_inv": _rows3(b.assoc_inv),
        "lunit": list(b.lunit),
        "lunit_inv": list(b.lunit_inv),
        "runit": list(b.runit),
        "runit_inv": list(b.runit_inv),
    }


def monoidal_functor_payload(f: MonoidalFunctor) -> dict:
    return {
        "kind": "monoidal_functor",
        "source": moncat_payload(f.source),
        "target": moncat_payload(f.target),
        "object_map": list(f.functor.object_map),
        "morphism_map": list(f.functor.morphism_map),
        "tensor_comparison": _rows(f.tensor_comparison),
        "unit_comparison": f.unit_comparison,
    }


def monoidal_transformation_payload(t: MonoidalTransformation) -> dict:
    return {
        "kind": "monoidal_transformation",
        "source_functor": monoidal_functor_payload(t.source_functor),
        "target_functor": monoidal_functor_payload(t.target_functor),
        "components": list(t.components),
    }


def deg_transformation_payload(t: DegTransformation) -> dict:
    return {
        "kind": "deg_transformation",
        "source_functor": monoidal_functor_payload(t.source_functor),
        "target_functor": monoidal_functor_payload(t.target_functor),
        "dist_obj": t.dist_obj,
        "components": list(t.components),
        "lax": t.lax,
        "oplax": t.oplax,
    }


def deg_modification_payload(m: DegModification) -> dict:
    return {
        "kind": "deg_modification",
        "source_transformation": deg_transformation_payload(m.source_transformation),
        "target_transformation": deg_transformation_payload(m.target_transformation),
        "gamma": m.gamma,
    }


def monad_payload(m: FinMonad) -> dict:
    return {
        "kind": "monad",
        "base": category_payload(m.endo.base),
        "object_map": list(m.endo.object_map),
        "morphism_map": list(m.endo.morphism_map),
        "eta": list(m.eta),
        "mu": list(m.mu),
    }


def monad_functor_payload(f: MonadFunctor) -> dict:
    return {
        "kind": "monad_functor",
        "source": monad_payload(f.source),
        "target": monad_payload(f.target),
        "object_map": list(f.u.object_map),
        "morphism_map": list(f.u.morphism_map),
        "phi": list(f.phi),
    }


def monad_transformation_payload(t: MonadFunctorTransformation) -> dict:
    return {
        "kind": "monad_transformation",
        "source": monad_functor_payload(t.source),
        "target": monad_functor_payload(t.target),
        "gamma": list(t.gamma),
    }


def to_payload(obj) -> dict:
    builders = {
        FiniteMonoid: monoid_payload,
        CMonDIE: cmon_die_payload,
        DegenerateCategory: degenerate_category_payload,
        DegNatTrans: nat_trans_payload,
        DDBicat: ddbicat_payload,
        DDFunctor: dd_functor_payload,
        DDTransformation: dd_transformation_payload,
        DDModification: dd_modification_payload,
        FiniteCategory: category_payload,
        FinMonoidalCategory: moncat_payload,
        DegenerateBicategory: degenerate_bicat_payload,
        MonoidalFunctor: monoidal_functor_payload,
        MonoidalTransformation: monoidal_transformation_payload,
        DegTransformation: deg_transformation_payload,
        DegModification: deg_modification_payload,
        FinMonad: monad_payload,
        MonadFunctor: monad_functor_payload,
        MonadFunctorTransformation: monad_transformation_payload,
    }
    builder = builders.get(type(obj))
    if builder is None:
        raise StructuralError(f"no payload builder for {type(obj).__name__}")
    return builder(obj)


# -- loaders ------------------------------------------------------------------


def monoid_from(payload) -> FiniteMonoid:
    _require_keys(payload, {"kind", "size", "unit", "mul"}, {"die"})
    return FiniteMonoid(payload["size"], payload["unit"], payload["mul"])


def cmon_die_from(payload) -> CMonDIE:
    m = monoid_from(payload)
    inv = invert(m, payload["die"])
    if inv is None:
        raise StructuralError("die has no inverse; cannot build the structure")
    return CMonDIE(m, payload["die"], inv)


def degenerate_category_from(payload) -> DegenerateCategory:
    _require_keys(payload, {"kind", "hom"})
    return DegenerateCategory(OBJECT_LABEL, monoid_from(payload["hom"]))


def nat_trans_from(payload) -> DegNatTrans:
    _require_keys(payload, {"kind", "source", "target", "F", "G", "d"})
    src = monoid_from(payload["source"])
    tgt = monoid_from(payload["target"])
    return DegNatTrans(
        MonoidHom(src, tgt, payload["F"]), MonoidHom(src, tgt, payload["G"]), payload["d"]
    )


def ddbicat_from(payload) -> DDBicat:
    _require_keys(
        payload,
        {
            "kind",
            "cells",
            "id2",
            "vcomp",
            "hcomp",
            "assoc",
            "assoc_inv",
            "lunit",
            "lunit_inv",
            "runit",
            "runit_inv",
        },
    )
    return DDBicat(
        payload["cells"],
        payload["id2"],
        payload["vcomp"],
        payload["hcomp"],
        payload["assoc"],
        payload["assoc_inv"],
        payload["lunit"],
        payload["lunit_inv"],
        payload["runit"],
        payload["runit_inv"],
    )


def dd_functor_from(payload) -> DDFunctor:
    _require_keys(payload, {"kind", "source", "target", "map", "m2", "m0"})
    src = cmon_die_from(payload["source"])
    tgt = cmon_die_from(payload["target"])
    hom = MonoidHom(src.monoid, tgt.monoid, payload["map"])
    return DDFunctor(src, tgt, hom, payload["m2"], payload["m0"])


def dd_transformation_from(payload) -> DDTransformation:
    _require_keys(payload, {"kind", "source_functor", "target_functor", "sigma"})
    return DDTransformation(
        dd_functor_from(payload["source_functor"]),
        dd_functor_from(payload["target_functor"]),
        payload["sigma"],
    )


def dd_modification_from(payload) -> DDModification:
    _require_keys(payload, {"kind", "boundary", "gamma"})
    return DDModification(dd_transformation_from(payload["boundary"]), payload["gamma"])


def category_from(payload) -> FiniteCategory:
    _require_keys(payload, {"kind", "objects", "morphisms", "identities", "comp"})
    morphisms = tuple((m["src"], m["tgt"]) for m in payload["morphisms"])
    return FiniteCategory(payload["objects"], morphisms, payload["identities"], payload["comp"])


def moncat_from(payload) -> FinMonoidalCategory:
    _require_keys(
        payload,
        {
            "kind",
            "objects",
            "morphisms",
            "identities",
            "comp",
            "tensor_obj",
            "tensor_mor",
            "unit",
            "assoc",
            "assoc_inv",
            "lunit",
            "lunit_inv",
            "runit",
            "runit_inv",
        },
    )
    base = FiniteCategory(
        payload["objects"],
        tuple((m["src"], m["tgt"]) for m in payload["morphisms"]),
        payload["identities"],
        payload["comp"],
    )
    return FinMonoidalCategory(
        base=base,
        tensor_obj=payload["tensor_obj"],
        tensor_mor=payload["tensor_mor"],
        unit_obj=payload["unit"],
        assoc=payload["assoc"],
        assoc_inv=payload["assoc_inv"],
        lunit=payload["lunit"],
        lunit_inv=payload["lunit_inv"],
        runit=payload["runit"],
        runit_inv=payload["runit_inv"],
    )


def degenerate_bicat_from(payload) -> DegenerateBicategory:
    _require_keys(
        payload,
        {
            "kind",
            "one_cells",
            "two_cells",
            "identities",
            "vcomp",
            "hcomp_one",
            "hcomp_two",
            "unit_one",
            "assoc",
            "assoc_inv",
            "lunit",
            "lunit_inv",
            "runit",
            "runit_inv",
        },
    )
    two_cells = tuple((m["src"], m["tgt"]) for m in payload["two_cells"])
    bic = DegenerateBicategory(
        one_cells=payload["one_cells"],
        two_cells=two_cells,
        identities=tuple(payload["identities"]),
        vcomp=tuple(tuple(v for v in row) for row in payload["vcomp"]),
        hcomp_one=tuple(tuple(row) for row in payload["hcomp_one"]),
        hcomp_two=tuple(tuple(row) for row in payload["hcomp_two"]),
        unit_one=payload["unit_one"],
        assoc=tuple(tuple(tuple(c) for c in p) for p in payload["assoc"]),
        assoc_inv=tuple(tuple(tuple(c) for c in p) for p in payload["assoc_inv"]),
        lunit=tuple(payload["lunit"]),
        lunit_inv=tuple(payload["lunit_inv"]),
        runit=tuple(payload["runit"]),
        runit_inv=tuple(payload["runit_inv"]),
    )
    shift_from_bicat(bic)  # shape validation happens in the relabeled constructor
    return bic


def monoidal_functor_from(payload) -> MonoidalFunctor:
    _require_keys(
        payload,
        {
            "kind",
            "source",
            "target",
            "object_map",
            "morphism_map",
            "tensor_comparison",
            "unit_comparison",
        },
    )
    src = moncat_from(payload["source"])
    tgt = moncat_from(payload["target"])
    fun = CatFunctor(src.base, tgt.base, payload["object_map"], payload["morphism_map"])
    return MonoidalFunctor(src, tgt, fun, payload["tensor_comparison"], payload["unit_comparison"])


def monoidal_transformation_from(payload) -> MonoidalTransformation:
    _require_keys(payload, {"kind", "source_functor", "target_functor", "components"})
    return MonoidalTransformation(
        monoidal_functor_from(payload["source_functor"]),
        monoidal_functor_from(payload["target_functor"]),
        payload["components"],
    )


def deg_transformation_from(payload) -> DegTransformation:
    _require_keys(
        payload,
        {"kind", "source_functor", "target_functor", "dist_obj", "components", "lax", "oplax"},
    )
    return DegTransformation(
        monoidal_functor_from(payload["source_functor"]),
        monoidal_functor_from(payload["target_functor"]),
        payload["dist_obj"],
        payload["components"],
        lax=bool(payload["lax"]),
        oplax=bool(payload["oplax"]),
    )


def deg_modification_from(payload) -> DegModification:
    _require_keys(payload, {"kind", "source_transformation", "target_transformation", "gamma"})
    return DegModification(
        deg_transformation_from(payload["source_transformation"]),
        deg_transformation_from(payload["target_transformation"]),
        payload["gamma"],
    )


def monad_from(payload) -> FinMonad:
    _require_keys(payload, {"kind", "base", "object_map", "morphism_map", "eta", "mu"})
    base = category_from(payload["base"])
    endo = FinEndofunctor(base, payload["object_map"], payload["morphism_map"])
    return FinMonad(endo, payload["eta"], payload["mu"])


def monad_functor_from(payload) -> MonadFunctor:
    _require_keys(payload, {"kind", "source", "target", "object_map", "morphism_map", "phi"})
    src = monad_from(payload["source"])
    tgt = monad_from(payload["target"])
    u = CatFunctor(src.endo.base, tgt.endo.base, payload["object_map"], payload["morphism_map"])
    return MonadFunctor(src, tgt, u, payload["phi"])


def monad_transformation_from(payload) -> MonadFunctorTransformation:
    _require_keys(payload, {"kind", "source", "target", "gamma"})
    return MonadFunctorTransformation(
        monad_functor_from(payload["source"]),
        monad_functor_from(payload["target"]),
        payload["gamma"],
    )


_LOADERS = {
    "monoid": monoid_from,
    "degenerate_category": degenerate_category_from,
    "nat_trans": nat_trans_from,
    "ddbicat": ddbicat_from,
    "dd_functor": dd_functor_from,
    "dd_transformation": dd_transformation_from,
    "dd_modification": dd_modification_from,
    "category": category_from,
    "moncat": moncat_from,
    "degenerate_bicat": degenerate_bicat_from,
    "monoidal_functor": monoidal_functor_from,
    "monoidal_transformation": monoidal_transformation_from,
    "deg_transformation": deg_transformation_from,
    "deg_modification": deg_modification_from,
    "monad": monad_from,
    "monad_functor": monad_functor_from,
    "monad_transformation": monad_transformation_from,
}


def structure_from_payload(payload):
    if not isinstance(payload, dict) or "kind" not in payload:
        raise StructuralError("payload must be an object with a 'kind' key")
    kind = payload["kind"]
    loader = _LOADERS.get(kind)
    if loader is None:
        raise StructuralError(f"unknown kind {kind!r}")
    if kind == "monoid" and "die" in payload:
        return cmon_die_from(payload)
    return loader(payload)


# -- validation dispatch -------------------------------------------------------


def _validate_monoid(payload) -> ValidationReport:
    _require_keys(payload, {"kind", "size", "unit", "mul"}, {"die"})
    if "die" not in payload:
        m = monoid_from(payload)
        return check_monoid(m.mul, m.unit)
    m = monoid_from(payload)
    report = check_monoid(m.mul, m.unit)
    report.subject = "cmon_die"
    if not (0 <= payload["die"] < m.size):
        report.add_structural("die-range", (payload["die"],))
        return report
    for x, y in check_commutative(m):
        report.add("commutativity", (x, y))
    if invert(m, payload["die"]) is None:
        report.add("die-invertible", (payload["die"],), "no inverse exists")
    return report


def _validate_ddbicat(payload) -> ValidationReport:
    b = ddbicat_from(payload)
    report = check_ddbicat(b)
    if report.ok:
        eh = eckmann_hilton_report(b)
        for criterion, passed, witness in eh.findings:
            if not passed:
                report.add(f"derived-{criterion}", tuple(witness or ()))
    return report


def _validate_degenerate_category(payload) -> ValidationReport:
    c = degenerate_category_from(payload)
    report = check_monoid(c.hom.mul, c.hom.unit)
    report.subject = "degenerate_category"
    return report


def _validate_dd_functor(payload) -> ValidationReport:
    f = dd_functor_from(payload)
    report = ValidationReport("dd_functor")
    report.extend(check_cmon_die(f.source), prefix="source-")
    report.extend(check_cmon_die(f.target), prefix="target-")
    report.extend(check_dd_functor(f))
    return report


def _validate_dd_transformation(payload) -> ValidationReport:
    return check_dd_transformation(dd_transformation_from(payload))


def _validate_dd_modification(payload) -> ValidationReport:
    return check_modification(dd_modification_from(payload))


def _validate_degenerate_bicat(payload) -> ValidationReport:
    return check_degenerate_bicat(degenerate_bicat_from(payload))


_VALIDATORS = {
    "monoid": _validate_monoid,
    "degenerate_category": _validate_degenerate_category,
    "nat_trans": lambda p: check_nat_trans(nat_trans_from(p)),
    "ddbicat": _validate_ddbicat,
    "dd_functor": _validate_dd_functor,
    "dd_transformation": _validate_dd_transformation,
    "dd_modification": _validate_dd_modification,
    "category": lambda p: check_category(category_from(p)),
    "moncat": lambda p: check_monoidal(moncat_from(p)),
    "degenerate_bicat": _validate_degenerate_bicat,
    "monoidal_functor": lambda p: check_monoidal_functor(monoidal_functor_from(p)),
    "monoidal_transformation": lambda p: check_monoidal_transformation(
        monoidal_transformation_from(p)
    ),
    "deg_transformation": lambda p: check_deg_transformation(deg_transformation_from(p)),
    "deg_modification": lambda p: check_deg_modification(deg_modification_from(p)),
    "monad": lambda p: check_monad(monad_from(p)),
    "monad_functor": lambda p: check_monad_functor(monad_functor_from(p)),
    "monad_transformation": lambda p: check_monad_transformation(monad_transformation_from(p)),
}


def validate_payload(payload) -> ValidationReport:
    """Dispatch a parsed JSON object to its axiom checker by kind."""
    if not isinstance(payload, dict) or "kind" not in payload:
        raise StructuralError("payload must be an object with a 'kind' key")
    kind = payload["kind"]
    validator = _VALIDATORS.get(kind)
    if validator is None:
        raise StructuralError(f"unknown kind {kind!r}")
    return validator(payload)
