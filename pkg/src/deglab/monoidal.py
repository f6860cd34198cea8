"""Finite monoidal categories, their functors and transformations, and the
relabeling to and from one-0-cell bicategories.

Conventions: tensor_mor[f][g] is f (x) g; assoc[A][B][C] goes
(A(x)B)(x)C -> A(x)(B(x)C); lunit[A]: I(x)A -> A; runit[A]: A(x)I -> A.
Transformations come in two directions: the weak direction has components
GA(x)d -> d(x)FA for a distinguished object d, the oplax direction the
reverse.  Composition of transformations is by the standard pasting; its
failure to be strictly unital or associative is a feature under test, not
a bug.
"""

import itertools
from dataclasses import dataclass

from .equivalence import FiniteJCategory, JFunctor, check_external_equivalence
from .fincat import (
    CatFunctor,
    FiniteCategory,
    check_category,
    check_functor,
    compose_functors,
    enumerate_functors,
    identity_functor,
)
from .report import (
    EquivalenceReport,
    InvalidStructureError,
    StructuralError,
    ValidationReport,
)


def _nested3(rows):
    return tuple(tuple(tuple(int(v) for v in col) for col in plane) for plane in rows)


def _table2(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FinMonoidalCategory:
    base: FiniteCategory
    tensor_obj: tuple  # n x n object indices
    tensor_mor: tuple  # m x m morphism indices
    unit_obj: int
    assoc: tuple  # n x n x n morphism indices, with inverses
    assoc_inv: tuple
    lunit: tuple  # per object, with inverses
    lunit_inv: tuple
    runit: tuple
    runit_inv: tuple

    def __post_init__(self):
        object.__setattr__(self, "tensor_obj", _table2(self.tensor_obj))
        object.__setattr__(self, "tensor_mor", _table2(self.tensor_mor))
        object.__setattr__(self, "assoc", _nested3(self.assoc))
        object.__setattr__(self, "assoc_inv", _nested3(self.assoc_inv))
        for name in ("lunit", "lunit_inv", "runit", "runit_inv"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        n = self.base.n_objects
        m = len(self.base.morphisms)
        if not (0 <= self.unit_obj < n):
            raise StructuralError("unit object out of range")
        if len(self.tensor_obj) != n or any(len(r) != n for r in self.tensor_obj):
            raise StructuralError("tensor_obj must be n x n")
        if any(not (0 <= v < n) for r in self.tensor_obj for v in r):
            raise StructuralError("tensor_obj entry out of range")
        if len(self.tensor_mor) != m or any(len(r) != m for r in self.tensor_mor):
            raise StructuralError("tensor_mor must be m x m")
        if any(not (0 <= v < m) for r in self.tensor_mor for v in r):
            raise StructuralError("tensor_mor entry out of range")
        for name in ("assoc", "assoc_inv"):
            t = getattr(self, name)
            if len(t) != n or any(len(p) != n for p in t) or any(
                len(c) != n for p in t for c in p
            ):
                raise StructuralError(f"{name} must be n x n x n")
            if any(not (0 <= v < m) for p in t for c in p for v in c):
                raise StructuralError(f"{name} entry out of range")
        for name in ("lunit", "lunit_inv", "runit", "runit_inv"):
            t = getattr(self, name)
            if len(t) != n:
                raise StructuralError(f"{name} must have one component per object")
            if any(not (0 <= v < m) for v in t):
                raise StructuralError(f"{name} entry out of range")

    def tob(self, a, b):
        return self.tensor_obj[a][b]

    def tmor(self, f, g):
        return self.tensor_mor[f][g]


def _is_iso(c: FiniteCategory, f: int) -> bool:
    s, t = c.morphisms[f]
    return any(
        c.comp[g][f] == c.identities[s] and c.comp[f][g] == c.identities[t]
        for g in c.hom(t, s)
    )


def check_monoidal(mc: FinMonoidalCategory) -> ValidationReport:
    """Itemized axioms: bifunctoriality, naturality, pentagon, triangle.

    The base category report is merged in; constraint components with wrong
    endpoints are structural failures since the diagrams cannot even be
    formed.  The pentagon and triangle equations written here are mirrored
    by the formal-composite evaluator in `coherence` for cross-checking.
    """
    c = mc.base
    report = ValidationReport("monoidal_category")
    report.extend(check_category(c), prefix="base-")
    if not report.well_formed:
        return report
    n = c.n_objects

    for a in range(n):
        for b in range(n):
            for x in range(n):
                f = mc.assoc[a][b][x]
                want = (mc.tob(mc.tob(a, b), x), mc.tob(a, mc.tob(b, x)))
                if c.morphisms[f] != want:
                    report.add_structural("assoc-endpoints", (a, b, x))
                fi = mc.assoc_inv[a][b][x]
                if c.morphisms[fi] != (want[1], want[0]):
                    report.add_structural("assoc-inv-endpoints", (a, b, x))
    for a in range(n):
        if c.morphisms[mc.lunit[a]] != (mc.tob(mc.unit_obj, a), a):
            report.add_structural("lunit-endpoints", (a,))
        if c.morphisms[mc.lunit_inv[a]] != (a, mc.tob(mc.unit_obj, a)):
            report.add_structural("lunit-inv-endpoints", (a,))
        if c.morphisms[mc.runit[a]] != (mc.tob(a, mc.unit_obj), a):
            report.add_structural("runit-endpoints", (a,))
        if c.morphisms[mc.runit_inv[a]] != (a, mc.tob(a, mc.unit_obj)):
            report.add_structural("runit-inv-endpoints", (a,))
    for f, (s1, t1) in enumerate(c.morphisms):
        for g, (s2, t2) in enumerate(c.morphisms):
            if c.morphisms[mc.tmor(f, g)] != (mc.tob(s1, s2), mc.tob(t1, t2)):
                report.add_structural("tensor-endpoints", (f, g))
    if not report.well_formed:
        return report

    for a in range(n):
        for b in range(n):
            if mc.tmor(c.identities[a], c.identities[b]) != c.identities[mc.tob(a, b)]:
                report.add("bifunctor-identities", (a, b))
    mor = range(len(c.morphisms))
    for g in mor:
        for f in mor:
            if c.comp[g][f] is None:
                continue
            for k in mor:
                for h in mor:
                    if c.comp[k][h] is None:
                        continue
                    lhs = mc.tmor(c.comp[g][f], c.comp[k][h])
                    rhs = c.comp[mc.tmor(g, k)][mc.tmor(f, h)]
                    if lhs != rhs:
                        report.add("bifunctor-interchange", (g, f, k, h))

    for f, (a, a2) in enumerate(c.morphisms):
        for g, (b, b2) in enumerate(c.morphisms):
            for h, (x, x2) in enumerate(c.morphisms):
                lhs = c.comp[mc.assoc[a2][b2][x2]][mc.tmor(mc.tmor(f, g), h)]
                rhs = c.comp[mc.tmor(f, mc.tmor(g, h))][mc.assoc[a][b][x]]
                if lhs != rhs:
                    report.add("assoc-naturality", (f, g, h))
    iu = c.identities[mc.unit_obj]
    for f, (a, b) in enumerate(c.morphisms):
        if c.comp[mc.lunit[b]][mc.tmor(iu, f)] != c.comp[f][mc.lunit[a]]:
            report.add("lunit-naturality", (f,))
        if c.comp[mc.runit[b]][mc.tmor(f, iu)] != c.comp[f][mc.runit[a]]:
            report.add("runit-naturality", (f,))

    for name, comp, inv, idx in (
        ("assoc", mc.assoc, mc.assoc_inv, 3),
        ("lunit", mc.lunit, mc.lunit_inv, 1),
        ("runit", mc.runit, mc.runit_inv, 1),
    ):
        if idx == 1:
            pairs = [((a,), comp[a], inv[a]) for a in range(n)]
        else:
            pairs = [
                ((a, b, x), comp[a][b][x], inv[a][b][x])
                for a in range(n)
                for b in range(n)
                for x in range(n)
            ]
        for where, f, fi in pairs:
            s, t = c.morphisms[f]
            if c.comp[fi][f] != c.identities[s] or c.comp[f][fi] != c.identities[t]:
                report.add(f"{name}-invertible", where)

    for a in range(n):
        for b in range(n):
            for x in range(n):
                for d in range(n):
                    lhs = c.comp[mc.assoc[a][b][mc.tob(x, d)]][mc.assoc[mc.tob(a, b)][x][d]]
                    inner = c.comp[mc.assoc[a][mc.tob(b, x)][d]][
                        mc.tmor(mc.assoc[a][b][x], c.identities[d])
                    ]
                    rhs = c.comp[mc.tmor(c.identities[a], mc.assoc[b][x][d])][inner]
                    if lhs != rhs:
                        report.add("pentagon", (a, b, x, d))
    for a in range(n):
        for b in range(n):
            lhs = c.comp[mc.tmor(c.identities[a], mc.lunit[b])][mc.assoc[a][mc.unit_obj][b]]
            rhs = mc.tmor(mc.runit[a], c.identities[b])
            if lhs != rhs:
                report.add("triangle", (a, b))
    return report


# -- monoidal functors --------------------------------------------------------


@dataclass(frozen=True)
class MonoidalFunctor:
    source: FinMonoidalCategory
    target: FinMonoidalCategory
    functor: CatFunctor
    tensor_comparison: tuple  # n x n morphism indices FA(x)FB -> F(A(x)B)
    unit_comparison: int  # I' -> FI

    def __post_init__(self):
        object.__setattr__(self, "tensor_comparison", _table2(self.tensor_comparison))
        if self.functor.source != self.source.base or self.functor.target != self.target.base:
            raise StructuralError("underlying functor endpoints mismatch")
        n = self.source.base.n_objects
        m = len(self.target.base.morphisms)
        if len(self.tensor_comparison) != n or any(
            len(r) != n for r in self.tensor_comparison
        ):
            raise StructuralError("tensor_comparison must be n x n")
        if any(not (0 <= v < m) for r in self.tensor_comparison for v in r):
            raise StructuralError("tensor_comparison entry out of range")
        if not (0 <= self.unit_comparison < m):
            raise StructuralError("unit_comparison out of range")


def check_monoidal_functor(mf: MonoidalFunctor) -> ValidationReport:
    """Underlying functoriality, comparison naturality, hexagon, unit squares."""
    report = ValidationReport("monoidal_functor")
    report.extend(check_functor(mf.functor), prefix="base-")
    src, tgt = mf.source, mf.target
    c, d = src.base, tgt.base
    fo, fm = mf.functor.on_obj, mf.functor.on_mor
    n = c.n_objects

    for a in range(n):
        for b in range(n):
            phi = mf.tensor_comparison[a][b]
            want = (tgt.tob(fo(a), fo(b)), fo(src.tob(a, b)))
            if d.morphisms[phi] != want:
                report.add_structural("comparison-endpoints", (a, b))
    if d.morphisms[mf.unit_comparison] != (tgt.unit_obj, fo(src.unit_obj)):
        report.add_structural("unit-comparison-endpoints", ())
    if not report.well_formed:
        return report

    for a in range(n):
        for b in range(n):
            if not _is_iso(d, mf.tensor_comparison[a][b]):
                report.add("comparison-invertible", (a, b))
    if not _is_iso(d, mf.unit_comparison):
        report.add("unit-comparison-invertible", ())

    for f, (a, a2) in enumerate(c.morphisms):
        for g, (b, b2) in enumerate(c.morphisms):
            lhs = d.comp[mf.tensor_comparison[a2][b2]][tgt.tmor(fm(f), fm(g))]
            rhs = d.comp[fm(src.tmor(f, g))][mf.tensor_comparison[a][b]]
            if lhs != rhs:
                report.add("comparison-naturality", (f, g))

    for a in range(n):
        for b in range(n):
            for x in range(n):
                lhs = d.comp[fm(src.assoc[a][b][x])][
                    d.comp[mf.tensor_comparison[src.tob(a, b)][x]][
                        tgt.tmor(mf.tensor_comparison[a][b], d.identities[fo(x)])
                    ]
                ]
                rhs = d.comp[mf.tensor_comparison[a][src.tob(b, x)]][
                    d.comp[tgt.tmor(d.identities[fo(a)], mf.tensor_comparison[b][x])][
                        tgt.assoc[fo(a)][fo(b)][fo(x)]
                    ]
                ]
                if lhs != rhs:
                    report.add("hexagon", (a, b, x))

    for a in range(n):
        lhs = d.comp[fm(src.lunit[a])][
            d.comp[mf.tensor_comparison[src.unit_obj][a]][
                tgt.tmor(mf.unit_comparison, d.identities[fo(a)])
            ]
        ]
        if lhs != tgt.lunit[fo(a)]:
            report.add("left-unit-square", (a,))
        rhs = d.comp[fm(src.runit[a])][
            d.comp[mf.tensor_comparison[a][src.unit_obj]][
                tgt.tmor(d.identities[fo(a)], mf.unit_comparison)
            ]
        ]
        if rhs != tgt.runit[fo(a)]:
            report.add("right-unit-square", (a,))
    return report


def identity_monoidal_functor(mc: FinMonoidalCategory) -> MonoidalFunctor:
    c = mc.base
    comp = tuple(
        tuple(c.identities[mc.tob(a, b)] for b in range(c.n_objects))
        for a in range(c.n_objects)
    )
    return MonoidalFunctor(mc, mc, identity_functor(c), comp, c.identities[mc.unit_obj])


def compose_monoidal_functors(g: MonoidalFunctor, f: MonoidalFunctor) -> MonoidalFunctor:
    if f.target != g.source:
        raise StructuralError("monoidal functor composition endpoint mismatch")
    base = compose_functors(g.functor, f.functor)
    d = g.target.base
    n = f.source.base.n_objects
    comp = tuple(
        tuple(
            d.comp[g.functor.on_mor(f.tensor_comparison[a][b])][
                g.tensor_comparison[f.functor.on_obj(a)][f.functor.on_obj(b)]
            ]
            for b in range(n)
        )
        for a in range(n)
    )
    unit = d.comp[g.functor.on_mor(f.unit_comparison)][g.unit_comparison]
    return MonoidalFunctor(f.source, g.target, base, comp, unit)


def enumerate_monoidal_functors(src: FinMonoidalCategory, tgt: FinMonoidalCategory) -> list:
    """Exhaustive functor-data search; feasible at stock sizes only."""
    out = []
    n = src.base.n_objects
    d = tgt.base
    for base in enumerate_functors(src.base, tgt.base):
        fo = base.on_obj
        comp_choices = []
        feasible = True
        for a in range(n):
            for b in range(n):
                cands = d.hom(tgt.tob(fo(a), fo(b)), fo(src.tob(a, b)))
                if not cands:
                    feasible = False
                    break
                comp_choices.append(cands)
            if not feasible:
                break
        unit_cands = d.hom(tgt.unit_obj, fo(src.unit_obj))
        if not feasible or not unit_cands:
            continue
        for flat in itertools.product(*comp_choices):
            comparison = tuple(
                tuple(flat[a * n + b] for b in range(n)) for a in range(n)
            )
            for u in unit_cands:
                mf = MonoidalFunctor(src, tgt, base, comparison, u)
                if check_monoidal_functor(mf).ok:
                    out.append(mf)
    return out


# -- transformations between monoidal functors, in bicategory clothing --------


@dataclass(frozen=True)
class DegTransformation:
    """A transformation between parallel functors, carried by a distinguished
    object of the target and one component morphism per source object.

    Weak direction: components GA(x)d -> d(x)FA.  Oplax direction (the
    comparison direction): d(x)FA -> GA(x)d.  `lax` drops the invertibility
    requirement on components.
    """

    source_functor: MonoidalFunctor
    target_functor: MonoidalFunctor
    dist_obj: int
    components: tuple
    lax: bool = False
    oplax: bool = False

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(v) for v in self.components))
        f, g = self.source_functor, self.target_functor
        if f.source != g.source or f.target != g.target:
            raise StructuralError("functors are not parallel")
        if not (0 <= self.dist_obj < f.target.base.n_objects):
            raise StructuralError("distinguished object out of range")
        if len(self.components) != f.source.base.n_objects:
            raise StructuralError("one component per source object required")


def _component_endpoints(t: DegTransformation, a: int):
    y = t.source_functor.target
    fa = t.source_functor.functor.on_obj(a)
    ga = t.target_functor.functor.on_obj(a)
    if t.oplax:
        return (y.tob(t.dist_obj, fa), y.tob(ga, t.dist_obj))
    return (y.tob(ga, t.dist_obj), y.tob(t.dist_obj, fa))


def check_deg_transformation(t: DegTransformation) -> ValidationReport:
    """The three diagram families at every instantiation, plus invertibility
    of the components unless the transformation is flagged lax."""
    report = ValidationReport("deg_transformation")
    fmf, gmf = t.source_functor, t.target_functor
    y = fmf.target
    d = y.base
    c = fmf.source.base
    for a in range(c.n_objects):
        if d.morphisms[t.components[a]] != _component_endpoints(t, a):
            report.add_structural("component-endpoints", (a,))
    if not report.well_formed:
        return report

    if not t.lax:
        for a in range(c.n_objects):
            if not _is_iso(d, t.components[a]):
                report.add("component-invertible", (a,))

    fo, fm = fmf.functor.on_obj, fmf.functor.on_mor
    go, gm = gmf.functor.on_obj, gmf.functor.on_mor
    alpha = t.dist_obj
    ida = d.identities[alpha]

    for m, (a, b) in enumerate(c.morphisms):
        if t.oplax:
            lhs = d.comp[y.tmor(gm(m), ida)][t.components[a]]
            rhs = d.comp[t.components[b]][y.tmor(ida, fm(m))]
        else:
            lhs = d.comp[y.tmor(ida, fm(m))][t.components[a]]
            rhs = d.comp[t.components[b]][y.tmor(gm(m), ida)]
        if lhs != rhs:
            report.add("naturality", (m,))

    phi = fmf.tensor_comparison
    psi = gmf.tensor_comparison
    for a in range(c.n_objects):
        for b in range(c.n_objects):
            fa, fb, ga, gb = fo(a), fo(b), go(a), go(b)
            comp_ab = t.components[fmf.source.tob(a, b)]
            if t.oplax:
                path = y.assoc_inv[alpha][fa][fb]
                path = d.comp[y.tmor(t.components[a], d.identities[fb])][path]
                path = d.comp[y.assoc[ga][alpha][fb]][path]
                path = d.comp[y.tmor(d.identities[ga], t.components[b])][path]
                path = d.comp[y.assoc_inv[ga][gb][alpha]][path]
                path = d.comp[y.tmor(psi[a][b], ida)][path]
                other = d.comp[comp_ab][y.tmor(ida, phi[a][b])]
            else:
                path = y.assoc[ga][gb][alpha]
                path = d.comp[y.tmor(d.identities[ga], t.components[b])][path]
                path = d.comp[y.assoc_inv[ga][alpha][fb]][path]
                path = d.comp[y.tmor(t.components[a], d.identities[fb])][path]
                path = d.comp[y.assoc[alpha][fa][fb]][path]
                path = d.comp[y.tmor(ida, phi[a][b])][path]
                other = d.comp[comp_ab][y.tmor(psi[a][b], ida)]
            if path != other:
                report.add("associativity-diagram", (a, b))

    iu = fmf.source.unit_obj
    phi0, psi0 = fmf.unit_comparison, gmf.unit_comparison
    if t.oplax:
        lhs = d.comp[t.components[iu]][y.tmor(ida, phi0)]
        rhs = d.comp[y.tmor(psi0, ida)][d.comp[y.lunit_inv[alpha]][y.runit[alpha]]]
    else:
        lhs = d.comp[t.components[iu]][y.tmor(psi0, ida)]
        rhs = d.comp[y.tmor(ida, phi0)][d.comp[y.runit_inv[alpha]][y.lunit[alpha]]]
    if lhs != rhs:
        report.add("unit-diagram", ())
    return report


def identity_deg_transformation(mf: MonoidalFunctor, oplax: bool = False) -> DegTransformation:
    """The identity 2-cell: distinguished object I with unitor components."""
    y = mf.target
    d = y.base
    comps = []
    for a in range(mf.source.base.n_objects):
        fa = mf.functor.on_obj(a)
        if oplax:
            comps.append(d.comp[y.runit_inv[fa]][y.lunit[fa]])
        else:
            comps.append(d.comp[y.lunit_inv[fa]][y.runit[fa]])
    return DegTransformation(mf, mf, y.unit_obj, tuple(comps), lax=False, oplax=oplax)


def compose_deg_transformations(t2: DegTransformation, t1: DegTransformation) -> DegTransformation:
    """Pasting composite; its distinguished object is the tensor d2 (x) d1.

    Strict unitality and associativity genuinely fail here: composing with
    the identity yields I (x) d, which need not equal d as an object.
    """
    if t1.oplax != t2.oplax:
        raise StructuralError("cannot compose transformations of opposite direction")
    if (
        t1.target_functor != t2.source_functor
        or t1.source_functor.source != t2.source_functor.source
    ):
        raise StructuralError("transformations are not composable")
    fmf = t1.source_functor
    hmf = t2.target_functor
    y = fmf.target
    d = y.base
    a2, a1 = t2.dist_obj, t1.dist_obj
    dist = y.tob(a2, a1)
    comps = []
    for a in range(fmf.source.base.n_objects):
        fa = fmf.functor.on_obj(a)
        ga = t1.target_functor.functor.on_obj(a)
        ha = hmf.functor.on_obj(a)
        if t1.oplax:
            path = y.assoc[a2][a1][fa]
            path = d.comp[y.tmor(d.identities[a2], t1.components[a])][path]
            path = d.comp[y.assoc_inv[a2][ga][a1]][path]
            path = d.comp[y.tmor(t2.components[a], d.identities[a1])][path]
            path = d.comp[y.assoc[ha][a2][a1]][path]
        else:
            path = y.assoc_inv[ha][a2][a1]
            path = d.comp[y.tmor(t2.components[a], d.identities[a1])][path]
            path = d.comp[y.assoc[a2][ga][a1]][path]
            path = d.comp[y.tmor(d.identities[a2], t1.components[a])][path]
            path = d.comp[y.assoc_inv[a2][a1][fa]][path]
        comps.append(path)
    return DegTransformation(
        fmf, hmf, dist, tuple(comps), lax=t1.lax or t2.lax, oplax=t1.oplax
    )


@dataclass(frozen=True)
class DegModification:
    """A morphism between the distinguished objects of two parallel
    transformations, compatible with all components."""

    source_transformation: DegTransformation
    target_transformation: DegTransformation
    gamma: int


def check_deg_modification(mod: DegModification) -> ValidationReport:
    report = ValidationReport("deg_modification")
    ta, tb = mod.source_transformation, mod.target_transformation
    if (
        ta.source_functor != tb.source_functor
        or ta.target_functor != tb.target_functor
        or ta.oplax != tb.oplax
    ):
        report.add_structural("boundaries", (), "transformations are not parallel")
        return report
    y = ta.source_functor.target
    d = y.base
    if d.morphisms[mod.gamma] != (ta.dist_obj, tb.dist_obj):
        report.add_structural("gamma-endpoints", ())
        return report
    c = ta.source_functor.source.base
    fo = ta.source_functor.functor.on_obj
    go = ta.target_functor.functor.on_obj
    for a in range(c.n_objects):
        if ta.oplax:
            lhs = d.comp[y.tmor(d.identities[go(a)], mod.gamma)][ta.components[a]]
            rhs = d.comp[tb.components[a]][y.tmor(mod.gamma, d.identities[fo(a)])]
        else:
            lhs = d.comp[tb.components[a]][y.tmor(d.identities[go(a)], mod.gamma)]
            rhs = d.comp[y.tmor(mod.gamma, d.identities[fo(a)])][ta.components[a]]
        if lhs != rhs:
            report.add("modification-square", (a,))
    return report


# -- ordinary monoidal transformations and the comparison-direction embedding -


@dataclass(frozen=True)
class MonoidalTransformation:
    """Componentwise FA -> GA, compatible with both comparisons."""

    source_functor: MonoidalFunctor
    target_functor: MonoidalFunctor
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(v) for v in self.components))
        f, g = self.source_functor, self.target_functor
        if f.source != g.source or f.target != g.target:
            raise StructuralError("functors are not parallel")
        if len(self.components) != f.source.base.n_objects:
            raise StructuralError("one component per source object required")


def check_monoidal_transformation(t: MonoidalTransformation) -> ValidationReport:
    report = ValidationReport("monoidal_transformation")
    fmf, gmf = t.source_functor, t.target_functor
    d = fmf.target.base
    c = fmf.source.base
    for a in range(c.n_objects):
        want = (fmf.functor.on_obj(a), gmf.functor.on_obj(a))
        if d.morphisms[t.components[a]] != want:
            report.add_structural("component-endpoints", (a,))
    if not report.well_formed:
        return report
    for m, (a, b) in enumerate(c.morphisms):
        lhs = d.comp[t.components[b]][fmf.functor.on_mor(m)]
        rhs = d.comp[gmf.functor.on_mor(m)][t.components[a]]
        if lhs != rhs:
            report.add("naturality", (m,))
    y = fmf.target
    for a in range(c.n_objects):
        for b in range(c.n_objects):
            lhs = d.comp[t.components[fmf.source.tob(a, b)]][fmf.tensor_comparison[a][b]]
            rhs = d.comp[gmf.tensor_comparison[a][b]][y.tmor(t.components[a], t.components[b])]
            if lhs != rhs:
                report.add("tensor-compatibility", (a, b))
    iu = fmf.source.unit_obj
    if d.comp[t.components[iu]][fmf.unit_comparison] != gmf.unit_comparison:
        report.add("unit-compatibility", ())
    return report


def embed_monoidal_transformation(t: MonoidalTransformation) -> DegTransformation:
    """Re-express an ordinary monoidal transformation in the comparison
    direction: distinguished object I, component at A the composite
    I(x)FA -> FA -> GA -> GA(x)I through the unitors."""
    trep = check_monoidal_transformation(t)
    if not trep.ok:
        raise InvalidStructureError("input is not a monoidal transformation")
    y = t.source_functor.target
    d = y.base
    comps = []
    invertible = True
    for a in range(t.source_functor.source.base.n_objects):
        fa = t.source_functor.functor.on_obj(a)
        ga = t.target_functor.functor.on_obj(a)
        path = d.comp[t.components[a]][y.lunit[fa]]
        path = d.comp[y.runit_inv[ga]][path]
        comps.append(path)
        if not _is_iso(d, path):
            invertible = False
    return DegTransformation(
        t.source_functor,
        t.target_functor,
        y.unit_obj,
        tuple(comps),
        lax=not invertible,
        oplax=True,
    )


def compose_monoidal_transformations(
    t2: MonoidalTransformation, t1: MonoidalTransformation
) -> MonoidalTransformation:
    d = t1.source_functor.target.base
    comps = tuple(
        d.compose(t2.components[a], t1.components[a])
        for a in range(t1.source_functor.source.base.n_objects)
    )
    return MonoidalTransformation(t1.source_functor, t2.target_functor, comps)


def identity_monoidal_transformation(mf: MonoidalFunctor) -> MonoidalTransformation:
    d = mf.target.base
    comps = tuple(
        d.identities[mf.functor.on_obj(a)] for a in range(mf.source.base.n_objects)
    )
    return MonoidalTransformation(mf, mf, comps)


def enumerate_monoidal_transformations(
    f: MonoidalFunctor, g: MonoidalFunctor
) -> list:
    """All monoidal transformations f => g, by exhausting component tuples."""
    d = f.target.base
    n = f.source.base.n_objects
    choices = [d.hom(f.functor.on_obj(a), g.functor.on_obj(a)) for a in range(n)]
    if any(not c for c in choices):
        return []
    out = []
    for comps in itertools.product(*choices):
        t = MonoidalTransformation(f, g, comps)
        if check_monoidal_transformation(t).ok:
            out.append(t)
    return out


def unit_distobj_closure_witness(mc: FinMonoidalCategory):
    """Two unit-object transformations whose composite leaves the class.

    Returns (t1, t2, composite, closed) where closed says whether the
    composite's distinguished object is again the unit.  Computing the
    actual closure is out of scope; this only detects the failure.
    """
    ident = identity_monoidal_functor(mc)
    t1 = identity_deg_transformation(ident)
    t2 = identity_deg_transformation(ident)
    comp = compose_deg_transformations(t2, t1)
    return t1, t2, comp, comp.dist_obj == mc.unit_obj


# -- the dimension shift ------------------------------------------------------


@dataclass(frozen=True)
class DegenerateBicategory:
    """A one-0-cell bicategory, stored in bicategory vocabulary.

    The fields are in bijection with a monoidal category's: 1-cells are
    objects, 2-cells are morphisms, composition along the 0-cell is the
    tensor.  Shifting in either direction is a pure relabeling and round
    trips are bit-exact.
    """

    one_cells: int
    two_cells: tuple  # (src, tgt) pairs of 1-cell indices
    identities: tuple  # identity 2-cell per 1-cell
    vcomp: tuple  # partial table over 2-cells
    hcomp_one: tuple  # composition of 1-cells
    hcomp_two: tuple  # horizontal composition of 2-cells
    unit_one: int  # the identity 1-cell on the unique 0-cell
    assoc: tuple
    assoc_inv: tuple
    lunit: tuple
    lunit_inv: tuple
    runit: tuple
    runit_inv: tuple


def shift_to_bicat(mc: FinMonoidalCategory) -> DegenerateBicategory:
    return DegenerateBicategory(
        one_cells=mc.base.n_objects,
        two_cells=mc.base.morphisms,
        identities=mc.base.identities,
        vcomp=mc.base.comp,
        hcomp_one=mc.tensor_obj,
        hcomp_two=mc.tensor_mor,
        unit_one=mc.unit_obj,
        assoc=mc.assoc,
        assoc_inv=mc.assoc_inv,
        lunit=mc.lunit,
        lunit_inv=mc.lunit_inv,
        runit=mc.runit,
        runit_inv=mc.runit_inv,
    )


def shift_from_bicat(b: DegenerateBicategory) -> FinMonoidalCategory:
    base = FiniteCategory(
        n_objects=b.one_cells,
        morphisms=b.two_cells,
        identities=b.identities,
        comp=b.vcomp,
    )
    return FinMonoidalCategory(
        base=base,
        tensor_obj=b.hcomp_one,
        tensor_mor=b.hcomp_two,
        unit_obj=b.unit_one,
        assoc=b.assoc,
        assoc_inv=b.assoc_inv,
        lunit=b.lunit,
        lunit_inv=b.lunit_inv,
        runit=b.runit,
        runit_inv=b.runit_inv,
    )


def check_degenerate_bicat(b: DegenerateBicategory) -> ValidationReport:
    """Validity is by definition validity of the relabeled monoidal category."""
    out = check_monoidal(shift_from_bicat(b))
    out.subject = "degenerate_bicategory"
    return out


def _mc_key(mc: FinMonoidalCategory):
    return (
        mc.base.n_objects,
        mc.base.morphisms,
        mc.base.identities,
        mc.base.comp,
        mc.tensor_obj,
        mc.tensor_mor,
        mc.unit_obj,
        mc.assoc,
        mc.lunit,
        mc.runit,
    )


def check_shift_equivalence(universe: list | None = None, bound: int = 4) -> EquivalenceReport:
    """The category-level comparison from one-0-cell bicategories to monoidal
    categories is an equivalence over the given universe.

    The universe is an explicit list of monoidal categories (positive
    verdicts are sampled, so it is recorded in the report); when omitted it
    defaults to the stock instances within the bound.  1-cells on both sides
    are enumerated exhaustively and compared as sets.
    """
    if universe is None:
        from .examples import stock_monoidal_universe

        universe = stock_monoidal_universe(bound)
    mcs = list(universe)
    functors = {}
    for i, a in enumerate(mcs):
        for k, b in enumerate(mcs):
            functors[(i, k)] = enumerate_monoidal_functors(a, b)

    one_cells = []
    index = {}
    for (i, k), fs in functors.items():
        for fi, f in enumerate(fs):
            index[(i, k, fi)] = len(one_cells)
            one_cells.append((i, k, f))

    def locate(i, k, mf):
        key = (mf.functor.object_map, mf.functor.morphism_map, mf.tensor_comparison, mf.unit_comparison)
        for fi, f in enumerate(functors[(i, k)]):
            if (
                f.functor.object_map,
                f.functor.morphism_map,
                f.tensor_comparison,
                f.unit_comparison,
            ) == key:
                return index[(i, k, fi)]
        raise InvalidStructureError("composite functor missing from enumeration")

    ident = []
    comp = {}
    for i, a in enumerate(mcs):
        ident.append(locate(i, i, identity_monoidal_functor(a)))
    for gi, (i2, k2, g) in enumerate(one_cells):
        for fi, (i1, k1, f) in enumerate(one_cells):
            if k1 != i2:
                continue
            comp[(gi, fi)] = locate(i1, k2, compose_monoidal_functors(g, f))

    left = FiniteJCategory(
        j=1,
        zero_cells=tuple(f"bicat#{i}" for i in range(len(mcs))),
        one_cells=tuple((s, t) for (s, t, _) in one_cells),
        one_identity=tuple(ident),
        one_comp=comp,
    )
    right = FiniteJCategory(
        j=1,
        zero_cells=tuple(f"moncat#{i}" for i in range(len(mcs))),
        one_cells=tuple((s, t) for (s, t, _) in one_cells),
        one_identity=tuple(ident),
        one_comp=comp,
    )
    fun = JFunctor(left, right, tuple(range(len(mcs))), tuple(range(len(one_cells))))
    report = check_external_equivalence(fun)
    report.name = "shift-comparison"
    report.bound = bound
    report.universe = f"stock universe of {len(mcs)} monoidal categories"

    roundtrip = all(
        _mc_key(shift_from_bicat(shift_to_bicat(mc))) == _mc_key(mc) for mc in mcs
    )
    report.add(
        "shift-round-trip-identity",
        roundtrip,
        dimension=0,
        detail="relabeling there and back is bit-exact on every universe member",
    )
    def fkey(f):
        return (
            f.functor.object_map,
            f.functor.morphism_map,
            f.tensor_comparison,
            f.unit_comparison,
        )

    bijective = all(
        len(functors[(i, k)]) == len({fkey(f) for f in functors[(i, k)]})
        for (i, k) in functors
    )
    report.add(
        "hom-set-bijection",
        bijective,
        dimension=1,
        detail="weak functors correspond one-to-one with monoidal functors per pair",
    )
    return report
