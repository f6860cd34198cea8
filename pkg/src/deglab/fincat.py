"""Finite categories with explicit composition tables, plus functors and
natural transformations between them.  Substrate for the monoidal and monad
layers.

comp[g][f] is g after f when tgt(f) = src(g), and None otherwise.
"""

import itertools
from dataclasses import dataclass

from .monoids import FiniteMonoid
from .report import StructuralError, ValidationReport


@dataclass(frozen=True)
class FiniteCategory:
    n_objects: int
    morphisms: tuple  # (src, tgt) pairs
    identities: tuple  # morphism index per object
    comp: tuple  # comp[g][f] = g after f, or None

    def __post_init__(self):
        object.__setattr__(
            self, "morphisms", tuple((int(s), int(t)) for s, t in self.morphisms)
        )
        object.__setattr__(self, "identities", tuple(int(v) for v in self.identities))
        object.__setattr__(
            self,
            "comp",
            tuple(tuple(None if v is None else int(v) for v in row) for row in self.comp),
        )
        m = len(self.morphisms)
        if self.n_objects <= 0:
            raise StructuralError("category needs at least one object")
        for i, (s, t) in enumerate(self.morphisms):
            if not (0 <= s < self.n_objects and 0 <= t < self.n_objects):
                raise StructuralError(f"morphism {i} endpoints out of range")
        if len(self.identities) != self.n_objects:
            raise StructuralError("one identity per object required")
        for a, i in enumerate(self.identities):
            if not (0 <= i < m):
                raise StructuralError(f"identity of object {a} out of range")
        if len(self.comp) != m or any(len(r) != m for r in self.comp):
            raise StructuralError("composition table must be square over morphisms")
        for g in range(m):
            for f in range(m):
                v = self.comp[g][f]
                if v is not None and not (0 <= v < m):
                    raise StructuralError(f"comp[{g}][{f}] out of range")

    def src(self, f: int) -> int:
        return self.morphisms[f][0]

    def tgt(self, f: int) -> int:
        return self.morphisms[f][1]

    def compose(self, g: int, f: int) -> int:
        v = self.comp[g][f]
        if v is None:
            raise StructuralError(f"morphisms {g} after {f} are not composable")
        return v

    def hom(self, a: int, b: int) -> list:
        return [f for f, (s, t) in enumerate(self.morphisms) if s == a and t == b]

    def iso_between(self, a: int, b: int):
        """An isomorphism a -> b together with its inverse, or None."""
        for f in self.hom(a, b):
            for g in self.hom(b, a):
                if (
                    self.comp[g][f] == self.identities[a]
                    and self.comp[f][g] == self.identities[b]
                ):
                    return f, g
        return None


def check_category(c: FiniteCategory) -> ValidationReport:
    """Definedness pattern, identity laws, associativity over all triples."""
    report = ValidationReport("category")
    m = len(c.morphisms)
    for a, i in enumerate(c.identities):
        if c.morphisms[i] != (a, a):
            report.add_structural("identity-endpoints", (a,))
    for g in range(m):
        for f in range(m):
            defined = c.comp[g][f] is not None
            composable = c.tgt(f) == c.src(g)
            if defined != composable:
                report.add_structural("composition-domain", (g, f))
            elif defined:
                h = c.comp[g][f]
                if (c.src(h), c.tgt(h)) != (c.src(f), c.tgt(g)):
                    report.add_structural("composition-endpoints", (g, f))
    if not report.well_formed:
        return report
    for f in range(m):
        if c.comp[c.identities[c.tgt(f)]][f] != f:
            report.add("left-identity", (f,))
        if c.comp[f][c.identities[c.src(f)]] != f:
            report.add("right-identity", (f,))
    for g in range(m):
        for f in range(m):
            if c.comp[g][f] is None:
                continue
            for h in range(m):
                if c.comp[h][g] is None:
                    continue
                if c.comp[h][c.comp[g][f]] != c.comp[c.comp[h][g]][f]:
                    report.add("associativity", (h, g, f))
    return report


@dataclass(frozen=True)
class CatFunctor:
    source: FiniteCategory
    target: FiniteCategory
    object_map: tuple
    morphism_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(int(v) for v in self.object_map))
        object.__setattr__(self, "morphism_map", tuple(int(v) for v in self.morphism_map))
        if len(self.object_map) != self.source.n_objects:
            raise StructuralError("object map length mismatch")
        if len(self.morphism_map) != len(self.source.morphisms):
            raise StructuralError("morphism map length mismatch")
        for v in self.object_map:
            if not (0 <= v < self.target.n_objects):
                raise StructuralError("object image out of range")
        for v in self.morphism_map:
            if not (0 <= v < len(self.target.morphisms)):
                raise StructuralError("morphism image out of range")

    def on_obj(self, a: int) -> int:
        return self.object_map[a]

    def on_mor(self, f: int) -> int:
        return self.morphism_map[f]


def check_functor(fun: CatFunctor) -> ValidationReport:
    report = ValidationReport("functor")
    c, d = fun.source, fun.target
    for f, (s, t) in enumerate(c.morphisms):
        if d.morphisms[fun.on_mor(f)] != (fun.on_obj(s), fun.on_obj(t)):
            report.add("endpoints", (f,))
    for a, i in enumerate(c.identities):
        if fun.on_mor(i) != d.identities[fun.on_obj(a)]:
            report.add("identities", (a,))
    for g in range(len(c.morphisms)):
        for f in range(len(c.morphisms)):
            if c.comp[g][f] is None:
                continue
            img = d.comp[fun.on_mor(g)][fun.on_mor(f)]
            if img is None or img != fun.on_mor(c.comp[g][f]):
                report.add("composition", (g, f))
    return report


def identity_functor(c: FiniteCategory) -> CatFunctor:
    return CatFunctor(c, c, tuple(range(c.n_objects)), tuple(range(len(c.morphisms))))


def compose_functors(g: CatFunctor, f: CatFunctor) -> CatFunctor:
    if f.target != g.source:
        raise StructuralError("functor composition endpoint mismatch")
    return CatFunctor(
        f.source,
        g.target,
        tuple(g.object_map[v] for v in f.object_map),
        tuple(g.morphism_map[v] for v in f.morphism_map),
    )


@dataclass(frozen=True)
class NatTrans:
    source_functor: CatFunctor
    target_functor: CatFunctor
    components: tuple  # morphism per source object: F a -> G a

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(v) for v in self.components))
        if len(self.components) != self.source_functor.source.n_objects:
            raise StructuralError("one component per object required")


def check_natural(t: NatTrans) -> ValidationReport:
    report = ValidationReport("natural_transformation")
    f, g = t.source_functor, t.target_functor
    if f.source != g.source or f.target != g.target:
        report.add_structural("endpoints", (), "functors are not parallel")
        return report
    d = f.target
    for a in range(f.source.n_objects):
        comp = t.components[a]
        if d.morphisms[comp] != (f.on_obj(a), g.on_obj(a)):
            report.add_structural("component-endpoints", (a,))
    if not report.well_formed:
        return report
    for m, (a, b) in enumerate(f.source.morphisms):
        lhs = d.comp[t.components[b]][f.on_mor(m)]
        rhs = d.comp[g.on_mor(m)][t.components[a]]
        if lhs != rhs:
            report.add("naturality", (m,))
    return report


def identity_nat(fun: CatFunctor) -> NatTrans:
    comps = tuple(fun.target.identities[fun.on_obj(a)] for a in range(fun.source.n_objects))
    return NatTrans(fun, fun, comps)


def compose_nats(t2: NatTrans, t1: NatTrans) -> NatTrans:
    """Vertical composite, componentwise."""
    d = t1.source_functor.target
    comps = tuple(
        d.compose(t2.components[a], t1.components[a])
        for a in range(t1.source_functor.source.n_objects)
    )
    return NatTrans(t1.source_functor, t2.target_functor, comps)


def enumerate_functors(c: FiniteCategory, d: FiniteCategory) -> list:
    """All functors c -> d by backtracking over object then morphism images."""
    out = []
    n_mor = len(c.morphisms)

    def fill_morphisms(object_map):
        mor_map = [None] * n_mor
        for a, i in enumerate(c.identities):
            if mor_map[i] is not None and mor_map[i] != d.identities[object_map[a]]:
                return
            mor_map[i] = d.identities[object_map[a]]

        def ok_so_far():
            # every fully-decided composable pair must be preserved
            for x in range(n_mor):
                if mor_map[x] is None:
                    continue
                sx, tx = c.morphisms[x]
                if d.morphisms[mor_map[x]] != (object_map[sx], object_map[tx]):
                    return False
                for y in range(n_mor):
                    if mor_map[y] is None:
                        continue
                    h = c.comp[x][y]
                    if h is None or mor_map[h] is None:
                        continue
                    img = d.comp[mor_map[x]][mor_map[y]]
                    if img is None or img != mor_map[h]:
                        return False
            return True

        if not ok_so_far():
            return

        def place(f):
            if f == n_mor:
                out.append(CatFunctor(c, d, tuple(object_map), tuple(mor_map)))
                return
            if mor_map[f] is not None:
                place(f + 1)
                return
            s, t = c.morphisms[f]
            for cand in d.hom(object_map[s], object_map[t]):
                mor_map[f] = cand
                if ok_so_far():
                    place(f + 1)
                mor_map[f] = None

        place(0)

    for object_map in itertools.product(range(d.n_objects), repeat=c.n_objects):
        fill_morphisms(list(object_map))
    return out


def one_object_category(m: FiniteMonoid) -> FiniteCategory:
    """The category with a single object whose endomorphisms are the monoid.

    comp[g][f] is g after f, matching the monoid's mul(g, f).
    """
    comp = tuple(tuple(m.mul[g][f] for f in range(m.size)) for g in range(m.size))
    return FiniteCategory(
        n_objects=1,
        morphisms=tuple((0, 0) for _ in range(m.size)),
        identities=(m.unit,),
        comp=comp,
    )
