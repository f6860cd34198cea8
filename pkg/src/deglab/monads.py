"""Monads on finite categories, monad functors, and their transformations.

A monad functor (S on C) -> (T on D) is a functor U: C -> D with a natural
transformation phi: TU => US compatible with both units and both
multiplications; a transformation between two of those is a natural
transformation of the underlying functors making the evident square with
the phis commute.  On one-object base categories all of this collapses to
element equations in the endomorphism monoids, which is cross-checked in
the tests.
"""

from dataclasses import dataclass

from .fincat import CatFunctor, FiniteCategory, check_functor, compose_functors
from .report import StructuralError, ValidationReport


@dataclass(frozen=True)
class FinEndofunctor:
    base: FiniteCategory
    object_map: tuple
    morphism_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(int(v) for v in self.object_map))
        object.__setattr__(self, "morphism_map", tuple(int(v) for v in self.morphism_map))
        if len(self.object_map) != self.base.n_objects:
            raise StructuralError("object map length mismatch")
        if len(self.morphism_map) != len(self.base.morphisms):
            raise StructuralError("morphism map length mismatch")

    def as_functor(self) -> CatFunctor:
        return CatFunctor(self.base, self.base, self.object_map, self.morphism_map)

    def on_obj(self, a: int) -> int:
        return self.object_map[a]

    def on_mor(self, f: int) -> int:
        return self.morphism_map[f]


def check_endofunctor(t: FinEndofunctor) -> ValidationReport:
    report = check_functor(t.as_functor())
    report.subject = "endofunctor"
    return report


@dataclass(frozen=True)
class FinMonad:
    """An endofunctor with unit and multiplication components per object."""

    endo: FinEndofunctor
    eta: tuple  # components a -> T a
    mu: tuple  # components T(T a) -> T a

    def __post_init__(self):
        object.__setattr__(self, "eta", tuple(int(v) for v in self.eta))
        object.__setattr__(self, "mu", tuple(int(v) for v in self.mu))
        n = self.endo.base.n_objects
        if len(self.eta) != n or len(self.mu) != n:
            raise StructuralError("one eta and one mu component per object required")


def check_monad(m: FinMonad) -> ValidationReport:
    """Functoriality, naturality of both transformations, unit laws,
    associativity; every violation is located at its object or morphism."""
    report = ValidationReport("monad")
    report.extend(check_endofunctor(m.endo), prefix="endofunctor-")
    c = m.endo.base
    t = m.endo
    for a in range(c.n_objects):
        if c.morphisms[m.eta[a]] != (a, t.on_obj(a)):
            report.add_structural("eta-endpoints", (a,))
        if c.morphisms[m.mu[a]] != (t.on_obj(t.on_obj(a)), t.on_obj(a)):
            report.add_structural("mu-endpoints", (a,))
    if not report.well_formed:
        return report

    for f, (a, b) in enumerate(c.morphisms):
        if c.comp[t.on_mor(f)][m.eta[a]] != c.comp[m.eta[b]][f]:
            report.add("eta-naturality", (f,))
        tf = t.on_mor(f)
        if c.comp[m.mu[b]][t.on_mor(tf)] != c.comp[tf][m.mu[a]]:
            report.add("mu-naturality", (f,))
    for a in range(c.n_objects):
        ta = t.on_obj(a)
        if c.comp[m.mu[a]][t.on_mor(m.eta[a])] != c.identities[ta]:
            report.add("unit-law-inner", (a,))
        if c.comp[m.mu[a]][m.eta[ta]] != c.identities[ta]:
            report.add("unit-law-outer", (a,))
        if c.comp[m.mu[a]][t.on_mor(m.mu[a])] != c.comp[m.mu[a]][m.mu[ta]]:
            report.add("mu-associativity", (a,))
    return report


def identity_monad(c: FiniteCategory) -> FinMonad:
    endo = FinEndofunctor(c, tuple(range(c.n_objects)), tuple(range(len(c.morphisms))))
    return FinMonad(endo, c.identities, c.identities)


@dataclass(frozen=True)
class MonadFunctor:
    """U between the base categories plus phi: TU => US."""

    source: FinMonad  # S on C
    target: FinMonad  # T on D
    u: CatFunctor  # C -> D
    phi: tuple  # per object of C: T(U c) -> U(S c)

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        if self.u.source != self.source.endo.base or self.u.target != self.target.endo.base:
            raise StructuralError("carrier functor endpoints mismatch")
        if len(self.phi) != self.u.source.n_objects:
            raise StructuralError("one phi component per source object required")


def check_monad_functor(mf: MonadFunctor) -> ValidationReport:
    """Naturality of phi plus the unit and multiplication compatibilities,
    each checked at every object."""
    report = ValidationReport("monad_functor")
    report.extend(check_functor(mf.u), prefix="carrier-")
    s, t = mf.source, mf.target
    c, d = s.endo.base, t.endo.base
    u = mf.u
    for a in range(c.n_objects):
        want = (t.endo.on_obj(u.on_obj(a)), u.on_obj(s.endo.on_obj(a)))
        if d.morphisms[mf.phi[a]] != want:
            report.add_structural("phi-endpoints", (a,))
    if not report.well_formed:
        return report

    for f, (a, b) in enumerate(c.morphisms):
        lhs = d.comp[u.on_mor(s.endo.on_mor(f))][mf.phi[a]]
        rhs = d.comp[mf.phi[b]][t.endo.on_mor(u.on_mor(f))]
        if lhs != rhs:
            report.add("phi-naturality", (f,))
    for a in range(c.n_objects):
        ua = u.on_obj(a)
        if d.comp[mf.phi[a]][t.eta[ua]] != u.on_mor(s.eta[a]):
            report.add("unit-compatibility", (a,))
        lhs = d.comp[mf.phi[a]][t.mu[ua]]
        rhs = d.comp[u.on_mor(s.mu[a])][
            d.comp[mf.phi[s.endo.on_obj(a)]][t.endo.on_mor(mf.phi[a])]
        ]
        if lhs != rhs:
            report.add("multiplication-compatibility", (a,))
    return report


def identity_monad_functor(m: FinMonad) -> MonadFunctor:
    c = m.endo.base
    u = CatFunctor(c, c, tuple(range(c.n_objects)), tuple(range(len(c.morphisms))))
    phi = tuple(c.identities[m.endo.on_obj(a)] for a in range(c.n_objects))
    return MonadFunctor(m, m, u, phi)


def compose_monad_functors(g: MonadFunctor, f: MonadFunctor) -> MonadFunctor:
    """Pasting: the composite phi at c is V(phi_f at c) after phi_g at (U c)."""
    if f.target != g.source:
        raise StructuralError("monad functor composition endpoint mismatch")
    u = compose_functors(g.u, f.u)
    e = g.target.endo.base
    phi = tuple(
        e.comp[g.u.on_mor(f.phi[a])][g.phi[f.u.on_obj(a)]]
        for a in range(f.u.source.n_objects)
    )
    return MonadFunctor(f.source, g.target, u, phi)


@dataclass(frozen=True)
class MonadFunctorTransformation:
    source: MonadFunctor
    target: MonadFunctor
    gamma: tuple  # per object of the common base: U c -> U' c

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(v) for v in self.gamma))
        if len(self.gamma) != self.source.u.source.n_objects:
            raise StructuralError("one gamma component per object required")


def check_monad_transformation(t: MonadFunctorTransformation) -> ValidationReport:
    """Naturality of gamma and the compatibility square with both phis."""
    report = ValidationReport("monad_functor_transformation")
    f, g = t.source, t.target
    if f.source != g.source or f.target != g.target:
        report.add_structural("endpoints", (), "monad functors are not parallel")
        return report
    c = f.u.source
    d = f.u.target
    for a in range(c.n_objects):
        if d.morphisms[t.gamma[a]] != (f.u.on_obj(a), g.u.on_obj(a)):
            report.add_structural("gamma-endpoints", (a,))
    if not report.well_formed:
        return report
    for m, (a, b) in enumerate(c.morphisms):
        if d.comp[t.gamma[b]][f.u.on_mor(m)] != d.comp[g.u.on_mor(m)][t.gamma[a]]:
            report.add("gamma-naturality", (m,))
    tm = f.target.endo
    s = f.source
    for a in range(c.n_objects):
        lhs = d.comp[g.phi[a]][tm.on_mor(t.gamma[a])]
        rhs = d.comp[t.gamma[s.endo.on_obj(a)]][f.phi[a]]
        if lhs != rhs:
            report.add("compatibility-square", (a,))
    return report


def compose_monad_transformations(
    t2: MonadFunctorTransformation, t1: MonadFunctorTransformation
) -> MonadFunctorTransformation:
    d = t1.source.u.target
    gamma = tuple(
        d.compose(t2.gamma[a], t1.gamma[a]) for a in range(t1.source.u.source.n_objects)
    )
    return MonadFunctorTransformation(t1.source, t2.target, gamma)
