"""One-object categories, their identification with monoids, and the
comparison functor from the category of such categories to the category of
monoids.

The comparison is an equivalence at the 1-dimensional level; at the
2-dimensional level it fails to be locally full, witnessed by natural
transformations with non-identity distinguished elements.
"""

from dataclasses import dataclass

from .equivalence import FiniteJCategory, JFunctor, check_external_equivalence
from .monoids import (
    FiniteMonoid,
    MonoidHom,
    canonical_form,
    check_monoid,
    enumerate_homs,
    enumerate_monoids,
)
from .report import (
    EquivalenceReport,
    InvalidStructureError,
    StructuralError,
    ValidationReport,
)

OBJECT_LABEL = "∗"  # the single object is always labeled this way


@dataclass(frozen=True)
class DegenerateCategory:
    """A category with exactly one object; morphisms form a monoid."""

    object_label: str
    hom: FiniteMonoid


@dataclass(frozen=True)
class DegNatTrans:
    """A natural transformation between functors of one-object categories.

    The data is a single distinguished element of the target monoid (its
    component at the unique object); naturality is one equation per source
    element.
    """

    source_functor: MonoidHom
    target_functor: MonoidHom
    component: int


def cat_to_monoid(c: DegenerateCategory) -> FiniteMonoid:
    """Forget the single object; pure projection onto the hom monoid."""
    return c.hom


def monoid_to_cat(m: FiniteMonoid) -> DegenerateCategory:
    """Wrap a monoid as a one-object category; strict inverse of the projection."""
    rep = check_monoid(m.mul, m.unit)
    if not rep.ok:
        raise InvalidStructureError("not a valid monoid")
    return DegenerateCategory(OBJECT_LABEL, m)


def check_nat_trans(t: DegNatTrans) -> ValidationReport:
    """Naturality: d * F(x) = G(x) * d for every source element."""
    report = ValidationReport("nat_trans")
    f, g = t.source_functor, t.target_functor
    if f.source != g.source or f.target != g.target:
        report.add_structural("endpoints", (), "functors are not parallel")
        return report
    if not (0 <= t.component < f.target.size):
        report.add_structural("component-range", (t.component,))
        return report
    mul = f.target.mul
    for x in range(f.source.size):
        if mul[t.component][f.map[x]] != mul[g.map[x]][t.component]:
            report.add(
                "naturality",
                (x,),
                f"d*F({x}) = {mul[t.component][f.map[x]]} != {mul[g.map[x]][t.component]} = G({x})*d",
            )
    return report


def find_nonidentity_nat_trans(m: FiniteMonoid) -> DegNatTrans | None:
    """A transformation id => id with a non-unit component, if one exists.

    Such an element must commute with everything, so this is a scan of the
    center; any hit shows the 2-dimensional comparison is not locally full.
    """
    ident = MonoidHom(m, m, tuple(range(m.size)))
    for d in range(m.size):
        if d == m.unit:
            continue
        if all(m.mul[d][x] == m.mul[x][d] for x in range(m.size)):
            return DegNatTrans(ident, ident, d)
    return None


def functors_between(c: DegenerateCategory, d: DegenerateCategory) -> list:
    """All functors, as homomorphisms of the hom monoids (the projection is
    the identity on this data)."""
    return enumerate_homs(c.hom, d.hom)


def nat_trans_between(f: MonoidHom, g: MonoidHom) -> list:
    """All valid transformation components between two parallel functors."""
    out = []
    for d in range(f.target.size):
        t = DegNatTrans(f, g, d)
        if check_nat_trans(t).ok:
            out.append(t)
    return out


def _monoid_key(m: FiniteMonoid):
    return (m.size, m.unit, m.mul)


def degenerate_sample(bound: int) -> list:
    """One degenerate category per monoid of size up to the bound."""
    sample = []
    for n in range(1, bound + 1):
        for m in enumerate_monoids(n):
            sample.append(monoid_to_cat(m))
    return sample


def _one_dim_category(objects, hom_lists):
    """Assemble a FiniteJCategory (j=1) from 0-cell labels and hom data.

    hom_lists[(i, k)] is the list of arrow payloads from object i to k; an
    arrow payload must compose via the caller-supplied table embedded in it,
    so here we specialize: payloads are MonoidHom values and composition is
    map composition.
    """
    one_cells = []
    index = {}
    by_src = {}
    for (i, k), homs in hom_lists.items():
        for h in homs:
            pos = len(one_cells)
            index[(i, k, h.map)] = pos
            one_cells.append((i, k, h))
            by_src.setdefault(i, []).append(pos)
    ident = []
    for i, obj in enumerate(objects):
        ident.append(index[(i, i, tuple(range(obj.size)))])
    comp = {}
    for fi, (i1, k1, f) in enumerate(one_cells):
        fmap = f.map
        for gi in by_src.get(k1, ()):
            _, k2, g = one_cells[gi]
            gmap = g.map
            comp[(gi, fi)] = index[(i1, k2, tuple(gmap[v] for v in fmap))]
    cat = FiniteJCategory(
        j=1,
        zero_cells=tuple(f"monoid#{i}(n={obj.size})" for i, obj in enumerate(objects)),
        one_cells=tuple((s, t) for (s, t, _) in one_cells),
        one_identity=tuple(ident),
        one_comp=comp,
    )
    return cat, index


def check_forgetful_equivalence(sample: list) -> EquivalenceReport:
    """Verify the object-forgetting comparison is an equivalence over a sample.

    Fullness and faithfulness are checked exhaustively per hom-set, and
    surjectivity is checked against the enumerated monoids at each size
    represented in the sample.  Surjectivity on the nose (bit-exact hits)
    is reported separately from essential surjectivity.
    """
    if not sample:
        raise InvalidStructureError("sample must be nonempty")
    left_monoids = [c.hom for c in sample]
    sizes = sorted({m.size for m in left_monoids})
    right_monoids = []
    seen = set()
    for n in sizes:
        for m in enumerate_monoids(n):
            if _monoid_key(m) not in seen:
                seen.add(_monoid_key(m))
                right_monoids.append(m)
    for m in left_monoids:
        if _monoid_key(m) not in seen:
            seen.add(_monoid_key(m))
            right_monoids.append(m)

    hom_cache: dict = {}

    def homs_for(m1, m2):
        key = (_monoid_key(m1), _monoid_key(m2))
        if key not in hom_cache:
            hom_cache[key] = enumerate_homs(m1, m2)
        return hom_cache[key]

    left_homs = {}
    for i, c in enumerate(sample):
        for k, d in enumerate(sample):
            left_homs[(i, k)] = homs_for(c.hom, d.hom)
    right_homs = {}
    for i, m in enumerate(right_monoids):
        for k, m2 in enumerate(right_monoids):
            right_homs[(i, k)] = homs_for(m, m2)

    left_cat, _ = _one_dim_category(left_monoids, left_homs)
    right_cat, right_index = _one_dim_category(right_monoids, right_homs)

    right_pos = {_monoid_key(m): i for i, m in enumerate(right_monoids)}
    map0 = tuple(right_pos[_monoid_key(m)] for m in left_monoids)
    # walk the same order used to assemble left_cat's 1-cells
    map1 = []
    for (i, k), homs in left_homs.items():
        for h in homs:
            map1.append(right_index[(map0[i], map0[k], h.map)])
    fun = JFunctor(left_cat, right_cat, map0, tuple(map1))

    report = check_external_equivalence(fun)
    report.name = "category-to-monoid-comparison"
    report.universe = f"all one-object categories with hom sizes in {sizes}"

    hit = {map0[i] for i in range(len(left_monoids))}
    missed = [i for i in range(len(right_monoids)) if i not in hit]
    report.add(
        "surjective-on-the-nose",
        not missed,
        dimension=0,
        witness=None if not missed else {"missed-monoid": right_monoids[missed[0]].mul},
        detail="every enumerated monoid is hit bit-exactly" if not missed else "",
    )
    bijective = True
    bad_pair = None
    for (i, k), homs in left_homs.items():
        images = {h.map for h in homs}
        targets = {h.map for h in right_homs[(map0[i], map0[k])]}
        if images != targets or len(images) != len(homs):
            bijective = False
            bad_pair = (i, k)
            break
    report.add(
        "hom-set-bijection",
        bijective,
        dimension=1,
        witness=None if bijective else {"pair": list(bad_pair)},
        detail="functor sets and homomorphism sets coincide per pair",
    )
    return report


def not_locally_full_witnesses(bound: int) -> list:
    """For every commutative monoid with more than one element, a non-identity
    transformation on the identity functor (the 2-dimensional failure mode)."""
    out = []
    for n in range(2, bound + 1):
        for m in enumerate_monoids(n, commutative_only=True):
            t = find_nonidentity_nat_trans(m)
            if t is None:
                raise InvalidStructureError(
                    "commutative monoid with >1 element lacks a central non-unit"
                )
            out.append(t)
    return out
