import pytest

from deglab.examples import arrow_category, left_padded_monoid, zmod
from deglab.fincat import (
    CatFunctor,
    FiniteCategory,
    NatTrans,
    check_category,
    check_functor,
    check_natural,
    compose_functors,
    compose_nats,
    enumerate_functors,
    identity_functor,
    identity_nat,
    one_object_category,
)
from deglab.report import StructuralError


class TestCategoryChecks:
    def test_arrow_category_valid(self):
        assert check_category(arrow_category()).ok

    def test_one_object_category_matches_monoid(self):
        c = one_object_category(zmod(3))
        assert check_category(c).ok
        assert c.compose(1, 2) == 0  # 1 + 2 mod 3

    def test_noncommutative_composition_order(self):
        # comp[g][f] is g after f: in the padded monoid b*a = b
        c = one_object_category(left_padded_monoid())
        assert c.compose(2, 1) == 2 and c.compose(1, 2) == 1

    def test_partiality_enforced(self):
        ac = arrow_category()
        with pytest.raises(StructuralError):
            ac.compose(2, 2)  # arrow after arrow is undefined

    def test_malformed_comp_detected(self):
        bad = FiniteCategory(
            2, ((0, 0), (1, 1), (0, 1)), (0, 1), ((0, None, None), (None, 1, 2), (None, 2, None))
        )
        rep = check_category(bad)
        assert not rep.well_formed

    def test_iso_search(self):
        ac = arrow_category()
        assert ac.iso_between(0, 1) is None
        assert ac.iso_between(0, 0) == (0, 0)


class TestFunctors:
    def test_identity_and_composition(self):
        ac = arrow_category()
        ident = identity_functor(ac)
        assert check_functor(ident).ok
        assert compose_functors(ident, ident) == ident

    def test_collapse_functor(self):
        ac = arrow_category()
        # send everything to object 1
        f = CatFunctor(ac, ac, (1, 1), (1, 1, 1))
        assert check_functor(f).ok

    def test_broken_functor_detected(self):
        ac = arrow_category()
        f = CatFunctor(ac, ac, (0, 1), (0, 1, 0))
        rep = check_functor(f)
        assert any(v.axiom == "endpoints" for v in rep.violations)

    def test_enumeration_matches_direct_scan(self):
        ac = arrow_category()
        fs = enumerate_functors(ac, ac)
        # object maps: (0,0) id-collapse, (0,1) identity, (1,1) collapse; (1,0)
        # impossible since there is no arrow 1 -> 0
        assert sorted(f.object_map for f in fs) == [(0, 0), (0, 1), (1, 1)]
        for f in fs:
            assert check_functor(f).ok

    def test_enumeration_on_one_object_categories_matches_homs(self):
        from deglab.monoids import enumerate_homs

        c = one_object_category(zmod(4))
        d = one_object_category(zmod(2))
        fs = enumerate_functors(c, d)
        assert sorted(f.morphism_map for f in fs) == sorted(
            h.map for h in enumerate_homs(zmod(4), zmod(2))
        )


class TestNaturalTransformations:
    def test_identity_nat(self):
        ac = arrow_category()
        t = identity_nat(identity_functor(ac))
        assert check_natural(t).ok

    def test_arrow_nat_between_identity_and_collapse(self):
        ac = arrow_category()
        ident = identity_functor(ac)
        collapse = CatFunctor(ac, ac, (1, 1), (1, 1, 1))
        t = NatTrans(ident, collapse, (2, 1))
        assert check_natural(t).ok

    def test_vertical_composition(self):
        ac = arrow_category()
        ident = identity_functor(ac)
        collapse = CatFunctor(ac, ac, (1, 1), (1, 1, 1))
        t = NatTrans(ident, collapse, (2, 1))
        tt = compose_nats(NatTrans(collapse, collapse, (1, 1)), t)
        assert check_natural(tt).ok

    def test_bad_component_endpoints_structural(self):
        ac = arrow_category()
        ident = identity_functor(ac)
        rep = check_natural(NatTrans(ident, ident, (2, 1)))
        assert not rep.well_formed
