import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deglab import serialize
from deglab.doubly import build_ddbicat, identity_dd_functor, transformation_between
from deglab.examples import (
    arrow_category,
    bool_or_monoid,
    discrete_monoidal,
    nand_pair,
    sign_category,
    trivial_monoid,
    zmod,
)
from deglab.monads import identity_monad, identity_monad_functor
from deglab.monoidal import identity_deg_transformation, identity_monoidal_functor
from deglab.monoids import enumerate_monoids, make_cmon_die
from deglab.report import StructuralError


def _sample_structures():
    s = make_cmon_die(zmod(2), 1)
    f = identity_dd_functor(s)
    t = transformation_between(f, f)
    mc = sign_category()
    mf = identity_monoidal_functor(mc)
    monad = identity_monad(arrow_category())
    yield zmod(3)
    yield s
    yield build_ddbicat(s)
    yield f
    yield t
    yield arrow_category()
    yield mc
    yield nand_pair()
    yield mf
    yield identity_deg_transformation(mf)
    yield monad
    yield identity_monad_functor(monad)


class TestRoundTrips:
    def test_payload_round_trips(self):
        for obj in _sample_structures():
            payload = serialize.to_payload(obj)
            text = serialize.canonical_dumps(payload)
            back = serialize.structure_from_payload(json.loads(text))
            assert back == obj, payload["kind"]

    def test_canonical_bytes_stable(self):
        for obj in _sample_structures():
            text = serialize.canonical_dumps(serialize.to_payload(obj))
            reparsed = serialize.canonical_dumps(json.loads(text))
            assert reparsed == text
            assert text.endswith("\n") and "\n" not in text[:-1]

    @given(st.sampled_from(enumerate_monoids(3)))
    @settings(max_examples=20, deadline=None)
    def test_monoid_round_trip_property(self, m):
        assert serialize.structure_from_payload(serialize.to_payload(m)) == m


class TestSchemaStrictness:
    def test_unknown_key_rejected(self):
        payload = serialize.to_payload(zmod(2))
        payload["extra"] = 1
        with pytest.raises(StructuralError):
            serialize.structure_from_payload(payload)

    def test_missing_key_rejected(self):
        payload = serialize.to_payload(zmod(2))
        del payload["unit"]
        with pytest.raises(StructuralError):
            serialize.structure_from_payload(payload)

    def test_unknown_kind_rejected(self):
        with pytest.raises(StructuralError):
            serialize.structure_from_payload({"kind": "mystery"})

    def test_die_key_promotes_to_pair(self):
        payload = serialize.to_payload(zmod(2))
        payload["die"] = 1
        obj = serialize.structure_from_payload(payload)
        assert obj == make_cmon_die(zmod(2), 1)

    def test_noninvertible_die_cannot_load(self):
        payload = serialize.to_payload(bool_or_monoid())
        payload["die"] = 1
        with pytest.raises(StructuralError):
            serialize.structure_from_payload(payload)


class TestValidationDispatch:
    def test_valid_monoid(self):
        assert serialize.validate_payload(serialize.to_payload(zmod(2))).ok

    def test_invalid_monoid_reported(self):
        rep = serialize.validate_payload(
            {"kind": "monoid", "size": 2, "unit": 0, "mul": [[0, 1], [0, 0]]}
        )
        assert not rep.ok and rep.well_formed

    def test_noninvertible_die_reported_not_raised(self):
        payload = serialize.to_payload(bool_or_monoid())
        payload["die"] = 1
        rep = serialize.validate_payload(payload)
        assert any(v.axiom == "die-invertible" for v in rep.violations)

    def test_ddbicat_includes_derived_checks(self):
        b = build_ddbicat(make_cmon_die(zmod(2), 1))
        payload = serialize.to_payload(b)
        assert serialize.validate_payload(payload).ok
        payload["hcomp"] = [[0, 1], [1, 1]]  # diverges from vcomp
        rep = serialize.validate_payload(payload)
        assert not rep.ok

    def test_every_sample_validates(self):
        for obj in _sample_structures():
            rep = serialize.validate_payload(serialize.to_payload(obj))
            assert rep.ok, (type(obj).__name__, rep.to_payload())

    def test_discrete_moncat_validates(self):
        payload = serialize.to_payload(discrete_monoidal(trivial_monoid()))
        assert serialize.validate_payload(payload).ok
