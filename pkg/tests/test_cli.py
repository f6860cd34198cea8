import json
import subprocess
import sys

import pytest

from deglab import serialize
from deglab.cli import main
from deglab.doubly import build_ddbicat, identity_dd_functor, make_dd_functor
from deglab.examples import nand_pair, sign_category, zmod
from deglab.monoids import identity_hom, make_cmon_die


def write_payload(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(serialize.canonical_dumps(payload), encoding="utf-8")
    return str(path)


def z2_die(d=1):
    return make_cmon_die(zmod(2), d)


class TestValidateVerb:
    def test_valid_structure_exit_zero(self, tmp_path, capsys):
        path = write_payload(tmp_path, "b.json", serialize.to_payload(build_ddbicat(z2_die())))
        assert main(["validate", path]) == 0
        assert "valid" in capsys.readouterr().out

    def test_axiom_violation_exit_one(self, tmp_path, capsys):
        payload = serialize.to_payload(build_ddbicat(z2_die()))
        payload["assoc"] = 1
        path = write_payload(tmp_path, "bad.json", payload)
        assert main(["validate", path]) == 1
        out = capsys.readouterr().out
        assert "pentagon" in out or "invertible" in out

    def test_structural_error_exit_two(self, tmp_path, capsys):
        path = write_payload(tmp_path, "odd.json", {"kind": "monoid", "size": 2, "unit": 0})
        assert main(["validate", path]) == 2

    def test_unknown_key_exit_two(self, tmp_path):
        payload = serialize.to_payload(zmod(2))
        payload["surprise"] = True
        path = write_payload(tmp_path, "m.json", payload)
        assert main(["validate", path]) == 2

    def test_json_format_is_canonical(self, tmp_path, capsys):
        path = write_payload(tmp_path, "m.json", serialize.to_payload(zmod(2)))
        assert main(["--format", "json", "validate", path]) == 0
        out = capsys.readouterr().out
        assert out == serialize.canonical_dumps(json.loads(out))


class TestShiftVerb:
    def test_ddbicat_to_cmon(self, tmp_path, capsys):
        path = write_payload(tmp_path, "b.json", serialize.to_payload(build_ddbicat(z2_die())))
        assert main(["shift", "--to-cmon", path]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "monoid" and payload["die"] == 1

    def test_round_trip_files_byte_identical(self, tmp_path, capsys):
        start = write_payload(tmp_path, "s.json", serialize.to_payload(z2_die()))
        mid = str(tmp_path / "mid.json")
        end = str(tmp_path / "end.json")
        assert main(["shift", "--to-ddbicat", start, "-o", mid]) == 0
        assert main(["shift", "--to-cmon", mid, "-o", end]) == 0
        assert (tmp_path / "end.json").read_bytes() == (tmp_path / "s.json").read_bytes()

    def test_moncat_round_trip_byte_identical(self, tmp_path):
        start = write_payload(tmp_path, "mc.json", serialize.to_payload(sign_category()))
        mid = str(tmp_path / "b.json")
        end = str(tmp_path / "back.json")
        assert main(["shift", "--to-degbicat", start, "-o", mid]) == 0
        assert main(["shift", "--to-moncat", mid, "-o", end]) == 0
        assert (tmp_path / "back.json").read_bytes() == (tmp_path / "mc.json").read_bytes()

    def test_monoid_to_category_and_back(self, tmp_path, capsys):
        start = write_payload(tmp_path, "m.json", serialize.to_payload(zmod(3)))
        mid = str(tmp_path / "c.json")
        end = str(tmp_path / "m2.json")
        assert main(["shift", "--to-category", start, "-o", mid]) == 0
        assert main(["shift", "--to-monoid", mid, "-o", end]) == 0
        assert (tmp_path / "m2.json").read_bytes() == (tmp_path / "m.json").read_bytes()


class TestFunctorVerbs:
    def test_analyze_valid(self, tmp_path, capsys):
        f = identity_dd_functor(z2_die())
        path = write_payload(tmp_path, "f.json", serialize.to_payload(f))
        assert main(["analyze-functor", path]) == 0

    def test_analyze_invalid_unit_equation(self, tmp_path):
        payload = serialize.to_payload(identity_dd_functor(z2_die()))
        payload["m0"] = 1  # breaks the unit equation
        path = write_payload(tmp_path, "f.json", payload)
        assert main(["analyze-functor", path]) == 1

    def test_lax_promotion_path(self, tmp_path):
        s = z2_die(0)
        f = make_dd_functor(s, s, identity_hom(s.monoid), 1)
        path = write_payload(tmp_path, "f.json", serialize.to_payload(f))
        assert main(["analyze-functor", "--lax", path]) == 0

    def test_compare_parallel_functors(self, tmp_path, capsys):
        s = z2_die()
        f = make_dd_functor(s, s, identity_hom(s.monoid), 1)
        g = make_dd_functor(s, s, identity_hom(s.monoid), 0)
        pf = write_payload(tmp_path, "f.json", serialize.to_payload(f))
        pg = write_payload(tmp_path, "g.json", serialize.to_payload(g))
        assert main(["--format", "json", "compare", pf, pg]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["transformation"]["sigma"] == 1


class TestSearchVerb:
    def test_nonidentity_nat_trans_found(self, tmp_path, capsys):
        path = write_payload(tmp_path, "m.json", serialize.to_payload(zmod(2)))
        assert main(["--format", "json", "search", "nonidentity-nat-trans", path]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["found"] and payload["witness"]["d"] == 1

    def test_unfaithful_level_one(self, tmp_path, capsys):
        path = write_payload(tmp_path, "s.json", serialize.to_payload(z2_die(0)))
        assert main(["--format", "json", "search", "unfaithful", "--level", "1", path]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["found"] and len(payload["witness"]) == 2

    def test_unit_closure_failure(self, tmp_path, capsys):
        path = write_payload(tmp_path, "mc.json", serialize.to_payload(nand_pair()))
        assert main(["--format", "json", "search", "unit-closure", path]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["closed"] is False


class TestEnumerateAndSuite:
    def test_enumerate_counts(self, capsys):
        assert main(["--format", "json", "enumerate", "--size", "3"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 7

    def test_enumerate_bound_refusal(self, monkeypatch, capsys):
        monkeypatch.setenv("DEGLAB_MAX_SIZE", "2")
        assert main(["enumerate", "--size", "3"]) == 2

    def test_suite_runs(self, capsys):
        assert main(["suite", "thm-dc", "--bound", "3"]) == 0

    def test_suite_json_replayable_witnesses(self, tmp_path, capsys):
        assert main(["--format", "json", "suite", "thm-vdbe", "--bound", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "pass"
        items = []
        for finding in payload["findings"]:
            w = finding["witness"]
            if w is None:
                continue
            items.extend(w if isinstance(w, list) else [w])
        replayed = 0
        for item in items:
            if not isinstance(item, dict) or "structure" not in item:
                continue
            path = write_payload(tmp_path, f"w{replayed}.json", item["structure"])
            code = main(["validate", path])
            capsys.readouterr()
            assert (code == 0) == (item["expected_verdict"] == "valid")
            replayed += 1
        assert replayed > 0


class TestConsoleEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "deglab", "enumerate", "--size", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "2 structures" in proc.stdout
