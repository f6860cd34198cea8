"""Command-line front end.

Exit codes: 0 the verdict holds, 1 an axiom or claim is violated (the
report carries witnesses), 2 structural or input error.  All JSON output
is canonical: sorted keys, no insignificant whitespace, one trailing LF.
"""

import argparse
import json
import sys

from . import serialize
from .degenerate import find_nonidentity_nat_trans, monoid_to_cat, cat_to_monoid
from .doubly import (
    analyze_weak_functor,
    build_ddbicat,
    check_dd_functor,
    extract_cmon_die,
    promote_lax,
    transformation_between,
    unfaithfulness_witness,
)
from .monoidal import shift_from_bicat, shift_to_bicat, unit_distobj_closure_witness
from .monoids import CMonDIE, FiniteMonoid, cmon_die_universe, enumerate_monoids
from .report import InvalidStructureError, RefutationAlarm, StructuralError
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(payload, fmt: str, render_text):
    if fmt == "json":
        sys.stdout.write(serialize.canonical_dumps(payload))
    else:
        render_text(payload)


def _render_validation(payload):
    print(f"{payload['subject']}: {payload['verdict']}")
    for v in payload["structural"]:
        print(f"  structural {v['axiom']} at {tuple(v['where'])} {v['message']}".rstrip())
    for v in payload["violations"]:
        print(f"  {v['axiom']} at {tuple(v['where'])} {v['message']}".rstrip())


def _render_report(payload):
    header = payload.get("name", "report")
    bound = payload.get("bound")
    print(f"{header}: {payload['verdict']}" + (f" (bound {bound})" if bound else ""))
    for f in payload["findings"]:
        status = "pass" if f["passed"] else "FAIL"
        dim = f" [dim {f['dimension']}]" if f.get("dimension") is not None else ""
        detail = f" -- {f['detail']}" if f.get("detail") else ""
        extra = " (witness attached)" if f.get("witness") else ""
        print(f"  {status}{dim} {f['criterion']}{detail}{extra}")


def cmd_validate(args) -> int:
    report = serialize.validate_payload(_load(args.file))
    _emit(report.to_payload(), args.format, _render_validation)
    return EXIT_OK if report.ok else EXIT_VIOLATION


_SHIFTS = {
    "to_cmon": lambda obj: extract_cmon_die(obj),
    "to_ddbicat": lambda obj: build_ddbicat(obj),
    "to_moncat": lambda obj: shift_from_bicat(obj),
    "to_degbicat": lambda obj: shift_to_bicat(obj),
    "to_monoid": lambda obj: cat_to_monoid(obj),
    "to_category": lambda obj: monoid_to_cat(obj),
}


def cmd_shift(args) -> int:
    direction = next(name for name in _SHIFTS if getattr(args, name))
    obj = serialize.structure_from_payload(_load(args.file))
    result = _SHIFTS[direction](obj)
    text = serialize.canonical_dumps(serialize.to_payload(result))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze_functor(args) -> int:
    payload = _load(args.file)
    if payload.get("kind") != "dd_functor":
        raise StructuralError("analyze-functor expects a dd_functor file")
    f = serialize.dd_functor_from(payload)
    b1, b2 = build_ddbicat(f.source), build_ddbicat(f.target)
    if args.lax:
        promoted = promote_lax(b1, b2, f.hom_map.map, f.m, f.m0)
        out = {
            "verdict": "valid",
            "functor": serialize.dd_functor_payload(promoted),
            "note": "lax data promoted to a weak functor",
        }
        _emit(out, args.format, lambda p: print("lax data promoted; functor is weak"))
        return EXIT_OK
    functor, report = analyze_weak_functor(b1, b2, f.hom_map.map, f.m, f.m0)
    out = report.to_payload()
    if functor is not None:
        out["functor"] = serialize.dd_functor_payload(functor)
    _emit(out, args.format, _render_validation)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_compare(args) -> int:
    f = serialize.dd_functor_from(_load(args.first))
    g = serialize.dd_functor_from(_load(args.second))
    t = transformation_between(f, g)
    if t is None:
        payload = {"verdict": "no-transformation", "reason": "underlying homomorphisms differ"}
        _emit(payload, args.format, lambda p: print("no transformation: homomorphisms differ"))
        return EXIT_VIOLATION
    payload = {
        "verdict": "unique-transformation",
        "transformation": serialize.dd_transformation_payload(t),
    }
    _emit(payload, args.format, lambda p: print(f"unique transformation with component {t.sigma}"))
    return EXIT_OK


def cmd_search(args) -> int:
    obj = serialize.structure_from_payload(_load(args.file))
    if args.what == "nonidentity-nat-trans":
        if isinstance(obj, CMonDIE):
            obj = obj.monoid
        if not isinstance(obj, FiniteMonoid):
            raise StructuralError("expected a monoid file")
        t = find_nonidentity_nat_trans(obj)
        found = t is not None
        payload = {
            "found": found,
            "witness": None if t is None else serialize.nat_trans_payload(t),
        }
        _emit(payload, args.format, lambda p: print("found" if found else "absent"))
        return EXIT_OK if found else EXIT_VIOLATION
    if args.what == "unfaithful":
        if not isinstance(obj, CMonDIE):
            raise StructuralError("expected a monoid file with a die")
        pair = unfaithfulness_witness(args.level, obj)
        payload = {
            "found": pair is not None,
            "witness": None
            if pair is None
            else [serialize.to_payload(pair[0]), serialize.to_payload(pair[1])],
        }
        _emit(
            payload,
            args.format,
            lambda p: print("counterexample found" if pair else "no counterexample"),
        )
        return EXIT_OK if pair is not None else EXIT_VIOLATION
    if args.what == "unit-closure":
        t1, t2, comp, closed = unit_distobj_closure_witness(obj)
        payload = {
            "closed": closed,
            "composite": serialize.deg_transformation_payload(comp),
        }
        _emit(
            payload,
            args.format,
            lambda p: print("closed under composition" if closed else "closure fails"),
        )
        return EXIT_OK if not closed else EXIT_VIOLATION
    raise StructuralError(f"unknown search target {args.what!r}")


def cmd_enumerate(args) -> int:
    if args.dies:
        items = [serialize.cmon_die_payload(s) for s in cmon_die_universe(args.size)]
    else:
        items = [
            serialize.monoid_payload(m)
            for m in enumerate_monoids(args.size, commutative_only=args.commutative)
        ]
    payload = {"count": len(items), "items": items}
    _emit(payload, args.format, lambda p: print(f"{p['count']} structures"))
    return EXIT_OK


def cmd_suite(args) -> int:
    report = run_suite(args.name, bound=args.bound, seed=args.seed)
    _emit(report.to_payload(), args.format, _render_report)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deglab",
        description="Validate, shift, and compare finite degenerate categorical structures.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the axiom checker for a structure file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("shift", help="relabel a structure across the dimension shift")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-cmon", dest="to_cmon", action="store_true")
    group.add_argument("--to-ddbicat", dest="to_ddbicat", action="store_true")
    group.add_argument("--to-moncat", dest="to_moncat", action="store_true")
    group.add_argument("--to-degbicat", dest="to_degbicat", action="store_true")
    group.add_argument("--to-monoid", dest="to_monoid", action="store_true")
    group.add_argument("--to-category", dest="to_category", action="store_true")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("analyze-functor", help="reduce raw weak-functor data")
    p.add_argument("file")
    p.add_argument("--lax", action="store_true", help="promote lax data instead")
    p.set_defaults(fn=cmd_analyze_functor)

    p = sub.add_parser("compare", help="the unique transformation between two functors, if any")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("search", help="hunt for witnesses and counterexamples")
    p.add_argument(
        "what", choices=("nonidentity-nat-trans", "unfaithful", "unit-closure")
    )
    p.add_argument("file")
    p.add_argument("--level", type=int, default=1, choices=(1, 3))
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("enumerate", help="enumerate monoids up to isomorphism")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--dies", action="store_true", help="emit (monoid, element) pairs")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (StructuralError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InvalidStructureError as exc:
        print(f"invalid structure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except RefutationAlarm as exc:
        print(f"refutation alarm: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
