"""Command-line front end: every verification as a reproducible command.

Exit codes: 0 pass/match, 1 claim failed or golden mismatch, 2 usage error.
Output is ``text`` (eyeball-friendly) or ``json`` (canonical, byte-stable);
the default format comes from the FLOPCALC_FORMAT environment variable.

JSON shapes: weights are integer arrays; a term is {s1, s2, twist: [a, b],
hdeg, rcharge}; a complex is {label, columns: [{hdeg, terms: [...]}]}; a
verification report is {claim, params, verdict, witnesses}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import invariants, resolutions, windows

SCHEMAS = {
    "window": {
        "type": "object",
        "required": ["command", "family", "k", "n", "members"],
        "properties": {
            "command": {"const": "window"},
            "family": {"enum": list(windows.FAMILIES)},
            "k": {"type": "integer"},
            "n": {"type": "integer"},
            "members": {"type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}}},
        },
    },
    "complex": {
        "type": "object",
        "required": ["label", "by", "columns"],
        "properties": {
            "label": {"type": "string"},
            "by": {"enum": ["hdeg", "flat"]},
            "columns": {"type": "array", "items": {
                "type": "object",
                "required": ["hdeg", "terms"],
                "properties": {"hdeg": {"type": "integer"},
                               "terms": {"type": "array", "items": {"type": "object"}}},
            }},
        },
    },
    "report": {
        "type": "object",
        "required": ["claim", "params", "verdict", "witnesses"],
        "properties": {
            "claim": {"type": "string"},
            "params": {"type": "object"},
            "verdict": {"enum": ["pass", "fail"]},
            "witnesses": {},
        },
    },
}


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(", ", ": "))


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(args, doc, text: str) -> None:
    if args.format == "json":
        print(_dump(doc))
    else:
        print(text)


# ---------------------------------------------------------------------------
# window

def _window_doc(family, k, n):
    ws = windows.generate(family, k, n)
    return {"command": "window", "family": family, "k": k, "n": n,
            "members": [list(w) for w in ws.sorted_members()]}


def cmd_window(args) -> int:
    try:
        doc = _window_doc(args.family, args.k, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = f"{args.family}(k={args.k}, n={args.n}): " + \
        " ".join(str(tuple(w)) for w in doc["members"])
    if args.action == "generate":
        _emit(args, doc, text)
        return 0
    with open(args.golden) as fh:
        golden = json.load(fh)
    match = golden.get("members") == doc["members"]
    _emit(args, {"command": "window-compare", "match": match, "golden": args.golden,
                 "generated": doc},
          f"golden {'match' if match else 'MISMATCH'}: {args.golden}")
    return 0 if match else 1


# ---------------------------------------------------------------------------
# complex

def cmd_complex(args) -> int:
    try:
        built = resolutions.built_table(args.which, args.rcharge_unit)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    by = args.by or resolutions.EXPECTED_TABLES[args.which][0]
    doc = built.to_json(by)
    doc["by"] = by
    if args.golden:
        with open(args.golden) as fh:
            golden = json.load(fh)
        match = golden == doc
        _emit(args, {"command": "complex-compare", "match": match,
                     "golden": args.golden, "generated": doc},
              f"golden {'match' if match else 'MISMATCH'}: {args.golden}")
        return 0 if match else 1
    _emit(args, doc, built.text_table(by))
    return 0


# ---------------------------------------------------------------------------
# verify

def _report(claim, params, ok, witnesses):
    return {"claim": claim, "params": params,
            "verdict": "pass" if ok else "fail", "witnesses": witnesses}


def _verify_lemma31(args):
    results = []
    ok = True
    for k in args.k:
        for n in args.n:
            if k >= n:
                continue
            kr = windows.koszul_restriction_weights(k, n)
            target = windows.generate("W", k, n).members
            good = kr.weights == target
            ok &= good
            results.append({"k": k, "n": n, "equal": good,
                            "convention": kr.convention})
    return _report("koszul restriction weights equal the width window",
                   {"k": args.k, "n": args.n}, ok, results)


def _verify_prop44(args):
    oc = resolutions.oc_weights()
    expected = frozenset({(0, 0), (1, 0), (1, 1)})
    results = [{"check": "kernel cone weights",
                "got": sorted(map(list, oc)), "equal": oc == expected}]
    ok = oc == expected
    for n in args.n:
        tc = windows.oc_tensor_check(n)
        ok &= tc.matches
        results.append({"check": "tensor saturation", "n": n, "equal": tc.matches})
    return _report("cone weights tensor the window onto the relaxed window",
                   {"n": args.n}, ok, results)


def _verify_box_eq(args):
    results = []
    ok = True
    for n in args.n:
        same = (windows.generate("box", 2, n).members
                == windows.generate("Wprime", 2, n).members)
        ok &= same
        results.append({"n": n, "equal": same})
    return _report("width-box window equals the relaxed window at k = 2",
                   {"n": args.n}, ok, results)


def _verify_table(args, which):
    unit = (resolutions.DEFAULT_RCHARGE_UNIT if args.rcharge_unit == "auto"
            else int(args.rcharge_unit))
    ok, diffs = resolutions.verify_table(which, unit)
    witnesses = [{"column": c, "built": _json_cols(g), "expected": _json_cols(e)}
                 for c, g, e in diffs]
    return _report(f"built {which} table matches the displayed one",
                   {"which": which, "rcharge_unit": unit}, ok, witnesses)


def _json_cols(col):
    return [[list(part) if isinstance(part, tuple) else part for part in value]
            for value in col]


def _verify_cancellation(args):
    rep = resolutions.find_cancellation(args.rcharge_unit)
    witnesses = {"rcharge_unit": rep.rcharge_unit, "offsets": list(rep.offsets),
                 "pairs": len(rep.pairs), "conserved": rep.conserved,
                 "displays_match": rep.displays_match,
                 "canonical_offsets": list(resolutions.CANONICAL_OFFSETS)}
    return _report("convolution cancels onto the fibre-product kernel table",
                   {"rcharge_unit": args.rcharge_unit},
                   rep.faithful and rep.conserved, witnesses)


def _verify_invariants(args):
    rep = invariants.verify_generators(args.n, args.max_deg, omit=args.omit)
    witnesses = {"blocks": rep.blocks_checked, "omitted": list(rep.omitted),
                 "mismatches": [{"multidegree": [list(md[0]), list(md[1]), md[2]],
                                 "invariant_dim": inv, "generated_dim": sub}
                                for md, inv, sub in rep.mismatches]}
    return _report("classical generators span the invariants in range",
                   {"n": args.n, "max_deg": args.max_deg, "omit": list(args.omit)},
                   rep.ok, witnesses)


def cmd_verify(args) -> int:
    try:
        if args.claim == "lemma31":
            doc = _verify_lemma31(args)
        elif args.claim == "prop44":
            doc = _verify_prop44(args)
        elif args.claim == "box-eq":
            doc = _verify_box_eq(args)
        elif args.claim in ("resolveoc", "weyman"):
            doc = _verify_table(args, "resolveoc" if args.claim == "resolveoc" else "springer")
        elif args.claim == "cancellation":
            doc = _verify_cancellation(args)
        else:
            doc = _verify_invariants(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = f"{doc['claim']}: {doc['verdict'].upper()}"
    if args.format == "text" and doc["verdict"] == "fail":
        text += "\n" + _dump(doc["witnesses"])
    if args.claim == "cancellation" and args.format == "text":
        w = doc["witnesses"]
        text += (f" (unit={w['rcharge_unit']}, offsets={w['offsets']},"
                 f" pairs={w['pairs']})")
    _emit(args, doc, text)
    return 0 if doc["verdict"] == "pass" else 1


def cmd_schema(args) -> int:
    print(_dump(SCHEMAS if args.name == "all" else SCHEMAS[args.name]))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flopcalc",
        description="exact window, resolution and invariant-ring checks")
    parser.add_argument("--format", choices=("text", "json"),
                        default=os.environ.get("FLOPCALC_FORMAT", "text"))
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("window", help="generate or compare a window")
    w.add_argument("action", choices=("generate", "compare"))
    w.add_argument("--family", required=True, choices=windows.FAMILIES)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--golden", help="golden file for compare")
    w.set_defaults(func=cmd_window)

    c = sub.add_parser("complex", help="show or compare a resolution table")
    c.add_argument("action", choices=("show",))
    c.add_argument("--which", required=True,
                   choices=tuple(resolutions.EXPECTED_TABLES))
    c.add_argument("--rcharge-unit", dest="rcharge_unit", type=int,
                   default=resolutions.DEFAULT_RCHARGE_UNIT)
    c.add_argument("--by", choices=("hdeg", "flat"))
    c.add_argument("--golden")
    c.set_defaults(func=cmd_complex)

    v = sub.add_parser("verify", help="run one verification")
    v.add_argument("claim", choices=("lemma31", "prop44", "box-eq", "resolveoc",
                                     "weyman", "cancellation", "invariants"))
    v.add_argument("--k", type=_parse_range, default=[2])
    v.add_argument("--n", type=_parse_range, default=[3])
    v.add_argument("--max-deg", dest="max_deg", type=int, default=4)
    v.add_argument("--omit", action="append", default=[],
                   help="drop a named generator (negative control)")
    v.add_argument("--rcharge-unit", dest="rcharge_unit", default="auto")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("schema", help="print the JSON output schemas")
    s.add_argument("--name", choices=("all", *SCHEMAS), default="all")
    s.set_defaults(func=cmd_schema)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "window" and args.action == "compare" and not args.golden:
        print("error: compare needs --golden", file=sys.stderr)
        return 2
    if args.command == "verify" and args.claim == "invariants":
        args.n = args.n[0] if isinstance(args.n, list) else args.n
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
