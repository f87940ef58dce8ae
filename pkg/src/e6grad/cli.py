"""Command-line front end: build models, build gradings, batch verify.

    e6grad build {albert,tits,flag,chevalley} [--epsilon +-1] [--out PATH]
    e6grad grade MODEL GRADING [--out PATH]
    e6grad verify-all [--json] [--out PATH] [--include-sp8]
                      [--include-twist] [--include-split-octonions]

All machine output is JSON (deterministic modulo the generated_at field);
human-readable summaries go to stdout.  Setting E6GRAD_CACHE to a directory
memoizes the model tables as JSON files.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from . import jsonio, liemodels, verify
from .gradings import (GRADING_MODEL, NAMED_GRADINGS, build_named_grading,
                       check_grading, interval_check, type_vector,
                       universal_group)

MODELS = ("albert", "tits", "flag", "chevalley")


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _cache_path(key: str) -> str | None:
    root = os.environ.get("E6GRAD_CACHE")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"{key}.json")


def _build_model(name: str, epsilon: int = -1, split: bool = False):
    if name == "albert":
        return liemodels.build_albert(epsilon)
    if name == "tits":
        return liemodels.build_tits(split)
    if name == "flag":
        return liemodels.build_flag()
    if name == "chevalley":
        return liemodels.build_chevalley_form()
    raise ValueError(f"unknown model {name!r}")


def _model_key(name: str, epsilon: int, split: bool) -> str:
    if name == "albert":
        return f"albert_eps{'+1' if epsilon == 1 else '-1'}"
    if name == "tits" and split:
        return "tits_split"
    return name


def cmd_build(args) -> int:
    name = args.model
    key = _model_key(name, args.epsilon, args.split_octonions)
    cache = _cache_path(key)
    cached = None
    if cache and os.path.exists(cache):
        cached = jsonio.load(cache)
    model = _build_model(name, args.epsilon, args.split_octonions)
    doc = jsonio.table_to_json(model.table)
    if cached is not None and cached.get("table") != doc:
        print(f"warning: cache entry {cache} is stale; overwriting",
              file=sys.stderr)
    sig = model.killing_signature()
    payload = {
        "model": key,
        "provenance": model.provenance,
        "killing_signature": sig,
        "dim": model.dim,
        "table": doc,
        "generated_at": _timestamp(),
    }
    if cache:
        jsonio.dump(payload, cache)
    out = args.out or f"{key}.json"
    jsonio.dump(payload, out)
    print(f"{key}: dim {model.dim}, Killing signature {sig}; table -> {out}")
    return 0


def cmd_grade(args) -> int:
    name = args.grading
    if name not in NAMED_GRADINGS:
        print(f"error: unknown grading {name!r} "
              f"(choose from {', '.join(NAMED_GRADINGS)})", file=sys.stderr)
        return 2
    want = GRADING_MODEL[name]
    if args.model != want:
        print(f"error: {name} lives on the {want} model, not {args.model}",
              file=sys.stderr)
        return 2
    model = _build_model(args.model)
    gd = build_named_grading(name, model)
    rep = check_grading(gd)
    ug = universal_group(gd)
    iv = interval_check(gd, model.killing_signature())
    payload = {
        "model": args.model,
        "grading": name,
        "compatible": rep.ok,
        "type_vector": list(type_vector(gd)),
        "universal_group": {"rank": ug.rank, "torsion": list(ug.torsion),
                            "name": ug.describe()},
        "interval": iv,
        "grading_data": jsonio.grading_to_json(gd),
        "generated_at": _timestamp(),
    }
    out = args.out or f"{args.model}_{name}.json"
    jsonio.dump(payload, out)
    print(f"{name} on {args.model}: type {tuple(payload['type_vector'])}, "
          f"group {ug.describe()}, interval {iv['dim_neutral']} +- "
          f"{iv['order2_dim']}; -> {out}")
    return 0 if rep.ok else 1


def cmd_verify_all(args) -> int:
    ws = verify.Workspace()
    report = verify.run_all(ws, include_sp8=args.include_sp8,
                            include_twist=args.include_twist,
                            include_split_octonions=args.include_split_octonions)
    report["generated_at"] = _timestamp()
    if args.out:
        jsonio.dump(report, args.out)
    if args.json:
        json.dump(report, sys.stdout, indent=1, sort_keys=True)
        print()
    else:
        for group in report["groups"]:
            mark = "ok " if group["ok"] else "FAIL"
            print(f"[{mark}] criterion {group['criterion']}")
            for c in group["checks"]:
                cm = "ok " if c["ok"] else "FAIL"
                line = f"    [{cm}] {c['name']}"
                if not c["ok"]:
                    line += f"  measured={c['measured']} expected={c['expected']}"
                    if c["note"]:
                        line += f"  ({c['note']})"
                print(line)
        print()
        print("fine gradings (measured):")
        hdr = f"{'grading':>8} {'model':>10} {'universal group':>18} " \
              f"{'type':>18} {'interval':>10}"
        print(hdr)
        for row in report["table1"]:
            print(f"{row['grading']:>8} {row['model']:>10} "
                  f"{row['universal_group']:>18} {str(tuple(row['type'])):>18} "
                  f"{row['interval']:>10}")
        print()
        print("all ok" if report["all_ok"] else "some checks failed")
    return 0 if report["all_ok"] else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="e6grad",
        description="Exact models and fine gradings of the real Lie algebra "
                    "e6 with Killing signature -14.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a model and write its table")
    b.add_argument("model", choices=MODELS)
    b.add_argument("--epsilon", type=int, default=-1, choices=(-1, 1),
                   help="sign of the odd-odd bracket in the Albert model")
    b.add_argument("--split-octonions", action="store_true",
                   help="use split octonions in the Tits model")
    b.add_argument("--out", help="output path (default MODEL.json)")
    b.set_defaults(fn=cmd_build)

    g = sub.add_parser("grade", help="build a named grading and its report")
    g.add_argument("model", choices=MODELS)
    g.add_argument("grading")
    g.add_argument("--out", help="output path (default MODEL_GRADING.json)")
    g.set_defaults(fn=cmd_grade)

    v = sub.add_parser("verify-all", help="run the full verification battery")
    v.add_argument("--json", action="store_true",
                   help="print the machine-readable report to stdout")
    v.add_argument("--out", help="also write the JSON report to a file")
    v.add_argument("--include-sp8", action="store_true",
                   help="include the sp8 fixed-point computation")
    v.add_argument("--include-twist", action="store_true",
                   help="include the Z2-twist signature identity")
    v.add_argument("--include-split-octonions", action="store_true",
                   help="include the split-octonion Tits variant")
    v.set_defaults(fn=cmd_verify_all)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
