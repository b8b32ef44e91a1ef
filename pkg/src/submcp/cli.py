"""Command-line entry point: ``submcp {solve,verify,gen,gh-tree,check}``.

Exit codes: 0 success, 1 infeasible or invalid input, 2 internal invariant
violation (including a verified row exceeding its proven bound).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algorithms import TieBreakPolicy
from .errors import InternalInvariantError, InvalidArgumentError, SubMCPError
from .experiment import ALGORITHMS, run_experiment
from .generators import FAMILIES, generate
from .gomory_hu import gomory_hu_tree
from .instance import encode_number, load_instance
from .submodular import verify_properties


def _param_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _params(pairs) -> dict:
    out = {}
    for p in pairs or ():
        key, sep, val = p.partition("=")
        if not sep:
            raise InvalidArgumentError(f"--param expects key=value, got {p!r}")
        out[key.replace("-", "_")] = _param_value(val)
    return out


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _algorithms(arg) -> tuple:
    if arg in (None, "all"):
        return ALGORITHMS
    algs = tuple(a.strip() for a in arg.split(","))
    bad = [a for a in algs if a not in ALGORITHMS]
    if bad:
        raise InvalidArgumentError(f"unknown algorithm(s) {bad}; choose from {list(ALGORITHMS)}")
    return algs


def _instances(paths):
    return [(Path(p).stem, load_instance(p)) for p in paths]


def cmd_run(args, verify: bool) -> int:
    policy = TieBreakPolicy.parse(args.tie_break, args.seed)
    report = run_experiment(_instances(args.instances), _algorithms(args.algorithm), verify, policy)
    _emit(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    return 0 if report.ok else 2


def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise InvalidArgumentError(f"unknown family {args.family!r}; choose from {list(FAMILIES)}")
    inst = generate(args.family, _params(args.param), args.seed)
    inst.validate()
    _emit(inst.dumps(), args.out)
    return 0


def cmd_gh_tree(args) -> int:
    inst = load_instance(args.instance)
    T = gomory_hu_tree(inst.function)
    doc = {"n": T.n, "edges": [[u, v, encode_number(w)] for u, v, w in T.edges],
           "fingerprint": T.fingerprint, "trusted": T.trusted}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    inst = load_instance(args.instance)
    rep = verify_properties(inst.function, seed=args.seed)
    _emit(json.dumps(rep.to_dict(), indent=2) + "\n", args.out)
    return 0 if rep.submodular else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="submcp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write output here instead of stdout")

    for name, helptext in (("solve", "run algorithms on instance files"),
                           ("verify", "run algorithms and check ratios against brute force")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("instances", nargs="*")
        p.add_argument("--algorithm", default="all",
                       help="comma-separated list, or 'all' (default)")
        p.add_argument("--tie-break", default="lexicographic",
                       help="lexicographic | adversarial | seeded-random[:SEED]")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        common(p)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("family", help=" | ".join(FAMILIES))
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    common(p)

    p = sub.add_parser("gh-tree", help="print the Gomory-Hu tree of an instance's objective")
    p.add_argument("instance")
    common(p)

    p = sub.add_parser("check", help="verify submodularity, symmetry and monotonicity")
    p.add_argument("instance")
    common(p)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("solve", "verify"):
            return cmd_run(args, args.command == "verify")
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "gh-tree":
            return cmd_gh_tree(args)
        return cmd_check(args)
    except InternalInvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (SubMCPError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return getattr(e, "exit_code", 1)
    except TypeError as e:  # bad --param keys
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
