"""Command line interface: ``pfpatterns count|verify|growth|show``.

Exit codes: 0 success, 2 usage or parameter error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Any, Optional, Sequence

from . import asymptotics, closed_forms, lattice_paths, parking, patterns, sylvester, tableaux, verify
from .combinatorics import BoundExceeded, is_composition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILED = 3

#: Largest n the parking-function oracle runs at without --slow.
FAST_ORACLE_N = 6


class UsageError(Exception):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    """Comma-separated integers, or a run of digits when every letter is <= 9."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(x) for x in text.split(",") if x.strip())
        if text.isdigit():
            return tuple(int(c) for c in text)
    except ValueError:
        pass
    raise UsageError(f"cannot parse integer sequence {text!r}")


def parse_pattern(text: str) -> tuple[int, ...]:
    p = parse_ints(text)
    if not patterns.is_permutation(p):
        raise UsageError(f"{text!r} is not a permutation")
    return p


def fmt_word(w: Sequence[int]) -> str:
    if all(x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _direction(text: str) -> str:
    if text in ("dec", "decreasing"):
        return closed_forms.DECREASING
    if text in ("inc", "increasing"):
        return closed_forms.INCREASING
    raise UsageError(f"direction must be dec or inc, got {text!r}")


def envelope(command: str, parameters: dict, value: Any, started: float, timing: bool,
             oracle: Optional[int] = None) -> dict:
    return {
        "command": command,
        "parameters": {k: parameters[k] for k in sorted(parameters)},
        "value": str(value) if isinstance(value, int) else value,
        "oracle": None if oracle is None else str(oracle),
        "agreement": None if oracle is None else (oracle == value),
        "elapsed_ms": int((time.perf_counter() - started) * 1000) if timing else 0,
    }


def _emit_json(env: dict) -> None:
    print(json.dumps(env, indent=2))


def _oracle_bound(args: argparse.Namespace) -> int:
    return parking.PF_BOUND if args.slow else FAST_ORACLE_N


def cmd_count(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    family = args.family
    params: dict[str, Any] = {"family": family}
    oracle = None
    if family in ("pf321", "pf-nonmonotone", "pf-monotone", "words-monotone"):
        if args.n is None:
            raise UsageError(f"count {family} requires --n")
        params["n"] = args.n
    if family == "pf321":
        value = closed_forms.pf321_closed(args.n)
        if args.oracle:
            oracle = closed_forms.pf_bruteforce_count(args.n, (3, 2, 1), _oracle_bound(args))
    elif family == "pf-nonmonotone":
        if args.pattern is None:
            raise UsageError("count pf-nonmonotone requires --pattern")
        sigma = parse_pattern(args.pattern)
        params["pattern"] = fmt_word(sigma)
        value = closed_forms.pf_nonmonotone_count(args.n, sigma, allow_large=args.allow_large)
        if args.oracle:
            oracle = closed_forms.pf_bruteforce_count(args.n, sigma, _oracle_bound(args))
    elif family == "pf-monotone":
        spec = closed_forms.MonotoneSpec(_direction(args.dir), args.r)
        params.update(direction=spec.direction, r=spec.r)
        value = closed_forms.monotone_pf_count(args.n, spec)
        if args.oracle:
            sigma = tuple(range(spec.r, 0, -1)) if spec.direction == closed_forms.DECREASING \
                else tuple(range(1, spec.r + 1))
            oracle = closed_forms.pf_bruteforce_count(args.n, sigma, _oracle_bound(args))
    elif family == "words-monotone":
        if args.k is None:
            raise UsageError("count words-monotone requires --k")
        spec = closed_forms.MonotoneSpec(_direction(args.dir), args.r)
        params.update(k=args.k, direction=spec.direction, r=spec.r)
        value = closed_forms.monotone_word_count(args.n, args.k, spec)
        if args.oracle:
            oracle = closed_forms.word_bruteforce_count(args.n, args.k, spec)
    elif family == "sylv-classes":
        if args.content is None:
            raise UsageError("count sylv-classes requires --content")
        content = parse_ints(args.content)
        alpha = patterns.packed(content)
        if not alpha:
            raise UsageError("content must have a positive part")
        params.update(content=list(content), sharp=args.sharp)
        if args.sharp:
            value = closed_forms.sharp_sylvester_class_count_det(alpha)
            if args.oracle:
                oracle = len(sylvester.sharp_classes(content))
        else:
            value = closed_forms.sylvester_class_count_det(alpha)
            if args.oracle:
                oracle = len(sylvester.sylv_classes(content))
    elif family == "dyck-ascent":
        if args.composition is None:
            raise UsageError("count dyck-ascent requires --composition")
        alpha = parse_ints(args.composition)
        if not is_composition(alpha):
            raise UsageError(f"{args.composition!r} is not a composition")
        params["composition"] = list(alpha)
        value = lattice_paths.dyck_by_ascent_det(alpha)
        if args.oracle:
            oracle = lattice_paths.dyck_by_ascent_bruteforce(alpha)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {family}")

    env = envelope("count", params, value, started, not args.no_timing, oracle)
    if args.json:
        _emit_json(env)
    else:
        print(value)
        if oracle is not None:
            print(f"oracle {oracle} {'agrees' if oracle == value else 'DISAGREES'}")
    return EXIT_OK if oracle is None or oracle == value else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    checks: list[verify.Check] = []
    for name in names:
        kwargs: dict[str, Any] = {"slow": args.slow}
        if args.n_max is not None:
            kwargs["n_max"] = args.n_max
        if name == "growth":
            kwargs["seed"] = args.seed
        for check in verify.SUITES[name](**kwargs):
            checks.append(verify.Check(f"[{name}] {check.name}", check.passed, check.detail))
            if not args.json:
                print(checks[-1].line(), flush=True)
    failed = sum(not c.passed for c in checks)
    if args.json:
        params = {"suite": args.suite, "n_max": args.n_max, "seed": args.seed, "slow": args.slow}
        payload = {"passed": len(checks) - failed, "failed": failed,
                   "checks": [c.to_dict() for c in checks]}
        _emit_json(envelope("verify", params, payload, started, not args.no_timing))
    else:
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_growth(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    spec = closed_forms.MonotoneSpec(_direction(args.dir), args.r)
    limit = asymptotics.limit_for(spec)
    limit_text = str(limit)
    params: dict[str, Any] = {"direction": spec.direction, "r": spec.r}
    if args.limit_only:
        if args.json:
            _emit_json(envelope("growth", params, limit_text, started, not args.no_timing))
        else:
            print(limit_text)
        return EXIT_OK
    if args.n is None:
        raise UsageError("growth requires --n (or --limit-only)")
    ns = parse_ints(args.n) if "," in args.n else (int(args.n),)
    params["n"] = list(ns)
    report = asymptotics.empirical_roots(spec, ns)
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "count", "root"])
        for n, count, root in report.samples:
            writer.writerow([n, count, repr(root)])
        sys.stdout.write(buf.getvalue())
    elif args.json:
        _emit_json(envelope("growth", params, report.to_dict(), started, not args.no_timing))
    else:
        print(f"limit {limit_text} ~ {float(limit):.6f}")
        for n, count, root in report.samples:
            print(f"n={n} root={root:.6f} count={count}")
    return EXIT_OK


def cmd_show(args: argparse.Namespace) -> int:
    obj = args.object
    if obj == "rsk":
        w = patterns.as_word(parse_ints(args.arg))
        pair = tableaux.rsk(w)
        print(f"shape {pair.shape}")
        print("P:")
        for row in pair.insertion:
            print("  " + " ".join(map(str, row)))
        print("Q:")
        for row in pair.recording:
            print("  " + " ".join(map(str, row)))
        lis, lds = tableaux.greene_invariants(w)
        print(f"longest weakly increasing {lis}, longest strictly decreasing {lds}")
    elif obj == "bst":
        w = patterns.as_word(parse_ints(args.arg))
        print(sylvester.render_tree(sylvester.bst_of(w)))
    elif obj == "dyck":
        path = args.arg.strip().upper()
        if not lattice_paths.is_dyck(path):
            raise UsageError(f"{args.arg!r} is not a Dyck path over U/D")
        print(lattice_paths.render_path(path))
        print(f"ascent {lattice_paths.ascent_comp(path)} descent {lattice_paths.descent_comp(path)}")
        if path:
            fam = lattice_paths.dyck_to_family(path)
            print(f"LGV north-step columns {fam.columns}")
    elif obj == "rothe":
        pi = parse_pattern(args.arg)
        print(lattice_paths.render_rothe(pi))
        print(f"descents {sorted(patterns.descent_set(pi))}")
        if not patterns.perm_contains(pi, (1, 3, 2)):
            path = lattice_paths.rothe_dyck(pi)
            print(f"boundary path {path} descent composition {lattice_paths.descent_comp(path)}")
    elif obj == "classes":
        content = parse_ints(args.arg)
        table = sylvester.sharp_classes(content) if args.sharp else sylvester.sylv_classes(content)
        if args.json:
            print(json.dumps(table.to_dict(members=args.members), indent=2))
        else:
            print(f"{len(table)} classes")
            for rep, cls in zip(table.canonical, table.classes):
                line = fmt_word(rep)
                if args.members:
                    line += ": " + " ".join(fmt_word(w) for w in cls)
                print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON result envelope")
    common.add_argument("--slow", action="store_true", help="allow n=7 exhaustive oracles")
    common.add_argument("--seed", type=int, default=0, help="seed for random sampling")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 for byte-reproducible output")

    parser = argparse.ArgumentParser(prog="pfpatterns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="exact enumeration")
    p.add_argument("family", choices=["pf321", "pf-nonmonotone", "pf-monotone",
                                      "words-monotone", "sylv-classes", "dyck-ascent"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--pattern")
    p.add_argument("--dir", default="dec")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--content")
    p.add_argument("--composition")
    p.add_argument("--sharp", action="store_true", help="use the #-Sylvester congruence")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force count")
    p.add_argument("--allow-large", action="store_true",
                   help="permit composition sums beyond n=%d" % closed_forms.COMPOSITION_SUM_LIMIT)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", choices=[*verify.SUITES, "all"])
    p.add_argument("--n-max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", parents=[common], help="growth-rate table")
    p.add_argument("--dir", default="dec")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--n", help="comma-separated list of n")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--limit-only", action="store_true")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("show", parents=[common], help="render an object")
    p.add_argument("object", choices=["rsk", "bst", "dyck", "rothe", "classes"])
    p.add_argument("arg")
    p.add_argument("--sharp", action="store_true")
    p.add_argument("--members", action="store_true")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
