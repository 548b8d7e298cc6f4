"""Command-line front end.

Subcommands: count (one class or ad-hoc pattern set, four methods), verify
(succession rules and generating-function identities), expand (print a
truncated series), biject (apply one of the lattice-path maps), report
(cross-method comparison table).  Exit status 0 means every requested check
agreed, 1 means a mismatch, 2 means a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections
from .closed_forms import GF_FOR_CLASS, REGISTRY as GF_REGISTRY, closed_form, \
    series_from_refined, verify_identity
from .enumerate import BRUTE_GUARD, count_brute, count_tree
from .patterns import parse_pattern_set
from .perms import format_perm, parse_perm
from .rules import CLASS_IDS, REGISTRY, count_by_rule, refined_by_rule, verify_rule


def _patterns_for(args):
    if getattr(args, "klass", None):
        return REGISTRY[args.klass].patterns
    return parse_pattern_set(args.avoid)


def _gf_counts(class_id: str, nmax: int) -> list[int]:
    name = GF_FOR_CLASS[class_id]
    spec = GF_REGISTRY[name]
    series = closed_form(name, nmax,
                         at_u=1 if "u" in spec.variables else None,
                         at_v=1 if "v" in spec.variables else None)
    return [int(series.coefficient(n).constant_value()) for n in range(1, nmax + 1)]


def _cmd_count(args) -> int:
    if args.method in ("rule", "gf") and not args.klass:
        raise ValueError(f"--method {args.method} requires --class")
    if args.method == "rule":
        counts = count_by_rule(REGISTRY[args.klass], args.max_n)
    elif args.method == "gf":
        counts = _gf_counts(args.klass, args.max_n)
    elif args.method == "brute":
        pats = _patterns_for(args)
        counts = [count_brute(pats, n) for n in range(1, args.max_n + 1)]
    else:
        counts = count_tree(_patterns_for(args), args.max_n)
    for n, c in enumerate(counts, start=1):
        print(f"{n} {c}")
    return 0


def _rule_candidate(class_id: str, order: int):
    """Rule-refined series substituted to match the registered variables."""
    name = GF_FOR_CLASS[class_id]
    variables = GF_REGISTRY[name].variables
    series = series_from_refined(refined_by_rule(REGISTRY[class_id], order), order)
    return name, series.subs_one(u="u" not in variables, v="v" not in variables)


def _cmd_verify(args) -> int:
    ids = [args.klass] if args.klass else list(CLASS_IDS)
    failed = False
    for cid in ids:
        report = verify_rule(REGISTRY[cid], args.max_n)
        print(report)
        if not report.ok:
            failed = True
            continue
        name, candidate = _rule_candidate(cid, args.order)
        ok, residual = verify_identity(name, candidate, args.order)
        if ok:
            print(f"{cid}: {name} identity holds to order {args.order}")
        else:
            failed = True
            n, poly = residual
            print(f"{cid}: {name} identity FAILS, residual ({poly})t^{n}")
    return 1 if failed else 0


def _cmd_expand(args) -> int:
    series = closed_form(args.gf, args.order, at_u=args.at_u, at_v=args.at_v)
    print(series)
    return 0


def _cmd_biject(args) -> int:
    maps = {
        "phi": (lambda s: bijections.phi(parse_perm(s)),
                lambda s: format_perm(bijections.phi_inverse(s))),
        "callan": (bijections.callan, bijections.callan_inverse),
        "udu_uuu": (bijections.udu_uuu, bijections.udu_uuu_inverse),
        "subdiag": (lambda s: bijections.subdiag(parse_perm(s)),
                    lambda s: format_perm(bijections.subdiag_inverse(s))),
    }
    forward, inverse = maps[args.map]
    print(inverse(args.input) if args.inverse else forward(args.input))
    return 0


def _cmd_report(args) -> int:
    rows = []
    all_agree = True
    for cid in CLASS_IDS:
        spec = REGISTRY[cid]
        tree = count_tree(spec.patterns, args.max_n)
        rule = count_by_rule(spec, args.max_n)
        gf = _gf_counts(cid, args.max_n)
        for n in range(1, args.max_n + 1):
            brute = None
            if not args.no_brute and n <= BRUTE_GUARD:
                brute = count_brute(spec.patterns, n)
            vals = [v for v in (brute, tree[n - 1], rule[n - 1], gf[n - 1])
                    if v is not None]
            agree = len(set(vals)) == 1
            all_agree = all_agree and agree
            rows.append((cid, n, brute, tree[n - 1], rule[n - 1], gf[n - 1], agree))
    if args.format == "json":
        print(json.dumps([
            {"class": cid, "n": n,
             "counts": {"brute": None if b is None else str(b),
                        "tree": str(t), "rule": str(r), "gf": str(g)},
             "agree": agree}
            for cid, n, b, t, r, g, agree in rows], indent=2))
    elif args.format == "csv":
        print("class,n,brute,tree,rule,gf,agree")
        for cid, n, b, t, r, g, agree in rows:
            btxt = "" if b is None else str(b)
            print(f"{cid},{n},{btxt},{t},{r},{g},{str(agree).lower()}")
    else:
        for cid, n, b, t, r, g, agree in rows:
            btxt = "-" if b is None else str(b)
            mark = "ok" if agree else "MISMATCH"
            print(f"{cid} n={n} brute={btxt} tree={t} rule={r} gf={g} {mark}")
    return 0 if all_agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patavoid",
        description="Count and map permutations avoiding generalized patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="counts by length for one class")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--class", dest="klass", choices=CLASS_IDS)
    group.add_argument("--avoid", help="comma-separated pattern set")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--method", choices=("brute", "tree", "rule", "gf"),
                   default="tree")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="succession rules and series identities")
    p.add_argument("--class", dest="klass", choices=CLASS_IDS)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--order", type=int, default=12)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("expand", help="print a generating-function expansion")
    p.add_argument("--gf", required=True, choices=sorted(GF_REGISTRY))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--at-u", type=int, choices=(1,), default=None)
    p.add_argument("--at-v", type=int, choices=(1,), default=None)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("biject", help="apply one of the lattice-path maps")
    p.add_argument("--map", required=True,
                   choices=("phi", "callan", "udu_uuu", "subdiag"))
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_biject)

    p = sub.add_parser("report", help="cross-method comparison for all classes")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--no-brute", action="store_true")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
