"""Command-line front end.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
3 the group is larger than the brute-force cap.
"""
from __future__ import annotations

import argparse
import json
import sys

from .automorphisms import q_subgroup
from .characters import char_table, column_orthogonality_ok, row_orthogonality_ok
from .conjectures import (
    alperin_weight_count,
    centric_radical_reps,
    describe_group,
    gluing_check,
    outer_automizer,
    owc_check,
    owc_terms,
)
from .fusion import FusionSystem, element_fusion_classes, subsection_representatives
from .group import CapExceeded, ParameterError, Params, _default_cap
from .invariants import (
    block_invariants,
    k_minus_l,
    l_lower_bound,
    l_upper_bound,
    solve_height_distribution,
)
from .verify import TARGETS, run_checks

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="D_{2^n} factor, n >= 3")
    common.add_argument("--m", type=int, required=True, help="C_{2^m} factor, m >= 0")
    common.add_argument("--case", choices=["aa", "ab", "ba", "bb"], default=None)
    common.add_argument("--fix1", choices=["z", "uz"], default="z")
    common.add_argument("--fix2", choices=["z", "uz"], default="z")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-order", type=int, default=None, help="brute-force cap on |D|")

    parser = argparse.ArgumentParser(
        prog="dihedral-blocks",
        description="Invariants and local checks for 2-blocks with defect group D_{2^n} x C_{2^m}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[common], help="k, k0, k1, l and conjecture flags")
    sub.add_parser("classes", parents=[common], help="fusion classes and subsection representatives")
    v = sub.add_parser("verify", parents=[common], help="run verification targets")
    v.add_argument("target", choices=list(TARGETS) + ["all"])
    s = sub.add_parser("solve", parents=[common], help="height-distribution feasibility search")
    s.add_argument("--l-min", type=int, default=None)
    s.add_argument("--l-max", type=int, default=None)
    sub.add_parser("chartable", parents=[common], help="character table of D")
    sub.add_parser("weights", parents=[common], help="Alperin weight count")
    sub.add_parser("owc", parents=[common], help="ordinary weight alternating sums")
    sub.add_parser("gluing", parents=[common], help="chain classes of F-centric subgroups")
    return parser


NEEDS_CASE = {"invariants", "classes", "verify", "solve", "weights", "owc", "gluing"}


def _fusion_system(args, p: Params) -> FusionSystem:
    if args.case is None:
        raise UsageError(f"--case is required for '{args.command}'")
    return FusionSystem(p, args.case, args.fix1, args.fix2)


def _report(args, fs: FusionSystem | None, p: Params) -> tuple[dict, bool]:
    if fs is not None:
        params = fs.describe()
    else:
        params = {"n": p.n, "m": p.m, "case": None, "fix1": None, "fix2": None}
    report: dict = {"params": params, "invariants": None, "checks": {}, "details": {}}
    ok = True
    cmd = args.command
    if cmd == "invariants":
        inv = block_invariants(fs)
        report["invariants"] = inv.as_dict()
        report["checks"] = dict(inv.flags)
        ok = all(inv.flags.values())
    elif cmd == "classes":
        classes = element_fusion_classes(fs)
        report["details"] = {
            "count": len(classes),
            "representatives": [str(g) for g in subsection_representatives(fs)],
            "classes": [[str(g) for g in c] for c in classes],
        }
    elif cmd == "verify":
        for res in run_checks(fs, args.target):
            report["checks"][res.name] = res.ok
            report["details"][res.name] = res.details
        ok = all(report["checks"].values())
    elif cmd == "solve":
        S = k_minus_l(fs)
        target, cap = p.order, 2 ** (p.m + 2)
        l_min = l_lower_bound(fs) if args.l_min is None else args.l_min
        l_max = l_upper_bound(S, target, cap) if args.l_max is None else args.l_max
        sols = solve_height_distribution(S, l_min, l_max, target, cap)
        report["details"] = {
            "S": S,
            "l_range": [l_min, l_max],
            "target": target,
            "cap": cap,
            "feasible_set": [s.to_json() for s in sols],
            "unique": len(sols) == 1,
        }
        # an empty set means the inputs are inconsistent; several solutions are reported as found
        report["checks"] = {"feasible": bool(sols)}
        ok = bool(sols)
        if len(sols) == 1:
            s = sols[0]
            report["invariants"] = {"k": s.k, "k0": s.k0, "k1": s.k1, "l": s.l}
    elif cmd == "chartable":
        tab = char_table(p)
        report["details"] = tab.to_json()
        report["checks"] = {
            "row_orthogonality": row_orthogonality_ok(tab),
            "column_orthogonality": column_orthogonality_ok(tab),
            "degree_sum": sum(d * d for d in tab.degrees) == p.order,
        }
        ok = all(report["checks"].values())
    elif cmd == "weights":
        count = alperin_weight_count(fs)
        l = block_invariants(fs).l
        report["details"] = {
            "subgroups": [
                {"subgroup": str(Q), "order": Q.order, "outer": describe_group(outer_automizer(Q, fs))}
                for Q in centric_radical_reps(fs)
            ],
            "weights": count,
        }
        report["checks"] = {"weights_equal_l": count == l}
        ok = count == l
    elif cmd == "owc":
        res = owc_check(fs)
        chains = {}
        for which in (1, 2):
            if fs.is_essential(which):
                terms = owc_terms(fs, q_subgroup(which, p), p.m + 2)
                chains[f"Q{which}"] = [
                    {"chain": list(t.chain), "sign": t.sign, "orbits": t.orbits, "contribution": t.contribution}
                    for t in terms
                ]
        report["details"] = {"per_defect": {str(d): v for d, v in res.table.items()}, "chains": chains}
        report["checks"] = {"owc": res.ok}
        ok = res.ok
    elif cmd == "gluing":
        res = gluing_check(fs)
        report["details"] = {
            "verdict": res.verdict,
            "classes": [
                {
                    "top": str(c.top),
                    "top_order": c.top.order,
                    "chains": c.size,
                    "length": c.length,
                    "kind": c.kind,
                    "automizer": c.automizer,
                    "vanishes": c.vanishes,
                }
                for c in res.classes
            ],
        }
        report["checks"] = {"gluing": res.ok}
        ok = res.ok
    return report, ok


def _text(report: dict) -> str:
    lines = []
    pr = report["params"]
    head = f"n={pr['n']} m={pr['m']}"
    if pr.get("case"):
        head += f" case={pr['case']} fix1={pr['fix1']} fix2={pr['fix2']}"
    lines.append(head)
    if report["invariants"]:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in report["invariants"].items()))
    for name, good in report["checks"].items():
        lines.append(f"  {'PASS' if good else 'FAIL'} {name}")
    for key, value in report["details"].items():
        if isinstance(value, list) and len(value) > 12:
            value = f"[{len(value)} entries; use --format json]"
        elif isinstance(value, dict) and len(json.dumps(value)) > 400:
            value = "{...; use --format json}"
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cap = args.max_order if args.max_order is not None else _default_cap()
        p = Params(args.n, args.m, max_order=cap)
        p.check_cap()
        fs = _fusion_system(args, p) if args.command in NEEDS_CASE else None
        if fs is None and args.case is not None:
            fs = FusionSystem(p, args.case, args.fix1, args.fix2)
        report, ok = _report(args, fs, p)
    except (ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}; raise --max-order to proceed", file=sys.stderr)
        return EXIT_CAP
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_text(report))
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
