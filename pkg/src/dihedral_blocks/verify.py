"""Named verification targets, each returning a pass flag and a detail record."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .automorphisms import automorphism_group, q_subgroup, verify_aut_two_group
from .conjectures import alperin_weight_count, gluing_check, owc_check, owc_terms
from .fusion import (
    FusionSystem,
    canonical_representatives,
    essential_classes,
    fixed_points,
    fusion_class_count_formula,
    element_fusion_classes,
    subsection_representatives,
)
from .group import Element, derived_subgroup, named
from .invariants import block_invariants, closed_form, k_minus_l
from .subgroups import closure, d_class_of_subgroup, omega_and_frattini


@dataclass
class CheckResult:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)


def check_aut(fs: FusionSystem) -> CheckResult:
    p = fs.params
    two, size = verify_aut_two_group(p)
    details = {"aut_order": size, "power_of_two": two}
    if p.m:
        # Omega(Q1) = <u, y, z^(2^(m-1))> is elementary abelian of rank 3
        omega, _ = omega_and_frattini(q_subgroup(1, p), p)
        details["aut_elementary_rank3"] = len(automorphism_group(omega, p))
        two = two and details["aut_elementary_rank3"] == 168
    return CheckResult("aut", two, details)


def check_essential(fs: FusionSystem) -> CheckResult:
    p = fs.params
    found = [frozenset(c) for c in essential_classes(fs)]
    want = [frozenset(d_class_of_subgroup(q_subgroup(w, p), p)) for w in (1, 2)]
    ok = set(found) == set(want) and len(found) == 2 and want[0] != want[1]
    z = named(p)["z"]
    contains_z = all(z in Q for c in found for Q in c)
    return CheckResult(
        "essential",
        ok and contains_z,
        {"classes": [sorted(str(Q) for Q in c) for c in found], "all_contain_z": contains_z},
    )


def check_fixedpt(fs: FusionSystem) -> CheckResult:
    p = fs.params
    details = {}
    ok = True
    u = named(p)["u"]
    for which in (1, 2):
        if not fs.is_essential(which):
            continue
        fix = fixed_points(which, fs)
        gen = named(p)["z"] if fs.fix(which).value == "z" else Element(u.i, 0, 1 % p.z_order)
        want = closure([gen], p)
        u_even_outside = all(Element(u.i, 0, 2 * j % p.z_order) not in fix for j in range(p.z_order))
        good = fix == want and u_even_outside
        ok &= good
        details[f"Q{which}"] = {"fixed": sorted(str(g) for g in fix.elements), "ok": good}
    return CheckResult("fixedpt", ok, details)


def check_subrep(fs: FusionSystem) -> CheckResult:
    p = fs.params
    count = len(element_fusion_classes(fs))
    want = fusion_class_count_formula(p, fs.case)
    reps = subsection_representatives(fs)
    canonical = canonical_representatives(fs)
    details = {"classes": count, "expected": want, "matches_canonical": reps == canonical}
    ok = count == want
    if fs.fix1 in (None, "z") and fs.fix2 in (None, "z"):
        ok &= reps == canonical
    return CheckResult("subrep", ok, details)


def check_olsson(fs: FusionSystem) -> CheckResult:
    p = fs.params
    inv = block_invariants(fs)
    index = p.order // derived_subgroup(p).order
    ok = inv.k0 == index == 2 ** (p.m + 2)
    return CheckResult("olsson", ok, {"k0": inv.k0, "abelianization": index})


def check_main(fs: FusionSystem) -> CheckResult:
    p = fs.params
    want = closed_form(p, fs.case)
    inv = block_invariants(fs)
    recursive = k_minus_l(fs)
    ok = inv.as_dict() == want and recursive == want["k"] - want["l"]
    return CheckResult(
        "main",
        ok,
        {"computed": inv.as_dict(), "closed_form": want, "k_minus_l": recursive, "flags": inv.flags},
    )


def check_awc(fs: FusionSystem) -> CheckResult:
    count = alperin_weight_count(fs)
    l = block_invariants(fs).l
    return CheckResult("awc", count == l, {"weights": count, "l": l})


def check_owc(fs: FusionSystem) -> CheckResult:
    p = fs.params
    report = owc_check(fs)
    ok = report.ok
    chains = {}
    for which in (1, 2):
        if not fs.is_essential(which):
            continue
        Q = q_subgroup(which, p)
        terms = owc_terms(fs, Q, p.m + 2)
        contributions = [t.contribution for t in terms]
        ok &= contributions == [2**p.m, -(2**p.m)]
        chains[f"Q{which}"] = contributions
    return CheckResult(
        "owc", ok, {"per_defect": {str(d): v for d, v in report.table.items()}, "chains": chains}
    )


def check_gluing(fs: FusionSystem) -> CheckResult:
    report = gluing_check(fs)
    kinds: dict[str, int] = {}
    for c in report.classes:
        kinds[c.kind] = kinds.get(c.kind, 0) + 1
    return CheckResult(
        "gluing", report.ok, {"verdict": report.verdict, "chain_classes": len(report.classes), "by_kind": kinds}
    )


TARGETS: dict[str, Callable[[FusionSystem], CheckResult]] = {
    "aut": check_aut,
    "essential": check_essential,
    "fixedpt": check_fixedpt,
    "subrep": check_subrep,
    "olsson": check_olsson,
    "main": check_main,
    "awc": check_awc,
    "owc": check_owc,
    "gluing": check_gluing,
}


def run_checks(fs: FusionSystem, target: str = "all") -> list[CheckResult]:
    names = list(TARGETS) if target == "all" else [target]
    return [TARGETS[name](fs) for name in names]
