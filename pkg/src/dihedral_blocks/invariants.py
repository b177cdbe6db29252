"""Numerical block invariants k, k0, k1 and l.

k - l is assembled from subsections: non-major subsections and the major
ones in U have nilpotent dominated blocks (l = 1); for u in V and W the
dominated block lives over the quotient D/<u>, which is again of type
D_{2^n'} x C_{2^m'} with m' < m, so its l is computed recursively. The
height distribution is then pinned down by an exhaustive search over
integer profiles with 4^h o^2 shaped entries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .characters import k_per_defect
from .fusion import (
    FusionCase,
    FusionSystem,
    element_fusion_classes,
    major_split,
    quotient_type,
    subcase_of_major,
)
from .group import Params, center, derived_subgroup

CASE_L = {FusionCase.AA: 3, FusionCase.AB: 2, FusionCase.BA: 2, FusionCase.BB: 1}


def l_of_case(case) -> int:
    return CASE_L[FusionCase.parse(case)]


def closed_form(p: Params, case) -> dict[str, int]:
    """The expected invariants as closed formulas in n and m."""
    return {
        "k": 2**p.m * (2 ** (p.n - 2) + 3),
        "k0": 2 ** (p.m + 2),
        "k1": 2**p.m * (2 ** (p.n - 2) - 1),
        "l": l_of_case(case),
    }


@dataclass(frozen=True)
class FeasibleSolution:
    l: int
    k: int
    k0: int
    # sorted tuple of (height, odd part, multiplicity)
    profile: tuple[tuple[int, int, int], ...]

    @property
    def k1(self) -> int:
        return sum(c for h, _, c in self.profile if h == 1)

    @property
    def max_height(self) -> int:
        return max((h for h, _, _ in self.profile), default=0)

    def total(self) -> int:
        return sum(c * 4**h * o * o for h, o, c in self.profile)

    def entries(self) -> list[int]:
        """The profile as a sorted list of values 4^h o^2."""
        out = []
        for h, o, c in self.profile:
            out += [4**h * o * o] * c
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "k": self.k,
            "k0": self.k0,
            "k1": self.k1,
            "profile": [{"height": h, "odd": o, "count": c} for h, o, c in self.profile],
        }


@dataclass
class BlockInvariants:
    k: int
    k0: int
    k1: int
    l: int
    case: FusionCase
    flags: dict[str, bool] = field(default_factory=dict)

    def as_dict(self) -> dict[str, int]:
        return {"k": self.k, "k0": self.k0, "k1": self.k1, "l": self.l}


# -- k - l --------------------------------------------------------------------


def _major_contribution(u, fs: FusionSystem) -> int:
    sub = subcase_of_major(u, fs)
    if sub is FusionCase.BB:
        return 1
    n2, m2 = quotient_type(u, fs.params)
    return _l_recursive(n2, m2, sub.value, fs.params.max_order)


@lru_cache(maxsize=None)
def _l_recursive(n: int, m: int, case: str, max_order: int) -> int:
    # l of a block of the given case over D_{2^n} x C_{2^m}, via the full pipeline
    return block_invariants(FusionSystem(Params(n, m, max_order), case)).l


def k_minus_l(fs: FusionSystem) -> int:
    """k(B) - l(B) as the sum of l(b_u) over nontrivial subsection representatives."""
    p = fs.params
    if p.m == 0:
        # base of the induction: the dihedral case is known in closed form
        return 2 ** (p.n - 2) + 3 - l_of_case(fs.case)
    return _k_minus_l_cached(fs)


@lru_cache(maxsize=None)
def _k_minus_l_cached(fs: FusionSystem) -> int:
    p = fs.params
    Z = center(p)
    U, V, W = major_split(fs)
    u_set = set(U)
    total = 0
    for cls in element_fusion_classes(fs):
        rep = cls[0]
        if rep.i == 0 and rep.e == 0 and rep.j == 0:
            continue
        if rep not in Z or rep in u_set:
            total += 1
        else:
            total += _major_contribution(rep, fs)
    return total


def k_minus_l_terms(fs: FusionSystem) -> list[tuple[str, str, int]]:
    """(representative, kind, l(b_u)) for every nontrivial subsection; m >= 1."""
    p = fs.params
    Z = center(p)
    U, V, W = major_split(fs)
    kinds = {**{g: "U" for g in U}, **{g: "V" for g in V}, **{g: "W" for g in W}}
    rows = []
    for cls in element_fusion_classes(fs):
        rep = cls[0]
        if rep == (0, 0, 0):
            continue
        if rep not in Z:
            rows.append((str(rep), "nonmajor", 1))
        elif kinds[rep] == "U":
            rows.append((str(rep), "U", 1))
        else:
            rows.append((str(rep), kinds[rep], _major_contribution(rep, fs)))
    return rows


def l_lower_bound(fs: FusionSystem) -> int:
    """Imported lower bounds on l(B); only case aa has a nontrivial one."""
    if fs.case is FusionCase.AA:
        return 2 if fs.params.m == 1 else 3
    return 1


def l_upper_bound(S: int, target: int, cap: int) -> int:
    """Largest l with 4k - 3k0 <= target still possible, k = S + l, k0 <= cap."""
    return (target + 3 * cap) // 4 - S


# -- height distribution solver --------------------------------------------------


def _odd_parts(limit: int, height: int) -> list[int]:
    out = []
    o = 1
    while 4**height * o * o <= limit:
        out.append(o)
        o += 2
    return out


def _shapes(target: int, zero_height: bool) -> list[tuple[int, int]]:
    """(h, o) pairs with 4^h o^2 <= target, descending by value."""
    shapes = []
    heights = [0] if zero_height else range(1, target.bit_length())
    for h in heights:
        shapes += [(h, o) for o in _odd_parts(target, h)]
    return sorted(shapes, key=lambda s: -(4 ** s[0] * s[1] ** 2))


def _multisets(
    shapes: list[tuple[int, int]], count: int, total: int
) -> Iterator[tuple[tuple[int, int, int], ...]]:
    """Multisets of ``count`` shapes (values descending, smallest last) summing to total."""
    if not shapes:
        if count == 0 and total == 0:
            yield ()
        return
    *big, smallest = shapes
    vmin = 4 ** smallest[0] * smallest[1] ** 2

    def rec(idx: int, count: int, total: int, acc: list):
        slack = total - count * vmin
        if slack < 0:
            return
        if idx == len(big):
            if slack == 0:
                tail = [(smallest[0], smallest[1], count)] if count else []
                yield tuple(acc + tail)
            return
        h, o = big[idx]
        v = 4**h * o * o
        c = 0
        while c <= count and c * (v - vmin) <= slack:
            step = [(h, o, c)] if c else []
            yield from rec(idx + 1, count - c, total - c * v, acc + step)
            c += 1

    yield from rec(0, count, total, [])


def solve_height_distribution(
    S: int, l_min: int, l_max: int, target: int, cap: int
) -> list[FeasibleSolution]:
    """All (l, k0, profile) with k = S + l entries 4^h o^2 summing to target,
    exactly k0 of height zero and k0 <= cap."""
    if S < 1:
        raise ValueError("S must be positive")
    zero_shapes = _shapes(target, True)
    high_shapes = _shapes(target, False)
    found = []
    for l in range(l_min, l_max + 1):
        k = S + l
        for k0 in range(min(k, cap), -1, -1):
            if 4 * k - 3 * k0 > target:
                break
            k1 = k - k0
            for s0 in range(k0, target - 4 * k1 + 1):
                for low in _multisets(zero_shapes, k0, s0):
                    for high in _multisets(high_shapes, k1, target - s0):
                        profile = tuple(sorted(low + high))
                        found.append(FeasibleSolution(l, k, k0, profile))
    found.sort(key=lambda s: (s.l, s.k0, s.profile))
    return found


# -- final invariants --------------------------------------------------------------


def feasible_set(fs: FusionSystem) -> list[FeasibleSolution]:
    p = fs.params
    S = k_minus_l(fs)
    target = 2 ** (p.n + p.m)
    cap = 2 ** (p.m + 2)
    return solve_height_distribution(S, l_lower_bound(fs), l_upper_bound(S, target, cap), target, cap)


def block_invariants(fs: FusionSystem) -> BlockInvariants:
    p = fs.params
    if fs.case is FusionCase.BB:
        # nilpotent: the invariants are those of D
        counts = k_per_defect(p)
        k0 = counts[p.n + p.m]
        k1 = counts[p.n + p.m - 1]
        inv = BlockInvariants(k0 + k1, k0, k1, 1, fs.case)
    else:
        sols = feasible_set(fs)
        if len(sols) != 1:
            raise RuntimeError(f"height solver returned {len(sols)} solutions for {fs.describe()}")
        sol = sols[0]
        if sol.max_height > 1:
            raise RuntimeError(f"unexpected height {sol.max_height}")
        inv = BlockInvariants(sol.k, sol.k0, sol.k1, sol.l, fs.case)
    want = closed_form(p, fs.case)
    if inv.as_dict() != want:
        raise RuntimeError(f"invariants {inv.as_dict()} disagree with closed forms {want}")
    inv.flags = conjecture_flags(inv, p)
    return inv


def conjecture_flags(inv: BlockInvariants, p: Params) -> dict[str, bool]:
    abelianization = p.order // derived_subgroup(p).order
    brauer = inv.k <= p.order
    olsson = inv.k0 <= abelianization
    return {
        "brauer_kB": brauer,
        "olsson": olsson,
        "height_zero_direction": inv.k != inv.k0,
        "alperin_mckay": inv.k0 == abelianization,
        "eaton_extremes": brauer and olsson,
    }
