"""Fusion systems on D for the four cases aa, ab, ba, bb.

The system is generated by conjugation in D together with an order-3
automorphism on each essential subgroup among Q1 = <u, y, z> and
Q2 = <u, xy, z> (u = x^(2^(n-2))). Subsections are modelled by the
F-conjugacy classes of elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .automorphisms import Automorphism, FixChoice, order3_automorphism, q_subgroup
from .group import Element, ParameterError, Params, group_table, named
from .subgroups import (
    Subgroup,
    SmallGroup,
    all_subgroups,
    centralizer,
    closure,
    d_class_of_subgroup,
    iso_type,
    iso_type_of,
    normalizer,
    omega_and_frattini,
    quotient_by_central,
)
from .group import center


class FusionCase(str, Enum):
    AA = "aa"  # both Q1 and Q2 have automizer S3
    AB = "ab"  # Q2 only
    BA = "ba"  # Q1 only
    BB = "bb"  # neither: the block is nilpotent

    @classmethod
    def parse(cls, label) -> "FusionCase":
        if isinstance(label, cls):
            return label
        for case in cls:
            if case.value == str(label).lower():
                return case
        raise ParameterError(f"unknown fusion case {label!r}; use aa, ab, ba or bb")

    @property
    def essential(self) -> tuple[bool, bool]:
        return {
            "aa": (True, True),
            "ab": (False, True),
            "ba": (True, False),
            "bb": (False, False),
        }[self.value]

    @classmethod
    def from_essential(cls, q1: bool, q2: bool) -> "FusionCase":
        return {
            (True, True): cls.AA,
            (False, True): cls.AB,
            (True, False): cls.BA,
            (False, False): cls.BB,
        }[(q1, q2)]


@dataclass(frozen=True)
class FusionSystem:
    params: Params
    case: FusionCase
    fix1: FixChoice | None
    fix2: FixChoice | None

    inertial_index = 1

    def __init__(self, params: Params, case, fix1="z", fix2="z"):
        case = FusionCase.parse(case)
        e1, e2 = case.essential
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "fix1", FixChoice.parse(fix1) if e1 else None)
        object.__setattr__(self, "fix2", FixChoice.parse(fix2) if e2 else None)
        for which, fix in ((1, self.fix1), (2, self.fix2)):
            if fix is FixChoice.UZ and params.m == 0:
                raise ParameterError(f"fix{which}=uz needs m >= 1")

    def is_essential(self, which: int) -> bool:
        return self.case.essential[which - 1]

    def fix(self, which: int) -> FixChoice | None:
        return self.fix1 if which == 1 else self.fix2

    def q(self, which: int) -> Subgroup:
        return q_subgroup(which, self.params)

    @cached_property
    def alphas(self) -> dict[int, Automorphism]:
        return {
            which: order3_automorphism(which, self.fix(which), self.params)
            for which in (1, 2)
            if self.is_essential(which)
        }

    def alpha(self, which: int) -> Automorphism | None:
        return self.alphas.get(which)

    def describe(self) -> dict:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "case": self.case.value,
            "fix1": self.fix1.value if self.fix1 else None,
            "fix2": self.fix2.value if self.fix2 else None,
        }


def choice_vectors(p: Params) -> list[tuple[str, str]]:
    """All fixed-point choice vectors valid for p (only z-type when m = 0)."""
    opts = ["z", "uz"] if p.m else ["z"]
    return [(a, b) for a in opts for b in opts]


# -- F-conjugacy of subgroups ----------------------------------------------------


def f_conjugates(Q: Subgroup, fs: FusionSystem) -> list[Subgroup]:
    """All images of Q under D-conjugation and the essential automorphisms."""
    p = fs.params
    t = group_table(p)
    seen = {Q.mask}
    frontier = [Q.mask]
    while frontier:
        new = []
        for mask in frontier:
            images = [t.conj_mask(g, mask) for g in t.generator_indices]
            for which, alpha in fs.alphas.items():
                dom = alpha.domain.mask
                if mask & dom == mask:
                    img = 0
                    for a in t.indices(mask):
                        img |= 1 << alpha.image_index(a)
                    images.append(img)
            for img in images:
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return [Subgroup(p, mask) for mask in sorted(seen)]


def is_F_centric(Q: Subgroup, fs: FusionSystem) -> bool:
    p = fs.params
    return all(centralizer(R, p) <= R for R in f_conjugates(Q, fs))


def _aut_is_two_group_abelian(factors: tuple[int, ...]) -> bool:
    # Aut of an abelian 2-group is a 2-group iff no invariant factor repeats
    return len(set(factors)) == len(factors)


@dataclass
class CandidateReport:
    """Why each centric proper D-class was kept or rejected."""

    subgroup: Subgroup
    iso: str
    verdict: str


def essential_candidates(fs: FusionSystem) -> tuple[list[list[Subgroup]], list[CandidateReport]]:
    """D-classes of proper subgroups that could be F-centric and F-radical.

    Filters, in order: F-centric; abelian (nonabelian centric subgroups are
    dihedral-times-cyclic with Aut a 2-group); Aut(Q) not a 2-group; Omega(Q)
    not inside Z(D) (otherwise D induces a normal 2-subgroup of the automizer
    acting trivially on Omega(Q)).
    """
    p = fs.params
    p.check_cap()
    Z = center(p)
    kept: list[list[Subgroup]] = []
    report: list[CandidateReport] = []
    seen: set[Subgroup] = set()
    for Q in all_subgroups(p):
        if Q.order == p.order or Q in seen:
            continue
        cls = d_class_of_subgroup(Q, p)
        seen.update(cls)
        if not Z <= Q or not is_F_centric(Q, fs):
            continue
        it = iso_type(Q, p)
        if not Q.is_abelian:
            if it.kind != "dihedral_cyclic":
                raise AssertionError(f"unexpected nonabelian centric subgroup {Q}: {it}")
            report.append(CandidateReport(Q, str(it), "rejected: Aut(Q) is a 2-group"))
            continue
        if _aut_is_two_group_abelian(it.factors):
            report.append(CandidateReport(Q, str(it), "rejected: Aut(Q) is a 2-group"))
            continue
        omega, _ = omega_and_frattini(Q, p)
        if omega <= Z:
            report.append(CandidateReport(Q, str(it), "rejected: Omega(Q) <= Z(D)"))
            continue
        report.append(CandidateReport(Q, str(it), "candidate"))
        kept.append(cls)
    return kept, report


def essential_classes(fs: FusionSystem) -> list[list[Subgroup]]:
    return essential_candidates(fs)[0]


# -- element fusion and subsections ------------------------------------------------


def element_fusion_classes(fs: FusionSystem) -> list[tuple[Element, ...]]:
    """Finest partition of D closed under D-conjugation and the essential
    automorphisms, classes sorted internally and by least element."""
    p = fs.params
    p.check_cap()
    t = group_table(p)
    parent = list(range(t.size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for a in range(t.size):
        for g in t.generator_indices:
            union(a, t.conj(g, a))
    for alpha in fs.alphas.values():
        for a in alpha.domain.indices:
            union(a, alpha.image_index(a))
    groups: dict[int, list[int]] = {}
    for a in range(t.size):
        groups.setdefault(find(a), []).append(a)
    classes = sorted(sorted(g) for g in groups.values())
    return [tuple(t.elements[a] for a in c) for c in classes]


def subsection_representatives(fs: FusionSystem) -> list[Element]:
    """Least element of each fusion class; with element order (e, i, j) this
    prefers x^i z^j forms and small exponents."""
    return [c[0] for c in element_fusion_classes(fs)]


def canonical_representatives(fs: FusionSystem) -> list[Element]:
    """x^i z^j (0 <= i <= 2^(n-2)), plus y z^j when Q1 is not essential and
    x y z^j when Q2 is not essential."""
    p = fs.params
    reps = [Element(i, 0, j) for i in range(2 ** (p.n - 2) + 1) for j in range(p.z_order)]
    if not fs.is_essential(1):
        reps += [Element(0, 1, j) for j in range(p.z_order)]
    if not fs.is_essential(2):
        reps += [Element(1, 1, j) for j in range(p.z_order)]
    return sorted(reps, key=lambda g: group_table(p).index[g])


def fusion_class_count_formula(p: Params, case) -> int:
    case = FusionCase.parse(case)
    extra = {"bb": 3, "ab": 2, "ba": 2, "aa": 1}[case.value]
    return 2**p.m * (2 ** (p.n - 2) + extra)


def fixed_points(which: int, fs: FusionSystem) -> Subgroup:
    """Elements of Q_which fixed by its order-3 automorphism and by N_D(Q)."""
    alpha = fs.alpha(which)
    if alpha is None:
        raise ParameterError(f"Q{which} is not essential in case {fs.case.value}")
    p = fs.params
    t = group_table(p)
    Q = alpha.domain
    N = normalizer(Q, p)
    mask = 0
    for a in Q.indices:
        if alpha.image_index(a) == a and all(t.conj(g, a) == a for g in N.generator_indices):
            mask |= 1 << a
    return Subgroup(p, mask)


def major_split(fs: FusionSystem) -> tuple[list[Element], list[Element], list[Element]]:
    """U = {u z^(2j)}, V = {z^j : j != 0}, W = {u z^(2j+1)} with u = x^(2^(n-2))."""
    p = fs.params
    if p.m == 0:
        raise ParameterError("the U/V/W split needs m >= 1")
    u = 2 ** (p.n - 2)
    half = 2 ** (p.m - 1)
    U = [Element(u, 0, 2 * j) for j in range(half)]
    V = [Element(0, 0, j) for j in range(1, p.z_order)]
    W = [Element(u, 0, 2 * j + 1) for j in range(half)]
    return U, V, W


def subcase_of_major(u: Element, fs: FusionSystem) -> FusionCase:
    """Case of the block dominated by b_u: slot i stays essential iff alpha_i fixes u."""
    p = fs.params
    if u not in center(p) or u == named(p)["1"]:
        raise ParameterError(f"{u} is not a nontrivial central element")
    flags = []
    for which in (1, 2):
        flags.append(fs.is_essential(which) and u in fixed_points(which, fs))
    return FusionCase.from_essential(*flags)


def quotient_type(u: Element, p: Params) -> tuple[int, int]:
    """(n', m') with D/<u> = D_{2^n'} x C_{2^m'}, from the explicit coset group."""
    p.check_cap()
    if u not in center(p):
        raise ParameterError(f"{u} is not central")
    N = closure([u], p)
    it = iso_type_of(quotient_by_central(N, p))
    if it.kind != "dihedral_cyclic":
        raise ValueError(f"D/<{u}> is not of dihedral-times-cyclic type ({it})")
    return it.dihedral
