"""Weight counts, the ordinary weight alternating sums, and the vanishing
criterion for the gluing problem over chains of F-centric subgroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .automorphisms import (
    Automorphism,
    automorphism_group,
    generated_group,
    is_two_power,
    q_subgroup,
)
from .characters import char_table, dual_orbits
from .fusion import FusionSystem, f_conjugates, is_F_centric
from .group import ParameterError, Params, group_table
from .invariants import block_invariants
from .subgroups import Subgroup, all_subgroups, d_class_of_subgroup, iso_type, normalizer, whole_group

# number of irreducible characters of 2-defect zero
_DEFECT_ZERO = {"trivial": 1, "C2": 0, "C3": 3, "S3": 1}


def defect_zero_count(outer: str) -> int:
    try:
        return _DEFECT_ZERO[outer]
    except KeyError:
        raise ParameterError(f"unsupported group {outer!r}; use trivial, C2, C3 or S3") from None


def describe_group(auts: list[Automorphism]) -> str:
    """Name a group of order at most 6 given by its elements."""
    order = len(auts)
    if order == 6:
        abelian = all(a * b == b * a for a in auts for b in auts)
        return "C6" if abelian else "S3"
    names = {1: "trivial", 2: "C2", 3: "C3"}
    if order not in names:
        raise ParameterError(f"no descriptor for a group of order {order}")
    return names[order]


def cohomology_vanishes(outer: str) -> bool:
    """H^1 and H^2 with coefficients in F^x (char 2, algebraically closed).

    F^x has no 2-torsion and is divisible, so both vanish for 2-groups; for
    S3 the abelianization is C2 and the Schur multiplier is trivial.
    """
    return outer in ("2-group", "S3")


# -- automizers -----------------------------------------------------------------


def automizer(Q: Subgroup, fs: FusionSystem) -> list[Automorphism]:
    """Aut_F(Q) for Q = D, Q1, Q2, or any centric Q outside the essential classes.

    Generated by conjugation with N_D(Q) and, for an essential Q_i, alpha_i.
    """
    p = fs.params
    N = normalizer(Q, p)
    gens = [Automorphism.conjugation(g, Q) for g in N.generators]
    for which, alpha in fs.alphas.items():
        if alpha.domain == Q:
            gens.append(alpha)
    return generated_group(gens, Q)


def outer_automizer(Q: Subgroup, fs: FusionSystem) -> list[Automorphism]:
    """Out_F(Q) for abelian Q (inner automorphisms are trivial), or the
    trivial group for Q = D (Aut(D) is a 2-group, so Out_F(D) = 1)."""
    if Q.order == fs.params.order:
        return [Automorphism.identity(Q)]
    if not Q.is_abelian:
        raise ParameterError("outer automizers are only modelled for D and abelian Q")
    return automizer(Q, fs)


def centric_radical_reps(fs: FusionSystem) -> list[Subgroup]:
    """Representatives of F-classes of F-centric F-radical subgroups: D and
    the essential Q_i of the case."""
    p = fs.params
    return [whole_group(p)] + [q_subgroup(w, p) for w in (1, 2) if fs.is_essential(w)]


def alperin_weight_count(fs: FusionSystem) -> int:
    fs.params.check_cap()
    return sum(
        defect_zero_count(describe_group(outer_automizer(Q, fs)))
        for Q in centric_radical_reps(fs)
    )


# -- ordinary weight sums ------------------------------------------------------


def _subgroups_of(group: list[Automorphism]) -> list[frozenset]:
    found = {frozenset(generated_group([], group[0].domain))}
    for a, b in combinations(group, 2):
        found.add(frozenset(generated_group([a, b], a.domain)))
    for a in group:
        found.add(frozenset(generated_group([a], a.domain)))
    return sorted(found, key=lambda s: (len(s), sorted(x.images for x in s)))


def _conj_set(g: Automorphism, S: frozenset) -> frozenset:
    gi = g.inverse()
    return frozenset(g * s * gi for s in S)


@dataclass
class ChainTerm:
    chain: tuple[int, ...]  # orders of the members, from the trivial group up
    sign: int
    orbits: int  # orbits whose stabilizer has a defect-zero character
    contribution: int


def owc_terms(fs: FusionSystem, Q: Subgroup, d: int) -> list[ChainTerm]:
    """Per chain-class terms of w(Q, d); sign (-1)^(number of inclusions)."""
    reps = centric_radical_reps(fs)
    if Q not in reps:
        raise ParameterError(f"{Q} is not a centric-radical representative in case {fs.case.value}")
    p = fs.params
    if Q.order == p.order:
        tab = char_table(p)
        count = sum(1 for c in tab.characters if c.defect == d)
        return [ChainTerm((1,), 1, count, count)]
    out = outer_automizer(Q, fs)
    two_subgroups = [S for S in _subgroups_of(out) if is_two_power(len(S))]
    trivial = two_subgroups[0]
    chains = [(trivial,)]
    frontier = [(trivial,)]
    while frontier:
        new = []
        for ch in frontier:
            for S in two_subgroups:
                if ch[-1] < S:
                    new.append(ch + (S,))
        chains += new
        frontier = new
    seen: set = set()
    terms = []
    q_defect = Q.order.bit_length() - 1
    for ch in chains:
        if ch in seen:
            continue
        seen.update(tuple(_conj_set(g, S) for S in ch) for g in out)
        stab = [g for g in out if all(_conj_set(g, S) == S for S in ch)]
        sign = (-1) ** (len(ch) - 1)
        qualifying = 0
        if d == q_defect:
            for orbit in dual_orbits(stab, Q):
                if defect_zero_count(describe_group(orbit.stabilizer)) >= 1:
                    qualifying += 1
        terms.append(ChainTerm(tuple(len(S) for S in ch), sign, qualifying, sign * qualifying))
    return terms


def owc_weight(fs: FusionSystem, Q: Subgroup, d: int) -> int:
    return sum(t.contribution for t in owc_terms(fs, Q, d))


@dataclass
class OwcReport:
    ok: bool
    table: dict[int, dict] = field(default_factory=dict)


def owc_check(fs: FusionSystem) -> OwcReport:
    p = fs.params
    p.check_cap()
    inv = block_invariants(fs)
    kd = {p.n + p.m: inv.k0, p.n + p.m - 1: inv.k1}
    reps = centric_radical_reps(fs)
    report = OwcReport(True)
    for d in range(p.n + p.m, -1, -1):
        weights = [owc_weight(fs, Q, d) for Q in reps]
        want = kd.get(d, 0)
        match = sum(weights) == want
        report.ok &= match
        if want or any(weights):
            report.table[d] = {"k_d": want, "weights": weights, "ok": match}
    return report


# -- gluing -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _aut_order_by_type(n: int, m: int, iso) -> int:
    # abstract |Aut(Q)|, shared by all subgroups of one isomorphism type
    p = Params(n, m, max_order=2 ** (n + m))
    Q = next(S for S in all_subgroups(p) if iso_type(S, p) == iso)
    return len(automorphism_group(Q, p, cap=p.order))


@dataclass
class ChainClass:
    top: Subgroup
    size: int  # number of chains in the class
    length: int
    kind: str  # "a", "b" or "c"
    automizer: str
    vanishes: bool


@dataclass
class GluingReport:
    verdict: str
    classes: list[ChainClass]

    @property
    def ok(self) -> bool:
        return self.verdict == "unique solution"


def f_centric_subgroups(fs: FusionSystem) -> list[Subgroup]:
    p = fs.params
    out = []
    known: dict[int, bool] = {}
    for Q in all_subgroups(p):
        if Q.mask not in known:
            flag = is_F_centric(Q, fs)
            for R in f_conjugates(Q, fs):
                known[R.mask] = flag
        if known[Q.mask]:
            out.append(Q)
    return out


def _chain_classes(fs: FusionSystem, centric: list[Subgroup]) -> list[list[tuple[int, ...]]]:
    p = fs.params
    t = group_table(p)
    masks = [Q.mask for Q in centric]
    above = {a: [b for b in masks if b != a and a & b == a] for a in masks}
    chains: list[tuple[int, ...]] = []
    stack = [(a,) for a in masks]
    while stack:
        ch = stack.pop()
        chains.append(ch)
        stack.extend(ch + (b,) for b in above[ch[-1]])
    index = {ch: k for k, ch in enumerate(chains)}
    parent = list(range(len(chains)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def image(ch, f):
        return tuple(f(mask) for mask in ch)

    def alpha_map(alpha):
        def f(mask):
            img = 0
            for a in t.indices(mask):
                img |= 1 << alpha.image_index(a)
            return img
        return f

    for ch in chains:
        movers = [lambda mask, g=g: t.conj_mask(g, mask) for g in t.generator_indices]
        for alpha in fs.alphas.values():
            if ch[-1] & alpha.domain.mask == ch[-1]:
                movers.append(alpha_map(alpha))
        for f in movers:
            a, b = find(index[ch]), find(index[image(ch, f)])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for k, ch in enumerate(chains):
        groups.setdefault(find(k), []).append(ch)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: (len(g[0]), g[0]))


def gluing_check(fs: FusionSystem) -> GluingReport:
    p = fs.params
    p.check_cap()
    centric = f_centric_subgroups(fs)
    centric_masks = {Q.mask for Q in centric}
    essential = [q_subgroup(w, p) for w in (1, 2) if fs.is_essential(w)]
    essential_masks = {R.mask for E in essential for R in f_conjugates(E, fs)}
    results = []
    for cls in _chain_classes(fs, centric):
        top = Subgroup(p, cls[0][-1])
        it = iso_type(top, p)
        if not top.is_abelian:
            aut = _aut_order_by_type(p.n, p.m, it)
            kind, desc = "a", "2-group" if is_two_power(aut) else f"order {aut}"
        elif top.mask in essential_masks:
            lonely = not any(
                m != top.mask and m & top.mask == m for m in centric_masks
            )
            outer = describe_group(outer_automizer(_essential_rep(top, essential, fs), fs))
            kind, desc = "b", outer if lonely else f"{outer} with centric subgroups"
        else:
            if any(top.mask & R == top.mask for R in essential_masks):
                raise AssertionError(f"centric {top} inside an essential subgroup")
            aut = len(automizer(top, fs))
            kind, desc = "c", "2-group" if is_two_power(aut) else f"order {aut}"
        results.append(
            ChainClass(top, len(cls), len(cls[0]) - 1, kind, desc, cohomology_vanishes(desc))
        )
    verdict = "unique solution" if all(r.vanishes for r in results) else "not established"
    return GluingReport(verdict, results)


def _essential_rep(top: Subgroup, essential: list[Subgroup], fs: FusionSystem) -> Subgroup:
    for E in essential:
        if top in f_conjugates(E, fs):
            return E
    raise AssertionError("not an essential class")
