"""Subgroups of D: closures, the full lattice, normalizers, centralizers,
Frattini and Omega subgroups, and isomorphism-type recognition."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .group import Element, GroupTable, Params, group_table


class Subgroup:
    """A subgroup of D, identified by its element set (stored as a bitmask)."""

    def __init__(self, params: Params, mask: int):
        self.params = params
        self.mask = mask

    @property
    def table(self) -> GroupTable:
        return group_table(self.params)

    @cached_property
    def indices(self) -> list[int]:
        return self.table.indices(self.mask)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        els = self.table.elements
        return tuple(els[k] for k in self.indices)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def frattini_mask(self) -> int:
        t = self.table
        idx = self.indices
        gens = {t.square[a] for a in idx}
        gens |= {t.mul[t.mul[a][b]][t.mul[t.inv[a]][t.inv[b]]] for a in idx for b in idx}
        return t.closure(gens)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        # In a 2-group a set generates iff it generates modulo the Frattini
        # subgroup, so greedy picks outside the running span are minimal.
        t = self.table
        span = self.frattini_mask
        gens: list[int] = []
        for a in self.indices:
            if not span >> a & 1:
                gens.append(a)
                span = t.closure(gens + t.indices(self.frattini_mask))
                if span == self.mask:
                    break
        return tuple(gens)

    @property
    def generators(self) -> tuple[Element, ...]:
        els = self.table.elements
        return tuple(els[k] for k in self.generator_indices)

    def __contains__(self, g: Element) -> bool:
        return bool(self.mask >> self.table.index[g] & 1)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.params == other.params and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.params.n, self.params.m, self.mask))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Subgroup(<{gens}>, order={self.order})"

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        gens = self.generator_indices
        return all(t.mul[a][b] == t.mul[b][a] for a in gens for b in gens)

    def is_closed(self) -> bool:
        """Brute-force check of the subgroup axioms."""
        t = self.table
        if not self.mask & 1:
            return False
        for a in self.indices:
            if not self.mask >> t.inv[a] & 1:
                return False
            row = t.mul[a]
            for b in self.indices:
                if not self.mask >> row[b] & 1:
                    return False
        return True

    def conjugate_by(self, g: Element) -> "Subgroup":
        t = self.table
        return Subgroup(self.params, t.conj_mask(t.index[g], self.mask))


def trivial_subgroup(p: Params) -> Subgroup:
    return Subgroup(p, 1)


def whole_group(p: Params) -> Subgroup:
    return Subgroup(p, group_table(p).full_mask)


def closure(gens: Iterable[Element], p: Params) -> Subgroup:
    t = group_table(p)
    return Subgroup(p, t.closure(t.index[g] for g in gens))


def _sort_key(H: Subgroup):
    return (H.order, H.indices)


def all_subgroups(p: Params) -> list[Subgroup]:
    """Every subgroup of D, sorted by order and then by element indices.

    Works layer by layer: each subgroup K > 1 of a 2-group has a subgroup H
    of index 2, and K = H u gH for any g in K \\ H, where g normalizes H and
    g^2 lies in H.
    """
    p.check_cap()
    return list(_all_subgroups(p.n, p.m))


@lru_cache(maxsize=None)
def _all_subgroups(n: int, m: int) -> tuple[Subgroup, ...]:
    p = Params(n, m, max_order=2 ** (n + m))
    t = group_table(p)
    layer = {1: (0,)}
    found: dict[int, tuple[int, ...]] = dict(layer)
    while layer:
        nxt: dict[int, tuple[int, ...]] = {}
        for hmask, hgens in layer.items():
            hidx = t.indices(hmask)
            done = hmask
            for g in range(t.size):
                if done >> g & 1:
                    continue
                if not hmask >> t.square[g] & 1:
                    continue
                if any(not hmask >> t.conj(g, h) & 1 for h in hgens):
                    continue
                row = t.mul[g]
                coset = 0
                for h in hidx:
                    coset |= 1 << row[h]
                kmask = hmask | coset
                done |= kmask
                if kmask not in nxt and kmask not in found:
                    nxt[kmask] = hgens + (g,)
        found.update(nxt)
        layer = nxt
    subs = [Subgroup(p, mask) for mask in found]
    subs.sort(key=_sort_key)
    return tuple(subs)


def _gen_indices(S: Subgroup | Element, p: Params) -> list[int]:
    t = group_table(p)
    if isinstance(S, Subgroup):
        return list(S.generator_indices)
    return [t.index[S]]


def centralizer(S: Subgroup | Element, p: Params) -> Subgroup:
    p.check_cap()
    t = group_table(p)
    gens = _gen_indices(S, p)
    mask = 0
    for g in range(t.size):
        row = t.mul[g]
        if all(row[a] == t.mul[a][g] for a in gens):
            mask |= 1 << g
    return Subgroup(p, mask)


def normalizer(S: Subgroup, p: Params) -> Subgroup:
    p.check_cap()
    t = group_table(p)
    gens = S.generator_indices
    mask = 0
    for g in range(t.size):
        if all(S.mask >> t.conj(g, a) & 1 for a in gens):
            mask |= 1 << g
    return Subgroup(p, mask)


def omega_and_frattini(Q: Subgroup, p: Params) -> tuple[Subgroup, Subgroup]:
    """Omega(Q) (generated by elements of order <= 2) and Phi(Q).

    Phi(Q) is taken as <squares, commutators>, which is correct for 2-groups.
    """
    p.check_cap()
    t = group_table(p)
    invols = [a for a in Q.indices if t.order[a] <= 2]
    return Subgroup(p, t.closure(invols)), Subgroup(p, Q.frattini_mask)


def d_class_of_subgroup(Q: Subgroup, p: Params) -> list[Subgroup]:
    """The D-conjugacy class of Q, in canonical order."""
    p.check_cap()
    t = group_table(p)
    seen = {Q.mask}
    frontier = [Q.mask]
    while frontier:
        new = []
        for mask in frontier:
            for g in t.generator_indices:
                c = t.conj_mask(g, mask)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return sorted((Subgroup(p, mask) for mask in seen), key=_sort_key)


def is_normal(Q: Subgroup, p: Params) -> bool:
    return len(d_class_of_subgroup(Q, p)) == 1


# -- isomorphism types -------------------------------------------------------


@dataclass(frozen=True)
class IsoType:
    """``kind`` is 'abelian', 'dihedral_cyclic' or 'other'.

    Abelian groups carry their invariant factors (ascending); D_{2^a} x C_{2^b}
    carries ``(a, b)`` in ``dihedral``.
    """

    kind: str
    factors: tuple[int, ...] = ()
    dihedral: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.kind == "abelian":
            return " x ".join(f"C{f}" for f in self.factors) or "1"
        if self.kind == "dihedral_cyclic":
            a, b = self.dihedral
            return f"D{2**a}" + (f" x C{2**b}" if b else "")
        return "other"


class SmallGroup:
    """A finite group given by an explicit multiplication table on 0..N-1.

    Index 0 is the identity.
    """

    def __init__(self, mul: Sequence[Sequence[int]]):
        self.mul = [list(row) for row in mul]
        self.size = len(self.mul)
        assert all(self.mul[0][k] == k for k in range(self.size))
        self.inv = [0] * self.size
        for a in range(self.size):
            for b in range(self.size):
                if self.mul[a][b] == 0:
                    self.inv[a] = b
                    break
        self.order = []
        for a in range(self.size):
            t, cur = 1, a
            while cur != 0:
                cur = self.mul[cur][a]
                t += 1
            self.order.append(t)

    @classmethod
    def from_subgroup(cls, Q: Subgroup) -> "SmallGroup":
        t = Q.table
        idx = Q.indices
        local = {g: k for k, g in enumerate(idx)}
        return cls([[local[t.mul[a][b]] for b in idx] for a in idx])

    def closure(self, gens: Iterable[int]) -> set[int]:
        gens = list(gens)
        out = {0}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in out:
                        out.add(b)
                        new.append(b)
            frontier = new
        return out

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a] for a in range(self.size) for b in range(a)
        )

    def center(self) -> list[int]:
        return [
            a
            for a in range(self.size)
            if all(self.mul[a][b] == self.mul[b][a] for b in range(self.size))
        ]

    def derived_order(self) -> int:
        comms = {
            self.mul[self.mul[a][b]][self.mul[self.inv[a]][self.inv[b]]]
            for a in range(self.size)
            for b in range(self.size)
        }
        return len(self.closure(comms))


def _log2(k: int) -> int:
    if k < 1 or k & (k - 1):
        raise ValueError(f"{k} is not a power of 2")
    return k.bit_length() - 1


def abelian_invariants(G: SmallGroup) -> tuple[int, ...]:
    """Invariant factors of an abelian 2-group from its 2^k-torsion counts."""
    torsion = [1]
    k = 0
    while torsion[-1] < G.size:
        k += 1
        torsion.append(sum(1 for a in range(G.size) if (1 << k) % G.order[a] == 0))
    logs = [_log2(c) for c in torsion]
    # logs[k] - logs[k-1] = number of cyclic factors of order >= 2^k
    at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))] + [0]
    factors = []
    for k in range(1, len(logs)):
        count = at_least[k - 1] - at_least[k]
        factors += [2**k] * count
    return tuple(sorted(factors))


def iso_type_of(G: SmallGroup) -> IsoType:
    if G.is_abelian():
        return IsoType("abelian", abelian_invariants(G))
    if G.size & (G.size - 1):
        return IsoType("other")
    a = _log2(G.derived_order()) + 2
    b = _log2(G.size) - a
    if b < 0 or a < 3:
        return IsoType("other")
    xs = [g for g in range(G.size) if G.order[g] == 2 ** (a - 1)]
    ys = [g for g in range(G.size) if G.order[g] == 2]
    center = G.center()
    zs = [g for g in center if G.order[g] == 2**b]
    for X in xs:
        cyc = G.closure([X])
        xinv = G.inv[X]
        for Y in ys:
            if Y in cyc or G.mul[G.mul[Y][X]][Y] != xinv:
                continue
            dihedral = G.closure([X, Y])
            for Z in zs:
                if not G.closure([Z]) & dihedral - {0}:
                    if len(G.closure([X, Y, Z])) == G.size:
                        return IsoType("dihedral_cyclic", dihedral=(a, b))
    return IsoType("other")


def iso_type(Q: Subgroup, p: Params) -> IsoType:
    p.check_cap()
    return iso_type_of(SmallGroup.from_subgroup(Q))


def quotient_by_central(N: Subgroup, p: Params) -> SmallGroup:
    """The quotient D / N for a normal subgroup N, as a table group."""
    t = group_table(p)
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for g in range(t.size):
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in N.indices:
            coset_of[t.mul[g][h]] = k
    return SmallGroup([[coset_of[t.mul[a][b]] for b in reps] for a in reps])
