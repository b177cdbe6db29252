"""Automorphism groups of D and of its subgroups, and the order-3
automorphisms of the two Klein-four-by-cyclic subgroups Q1, Q2."""
from __future__ import annotations

from enum import Enum
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Mapping

from .group import Element, ParameterError, Params, CapExceeded, group_table, named
from .subgroups import Subgroup, closure, whole_group

DEFAULT_AUT_CAP = 64


class FixChoice(str, Enum):
    """Which central cyclic subgroup an order-3 automorphism centralizes."""

    Z = "z"  # fixes <z>
    UZ = "uz"  # fixes <x^(2^(n-2)) z>

    @classmethod
    def parse(cls, label) -> "FixChoice":
        if isinstance(label, cls):
            return label
        key = str(label).lower().replace("-type", "").replace("_type", "")
        for choice in cls:
            if choice.value == key:
                return choice
        raise ParameterError(f"unknown fixed-point choice {label!r}; use 'z' or 'uz'")


class Automorphism:
    """An automorphism of a subgroup Q of D, stored as a full permutation.

    ``images[k]`` is the global index of the image of ``Q.indices[k]``.
    """

    def __init__(self, domain: Subgroup, images: Iterable[int]):
        self.domain = domain
        self.images = tuple(images)

    @cached_property
    def _map(self) -> dict[int, int]:
        return dict(zip(self.domain.indices, self.images))

    def image_index(self, k: int) -> int:
        return self._map[k]

    def __call__(self, g: Element) -> Element:
        t = self.domain.table
        return t.elements[self._map[t.index[g]]]

    @classmethod
    def from_generator_images(
        cls, domain: Subgroup, gen_images: Mapping[Element, Element]
    ) -> "Automorphism":
        t = domain.table
        gens = [(t.index[g], t.index[h]) for g, h in gen_images.items()]
        phi = _extend(t, gens)
        if phi is None or len(phi) != domain.order or set(phi) != set(domain.indices):
            raise ValueError("generator images do not define a homomorphism on Q")
        if set(phi.values()) != set(domain.indices):
            raise ValueError("generator images do not define an automorphism of Q")
        return cls(domain, (phi[k] for k in domain.indices))

    @classmethod
    def identity(cls, domain: Subgroup) -> "Automorphism":
        return cls(domain, domain.indices)

    @classmethod
    def conjugation(cls, g: Element, domain: Subgroup) -> "Automorphism":
        """Restriction to Q of q -> g q g^-1 (g must normalize Q)."""
        t = domain.table
        gi = t.index[g]
        images = [t.conj(gi, a) for a in domain.indices]
        if not all(domain.mask >> b & 1 for b in images):
            raise ValueError(f"{g} does not normalize {domain}")
        return cls(domain, images)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        """Composition ``self o other``."""
        return Automorphism(self.domain, (self._map[b] for b in other.images))

    def inverse(self) -> "Automorphism":
        back = {b: a for a, b in self._map.items()}
        return Automorphism(self.domain, (back[a] for a in self.domain.indices))

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur * self
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.images == tuple(self.domain.indices)

    def fixed_points(self) -> Subgroup:
        mask = 0
        for a, b in self._map.items():
            if a == b:
                mask |= 1 << a
        return Subgroup(self.domain.params, mask)

    def is_automorphism(self) -> bool:
        """Exhaustive check: bijective onto Q and multiplicative on all pairs."""
        t = self.domain.table
        if sorted(self.images) != list(self.domain.indices):
            return False
        f = self._map
        return all(
            f[t.mul[a][b]] == t.mul[f[a]][f[b]]
            for a in self.domain.indices
            for b in self.domain.indices
        )

    def maps_onto(self, S: Subgroup) -> bool:
        """Whether S (a subgroup of Q) is mapped onto itself."""
        return all(S.mask >> self._map[a] & 1 for a in S.indices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.domain == other.domain and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.domain, self.images))

    def __repr__(self) -> str:
        gens = ", ".join(f"{g}->{self(g)}" for g in self.domain.generators)
        return f"Automorphism({gens})"


def _extend(t, gens: list[tuple[int, int]]) -> dict[int, int] | None:
    """Extend generator images to a map on <gens> along the Cayley graph.

    Returns None when two paths to the same element disagree, i.e. when the
    assignment violates a relation.
    """
    phi = {0: 0}
    frontier = [0]
    while frontier:
        new = []
        for q in frontier:
            fq = phi[q]
            for g, h in gens:
                a = t.mul[q][g]
                v = t.mul[fq][h]
                prev = phi.get(a)
                if prev is None:
                    phi[a] = v
                    new.append(a)
                elif prev != v:
                    return None
        frontier = new
    return phi


def automorphism_group(
    Q: Subgroup, p: Params, cap: int = DEFAULT_AUT_CAP
) -> list[Automorphism]:
    """All automorphisms of Q, by searching order-preserving generator images.

    Partial assignments are pruned as soon as they fail to extend to a
    homomorphism on the subgroup generated so far.
    """
    if Q.order > cap:
        raise CapExceeded(f"|Q| = {Q.order} exceeds the automorphism cap {cap}")
    t = group_table(p)
    gens = list(Q.generator_indices)
    candidates = [[h for h in Q.indices if t.order[h] == t.order[g]] for g in gens]
    found: list[Automorphism] = []

    def search(level: int, chosen: list[tuple[int, int]], span: dict[int, int]):
        if level == len(gens):
            if len(set(span.values())) == Q.order:
                found.append(Automorphism(Q, (span[k] for k in Q.indices)))
            return
        g = gens[level]
        for h in candidates[level]:
            trial = chosen + [(g, h)]
            phi = _extend(t, trial)
            if phi is None:
                continue
            # injectivity on the partial span
            if len(set(phi.values())) != len(phi):
                continue
            search(level + 1, trial, phi)

    search(0, [], {0: 0})
    found.sort(key=lambda a: a.images)
    return found


def is_two_power(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def verify_aut_two_group(p: Params) -> tuple[bool, int]:
    """Return (|Aut(D)| is a power of 2, |Aut(D)|)."""
    p.check_cap()
    size = len(_aut_D(p.n, p.m))
    return is_two_power(size), size


@lru_cache(maxsize=None)
def _aut_D(n: int, m: int) -> tuple[Automorphism, ...]:
    p = Params(n, m, max_order=2 ** (n + m))
    return tuple(automorphism_group(whole_group(p), p, cap=p.order))


def q_subgroup(which: int, p: Params) -> Subgroup:
    """Q1 = <u, y, z> or Q2 = <u, xy, z> with u = x^(2^(n-2))."""
    return closure(q_generators(which, p), p)


def q_generators(which: int, p: Params) -> tuple[Element, Element, Element]:
    if which not in (1, 2):
        raise ParameterError(f"essential subgroup index must be 1 or 2, got {which!r}")
    e = named(p)
    t = e["y"] if which == 1 else Element(1, 1, 0)
    return e["u"], t, e["z"]


def order3_automorphism(which: int, fix_choice, p: Params) -> Automorphism:
    """The order-3 automorphism u -> t -> ut -> u of Q_which.

    ``t`` is y for Q1 and xy for Q2. The z-type choice fixes z; the uz-type
    choice sends z to utz and so fixes uz. For m = 0 only the z-type exists.
    """
    choice = FixChoice.parse(fix_choice)
    u, t, z = q_generators(which, p)
    Q = q_subgroup(which, p)
    tab = group_table(p)
    ut = tab.elements[tab.mul[tab.index[u]][tab.index[t]]]
    if choice is FixChoice.Z:
        zimg = z
    else:
        if p.m == 0:
            raise ParameterError("the uz-type choice needs m >= 1 (z is trivial for m = 0)")
        zimg = tab.elements[tab.mul[tab.index[ut]][tab.index[z]]]
    images = {u: t, t: ut}
    if p.m:
        images[z] = zimg
    return Automorphism.from_generator_images(Q, images)


def generated_group(gens: Iterable[Automorphism], domain: Subgroup) -> list[Automorphism]:
    """All products of the given automorphisms (including the identity)."""
    gens = list(gens)
    ident = Automorphism.identity(domain)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    new.append(b)
        frontier = new
    return sorted(seen, key=lambda a: a.images)
