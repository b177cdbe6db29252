"""Ordinary characters of D and of its abelian subgroups.

D has 2^(m+2) linear characters, inflated from D/D' = C2 x C2 x C_{2^m}, and
2^m (2^(n-2) - 1) characters of degree 2 induced from <x, z>. All values
are exact cyclotomic integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .automorphisms import Automorphism, generated_group
from .cyclotomic import Cyc, DecompositionColumn
from .exact_matrix import gram, to_array
from .group import Element, Params, conjugacy_classes, group_table
from .subgroups import Subgroup, SmallGroup, abelian_invariants, centralizer


@dataclass(frozen=True)
class CharacterInfo:
    label: str
    degree: int
    height: int
    defect: int
    values: tuple[Cyc, ...]


class CharacterTable:
    def __init__(self, p: Params):
        p.check_cap()
        self.params = p
        self.level = max(p.n - 1, p.m, 1)
        self.classes = conjugacy_classes(p)
        self.class_sizes = [len(c) for c in self.classes]
        self._class_of = {g: k for k, c in enumerate(self.classes) for g in c}
        reps = [c[0] for c in self.classes]
        total = p.n + p.m
        chars: list[CharacterInfo] = []
        for a, b, c in product(range(2), range(2), range(p.z_order)):
            values = tuple(self._linear(a, b, c, g) for g in reps)
            chars.append(CharacterInfo(f"lin({a},{b},{c})", 1, 0, total, values))
        for t, s in product(range(1, 2 ** (p.n - 2)), range(p.z_order)):
            values = tuple(self._degree_two(t, s, g) for g in reps)
            chars.append(CharacterInfo(f"chi({t},{s})", 2, 1, total - 1, values))
        self.characters = chars

    def _root(self, order: int, power: int) -> Cyc:
        # zeta_order^power at the table level
        return Cyc.zeta(self.level, power * (2**self.level // order))

    def _linear(self, a: int, b: int, c: int, g: Element) -> Cyc:
        sign = self._root(2, a * g.i + b * g.e)
        return sign * self._root(self.params.z_order, c * g.j)

    def _degree_two(self, t: int, s: int, g: Element) -> Cyc:
        if g.e:
            return Cyc(self.level)
        xo = self.params.x_order
        return (self._root(xo, t * g.i) + self._root(xo, -t * g.i)) * self._root(
            self.params.z_order, s * g.j
        )

    def __len__(self) -> int:
        return len(self.characters)

    @property
    def degrees(self) -> list[int]:
        return [c.degree for c in self.characters]

    @property
    def heights(self) -> list[int]:
        return [c.height for c in self.characters]

    def class_index(self, g: Element) -> int:
        return self._class_of[g]

    def column(self, g: Element) -> list[Cyc]:
        k = self.class_index(g)
        return [c.values[k] for c in self.characters]

    def decomposition_column(self, g: Element) -> DecompositionColumn:
        """The column chi(g), read as generalized decomposition numbers of the
        nilpotent block of D (its subsection (g, b_g) has l = 1)."""
        order = group_table(self.params).order[group_table(self.params).index[g]]
        k = order.bit_length() - 1
        return DecompositionColumn(self.column(g), k)

    def inner_product(self, i: int, j: int) -> Cyc:
        """|D| times the usual inner product of characters i and j."""
        total = Cyc(self.level)
        for size, a, b in zip(
            self.class_sizes, self.characters[i].values, self.characters[j].values
        ):
            total = total + a * b.conj() * size
        return total

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "classes": [[list(g) for g in c] for c in self.classes],
            "class_representatives": [str(c[0]) for c in self.classes],
            "class_sizes": self.class_sizes,
            "characters": [
                {
                    "label": c.label,
                    "degree": c.degree,
                    "height": c.height,
                    "defect": c.defect,
                    "values": [v.to_json() for v in c.values],
                }
                for c in self.characters
            ],
        }


@lru_cache(maxsize=None)
def _char_table(n: int, m: int) -> CharacterTable:
    return CharacterTable(Params(n, m, max_order=2 ** (n + m)))


def char_table(p: Params) -> CharacterTable:
    p.check_cap()
    return _char_table(p.n, p.m)


def k_per_defect(p: Params) -> dict[int, int]:
    """Number of irreducible characters of D of each defect n+m-h."""
    return {
        p.n + p.m: 2 ** (p.m + 2),
        p.n + p.m - 1: 2**p.m * (2 ** (p.n - 2) - 1),
    }


def _expected_gram(diagonal: Sequence[int], L: int):
    k = len(diagonal)
    want = np.zeros((k, k, L), dtype=np.int64)
    want[np.arange(k), np.arange(k), 0] = diagonal
    return want


def row_orthogonality_ok(tab: CharacterTable) -> bool:
    """sum_c |c| chi(c) conj(psi(c)) = |D| delta_{chi, psi}, exactly."""
    arr = to_array([c.values for c in tab.characters], tab.level)
    got = gram(arr, arr, tab.class_sizes)
    want = _expected_gram([tab.params.order] * len(tab), arr.shape[2])
    return bool(np.array_equal(got, want))


def column_orthogonality_ok(tab: CharacterTable) -> bool:
    """sum_chi chi(c) conj(chi(c')) = |C_D(c)| delta_{c, c'}, exactly."""
    p = tab.params
    arr = to_array([c.values for c in tab.characters], tab.level).transpose(1, 0, 2)
    cents = [centralizer(c[0], p).order for c in tab.classes]
    got = gram(arr, arr)
    return bool(np.array_equal(got, _expected_gram(cents, arr.shape[2])))


# -- abelian subgroups ---------------------------------------------------------


class AbelianCharacter:
    """A linear character of an abelian subgroup Q: chi(q) = zeta_N^(exps[q])."""

    def __init__(self, domain: Subgroup, modulus: int, exps: Sequence[int]):
        self.domain = domain
        self.modulus = modulus
        self.exps = tuple(e % modulus for e in exps)

    @cached_property
    def _by_index(self) -> dict[int, int]:
        return dict(zip(self.domain.indices, self.exps))

    def __call__(self, g: Element) -> Cyc:
        k = self._by_index[self.domain.table.index[g]]
        level = max(self.modulus.bit_length() - 1, 1)
        return Cyc.zeta(level, k * (2**level // self.modulus))

    @property
    def degree(self) -> int:
        return 1

    @property
    def defect(self) -> int:
        return self.domain.order.bit_length() - 1

    def act(self, alpha: Automorphism) -> "AbelianCharacter":
        """(alpha . chi)(q) = chi(alpha^-1(q))."""
        inv = alpha.inverse()
        return AbelianCharacter(
            self.domain,
            self.modulus,
            (self._by_index[inv.image_index(q)] for q in self.domain.indices),
        )

    def is_trivial(self) -> bool:
        return not any(self.exps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianCharacter):
            return NotImplemented
        return self.domain == other.domain and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.domain, self.exps))

    def __repr__(self) -> str:
        return f"AbelianCharacter(mod {self.modulus}, {self.exps})"


def abelian_basis(Q: Subgroup) -> list[int]:
    """Indices g_1, ..., g_r with Q the internal direct product of the <g_i>."""
    t = Q.table
    factors = sorted(abelian_invariants(SmallGroup.from_subgroup(Q)), reverse=True)

    def search(chosen: list[int], span: int) -> list[int] | None:
        if len(chosen) == len(factors):
            return chosen
        want = factors[len(chosen)]
        for g in Q.indices:
            if t.order[g] != want:
                continue
            new = t.closure(chosen + [g])
            if new.bit_count() == span.bit_count() * want:
                found = search(chosen + [g], new)
                if found is not None:
                    return found
        return None

    basis = search([], 1)
    assert basis is not None
    return basis


def irr_abelian(Q: Subgroup) -> list[AbelianCharacter]:
    if not Q.is_abelian:
        raise ValueError(f"{Q} is not abelian")
    t = Q.table
    basis = abelian_basis(Q)
    orders = [t.order[g] for g in basis]
    modulus = max(orders, default=1)
    coords: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(o) for o in orders)):
        g = 0
        for b, e in zip(basis, exps):
            for _ in range(e):
                g = t.mul[g][b]
        coords[g] = exps
    chars = []
    for cs in product(*(range(o) for o in orders)):
        vals = []
        for q in Q.indices:
            a = coords[q]
            vals.append(sum(c * ai * (modulus // o) for c, ai, o in zip(cs, a, orders)))
        chars.append(AbelianCharacter(Q, modulus, vals))
    return chars


@dataclass
class Orbit:
    characters: list[AbelianCharacter]
    stabilizer: list[Automorphism]

    def __len__(self) -> int:
        return len(self.characters)


def dual_orbits(auts: Iterable[Automorphism], Q: Subgroup) -> list[Orbit]:
    """Orbits of the group generated by ``auts`` on Irr(Q), with stabilizers."""
    group = generated_group(auts, Q)
    chars = irr_abelian(Q)
    seen: set[AbelianCharacter] = set()
    orbits = []
    for chi in chars:
        if chi in seen:
            continue
        orbit = []
        for g in group:
            img = chi.act(g)
            if img not in orbit:
                orbit.append(img)
        seen.update(orbit)
        stab = [g for g in group if chi.act(g) == chi]
        orbits.append(Orbit(orbit, stab))
    return orbits
