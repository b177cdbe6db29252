"""Exact arithmetic in D = D_{2^n} x C_{2^m}.

Elements are triples ``(i, e, j)`` standing for ``x^i y^e z^j`` with
``x^(2^(n-1)) = y^2 = z^(2^m) = 1``, ``y x y^-1 = x^-1`` and ``z`` central.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

DEFAULT_MAX_ORDER = 512
MAX_ORDER_ENV = "DIHEDRAL_BLOCKS_MAX_ORDER"


class ParameterError(ValueError):
    """Invalid group parameters or labels."""


class CapExceeded(RuntimeError):
    """A brute-force operation was asked to run on a group above its size cap."""


def _default_cap() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    return int(raw) if raw else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class Params:
    n: int
    m: int
    max_order: int = field(default_factory=_default_cap, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise ParameterError("n and m must be integers")
        if self.n < 3:
            raise ParameterError(f"n must be >= 3 (got n={self.n}); n <= 2 is excluded")
        if self.m < 0:
            raise ParameterError(f"m must be >= 0 (got m={self.m})")

    @property
    def order(self) -> int:
        return 2 ** (self.n + self.m)

    @property
    def x_order(self) -> int:
        return 2 ** (self.n - 1)

    @property
    def z_order(self) -> int:
        return 2**self.m

    def check_cap(self, cap: int | None = None) -> None:
        limit = self.max_order if cap is None else cap
        if self.order > limit:
            raise CapExceeded(f"|D| = {self.order} exceeds the brute-force cap {limit}")


class Element(NamedTuple):
    i: int
    e: int
    j: int

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.e:
            parts.append("y")
        if self.j:
            parts.append("z" if self.j == 1 else f"z^{self.j}")
        return "".join(parts) or "1"


IDENTITY = Element(0, 0, 0)


def element(i: int, e: int, j: int, p: Params) -> Element:
    return Element(i % p.x_order, e % 2, j % p.z_order)


def mul(a: Element, b: Element, p: Params) -> Element:
    # x^a y^b . x^c = x^(a + (-1)^b c) y^b
    i = a.i - b.i if a.e else a.i + b.i
    return Element(i % p.x_order, (a.e + b.e) % 2, (a.j + b.j) % p.z_order)


def inv(a: Element, p: Params) -> Element:
    j = -a.j % p.z_order
    if a.e:
        return Element(a.i, 1, j)
    return Element(-a.i % p.x_order, 0, j)


def power(a: Element, k: int, p: Params) -> Element:
    if k < 0:
        a, k = inv(a, p), -k
    result = IDENTITY
    base = a
    while k:
        if k & 1:
            result = mul(result, base, p)
        base = mul(base, base, p)
        k >>= 1
    return result


def element_order(a: Element, p: Params) -> int:
    t, cur = 1, a
    while cur != IDENTITY:
        cur = mul(cur, a, p)
        t += 1
    return t


def conjugate(g: Element, a: Element, p: Params) -> Element:
    """Return ``g a g^-1``."""
    return mul(mul(g, a, p), inv(g, p), p)


def commutator(a: Element, b: Element, p: Params) -> Element:
    return mul(mul(a, b, p), mul(inv(a, p), inv(b, p), p), p)


def elements(p: Params) -> list[Element]:
    return list(group_table(p).elements)


def named(p: Params) -> dict[str, Element]:
    """The distinguished elements x, y, z, u = x^(2^(n-2)) and identity."""
    u = Element(2 ** (p.n - 2), 0, 0)
    return {
        "1": IDENTITY,
        "x": Element(1 % p.x_order, 0, 0),
        "y": Element(0, 1, 0),
        "z": Element(0, 0, 1 % p.z_order),
        "u": u,
    }


class GroupTable:
    """Index-based multiplication table of D.

    Indices follow the order of ``(e, i, j)``; subsets are int bitmasks.
    """

    def __init__(self, p: Params):
        self.params = p
        xs, zs = p.x_order, p.z_order
        self.elements: tuple[Element, ...] = tuple(
            Element(i, e, j) for e in range(2) for i in range(xs) for j in range(zs)
        )
        self.index = {g: k for k, g in enumerate(self.elements)}
        self.size = len(self.elements)
        idx = self.index
        self.mul = [[idx[mul(a, b, p)] for b in self.elements] for a in self.elements]
        self.inv = [idx[inv(a, p)] for a in self.elements]
        self.order = [element_order(a, p) for a in self.elements]
        self.square = [self.mul[k][k] for k in range(self.size)]
        self.full_mask = (1 << self.size) - 1

    def mask_of(self, elems: Iterable[Element]) -> int:
        mask = 0
        for g in elems:
            mask |= 1 << self.index[g]
        return mask

    def indices(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def conj(self, g: int, a: int) -> int:
        return self.mul[self.mul[g][a]][self.inv[g]]

    def closure(self, gens: Iterable[int]) -> int:
        gens = [g for g in gens]
        mask = 1  # identity has index 0
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                row = self.mul[a]
                for g in gens:
                    b = row[g]
                    if not mask >> b & 1:
                        mask |= 1 << b
                        new.append(b)
            frontier = new
        return mask

    def conj_mask(self, g: int, mask: int) -> int:
        out = 0
        for a in self.indices(mask):
            out |= 1 << self.conj(g, a)
        return out

    @cached_property
    def generator_indices(self) -> list[int]:
        p = self.params
        gens = [self.index[Element(1, 0, 0)], self.index[Element(0, 1, 0)]]
        if p.m:
            gens.append(self.index[Element(0, 0, 1)])
        return gens


@lru_cache(maxsize=None)
def _table(n: int, m: int) -> GroupTable:
    return GroupTable(Params(n, m, max_order=2 ** (n + m)))


def group_table(p: Params) -> GroupTable:
    return _table(p.n, p.m)


def conjugacy_classes(p: Params) -> list[tuple[Element, ...]]:
    """Conjugacy classes of D, each sorted, listed by their least element."""
    p.check_cap()
    t = group_table(p)
    seen = 0
    classes = []
    for a in range(t.size):
        if seen >> a & 1:
            continue
        orbit = sorted({t.conj(g, a) for g in range(t.size)})
        for b in orbit:
            seen |= 1 << b
        classes.append(tuple(t.elements[b] for b in orbit))
    return classes


def class_count_formula(p: Params) -> int:
    return 2**p.m * (2 ** (p.n - 2) + 3)


def center(p: Params):
    from .subgroups import Subgroup

    p.check_cap()
    t = group_table(p)
    mask = 0
    for a in range(t.size):
        row = t.mul[a]
        if all(row[g] == t.mul[g][a] for g in range(t.size)):
            mask |= 1 << a
    return Subgroup(p, mask)


def derived_subgroup(p: Params):
    from .subgroups import Subgroup

    p.check_cap()
    t = group_table(p)
    comms = {
        t.mul[t.mul[a][b]][t.mul[t.inv[a]][t.inv[b]]]
        for a in range(t.size)
        for b in range(t.size)
    }
    return Subgroup(p, t.closure(comms))
