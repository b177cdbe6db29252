"""Exact arithmetic in Z[zeta_{2^k}] and the calculus of decomposition columns.

An element at level k is an integer vector over the power basis
1, zeta, ..., zeta^(2^(k-1) - 1), reduced with zeta^(2^(k-1)) = -1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

MAX_LEVEL = 16


class LevelOverflow(ValueError):
    pass


class InconsistentColumns(ValueError):
    """Raised when decomposition data violate a relation that genuine data satisfy."""


def _check_level(k: int) -> None:
    if k < 1:
        raise ValueError(f"cyclotomic level must be >= 1, got {k}")
    if k > MAX_LEVEL:
        raise LevelOverflow(f"level {k} exceeds the configured bound {MAX_LEVEL}")


class Cyc:
    """An element of Z[zeta_{2^level}]; immutable."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Iterable[int] = ()):
        _check_level(level)
        size = 1 << (level - 1)
        vec = [0] * size
        for pos, c in enumerate(coeffs):
            # fold any overlong input through zeta^size = -1
            q, r = divmod(pos, size)
            vec[r] += -c if q & 1 else c
        self.level = level
        self.coeffs = tuple(vec)

    @classmethod
    def zeta(cls, level: int, power: int = 1) -> "Cyc":
        size = 1 << (level - 1)
        q, r = divmod(power, size)
        vec = [0] * size
        vec[r] = -1 if q & 1 else 1
        return cls(level, vec)

    @classmethod
    def integer(cls, value: int, level: int = 1) -> "Cyc":
        return cls(level, [value])

    @classmethod
    def coerce(cls, value, level: int = 1) -> "Cyc":
        if isinstance(value, Cyc):
            return value
        if isinstance(value, int):
            return cls.integer(value, level)
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic integer")

    def at_level(self, level: int) -> "Cyc":
        """Re-express at another level; lowering fails outside the subring."""
        if level == self.level:
            return self
        _check_level(level)
        if level > self.level:
            step = 1 << (level - self.level)
            vec = [0] * (1 << (level - 1))
            for i, c in enumerate(self.coeffs):
                vec[i * step] = c
            return Cyc(level, vec)
        step = 1 << (self.level - level)
        if any(c for i, c in enumerate(self.coeffs) if i % step):
            raise ValueError(f"{self} does not lie in Z[zeta_{2**level}]")
        return Cyc(level, self.coeffs[::step])

    def reduced(self) -> "Cyc":
        cur = self
        while cur.level > 1:
            try:
                cur = cur.at_level(cur.level - 1)
            except ValueError:
                break
        return cur

    def _pair(self, other) -> tuple["Cyc", "Cyc"]:
        other = Cyc.coerce(other)
        k = max(self.level, other.level)
        return self.at_level(k), other.at_level(k)

    def __add__(self, other) -> "Cyc":
        a, b = self._pair(other)
        return Cyc(a.level, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.level, (-c for c in self.coeffs))

    def __sub__(self, other) -> "Cyc":
        return self + (-Cyc.coerce(other))

    def __rsub__(self, other) -> "Cyc":
        return Cyc.coerce(other) - self

    def __mul__(self, other) -> "Cyc":
        if isinstance(other, int):
            return Cyc(self.level, (other * c for c in self.coeffs))
        a, b = self._pair(other)
        size = len(a.coeffs)
        vec = [0] * size
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    s = i + j
                    if s >= size:
                        vec[s - size] -= x * y
                    else:
                        vec[s] += x * y
        return Cyc(a.level, vec)

    __rmul__ = __mul__

    def galois(self, gamma: int) -> "Cyc":
        """Image under zeta -> zeta^gamma (gamma odd)."""
        if gamma % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        size = len(self.coeffs)
        vec = [0] * size
        for i, c in enumerate(self.coeffs):
            if c:
                q, r = divmod(i * gamma, size)
                vec[r] += -c if q & 1 else c
        return Cyc(self.level, vec)

    def conj(self) -> "Cyc":
        return self.galois(-1)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Cyc.integer(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.level, r.coeffs))

    def __repr__(self) -> str:
        return f"Cyc({self.level}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyc":
        return cls(int(data["level"]), [int(c) for c in data["coeffs"]])


def cyc_arith(op: str, u: Cyc, v: Cyc | None = None) -> Cyc:
    if op == "add":
        return u + v
    if op == "mul":
        return u * v
    if op == "conj":
        return u.conj()
    raise ValueError(f"unknown operation {op!r}")


def inner_product(c1: Sequence[Cyc], c2: Sequence[Cyc]) -> Cyc:
    """sum_chi c1[chi] * conj(c2[chi])."""
    if len(c1) != len(c2):
        raise ValueError(f"length mismatch: {len(c1)} vs {len(c2)}")
    total = Cyc(1)
    for a, b in zip(c1, c2):
        total = total + Cyc.coerce(a) * Cyc.coerce(b).conj()
    return total


# -- decomposition columns ---------------------------------------------------


@dataclass(frozen=True)
class DecompositionColumn:
    """Entries d^u_{chi, phi_u}, indexed like a character list; u has order 2^k."""

    entries: tuple[Cyc, ...]
    k: int

    def __init__(self, entries: Iterable, k: int):
        k_eff = max(k, 1)
        object.__setattr__(self, "k", k_eff)
        object.__setattr__(
            self, "entries", tuple(Cyc.coerce(e).at_level(k_eff) for e in entries)
        )

    def __len__(self) -> int:
        return len(self.entries)


def column_decompose(d: DecompositionColumn) -> list[tuple[int, ...]]:
    """Integer columns a_0, ..., a_{2^(k-1)-1} with d = sum_i a_i zeta^i."""
    size = 1 << (d.k - 1)
    return [tuple(e.coeffs[i] for e in d.entries) for i in range(size)]


def a_index(a_cols: Sequence[Sequence[int]], s: int) -> tuple[int, ...]:
    """a_s for any integer s, using a_{s + 2^(k-1)} = -a_s."""
    size = len(a_cols)
    q, r = divmod(s, size)
    col = tuple(a_cols[r])
    return tuple(-c for c in col) if q & 1 else col


def _level_of(a_cols: Sequence[Sequence[int]]) -> int:
    size = len(a_cols)
    if size < 1 or size & (size - 1):
        raise ValueError("number of integer columns must be a power of 2")
    return size.bit_length()


def is_transversal(S: Iterable[int], size: int) -> bool:
    S = list(S)
    return len(S) == size and sorted(s % size for s in S) == list(range(size))


def galois_expand(
    a_cols: Sequence[Sequence[int]], gamma: int, S: Iterable[int] | None = None
) -> tuple[Cyc, ...]:
    """d(u^gamma) = sum_{s in S} a_s zeta^(s gamma) for a transversal S of 2^(k-1) Z."""
    k = _level_of(a_cols)
    size = len(a_cols)
    S = list(range(size)) if S is None else list(S)
    if not is_transversal(S, size):
        raise ValueError(f"{S} is not a transversal of {size}Z in Z")
    width = len(a_cols[0])
    out = [Cyc(k) for _ in range(width)]
    for s in S:
        col = a_index(a_cols, s)
        z = Cyc.zeta(k, s * gamma)
        for chi in range(width):
            if col[chi]:
                out[chi] = out[chi] + z * col[chi]
    return tuple(out)


@dataclass(frozen=True)
class GaloisContext:
    """The 2-part of the Galois group: odd residues modulo 2^a."""

    a: int
    gammas: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be >= 1")
        object.__setattr__(self, "gammas", tuple(range(1, 2**self.a, 2)))

    @property
    def order(self) -> int:
        return 2 ** (self.a - 1)


def _lookup(columns: Mapping, gamma: int, k: int, a: int):
    for key in (gamma % 2**k, gamma % 2**a, gamma):
        if key in columns:
            return columns[key]
    raise KeyError(f"no column supplied for Galois exponent {gamma}")


def trace_recover(
    columns: Mapping[int, Sequence[Cyc] | DecompositionColumn],
    ctx: GaloisContext,
    s: int,
    k: int | None = None,
) -> tuple[int, ...]:
    """a_s = 2^(1-a) sum_gamma d(u^gamma) zeta^(-gamma s), as an integer vector.

    ``columns`` maps Galois exponents (odd residues mod 2^k or mod 2^a) to
    d(u^gamma). A non-integral result raises InconsistentColumns.
    """
    if k is None:
        levels = [c.k for c in columns.values() if isinstance(c, DecompositionColumn)]
        if not levels:
            raise ValueError("k must be given when columns are plain vectors")
        k = levels[0]
    if k > ctx.a:
        raise ValueError(f"element order 2^{k} exceeds 2^a = 2^{ctx.a}")
    width = None
    total: list[Cyc] = []
    for gamma in ctx.gammas:
        col = _lookup(columns, gamma, k, ctx.a)
        entries = col.entries if isinstance(col, DecompositionColumn) else col
        if width is None:
            width = len(entries)
            total = [Cyc(k) for _ in range(width)]
        elif len(entries) != width:
            raise ValueError("columns have different lengths")
        z = Cyc.zeta(k, -gamma * s)
        total = [t + Cyc.coerce(e).at_level(k) * z for t, e in zip(total, entries)]
    scale = ctx.order
    out = []
    for t in total:
        if not t.is_integer() or int(t) % scale:
            raise InconsistentColumns(f"trace sum {t} is not divisible by {scale}")
        out.append(int(t) // scale)
    return tuple(out)


# -- checks on decomposition data ---------------------------------------------


def two_adic_valuation(v: int) -> int | None:
    if v == 0:
        return None
    return ((v & -v).bit_length()) - 1


@dataclass
class ParityReport:
    """Per-character results; None where a check does not apply."""

    odd_sum: list[bool | None]
    valuation: list[bool | None]

    @property
    def ok(self) -> bool:
        return all(r is not False for r in self.odd_sum + self.valuation)

    def failures(self) -> list[int]:
        return [
            i
            for i, (a, b) in enumerate(zip(self.odd_sum, self.valuation))
            if a is False or b is False
        ]


def parity_check_height_zero(
    d: DecompositionColumn, heights: Sequence[int]
) -> ParityReport:
    """Height-zero rows have odd coefficient sums; on rational columns the
    2-adic valuation of each entry equals the height of its character."""
    if len(heights) != len(d.entries):
        raise ValueError("heights are not aligned with the column entries")
    odd_sum: list[bool | None] = []
    valuation: list[bool | None] = []
    for e, h in zip(d.entries, heights):
        odd_sum.append(sum(e.coeffs) % 2 == 1 if h == 0 else None)
        if d.k <= 1:
            valuation.append(two_adic_valuation(int(e)) == h)
        else:
            valuation.append(None)
    return ParityReport(odd_sum, valuation)


@dataclass
class SymmetryReport:
    violations: list[int]
    middle_index: int
    middle_zero: bool

    @property
    def ok(self) -> bool:
        return not self.violations and self.middle_zero


def symmetry_zero_check(a_cols: Sequence[Sequence[int]], n: int) -> SymmetryReport:
    """For u of order 2^(n-1) with d(u) = d(u^-1): check a_j = a_{-j} = -a_{2^(n-2)-j}
    and that the middle column a_{2^(n-3)} vanishes."""
    if n < 3:
        raise ValueError("n must be >= 3")
    size = 1 << (n - 2)
    if len(a_cols) != size:
        raise ValueError(f"expected {size} integer columns for an element of order 2^{n-1}")
    bad = []
    for j in range(size):
        aj, aneg, aflip = a_index(a_cols, j), a_index(a_cols, -j), a_index(a_cols, size - j)
        if aj != aneg or aneg != tuple(-c for c in aflip):
            bad.append(j)
    mid = size // 2
    return SymmetryReport(bad, mid, not any(a_index(a_cols, mid)))


def norm_a0(
    columns: Mapping[int, Sequence[Cyc]], ctx: GaloisContext, n: int, m: int
) -> int:
    """(a_0, a_0) for the element x of order 2^(n-1), recovered by traces.

    ``columns`` maps odd gamma mod 2^(n-1) to d(x^gamma). The orthogonality
    pattern is verified first: columns of x^gamma and x^delta have inner product
    2^(n-1+m) when gamma = +-delta mod 2^(n-1) and 0 otherwise.
    """
    k = n - 1
    modulus = 2**k
    expected_self = 2 ** (n - 1 + m)
    gammas = list(range(1, modulus, 2))
    for g in gammas:
        for h in gammas:
            ip = inner_product(_lookup(columns, g, k, ctx.a), _lookup(columns, h, k, ctx.a))
            conj = (g - h) % modulus == 0 or (g + h) % modulus == 0
            want = expected_self if conj else 0
            if ip != want:
                raise InconsistentColumns(
                    f"(d(x^{g}), d(x^{h})) = {ip}, expected {want}"
                )
    a0 = trace_recover(columns, ctx, 0, k=k)
    return sum(c * c for c in a0)
