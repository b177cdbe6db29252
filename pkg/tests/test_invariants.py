"""k - l recursion, the height solver against a brute-force oracle, final invariants."""
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from dihedral_blocks.fusion import FusionCase, FusionSystem, choice_vectors
from dihedral_blocks.group import Params
from dihedral_blocks.invariants import (
    BlockInvariants,
    block_invariants,
    closed_form,
    conjecture_flags,
    k_minus_l,
    k_minus_l_terms,
    l_lower_bound,
    l_upper_bound,
    solve_height_distribution,
)

from conftest import CASES, grid


def height_of(value):
    h = 0
    while value % 4 == 0:
        value //= 4
        h += 1
    return h


def oracle(S, l_min, l_max, target, cap):
    """Plain enumeration of multisets of admissible values, no pruning."""
    values = sorted(
        {4**h * o * o for h in range(target.bit_length()) for o in range(1, target + 1, 2) if 4**h * o * o <= target}
    )
    out = set()
    for l in range(l_min, l_max + 1):
        k = S + l
        for combo in combinations_with_replacement(values, k):
            if sum(combo) != target:
                continue
            k0 = sum(1 for v in combo if height_of(v) == 0)
            if k0 <= cap:
                out.add((l, k0, combo))
    return out


def as_set(solutions):
    return {(s.l, s.k0, tuple(s.entries())) for s in solutions}


def test_solver_aa_two_solutions():
    sols = solve_height_distribution(7, 1, 3, 16, 8)
    assert as_set(sols) == {(1, 8, (1,) * 7 + (9,)), (3, 8, (1,) * 8 + (4, 4))}
    assert as_set(sols) == oracle(7, 1, 3, 16, 8)
    [only] = solve_height_distribution(7, 2, 3, 16, 8)
    assert (only.l, only.k, only.k0, only.k1) == (3, 10, 8, 2)


def test_solver_ab_unique():
    [only] = solve_height_distribution(8, 1, 3, 16, 8)
    assert (only.l, only.k, only.k0, only.k1) == (2, 10, 8, 2)
    assert oracle(8, 1, 3, 16, 8) == as_set([only])


@settings(max_examples=60, deadline=None)
@given(
    S=st.integers(1, 9),
    l_min=st.integers(1, 2),
    span=st.integers(0, 2),
    target=st.sampled_from([8, 16, 32]),
    cap=st.sampled_from([2, 4, 8]),
)
def test_solver_matches_oracle(S, l_min, span, target, cap):
    got = solve_height_distribution(S, l_min, l_min + span, target, cap)
    assert as_set(got) == oracle(S, l_min, l_min + span, target, cap)
    for s in got:
        assert s.total() == target and s.k == s.l + S and s.k0 <= cap


def test_solver_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_height_distribution(0, 1, 3, 16, 8)
    assert solve_height_distribution(7, 4, 4, 16, 8) == []


@pytest.mark.parametrize("n,m", grid(512, n_range=range(3, 7), m_range=range(0, 4)))
def test_upper_bound_is_case_value(n, m):
    for case in ("aa", "ab"):
        want = closed_form(Params(n, m), case)
        S = want["k"] - want["l"]
        assert l_upper_bound(S, 2 ** (n + m), 2 ** (m + 2)) == want["l"]


def test_k_minus_l_examples():
    assert k_minus_l(FusionSystem(Params(3, 1), "aa")) == 7
    assert k_minus_l(FusionSystem(Params(3, 1), "ab")) == 8
    p = Params(4, 2)
    assert {k_minus_l(FusionSystem(p, "aa", a, b)) for a, b in choice_vectors(p)} == {25}


def test_k_minus_l_terms():
    rows = k_minus_l_terms(FusionSystem(Params(3, 1), "aa"))
    assert sum(r[2] for r in rows) == 7
    kinds = {r[1] for r in rows}
    assert kinds == {"nonmajor", "U", "V", "W"}
    assert ("z", "V", 3) in rows


@pytest.mark.parametrize("n,m", grid(512, n_range=range(3, 6), m_range=range(1, 4)))
@pytest.mark.parametrize("case", CASES)
def test_k_minus_l_choice_invariant(n, m, case):
    p = Params(n, m)
    want = closed_form(p, case)
    values = {k_minus_l(FusionSystem(p, case, a, b)) for a, b in choice_vectors(p)}
    assert values == {want["k"] - want["l"]}


def test_l_lower_bound():
    assert l_lower_bound(FusionSystem(Params(3, 2), "aa")) == 3
    assert l_lower_bound(FusionSystem(Params(3, 1), "aa")) == 2
    assert l_lower_bound(FusionSystem(Params(3, 0), "aa")) == 3
    for m in (0, 1, 2):
        assert l_lower_bound(FusionSystem(Params(3, m), "ab")) == 1
        assert l_lower_bound(FusionSystem(Params(3, m), "bb")) == 1


@pytest.mark.parametrize(
    "n,m,case,want",
    [(3, 1, "aa", (10, 8, 2, 3)), (4, 0, "ab", (7, 4, 3, 2)), (5, 2, "bb", (44, 16, 28, 1))],
)
def test_block_invariants_examples(n, m, case, want):
    inv = block_invariants(FusionSystem(Params(n, m), case))
    assert (inv.k, inv.k0, inv.k1, inv.l) == want
    assert all(inv.flags.values())


@pytest.mark.parametrize("n,m", grid(512, n_range=range(3, 7), m_range=range(0, 4)))
def test_block_invariants_relations(n, m):
    p = Params(n, m)
    for case in CASES:
        inv = block_invariants(FusionSystem(p, case))
        assert inv.k0 + 4 * inv.k1 == p.order
        assert inv.k0 == 2 ** (m + 2)


def test_flags():
    flags = conjecture_flags(BlockInvariants(19, 4, 15, 1, FusionCase.BB), Params(6, 0))
    assert all(flags.values())
    bad = conjecture_flags(BlockInvariants(10, 16, 2, 3, FusionCase.AA), Params(3, 1))
    assert not bad["olsson"] and not bad["eaton_extremes"] and not bad["alperin_mckay"]
