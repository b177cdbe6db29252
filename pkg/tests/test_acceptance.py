"""Acceptance criteria, one test per criterion; every comparison is exact.

Each test prints a PASS/FAIL line, and the session ends with a summary.
"""
import random

import pytest

from dihedral_blocks.automorphisms import automorphism_group, q_subgroup, verify_aut_two_group
from dihedral_blocks.characters import char_table, column_orthogonality_ok, row_orthogonality_ok
from dihedral_blocks.conjectures import alperin_weight_count, gluing_check, owc_check, owc_terms, owc_weight
from dihedral_blocks.cyclotomic import (
    DecompositionColumn,
    GaloisContext,
    a_index,
    column_decompose,
    galois_expand,
    norm_a0,
    parity_check_height_zero,
    symmetry_zero_check,
    trace_recover,
    two_adic_valuation,
)
from dihedral_blocks.fusion import (
    FusionSystem,
    canonical_representatives,
    choice_vectors,
    element_fusion_classes,
    essential_classes,
    fusion_class_count_formula,
    subsection_representatives,
)
from dihedral_blocks.group import Element, Params, conjugacy_classes, derived_subgroup
from dihedral_blocks.invariants import block_invariants, closed_form, k_minus_l, solve_height_distribution
from dihedral_blocks.subgroups import d_class_of_subgroup, omega_and_frattini

from conftest import CASES, grid

GRID_512 = grid(512, n_range=range(3, 7), m_range=range(0, 4))
GRID_256 = grid(256)
GRID_128 = grid(128)
EXPECTED_L = {"aa": 3, "ab": 2, "ba": 2, "bb": 1}


@pytest.mark.acceptance(1, "invariant formulas k, k0, k1, l for n in 3..6, m in 0..3, |D| <= 512, all cases")
def test_invariant_formulas():
    for n, m in GRID_512:
        p = Params(n, m)
        for case in CASES:
            inv = block_invariants(FusionSystem(p, case))
            assert (inv.k, inv.k0, inv.k1, inv.l) == (
                2**m * (2 ** (n - 2) + 3),
                2 ** (m + 2),
                2**m * (2 ** (n - 2) - 1),
                EXPECTED_L[case],
            ), (n, m, case)


@pytest.mark.acceptance(2, "brute-force class count of D equals 2^m(2^(n-2)+3) for |D| <= 256")
def test_class_count():
    for n, m in GRID_256:
        assert len(conjugacy_classes(Params(n, m))) == 2**m * (2 ** (n - 2) + 3), (n, m)


@pytest.mark.acceptance(3, "|Aut(D)| is a power of 2 for |D| <= 128; |Aut(C2^3)| = 168")
def test_aut_two_group():
    for n, m in GRID_128:
        ok, size = verify_aut_two_group(Params(n, m))
        assert ok, (n, m, size)
    p = Params(3, 2)
    omega, _ = omega_and_frattini(q_subgroup(1, p), p)
    assert len(automorphism_group(omega, p)) == 168


@pytest.mark.acceptance(4, "essential candidates are exactly the distinct D-classes of Q1 and Q2, |D| <= 256")
def test_essential_candidates():
    for n, m in GRID_256:
        p = Params(n, m)
        want = [frozenset(d_class_of_subgroup(q_subgroup(w, p), p)) for w in (1, 2)]
        assert want[0] != want[1]
        for case in CASES:
            got = {frozenset(c) for c in essential_classes(FusionSystem(p, case))}
            assert got == set(want), (n, m, case)


@pytest.mark.acceptance(5, "fusion class counts per case, literal representative lists, choice independence")
def test_fusion_classes():
    for n, m in GRID_256:
        p = Params(n, m)
        for case in CASES:
            canonical = FusionSystem(p, case)
            assert subsection_representatives(canonical) == canonical_representatives(canonical)
            for f1, f2 in choice_vectors(p):
                fs = FusionSystem(p, case, f1, f2)
                assert len(element_fusion_classes(fs)) == fusion_class_count_formula(p, case), (n, m, case, f1, f2)


@pytest.mark.acceptance(6, "k - l = 2^m(2^(n-2)+3) - l(case) for m in 1..3, all cases and choice vectors")
def test_k_minus_l():
    for n, m in GRID_512:
        if m == 0:
            continue
        p = Params(n, m)
        for case in CASES:
            want = closed_form(p, case)
            for f1, f2 in choice_vectors(p):
                assert k_minus_l(FusionSystem(p, case, f1, f2)) == want["k"] - want["l"], (n, m, case, f1, f2)


@pytest.mark.acceptance(7, "solver: two solutions for aa (3,1) with l in [1,3], unique with l >= 2, unique for ab")
def test_solver():
    sols = solve_height_distribution(7, 1, 3, 16, 8)
    assert [(s.l, s.k0, s.entries()) for s in sols] == [
        (1, 8, [1] * 7 + [9]),
        (3, 8, [1] * 8 + [4, 4]),
    ]
    [unique] = solve_height_distribution(7, 2, 3, 16, 8)
    assert (unique.l, unique.k, unique.k0, unique.k1) == (3, 10, 8, 2)
    [ab] = solve_height_distribution(8, 1, 3, 16, 8)
    assert (ab.l, ab.k, ab.k0, ab.k1) == (2, 10, 8, 2)


@pytest.mark.acceptance(8, "k0 = |D:D'| = 2^(m+2) with D' from commutator closure")
def test_olsson_equality():
    for n, m in GRID_512:
        p = Params(n, m)
        index = p.order // derived_subgroup(p).order
        for case in CASES:
            assert block_invariants(FusionSystem(p, case)).k0 == index == 2 ** (m + 2)


@pytest.mark.acceptance(9, "character table suite: orthogonality, degrees, heights, parity, norm_a0, symmetry")
def test_character_suite():
    for n, m in GRID_256:
        p = Params(n, m)
        tab = char_table(p)
        assert row_orthogonality_ok(tab) and column_orthogonality_ok(tab)
        assert sum(d * d for d in tab.degrees) == p.order
        assert tab.heights.count(0) == 2 ** (m + 2)
        assert tab.heights.count(1) == 2**m * (2 ** (n - 2) - 1)
        # central involution: rational column, 2-adic valuation = height
        d_u = tab.decomposition_column(Element(2 ** (n - 2), 0, 0))
        assert [two_adic_valuation(int(e)) for e in d_u.entries] == tab.heights
        assert parity_check_height_zero(d_u, tab.heights).ok
        # d(x): odd coefficient sums on height zero
        d_x = tab.decomposition_column(Element(1, 0, 0))
        report = parity_check_height_zero(d_x, tab.heights)
        assert report.ok and all(report.odd_sum[i] for i, h in enumerate(tab.heights) if h == 0)
        columns = {g: tab.column(Element(g, 0, 0)) for g in range(1, p.x_order, 2)}
        assert norm_a0(columns, GaloisContext(n + m), n, m) == 2 ** (m + 2)
        sym = symmetry_zero_check(column_decompose(d_x), n)
        assert sym.ok and sym.middle_index == 2 ** (n - 3)


@pytest.mark.acceptance(10, "cyclotomic round trips on 1000 random instances per level k <= 5, a <= 7")
def test_cyclotomic_round_trips():
    rng = random.Random(20240607)
    for k in range(1, 6):
        size = 2 ** (k - 1)
        for _ in range(1000):
            width = rng.randint(1, 4)
            cols = [tuple(rng.randint(-9, 9) for _ in range(width)) for _ in range(size)]
            expanded = galois_expand(cols, 1)
            assert column_decompose(DecompositionColumn(expanded, k)) == cols
            a = rng.randint(k, 7)
            ctx = GaloisContext(a)
            # the action on zeta_{2^k} only sees gamma mod 2^k
            columns = {g: galois_expand(cols, g) for g in range(1, 2 * size, 2)}
            s = rng.randint(-3 * size, 3 * size)
            assert trace_recover(columns, ctx, s, k=k) == a_index(cols, s)


@pytest.mark.acceptance(11, "Alperin weight count equals l(B) on the grid")
def test_alperin_weights():
    for n, m in GRID_512:
        p = Params(n, m)
        for case in CASES:
            fs = FusionSystem(p, case)
            assert alperin_weight_count(fs) == block_invariants(fs).l == EXPECTED_L[case]


@pytest.mark.acceptance(12, "OWC: w(Qi,d) = 0 with chain terms +2^m, -2^m; sum of weights = k^d(B)")
def test_ordinary_weights():
    for n, m in GRID_256:
        p = Params(n, m)
        for f1, f2 in choice_vectors(p):
            fs = FusionSystem(p, "aa", f1, f2)
            for which in (1, 2):
                Q = q_subgroup(which, p)
                assert [t.contribution for t in owc_terms(fs, Q, m + 2)] == [2**m, -(2**m)]
                assert all(owc_weight(fs, Q, d) == 0 for d in range(n + m + 1))
        for case in CASES:
            assert owc_check(FusionSystem(p, case)).ok, (n, m, case)


@pytest.mark.acceptance(13, "gluing: every F-centric chain class classified and vanishing, |D| <= 128")
def test_gluing():
    for n, m in GRID_128:
        p = Params(n, m)
        for case in CASES:
            report = gluing_check(FusionSystem(p, case))
            assert report.verdict == "unique solution", (n, m, case)
            assert all(c.kind in ("a", "b", "c") and c.vanishes for c in report.classes)
