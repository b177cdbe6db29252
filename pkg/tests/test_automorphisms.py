"""Automorphism groups against brute force over permutations, and the order-3 maps."""
from itertools import permutations

import pytest

from dihedral_blocks.automorphisms import (
    Automorphism,
    FixChoice,
    automorphism_group,
    order3_automorphism,
    q_subgroup,
    verify_aut_two_group,
)
from dihedral_blocks.group import CapExceeded, Element, ParameterError, Params, mul
from dihedral_blocks.subgroups import closure, omega_and_frattini, whole_group

from conftest import grid


def brute_force_aut_count(Q, p):
    els = list(Q.elements)
    ident = Element(0, 0, 0)
    rest = [g for g in els if g != ident]
    count = 0
    for perm in permutations(rest):
        f = dict(zip(rest, perm))
        f[ident] = ident
        if all(f[mul(a, b, p)] == mul(f[a], f[b], p) for a in els for b in els):
            count += 1
    return count


def test_aut_d8_brute_force():
    p = Params(3, 0)
    D = whole_group(p)
    assert len(automorphism_group(D, p)) == brute_force_aut_count(D, p) == 8


def test_aut_elementary_abelian_rank3():
    p = Params(3, 1)
    Q = q_subgroup(1, p)
    assert len(automorphism_group(Q, p)) == brute_force_aut_count(Q, p) == 168


def test_aut_klein_four():
    p = Params(3, 0)
    V = closure([Element(2, 0, 0), Element(0, 1, 0)], p)
    assert len(automorphism_group(V, p)) == 6


@pytest.mark.parametrize("n,m", [(3, 1), (4, 0), (3, 2)])
def test_every_automorphism_is_valid(n, m):
    p = Params(n, m)
    D = whole_group(p)
    auts = automorphism_group(D, p, cap=p.order)
    assert len(set(auts)) == len(auts)
    omega, phi = omega_and_frattini(D, p)
    for a in auts:
        assert a.is_automorphism()
        assert a.maps_onto(omega) and a.maps_onto(phi)


@pytest.mark.parametrize("n,m", grid(64))
def test_aut_two_group_small(n, m):
    ok, size = verify_aut_two_group(Params(n, m))
    assert ok, size


def test_aut_known_orders():
    assert verify_aut_two_group(Params(3, 0)) == (True, 8)
    assert verify_aut_two_group(Params(3, 1)) == (True, 64)
    assert verify_aut_two_group(Params(4, 1))[0]


def test_aut_cap():
    p = Params(4, 3)
    with pytest.raises(CapExceeded):
        automorphism_group(whole_group(p), p)


@pytest.mark.parametrize("n,m", grid(256))
@pytest.mark.parametrize("which", [1, 2])
def test_order3_automorphism(n, m, which):
    p = Params(n, m)
    u = Element(2 ** (n - 2), 0, 0)
    t = Element(0, 1, 0) if which == 1 else Element(1, 1, 0)
    choices = ["z", "uz"] if m else ["z"]
    # beta = conjugation by x^(2^(n-3)) normalizes Q and inverts alpha
    beta = Automorphism.conjugation(Element(2 ** (n - 3), 0, 0), q_subgroup(which, p))
    for choice in choices:
        alpha = order3_automorphism(which, choice, p)
        assert alpha.is_automorphism()
        assert alpha.order() == 3
        assert alpha(u) == t and alpha(t) == mul(u, t, p)
        fixed = alpha.fixed_points()
        assert fixed.order == 2**m
        gen = Element(0, 0, 1 % p.z_order) if choice == "z" else Element(u.i, 0, 1 % p.z_order)
        assert fixed == closure([gen], p)
        assert beta * alpha * beta.inverse() == alpha.inverse()


def test_order3_examples():
    p = Params(3, 1)
    a = order3_automorphism(1, "z", p)
    assert a(Element(2, 0, 0)) == Element(0, 1, 0)
    assert a(Element(0, 1, 0)) == Element(2, 1, 0)
    assert a(Element(0, 0, 1)) == Element(0, 0, 1)
    assert set(a.fixed_points().elements) == {Element(0, 0, 0), Element(0, 0, 1)}
    b = order3_automorphism(2, FixChoice.UZ, p)
    assert set(b.fixed_points().elements) == {Element(0, 0, 0), Element(2, 0, 1)}


def test_order3_errors():
    with pytest.raises(ParameterError):
        order3_automorphism(1, "uz", Params(4, 0))
    with pytest.raises(ParameterError):
        order3_automorphism(1, "w", Params(4, 1))
    with pytest.raises(ParameterError):
        order3_automorphism(3, "z", Params(4, 1))
