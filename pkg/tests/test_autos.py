from __future__ import annotations

import pytest

import oracles
from extauto import perms
from extauto.autos import aut_group, inn_quotient_iso, inner_automorphism, out_group, relative_aut
from extauto.constructors import cyclic, dihedral, elem_abelian, quaternion, standard_group, symmetric
from extauto.groups import Group, center, is_isomorphic, subgroup_generated, whole
from test_groups import NAMED_UP_TO_24, SMALL


def test_aut_examples():
    assert aut_group(cyclic(2)).order == 1
    V4 = aut_group(elem_abelian(2, 2))
    assert V4.order == 6
    assert is_isomorphic(V4.group_view, symmetric(3)) is not None
    assert aut_group(elem_abelian(2, 3)).order == 168


def test_aut_q8_is_s4():
    A = aut_group(quaternion(8))
    assert is_isomorphic(A.group_view, symmetric(4)) is not None


def test_out_examples():
    assert out_group(aut_group(dihedral(8))).order == 2
    assert out_group(aut_group(symmetric(3))).order == 1
    Z4 = cyclic(4)
    A = aut_group(Z4)
    assert out_group(A).order == A.order


def test_relative_aut_examples():
    D4 = dihedral(8)
    assert len(relative_aut(D4, whole(D4))) == aut_group(D4).order
    assert len(relative_aut(D4, center(D4))) == 8
    G = elem_abelian(2, 3)
    assert len(relative_aut(G, subgroup_generated(G, [1]))) == 24


@pytest.mark.parametrize("spec", SMALL)
def test_aut_matches_oracle(spec):
    G = standard_group(spec)
    assert list(aut_group(G).elements) == oracles.automorphisms([list(r) for r in G.table])


@pytest.mark.parametrize("spec", NAMED_UP_TO_24)
def test_aut_equals_inn_times_out(spec):
    A = aut_group(standard_group(spec))
    assert A.order == len(A.inner) * out_group(A).order


@pytest.mark.parametrize("spec", NAMED_UP_TO_24)
def test_inn_is_quotient_by_center(spec):
    G = standard_group(spec)
    A = aut_group(G)
    Q, proj, images = inn_quotient_iso(G, A)
    # injective, onto Inn G and multiplicative
    assert len(set(images)) == Q.order == len(A.inner)
    assert set(images) == set(A.inner)
    for a in range(Q.order):
        for b in Q.generators:
            assert images[Q.table[a][b]] == A.mul(images[a], images[b])


@pytest.mark.parametrize("spec", ["dihedral(8)", "quaternion(8)", "elem_abelian(2,3)", "symmetric(4)"])
def test_relative_aut_is_a_subgroup(spec):
    G = standard_group(spec)
    for H in {subgroup_generated(G, [x]).members for x in range(G.order)}:
        sub = relative_aut(G, subgroup_generated(G, H))
        members = set(sub)
        assert tuple(range(G.order)) in members
        for a in sub:
            assert perms.inverse(a) in members
            for b in sub[:6]:
                assert perms.compose(a, b) in members


def test_aut_group_deterministic():
    G1 = standard_group("direct_product(dihedral(8),cyclic(2))")
    G2 = standard_group("direct_product(dihedral(8),cyclic(2))")
    assert aut_group(G1).elements == aut_group(G2).elements


def test_inner_automorphism_is_conjugation():
    G = symmetric(3)
    for g in range(G.order):
        c = inner_automorphism(G, g)
        assert all(c[x] == G.conj(g, x) for x in range(G.order))


def test_group_view_composition_order():
    A = aut_group(symmetric(3))
    view: Group = A.group_view
    for i in range(A.order):
        for j in range(A.order):
            assert A.elements[view.table[i][j]] == perms.compose(A.elements[i], A.elements[j])
