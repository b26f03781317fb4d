from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import oracles
from extauto.constructors import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elem_abelian,
    metacyclic,
    quaternion,
    semidirect,
    standard_group,
    symmetric,
)
from extauto.errors import NotAGroup, NotNormal, OrderCapExceeded, UnsupportedSpec
from extauto.config import use_config
from extauto.groups import (
    center,
    centralizer,
    derived_length,
    derived_series,
    from_cayley_table,
    is_isomorphic,
    is_solvable,
    quotient,
    subgroup_generated,
    trivial_subgroup,
    whole,
)

NAMED_UP_TO_24 = [
    "cyclic(1)",
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "elem_abelian(2,2)",
    "cyclic(6)",
    "symmetric(3)",
    "cyclic(8)",
    "direct_product(cyclic(4),cyclic(2))",
    "elem_abelian(2,3)",
    "dihedral(8)",
    "quaternion(8)",
    "alternating(4)",
    "dihedral(12)",
    "quaternion(16)",
    "dihedral(16)",
    "elem_abelian(2,4)",
    "direct_product(dihedral(8),cyclic(2))",
    "metacyclic(7,3)",
    "symmetric(4)",
    "direct_product(elem_abelian(2,3),cyclic(3))",
]

SMALL = [s for s in NAMED_UP_TO_24 if standard_group(s).order <= 16]


def test_trivial_and_z2_tables():
    assert from_cayley_table([[0]]).order == 1
    assert from_cayley_table([[0, 1], [1, 0]]).order == 2


def test_identity_relabelled_to_zero():
    G = from_cayley_table([[1, 0], [0, 1]])
    assert G.table == ((0, 1), (1, 0))


def test_non_associative_latin_square_rejected():
    # Z/6 with the intercalate on rows/columns 1 and 4 switched: still a Latin square
    table = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    table[1][1], table[1][4] = table[1][4], table[1][1]
    table[4][4], table[4][1] = table[4][1], table[4][4]
    assert all(sorted(r) == list(range(6)) for r in table)
    assert all(sorted(c) == list(range(6)) for c in zip(*table))
    assert any(
        table[table[a][b]][c] != table[a][table[b][c]] for a in range(6) for b in range(6) for c in range(6)
    )
    with pytest.raises(NotAGroup):
        from_cayley_table(table)


def test_rejects_bad_rows():
    with pytest.raises(NotAGroup):
        from_cayley_table([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        from_cayley_table([[0, 1], [1]])


@pytest.mark.parametrize("spec", NAMED_UP_TO_24)
def test_constructed_groups_validate(spec):
    G = standard_group(spec)
    # rebuilding through the validator must succeed and give the same table
    assert from_cayley_table([list(r) for r in G.table]).table == G.table


def test_standard_examples():
    assert standard_group("cyclic(1)").order == 1
    D4 = standard_group("dihedral(8)")
    assert D4.order == 8 and center(D4).order == 2
    assert standard_group("metacyclic(7,3)").order == 21


def test_semidirect_descriptor():
    G = standard_group(
        {"kind": "semidirect", "N": "cyclic(7)", "K": "cyclic(3)", "action": [[0, 1, 2, 3, 4, 5, 6], [0, 2, 4, 6, 1, 3, 5], [0, 4, 1, 5, 2, 6, 3]]}
    )
    assert is_isomorphic(G, metacyclic(7, 3)) is not None


def test_unsupported_specs():
    with pytest.raises(UnsupportedSpec):
        standard_group("frobnicate(3)")
    with pytest.raises(UnsupportedSpec):
        metacyclic(7, 4)
    with pytest.raises(UnsupportedSpec):
        semidirect(cyclic(3), cyclic(2), [[0, 1, 2], [0, 1, 2], [0, 2, 1]])


def test_order_cap():
    with use_config(order_cap=10):
        with pytest.raises(OrderCapExceeded):
            cyclic(11)


def test_center_and_centralizer():
    S3 = symmetric(3)
    assert center(S3).order == 1
    G = dihedral(8)
    assert centralizer(G, trivial_subgroup(G)).order == G.order
    assert set(center(G).members) == oracles.center([list(r) for r in G.table])


@pytest.mark.parametrize("spec", SMALL)
def test_center_matches_oracle(spec):
    G = standard_group(spec)
    assert set(center(G).members) == oracles.center([list(r) for r in G.table])


def test_quotients():
    G = dihedral(8)
    Q, pi = quotient(G, trivial_subgroup(G))
    assert Q.order == G.order and pi.is_hom() and pi.is_bijective()
    Q, pi = quotient(G, center(G))
    assert is_isomorphic(Q, elem_abelian(2, 2)) is not None
    Q8 = quaternion(8)
    Q, _ = quotient(Q8, center(Q8))
    assert is_isomorphic(Q, elem_abelian(2, 2)) is not None


def test_quotient_needs_normal():
    S3 = symmetric(3)
    order2 = next(subgroup_generated(S3, [x]) for x in range(6) if S3.element_order(x) == 2)
    with pytest.raises(NotNormal):
        quotient(S3, order2)


@pytest.mark.parametrize("spec", NAMED_UP_TO_24)
def test_quotient_by_center_orders(spec):
    G = standard_group(spec)
    Z = center(G)
    Q, pi = quotient(G, Z)
    assert pi.is_hom()
    assert G.order == Z.order * Q.order
    assert pi.kernel().members == Z.members


def test_derived_series_examples():
    assert [s.order for s in derived_series(cyclic(6))] == [6, 1]
    A5 = alternating(5)
    assert [s.order for s in derived_series(A5)] == [60]
    assert not is_solvable(A5)
    assert is_solvable(symmetric(4)) and derived_length(symmetric(4)) == 3


@pytest.mark.parametrize("spec", SMALL)
def test_derived_series_matches_oracle(spec):
    G = standard_group(spec)
    assert [s.order for s in derived_series(G)] == oracles.derived_lengths([list(r) for r in G.table])


def test_isomorphism_examples():
    D4 = dihedral(8)
    hom = is_isomorphic(D4, D4)
    assert hom is not None and hom.is_hom() and hom.is_bijective()
    assert is_isomorphic(D4, quaternion(8)) is None


@pytest.mark.parametrize("spec", NAMED_UP_TO_24)
def test_isomorphism_reflexive(spec):
    G = standard_group(spec)
    assert is_isomorphic(G, G) is not None


@given(st.sampled_from(NAMED_UP_TO_24), st.sampled_from(NAMED_UP_TO_24))
def test_isomorphism_symmetric(a, b):
    G1, G2 = standard_group(a), standard_group(b)
    forward = is_isomorphic(G1, G2) is not None
    assert forward == (is_isomorphic(G2, G1) is not None)
    if G1.order <= 8:
        assert forward == oracles.isomorphic([list(r) for r in G1.table], [list(r) for r in G2.table])


@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_relabelled_table_is_isomorphic(spec, rnd):
    G = standard_group(spec)
    perm = list(range(1, G.order))
    rnd.shuffle(perm)
    perm = [0] + perm
    H = from_cayley_table(oracles.relabel([list(r) for r in G.table], perm))
    hom = is_isomorphic(G, H)
    assert hom is not None and hom.is_hom() and hom.is_bijective()


def test_direct_product_roles():
    G = direct_product(cyclic(4), cyclic(2))
    assert G.order == 8 and G.is_abelian
    assert whole(G).order == 8
