from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import DEFAULT_CORPUS, SMALL_CORPUS
from extauto import perms
from extauto.autos import aut_group
from extauto.cohomology import center_module, h1, h2, z1
from extauto.compat import (
    SPair,
    act,
    aut_phi,
    compatibility_group,
    counting_check,
    decompose_sbar,
    fiber_classes,
    fiber_label,
    fiber_orbits,
    lambda_class,
    lambda_map,
    mu,
    normal_series,
    orbit_and_stabilizer,
    relative_automorphisms,
    res,
    solvability_report,
    stabilizer,
    theta_g,
    theta_star,
    verify_basic_sequence,
    verify_cycle_sequence,
)
from extauto.constructors import elem_abelian, symmetric
from extauto.corpus_io import example, identify_group
from extauto.errors import NotACocycle, NotRelative
from extauto.extensions import are_equivalent, extends, factor_system, make_extension, outer_action
from extauto.groups import is_isomorphic, whole

# everything in the default catalog has |G| <= 50
COUNTING_CORPUS = [n for n in DEFAULT_CORPUS if example(n).G.order <= 50]


def ident_pair(E):
    return SPair(tuple(range(E.H.order)), tuple(range(E.Q.order)))


def test_s_examples(corpus):
    S = compatibility_group(corpus["d4_center"])
    assert S.order == 6
    assert is_isomorphic(S.group_view, symmetric(3)) is not None
    assert compatibility_group(corpus["s3_a3"]).order == 2
    # trivial outer action on an abelian kernel: S is the full product
    E = corpus["z2cube_split"]
    assert compatibility_group(E).order == aut_group(E.h_group).order * aut_group(E.Q).order


def test_s_orders_over_corpus(corpus):
    orders = {n: compatibility_group(corpus[n]).order for n in DEFAULT_CORPUS}
    assert orders["q8_center"] == 6 and orders["z4_z2"] == 1
    assert orders["d4_over_z2"] == 8 and orders["q8_over_z2"] == 24
    assert orders["metacyclic21"] == 6 and orders["gdh50"] == 480


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_s_closed_and_pairs_compatible(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    oa = outer_action(E)
    out = oa.target
    for p in S.pairs:
        c = out.class_of(p.alpha)
        assert all(oa.classes[p.beta[q]] == out.conj(c, oa.classes[q]) for q in range(E.Q.order))
    for i in range(S.order):
        assert S.mul(i, S.inv(i)) == 0
        for g in S.generators:
            assert S.pairs[i] * S.pairs[g] in S.index


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_b_normal_with_witnesses(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    G = E.G
    by_pair = {theta_g(E, g): g for g in range(G.order)}
    assert {S.index[p] for p in by_pair} == set(S.b_subgroup)
    # theta theta_g theta^-1 = theta_{g'} for some g'
    for th in S.pairs:
        for g in G.generators:
            conj = th * theta_g(E, g) * th.inverse()
            assert conj in by_pair


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_inner_pairs_are_h_mod_center(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    zh = center_module(E).M.order
    assert len(S.innh_subgroup) * zh == E.H.order
    assert set(S.innh_subgroup) <= set(S.b_subgroup)
    assert S.is_normal(S.innh_subgroup)


# ---------------------------------------------------------------------------
# action and lambda


def test_identity_pair_fixes_class(corpus):
    E = corpus["d4_center"]
    fs = factor_system(E)
    assert are_equivalent(act(ident_pair(E), fs), fs)
    assert lambda_class(E, ident_pair(E)) == 0


@pytest.mark.parametrize("name", ["d4_center", "q8_center", "z2cube_split", "q8_over_z2", "metacyclic21"])
@given(data=st.data())
def test_right_action_law(name, corpus, data):
    E = corpus[name]
    S = compatibility_group(E)
    fib = fiber_classes(E)
    fs = data.draw(st.sampled_from(fib))
    t1, t2 = data.draw(st.sampled_from(S.pairs)), data.draw(st.sampled_from(S.pairs))
    assert are_equivalent(act(t2, act(t1, fs)), act(t1 * t2, fs))


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_b_acts_trivially_on_orbit(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    orbit = next(o for o in fiber_orbits(E) if 0 in o)
    classes = fiber_classes(E)
    for label in orbit:
        fs = classes[label]
        for g in E.G.generators:
            assert fiber_label(E, act(theta_g(E, g), fs)) == label


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_lambda_derivation_law(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    lam = lambda_map(E)
    H2 = h2(center_module(E))
    stars = [theta_star(E, th) for th in S.pairs]
    for i in range(S.order):
        for j in range(S.order):
            assert lam[S.mul(i, j)] == H2.add(stars[j][lam[i]], lam[j])


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_lambda_constant_on_b_cosets(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    lam = lambda_map(E)
    for i in range(S.order):
        for b in S.b_subgroup:
            assert lam[S.mul(b, i)] == lam[i] == lam[S.mul(i, b)]


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_extends_stabilizer_and_kernel_agree(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    stab = set(stabilizer(E))
    ker = {i for i, v in enumerate(lambda_map(E)) if v == 0}
    ext = {i for i, th in enumerate(S.pairs) if extends(E, th.alpha, th.beta)}
    assert ext == stab == ker
    image = {S.index[res(g, E)] for g in relative_automorphisms(E)}
    assert image == stab


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_orbit_stabilizer(name, corpus):
    E = corpus[name]
    S = compatibility_group(E)
    r = orbit_and_stabilizer(E)
    assert len(r.orbit) * len(r.stabilizer) == S.order
    assert r.shat_orbit_size * r.shat_stabilizer_size == S.shat.order
    assert r.shat_orbit_size == len(r.orbit)
    assert sum(len(o) for o in fiber_orbits(E)) == h2(center_module(E)).order


def test_v4_fibre_orbits(corpus):
    E = corpus["d4_center"]
    orbits = fiber_orbits(E)
    assert sorted(len(o) for o in orbits) == [1, 1, 3, 3]
    classes = fiber_classes(E)
    names = {}
    for o in orbits:
        kinds = {identify_group(make_from(classes[i])) for i in o}
        assert len(kinds) == 1
        names[kinds.pop()] = len(o)
    assert names == {
        "elem_abelian(2,3)": 1,
        "quaternion(8)": 1,
        "dihedral(8)": 3,
        "direct_product(cyclic(4),cyclic(2))": 3,
    }
    assert len(stabilizer(E)) == 2
    assert len(stabilizer(corpus["q8_center"])) == 6


def make_from(fs):
    from extauto.extensions import realize

    return realize(fs).G


def test_trivial_s_has_singleton_orbit(corpus):
    E = corpus["z4_z2"]
    assert compatibility_group(E).order == 1
    assert orbit_and_stabilizer(E).orbit == (0,)


# ---------------------------------------------------------------------------
# res and mu


def test_res_and_mu_identities(corpus):
    E = corpus["d4_center"]
    assert res(tuple(range(8)), E) == ident_pair(E)
    assert mu((0,) * 4, E) == tuple(range(8))
    # one nonzero value on V4 breaks additivity
    with pytest.raises(NotACocycle):
        mu((0, 1, 0, 0), E)


def test_res_rejects_non_relative(corpus):
    E = corpus["z2cube_split"]
    A = aut_group(E.G).elements
    bad = next(a for a in A if any(a[h] not in E.H for h in E.H.members))
    with pytest.raises(NotRelative):
        res(bad, E)


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_mu_image_is_kernel_of_res(name, corpus):
    E = corpus[name]
    mod = center_module(E)
    Z1 = z1(mod)
    images = {mu(s, E) for s in Z1}
    assert len(images) == len(Z1)
    ident = ident_pair(E)
    kernel = {a for a in relative_automorphisms(E) if res(a, E) == ident}
    assert images == kernel


def test_mu_image_in_d4(corpus):
    E = corpus["d4_center"]
    assert len(z1(center_module(E))) == 4


@pytest.mark.parametrize("name", SMALL_CORPUS)
def test_res_is_homomorphism(name, corpus):
    E = corpus[name]
    A = relative_automorphisms(E)
    for a in A:
        for b in A[:8]:
            assert res(perms.compose(a, b), E) == res(a, E) * res(b, E)


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_relative_aut_matches_oracle(name, corpus):
    E = corpus[name]
    table = [list(r) for r in E.G.table]
    assert sorted(relative_automorphisms(E)) == oracles.relative_automorphisms(table, E.H.members)


# ---------------------------------------------------------------------------
# sequences


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_cycle_sequence(name, corpus):
    rep = verify_cycle_sequence(corpus[name])
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_basic_sequence(name, corpus):
    rep = verify_basic_sequence(corpus[name])
    assert rep.ok, rep.failures()


def test_sequence_orders(corpus):
    rep = verify_cycle_sequence(corpus["d4_center"])
    assert dict(rep.terms)["Aut(G,H)"] == 8
    assert dict(verify_cycle_sequence(corpus["q8_center"]).terms)["Aut(G,H)"] == 24
    basic = verify_basic_sequence(corpus["d4_center"])
    assert dict(basic.terms)["Out(G,H)"] == 2


def test_trivial_extension_sequences():
    G = symmetric(3)
    E = make_extension(G, whole(G))
    assert verify_cycle_sequence(E).ok
    assert verify_basic_sequence(E).ok
    assert normal_series(E).ok
    assert counting_check(E).ok


def test_centric_basic_sequence(corpus):
    rep = verify_basic_sequence(corpus["s3_a3"])
    assert rep.values["centric"] is True
    assert rep.checks["centric: Hbar1 = H1"] is True


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_decompose_sbar(name, corpus):
    E = corpus[name]
    rep = decompose_sbar(E)
    assert rep.ok, rep.failures()
    if rep.values["centric"]:
        assert rep.values["|ker pbar|"] == 1


def test_decompose_examples(corpus):
    E = corpus["s3_a3"]
    assert aut_phi(E) == [(0, 1)]
    d4 = decompose_sbar(corpus["d4_center"])
    assert d4.values["|N/Phi Q|"] == 1
    z2 = decompose_sbar(corpus["z2cube_split"])
    assert z2.values["|image pbar|"] == z2.values["|N/Phi Q|"]


@pytest.mark.parametrize("name", COUNTING_CORPUS)
def test_counting_formula(name, corpus):
    rep = counting_check(corpus[name])
    assert rep.ok, rep.failures()


def test_counting_values(corpus):
    got = {n: int(counting_check(corpus[n]).values["formula"]) for n in ["d4_center", "q8_center", "s3_a3", "z4_z2"]}
    # brute-force relative automorphism counts from the oracle
    assert got == {"d4_center": 8, "q8_center": 24, "s3_a3": 6, "z4_z2": 2}


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_normal_series(name, corpus):
    rep = normal_series(corpus[name])
    assert rep.ok, rep.failures()


def test_normal_series_values(corpus):
    assert normal_series(corpus["d4_center"]).values["quotient orders"] == [1, 4, 2]
    assert normal_series(corpus["q8_center"]).values["quotient orders"] == [1, 4, 6]


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_solvability_report(name, corpus):
    E = corpus[name]
    rep = solvability_report(E)
    assert rep.ok, rep.failures()
    conds = [rep.values[k] for k in sorted(k for k in rep.values if k.startswith("condition "))]
    if all(c is True for c in conds):
        assert rep.values["Aut(G,H) solvable"] is True


def test_solvability_examples(corpus):
    rep = solvability_report(corpus["d4_center"])
    assert [rep.values[k] for k in sorted(k for k in rep.values if k.startswith("condition "))] == [True] * 4
    rep = solvability_report(corpus["z2cube_split"])
    assert rep.values["condition 2 (H characteristic)"] is False
    assert rep.values["|Aut G|"] == 168 and rep.values["Aut G solvable"] is False
    rep = solvability_report(corpus["z2cube_x_z3"])
    assert rep.values["condition 3 (normalizer solvable)"] is False
    assert rep.values["Aut G solvable"] is False


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_s_solvability_both_directions(name, corpus):
    rep = solvability_report(corpus[name])
    assert rep.checks.get("S solvable when H, Aut_Phi Q, N are", True) is True
    assert rep.checks.get("S solvable forces H, Aut_Phi Q, C solvable", True) is True


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_centric_degenerations(name, corpus):
    E = corpus[name]
    oa = outer_action(E)
    rep = decompose_sbar(E)
    assert rep.values["centric"] == oa.is_injective()
    if oa.is_injective():
        assert aut_phi(E) == [tuple(range(E.Q.order))]
        basic = verify_basic_sequence(E)
        assert dict(basic.terms)["Hbar1(Q,zH)"] == h1(center_module(E)).order
