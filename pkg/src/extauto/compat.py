"""Compatible pairs, their action on extension classes, and the exact sequences.

S is the group of pairs (alpha, beta) in Aut(H) x Aut(Q) with
Phi(beta q) = [alpha] Phi(q) [alpha]^-1.  It acts on the right on the
extension classes with outer action Phi by E.theta = (alpha^-1)_* beta^* E.
Products are componentwise composition, so (E.theta).theta' = E.(theta theta').

Extension classes in the fibre are labelled by H^2(Q, zH) indices relative to
the extension's own factor system: label i means base . rep_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import perms
from .autos import aut_group, inner_automorphism, out_group, relative_aut
from .cohomology import (
    QModule,
    center_module,
    cochain_add,
    cochain_neg,
    conjugation_module,
    enumerate_classes,
    h0,
    h1,
    h2,
    induced_h2,
    is_cocycle,
    torsor_act,
    torsor_diff,
    z1,
)
from .config import get_config
from .errors import NotACocycle, NotRelative, VerificationFailure, CapExceeded
from .extensions import (
    Extension,
    _cache,
    are_equivalent,
    extends,
    factor_system,
    outer_action,
    pullback,
    pushout,
)
from .groups import (
    Group,
    Subgroup,
    center,
    centralizer,
    intersection,
    normalizer,
    product,
    quotient,
    subgroup_generated,
)


@dataclass(frozen=True, order=True)
class SPair:
    alpha: tuple
    beta: tuple

    def __mul__(self, other: "SPair") -> "SPair":
        return SPair(perms.compose(self.alpha, other.alpha), perms.compose(self.beta, other.beta))

    def inverse(self) -> "SPair":
        return SPair(perms.inverse(self.alpha), perms.inverse(self.beta))

    def as_permutation(self) -> tuple:
        """Disjoint-union permutation on H followed by Q."""
        n = len(self.alpha)
        return self.alpha + tuple(n + b for b in self.beta)

    def to_dict(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}


def _greedy_generators(order: int, mul) -> list:
    gens = []
    span = {0}
    for x in range(order):
        if x in span:
            continue
        gens.append(x)
        queue = list(span)
        span = set(span)
        for y in queue:
            for g in gens:
                z = mul(y, g)
                if z not in span:
                    span.add(z)
                    queue.append(z)
    return gens


class CosetQuotient:
    """Quotient of an SGroup by a normal subgroup, on minimal-index representatives."""

    def __init__(self, parent: "SGroup", normal: Sequence[int], name: str):
        self.parent = parent
        self.normal = tuple(sorted(normal))
        self.name = name
        coset_of = [-1] * parent.order
        reps = []
        for i in range(parent.order):
            if coset_of[i] >= 0:
                continue
            members = {parent.mul(i, n) for n in self.normal}
            for m in members:
                coset_of[m] = len(reps)
            reps.append(min(members))
        self.reps = tuple(reps)
        self.coset_of = tuple(coset_of)

    @property
    def order(self) -> int:
        return len(self.reps)

    def project(self, i: int) -> int:
        return self.coset_of[i]

    def mul(self, a: int, b: int) -> int:
        return self.coset_of[self.parent.mul(self.reps[a], self.reps[b])]

    @cached_property
    def group_view(self) -> Group:
        n = self.order
        return Group([[self.mul(a, b) for b in range(n)] for a in range(n)], self.name)

    def image_of(self, indices) -> set:
        return {self.coset_of[i] for i in indices}


class SGroup:
    """The compatible pairs of an extension with their distinguished subgroups."""

    def __init__(self, E: Extension, pairs: Sequence[SPair]):
        self.E = E
        self.pairs = tuple(sorted(pairs))
        self.index = {p: i for i, p in enumerate(self.pairs)}
        nh, nq = E.H.order, E.Q.order
        ident = SPair(tuple(range(nh)), tuple(range(nq)))
        if self.pairs[0] != ident:
            raise VerificationFailure("identity pair missing from S")
        b = {self.index[theta_g(E, g)] for g in range(E.G.order)}
        self.b_subgroup = tuple(sorted(b))
        Hg = E.h_group
        innh = {self.index[SPair(inner_automorphism(Hg, h), ident.beta)] for h in range(nh)}
        self.innh_subgroup = tuple(sorted(innh))

    @property
    def order(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"<SGroup order {self.order}, |B|={len(self.b_subgroup)}>"

    def mul(self, i: int, j: int) -> int:
        return self.index[self.pairs[i] * self.pairs[j]]

    def inv(self, i: int) -> int:
        return self.index[self.pairs[i].inverse()]

    def index_of(self, pair: SPair) -> int:
        return self.index[pair]

    @cached_property
    def generators(self) -> list:
        return _greedy_generators(self.order, self.mul)

    @cached_property
    def group_view(self) -> Group:
        n = self.order
        return Group([[self.mul(i, j) for j in range(n)] for i in range(n)], "S")

    @cached_property
    def sbar(self) -> CosetQuotient:
        return CosetQuotient(self, self.b_subgroup, "S/B")

    @cached_property
    def shat(self) -> CosetQuotient:
        return CosetQuotient(self, self.innh_subgroup, "S/InnH")

    def is_normal(self, sub: Sequence[int]) -> bool:
        members = set(sub)
        return all(self.mul(self.mul(g, n), self.inv(g)) in members for g in self.generators for n in sub)

    def is_solvable(self) -> bool:
        return perms.is_solvable([p.as_permutation() for p in self.pairs], len(self.pairs[0].as_permutation()))


# ---------------------------------------------------------------------------
# construction


def theta_g(E: Extension, g: int) -> SPair:
    """(c_g restricted to H, c_{pi g}) in H and Q indices."""
    G, Q = E.G, E.Q
    pos = E.h_pos
    alpha = tuple(pos[G.conj(g, x)] for x in E.h_embed)
    q = E.proj(g)
    beta = tuple(Q.conj(q, x) for x in range(Q.order))
    return SPair(alpha, beta)


def is_compatible_pair(E: Extension, alpha, beta) -> bool:
    oa = outer_action(E)
    out = oa.target
    ca = out.class_of(alpha)
    return all(oa.classes[beta[q]] == out.conj(ca, oa.classes[q]) for q in range(E.Q.order))


def compatibility_group(E: Extension) -> SGroup:
    def build():
        oa = outer_action(E)
        AH = aut_group(E.h_group)
        AQ = aut_group(E.Q)
        out = oa.target
        by_class = {}
        for i, a in enumerate(AH.elements):
            by_class.setdefault(out.project(i), []).append(a)
        pairs = []
        for b in AQ.elements:
            for c in range(out.order):
                if all(oa.classes[b[q]] == out.conj(c, oa.classes[q]) for q in range(E.Q.order)):
                    pairs.extend(SPair(a, b) for a in by_class[c])
        return SGroup(E, pairs)

    return _cache(E, "compatibility_group", build)


# ---------------------------------------------------------------------------
# action on extension classes


def act(theta: SPair, fs):
    """fs . theta = (alpha^-1)_* beta^* fs."""
    return pushout(perms.inverse(theta.alpha), pullback(theta.beta, fs))


def fiber_label(E: Extension, fs2) -> int:
    """H^2 index i with fs2 equivalent to base . rep_i."""
    return torsor_diff(fs2, factor_system(E))


def fiber_classes(E: Extension) -> list:
    return _cache(E, "fiber_classes", lambda: enumerate_classes(factor_system(E)))


def action_table(E: Extension) -> dict:
    """(class label, S generator index) -> class label."""

    def build():
        S = compatibility_group(E)
        classes = fiber_classes(E)
        table = {}
        for i, fs_i in enumerate(classes):
            for g in S.generators:
                table[(i, g)] = fiber_label(E, act(S.pairs[g], fs_i))
        return table

    return _cache(E, "action_table", build)


def fiber_orbits(E: Extension) -> list:
    """Orbits of S on the whole fibre, as sorted label lists (sorted by least label)."""
    S = compatibility_group(E)
    table = action_table(E)
    n = len(fiber_classes(E))
    seen = set()
    orbits = []
    for start in range(n):
        if start in seen:
            continue
        orb = {start}
        queue = [start]
        for x in queue:
            for g in S.generators:
                y = table[(x, g)]
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        orbits.append(sorted(orb))
    return orbits


def stabilizer(E: Extension) -> tuple:
    """Iso_S E: indices of theta with E.theta equivalent to E."""

    def build():
        S = compatibility_group(E)
        fs = factor_system(E)
        return tuple(i for i, th in enumerate(S.pairs) if are_equivalent(act(th, fs), fs))

    return _cache(E, "stabilizer", build)


@dataclass(frozen=True)
class OrbitResult:
    orbit: tuple
    stabilizer: tuple
    shat_orbit_size: int
    shat_stabilizer_size: int


def orbit_and_stabilizer(E: Extension) -> OrbitResult:
    S = compatibility_group(E)
    orbit = next(o for o in fiber_orbits(E) if 0 in o)
    stab = stabilizer(E)
    shat = S.shat
    shat_stab = len(shat.image_of(stab))
    if len(orbit) * len(stab) != S.order:
        raise VerificationFailure("orbit-stabilizer count fails for S")
    if len(orbit) * shat_stab != shat.order:
        raise VerificationFailure("orbit-stabilizer count fails for S/InnH")
    return OrbitResult(tuple(orbit), stab, len(orbit), shat_stab)


def lambda_class(E: Extension, theta: SPair) -> int:
    """(E - E.theta) as an H^2 index."""
    fs = factor_system(E)
    return torsor_diff(fs, act(theta, fs))


def lambda_map(E: Extension) -> tuple:
    def build():
        S = compatibility_group(E)
        return tuple(lambda_class(E, th) for th in S.pairs)

    return _cache(E, "lambda_map", build)


def theta_star(E: Extension, theta: SPair) -> tuple:
    """Right action of theta on H^2(Q, zH) as a class permutation."""
    return induced_h2(theta.alpha, theta.beta, factor_system(E))


# ---------------------------------------------------------------------------
# res and mu


def res(gamma: Sequence[int], E: Extension) -> SPair:
    """(gamma restricted to H, induced map on Q)."""
    pos = E.h_pos
    try:
        alpha = tuple(pos[gamma[x]] for x in E.h_embed)
    except KeyError as exc:
        raise NotRelative("automorphism does not preserve H") from exc
    beta = tuple(E.proj(gamma[E.section[q]]) for q in range(E.Q.order))
    return SPair(alpha, beta)


def mu(sigma: Sequence[int], E: Extension) -> tuple:
    """g -> sigma(pi g) g for a 1-cocycle sigma: Q -> zH (module indices)."""
    mod = center_module(E)
    if not is_cocycle(mod, 1, tuple(sigma)):
        raise NotACocycle("sigma is not a normalised 1-cocycle")
    G = E.G
    to_g = [E.h_embed[h] for h in mod.embedding]
    return tuple(G.table[to_g[sigma[E.proj(g)]]][g] for g in range(G.order))


def relative_automorphisms(E: Extension) -> tuple:
    return _cache(E, "relative_aut", lambda: tuple(relative_aut(E.G, E.H)))


def _aut_generators(elements: Sequence[tuple]) -> list:
    if not elements:
        return []
    return perms.generating_subset(elements, len(elements[0]))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Junction:
    at: str
    exact: bool
    kernel_size: int
    image_size: int

    def to_dict(self) -> dict:
        return {"at": self.at, "exact": self.exact, "kernel_size": self.kernel_size, "image_size": self.image_size}


@dataclass
class SequenceReport:
    name: str
    terms: list = field(default_factory=list)  # (name, order)
    junctions: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(j.exact for j in self.junctions) and all(v is not False for v in self.checks.values())

    def term(self, name: str, order: int) -> None:
        self.terms.append((name, order))

    def junction(self, at: str, exact: bool, kernel_size: int, image_size: int) -> None:
        self.junctions.append(Junction(at, bool(exact), kernel_size, image_size))

    def failures(self) -> list:
        out = [f"junction {j.at}" for j in self.junctions if not j.exact]
        out += [k for k, v in self.checks.items() if v is False]
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "terms": [{"name": n, "order": o} for n, o in self.terms],
            "junctions": [j.to_dict() for j in self.junctions],
            "checks": dict(self.checks),
            "values": dict(self.values),
            "witnesses": dict(self.witnesses),
        }

    def render(self) -> str:
        lines = [f"{self.name}: {'ok' if self.ok else 'FAILED'}"]
        for n, o in self.terms:
            lines.append(f"  |{n}| = {o}")
        for j in self.junctions:
            lines.append(f"  exact at {j.at}: {j.exact} (kernel {j.kernel_size}, image {j.image_size})")
        for k, v in self.checks.items():
            lines.append(f"  {k}: {v}")
        for k, v in self.values.items():
            lines.append(f"  {k} = {v}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# the sequence 0 -> Z^1 -> Aut(G,H) -> S -> H^2


def verify_cycle_sequence(E: Extension) -> SequenceReport:
    rep = SequenceReport("cycle sequence")
    S = compatibility_group(E)
    mod = center_module(E)
    Z1 = z1(mod)
    A = relative_automorphisms(E)
    H2 = h2(mod)
    rep.term("Z1(Q,zH)", len(Z1))
    rep.term("Aut(G,H)", len(A))
    rep.term("S", S.order)
    rep.term("H2(Q,zH)", H2.order)

    mu_imgs = [mu(s, E) for s in Z1]
    ident_g = tuple(range(E.G.order))
    rep.junction("Z1", len(set(mu_imgs)) == len(Z1), sum(1 for m in mu_imgs if m == ident_g), len(set(mu_imgs)))

    res_idx = []
    for g in A:
        pair = res(g, E)
        if pair not in S.index:
            raise VerificationFailure("restriction of an automorphism is not compatible")
        res_idx.append(S.index[pair])
    ker_res = {g for g, r in zip(A, res_idx) if r == 0}
    rep.junction("Aut(G,H)", set(mu_imgs) == ker_res, len(ker_res), len(set(mu_imgs)))

    image_res = set(res_idx)
    iso = set(stabilizer(E))
    lam = lambda_map(E)
    ker_lam = {i for i, v in enumerate(lam) if v == 0}
    rep.junction("S", image_res == iso == ker_lam, len(ker_lam), len(image_res))
    rep.checks["image(res) = Iso_S E"] = image_res == iso
    rep.checks["Iso_S E = ker lambda"] = iso == ker_lam

    pos = {g: i for i, g in enumerate(A)}
    gens = _aut_generators(A)
    hom = all(
        S.index[res(perms.compose(g, d), E)] == S.mul(r, S.index[res(d, E)])
        for g, r in zip(A, res_idx)
        for d in gens
    )
    rep.checks["res is a homomorphism"] = hom
    if len(Z1) <= 64:
        add_ok = all(
            mu(cochain_add(mod, a, b), E) == perms.compose(mu(a, E), mu(b, E)) for a in Z1 for b in Z1
        )
        rep.checks["mu is a homomorphism"] = add_ok
    rep.values["stabilizer_order"] = len(iso)
    rep.values["orbit_size"] = S.order // len(iso)
    rep.witnesses["res_images"] = sorted(image_res)[:16]
    return rep


# ---------------------------------------------------------------------------
# the basic sequence for Out(G,H)


def cbar_subgroup(E: Extension) -> Subgroup:
    """C_G(H) intersected with the preimage of zQ."""
    G = E.G
    zq = set(center(E.Q).members)
    pre = Subgroup(G, tuple(g for g in range(G.order) if E.proj(g) in zq))
    return intersection(centralizer(G, E.H), pre)


def commutator_cocycle(E: Extension, gbar: int) -> tuple:
    """q -> [gbar, u(q)] as a cochain in zH module indices."""
    mod = center_module(E)
    G = E.G
    mpos = {E.h_embed[h]: i for i, h in enumerate(mod.embedding)}
    return tuple(mpos[G.commutator(gbar, E.section[q])] for q in range(E.Q.order))


def out_cosets(E: Extension) -> dict:
    """Aut(G,H) element -> key of its Inn G coset (least generator-image tuple)."""

    def build():
        G = E.G
        inner = sorted({inner_automorphism(G, g) for g in range(G.order)})
        gens = G.generators
        inner_g = [tuple(c[x] for x in gens) for c in inner]
        keys = {}
        for a in relative_automorphisms(E):
            keys[a] = min(tuple(a[x] for x in cg) for cg in inner_g)
        return keys

    return _cache(E, "out_cosets", build)


def verify_basic_sequence(E: Extension) -> SequenceReport:
    rep = SequenceReport("basic sequence")
    G = E.G
    S = compatibility_group(E)
    mod = center_module(E)
    H1 = h1(mod)
    Z1 = z1(mod)
    A = relative_automorphisms(E)
    sbar = S.sbar

    cbar = cbar_subgroup(E)
    zG = center(G)
    zH_in_G = Subgroup(G, tuple(sorted(E.h_embed[h] for h in mod.embedding)))
    zhzg = product(zH_in_G, zG)

    sig = {}
    well_defined = True
    for gb in cbar.members:
        s = commutator_cocycle(E, gb)
        for g in range(G.order):
            if G.commutator(gb, g) != G.commutator(gb, E.section[E.proj(g)]):
                well_defined = False
                break
        sig[gb] = s
    rep.checks["sigma_gbar constant on H-cosets"] = well_defined
    rep.checks["sigma_gbar are cocycles"] = all(is_cocycle(mod, 1, s) for s in sig.values())
    bbar = set(sig.values())
    b1 = set(H1.boundaries)
    rep.checks["B1 in Bbar in Z1"] = b1 <= bbar and bbar <= set(Z1)
    rep.checks["|Bbar| = |Cbar|/|zG|"] = len(bbar) * zG.order == cbar.order
    V = {H1.class_of(s) for s in bbar}
    rep.checks["|V| = |Cbar|/|zH zG|"] = len(V) * zhzg.order == cbar.order
    hbar1 = H1.order // len(V)

    inn_order = G.order // zG.order
    rep.checks["|ker u| = |Cbar|/|zG|"] = inn_order // len(S.b_subgroup) * zG.order == cbar.order
    rep.checks["B normal in S"] = S.is_normal(S.b_subgroup)

    keys = out_cosets(E)
    out_keys = sorted(set(keys.values()))
    rep.term("Hbar1(Q,zH)", hbar1)
    rep.term("Out(G,H)", len(out_keys))
    rep.term("Sbar", sbar.order)
    rep.term("H2(Q,zH)", h2(mod).order)

    # mu-bar: Z1 -> Out(G,H) must have fibres exactly the Bbar-cosets
    fibres = {}
    for s in Z1:
        fibres.setdefault(keys[mu(s, E)], []).append(s)
    inj = True
    for members in fibres.values():
        base = members[0]
        diffs = {cochain_add(mod, m, cochain_neg(mod, base)) for m in members}
        if diffs != bbar:
            inj = False
    rep.junction("Hbar1", inj and len(fibres) == hbar1, len(bbar) // len(b1) if b1 else 1, len(fibres))

    res_sbar = {}
    consistent = True
    for a, k in keys.items():
        c = sbar.project(S.index[res(a, E)])
        if res_sbar.setdefault(k, c) != c:
            consistent = False
    rep.checks["res well defined on Out(G,H)"] = consistent
    ker_res = {k for k, c in res_sbar.items() if c == 0}
    rep.junction("Out(G,H)", ker_res == set(fibres), len(ker_res), len(fibres))

    image = set(res_sbar.values())
    iso_bar = sbar.image_of(stabilizer(E))
    lam = lambda_map(E)
    lam_const = all(lam[i] == lam[sbar.reps[sbar.project(i)]] for i in range(S.order))
    rep.checks["lambda constant on B-cosets"] = lam_const
    ker_lam = {sbar.project(i) for i, v in enumerate(lam) if v == 0}
    rep.junction("Sbar", image == iso_bar == ker_lam, len(ker_lam), len(image))
    rep.checks["|Out(G,H)| = |Hbar1| |Iso_Sbar E|"] = len(out_keys) == hbar1 * len(iso_bar)

    centric = set(centralizer(G, E.H).members) <= set(E.H.members)
    rep.values["centric"] = centric
    if centric:
        rep.checks["centric: Hbar1 = H1"] = hbar1 == H1.order
    rep.values["|Cbar|"] = cbar.order
    rep.values["|V|"] = len(V)
    rep.values["|ker u|"] = cbar.order // zG.order
    return rep


# ---------------------------------------------------------------------------
# decomposition of Sbar


def aut_phi(E: Extension) -> list:
    """beta in Aut Q with Phi beta = Phi."""
    oa = outer_action(E)
    return [b for b in aut_group(E.Q).elements if all(oa.classes[b[q]] == oa.classes[q] for q in range(E.Q.order))]


def phi_image_subgroup(E: Extension) -> Subgroup:
    oa = outer_action(E)
    return Subgroup(oa.target.group_view, tuple(sorted(set(oa.classes))))


def decompose_sbar(E: Extension) -> SequenceReport:
    rep = SequenceReport("Sbar decomposition")
    S = compatibility_group(E)
    oa = outer_action(E)
    out = oa.target
    OutG = out.group_view
    Q = E.Q
    phiQ = phi_image_subgroup(E)
    N = normalizer(OutG, phiQ)
    autphi = aut_phi(E)
    ident_h = tuple(range(E.H.order))
    ident_q = tuple(range(Q.order))

    rep.term("Aut_Phi Q", len(autphi))
    rep.term("N_OutH(Phi Q)", N.order)
    rep.term("Phi Q", phiQ.order)
    rep.term("Sbar", S.sbar.order)

    p = [out.class_of(th.alpha) for th in S.pairs]
    rep.checks["p lands in the normalizer"] = set(p) <= set(N.members)
    rep.checks["p(B) = Phi Q"] = {p[i] for i in S.b_subgroup} == set(phiQ.members)

    ker_p = {i for i in range(S.order) if p[i] in phiQ}
    bautphi = {S.mul(b, S.index[SPair(ident_h, beta)]) for b in S.b_subgroup for beta in autphi}
    rep.checks["ker p = B Aut_Phi Q"] = ker_p == bautphi
    ker_pbar = len(ker_p) // len(S.b_subgroup)
    autphi_idx = {S.index[SPair(ident_h, beta)] for beta in autphi}
    rep.checks["ker pbar = Aut_Phi Q / (Aut_Phi Q cap B)"] = ker_pbar * len(autphi_idx & set(S.b_subgroup)) == len(autphi)

    # lifting of beta' from Q' = Q / ker Phi
    kphi = oa.kernel()
    Qp, tau = quotient(Q, kphi)
    phi_p = [None] * Qp.order
    for q in range(Q.order):
        phi_p[tau(q)] = oa.classes[q]
    where = {c: i for i, c in enumerate(phi_p)}
    aq = aut_group(Q).elements

    def induced_beta_prime(c):
        return tuple(where[OutG.conj(c, phi_p[x])] for x in range(Qp.order))

    def lifts(bp):
        return any(all(tau(b[q]) == bp[tau(q)] for q in range(Q.order)) for b in aq)

    liftable = {c for c in N.members if lifts(induced_beta_prime(c))}
    image_p = set(p)
    rep.checks["image p = liftable normalizer classes"] = image_p == liftable
    lemma = True
    for c in N.members:
        for g in E.G.generators:
            cg = out.class_of(theta_g(E, g).alpha)
            if lifts(induced_beta_prime(OutG.table[c][cg])) != (c in liftable):
                lemma = False
    rep.checks["lifting invariant under B"] = lemma
    image_pbar = {x for x in image_p}
    rep.values["|image pbar|"] = len(image_pbar) // phiQ.order
    rep.values["|N/Phi Q|"] = N.order // phiQ.order
    rep.values["|ker pbar|"] = ker_pbar
    rep.junction("Sbar", ker_p == bautphi, ker_pbar, len(image_pbar) // phiQ.order)

    centric = set(centralizer(E.G, E.H).members) <= set(E.H.members)
    rep.values["centric"] = centric
    rep.checks["centric iff Phi injective"] = centric == oa.is_injective()
    if centric:
        rep.checks["centric: Aut_Phi Q trivial"] = autphi == [ident_q]
        rep.checks["centric: p injective on Sbar"] = ker_pbar == 1
    return rep


# ---------------------------------------------------------------------------
# solvability


def _subgroup_solvable(sub: Subgroup) -> bool:
    from .groups import is_solvable

    grp, _ = sub.as_group()
    return is_solvable(grp)


def solvability_report(E: Extension) -> SequenceReport:
    from .groups import is_solvable

    rep = SequenceReport("solvability")
    oa = outer_action(E)
    OutG = oa.target.group_view
    phiQ = phi_image_subgroup(E)
    N = normalizer(OutG, phiQ)
    C = centralizer(OutG, phiQ)
    kphi = oa.kernel()
    kgrp, kemb = kphi.as_group()

    c1 = is_solvable(E.h_group)
    try:
        autG = aut_group(E.G).elements
        c2 = all(all(a[h] in E.H for h in E.H.generators) for a in autG)
    except CapExceeded:
        autG = None
        c2 = "undetermined"
    c3 = _subgroup_solvable(N)
    c4 = aut_group(kgrp).is_solvable()
    rep.values["condition 1 (H solvable)"] = c1
    rep.values["condition 2 (H characteristic)"] = c2
    rep.values["condition 3 (normalizer solvable)"] = c3
    rep.values["condition 4 (Aut ker Phi solvable)"] = c4
    rep.values["|N(Phi Q)|"] = N.order

    A = relative_automorphisms(E)
    a_solv = perms.is_solvable(A, E.G.order)
    rep.values["Aut(G,H) solvable"] = a_solv
    rep.values["|Aut(G,H)|"] = len(A)
    if autG is not None:
        rep.values["|Aut G|"] = len(autG)
        rep.values["Aut G solvable"] = a_solv if c2 is True else perms.is_solvable(autG, E.G.order)
    if c1 and c2 is True and c3 and c4:
        rep.checks["all conditions imply Aut(G,H) solvable"] = a_solv

    S = compatibility_group(E)
    autphi = aut_phi(E)
    s_solv = S.is_solvable()
    autphi_solv = perms.is_solvable(autphi, E.Q.order)
    rep.values["S solvable"] = s_solv
    if c1 and autphi_solv and c3:
        rep.checks["S solvable when H, Aut_Phi Q, N are"] = s_solv
    if s_solv:
        rep.checks["S solvable forces H, Aut_Phi Q, C solvable"] = c1 and autphi_solv and _subgroup_solvable(C)

    rep.checks.update(_kernel_analysis(E, rep))
    return rep


def _kernel_analysis(E: Extension, rep: SequenceReport) -> dict:
    """Five-term sequence 0 -> H0(Q,A) -> A -> K -> H1(Q,A) -> H1(ker Phi, A), A = z ker Phi."""
    Q = E.Q
    oa = outer_action(E)
    kphi = oa.kernel()
    kgrp, kemb = kphi.as_group()
    zk = [kemb[x] for x in center(kgrp).members]
    A_sub = Subgroup(Q, tuple(sorted(zk)))
    mod = conjugation_module(Q, A_sub)
    apos = {q: i for i, q in enumerate(mod.embedding)}
    checks = {}
    ident = tuple(range(Q.order))
    autphi = aut_phi(E)
    K = [b for b in autphi if all(b[k] == k for k in kphi.members)]
    kset = set(K)

    lam = {}
    ok_lam = True
    for b in K:
        vals = []
        for q in range(Q.order):
            x = Q.table[b[q]][Q.inverses[q]]
            if x not in apos:
                ok_lam = False
                break
            vals.append(apos[x])
        if not ok_lam:
            break
        lam[b] = tuple(vals)
    checks["lambda lands in z ker Phi"] = ok_lam
    if not ok_lam:
        return checks
    checks["lambda are cocycles"] = all(is_cocycle(mod, 1, v) for v in lam.values())
    H1 = h1(mod)
    sigma = {b: H1.class_of(v) for b, v in lam.items()}
    checks["sigma is a homomorphism"] = all(
        sigma[perms.compose(a, b)] == H1.add(sigma[a], sigma[b]) for a in K for b in K
    )

    kmod = mod.restrict(kphi)
    checks["ker Phi acts trivially on A"] = kmod.is_trivial()
    fixed = set(mod.embedding[m] for m in h0(mod).members)
    conj = {w: inner_automorphism(Q, w) for w in mod.embedding}
    checks["c_w lies in K"] = all(c in kset for c in conj.values())
    ker_c = {w for w, c in conj.items() if c == ident}
    img_c = set(conj.values())
    ker_sigma = {b for b in K if sigma[b] == 0}
    kmembers = kphi.members

    def restrict_class(i):
        return tuple(H1.classes[i][k] for k in kmembers)

    restr_ok = all(
        tuple(z[k] for k in kmembers) == tuple(0 for _ in kmembers) for z in H1.boundaries
    )
    checks["restriction well defined"] = restr_ok
    zero = tuple(0 for _ in kmembers)
    ker_res = {i for i in range(H1.order) if restrict_class(i) == zero}
    img_sigma = set(sigma.values())

    rep.term("H0(Q,A)", len(fixed))
    rep.term("A = z ker Phi", A_sub.order)
    rep.term("K", len(K))
    rep.term("H1(Q,A)", H1.order)
    rep.term("H1(ker Phi,A)", len({restrict_class(i) for i in range(H1.order)}))
    rep.junction("H0(Q,A)", True, 1, len(fixed))
    rep.junction("A", fixed == ker_c, len(ker_c), len(fixed))
    rep.junction("K", img_c == ker_sigma, len(ker_sigma), len(img_c))
    rep.junction("H1(Q,A)", img_sigma == ker_res, len(ker_res), len(img_sigma))
    return checks


# ---------------------------------------------------------------------------
# counting formula and normal series


def counting_check(E: Extension) -> SequenceReport:
    rep = SequenceReport("counting formula")
    G = E.G
    S = compatibility_group(E)
    mod = center_module(E)
    H1 = h1(mod)
    H2 = h2(mod)
    zg_cap_h = intersection(center(G), E.H).order
    fixed = h0(mod).order
    orbit = orbit_and_stabilizer(E)
    A = relative_automorphisms(E)
    shat = S.shat.order
    value = Fraction(H1.order * E.H.order * shat, zg_cap_h * orbit.shat_orbit_size)
    rep.values.update(
        {
            "|H1(Q,zH)|": H1.order,
            "|H0(Q,zH)|": zg_cap_h,
            "|O_Shat E|": orbit.shat_orbit_size,
            "|H|": E.H.order,
            "|Shat|": shat,
            "formula": str(value),
            "|Aut(G,H)|": len(A),
            "|H2(Q,zH)|": H2.order,
        }
    )
    rep.checks["H0(Q,zH) = zG cap H"] = fixed == zg_cap_h
    rep.checks["formula = |Aut(G,H)|"] = value == len(A)
    rep.checks["|O| <= |H2|"] = orbit.shat_orbit_size <= H2.order
    return rep


def normal_series(E: Extension) -> SequenceReport:
    rep = SequenceReport("normal series")
    G = E.G
    S = compatibility_group(E)
    mod = center_module(E)
    H1 = h1(mod)
    A0 = relative_automorphisms(E)
    Hg = E.h_group
    innh = set(S.innh_subgroup)
    res_idx = {a: S.index[res(a, E)] for a in A0}
    A1 = [a for a in A0 if res_idx[a] in innh]
    conj_h = {h: inner_automorphism(G, E.h_embed[h]) for h in range(Hg.order)}
    A2 = sorted(set(conj_h.values()))
    A1set, A2set = set(A1), set(A2)
    gens0 = _aut_generators(list(A0))

    def normal(sub):
        return all(perms.compose(perms.compose(g, x), perms.inverse(g)) in sub for g in gens0 for x in sub)

    rep.checks["A2 in A1"] = A2set <= A1set
    rep.checks["A1 normal in A0"] = normal(A1set)
    rep.checks["A2 normal in A0"] = normal(A2set)

    # A2 = H / (zG cap H)
    zgh = intersection(center(G), E.H)
    kernel = {h for h, c in conj_h.items() if c == tuple(range(G.order))}
    rep.checks["A2 = H/H0"] = {E.h_embed[h] for h in kernel} == set(zgh.members) and len(A2) * zgh.order == Hg.order

    # A1/A2 = H1 via gamma = c_h o mu(sigma) -> [sigma]
    to_class = {}
    ok = True
    mpos = {E.h_embed[h]: i for i, h in enumerate(mod.embedding)}
    pos = E.h_pos
    for a in A1:
        alpha = res(a, E).alpha
        h = next(h for h in range(Hg.order) if tuple(pos[G.conj(E.h_embed[h], x)] for x in E.h_embed) == alpha)
        rest = perms.compose(perms.inverse(conj_h[h]), a)
        sigma = []
        for q in range(E.Q.order):
            u = E.section[q]
            x = G.table[rest[u]][G.inverses[u]]
            if x not in mpos:
                ok = False
                break
            sigma.append(mpos[x])
        if not ok:
            break
        to_class[a] = H1.class_of(tuple(sigma))
    rep.checks["A1 elements factor as c_h mu(sigma)"] = ok
    if ok:
        gens1 = _aut_generators(A1)
        rep.checks["A1 -> H1 is a homomorphism"] = all(
            to_class[perms.compose(a, b)] == H1.add(to_class[a], to_class[b]) for a in A1 for b in gens1
        )
        rep.checks["A1 -> H1 onto"] = set(to_class.values()) == set(range(H1.order))
        rep.checks["ker(A1 -> H1) = A2"] = {a for a, c in to_class.items() if c == 0} == A2set

    # A0/A1 = Iso_Shat E
    shat = S.shat
    image = {shat.project(res_idx[a]) for a in A0}
    iso_hat = shat.image_of(stabilizer(E))
    rep.checks["A0/A1 onto Iso_Shat E"] = image == iso_hat
    kernel0 = {a for a in A0 if shat.project(res_idx[a]) == 0}
    rep.checks["ker(A0 -> Shat) = A1"] = kernel0 == A1set

    q2 = len(A2)
    q1 = len(A1) // len(A2)
    q0 = len(A0) // len(A1)
    rep.term("A0", len(A0))
    rep.term("A1", len(A1))
    rep.term("A2", len(A2))
    rep.term("A3", 1)
    rep.values["quotient orders"] = [q2, q1, q0]
    rep.checks["quotient orders match"] = (q2, q1, q0) == (Hg.order // zgh.order, H1.order, len(iso_hat))
    return rep
