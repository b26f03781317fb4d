"""Extensions 1 -> H -> G -> Q -> 1 and their factor systems.

A factor system (phi, f) over (H, Q) describes the group on H x Q with

    (h, q)(h', q') = (h * phi(q)(h') * f(q, q'), q q')

and normalised data phi(1) = id, f(1, q) = f(q, 1) = 1.  Morphisms of
extensions with prescribed (alpha, beta) are found by solving for the
correction map sigma: Q -> H with gamma(h, q) = (alpha(h) sigma(q), beta(q)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Union

from . import perms
from .autos import aut_group, out_group, OutGroup
from .config import get_config
from .errors import (
    IncompatiblePair,
    InvalidFactorSystem,
    NotAGroup,
    NotNormal,
    SearchCapExceeded,
    VerificationFailure,
)
from .groups import Group, Hom, Subgroup, quotient, center


@dataclass(eq=False)
class Extension:
    """G with a distinguished normal subgroup H, quotient Q, projection and section."""

    G: Group
    H: Subgroup
    Q: Group
    proj: Hom
    section: tuple
    label: Optional[str] = None
    claims: dict = field(default_factory=dict)

    def __post_init__(self):
        self.section = tuple(self.section)

    def __repr__(self) -> str:
        name = self.label or "Extension"
        return f"<{name}: |H|={self.H.order}, |G|={self.G.order}, |Q|={self.Q.order}>"

    @cached_property
    def _h(self):
        return self.H.as_group(f"H<{self.G.label}>" if self.G.label else None)

    @property
    def h_group(self) -> Group:
        return self._h[0]

    @property
    def h_embed(self) -> tuple:
        """H index -> G index."""
        return self._h[1]

    @cached_property
    def h_pos(self) -> dict:
        """G index -> H index, for members of H."""
        return {g: i for i, g in enumerate(self.h_embed)}

    def validate(self) -> None:
        G, Q = self.G, self.Q
        if not self.proj.is_hom():
            raise VerificationFailure("projection is not a homomorphism")
        if self.proj.kernel().members != self.H.members:
            raise VerificationFailure("H is not the kernel of the projection")
        if self.section[0] != 0:
            raise VerificationFailure("section is not normalised")
        if any(self.proj(self.section[q]) != q for q in range(Q.order)):
            raise VerificationFailure("proj o section != id")
        if len(set(self.proj.images)) != Q.order:
            raise VerificationFailure("projection is not surjective")

    def decompose(self, g: int) -> tuple:
        """g = h * section(q) -> (h as H index, q)."""
        G = self.G
        q = self.proj(g)
        h = G.table[g][G.inverses[self.section[q]]]
        return self.h_pos[h], q

    def compose(self, h: int, q: int) -> int:
        return self.G.table[self.h_embed[h]][self.section[q]]


@dataclass(frozen=True, eq=False)
class FactorSystem:
    H: Group
    Q: Group
    phi: tuple
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(tuple(p) for p in self.phi))
        object.__setattr__(self, "f", tuple(tuple(r) for r in self.f))

    def __eq__(self, other):
        if not isinstance(other, FactorSystem):
            return NotImplemented
        return self.H == other.H and self.Q == other.Q and self.phi == other.phi and self.f == other.f

    def __hash__(self):
        return hash((self.phi, self.f))

    def __repr__(self) -> str:
        return f"<FactorSystem over |H|={self.H.order}, |Q|={self.Q.order}>"

    def problems(self) -> list:
        """Violated invariants, as human-readable strings."""
        H, Q = self.H, self.Q
        ht, qt = H.table, Q.table
        nh, nq = H.order, Q.order
        out = []
        if len(self.phi) != nq or len(self.f) != nq or any(len(r) != nq for r in self.f):
            return ["shape mismatch"]
        for q, a in enumerate(self.phi):
            if len(a) != nh or not perms.is_permutation(a):
                out.append(f"phi({q}) is not a permutation of H")
                return out
            if any(a[ht[x][y]] != ht[a[x]][a[y]] for x in range(nh) for y in H.generators):
                out.append(f"phi({q}) is not an automorphism")
        if out:
            return out
        if self.phi[0] != tuple(range(nh)):
            out.append("phi(1) is not the identity")
        for q in range(nq):
            if self.f[0][q] != 0 or self.f[q][0] != 0:
                out.append(f"f not normalised at {q}")
                break
        hinv = H.inverses
        for q1 in range(nq):
            for q2 in range(nq):
                c = self.f[q1][q2]
                lhs = perms.compose(self.phi[q1], self.phi[q2])
                rhs_base = self.phi[qt[q1][q2]]
                if any(lhs[h] != ht[ht[c][rhs_base[h]]][hinv[c]] for h in H.generators):
                    out.append(f"phi({q1})phi({q2}) != c_f phi({q1}{q2})")
                    return out
        f, phi = self.f, self.phi
        for q1 in range(nq):
            for q2 in range(nq):
                for q3 in range(nq):
                    lhs = ht[phi[q1][f[q2][q3]]][f[q1][qt[q2][q3]]]
                    rhs = ht[f[q1][q2]][f[qt[q1][q2]][q3]]
                    if lhs != rhs:
                        out.append(f"cocycle identity fails at ({q1}, {q2}, {q3})")
                        return out
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise InvalidFactorSystem("; ".join(problems))

    @cached_property
    def extension(self) -> Extension:
        return realize(self)

    @cached_property
    def outer(self) -> "OuterAction":
        return outer_action_of(self)


@dataclass(frozen=True, eq=False)
class OuterAction:
    Q: Group
    target: OutGroup
    classes: tuple

    def is_hom(self) -> bool:
        qt = self.Q.table
        mul = self.target.mul
        c = self.classes
        return all(c[qt[a][b]] == mul(c[a], c[b]) for a in range(self.Q.order) for b in self.Q.generators)

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.classes)

    def is_injective(self) -> bool:
        return len(set(self.classes)) == self.Q.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.Q, tuple(q for q, c in enumerate(self.classes) if c == 0))

    def image(self) -> tuple:
        return tuple(sorted(set(self.classes)))


# ---------------------------------------------------------------------------
# building extensions and factor systems


def make_extension(G: Group, H: Subgroup, label: Optional[str] = None) -> Extension:
    if H.parent is not G and H.parent != G:
        raise ValueError("H is not a subgroup of G")
    if not H.is_normal():
        raise NotNormal("H is not normal in G")
    H = Subgroup(G, H.members)
    Q, proj = quotient(G, H, label=f"{G.label}/H" if G.label else None)
    section = [-1] * Q.order
    for g in range(G.order):
        if section[proj(g)] < 0:
            section[proj(g)] = g
    return Extension(G, H, Q, proj, tuple(section), label)


def _cache(E, key, build):
    store = E.__dict__.setdefault("_memo", {})
    if key not in store:
        store[key] = build()
    return store[key]


def factor_system(E: Extension, section: Optional[Sequence[int]] = None) -> FactorSystem:
    """phi(q) = conjugation by u(q) on H; f(q, q') = u(q) u(q') u(qq')^-1."""
    if section is None:
        return _cache(E, "factor_system", lambda: factor_system(E, E.section))
    u = tuple(section)
    if u[0] != 0 or any(E.proj(u[q]) != q for q in range(E.Q.order)):
        raise ValueError("not a normalised section")
    G = E.G
    t, inv = G.table, G.inverses
    pos, emb = E.h_pos, E.h_embed
    qt = E.Q.table
    phi = [tuple(pos[G.conj(u[q], x)] for x in emb) for q in range(E.Q.order)]
    f = [
        tuple(pos[t[t[u[q1]][u[q2]]][inv[u[qt[q1][q2]]]]] for q2 in range(E.Q.order))
        for q1 in range(E.Q.order)
    ]
    return FactorSystem(E.h_group, E.Q, phi, f)


def outer_action_of(fs: FactorSystem) -> OuterAction:
    out = out_group(aut_group(fs.H))
    return OuterAction(fs.Q, out, tuple(out.class_of(p) for p in fs.phi))


def outer_action(E: Extension) -> OuterAction:
    """Phi: Q -> Out(H), checked against a second section."""

    def build():
        oa = outer_action_of(factor_system(E))
        alt = list(E.section)
        for g in range(E.G.order):
            q = E.proj(g)
            if q != 0:
                alt[q] = max(alt[q], g)
        other = outer_action_of(factor_system(E, alt))
        if other.classes != oa.classes:
            raise VerificationFailure("outer action depends on the section")
        return oa

    return _cache(E, "outer_action", build)


def realize(fs: FactorSystem, label: Optional[str] = None) -> Extension:
    """The extension on H x Q (H index major) with the factor-system product."""
    problems = fs.problems()
    if problems:
        raise InvalidFactorSystem("; ".join(problems))
    H, Q = fs.H, fs.Q
    ht, qt = H.table, Q.table
    nh, m = H.order, Q.order
    phi, f = fs.phi, fs.f
    table = [
        [ht[ht[h1][phi[q1][h2]]][f[q1][q2]] * m + qt[q1][q2] for h2 in range(nh) for q2 in range(m)]
        for h1 in range(nh)
        for q1 in range(m)
    ]
    try:
        G = Group(table, label, check=True)
    except NotAGroup as exc:
        raise InvalidFactorSystem(str(exc)) from exc
    Hsub = Subgroup(G, tuple(h * m for h in range(nh)))
    proj = Hom(G, Q, tuple(x % m for x in range(G.order)))
    E = Extension(G, Hsub, Q, proj, tuple(range(m)), label)
    E.__dict__["_memo"] = {"factor_system": fs}
    return E


def _as_images(x) -> tuple:
    if isinstance(x, Hom):
        return x.images
    return tuple(x)


def pullback(beta: Union[Hom, Sequence[int]], fs: FactorSystem) -> FactorSystem:
    """beta^* (phi, f) = (phi o beta, f o (beta x beta)) over the domain of beta."""
    if isinstance(beta, Hom):
        if beta.codomain != fs.Q:
            raise ValueError("beta does not land in Q")
        Qp = beta.domain
    else:
        Qp = fs.Q
    b = _as_images(beta)
    phi = [fs.phi[b[q]] for q in range(Qp.order)]
    f = [tuple(fs.f[b[q1]][b[q2]] for q2 in range(Qp.order)) for q1 in range(Qp.order)]
    return FactorSystem(fs.H, Qp, phi, f)


def pushout(alpha: Sequence[int], fs: FactorSystem) -> FactorSystem:
    """alpha_* (phi, f) = (alpha phi(.) alpha^-1, alpha o f)."""
    a = _as_images(alpha)
    ai = perms.inverse(a)
    phi = [tuple(a[p[ai[h]]] for h in range(fs.H.order)) for p in fs.phi]
    f = [tuple(a[x] for x in row) for row in fs.f]
    return FactorSystem(fs.H, fs.Q, phi, f)


# ---------------------------------------------------------------------------
# sigma search


def satisfies_sigma_equation(fs, fs2, alpha, beta, sigma) -> bool:
    """Direct check of the morphism equation for every (h, q, q').

    sigma(q) phi'(beta q)[alpha(h) sigma(q')] f'(beta q, beta q')
        == alpha(phi(q) h) alpha(f(q, q')) sigma(q q')
    """
    H, Q = fs.H, fs.Q
    ht, qt = H.table, Q.table
    a, b = _as_images(alpha), _as_images(beta)
    for h in range(H.order):
        for q1 in range(Q.order):
            for q2 in range(Q.order):
                inner = ht[a[h]][sigma[q2]]
                lhs = ht[ht[sigma[q1]][fs2.phi[b[q1]][inner]]][fs2.f[b[q1]][b[q2]]]
                rhs = ht[ht[a[fs.phi[q1][h]]][a[fs.f[q1][q2]]]][sigma[qt[q1][q2]]]
                if lhs != rhs:
                    return False
    return True


def _check_same_base(fs, fs2):
    if fs.H != fs2.H or fs.Q != fs2.Q:
        raise ValueError("factor systems live over different (H, Q)")


def connecting_sigmas(fs, fs2, alpha=None, beta=None, *, first: bool = False) -> list:
    """All normalised sigma: Q -> H making (alpha, beta) a morphism fs -> fs2.

    Uses two facts: fixing q' = 1 forces c_sigma(q) phi'(beta q) alpha = alpha phi(q),
    which leaves a coset of zH per q; fixing h = 1 determines sigma on all of Q
    from its values on generators.
    """
    _check_same_base(fs, fs2)
    H, Q = fs.H, fs.Q
    nh, nq = H.order, Q.order
    a = tuple(range(nh)) if alpha is None else _as_images(alpha)
    b = tuple(range(nq)) if beta is None else _as_images(beta)
    ht, qt = H.table, Q.table
    hinv = H.inverses
    hgens = H.generators
    phi, f, phi2, f2 = fs.phi, fs.f, fs2.phi, fs2.f

    cand = [(0,)]
    for q in range(1, nq):
        src = [phi2[b[q]][a[h]] for h in hgens]
        dst = [a[phi[q][h]] for h in hgens]
        xs = tuple(
            x for x in range(nh) if all(ht[ht[x][s]][hinv[x]] == d for s, d in zip(src, dst))
        )
        if not xs:
            return []
        cand.append(xs)
    cand_sets = [frozenset(c) for c in cand]

    qgens = Q.generators
    space = 1
    for g in qgens:
        space *= len(cand[g])
    cap = get_config().sigma_cap
    if space > cap:
        raise SearchCapExceeded(f"sigma search space {space} exceeds cap {cap}")

    tree = []
    seen = {0}
    queue = [0]
    for x in queue:
        for i, g in enumerate(qgens):
            y = qt[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
                tree.append((y, x, i))

    ainv_f = [[hinv[a[f[q1][q2]]] for q2 in range(nq)] for q1 in range(nq)]
    results = []
    sigma = [0] * nq
    for choice in itertools.product(*(cand[g] for g in qgens)):
        for (y, x, i) in tree:
            if x == 0:
                sigma[y] = choice[i]
                continue
            g = qgens[i]
            # sigma(xg) = alpha(f(x,g))^-1 sigma(x) phi'(beta x)(sigma(g)) f'(beta x, beta g)
            val = ht[sigma[x]][phi2[b[x]][sigma[g]]]
            val = ht[val][f2[b[x]][b[g]]]
            sigma[y] = ht[ainv_f[x][g]][val]
        if any(sigma[q] not in cand_sets[q] for q in range(nq)):
            continue
        ok = True
        for q1 in range(nq):
            s1 = sigma[q1]
            p2 = phi2[b[q1]]
            row2 = f2[b[q1]]
            for q2 in range(nq):
                lhs = ht[ht[s1][p2[sigma[q2]]]][row2[b[q2]]]
                rhs = ht[a[f[q1][q2]]][sigma[qt[q1][q2]]]
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(tuple(sigma))
            if first:
                return results
    results.sort()
    return results


@dataclass(frozen=True)
class SigmaWitness:
    sigma: tuple
    gamma: Hom


def sigma_to_gamma(fs, fs2, alpha, beta, sigma) -> tuple:
    """Images of gamma(h, q) = (alpha(h) sigma(q), beta(q)) in realised-group indices."""
    H, Q = fs.H, fs.Q
    m = Q.order
    ht = H.table
    a, b = _as_images(alpha), _as_images(beta)
    return tuple(ht[a[h]][sigma[q]] * m + b[q] for h in range(H.order) for q in range(m))


def find_connecting_sigma(fs, fs2, alpha=None, beta=None) -> Optional[SigmaWitness]:
    """Lexicographically smallest sigma plus the induced gamma, or None."""
    sols = connecting_sigmas(fs, fs2, alpha, beta)
    if not sols:
        return None
    nh, nq = fs.H.order, fs.Q.order
    a = tuple(range(nh)) if alpha is None else _as_images(alpha)
    b = tuple(range(nq)) if beta is None else _as_images(beta)
    sigma = sols[0]
    E1, E2 = fs.extension, fs2.extension
    gamma = Hom(E1.G, E2.G, sigma_to_gamma(fs, fs2, a, b, sigma))
    if not gamma.is_hom() or not gamma.is_bijective():
        raise VerificationFailure("sigma solution does not induce an isomorphism")
    return SigmaWitness(sigma, gamma)


def are_equivalent(fs, fs2) -> bool:
    return bool(connecting_sigmas(fs, fs2, first=True))


# ---------------------------------------------------------------------------
# extending (alpha, beta) to automorphisms of G


def is_compatible(oa: OuterAction, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Phi(beta q) == [alpha] Phi(q) [alpha]^-1 for all q."""
    out = oa.target
    ca = out.class_of(_as_images(alpha))
    b = _as_images(beta)
    return all(oa.classes[b[q]] == out.conj(ca, oa.classes[q]) for q in range(oa.Q.order))


@dataclass(frozen=True)
class Extendability:
    extends: bool
    gamma: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.extends


def gamma_from_sigma(E: Extension, alpha, beta, sigma) -> tuple:
    """Transport gamma(h, q) = (alpha(h) sigma(q), beta(q)) to G via g = h u(q)."""
    a, b = _as_images(alpha), _as_images(beta)
    ht = E.h_group.table
    images = []
    for g in range(E.G.order):
        h, q = E.decompose(g)
        images.append(E.compose(ht[a[h]][sigma[q]], b[q]))
    return tuple(images)


def extends(E: Extension, alpha, beta) -> Extendability:
    """Whether (alpha, beta) is induced by some gamma in Aut(G); gamma if so."""
    fs = factor_system(E)
    a, b = _as_images(alpha), _as_images(beta)
    if not is_compatible(outer_action(E), a, b):
        raise IncompatiblePair("(alpha, beta) does not satisfy Phi beta = c_[alpha] Phi")
    lhs = pushout(a, fs)
    rhs = pullback(b, fs)
    sols = connecting_sigmas(lhs, rhs)
    if not sols:
        return Extendability(False)
    gamma = gamma_from_sigma(E, a, b, sols[0])
    G = E.G
    hom = Hom(G, G, gamma)
    if not hom.is_hom() or not hom.is_bijective():
        raise VerificationFailure("constructed gamma is not an automorphism")
    emb = E.h_embed
    if any(gamma[emb[h]] != emb[a[h]] for h in range(E.H.order)):
        raise VerificationFailure("gamma does not restrict to alpha")
    if any(E.proj(gamma[g]) != b[E.proj(g)] for g in range(G.order)):
        raise VerificationFailure("gamma does not induce beta")
    return Extendability(True, gamma)


# ---------------------------------------------------------------------------
# splitting


def splitting(fs: FactorSystem) -> Optional[tuple]:
    """A normalised tau with tau(qq') = tau(q) phi(q)(tau(q')) f(q, q'), or None."""
    H, Q = fs.H, fs.Q
    ht, qt = H.table, Q.table
    nh, nq = H.order, Q.order
    qgens = Q.generators
    cap = get_config().sigma_cap
    if nh ** len(qgens) > cap:
        raise SearchCapExceeded(f"tau search space {nh ** len(qgens)} exceeds cap {cap}")
    tree = []
    seen = {0}
    queue = [0]
    for x in queue:
        for i, g in enumerate(qgens):
            y = qt[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
                tree.append((y, x, i))
    phi, f = fs.phi, fs.f
    tau = [0] * nq
    for choice in itertools.product(range(nh), repeat=len(qgens)):
        for (y, x, i) in tree:
            if x == 0:
                tau[y] = choice[i]
            else:
                g = qgens[i]
                tau[y] = ht[ht[tau[x]][phi[x][tau[g]]]][f[x][g]]
        if all(
            tau[qt[q1][q2]] == ht[ht[tau[q1]][phi[q1][tau[q2]]]][f[q1][q2]]
            for q1 in range(nq)
            for q2 in range(nq)
        ):
            return tuple(tau)
    return None


def is_split(fs: FactorSystem) -> bool:
    return splitting(fs) is not None


def complement_exists(E: Extension) -> bool:
    """Brute-force oracle: a subgroup meeting H trivially that maps onto Q."""
    from .groups import subgroup_generated

    G = E.G
    for gens in itertools.product(range(G.order), repeat=len(E.Q.generators)):
        if any(E.proj(g) != q for g, q in zip(gens, E.Q.generators)):
            continue
        S = subgroup_generated(G, gens)
        if S.order == E.Q.order:
            return True
    return False
