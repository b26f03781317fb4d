"""Q-modules and cohomology in degrees 0, 1, 2.

Conventions: left action, normalised inhomogeneous cochains.  A cochain is a
flat tuple of M-element indices, indexed by Q (degree 1) or by Q x Q row-major
(degree 2), with value 0 whenever an argument is the identity.

    d0 m (q)          = q.m - m
    d1 s (q, q')      = q.s(q') - s(qq') + s(q)
    d2 c (q, q', q'') = q.c(q', q'') - c(qq', q'') + c(q, q'q'') - c(q, q')

Z^n is computed either by pruned exhaustive enumeration or by Smith normal
form over Z/p^K after splitting M into prime-power cyclic factors.  B^n is
materialised as a set, so both paths share the same canonical representatives
(the lexicographically smallest cocycle of each coset).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from . import linalg, perms
from .config import get_config
from .errors import ActionIncompatible, NotACocycle, NotSameFiber, SearchCapExceeded
from .groups import Group, Subgroup, center


@dataclass(eq=False)
class QModule:
    """Abelian group M with Q acting by ``action[q]`` (image tuples)."""

    Q: Group
    M: Group
    action: tuple
    embedding: Optional[tuple] = None  # M index -> index in an ambient group
    label: Optional[str] = None

    def __post_init__(self):
        self.action = tuple(tuple(a) for a in self.action)
        if self.embedding is not None:
            self.embedding = tuple(self.embedding)

    def __repr__(self) -> str:
        return f"<QModule |Q|={self.Q.order}, |M|={self.M.order}>"

    def validate(self) -> None:
        M, Q = self.M, self.Q
        if not M.is_abelian:
            raise ActionIncompatible("module is not abelian")
        t = M.table
        for a in self.action:
            if not perms.is_permutation(a) or any(
                a[t[x][y]] != t[a[x]][a[y]] for x in range(M.order) for y in M.generators
            ):
                raise ActionIncompatible("action entry is not an automorphism")
        if self.action[0] != tuple(range(M.order)):
            raise ActionIncompatible("identity does not act trivially")
        qt = Q.table
        for a in range(Q.order):
            for b in Q.generators:
                if perms.compose(self.action[a], self.action[b]) != self.action[qt[a][b]]:
                    raise ActionIncompatible("action is not a homomorphism")

    def is_trivial(self) -> bool:
        ident = tuple(range(self.M.order))
        return all(a == ident for a in self.action)

    def restrict(self, sub: Subgroup) -> "QModule":
        """The same M viewed as a module over a subgroup of Q."""
        K, emb = sub.as_group()
        return QModule(K, self.M, tuple(self.action[q] for q in emb), self.embedding)

    @cached_property
    def basis(self) -> "AbelianBasis":
        return abelian_basis(self.M)

    @cached_property
    def cohomology_cache(self) -> dict:
        return {}


def conjugation_module(G: Group, A: Subgroup, Q: Optional[Group] = None, lift=None) -> QModule:
    """Abelian normal subgroup A of G as a module; Q acts through ``lift`` (Q index -> G index)."""
    Agrp, emb = A.as_group()
    pos = {g: i for i, g in enumerate(emb)}
    if Q is None:
        Q, lift = G, tuple(range(G.order))
    action = tuple(tuple(pos[G.conj(lift[q], a)] for a in emb) for q in range(Q.order))
    return QModule(Q, Agrp, action, emb)


def center_module(obj) -> QModule:
    """zH as a Q-module, from an Extension or a FactorSystem."""
    from .extensions import Extension, FactorSystem, factor_system

    if isinstance(obj, Extension):
        fs = factor_system(obj)
        mod = _center_module_fs(fs)
        alt = list(obj.section)
        for g in range(obj.G.order):
            q = obj.proj(g)
            if q:
                alt[q] = max(alt[q], g)
        other = _center_module_fs(factor_system(obj, alt))
        if other.action != mod.action:
            from .errors import VerificationFailure

            raise VerificationFailure("action on zH depends on the section")
        return mod
    if isinstance(obj, FactorSystem):
        return _center_module_fs(obj)
    raise TypeError("expected an Extension or FactorSystem")


def _center_module_fs(fs) -> QModule:
    cache = fs.__dict__.setdefault("_center_module", [])
    if cache:
        return cache[0]
    H = fs.H
    Z = center(H)
    Zg, emb = Z.as_group(f"z({H.label})" if H.label else None)
    pos = {h: i for i, h in enumerate(emb)}
    action = tuple(tuple(pos[fs.phi[q][h]] for h in emb) for q in range(fs.Q.order))
    mod = QModule(fs.Q, Zg, action, emb)
    cache.append(mod)
    return mod


# ---------------------------------------------------------------------------
# abelian group decomposition


@dataclass(frozen=True)
class AbelianBasis:
    """Prime-power cyclic basis of a finite abelian group with coordinate tables."""

    M: Group
    elements: tuple  # basis element indices
    orders: tuple  # prime-power orders
    primes: tuple
    coords: tuple  # element index -> coordinate tuple
    lookup: dict  # coordinate tuple -> element index

    def indices_for(self, p: int) -> list:
        return [i for i, q in enumerate(self.primes) if q == p]


def _factor(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_basis(M: Group) -> AbelianBasis:
    cached = M.__dict__.get("_abelian_basis")
    if cached is not None:
        return cached
    if not M.is_abelian:
        raise ActionIncompatible("group is not abelian")
    gens = list(M.generators)
    k = len(gens)
    t = M.table
    coord = {0: (0,) * k}
    queue = [0]
    rows = []
    for x in queue:
        for i, g in enumerate(gens):
            y = t[x][g]
            step = list(coord[x])
            step[i] += 1
            if y not in coord:
                coord[y] = tuple(step)
                queue.append(y)
            else:
                rows.append([a - b for a, b in zip(step, coord[y])])
    diag, V = linalg.integer_snf_columns(rows, k)
    elements, orders, primes = [], [], []
    for j in range(k):
        d = diag[j]
        if d == 1:
            continue
        y = 0
        for i in range(k):
            y = t[y][M.power(gens[i], V[i][j] % M.order)]
        for p, e in sorted(_factor(d).items()):
            elements.append(M.power(y, d // p**e))
            orders.append(p**e)
            primes.append(p)
    order_idx = sorted(range(len(elements)), key=lambda i: (primes[i], orders[i]))
    elements = [elements[i] for i in order_idx]
    orders = [orders[i] for i in order_idx]
    primes = [primes[i] for i in order_idx]
    coords = [None] * M.order
    lookup = {}
    for vec in itertools.product(*(range(o) for o in orders)):
        x = 0
        for e, c in zip(elements, vec):
            x = t[x][M.power(e, c)]
        coords[x] = vec
        lookup[vec] = x
    if any(c is None for c in coords):
        raise ArithmeticError("abelian decomposition failed")
    basis = AbelianBasis(M, tuple(elements), tuple(orders), tuple(primes), tuple(coords), lookup)
    M.__dict__["_abelian_basis"] = basis
    return basis


# ---------------------------------------------------------------------------
# cochain arithmetic


def _positions(Q: Group, degree: int) -> list:
    nz = range(1, Q.order)
    return list(itertools.product(nz, repeat=degree))


def _flat(Q: Group, pos: tuple) -> int:
    out = 0
    for q in pos:
        out = out * Q.order + q
    return out


def zero_cochain(mod: QModule, degree: int) -> tuple:
    return (0,) * (mod.Q.order**degree)


def cochain_add(mod: QModule, a: Sequence[int], b: Sequence[int]) -> tuple:
    t = mod.M.table
    return tuple(t[x][y] for x, y in zip(a, b))


def cochain_neg(mod: QModule, a: Sequence[int]) -> tuple:
    inv = mod.M.inverses
    return tuple(inv[x] for x in a)


def coboundary(mod: QModule, degree: int, c) -> tuple:
    """d^degree applied to a normalised cochain (degree 0: c is an M element)."""
    Q, M = mod.Q, mod.M
    t, inv = M.table, M.inverses
    qt = Q.table
    act = mod.action
    n = Q.order
    if degree == 0:
        return tuple(t[act[q][c]][inv[c]] for q in range(n))
    if degree == 1:
        out = []
        for a in range(n):
            for b in range(n):
                out.append(t[t[act[a][c[b]]][inv[c[qt[a][b]]]]][c[a]])
        return tuple(out)
    if degree == 2:
        out = []
        for a in range(n):
            for b in range(n):
                for d in range(n):
                    x = act[a][c[b * n + d]]
                    x = t[x][inv[c[qt[a][b] * n + d]]]
                    x = t[x][c[a * n + qt[b][d]]]
                    x = t[x][inv[c[a * n + b]]]
                    out.append(x)
        return tuple(out)
    raise ValueError("degree must be 0, 1 or 2")


def is_normalised(mod: QModule, degree: int, c) -> bool:
    n = mod.Q.order
    if degree == 1:
        return len(c) == n and c[0] == 0
    return len(c) == n * n and all(c[q] == 0 and c[q * n] == 0 for q in range(n))


def is_cocycle(mod: QModule, degree: int, c) -> bool:
    return is_normalised(mod, degree, c) and not any(coboundary(mod, degree, c))


def _constraints(mod: QModule, degree: int) -> list:
    """Cocycle identities as lists of (acting q or None, sign, flat position)."""
    Q = mod.Q
    qt = Q.table
    n = Q.order
    cons = []
    if degree == 1:
        for a, b in itertools.product(range(1, n), repeat=2):
            terms = [(a, 1, b), (None, -1, qt[a][b]), (None, 1, a)]
            cons.append([tm for tm in terms if tm[2] != 0])
    else:
        for a, b, d in itertools.product(range(1, n), repeat=3):
            raw = [
                (a, 1, (b, d)),
                (None, -1, (qt[a][b], d)),
                (None, 1, (a, qt[b][d])),
                (None, -1, (a, b)),
            ]
            terms = [(q, s, x * n + y) for q, s, (x, y) in raw if x and y]
            cons.append(terms)
    return cons


def enumerate_cocycles(mod: QModule, degree: int, cap: Optional[int] = None) -> list:
    """All normalised n-cocycles in lexicographic order, by backtracking.

    Each cocycle identity is tested as soon as its last position is assigned.
    """
    cap = get_config().cochain_cap if cap is None else cap
    Q, M = mod.Q, mod.M
    n = Q.order
    t, inv = M.table, M.inverses
    act = mod.action
    order = [_flat(Q, p) for p in _positions(Q, degree)]
    rank = {x: i for i, x in enumerate(order)}
    checks = [[] for _ in order]
    for terms in _constraints(mod, degree):
        if not terms:
            continue
        last = max(rank[x] for _, _, x in terms)
        checks[last].append(terms)
    c = [0] * (n**degree)
    out = []

    def holds(terms):
        acc = 0
        for q, s, x in terms:
            v = c[x] if q is None else act[q][c[x]]
            acc = t[acc][v if s > 0 else inv[v]]
        return acc == 0

    def rec(i):
        if i == len(order):
            out.append(tuple(c))
            if len(out) > cap:
                raise SearchCapExceeded(f"more than {cap} cocycles")
            return
        slot = order[i]
        for m in range(M.order):
            c[slot] = m
            if all(holds(tm) for tm in checks[i]):
                rec(i + 1)
        c[slot] = 0

    rec(0)
    return out


def _boundary_set(mod: QModule, degree: int, cap: int) -> frozenset:
    """B^degree as an explicit set, closed from images of basis cochains."""
    Q = mod.Q
    n = Q.order
    basis = mod.basis
    gens = []
    if degree == 1:
        gens = [coboundary(mod, 0, e) for e in basis.elements]
    else:
        for q in range(1, n):
            for e in basis.elements:
                s = [0] * n
                s[q] = e
                gens.append(coboundary(mod, 1, tuple(s)))
    gens = sorted(set(g for g in gens if any(g)))
    return frozenset(_span(mod, gens, degree, cap))


def _span(mod: QModule, gens: list, degree: int, cap: int) -> set:
    zero = zero_cochain(mod, degree)
    seen = {zero}
    queue = [zero]
    for x in queue:
        for g in gens:
            y = cochain_add(mod, x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise SearchCapExceeded(f"subgroup of cochains exceeds {cap}")
                queue.append(y)
    return seen


# ---------------------------------------------------------------------------
# linear algebra path


def _coboundary_matrix(mod: QModule, degree: int, p: int) -> tuple:
    """Integer matrix of d^degree on the p-primary coordinates, target rows scaled into Z/p^K.

    For degree 2 only the identities with last argument a generator are used;
    they cut out the same cocycles.
    """
    basis = mod.basis
    idx = basis.indices_for(p)
    ks = [basis.orders[i] for i in idx]
    K = max(_factor(o)[p] for o in ks)
    r = len(idx)
    Q = mod.Q
    n = Q.order
    qt = Q.table
    act_mats = []
    for q in range(n):
        mat = np.zeros((r, r), dtype=np.int64)
        for j, bj in enumerate(idx):
            img = basis.coords[mod.action[q][basis.elements[bj]]]
            for i, bi in enumerate(idx):
                mat[i, j] = img[bi]
        act_mats.append(mat)
    dom = {x: i for i, x in enumerate(_flat(Q, p_) for p_ in _positions(Q, degree))}
    if degree == 1:
        rows_pos = list(itertools.product(range(1, n), repeat=2))
        terms_for = lambda a, b: [(a, 1, b), (None, -1, qt[a][b]), (None, 1, a)]
    else:
        rows_pos = [(a, b, g) for a in range(1, n) for b in range(1, n) for g in Q.generators]

        def terms_for(a, b, d):
            raw = [
                (a, 1, (b, d)),
                (None, -1, (qt[a][b], d)),
                (None, 1, (a, qt[b][d])),
                (None, -1, (a, b)),
            ]
            return [(q, s, x * n + y) for q, s, (x, y) in raw if x and y]

    A = np.zeros((len(rows_pos) * r, len(dom) * r), dtype=np.int64)
    ident = np.eye(r, dtype=np.int64)
    for ri, rp in enumerate(rows_pos):
        for q, s, x in terms_for(*rp):
            if degree == 1 and x == 0:
                continue
            ci = dom[x]
            blk = act_mats[q] if q is not None else ident
            A[ri * r : (ri + 1) * r, ci * r : (ci + 1) * r] += s * blk
    scale = np.array([p ** (K - _factor(o)[p]) for o in ks] * len(rows_pos), dtype=np.int64)
    A = A * scale[:, None]
    return A, K, idx, ks, list(dom)


def linalg_cocycle_data(mod: QModule, degree: int) -> tuple:
    """(|Z^n|, generators of Z^n as cochains) via local Smith normal forms."""
    basis = mod.basis
    if not basis.elements:
        return 1, []
    z_order = 1
    gens = []
    size = mod.Q.order**degree
    for p in sorted(set(basis.primes)):
        A, K, idx, ks, dom = _coboundary_matrix(mod, degree, p)
        r = len(idx)
        if A.shape[1] == 0:
            continue
        snf = linalg.local_snf(A, p, K)
        rel = 1
        for o in ks:
            rel *= p ** (K - _factor(o)[p])
        rel **= len(dom)
        z_order *= snf.kernel_order() // rel
        for vec in snf.kernel_generators():
            c = [0] * size
            for pi, x in enumerate(dom):
                full = [0] * len(basis.elements)
                for j, bj in enumerate(idx):
                    full[bj] = int(vec[pi * r + j]) % ks[j]
                c[x] = basis.lookup[tuple(full)]
            c = tuple(c)
            if any(c):
                gens.append(c)
    return z_order, sorted(set(gens))


# ---------------------------------------------------------------------------
# cohomology groups


@dataclass(eq=False)
class CohomologyGroup:
    module: QModule
    degree: int
    classes: tuple  # canonical representatives, sorted
    z_order: int
    b_order: int
    boundaries: frozenset = field(repr=False)
    method: str = "enumerate"

    def __post_init__(self):
        self._index = {c: i for i, c in enumerate(self.classes)}
        self._memo = dict(self._index)

    @property
    def order(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __repr__(self) -> str:
        return f"<H^{self.degree} order {self.order} (|Z|={self.z_order}, |B|={self.b_order})>"

    def canonical(self, cocycle: Sequence[int]) -> tuple:
        mod = self.module
        return min(cochain_add(mod, cocycle, b) for b in self.boundaries)

    def class_of(self, cocycle: Sequence[int]) -> int:
        c = tuple(cocycle)
        hit = self._memo.get(c)
        if hit is not None:
            return hit
        if not is_cocycle(self.module, self.degree, c):
            raise NotACocycle("not a normalised cocycle")
        rep = self.canonical(c)
        i = self._index[rep]
        self._memo[c] = i
        return i

    def representative(self, i: int) -> tuple:
        return self.classes[i]

    def add(self, i: int, j: int) -> int:
        return self.class_of(cochain_add(self.module, self.classes[i], self.classes[j]))

    def neg(self, i: int) -> int:
        return self.class_of(cochain_neg(self.module, self.classes[i]))

    def is_coboundary(self, cocycle) -> bool:
        return tuple(cocycle) in self.boundaries

    @cached_property
    def group_view(self) -> Group:
        n = self.order
        return Group([[self.add(i, j) for j in range(n)] for i in range(n)], f"H{self.degree}")


def _classes_from_generators(mod, degree, z_order, gens, boundaries) -> tuple:
    target = z_order // len(boundaries)
    first = {}
    reps = []

    def canon(c):
        return min(cochain_add(mod, c, b) for b in boundaries)

    zero = zero_cochain(mod, degree)
    reps.append(zero)
    seen = {zero}
    queue = [zero]
    for x in queue:
        if len(reps) == target:
            break
        for g in gens:
            y = canon(cochain_add(mod, x, g))
            if y not in seen:
                seen.add(y)
                reps.append(y)
                queue.append(y)
    if len(reps) != target:
        raise ArithmeticError("cocycle generators do not span Z")
    return tuple(sorted(reps))


_SHARED: dict = {}
_SHARED_LIMIT = 256


def cohomology(mod: QModule, degree: int, method: Optional[str] = None) -> CohomologyGroup:
    """H^degree (1 or 2) with lexicographically minimal coset representatives.

    ``method`` is "enumerate", "linalg" or None (enumerate when the raw
    normalised cochain space fits under the cochain cap).
    """
    if degree not in (1, 2):
        raise ValueError("degree must be 1 or 2")
    cfg = get_config()
    cap = cfg.cochain_cap
    space = mod.M.order ** ((mod.Q.order - 1) ** degree)
    if method is None:
        method = "enumerate" if space <= cap else "linalg"
    key = (degree, method, cap)
    hit = mod.cohomology_cache.get(key)
    if hit is not None:
        return hit
    # modules rebuilt from equal data (e.g. for each acted-on factor system) share results
    shared_key = (mod.Q.table, mod.M.table, mod.action, mod.embedding, key)
    hit = _SHARED.get(shared_key)
    if hit is not None:
        mod.cohomology_cache[key] = hit
        return hit
    boundaries = _boundary_set(mod, degree, cap)
    if method == "enumerate":
        cocycles = enumerate_cocycles(mod, degree, cap)
        z_order = len(cocycles)
        reps = []
        claimed = set()
        for z in cocycles:
            if z in claimed:
                continue
            reps.append(z)
            for b in boundaries:
                claimed.add(cochain_add(mod, z, b))
        classes = tuple(reps)
    elif method == "linalg":
        z_order, gens = linalg_cocycle_data(mod, degree)
        classes = _classes_from_generators(mod, degree, z_order, gens, boundaries)
    else:
        raise ValueError(f"unknown method {method!r}")
    if z_order % len(boundaries):
        raise ArithmeticError("|B| does not divide |Z|")
    H = CohomologyGroup(mod, degree, classes, z_order, len(boundaries), boundaries, method)
    mod.cohomology_cache[key] = H
    if len(_SHARED) >= _SHARED_LIMIT:
        _SHARED.pop(next(iter(_SHARED)))
    _SHARED[shared_key] = H
    return H


def h0(mod: QModule) -> Subgroup:
    """Fixed points M^Q."""
    fixed = tuple(m for m in range(mod.M.order) if all(a[m] == m for a in mod.action))
    return Subgroup(mod.M, fixed)


def h1(mod: QModule, method: Optional[str] = None) -> CohomologyGroup:
    return cohomology(mod, 1, method)


def h2(mod: QModule, method: Optional[str] = None) -> CohomologyGroup:
    return cohomology(mod, 2, method)


def z1(mod: QModule, method: Optional[str] = None) -> list:
    """All 1-cocycles, sorted."""
    H = h1(mod, method)
    return sorted(cochain_add(mod, c, b) for c in H.classes for b in H.boundaries)


def b1(mod: QModule) -> list:
    return sorted(_boundary_set(mod, 1, get_config().cochain_cap))


def z2(mod: QModule, method: Optional[str] = None) -> list:
    H = h2(mod, method)
    return sorted(cochain_add(mod, c, b) for c in H.classes for b in H.boundaries)


def b2(mod: QModule) -> list:
    return sorted(_boundary_set(mod, 2, get_config().cochain_cap))


# ---------------------------------------------------------------------------
# torsor structure on extension classes


def torsor_act(fs, c: Sequence[int]):
    """(phi, f * c): twist a factor system by a central 2-cocycle."""
    from .extensions import FactorSystem

    mod = center_module(fs)
    c = tuple(c)
    if not is_cocycle(mod, 2, c):
        raise NotACocycle("twisting cochain is not a normalised 2-cocycle")
    n = fs.Q.order
    ht = fs.H.table
    emb = mod.embedding
    f = [tuple(ht[fs.f[a][b]][emb[c[a * n + b]]] for b in range(n)) for a in range(n)]
    return FactorSystem(fs.H, fs.Q, fs.phi, f)


def enumerate_classes(fs, verify: bool = True) -> list:
    """One factor system per class of the fibre over the outer action of ``fs``."""
    from .extensions import are_equivalent

    H2 = h2(center_module(fs))
    out = [torsor_act(fs, rep) for rep in H2.classes]
    if verify:
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                if are_equivalent(out[i], out[j]):
                    from .errors import VerificationFailure

                    raise VerificationFailure("torsor action is not free")
    return out


def torsor_diff(fs, fs2) -> int:
    """Index of the H^2 class zeta with fs equivalent to torsor_act(fs2, zeta)."""
    from .extensions import are_equivalent

    if fs.H != fs2.H or fs.Q != fs2.Q or fs.outer.classes != fs2.outer.classes:
        raise NotSameFiber("factor systems have different outer actions")
    H2 = h2(center_module(fs2))
    for i, rep in enumerate(H2.classes):
        if are_equivalent(fs, torsor_act(fs2, rep)):
            return i
    raise NotSameFiber("no class connects the two factor systems")


def restrict_to_module(mod: QModule, alpha: Sequence[int]) -> tuple:
    """alpha (an automorphism of the ambient group) in module indices."""
    pos = {h: i for i, h in enumerate(mod.embedding)}
    try:
        return tuple(pos[alpha[h]] for h in mod.embedding)
    except KeyError as exc:
        raise ActionIncompatible("alpha does not preserve the module") from exc


def induced_cochain_map(mod: QModule, alpha_m: Sequence[int], beta: Sequence[int], degree: int):
    """c -> alpha^-1 o c o (beta x ... x beta) on cochains; alpha_m in module indices."""
    ai = perms.inverse(alpha_m)
    n = mod.Q.order
    if degree == 1:
        return lambda c: tuple(ai[c[beta[q]]] for q in range(n))
    return lambda c: tuple(ai[c[beta[a] * n + beta[b]]] for a in range(n) for b in range(n))


def induced_map(H: CohomologyGroup, alpha: Sequence[int], beta: Sequence[int]) -> tuple:
    """Class map [c] -> [alpha^-1 c (beta x beta)]; alpha given on the ambient group."""
    mod = H.module
    am = restrict_to_module(mod, alpha) if mod.embedding is not None else tuple(alpha)
    ai = perms.inverse(am)
    for q in range(mod.Q.order):
        lhs = perms.compose(ai, perms.compose(mod.action[beta[q]], am))
        if lhs != mod.action[q]:
            raise ActionIncompatible("(alpha, beta) does not respect the module action")
    fmap = induced_cochain_map(mod, am, beta, H.degree)
    for b in H.boundaries:
        if fmap(b) not in H.boundaries:
            raise ArithmeticError("induced map does not preserve coboundaries")
    return tuple(H.class_of(fmap(c)) for c in H.classes)


def induced_h2(alpha: Sequence[int], beta: Sequence[int], obj) -> tuple:
    """theta^* on H^2(Q, zH) for theta = (alpha, beta); obj is a module or factor system."""
    mod = obj if isinstance(obj, QModule) else center_module(obj)
    return induced_map(h2(mod), alpha, beta)
