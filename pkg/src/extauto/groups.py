"""Finite groups as Cayley tables over element indices 0..n-1.

The group law is written multiplicatively throughout and index 0 is
always the identity.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .config import get_config
from .errors import NotAGroup, NotNormal, OrderCapExceeded, SearchCapExceeded


class Group:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the index of ``a*b``.  Construct validated groups
    through :func:`from_cayley_table`; the constructor itself only checks
    the cheap invariants unless ``check=True``.
    """

    def __init__(self, table: Sequence[Sequence[int]], label: Optional[str] = None, *, check: bool = False):
        n = len(table)
        cap = get_config().order_cap
        if n > cap:
            raise OrderCapExceeded(f"group of order {n} exceeds order cap {cap}")
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.label = label
        if check:
            _validate(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        name = self.label or "Group"
        return f"<{name} of order {self.order}>"

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple:
        inv = [0] * self.order
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        t = self.table
        return t[t[g][x]][self.inverses[g]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        t = self.table
        inv = self.inverses
        return t[t[a][b]][t[inv[a]][inv[b]]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverses[a], -k
        result = 0
        for _ in range(k % self.element_orders[a]):
            result = self.table[result][a]
        return result

    @cached_property
    def element_orders(self) -> tuple:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def order_profile(self) -> tuple:
        return tuple(sorted(Counter(self.element_orders).items()))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        gens = self.generators
        return all(t[a][b] == t[b][a] for a in gens for b in gens)

    @cached_property
    def generators(self) -> tuple:
        return greedy_generators(self, range(self.order))

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def is_trivial(self) -> bool:
        return self.order == 1


def _validate(table) -> None:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n, n):
        raise NotAGroup("table is not square")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("table entry out of range")
    expected = np.arange(n)
    if not (arr[0] == expected).all() or not (arr[:, 0] == expected).all():
        raise NotAGroup("index 0 is not the identity")
    for i in range(n):
        if len(np.unique(arr[i])) != n:
            raise NotAGroup(f"row {i} is not a permutation")
        if len(np.unique(arr[:, i])) != n:
            raise NotAGroup(f"column {i} is not a permutation")
    for a in range(n):
        # (a*b)*c == a*(b*c) for all b, c
        lhs = arr[arr[a]]
        rhs = arr[a][arr]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            raise NotAGroup(f"associativity fails for ({a}, {b}, {c})")


def from_cayley_table(table: Sequence[Sequence[int]], label: Optional[str] = None) -> Group:
    """Validate a Cayley table and relabel so that the identity is index 0."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    cap = get_config().order_cap
    if n > cap:
        raise OrderCapExceeded(f"group of order {n} exceeds order cap {cap}")
    rows = [list(r) for r in table]
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NotAGroup(f"row {i} has length {len(r)}, expected {n}")
        for x in r:
            if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                raise NotAGroup(f"row {i} has entry {x!r} out of range")
    ident = None
    for e in range(n):
        if rows[e] == list(range(n)) and all(rows[a][e] == a for a in range(n)):
            ident = e
            break
    if ident is None:
        raise NotAGroup("no identity element")
    if ident != 0:
        swap = list(range(n))
        swap[0], swap[ident] = ident, 0
        rows = [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
    return Group(rows, label, check=True)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    @cached_property
    def generators(self) -> tuple:
        return greedy_generators(self.parent, self.members)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, h) in self.member_set for g in G.generators for h in self.generators)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    @cached_property
    def _as_group(self):
        pos = {x: i for i, x in enumerate(self.members)}
        t = self.parent.table
        table = [[pos[t[a][b]] for b in self.members] for a in self.members]
        return Group(table, None), self.members

    def as_group(self, label: Optional[str] = None):
        """(Group, embedding) with members relabelled 0..k-1 in sorted order."""
        grp, emb = self._as_group
        if label is not None and grp.label is None:
            grp.label = label
        return grp, emb


@dataclass(frozen=True, eq=False)
class Hom:
    domain: Group
    codomain: Group
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.domain.order:
            raise ValueError("images has wrong length")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_hom(self) -> bool:
        d, c, im = self.domain.table, self.codomain.table, self.images
        if im[0] != 0:
            return False
        return all(im[d[a][b]] == c[im[a]][im[b]] for a in range(len(d)) for b in self.domain.generators)

    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and len(set(self.images)) == self.domain.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, tuple(a for a, x in enumerate(self.images) if x == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, tuple(set(self.images)))

    def compose(self, other: "Hom") -> "Hom":
        """self after other."""
        return Hom(other.domain, self.codomain, tuple(self.images[x] for x in other.images))


def identity_hom(G: Group) -> Hom:
    return Hom(G, G, tuple(range(G.order)))


def greedy_generators(G: Group, members: Iterable[int]) -> tuple:
    """Add the smallest element not yet in the closure until the closure is everything."""
    members = sorted(members)
    gens: list = []
    span = {0}
    for x in members:
        if x not in span:
            gens.append(x)
            span = _close(G, span, gens)
    return tuple(gens)


def _close(G: Group, start: set, gens: Sequence[int]) -> set:
    t = G.table
    seen = set(start)
    seen.add(0)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = t[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def subgroup_generated(G: Group, elems: Iterable[int]) -> Subgroup:
    elems = list(elems)
    return Subgroup(G, tuple(_close(G, {0}, elems)))


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, (0,))


def whole(G: Group) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def center(G: Group) -> Subgroup:
    t = G.table
    gens = G.generators
    return Subgroup(G, tuple(z for z in range(G.order) if all(t[z][g] == t[g][z] for g in gens)))


def centralizer(G: Group, S: Subgroup | Iterable[int]) -> Subgroup:
    gens = S.generators if isinstance(S, Subgroup) else tuple(S)
    t = G.table
    return Subgroup(G, tuple(x for x in range(G.order) if all(t[x][s] == t[s][x] for s in gens)))


def normalizer(G: Group, S: Subgroup) -> Subgroup:
    return Subgroup(
        G, tuple(g for g in range(G.order) if all(G.conj(g, s) in S for s in S.generators))
    )


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return Subgroup(A.parent, tuple(A.member_set & B.member_set))


def product(A: Subgroup, B: Subgroup) -> Subgroup:
    """The subgroup generated by A and B (equal to AB when one is normal)."""
    return subgroup_generated(A.parent, A.generators + B.generators)


def cosets(G: Group, N: Subgroup) -> list:
    """Left cosets gN sorted by their minimal element index."""
    t = G.table
    assigned = [-1] * G.order
    out = []
    for g in range(G.order):
        if assigned[g] >= 0:
            continue
        coset = tuple(sorted(t[g][n] for n in N.members))
        for x in coset:
            assigned[x] = len(out)
        out.append(coset)
    return out


def quotient(G: Group, N: Subgroup, label: Optional[str] = None):
    """Quotient group on canonical coset representatives plus the projection."""
    if not N.is_normal():
        raise NotNormal("subgroup is not normal")
    cs = cosets(G, N)
    which = [0] * G.order
    for i, c in enumerate(cs):
        for x in c:
            which[x] = i
    reps = [c[0] for c in cs]
    t = G.table
    table = [[which[t[a][b]] for b in reps] for a in reps]
    Q = Group(table, label)
    return Q, Hom(G, Q, tuple(which))


def commutator_subgroup(G: Group, S: Optional[Subgroup] = None) -> Subgroup:
    """[S, S] as the normal closure in S of commutators of generators."""
    S = whole(G) if S is None else S
    gens = S.generators
    pool = sorted({G.commutator(a, b) for a in gens for b in gens})
    members = _close(G, {0}, pool)
    while True:
        extra = sorted({G.conj(g, x) for g in gens for x in pool} - members)
        if not extra:
            return Subgroup(G, tuple(members))
        pool += extra
        members = _close(G, {0}, pool)


def derived_series(G: Group) -> list:
    series = [whole(G)]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].order == 1


def derived_length(G: Group) -> Optional[int]:
    series = derived_series(G)
    if series[-1].order != 1:
        return None
    return len(series) - 1


def direct_product_table(A: Group, B: Group) -> list:
    """Index i*|B| + j, A-major."""
    m = B.order
    ta, tb = A.table, B.table
    return [
        [ta[a1][a2] * m + tb[b1][b2] for a2 in range(A.order) for b2 in range(m)]
        for a1 in range(A.order)
        for b1 in range(m)
    ]


# ---------------------------------------------------------------------------
# homomorphism search


class _Stages:
    """Breadth-first bookkeeping for extending generator images to a hom."""

    def __init__(self, G: Group, gens: Sequence[int]):
        t = G.table
        self.gens = tuple(gens)
        self.trees = []
        self.checks = []
        span: list = [0]
        in_span = {0}
        for j in range(len(gens)):
            old = set(in_span)
            tree = []
            queue = deque(span)
            while queue:
                x = queue.popleft()
                for i in range(j + 1):
                    y = t[x][gens[i]]
                    if y not in in_span:
                        in_span.add(y)
                        span.append(y)
                        queue.append(y)
                        tree.append((y, x, i))
            tree_edges = {(x, i) for (_, x, i) in tree}
            checks = []
            for x in span:
                for i in range(j + 1):
                    if x in old and i < j:
                        continue
                    if (x, i) in tree_edges:
                        continue
                    checks.append((x, i, t[x][gens[i]]))
            self.trees.append(tuple(tree))
            self.checks.append(tuple(checks))


def hom_search(
    G: Group,
    K: Group,
    *,
    injective: bool = True,
    first: bool = False,
    gens: Optional[Sequence[int]] = None,
) -> list:
    """All homomorphisms G -> K (injective ones only by default) as image tuples.

    Images are assigned to the greedy generators of G in increasing index
    order, so results come out sorted by generator images.
    """
    cap = get_config().search_cap
    if G.order > cap or K.order > cap:
        raise SearchCapExceeded(f"search over groups of order {G.order}, {K.order} exceeds cap {cap}")
    gens = tuple(G.generators if gens is None else gens)
    if not gens:
        return [tuple([0] * G.order)] if not injective or G.order == 1 else []
    stages = _Stages(G, gens)
    kt = K.table
    gord = G.element_orders
    kord = K.element_orders
    cands = []
    for g in gens:
        if injective:
            cands.append([x for x in range(K.order) if kord[x] == gord[g]])
        else:
            cands.append([x for x in range(K.order) if gord[g] % kord[x] == 0])
    img = [-1] * G.order
    img[0] = 0
    gimg = [0] * len(gens)
    results = []
    depth = len(gens)

    def run(j: int) -> bool:
        for c in cands[j]:
            gimg[j] = c
            for (y, x, i) in stages.trees[j]:
                img[y] = kt[img[x]][gimg[i]]
            ok = True
            for (x, i, y) in stages.checks[j]:
                if kt[img[x]][gimg[i]] != img[y]:
                    ok = False
                    break
            if ok and injective:
                for (y, _, _) in stages.trees[j]:
                    if img[y] == 0:
                        ok = False
                        break
            if not ok:
                continue
            if j + 1 == depth:
                results.append(tuple(img))
                if first:
                    return True
            elif run(j + 1):
                return True
        return False

    run(0)
    return results


def is_isomorphic(G1: Group, G2: Group) -> Optional[Hom]:
    """An explicit isomorphism G1 -> G2, or None."""
    if G1.order != G2.order or G1.order_profile != G2.order_profile:
        return None
    if G1.is_abelian != G2.is_abelian:
        return None
    found = hom_search(G1, G2, injective=True, first=True)
    if not found:
        return None
    return Hom(G1, G2, found[0])
