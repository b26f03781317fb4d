"""Aut(G), Inn(G), Out(G) and relative automorphisms Aut(G, H)."""

from __future__ import annotations

from functools import cached_property
from typing import Optional, Sequence

from . import perms
from .groups import Group, Subgroup, hom_search


def inner_automorphism(G: Group, g: int) -> tuple:
    """x -> g x g^-1 as an image tuple."""
    t = G.table
    gi = G.inverses[g]
    return tuple(t[t[g][x]][gi] for x in range(G.order))


class AutGroup:
    """All automorphisms of ``base``, sorted lexicographically as image tuples.

    Element 0 is the identity.  Products follow function composition:
    ``mul(i, j)`` is elements[i] after elements[j].
    """

    def __init__(self, base: Group, elements: Sequence[tuple]):
        self.base = base
        self.elements = tuple(sorted(tuple(e) for e in elements))
        self.index = {e: i for i, e in enumerate(self.elements)}
        inner = {self.index[inner_automorphism(base, g)] for g in range(base.order)}
        self.inner = tuple(sorted(inner))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<AutGroup of {self.base!r}, order {self.order}>"

    def mul(self, i: int, j: int) -> int:
        return self.index[perms.compose(self.elements[i], self.elements[j])]

    def inverse(self, i: int) -> int:
        return self.index[perms.inverse(self.elements[i])]

    def index_of(self, images: Sequence[int]) -> int:
        return self.index[tuple(images)]

    @cached_property
    def group_view(self) -> Group:
        """Cayley table of composition (subject to the order cap)."""
        n = self.order
        table = [[self.mul(i, j) for j in range(n)] for i in range(n)]
        label = f"Aut({self.base.label})" if self.base.label else None
        return Group(table, label)

    @cached_property
    def inner_subgroup(self) -> Subgroup:
        return Subgroup(self.group_view, self.inner)

    def is_solvable(self) -> bool:
        return perms.is_solvable(self.elements, self.base.order)


def aut_group(G: Group) -> AutGroup:
    """Aut(G) by backtracking over images of the greedy generators (cached on G)."""
    cached = G.__dict__.get("_aut_group")
    if cached is not None:
        return cached
    found = hom_search(G, G, injective=True)
    A = AutGroup(G, found)
    G.__dict__["_aut_group"] = A
    return A


class OutGroup:
    """Aut/Inn with canonical (minimal index) coset representatives."""

    def __init__(self, parent: AutGroup):
        self.parent = parent
        inner = [parent.elements[i] for i in parent.inner]
        coset_of = [-1] * parent.order
        reps = []
        for i, a in enumerate(parent.elements):
            if coset_of[i] >= 0:
                continue
            members = {parent.index[perms.compose(a, c)] for c in inner}
            for m in members:
                coset_of[m] = len(reps)
            reps.append(min(members))
        self.cosets = tuple(reps)
        self.coset_of = tuple(coset_of)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def __len__(self) -> int:
        return len(self.cosets)

    def project(self, aut_index: int) -> int:
        return self.coset_of[aut_index]

    def class_of(self, images: Sequence[int]) -> int:
        return self.coset_of[self.parent.index[tuple(images)]]

    def mul(self, a: int, b: int) -> int:
        return self.group_view.table[a][b]

    def inv(self, a: int) -> int:
        return self.group_view.inverses[a]

    def conj(self, a: int, x: int) -> int:
        return self.group_view.conj(a, x)

    @cached_property
    def group_view(self) -> Group:
        P = self.parent
        reps = self.cosets
        table = [[self.coset_of[P.mul(a, b)] for b in reps] for a in reps]
        label = f"Out({P.base.label})" if P.base.label else None
        return Group(table, label)


def out_group(A: AutGroup) -> OutGroup:
    cached = A.__dict__.get("_out_group")
    if cached is None:
        cached = OutGroup(A)
        A.__dict__["_out_group"] = cached
    return cached


def preserves(images: Sequence[int], H: Subgroup) -> bool:
    return all(images[h] in H for h in H.generators)


def relative_aut(G: Group, H: Subgroup) -> list:
    """{gamma in Aut G : gamma(H) = H} as a sublist of aut_group(G).elements."""
    return [a for a in aut_group(G).elements if preserves(a, H)]


def restrict(images: Sequence[int], embedding: Sequence[int], position: dict) -> tuple:
    """Restriction of an automorphism to a subgroup, in the subgroup's own indices."""
    return tuple(position[images[x]] for x in embedding)


def inn_quotient_iso(G: Group, A: Optional[AutGroup] = None):
    """Explicit isomorphism G/zG -> Inn G, returned as (quotient, projection, map).

    The map sends coset index i to the index in A of conjugation by its
    canonical representative.
    """
    from .groups import center, quotient

    A = aut_group(G) if A is None else A
    Q, proj = quotient(G, center(G))
    reps = [0] * Q.order
    for g in reversed(range(G.order)):
        reps[proj(g)] = g
    images = tuple(A.index[inner_automorphism(G, r)] for r in reps)
    return Q, proj, images
