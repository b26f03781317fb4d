"""Helpers for collections of explicit permutations (automorphisms as image tuples).

Composition follows function notation: ``compose(a, b)`` applies ``b`` first.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

Perm = tuple


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    return tuple(a[x] for x in b)


def inverse(a: Sequence[int]) -> Perm:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(a: Sequence[int]) -> bool:
    return sorted(a) == list(range(len(a)))


def closure(gens: Iterable[Sequence[int]], n: int) -> set:
    """Subgroup of Sym(n) generated by ``gens`` as a set of tuples."""
    gens = [tuple(g) for g in gens]
    seen = {identity(n)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def generating_subset(elements: Iterable[Sequence[int]], n: int) -> list:
    """Greedy generating set for an explicit finite set of permutations."""
    elements = sorted(tuple(e) for e in elements)
    gens: list = []
    span = {identity(n)}
    for e in elements:
        if e not in span:
            gens.append(e)
            span = closure(gens, n)
    return gens


def normal_closure(gens: Iterable[Sequence[int]], ambient_gens: Sequence[Sequence[int]], n: int) -> set:
    """Smallest subgroup containing ``gens`` normalised by ``ambient_gens``."""
    gens = [tuple(g) for g in gens]
    current = closure(gens, n)
    while True:
        extra = []
        for g in ambient_gens:
            gi = inverse(g)
            for x in gens:
                y = compose(compose(g, x), gi)
                if y not in current:
                    extra.append(y)
        if not extra:
            return current
        gens = gens + extra
        current = closure(gens, n)


def commutator(a: Sequence[int], b: Sequence[int]) -> Perm:
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def derived_subgroup(elements: Iterable[Sequence[int]], n: int) -> set:
    elements = list(elements)
    gens = generating_subset(elements, n)
    comms = [commutator(a, b) for a in gens for b in gens]
    return normal_closure(comms, gens, n)


def derived_series(elements: Iterable[Sequence[int]], n: int) -> list:
    """Derived series of a permutation group given by its full element set."""
    current = set(tuple(e) for e in elements)
    series = [current]
    while True:
        nxt = derived_subgroup(current, n)
        if len(nxt) == len(current):
            return series
        series.append(nxt)
        current = nxt


def is_solvable(elements: Iterable[Sequence[int]], n: int) -> bool:
    return len(derived_series(elements, n)[-1]) == 1
