"""Brute-force reference computations, written independently of the package.

Everything here works from Cayley tables with plain loops so that the
package's backtracking searches and linear algebra can be cross-checked.
"""

from __future__ import annotations

import itertools
from collections import Counter


def identity_index(table) -> int:
    n = len(table)
    return next(e for e in range(n) if all(table[e][x] == x for x in range(n)))


def inverse_of(table, a: int) -> int:
    return table[a].index(identity_index(table))


def element_order(table, a: int) -> int:
    e = identity_index(table)
    k, x = 1, a
    while x != e:
        x = table[x][a]
        k += 1
    return k


def generated(table, elems) -> set:
    e = identity_index(table)
    span = {e}
    frontier = [e]
    while frontier:
        new = []
        for x in frontier:
            for g in elems:
                y = table[x][g]
                if y not in span:
                    span.add(y)
                    new.append(y)
        frontier = new
    return span


def small_generating_set(table) -> list:
    """Greedy generators, choosing elements of largest order first."""
    n = len(table)
    order = sorted(range(n), key=lambda a: (-element_order(table, a), a))
    gens, span = [], generated(table, [])
    for a in order:
        if a not in span:
            gens.append(a)
            span = generated(table, gens)
        if len(span) == n:
            break
    return gens


def extend_to_hom(src, dst, gens, images):
    """The homomorphism sending gens to images, or None if there is none."""
    e_src, e_dst = identity_index(src), identity_index(dst)
    phi = {e_src: e_dst}
    frontier = [e_src]
    while frontier:
        new = []
        for x in frontier:
            for g, im in zip(gens, images):
                y = src[x][g]
                val = dst[phi[x]][im]
                if y in phi:
                    if phi[y] != val:
                        return None
                else:
                    phi[y] = val
                    new.append(y)
        frontier = new
    if len(phi) != len(src):
        return None
    # BFS consistency along generators implies the hom property on the span
    return tuple(phi[x] for x in range(len(src)))


def automorphisms(table) -> list:
    """All automorphisms as image tuples, by generator images filtered by element order."""
    n = len(table)
    gens = small_generating_set(table)
    by_order = {}
    for a in range(n):
        by_order.setdefault(element_order(table, a), []).append(a)
    pools = [by_order[element_order(table, g)] for g in gens]
    out = []
    for images in itertools.product(*pools):
        phi = extend_to_hom(table, table, gens, images)
        if phi is not None and len(set(phi)) == n:
            out.append(phi)
    return sorted(out)


def relative_automorphisms(table, members) -> list:
    sub = set(members)
    return [a for a in automorphisms(table) if {a[h] for h in sub} == sub]


def center(table) -> set:
    n = len(table)
    return {a for a in range(n) if all(table[a][b] == table[b][a] for b in range(n))}


def commutator_subgroup(table, members) -> set:
    members = list(members)
    comms = set()
    for a in members:
        for b in members:
            ab = table[a][b]
            ba = table[b][a]
            comms.add(table[ab][inverse_of(table, ba)])
    return generated(table, comms)


def derived_lengths(table) -> list:
    """Orders along the derived series until it stabilises."""
    cur = set(range(len(table)))
    sizes = [len(cur)]
    while True:
        nxt = commutator_subgroup(table, cur)
        if len(nxt) == len(cur):
            return sizes
        cur = nxt
        sizes.append(len(cur))


def is_solvable(table) -> bool:
    return derived_lengths(table)[-1] == 1


def order_profile(table) -> Counter:
    return Counter(element_order(table, a) for a in range(len(table)))


def isomorphic(t1, t2) -> bool:
    if len(t1) != len(t2) or order_profile(t1) != order_profile(t2):
        return False
    gens = small_generating_set(t1)
    pools = [[b for b in range(len(t2)) if element_order(t2, b) == element_order(t1, g)] for g in gens]
    for images in itertools.product(*pools):
        phi = extend_to_hom(t1, t2, gens, images)
        if phi is not None and len(set(phi)) == len(t1):
            return True
    return False


def compose(a, b):
    """a after b."""
    return tuple(a[x] for x in b)


# ---------------------------------------------------------------------------
# cohomology by exhaustion


def cocycles(q_table, m_table, action, degree: int) -> list:
    """Normalised cocycles, written out from the textbook formulas (left action, additive M)."""
    nq = len(q_table)
    nm = len(m_table)
    add = lambda x, y: m_table[x][y]
    neg = lambda x: inverse_of(m_table, x)
    zero = identity_index(m_table)
    nonid = [q for q in range(nq) if q != identity_index(q_table)]
    e = identity_index(q_table)
    out = []
    if degree == 1:
        for vals in itertools.product(range(nm), repeat=len(nonid)):
            d = dict(zip(nonid, vals))
            d[e] = zero
            # d(xy) = x.d(y) + d(x)
            if all(d[q_table[x][y]] == add(action[x][d[y]], d[x]) for x in range(nq) for y in range(nq)):
                out.append(tuple(d[q] for q in range(nq)))
        return out
    pairs = [(x, y) for x in nonid for y in nonid]
    for vals in itertools.product(range(nm), repeat=len(pairs)):
        f = {p: v for p, v in zip(pairs, vals)}
        for q in range(nq):
            f[(e, q)] = zero
            f[(q, e)] = zero
        ok = True
        for x in range(nq):
            for y in range(nq):
                for z in range(nq):
                    # x.f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0
                    lhs = add(add(action[x][f[(y, z)]], f[(x, q_table[y][z])]), neg(add(f[(q_table[x][y], z)], f[(x, y)])))
                    if lhs != zero:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(f[(x, y)] for x in range(nq) for y in range(nq)))
    return out


def coboundaries(q_table, m_table, action, degree: int) -> set:
    nq, nm = len(q_table), len(m_table)
    add = lambda x, y: m_table[x][y]
    neg = lambda x: inverse_of(m_table, x)
    out = set()
    if degree == 1:
        for m in range(nm):
            out.add(tuple(add(action[q][m], neg(m)) for q in range(nq)))
        return out
    e = identity_index(q_table)
    nonid = [q for q in range(nq) if q != e]
    zero = identity_index(m_table)
    for vals in itertools.product(range(nm), repeat=len(nonid)):
        s = dict(zip(nonid, vals))
        s[e] = zero
        out.add(
            tuple(
                add(add(action[x][s[y]], neg(s[q_table[x][y]])), s[x]) for x in range(nq) for y in range(nq)
            )
        )
    return out


def cohomology_orders(q_table, m_table, action, degree: int) -> tuple:
    z = cocycles(q_table, m_table, action, degree)
    b = coboundaries(q_table, m_table, action, degree)
    return len(z), len(b), len(z) // len(b)


# ---------------------------------------------------------------------------
# extensions


def has_complement(g_table, h_members, q_order: int) -> bool:
    """A subgroup of order |Q| meeting H trivially, found among subgroups on few generators."""
    n = len(g_table)
    hs = set(h_members)
    e = identity_index(g_table)
    for k in range(0, 4):
        for gens in itertools.combinations([x for x in range(n) if x not in hs], k):
            span = generated(g_table, gens)
            if len(span) == q_order and span & hs == {e}:
                return True
    return False


def relabel(table, perm):
    """The same group with element x renamed perm[x]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return out
