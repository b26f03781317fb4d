"""Named group constructors with fixed element indexing.

Indexing conventions (relied on by golden tests and the corpus):

* ``cyclic(n)``: k is the residue k mod n.
* ``dihedral(2n)``: rotations r^k are 0..n-1, reflections r^k s are n+k.
* ``quaternion(4m)``: a^k is k, a^k b is 2m+k, with b^2 = a^m, b a b^-1 = a^-1.
* ``elem_abelian(p, k)``: vector v has index sum v_i p^i.
* ``symmetric(n)`` / ``alternating(n)``: permutations of 0..n-1 in lexicographic
  order; the product is composition (s*t)(x) = s(t(x)).
* ``direct_product(A, B)``: (a, b) has index a*|B| + b.
* ``semidirect(N, K, action)``: (n, k) has index n*|K| + k and
  (n, k)(n', k') = (n * action[k](n'), k k').
* ``metacyclic(p, q)``: Z/p semidirect Z/q, generator of Z/q acting by x -> r x
  where r is the smallest residue of multiplicative order q.
"""

from __future__ import annotations

import ast
import itertools
import json
from typing import Any, Sequence, Union

from .config import get_config
from .errors import OrderCapExceeded, UnsupportedSpec
from .groups import Group, direct_product_table, from_cayley_table

Spec = Union[str, dict]


def _check_order(n: int) -> None:
    cap = get_config().order_cap
    if n > cap:
        raise OrderCapExceeded(f"requested group of order {n} exceeds order cap {cap}")


def cyclic(n: int) -> Group:
    if n < 1:
        raise UnsupportedSpec("cyclic order must be positive")
    _check_order(n)
    return Group([[(a + b) % n for b in range(n)] for a in range(n)], f"cyclic({n})")


def dihedral(order: int) -> Group:
    if order < 2 or order % 2:
        raise UnsupportedSpec("dihedral(2n) needs an even order >= 2")
    _check_order(order)
    n = order // 2

    def mul(a, b):
        ra, sa = a % n, a >= n
        rb, sb = b % n, b >= n
        if not sa:
            return (ra + rb) % n + (n if sb else 0)
        return (ra - rb) % n + (0 if sb else n)

    return Group([[mul(a, b) for b in range(order)] for a in range(order)], f"dihedral({order})")


def quaternion(order: int) -> Group:
    if order < 8 or order % 4 or order & (order - 1):
        raise UnsupportedSpec("quaternion(n) needs n a power of two >= 8")
    _check_order(order)
    m = order // 4
    two_m = 2 * m

    def mul(a, b):
        ia, ba = a % two_m, a >= two_m
        ib, bb = b % two_m, b >= two_m
        if not ba:
            return (ia + ib) % two_m + (two_m if bb else 0)
        if not bb:
            return (ia - ib) % two_m + two_m
        return (ia - ib + m) % two_m

    return Group([[mul(a, b) for b in range(order)] for a in range(order)], f"quaternion({order})")


def elem_abelian(p: int, k: int) -> Group:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise UnsupportedSpec("elem_abelian needs a prime p")
    if k < 0:
        raise UnsupportedSpec("elem_abelian needs k >= 0")
    n = p**k
    _check_order(n)

    def digits(x):
        return [(x // p**i) % p for i in range(k)]

    def index(v):
        return sum(c * p**i for i, c in enumerate(v))

    table = [[index([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(n)] for a in range(n)]
    return Group(table, f"elem_abelian({p},{k})")


def _perm_group(perms: Sequence[tuple], label: str) -> Group:
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(s[x] for x in t)] for t in perms] for s in perms]
    return Group(table, label)


def _parity(p: tuple) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def symmetric(n: int) -> Group:
    if not 1 <= n <= 5:
        raise UnsupportedSpec("symmetric(n) supports n <= 5")
    return _perm_group(list(itertools.permutations(range(n))), f"symmetric({n})")


def alternating(n: int) -> Group:
    if not 1 <= n <= 5:
        raise UnsupportedSpec("alternating(n) supports n <= 5")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _perm_group(perms, f"alternating({n})")


def direct_product(A: Group, B: Group) -> Group:
    _check_order(A.order * B.order)
    return Group(direct_product_table(A, B), f"direct_product({A.label},{B.label})")


def semidirect(N: Group, K: Group, action: Sequence[Sequence[int]], label: str | None = None) -> Group:
    """N semidirect K where ``action[k]`` is the automorphism of N by which k acts."""
    action = [tuple(a) for a in action]
    if len(action) != K.order:
        raise UnsupportedSpec("action must list one automorphism per element of K")
    nt, kt = N.table, K.table
    for a in action:
        if sorted(a) != list(range(N.order)) or any(
            a[nt[x][y]] != nt[a[x]][a[y]] for x in range(N.order) for y in N.generators
        ):
            raise UnsupportedSpec("action entry is not an automorphism of N")
    for k1 in range(K.order):
        for k2 in K.generators:
            comp = tuple(action[k1][action[k2][x]] for x in range(N.order))
            if comp != action[kt[k1][k2]]:
                raise UnsupportedSpec("action is not a homomorphism K -> Aut(N)")
    m = K.order
    _check_order(N.order * m)
    table = [
        [nt[n1][action[k1][n2]] * m + kt[k1][k2] for n2 in range(N.order) for k2 in range(m)]
        for n1 in range(N.order)
        for k1 in range(m)
    ]
    return Group(table, label or f"semidirect({N.label},{K.label})")


def metacyclic(p: int, q: int) -> Group:
    if (p - 1) % q:
        raise UnsupportedSpec(f"no element of order {q} in Aut(Z/{p})")
    r = next(x for x in range(2, p) if pow(x, q, p) == 1 and all(pow(x, d, p) != 1 for d in range(1, q)))
    action = [tuple((pow(r, k, p) * x) % p for x in range(p)) for k in range(q)]
    return semidirect(cyclic(p), cyclic(q), action, label=f"metacyclic({p},{q})")


_SIMPLE = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "quaternion": quaternion,
    "elem_abelian": elem_abelian,
    "symmetric": symmetric,
    "alternating": alternating,
    "metacyclic": metacyclic,
}


def _eval_node(node: ast.AST) -> Any:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        args = [_eval_node(a) for a in node.args]
        name = node.func.id
        if name in _SIMPLE:
            if not all(isinstance(a, int) for a in args):
                raise UnsupportedSpec(f"{name} takes integer arguments")
            return _SIMPLE[name](*args)
        if name == "direct_product":
            if len(args) != 2 or not all(isinstance(a, Group) for a in args):
                raise UnsupportedSpec("direct_product takes two groups")
            return direct_product(*args)
        raise UnsupportedSpec(f"unknown constructor {name!r}")
    raise UnsupportedSpec(f"cannot interpret {ast.dump(node)}")


def standard_group(spec: Spec) -> Group:
    """Build a group from a descriptor.

    String descriptors are constructor calls such as ``"dihedral(8)"`` or
    ``"direct_product(cyclic(4),cyclic(2))"``.  Semidirect products need an
    explicit action and are given as dicts::

        {"kind": "semidirect", "N": "cyclic(7)", "K": "cyclic(3)",
         "action": [[0,1,2,3,4,5,6], [0,2,4,6,1,3,5], [0,4,1,5,2,6,3]]}
    """
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "semidirect":
            N = standard_group(spec["N"])
            K = standard_group(spec["K"])
            return semidirect(N, K, spec["action"], label=spec.get("label"))
        if kind == "table":
            return from_cayley_table(spec["table"], spec.get("label"))
        raise UnsupportedSpec(f"unknown descriptor kind {kind!r}")
    if not isinstance(spec, str):
        raise UnsupportedSpec(f"unsupported descriptor {spec!r}")
    text = spec.strip()
    if text.startswith("{"):
        return standard_group(json.loads(text))
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise UnsupportedSpec(f"cannot parse {spec!r}") from exc
    group = _eval_node(tree.body)
    if not isinstance(group, Group):
        raise UnsupportedSpec(f"{spec!r} does not describe a group")
    group.label = text.replace(" ", "")
    return group
