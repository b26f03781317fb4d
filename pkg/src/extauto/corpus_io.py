"""Named example extensions, claim evaluation, and (de)serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

from .config import get_config, use_config
from .constructors import (
    cyclic,
    dihedral,
    direct_product,
    elem_abelian,
    metacyclic,
    quaternion,
    semidirect,
    standard_group,
    symmetric,
    alternating,
)
from .errors import HeavyExampleDisabled, NotAGroup, ParseError, UnknownExample
from .extensions import Extension, FactorSystem, make_extension
from .groups import Group, Subgroup, center, from_cayley_table, subgroup_generated


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class Claim:
    value: Any
    source: str  # "literature", "derived" or "trivial"
    note: str = ""


@dataclass(frozen=True)
class ExampleDescriptor:
    name: str
    builder: Callable[[], Extension]
    description: str
    expected: dict = field(default_factory=dict)
    heavy: bool = False
    annotations: dict = field(default_factory=dict)
    caps: dict = field(default_factory=dict)  # config overrides needed for analysis
    checks: tuple = ()  # report names that are feasible; empty means all

    def build(self) -> Extension:
        E = self.builder()
        E.label = self.name
        E.claims = dict(self.expected)
        E.validate()
        return E


def _factor_subgroup(G: Group, left: int, right: int) -> Subgroup:
    """The first factor of a direct product A x B (A-major indices)."""
    return Subgroup(G, tuple(a * right for a in range(left)))


def _second_factor(G: Group, left: int, right: int) -> Subgroup:
    return Subgroup(G, tuple(range(right)))


def _d4_center():
    G = dihedral(8)
    return make_extension(G, center(G))


def _q8_center():
    G = quaternion(8)
    return make_extension(G, center(G))


def _v4fiber_z2cube():
    G = elem_abelian(2, 3)
    return make_extension(G, subgroup_generated(G, [1]))


def _v4fiber_z4z2():
    G = direct_product(cyclic(4), cyclic(2))
    return make_extension(G, subgroup_generated(G, [2 * 2]))


def _s3_a3():
    G = symmetric(3)
    A3 = next(s for s in (subgroup_generated(G, [x]) for x in range(G.order)) if s.order == 3)
    return make_extension(G, A3)


def _z4_z2():
    G = cyclic(4)
    return make_extension(G, subgroup_generated(G, [2]))


def _over_z2(H: Group):
    G = direct_product(H, cyclic(2))
    return make_extension(G, _factor_subgroup(G, H.order, 2))


def _a5_x_z7():
    G = direct_product(alternating(5), cyclic(7))
    return make_extension(G, _factor_subgroup(G, 60, 7))


def _z2cube_split():
    G = direct_product(elem_abelian(2, 2), cyclic(2))
    return make_extension(G, _factor_subgroup(G, 4, 2))


def _z2cube_x_z3():
    G = direct_product(elem_abelian(2, 3), cyclic(3))
    return make_extension(G, _factor_subgroup(G, 8, 3))


def _z3_x_z2cube():
    G = direct_product(cyclic(3), elem_abelian(2, 3))
    return make_extension(G, _factor_subgroup(G, 3, 8))


def _metacyclic21():
    G = metacyclic(7, 3)
    return make_extension(G, Subgroup(G, tuple(3 * k for k in range(7))))


def c2_x_a4() -> Group:
    """(Z/2)^3 semidirect Z/3, the generator cycling the three coordinates."""
    P = elem_abelian(2, 3)

    def cycle(v):
        bits = [(v >> i) & 1 for i in range(3)]
        bits = [bits[2], bits[0], bits[1]]
        return sum(b << i for i, b in enumerate(bits))

    rot = tuple(cycle(v) for v in range(8))
    rot2 = tuple(rot[rot[v]] for v in range(8))
    return semidirect(P, cyclic(3), [tuple(range(8)), rot, rot2], label="c2_x_a4")


def pullback_group_168() -> Group:
    """Z/7 semidirect (C2 x A4) with C2 x A4 acting through its Z/3 quotient."""
    Q = c2_x_a4()
    # Q index = p*3 + k, and the quotient map to Z/3 is the k coordinate
    r = 2  # multiplicative order 3 modulo 7
    action = [tuple((pow(r, q % 3, 7) * x) % 7 for x in range(7)) for q in range(Q.order)]
    return semidirect(cyclic(7), Q, action, label="pullback168")


def _metacyclic21_pullback():
    Y = pullback_group_168()
    return make_extension(Y, Subgroup(Y, tuple(24 * k for k in range(7))))


def _pullback168_over_sylow2():
    Y = pullback_group_168()
    return make_extension(Y, Subgroup(Y, tuple(3 * p for p in range(8))))


def _gdh50():
    N = elem_abelian(5, 2)
    neg = tuple(N.inverses)
    G = semidirect(N, cyclic(2), [tuple(range(25)), neg], label="gdh50")
    return make_extension(G, Subgroup(G, tuple(2 * n for n in range(25))))


L, D, T = "literature", "derived", "trivial"

_FIBRE_V4 = {
    "z1_order": Claim(4, L),
    "h1_order": Claim(4, L),
    "h2_order": Claim(8, L),
    "s_order": Claim(6, L),
    "fiber_size": Claim(8, L),
    "orbit_sizes": Claim([1, 1, 3, 3], L),
    "phi_trivial": Claim(True, L),
}

CATALOG: dict = {}


def _register(desc: ExampleDescriptor) -> None:
    CATALOG[desc.name] = desc


_register(
    ExampleDescriptor(
        "d4_center",
        _d4_center,
        "D4 over its center: H = Z/2, Q = V4",
        {
            **_FIBRE_V4,
            "aut_order": Claim(8, L),
            "aut_iso": Claim("dihedral(8)", L),
            "stabilizer_order": Claim(2, L),
            "own_orbit_size": Claim(3, L),
            "out_order": Claim(2, D),
            "quotient_orders": Claim([1, 4, 2], D),
            "counting_holds": Claim(True, D),
        },
    )
)
_register(
    ExampleDescriptor(
        "q8_center",
        _q8_center,
        "Q8 over its center: H = Z/2, Q = V4",
        {
            **_FIBRE_V4,
            "aut_order": Claim(24, L),
            "aut_iso": Claim("symmetric(4)", L),
            "stabilizer_order": Claim(6, L),
            "own_orbit_size": Claim(1, L),
            "quotient_orders": Claim([1, 4, 6], D),
            "counting_holds": Claim(True, D),
        },
    )
)
_register(
    ExampleDescriptor(
        "v4fiber_z2cube",
        _v4fiber_z2cube,
        "(Z/2)^3 over an order-2 subgroup: the split member of the V4 fibre",
        {**_FIBRE_V4, "own_orbit_size": Claim(1, L), "is_split": Claim(True, T), "counting_holds": Claim(True, D)},
    )
)
_register(
    ExampleDescriptor(
        "v4fiber_z4z2",
        _v4fiber_z4z2,
        "Z/4 x Z/2 over <(2,0)>, a member of the V4 fibre",
        {**_FIBRE_V4, "own_orbit_size": Claim(3, L), "counting_holds": Claim(True, D)},
    )
)
_register(
    ExampleDescriptor(
        "s3_a3",
        _s3_a3,
        "S3 over A3: centric, Phi injective",
        {
            "centric": Claim(True, D),
            "phi_injective": Claim(True, D),
            "s_order": Claim(2, D),
            "aut_order": Claim(6, D),
            "h1_order": Claim(1, D),
            "h2_order": Claim(1, D),
            "counting_holds": Claim(True, D),
        },
    )
)
_register(
    ExampleDescriptor(
        "z4_z2",
        _z4_z2,
        "Z/4 over Z/2: the non-split class over (Z/2, Z/2)",
        {"is_split": Claim(False, D), "aut_order": Claim(2, D), "h2_order": Claim(2, D), "counting_holds": Claim(True, D)},
    )
)
_register(
    ExampleDescriptor(
        "d4_over_z2",
        lambda: _over_z2(dihedral(8)),
        "D4 x Z/2 over D4: trivial outer action",
        {"fiber_size": Claim(2, L), "split_classes": Claim(2, L), "phi_trivial": Claim(True, L)},
    )
)
_register(
    ExampleDescriptor(
        "q8_over_z2",
        lambda: _over_z2(quaternion(8)),
        "Q8 x Z/2 over Q8: trivial outer action",
        {"fiber_size": Claim(2, L), "split_classes": Claim(2, L), "phi_trivial": Claim(True, L)},
    )
)
_register(
    ExampleDescriptor(
        "q16_over_z2",
        lambda: _over_z2(quaternion(16)),
        "Q16 x Z/2 over Q16: trivial outer action",
        {"fiber_size": Claim(2, L), "split_classes": Claim(2, L), "phi_trivial": Claim(True, L)},
    )
)
_register(
    ExampleDescriptor(
        "d8_over_z2",
        lambda: _over_z2(dihedral(16)),
        "D8 (order 16) x Z/2 over D8: trivial outer action",
        {"fiber_size": Claim(2, L), "split_classes": Claim(2, L), "phi_trivial": Claim(True, L)},
    )
)
_register(
    ExampleDescriptor(
        "a5_x_z7",
        _a5_x_z7,
        "A5 x Z/7 over A5: condition 1 fails",
        {"conditions": Claim([False, True, True, True], L), "aut_g_solvable": Claim(False, L), "aut_g_order": Claim(720, D)},
        heavy=True,
        caps={"search_cap": 512},
    )
)
_register(
    ExampleDescriptor(
        "z2cube_split",
        _z2cube_split,
        "(Z/2)^3 = (Z/2)^2 x Z/2: condition 2 fails",
        {
            "conditions": Claim([True, False, True, True], L),
            "aut_g_order": Claim(168, L),
            "aut_g_solvable": Claim(False, L),
            "aut_g_iso_gl32": Claim(True, L),
            "counting_holds": Claim(True, D),
        },
    )
)
_register(
    ExampleDescriptor(
        "z2cube_x_z3",
        _z2cube_x_z3,
        "(Z/2)^3 x Z/3 over (Z/2)^3: condition 3 fails",
        {"conditions": Claim([True, True, False, True], L), "aut_g_solvable": Claim(False, L), "counting_holds": Claim(True, D)},
    )
)
_register(
    ExampleDescriptor(
        "z3_x_z2cube",
        _z3_x_z2cube,
        "Z/3 x (Z/2)^3 over Z/3: condition 4 fails",
        {"conditions": Claim([True, True, True, False], L), "aut_g_solvable": Claim(False, L), "counting_holds": Claim(True, D)},
    )
)
_register(
    ExampleDescriptor(
        "metacyclic21",
        _metacyclic21,
        "Z/7 semidirect Z/3 over Z/7",
        {
            "aut_g_order": Claim(42, L),
            "aut_g_solvable": Claim(True, L),
            "conditions": Claim([True, True, True, True], D),
            "counting_holds": Claim(True, D),
        },
    )
)
_register(
    ExampleDescriptor(
        "metacyclic21_pullback",
        _metacyclic21_pullback,
        "order-168 pullback of Z/7 semidirect Z/3 along C2 x A4 -> Z/3, over Z/7",
        {"conditions": Claim([True, True, True, False], L, "reconstruction"), "aut_g_solvable": Claim(True, L)},
        heavy=True,
        annotations={"Q small-group id": "(24,13)"},
        # the degree-2 coboundary set over a group of order 24 is far beyond the cochain cap
        checks=("solvability",),
    )
)
_register(
    ExampleDescriptor(
        "pullback168_over_sylow2",
        _pullback168_over_sylow2,
        "the same order-168 group over its normal (Z/2)^3, quotient Z/7 semidirect Z/3",
        {
            "conditions": Claim([True, True, True, True], L, "reconstruction"),
            "normalizer_order": Claim(6, L),
            "aut_g_solvable": Claim(True, L),
        },
        heavy=True,
        checks=("solvability",),
    )
)
_register(
    ExampleDescriptor(
        "gdh50",
        _gdh50,
        "(Z/5)^2 semidirect Z/2 by inversion, over (Z/5)^2",
        {
            "phi_injective": Claim(True, L, "ker Phi trivial"),
            "conditions": Claim([True, True, False, True], L),
            "aut_order": Claim(12000, D),
            "counting_holds": Claim(True, D),
        },
        annotations={"H small-group id": "(25,2)", "G small-group id": "(50,3)", "Aut G small-group id": "(80,30)"},
    )
)


def catalog_names(include_heavy: bool = True) -> list:
    return [n for n, d in CATALOG.items() if include_heavy or not d.heavy]


def example(name: str) -> Extension:
    try:
        desc = CATALOG[name]
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(CATALOG)}") from None
    return desc.build()


# ---------------------------------------------------------------------------
# claim evaluation


def _claim_value(E: Extension, name: str):
    from . import compat
    from .autos import aut_group
    from .cohomology import center_module, h1, h2, z1
    from .extensions import factor_system, is_split, outer_action
    from .groups import centralizer, is_isomorphic

    if name == "z1_order":
        return len(z1(center_module(E)))
    if name == "h1_order":
        return h1(center_module(E)).order
    if name == "h2_order":
        return h2(center_module(E)).order
    if name == "s_order":
        return compat.compatibility_group(E).order
    if name == "fiber_size":
        return len(compat.fiber_classes(E))
    if name == "orbit_sizes":
        return sorted(len(o) for o in compat.fiber_orbits(E))
    if name == "own_orbit_size":
        return len(compat.orbit_and_stabilizer(E).orbit)
    if name == "stabilizer_order":
        return len(compat.stabilizer(E))
    if name == "phi_trivial":
        return outer_action(E).is_trivial()
    if name == "phi_injective":
        return outer_action(E).is_injective()
    if name == "centric":
        return set(centralizer(E.G, E.H).members) <= set(E.H.members)
    if name == "aut_order":
        return len(compat.relative_automorphisms(E))
    if name == "out_order":
        return len(set(compat.out_cosets(E).values()))
    if name == "aut_iso":
        return _aut_iso_name(E)
    if name == "aut_g_order":
        return aut_group(E.G).order
    if name == "aut_g_solvable":
        return aut_group(E.G).is_solvable()
    if name == "aut_g_iso_gl32":
        from .autos import aut_group as ag

        target = ag(elem_abelian(2, 3)).group_view
        return is_isomorphic(aut_group(E.G).group_view, target) is not None
    if name == "is_split":
        return is_split(factor_system(E))
    if name == "split_classes":
        return sum(1 for fs in compat.fiber_classes(E) if is_split(fs))
    if name == "conditions":
        rep = compat.solvability_report(E)
        keys = [k for k in rep.values if k.startswith("condition ")]
        return [rep.values[k] for k in sorted(keys)]
    if name == "normalizer_order":
        return compat.solvability_report(E).values["|N(Phi Q)|"]
    if name == "counting_holds":
        return compat.counting_check(E).ok
    if name == "quotient_orders":
        return compat.normal_series(E).values["quotient orders"]
    raise KeyError(f"no evaluator for claim {name!r}")


def _aut_iso_name(E: Extension) -> Optional[str]:
    return identify_group(compat_aut_view(E))


def compat_aut_view(E: Extension) -> Group:
    """Aut(G, H) as a Cayley table."""
    from . import perms
    from .compat import relative_automorphisms

    elems = sorted(relative_automorphisms(E))
    idx = {e: i for i, e in enumerate(elems)}
    return Group([[idx[perms.compose(a, b)] for b in elems] for a in elems], "Aut(G,H)")


def analysis_config(name: str):
    """Context manager with the caps a catalog entry needs.

    Heavy entries require the ``heavy`` flag in the active configuration.
    """
    desc = CATALOG.get(name)
    if desc is None:
        return use_config()
    if desc.heavy and not get_config().heavy:
        raise HeavyExampleDisabled(f"{name} is a heavy example; enable the heavy flag to analyse it")
    cfg = get_config()
    raised = {k: max(v, getattr(cfg, k)) for k, v in desc.caps.items()}
    return use_config(**raised)


def feasible_checks(name: Optional[str], candidates) -> list:
    """The subset of ``candidates`` that the catalog entry supports."""
    desc = CATALOG.get(name or "")
    if desc is None or not desc.checks:
        return list(candidates)
    return [c for c in candidates if c in desc.checks]


def evaluate_claims(E: Extension) -> dict:
    """claim name -> (expected, computed, passed)."""
    out = {}
    with analysis_config(E.label or ""):
        for name, claim in E.claims.items():
            got = _claim_value(E, name)
            out[name] = (claim.value, got, got == claim.value)
    return out


# ---------------------------------------------------------------------------
# serialisation


def group_to_dict(G: Group) -> dict:
    return {"label": G.label, "order": G.order, "table": [list(r) for r in G.table]}


def _group_from_dict(d: dict, where: str = "group") -> Group:
    try:
        table = d["table"]
    except (KeyError, TypeError):
        raise ParseError("missing table", where) from None
    if "order" in d and d["order"] != len(table):
        raise ParseError(f"order {d['order']} does not match {len(table)} rows", where)
    _check_rows(table, where)
    try:
        return from_cayley_table(table, d.get("label"))
    except NotAGroup as exc:
        raise ParseError(str(exc), where) from exc


def _check_rows(table, where: str) -> None:
    n = len(table)
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row has length {len(row) if isinstance(row, list) else '?'}, expected {n}", f"{where} row {i}")
        if any(not isinstance(x, int) or not 0 <= x < n for x in row):
            raise ParseError("entry out of range", f"{where} row {i}")
        if sorted(row) != list(range(n)):
            raise ParseError("row is not a permutation", f"{where} row {i}")


def to_dict(x) -> dict:
    from .compat import SequenceReport

    if isinstance(x, Group):
        return group_to_dict(x)
    if isinstance(x, Extension):
        return {
            "kind": "extension",
            "label": x.label,
            "group": group_to_dict(x.G),
            "H": list(x.H.members),
        }
    if isinstance(x, FactorSystem):
        return {
            "kind": "factor_system",
            "H": x.H.label,
            "Q": x.Q.label,
            "phi": [list(p) for p in x.phi],
            "f": [list(r) for r in x.f],
            "H_group": group_to_dict(x.H),
            "Q_group": group_to_dict(x.Q),
        }
    if isinstance(x, Cochain):
        return {"kind": "cochain", "degree": x.degree, "values": list(x.values)}
    if isinstance(x, SequenceReport):
        return {"kind": "report", **x.to_dict()}
    raise TypeError(f"cannot serialise {type(x).__name__}")


@dataclass(frozen=True)
class Cochain:
    degree: int
    values: tuple


def from_dict(d: dict):
    from .compat import Junction, SequenceReport

    if not isinstance(d, dict):
        raise ParseError("expected a JSON object", "top level")
    kind = d.get("kind", "group")
    if kind == "group":
        return _group_from_dict(d)
    if kind == "extension":
        G = _group_from_dict(d.get("group", {}), "extension group")
        members = d.get("H")
        if not isinstance(members, list):
            raise ParseError("missing H member list", "extension")
        E = make_extension(G, Subgroup(G, tuple(members)), d.get("label"))
        return E
    if kind == "factor_system":
        H = _group_from_dict(d.get("H_group", {}), "factor system H")
        Q = _group_from_dict(d.get("Q_group", {}), "factor system Q")
        try:
            fs = FactorSystem(H, Q, d["phi"], d["f"])
        except KeyError as exc:
            raise ParseError(f"missing {exc.args[0]}", "factor system") from None
        problems = fs.problems()
        if problems:
            raise ParseError(problems[0], "factor system")
        return fs
    if kind == "cochain":
        return Cochain(int(d["degree"]), tuple(d["values"]))
    if kind == "report":
        rep = SequenceReport(d["name"])
        rep.terms = [(t["name"], t["order"]) for t in d.get("terms", [])]
        rep.junctions = [Junction(j["at"], j["exact"], j["kernel_size"], j["image_size"]) for j in d.get("junctions", [])]
        rep.checks = dict(d.get("checks", {}))
        rep.values = dict(d.get("values", {}))
        rep.witnesses = dict(d.get("witnesses", {}))
        return rep
    if kind == "report_set":
        return [from_dict(r) for r in d.get("reports", [])]
    if kind == "record":
        if "command" not in d or not isinstance(d.get("data"), dict):
            raise ParseError("record needs command and data", "top level")
        return d
    raise ParseError(f"unknown kind {kind!r}", "top level")


def serialize(x, fmt: str = "json") -> bytes:
    if fmt == "text":
        if not isinstance(x, Group):
            raise TypeError("text format only holds groups")
        lines = [str(x.order)] + [" ".join(map(str, r)) for r in x.table]
        return ("\n".join(lines) + "\n").encode()
    return json.dumps(to_dict(x), sort_keys=True).encode()


def parse(data: bytes | str):
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
        return from_dict(obj)
    return _parse_text(text)


def _parse_text(text: str) -> Group:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty input", "line 1")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError("first line must be the group order", "line 1") from None
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}", "table")
    table = []
    for i, ln in enumerate(lines[1:]):
        try:
            table.append([int(x) for x in ln.split()])
        except ValueError:
            raise ParseError("non-integer entry", f"row {i}") from None
    _check_rows(table, "table")
    try:
        return from_cayley_table(table)
    except NotAGroup as exc:
        raise ParseError(str(exc), "table") from exc


def write_corpus(directory: str | Path, include_heavy: bool = False) -> list:
    """Write every catalog extension as JSON; returns the paths written."""
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    written = []
    for name in catalog_names(include_heavy):
        target = path / f"{name}.json"
        target.write_bytes(serialize(example(name)))
        written.append(target)
    return written


# ---------------------------------------------------------------------------
# naming small groups

_NAMED_CANDIDATES = (
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
    "direct_product(cyclic(4),cyclic(4))",
    "direct_product(cyclic(8),cyclic(2))",
    "direct_product(elem_abelian(2,2),cyclic(4))",
    "elem_abelian(2,4)",
    "direct_product(dihedral(8),cyclic(2))",
    "direct_product(quaternion(8),cyclic(2))",
    "dihedral(16)",
    "quaternion(16)",
    "symmetric(4)",
    "metacyclic(7,3)",
)


def identify_group(G: Group) -> Optional[str]:
    """A constructor expression for G from a short list of small groups, or None."""
    from .groups import is_isomorphic

    for spec in _NAMED_CANDIDATES:
        cand = standard_group(spec)
        if cand.order == G.order and cand.order_profile == G.order_profile:
            if is_isomorphic(G, cand) is not None:
                return spec
    return None
