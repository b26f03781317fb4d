"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a verification check
failed, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import compat, corpus_io
from .autos import aut_group, out_group
from .cohomology import center_module, h1, h2, z1
from .config import Config, get_config, use_config
from .constructors import standard_group
from .errors import CapExceeded, ExtautoError, VerificationFailure
from .extensions import Extension, factor_system, is_split, make_extension, outer_action
from .groups import Group, center, centralizer, is_isomorphic, is_solvable, subgroup_generated

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3

VERIFIERS = {
    "cycle": compat.verify_cycle_sequence,
    "basic": compat.verify_basic_sequence,
    "counting": compat.counting_check,
    "series": compat.normal_series,
    "solvability": compat.solvability_report,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--example", help="catalog example name")
    p.add_argument("--group", action="append", default=[], metavar="FILE", help="group or extension file (JSON or text table)")
    p.add_argument("--spec", action="append", default=[], help='group descriptor such as "dihedral(8)"')
    p.add_argument("--subgroup", help='generators of H as "i,j,k"')
    p.add_argument("--cap-order", type=int)
    p.add_argument("--cap-sigma", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--heavy", action="store_true", help="allow heavy catalog examples")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="extauto", description="Automorphisms of finite group extensions.")
    sub = parser.add_subparsers(dest="area", required=True, parser_class=_Parser)

    group = sub.add_parser("group", help="single-group computations")
    gsub = group.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("info", "aut", "iso"):
        _add_common(gsub.add_parser(name))

    ext = sub.add_parser("ext", help="extension analysis")
    esub = ext.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("analyze", "classes", "orbits", "split-orbits"):
        _add_common(esub.add_parser(name))

    explore = sub.add_parser("explore", help="exploratory computations without claims")
    xsub = explore.add_subparsers(dest="action", required=True, parser_class=_Parser)
    _add_common(xsub.add_parser("split-orbits"))

    verify = sub.add_parser("verify", help="check exact sequences and formulas")
    vsub = verify.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in (*VERIFIERS, "all"):
        _add_common(vsub.add_parser(name))

    corpus = sub.add_parser("corpus", help="the example catalog")
    csub = corpus.add_subparsers(dest="action", required=True, parser_class=_Parser)
    _add_common(csub.add_parser("list"))
    run = csub.add_parser("run")
    _add_common(run)
    run.add_argument("names", nargs="*", help="examples to run (default: whole catalog)")
    export = csub.add_parser("export")
    _add_common(export)
    export.add_argument("directory", help="where to write one JSON file per example")
    return parser


# ---------------------------------------------------------------------------
# inputs


def _load_file(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return corpus_io.parse(data)


def _groups(args) -> list:
    out = [standard_group(s) for s in args.spec]
    for path in args.group:
        obj = _load_file(path)
        out.append(obj.G if isinstance(obj, Extension) else obj)
    return out


def _one_group(args) -> Group:
    if args.example:
        return corpus_io.example(args.example).G
    groups = _groups(args)
    if len(groups) != 1:
        raise UsageError("give exactly one of --example, --spec or --group")
    return groups[0]


def _extension(args) -> Extension:
    if args.example:
        if args.spec or args.group:
            raise UsageError("--example cannot be combined with --spec or --group")
        return corpus_io.example(args.example)
    if len(args.group) == 1 and not args.spec:
        obj = _load_file(args.group[0])
        if isinstance(obj, Extension):
            return obj
        G = obj
    else:
        G = _one_group(args)
    if not args.subgroup:
        raise UsageError("--subgroup is required unless the input is an extension")
    try:
        gens = [int(x) for x in args.subgroup.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --subgroup {args.subgroup!r}") from None
    if any(not 0 <= g < G.order for g in gens):
        raise UsageError("--subgroup index out of range")
    return make_extension(G, subgroup_generated(G, gens))


# ---------------------------------------------------------------------------
# commands


def _record(command: str, data: dict) -> dict:
    return {"kind": "record", "command": command, "data": data}


def cmd_group(args) -> tuple:
    if args.action == "iso":
        groups = [corpus_io.example(args.example).G] if args.example else []
        groups += _groups(args)
        if len(groups) != 2:
            raise UsageError("group iso needs exactly two groups")
        hom = is_isomorphic(*groups)
        data = {"isomorphic": hom is not None, "map": list(hom.images) if hom is not None else None}
        return _record("group iso", data), EXIT_OK
    G = _one_group(args)
    if args.action == "info":
        data = {
            "label": G.label,
            "order": G.order,
            "abelian": G.is_abelian,
            "solvable": is_solvable(G),
            "center_order": center(G).order,
            "generators": list(G.generators),
            "element_orders": dict(G.order_profile),
            "identified_as": corpus_io.identify_group(G),
        }
        return _record("group info", data), EXIT_OK
    A = aut_group(G)
    O = out_group(A)
    data = {
        "order": A.order,
        "inner_order": len(A.inner),
        "out_order": O.order,
        "solvable": A.is_solvable(),
        "generators": [list(A.elements[i]) for i in _aut_gens(A)],
    }
    return _record("group aut", data), EXIT_OK


def _aut_gens(A) -> list:
    span = {0}
    gens = []
    for i in range(A.order):
        if i in span:
            continue
        gens.append(i)
        frontier = list(span)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = A.mul(x, g)
                    if y not in span:
                        span.add(y)
                        new.append(y)
            frontier = new
    return gens


def _analysis(E: Extension) -> dict:
    mod = center_module(E)
    oa = outer_action(E)
    S = compat.compatibility_group(E)
    orbit = compat.orbit_and_stabilizer(E)
    return {
        "label": E.label,
        "G_order": E.G.order,
        "H_order": E.H.order,
        "Q_order": E.Q.order,
        "H_members": list(E.H.members),
        "phi_trivial": oa.is_trivial(),
        "phi_injective": oa.is_injective(),
        "centric": set(centralizer(E.G, E.H).members) <= set(E.H.members),
        "split": is_split(factor_system(E)),
        "Z1_order": len(z1(mod)),
        "H1_order": h1(mod).order,
        "H2_order": h2(mod).order,
        "S_order": S.order,
        "B_order": len(S.b_subgroup),
        "Sbar_order": S.sbar.order,
        "Shat_order": S.shat.order,
        "aut_GH_order": len(compat.relative_automorphisms(E)),
        "fiber_size": len(compat.fiber_classes(E)),
        "orbit_sizes": sorted(len(o) for o in compat.fiber_orbits(E)),
        "own_orbit_size": len(orbit.orbit),
        "stabilizer_order": len(orbit.stabilizer),
    }


def _classes(E: Extension) -> list:
    orbit_of = {}
    for k, orb in enumerate(compat.fiber_orbits(E)):
        for i in orb:
            orbit_of[i] = k
    out = []
    for i, fs in enumerate(compat.fiber_classes(E)):
        G = fs.extension.G
        out.append(
            {
                "index": i,
                "split": is_split(fs),
                "orbit": orbit_of[i],
                "group_order": G.order,
                "identified_as": corpus_io.identify_group(G),
            }
        )
    return out


def _split_orbits(E: Extension) -> dict:
    classes = _classes(E)
    rows = []
    for k, orb in enumerate(compat.fiber_orbits(E)):
        split = [classes[i]["split"] for i in orb]
        rows.append({"orbit": k, "size": len(orb), "split_members": sum(split)})
    n_split = sum(c["split"] for c in classes)
    return {
        "fiber_size": len(classes),
        "split_classes": n_split,
        "orbits": rows,
        "all_split_if_one_is": n_split in (0, len(classes)),
    }


def cmd_ext(args) -> tuple:
    E = _extension(args)
    with corpus_io.analysis_config(E.label or ""):
        if args.action == "analyze":
            return _record("ext analyze", _analysis(E)), EXIT_OK
        if args.action == "classes":
            return _record("ext classes", {"classes": _classes(E)}), EXIT_OK
        if args.action == "orbits":
            orbits = compat.fiber_orbits(E)
            data = {"orbits": orbits, "sizes": sorted(len(o) for o in orbits)}
            return _record("ext orbits", data), EXIT_OK
        return _record(f"{args.area} split-orbits", _split_orbits(E)), EXIT_OK


def _run_verifiers(E: Extension, names: Sequence[str]) -> list:
    with corpus_io.analysis_config(E.label or ""):
        return [VERIFIERS[n](E) for n in names]


def cmd_verify(args) -> tuple:
    E = _extension(args)
    names = corpus_io.feasible_checks(E.label, VERIFIERS) if args.action == "all" else [args.action]
    reports = _run_verifiers(E, names)
    status = EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY
    if args.action == "all":
        orbit_sizes = None
        if len(names) == len(VERIFIERS):
            with corpus_io.analysis_config(E.label or ""):
                orbit_sizes = sorted(len(o) for o in compat.fiber_orbits(E))
        payload = {
            "kind": "report_set",
            "label": E.label,
            "orbit_sizes": orbit_sizes,
            "reports": [corpus_io.to_dict(r) for r in reports],
            "skipped": [n for n in VERIFIERS if n not in names],
        }
        return payload, status
    return corpus_io.to_dict(reports[0]), status


def _run_example(name: str, config: Config) -> dict:
    """Claims and all verifiers for one catalog entry (runs in a worker)."""
    with use_config(config):
        try:
            E = corpus_io.example(name)
            claims = corpus_io.evaluate_claims(E)
            reports = _run_verifiers(E, corpus_io.feasible_checks(name, VERIFIERS))
        except CapExceeded as exc:
            return {"name": name, "status": "cap", "error": str(exc)}
    failed_claims = [k for k, (_, _, ok) in claims.items() if not ok]
    failed_reports = [r.name for r in reports if not r.ok]
    return {
        "name": name,
        "status": "ok" if not failed_claims and not failed_reports else "failed",
        "claims": {k: {"expected": e, "computed": g, "ok": ok} for k, (e, g, ok) in claims.items()},
        "failed_claims": failed_claims,
        "failed_reports": failed_reports,
    }


def cmd_corpus(args) -> tuple:
    cfg = get_config()
    if args.action == "list":
        rows = [
            {"name": d.name, "heavy": d.heavy, "description": d.description, "annotations": d.annotations}
            for d in corpus_io.CATALOG.values()
        ]
        return _record("corpus list", {"examples": rows}), EXIT_OK
    if args.action == "export":
        paths = corpus_io.write_corpus(args.directory, include_heavy=True)
        return _record("corpus export", {"written": [str(p) for p in paths]}), EXIT_OK
    names = args.names or corpus_io.catalog_names(include_heavy=cfg.heavy)
    for n in names:
        if n not in corpus_io.CATALOG:
            corpus_io.example(n)  # raises UnknownExample
    if cfg.threads > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_run_example, names, [cfg] * len(names)))
    else:
        results = [_run_example(n, cfg) for n in names]
    if any(r["status"] == "failed" for r in results):
        status = EXIT_VERIFY
    elif any(r["status"] == "cap" for r in results):
        status = EXIT_CAP
    else:
        status = EXIT_OK
    return _record("corpus run", {"results": results}), status


# ---------------------------------------------------------------------------
# output


def _render_text(payload: dict) -> str:
    kind = payload.get("kind")
    if kind == "report":
        return corpus_io.from_dict(payload).render()
    if kind == "report_set":
        head = str(payload["label"])
        if payload["orbit_sizes"] is not None:
            head += f": orbit sizes {', '.join(map(str, payload['orbit_sizes']))}"
        if payload["skipped"]:
            head += f" (skipped: {', '.join(payload['skipped'])})"
        return "\n".join([head] + [corpus_io.from_dict(r).render() for r in payload["reports"]])
    data = payload.get("data", {})
    if payload.get("command") == "corpus run":
        lines = []
        for r in data["results"]:
            extra = ""
            if r["status"] == "failed":
                extra = f" claims {r['failed_claims']} reports {r['failed_reports']}"
            elif r["status"] == "cap":
                extra = f" ({r['error']})"
            lines.append(f"{r['name']}: {r['status']}{extra}")
        return "\n".join(lines)
    if payload.get("command") == "corpus list":
        return "\n".join(
            f"{r['name']}{' [heavy]' if r['heavy'] else ''}: {r['description']}" for r in data["examples"]
        )
    lines = [payload.get("command", "")]
    for k, v in data.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"  {k}:")
            lines += [f"    {json.dumps(x, sort_keys=True)}" for x in v]
        else:
            lines.append(f"  {k}: {v}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    overrides = {"output_format": args.format, "heavy": args.heavy or get_config().heavy}
    try:
        if args.cap_order is not None:
            overrides["order_cap"] = args.cap_order
        if args.cap_sigma is not None:
            overrides["sigma_cap"] = args.cap_sigma
        with use_config(**overrides):
            handler = {"group": cmd_group, "ext": cmd_ext, "explore": cmd_ext, "verify": cmd_verify, "corpus": cmd_corpus}
            payload, status = handler[args.area](args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=stderr)
        return EXIT_CAP
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except (ExtautoError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True), file=stdout)
    else:
        print(_render_text(payload), file=stdout)
    return status


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))
