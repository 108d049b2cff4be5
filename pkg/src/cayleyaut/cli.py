"""Command-line interface.

Commands: group describe, xi, aut, index, verify, report.
Exit codes: 0 success, 1 failed verification check, 2 usage or spec error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from .autsearch import (
    DEFAULT_EXPLICIT_CAP,
    DEFAULT_NODE_BUDGET,
    DEFAULT_VERTEX_CAP,
    colour_stabilizer,
    full_aut,
)
from .cayley import ball, build_graph, full_genset, make_genset
from .classify import verify_prediction
from .errors import (
    CayleyError,
    MalformedInputError,
    ResourceLimitError,
)
from .families import LEMMA_SUITE, RADIUS_SUITE, family_specs, smallsuite
from .presentations import parse_presentation, todd_coxeter
from .rigidity import (
    DEFAULT_SEARCH_BUDGET,
    cayley_index_search,
    index_of,
    run_example,
    verify_quantitative,
)
from .specs import build_group, describe_group, parse_group_spec

CSV_COLUMNS = [
    "group_spec",
    "genset",
    "set_size",
    "full_aut_order",
    "colour_aut_order",
    "cayley_index",
    "colour_index",
    "exhaustive",
    "seed",
]

DEFAULT_EXAMPLES = ("product:3,3", "q8:1", "h:4", "k:1")


def _default_cache_path() -> Path:
    env = os.environ.get("CAYLEY_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cayleyaut" / "results.jsonl"


def _load_cache(path: Path) -> dict[str, dict]:
    out: dict[str, dict] = {}
    if not path.exists():
        return out
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
                out[entry["key"]] = entry["value"]
            except (json.JSONDecodeError, KeyError):
                continue  # ignore torn lines; the cache is best-effort
    return out


def _append_cache(path: Path, key: str, value: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as fh:
        fh.write(json.dumps({"key": key, "value": value}, sort_keys=True) + "\n")


def _cache_key(payload: dict) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:24]


def _print_table(data: dict, stream) -> None:
    width = max((len(str(k)) for k in data), default=0)
    for k, v in data.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        print(f"{str(k).ljust(width)}  {v}", file=stream)


def _emit(data: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True), file=stream)
    else:
        _print_table(data, stream)


def _emit_rows(rows: list[dict], fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        print(json.dumps(rows, indent=2, sort_keys=True), file=stream)
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(row.get(k)) for k in CSV_COLUMNS})
        stream.write(buf.getvalue())
        return
    for row in rows:
        _print_table(row, stream)
        print(file=stream)


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return ";".join(map(str, value))
    return value


def _resolve_group(args):
    """Build the group from --group, --presentation or --presentation-file.

    Returns (group, default generating set or None, display label).
    """
    sources = [
        getattr(args, "group", None),
        getattr(args, "presentation", None),
        getattr(args, "presentation_file", None),
    ]
    if sum(x is not None for x in sources) != 1:
        raise MalformedInputError(
            "give exactly one of --group, --presentation, --presentation-file"
        )
    if args.group is not None:
        spec = parse_group_spec(args.group)
        G, genset = spec.build_with_genset()
        return G, genset, spec.canonical()
    if getattr(args, "presentation", None) is not None:
        text = args.presentation
    else:
        text = Path(args.presentation_file).read_text()
    pres = parse_presentation(text)
    G, ctable = todd_coxeter(pres, max_cosets=getattr(args, "max_cosets", 4096))
    gens = [ctable.rows[0][2 * i] for i in range(ctable.ngens)]
    genset = make_genset(G, gens, symmetrize=True)
    return G, genset, str(pres)


def _split_gens(text: str) -> list[str]:
    """Split on commas, but not inside parentheses (element names like
    '(1,0)' carry commas)."""
    parts: list[str] = []
    depth = 0
    current = []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current.append(ch)
    parts.append("".join(current))
    return [p for p in (part.strip() for part in parts) if p]


def _resolve_genset(G, args, default):
    if getattr(args, "full", False):
        return full_genset(G)
    tokens = getattr(args, "gens", None)
    if tokens:
        elems = []
        for tok in _split_gens(tokens):
            try:
                elems.append(G.element_by_name(tok))
            except MalformedInputError:
                try:
                    elems.append(int(tok))
                except ValueError:
                    raise MalformedInputError(
                        f"{tok!r} is neither an element name nor an index"
                    ) from None
        return make_genset(G, elems, symmetrize=not args.exact_gens)
    if default is not None:
        return default
    raise MalformedInputError("no generating set: pass --gens or --full")


def _write_dot(graph, path: str) -> None:
    Path(path).write_text(graph.to_dot())


# -- commands -------------------------------------------------------------


def cmd_group_describe(args) -> int:
    _emit(describe_group(args.group), args.format)
    return 0


def cmd_xi(args) -> int:
    G, default, label = _resolve_group(args)
    S = _resolve_genset(G, args, default)
    if args.radius > 1:
        S = ball(S, args.radius)
    graph = build_graph(S)
    if args.emit_dot:
        _write_dot(graph, args.emit_dot)
    if args.emit_csv:
        Path(args.emit_csv).write_text(graph.to_adjacency_csv())
    stab = colour_stabilizer(graph, node_budget=args.node_budget)
    data = stab.to_json_dict()
    data.update(
        group=label,
        genset=list(S.names),
        radius=args.radius,
        colour_group_order=G.order * stab.order,
    )
    _emit(data, args.format)
    return 0


def cmd_aut(args) -> int:
    G, default, label = _resolve_group(args)
    S = _resolve_genset(G, args, default)
    if args.radius > 1:
        S = ball(S, args.radius)
    graph = build_graph(S)
    if args.emit_dot:
        _write_dot(graph, args.emit_dot)
    if args.emit_csv:
        Path(args.emit_csv).write_text(graph.to_adjacency_csv())
    aut = full_aut(graph, vertex_cap=args.vertex_cap, explicit_cap=args.explicit_cap)
    data = aut.to_json_dict()
    data.update(group=label, genset=list(S.names), cayley_index=aut.order // G.order)
    _emit(data, args.format)
    return 0


def cmd_index(args) -> int:
    G, _default, label = _resolve_group(args)
    exhaustive = True if args.exhaustive else None
    key = _cache_key(
        {
            "op": "index",
            "group": G.digest,
            "exhaustive": bool(args.exhaustive),
            "budget": args.budget,
            "seed": args.seed,
        }
    )
    cache_path = Path(args.cache) if args.cache else _default_cache_path()
    if not args.no_cache:
        cached = _load_cache(cache_path).get(key)
        if cached is not None:
            cached["cached"] = True
            _emit_rows([cached], args.format)
            return 0
    result = cayley_index_search(
        G, budget=args.budget, exhaustive=exhaustive, seed=args.seed
    )
    witness = make_genset(G, result.witness_genset)
    report = index_of(witness)
    row = {
        "group_spec": label,
        "genset": list(result.witness_names),
        "set_size": len(result.witness_genset),
        "full_aut_order": report.full_aut_order,
        "colour_aut_order": report.colour_aut_order,
        "cayley_index": report.cayley_index,
        "colour_index": report.colour_index,
        "best_index": result.best_index,
        "exhaustive": result.exhaustive,
        "sets_examined": result.sets_examined,
        "seed": result.seed,
    }
    if not args.no_cache:
        _append_cache(cache_path, key, row)
    _emit_rows([row], args.format)
    return 0


def _run_verify_checks(args) -> list[tuple[str, bool, dict]]:
    checks: list[tuple[str, bool, dict]] = []
    what = args.what

    if what in ("classification", "all"):
        if getattr(args, "group", None):
            targets = [(args.group, build_group(args.group))]
        else:
            targets = [
                (spec, build_group(spec))
                for spec in family_specs(getattr(args, "family", None) or "smallsuite")
            ]
        for spec, G in targets:
            ok, details = verify_prediction(G)
            checks.append((f"classification:{spec}", ok, details))

    if what in ("radius", "all"):
        if what == "radius" and getattr(args, "group", None):
            G, default, label = _resolve_group(args)
            S = _resolve_genset(G, args, default)
            rep = verify_quantitative(G, S)
            checks.append((f"radius:{label}", rep.passed, rep.to_json_dict()))
        else:
            for inst in RADIUS_SUITE:
                G, S = inst.build()
                rep = verify_quantitative(G, S)
                checks.append((f"radius:{inst.label}", rep.passed, rep.to_json_dict()))

    if what in ("example", "all"):
        names = [args.name] if getattr(args, "name", None) else list(DEFAULT_EXAMPLES)
        for name in names:
            rep = run_example(name)
            checks.append((f"example:{name}", rep.passed, rep.to_json_dict()))

    if what in ("lemmas", "all"):
        for lemma in LEMMA_SUITE:
            checks.append((f"lemma:{lemma.name}", lemma.run(), {}))

    return checks


def cmd_verify(args) -> int:
    checks = _run_verify_checks(args)
    if args.format == "json":
        payload = {
            "checks": [
                {"name": name, "pass": ok, "details": details}
                for name, ok, details in checks
            ],
            "pass": all(ok for _, ok, _ in checks),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for name, ok, _details in checks:
            print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if all(ok for _, ok, _ in checks) else 1


def cmd_report(args) -> int:
    cache_path = Path(args.cache) if args.cache else _default_cache_path()
    rows = list(_load_cache(cache_path).values())
    _emit_rows(rows, args.format)
    return 0


# -- parser wiring ----------------------------------------------------------


def _add_group_source(p, with_gens=True):
    p.add_argument("--group", help="group spec, e.g. q8 or dic:abelian:6@3")
    p.add_argument("--presentation", help="presentation text, e.g. '< a | a^5 >'")
    p.add_argument("--presentation-file", help="file containing a presentation")
    p.add_argument("--max-cosets", type=int, default=4096, help="coset cap")
    if with_gens:
        p.add_argument("--gens", help="comma-separated element names or indices")
        p.add_argument("--full", action="store_true", help="use all non-identity elements")
        p.add_argument(
            "--exact-gens",
            action="store_true",
            help="require --gens to be symmetric as given instead of symmetrizing",
        )
        p.add_argument("--radius", type=int, default=1, help="replace S by its ball")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyaut",
        description="Cayley graph symmetry: colour-preserving and full automorphisms",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    group_p = sub.add_parser("group", help="group utilities")
    group_sub = group_p.add_subparsers(dest="group_command", required=True)
    describe_p = group_sub.add_parser("describe", help="structural summary of a group")
    describe_p.add_argument("--group", required=True)
    describe_p.add_argument("--format", choices=["json", "table"], default="table")
    describe_p.set_defaults(func=cmd_group_describe)

    xi_p = sub.add_parser("xi", help="identity-vertex colour stabilizer")
    _add_group_source(xi_p)
    xi_p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    xi_p.add_argument("--emit-dot", metavar="PATH")
    xi_p.add_argument("--emit-csv", metavar="PATH", help="write the edge list as CSV")
    xi_p.add_argument("--format", choices=["json", "table"], default="table")
    xi_p.set_defaults(func=cmd_xi)

    aut_p = sub.add_parser("aut", help="full automorphism group of the graph")
    _add_group_source(aut_p)
    aut_p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    aut_p.add_argument("--explicit-cap", type=int, default=DEFAULT_EXPLICIT_CAP)
    aut_p.add_argument("--emit-dot", metavar="PATH")
    aut_p.add_argument("--emit-csv", metavar="PATH", help="write the edge list as CSV")
    aut_p.add_argument("--format", choices=["json", "table"], default="table")
    aut_p.set_defaults(func=cmd_aut)

    index_p = sub.add_parser("index", help="minimize the Cayley index over gensets")
    _add_group_source(index_p, with_gens=False)
    index_p.add_argument("--exhaustive", action="store_true")
    index_p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    index_p.add_argument("--seed", type=int, default=0)
    index_p.add_argument("--cache", metavar="PATH")
    index_p.add_argument("--no-cache", action="store_true")
    index_p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    index_p.set_defaults(func=cmd_index)

    verify_p = sub.add_parser("verify", help="run verification checks")
    verify_p.add_argument(
        "what", choices=["classification", "radius", "example", "lemmas", "all"]
    )
    verify_p.add_argument("--family", help="named family (smallsuite)")
    verify_p.add_argument("--name", help="example name, e.g. product:3,3")
    _add_group_source(verify_p)
    verify_p.add_argument("--format", choices=["json", "table"], default="table")
    verify_p.set_defaults(func=cmd_verify)

    report_p = sub.add_parser("report", help="dump cached index results")
    report_p.add_argument("--cache", metavar="PATH")
    report_p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    report_p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except CayleyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
