"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 proven non-existence
(map search), 4 undecided within budget, 5 property violation
(verification).  ``--json`` switches every command to a single
machine-readable object with a ``schema`` version field.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import samples
from .coloring import chromatic_number, graph_chromatic_number, strict_chromatic_number
from .complexes import (
    Complex,
    boundary_complex,
    complete_complex,
    generate,
    metrics,
    skeleton,
    underlying_graph,
)
from .complexity import INFINITY, BoundReport, ComplexityQuery, bounds, compute
from .homsearch import SearchLimits, SearchProblem, UndecidedError, find_map
from .maps import classify
from .oracle import (
    OracleLimits,
    brute_force_chromatic,
    brute_force_cover_complexity,
    brute_force_map_search,
)
from .scx import ScxError, parse_map, parse_scx, serialize_map, serialize_scx
from .verify import VerifyConfig, replay_bundle, run_verify

SCHEMA = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _UsageError(f"{self.prog}: {message}")


def _read_complex(path: str) -> Complex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_scx(text, name=Path(path).stem)
    except ScxError as exc:
        raise _UsageError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _num(x) -> object:
    if x is None:
        return None
    if x == INFINITY:
        return "infinity"
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def _fmt(x) -> str:
    if x is None:
        return "-"
    if x == INFINITY:
        return "infinity"
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)


def _limits(args) -> SearchLimits:
    return SearchLimits(
        max_nodes=args.node_budget,
        max_seconds=args.time_budget if args.time_budget else math.inf,
    )


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-budget", type=int, default=50_000_000,
                   help="search node budget before reporting undecided")
    p.add_argument("--time-budget", type=float, default=0,
                   help="wall-clock budget in seconds (0 = unlimited)")


def _add_kind_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=("facet", "strict"), default="facet",
                   help="map kind the parts must admit")
    p.add_argument("--strict", action="store_true",
                   help="shorthand for --kind strict")
    p.add_argument("--injective", action="store_true",
                   help="require injective maps")


def _kind_of(args) -> str:
    return "strict" if args.strict else args.kind


# ---------------------------------------------------------------------------
# subcommands

def _cmd_info(args) -> int:
    c = _read_complex(args.complex)
    m = metrics(c)
    payload = {
        "schema": SCHEMA,
        "command": "info",
        "name": c.name,
        "vertices": list(c.labels),
        "facets": c.facet_lists(),
        "dim": m.dim,
        "facet_count": len(c.facets),
        "pure": m.pure,
        "isolated": list(m.isolated),
        "degree": m.degree,
        "min_facet_size": m.min_facet_size,
    }
    lines = [
        f"name:        {c.name or '-'}",
        f"vertices:    {c.n} ({' '.join(c.labels)})",
        f"facets:      {len(c.facets)}",
    ]
    lines += [f"  {' '.join(f)}" for f in c.facet_lists()]
    lines += [
        f"dim:         {m.dim}",
        f"pure:        {m.pure}",
        f"isolated:    {' '.join(m.isolated) or '-'}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_chromatic(args) -> int:
    c = _read_complex(args.complex)
    if args.graph:
        res, mode = graph_chromatic_number(underlying_graph(c)), "graph"
    elif args.strict:
        res, mode = strict_chromatic_number(c), "strict"
    else:
        res, mode = chromatic_number(c), "complex"
    witness = res.witness.as_dict() if res.witness else None
    payload = {
        "schema": SCHEMA,
        "command": "chromatic",
        "mode": mode,
        "value": res.value,
        "witness": witness,
    }
    lines = [f"chromatic number ({mode}): {res.value}"]
    if witness:
        lines.append("witness: " + " ".join(f"{v}={witness[v]}" for v in sorted(witness)))
    _emit(args, payload, lines)
    return 0


def _cmd_map_check(args) -> int:
    source = _read_complex(args.source)
    target = _read_complex(args.target)
    kind = _kind_of(args)
    if args.map:
        try:
            m = parse_map(Path(args.map).read_text(), source, target)
        except OSError as exc:
            raise _UsageError(f"cannot read {args.map}: {exc.strerror or exc}") from exc
        except ScxError as exc:
            raise _UsageError(f"{args.map}: {exc}") from exc
        cls = classify(m)
        ok = (cls.facet if kind == "facet" else cls.strict) and (
            cls.injective or not args.injective
        )
        payload = {
            "schema": SCHEMA,
            "command": "map-check",
            "kind": kind,
            "injective": args.injective,
            "mode": "classify",
            "map": m.as_dict(),
            "classes": {
                "simplicial": cls.simplicial,
                "strict": cls.strict,
                "facet": cls.facet,
                "injective": cls.injective,
            },
            "witness": sorted(cls.witness) if cls.witness else None,
            "satisfies": ok,
        }
        lines = [
            "classes: "
            + " ".join(
                name
                for name, flag in (
                    ("simplicial", cls.simplicial),
                    ("strict", cls.strict),
                    ("facet", cls.facet),
                    ("injective", cls.injective),
                )
                if flag
            ),
        ]
        if cls.witness:
            lines.append(
                "first-violation witness (earliest failed class): "
                + " ".join(sorted(cls.witness))
            )
        lines.append(f"satisfies requested kind: {'yes' if ok else 'no'}")
        _emit(args, payload, lines)
        return 0
    try:
        res = find_map(SearchProblem(source, target, kind, args.injective, _limits(args)))
    except UndecidedError as exc:
        payload = {
            "schema": SCHEMA,
            "command": "map-check",
            "kind": kind,
            "injective": args.injective,
            "found": "undecided",
            "nodes": exc.nodes,
        }
        _emit(args, payload, [f"UNDECIDED after {exc.nodes} nodes"])
        return 4
    payload = {
        "schema": SCHEMA,
        "command": "map-check",
        "kind": kind,
        "injective": args.injective,
        "found": res.found,
        "map": res.map.as_dict() if res.found else None,
        "nodes": res.nodes,
    }
    if res.found:
        _emit(args, payload, [serialize_map(res.map).rstrip("\n")])
        return 0
    _emit(args, payload, ["NONE"])
    return 3


def _bounds_payload(b: BoundReport) -> dict:
    return {
        "finite": b.finite,
        "eta_upper": _num(b.eta_upper),
        "chromatic_lower": _num(b.chromatic_lower),
        "graph_lower": _num(b.graph_lower),
        "complete_target_ic": _num(b.complete_target_ic),
        "exact": _num(b.exact),
        "lower": _num(b.lower),
        "upper": _num(b.upper),
    }


def _bounds_lines(b: BoundReport) -> list[str]:
    return [
        f"finite:             {b.finite}",
        f"eta upper:          {_fmt(b.eta_upper)}",
        f"chromatic lower:    {_fmt(b.chromatic_lower)}",
        f"graph lower:        {_fmt(b.graph_lower)}",
        f"complete-target ic: {_fmt(b.complete_target_ic)}",
        f"exact:              {_fmt(b.exact)}",
    ]


def _cmd_complexity(args) -> int:
    source = _read_complex(args.source)
    target = _read_complex(args.target)
    q = ComplexityQuery(source, target, _kind_of(args), args.injective, _limits(args))
    b = bounds(q, facet_cap=args.facet_cap)
    payload = {
        "schema": SCHEMA,
        "command": "complexity",
        "kind": q.kind,
        "injective": q.injective,
        "bounds": _bounds_payload(b),
    }
    if args.bounds_only:
        _emit(args, payload, _bounds_lines(b))
        return 0
    try:
        res = compute(q, facet_cap=args.facet_cap)
    except UndecidedError as exc:
        payload["value"] = "undecided"
        payload["nodes"] = exc.nodes
        _emit(args, payload, [f"UNDECIDED after {exc.nodes} nodes"])
        return 4
    payload["value"] = _num(res.value)
    payload["nodes"] = res.nodes
    payload["cover"] = (
        [
            {"facets": [sorted(f) for f in g.facets], "map": g.map.as_dict()}
            for g in res.cover.groups
        ]
        if res.cover
        else None
    )
    lines = [f"value: {_fmt(res.value)}"]
    if res.cover:
        for i, g in enumerate(res.cover.groups, start=1):
            facets = " + ".join("{" + " ".join(sorted(f)) + "}" for f in g.facets)
            assign = " ".join(f"{k}->{v}" for k, v in sorted(g.map.as_dict().items()))
            lines.append(f"group {i}: {facets}")
            lines.append(f"  map: {assign or '(empty)'}")
    _emit(args, payload, lines)
    return 0


def _cmd_bounds(args) -> int:
    source = _read_complex(args.source)
    target = _read_complex(args.target)
    q = ComplexityQuery(source, target, _kind_of(args), args.injective)
    b = bounds(q, facet_cap=args.facet_cap)
    payload = {
        "schema": SCHEMA,
        "command": "bounds",
        "kind": q.kind,
        "injective": q.injective,
        "bounds": _bounds_payload(b),
    }
    _emit(args, payload, _bounds_lines(b))
    return 0


def _cmd_gen(args) -> int:
    if args.generator == "sample":
        try:
            c = samples.load(args.name)
        except KeyError as exc:
            raise _UsageError(str(exc.args[0])) from exc
    elif args.generator == "gamma":
        c = complete_complex(args.n)
    elif args.generator == "kn":
        c = boundary_complex(args.n)
    else:
        c = generate(
            "random",
            args.n,
            {
                "seed": args.seed,
                "density": args.density,
                "max_facet_size": args.max_facet_size,
            },
        )
    text = serialize_scx(c)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_skeleton(args) -> int:
    c = _read_complex(args.complex)
    if args.q < 0:
        raise _UsageError("the skeleton dimension must be nonnegative")
    out = skeleton(c, args.q)
    text = serialize_scx(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.replay:
        try:
            text = Path(args.replay).read_text()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.replay}: {exc.strerror or exc}") from exc
        ok, detail = replay_bundle(text)
        payload = {
            "schema": SCHEMA,
            "command": "verify",
            "mode": "replay",
            "passed": ok,
            "detail": detail,
        }
        _emit(args, payload, [detail])
        return 0 if ok else 5
    suites = tuple(args.suites.split(",")) if args.suites else None
    cfg = VerifyConfig(seed=args.seed, trials=args.trials, suites=suites)
    try:
        report = run_verify(cfg)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    bundle_paths = []
    if not report.ok:
        out_dir = Path(args.output or ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, f in enumerate(report.failures):
            path = out_dir / f"counterexample-{f.check}-{f.trial}-{i}.json"
            path.write_text(f.bundle + "\n")
            bundle_paths.append(str(path))
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "passed": report.ok,
        "suites": report.passed,
        "failures": [
            {"suite": f.suite, "check": f.check, "trial": f.trial, "detail": f.detail}
            for f in report.failures
        ],
        "observations": report.observations,
        "bundles": bundle_paths,
    }
    lines = [report.text().rstrip("\n")]
    for p in bundle_paths:
        lines.append(f"counterexample bundle: {p}")
    _emit(args, payload, lines)
    return 0 if report.ok else 5


def _cmd_oracle(args) -> int:
    lims = OracleLimits()
    if args.oracle_command == "chromatic":
        c = _read_complex(args.complex)
        try:
            value = brute_force_chromatic(c, lims)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
        _emit(
            args,
            {"schema": SCHEMA, "command": "oracle chromatic", "value": value},
            [f"chromatic number (exhaustive): {value}"],
        )
        return 0
    source = _read_complex(args.source)
    target = _read_complex(args.target)
    kind = _kind_of(args)
    if args.oracle_command == "map-search":
        try:
            m = brute_force_map_search(source, target, kind, args.injective, lims)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
        payload = {
            "schema": SCHEMA,
            "command": "oracle map-search",
            "kind": kind,
            "injective": args.injective,
            "found": m is not None,
            "map": m.as_dict() if m else None,
        }
        if m is None:
            _emit(args, payload, ["NONE"])
            return 3
        _emit(args, payload, [serialize_map(m).rstrip("\n")])
        return 0
    try:
        value = brute_force_cover_complexity(source, target, kind, args.injective, lims)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    _emit(
        args,
        {
            "schema": SCHEMA,
            "command": "oracle complexity",
            "kind": kind,
            "injective": args.injective,
            "value": _num(value),
        },
        [f"value (exhaustive): {_fmt(value)}"],
    )
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(
        prog="facetcx",
        description="Exact cover-complexity solver for abstract simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="describe a complex")
    p.add_argument("complex", help=".scx file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("chromatic", help="chromatic number with witness")
    p.add_argument("complex", help=".scx file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--graph", action="store_true", help="underlying graph's number")
    mode.add_argument("--strict", action="store_true", help="rainbow (per-facet) number")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_chromatic)

    p = sub.add_parser("map-check", help="search for a map, or classify one with --map")
    p.add_argument("source", help="source .scx file")
    p.add_argument("target", help="target .scx file")
    _add_kind_flags(p)
    p.add_argument("--map", help="map listing to classify instead of searching")
    _add_limit_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_map_check)

    p = sub.add_parser("complexity", help="exact minimum cover with certificate")
    p.add_argument("source", help="source .scx file")
    p.add_argument("target", help="target .scx file")
    _add_kind_flags(p)
    p.add_argument("--facet-cap", type=int, default=20,
                   help="refuse sources with more constrained facets than this")
    p.add_argument("--bounds-only", action="store_true",
                   help="report theorem bounds without solving")
    _add_limit_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_complexity)

    p = sub.add_parser("bounds", help="theorem bounds without solving")
    p.add_argument("source", help="source .scx file")
    p.add_argument("target", help="target .scx file")
    _add_kind_flags(p)
    p.add_argument("--facet-cap", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("gen", help="generate an .scx file")
    gsub = p.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("gamma", help="one-facet complex on n vertices")
    g.add_argument("n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(fn=_cmd_gen)
    g = gsub.add_parser("kn", help="hollow complex on n vertices")
    g.add_argument("n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(fn=_cmd_gen)
    g = gsub.add_parser("random", help="seeded random complex")
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--max-facet-size", type=int, default=3)
    g.add_argument("-o", "--output")
    g.set_defaults(fn=_cmd_gen)
    g = gsub.add_parser("sample", help="built-in sample complex")
    g.add_argument("name", help=", ".join(samples.names()))
    g.add_argument("-o", "--output")
    g.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("skeleton", help="write the q-skeleton of a complex")
    p.add_argument("complex", help=".scx file")
    p.add_argument("q", type=int, help="skeleton dimension")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_skeleton)

    p = sub.add_parser("verify", help="run the property-verification harness")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--suites", help="comma-separated subset of suites")
    p.add_argument("--replay", help="re-run a counterexample bundle")
    p.add_argument("-o", "--output", help="directory for counterexample bundles")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive reference implementations")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    o = osub.add_parser("map-search", help="first matching map by enumeration")
    o.add_argument("source")
    o.add_argument("target")
    _add_kind_flags(o)
    o.add_argument("--json", action="store_true")
    o.set_defaults(fn=_cmd_oracle)
    o = osub.add_parser("complexity", help="cover value by enumeration")
    o.add_argument("source")
    o.add_argument("target")
    _add_kind_flags(o)
    o.add_argument("--json", action="store_true")
    o.set_defaults(fn=_cmd_oracle)
    o = osub.add_parser("chromatic", help="chromatic number by enumeration")
    o.add_argument("complex")
    o.add_argument("--json", action="store_true")
    o.set_defaults(fn=_cmd_oracle)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ScxError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
