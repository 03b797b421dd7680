"""Command-line front end.

Exit codes: 0 computed, 1 predicate false (konig / packing / ntf), 2 usage or
parse error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .analysis import (
    AnalysisConfig,
    all_proper_minors_ntf,
    analyze,
    default_bound,
    find_good_edge,
    matching_number,
    ntf_verdict,
)
from .decomposition import (
    ass_witness_oracle,
    associated_primes,
    is_unmixed,
    minimal_primes,
    symbolic_power,
)
from .errors import BudgetError, UsageError
from .hypergraphs import (
    KIND_PROPER,
    MinorSpec,
    apply_minor,
    connected_components,
    cover_number,
    edge_ideal,
    hypergraph_of,
    isolated_vertices,
    konig,
    max_matching,
    packing,
)
from .monomials import MonomialIdeal, var_name
from .parsing import FORMAT_EDGES, FORMAT_IDEAL, parse_input, parse_monomial
from .polarize import polarize_ideal
from .render import (
    SCHEMA_VERSION,
    hypergraph_json,
    ideal_json,
    minor_spec_json,
    prime_json,
    report_json,
    report_text,
    schema_text,
)
from .search import PREDICATES, SearchConfig, run_search

EXIT_OK = 0
EXIT_PREDICATE_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_input(args: argparse.Namespace) -> str:
    src = args.input
    if args.file or (os.path.exists(src) and not src.lstrip().startswith("(")):
        with open(src, "r", encoding="utf-8") as fh:
            return fh.read()
    return src


def _load(args: argparse.Namespace):
    parsed = parse_input(_read_input(args), getattr(args, "format", None))
    if parsed.format == FORMAT_EDGES:
        ideal = edge_ideal(parsed.hypergraph)
        return ideal, parsed.hypergraph, parsed.names
    h = hypergraph_of(parsed.ideal) if parsed.ideal.is_squarefree() and parsed.ideal.is_proper() and not parsed.ideal.is_zero() else None
    return parsed.ideal, h, parsed.names


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="inline ideal/edge-list or a path to a file")
    p.add_argument("--file", action="store_true", help="treat INPUT as a file path")
    p.add_argument(
        "--format",
        choices=[FORMAT_IDEAL, FORMAT_EDGES],
        help="override the leading-character format auto-detection",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description="Exact computations on monomial ideals and their hypergraphs.",
    )
    parser.add_argument(
        "--version", action="version", version=f"edgeideals {__version__} (report schema {SCHEMA_VERSION})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ass", help="associated primes of I^t")
    _add_input(p)
    p.add_argument("-t", "--power", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="use the witness-search oracle")
    p.add_argument("--max-box", type=int, default=200_000)

    p = sub.add_parser("min-primes", help="minimal primes")
    _add_input(p)

    p = sub.add_parser("power", help="minimal generators of I^t")
    _add_input(p)
    p.add_argument("t", type=int)

    p = sub.add_parser("symbolic", help="minimal generators of the t-th symbolic power")
    _add_input(p)
    p.add_argument("t", type=int)

    p = sub.add_parser("colon", help="colon ideal (I^t : m) by a monomial")
    _add_input(p)
    p.add_argument("monomial")
    p.add_argument("-t", "--power", type=int, default=1)

    p = sub.add_parser("polarize", help="polarization of I^t into shadow variables")
    _add_input(p)
    p.add_argument("-t", "--power", type=int, default=1)

    p = sub.add_parser("minor", help="apply deletions and contractions")
    _add_input(p)
    p.add_argument("--delete", default="", help="comma-separated variables")
    p.add_argument("--contract", default="", help="comma-separated variables")

    p = sub.add_parser("invariants", help="cover number, matching number, flags")
    _add_input(p)

    p = sub.add_parser("konig", help="cover number equals matching number? (exit 1 if not)")
    _add_input(p)

    p = sub.add_parser("packing", help="Konig for the ideal and every minor? (exit 1 if not)")
    _add_input(p)

    p = sub.add_parser("ntf", help="scan powers for embedded primes (exit 1 on onset)")
    _add_input(p)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--max-power", type=int, default=8)

    p = sub.add_parser("analyze", help="full report: invariants, onset, checks")
    _add_input(p)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--bound-rule", choices=["half-dim", "minor-matching"], default="half-dim")
    p.add_argument("--max-power", type=int, default=8)
    p.add_argument("--max-minors", type=int, default=200_000)

    p = sub.add_parser("search", help="scan small hypergraphs for a predicate")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--edge-size", default="2", help="SIZE or MIN:MAX")
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--dedup", choices=["permutation-canonical", "none"], default="permutation-canonical")
    p.add_argument("--predicate", choices=list(PREDICATES), default=PREDICATES[0])
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--resume", default=None, help="resume token from a previous run")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("schema", help="print the analysis report JSON schema")

    return parser


def _names_for_vars(spec: str, names: Sequence[str]) -> int:
    mask = 0
    lookup = {n: i for i, n in enumerate(names)}
    for token in filter(None, (t.strip() for t in spec.split(","))):
        if token not in lookup:
            raise UsageError(f"unknown variable {token!r}")
        mask |= 1 << lookup[token]
    return mask


def _cmd_ass(args) -> int:
    ideal, _, names = _load(args)
    power = ideal**args.power
    result = (
        ass_witness_oracle(power, max_box=args.max_box)
        if args.oracle
        else associated_primes(power)
    )
    payload = {
        "power": args.power,
        "associated_primes": [prime_json(p, names) for p in result.primes],
    }
    if result.witnesses is not None:
        payload["witnesses"] = {
            p.text(names): result.witnesses[p].text(names) for p in result.primes
        }
    _emit(args, payload, "\n".join(p.text(names) for p in result.primes))
    return EXIT_OK


def _cmd_min_primes(args) -> int:
    ideal, _, names = _load(args)
    primes = minimal_primes(ideal)
    _emit(
        args,
        {"minimal_primes": [prime_json(p, names) for p in primes]},
        "\n".join(p.text(names) for p in primes),
    )
    return EXIT_OK


def _cmd_power(args) -> int:
    ideal, _, names = _load(args)
    power = ideal**args.t
    _emit(args, ideal_json(power, names), power.text(names))
    return EXIT_OK


def _cmd_symbolic(args) -> int:
    ideal, _, names = _load(args)
    sym = symbolic_power(ideal, args.t)
    _emit(args, ideal_json(sym, names), sym.text(names))
    return EXIT_OK


def _cmd_colon(args) -> int:
    ideal, _, names = _load(args)
    m = parse_monomial(args.monomial, tuple(names))
    result = (ideal**args.power).colon(m)
    _emit(args, ideal_json(result, names), result.text(names))
    return EXIT_OK


def _cmd_polarize(args) -> int:
    ideal, _, names = _load(args)
    ctx, polar = polarize_ideal(ideal**args.power)
    shadow_names = ctx.shadow_names(names)
    payload = {
        "power": args.power,
        "ring_dim": ctx.dim,
        "variables": [
            {"name": shadow_names[i], "base": var_name(ctx.shadow_at(i).base, names), "copy": ctx.shadow_at(i).copy}
            for i in range(ctx.dim)
        ],
        "generators": [g.text(shadow_names) for g in polar.gens],
    }
    _emit(args, payload, polar.text(shadow_names))
    return EXIT_OK


def _cmd_minor(args) -> int:
    ideal, h, names = _load(args)
    if h is None:
        raise UsageError("minors need a square-free proper ideal or an edge list")
    spec = MinorSpec(
        _names_for_vars(args.delete, names), _names_for_vars(args.contract, names)
    )
    result = apply_minor(h, spec)
    if result.kind != KIND_PROPER:
        label = "(1)" if result.kind == "unit_ideal" else "(0)"
        _emit(args, {"kind": result.kind, "ideal": label}, label)
        return EXIT_OK
    minor_ideal = edge_ideal(result.hypergraph)
    payload = {
        "kind": result.kind,
        "ideal": minor_ideal.text(names),
        "hypergraph": hypergraph_json(result.hypergraph, names),
    }
    _emit(args, payload, minor_ideal.text(names))
    return EXIT_OK


def _require_hypergraph(h, what: str):
    if h is None:
        raise UsageError(f"{what} needs a square-free proper ideal or an edge list")
    return h


def _cmd_invariants(args) -> int:
    ideal, h, names = _load(args)
    h = _require_hypergraph(h, "invariants")
    beta, witness = matching_number(ideal)
    packs, failure = packing(h)
    payload = {
        "ring_dim": ideal.ring_dim,
        "generators": [g.text(names) for g in ideal.gens],
        "cover_number": cover_number(h),
        "matching_number": beta,
        "matching_witness": [m.text(names) for m in witness],
        "konig": konig(h),
        "packing": packs,
        "packing_failure": minor_spec_json(failure, names),
        "unmixed": is_unmixed(ideal),
        "good_edge": (lambda g: g.text(names) if g else None)(find_good_edge(ideal)),
        "isolated_vertices": [
            var_name(i, names)
            for i in range(ideal.ring_dim)
            if isolated_vertices(h) >> i & 1
        ],
        "connected_components": len(connected_components(h)),
        "default_bound": default_bound(ideal),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_konig(args) -> int:
    _, h, names = _load(args)
    h = _require_hypergraph(h, "konig")
    ok = konig(h)
    _emit(args, {"konig": ok}, f"konig: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_PREDICATE_FALSE


def _cmd_packing(args) -> int:
    _, h, names = _load(args)
    h = _require_hypergraph(h, "packing")
    ok, failure = packing(h)
    _emit(
        args,
        {"packing": ok, "failure": minor_spec_json(failure, names)},
        f"packing: {str(ok).lower()}",
    )
    return EXIT_OK if ok else EXIT_PREDICATE_FALSE


def _cmd_ntf(args) -> int:
    ideal, _, names = _load(args)
    bound = args.bound if args.bound is not None else default_bound(ideal)
    verdict = ntf_verdict(ideal, bound, max_power=args.max_power)
    if verdict.onset is None:
        _emit(
            args,
            {"certified_ntf_up_to": bound, "onset": None},
            f"certified NTF up to {bound}",
        )
        return EXIT_OK
    embedded = verdict.row(verdict.onset).embedded
    _emit(
        args,
        {
            "certified_ntf_up_to": verdict.certified_ntf_up_to,
            "onset": verdict.onset,
            "embedded_at_onset": [prime_json(p, names) for p in embedded],
        },
        f"embedded primes at t={verdict.onset}: "
        + " ".join(p.text(names) for p in embedded),
    )
    return EXIT_PREDICATE_FALSE


def _cmd_analyze(args) -> int:
    ideal, _, names = _load(args)
    cfg = AnalysisConfig(
        bound=args.bound,
        bound_rule=args.bound_rule,
        max_power=args.max_power,
        max_minors=args.max_minors,
    )
    report = analyze(ideal, cfg)
    if args.json:
        print(json.dumps(report_json(report, names), indent=2))
    else:
        print(report_text(report, names))
    return EXIT_OK


def _cmd_search(args) -> int:
    if ":" in args.edge_size:
        lo, hi = args.edge_size.split(":", 1)
        size_min, size_max = int(lo), int(hi)
    else:
        size_min = size_max = int(args.edge_size)
    cfg = SearchConfig(
        d_max=args.d_max,
        edge_size_min=size_min,
        edge_size_max=size_max,
        max_edges=args.max_edges,
        dedup=args.dedup,
        predicate=args.predicate,
        limit=args.limit,
        resume=args.resume,
    )
    for hit in run_search(cfg):
        if args.json:
            print(json.dumps({"index": hit.index, **hit.summary}))
        else:
            edges = " / ".join(
                " ".join(var_name(v) for v in sorted(e)) for e in hit.summary["edges"]
            )
            print(
                f"[{hit.index}] {edges} | cover={hit.summary['cover_number']}"
                f" matching={hit.summary['matching_number']}"
                f" onset={hit.summary['onset']}"
                f" unmixed={hit.summary['unmixed']}"
                f" good_edge={hit.summary['good_edge']}"
            )
    return EXIT_OK


_COMMANDS = {
    "ass": _cmd_ass,
    "min-primes": _cmd_min_primes,
    "power": _cmd_power,
    "symbolic": _cmd_symbolic,
    "colon": _cmd_colon,
    "polarize": _cmd_polarize,
    "minor": _cmd_minor,
    "invariants": _cmd_invariants,
    "konig": _cmd_konig,
    "packing": _cmd_packing,
    "ntf": _cmd_ntf,
    "analyze": _cmd_analyze,
    "search": _cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "schema":
        print(schema_text())
        return EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
