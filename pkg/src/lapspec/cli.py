"""Command-line front end.

Single-graph commands print one JSON document; streaming commands print
JSON lines; the classification sweep prints a TSV summary. Outputs are
deterministic for a fixed invocation, including across --jobs settings.

Graph sources: --g6 takes a graph6 string, --file reads either the
adjacency-list text format (first line a vertex count) or graph6 lines,
and --builder takes a small construction expression:

    star 6 | path 4 | cycle 5 | complete 4 | K 4 | K1 | P4 | C5
    biclique 2 4 | firefly 2 3 0
    join(a, b) | union(a, b, ...) | product(a, b)
    union(K1 x 7)                     -- multiplicity inside union
    g1 pendants=1,1 cycles=3
    g2 path-orders=3,3,5 hub-edge pendants-u=1 cycles-v=3
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import enumeration, families, graphs, partitions, spectra
from .matrices import char_poly
from .polys import DEFAULT_PRECISION, MPoly

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNKNOWN_CASE = 3
EXIT_BAD_PARTITION = 4
EXIT_BUDGET = 5


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


# -- builder expression mini-language -----------------------------------------

_TOKEN_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9-]*|\d+|[(),=])")

_SHORTHAND = re.compile(r"^([KPC])(\d+)$")


def _lex(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise CliError(f"bad builder syntax near {text[pos:pos+10]!r}")
            break
        tok = m.group(1)
        tokens.append(int(tok) if tok.isdigit() else tok)
        pos = m.end()
    return tokens


def parse_builder(text: str) -> graphs.Graph:
    tokens = _lex(text)
    pos = [0]

    def peek(offset=0):
        i = pos[0] + offset
        return tokens[i] if i < len(tokens) else None

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def take_ints():
        out = []
        while isinstance(peek(), int):
            out.append(take())
        return out

    def take_int_list():
        if not isinstance(peek(), int):
            raise CliError("expected an integer list")
        out = [take()]
        while peek() == "," and isinstance(peek(1), int):
            take()
            out.append(take())
        return out

    def parse_config(family):
        kv = {}
        flags = set()
        while isinstance(peek(), str) and peek() not in (",", ")"):
            key = take()
            if peek() == "=":
                take()
                kv[key] = take_int_list()
            else:
                flags.add(key)
        if family == "g1":
            cfg = graphs.FamilyConfig(
                "G1",
                pendants_u=tuple(kv.pop("pendants", ())),
                cycles_u=tuple(kv.pop("cycles", ())),
            )
        else:
            cfg = graphs.FamilyConfig(
                "G2",
                hub_edge="hub-edge" in flags,
                paths=tuple(kv.pop("path-orders", ())),
                pendants_u=tuple(kv.pop("pendants-u", ())),
                cycles_u=tuple(kv.pop("cycles-u", ())),
                pendants_v=tuple(kv.pop("pendants-v", ())),
                cycles_v=tuple(kv.pop("cycles-v", ())),
            )
            flags.discard("hub-edge")
        if kv or flags:
            raise CliError(f"unknown config fields: {sorted(kv) + sorted(flags)}")
        return graphs.realize(cfg)

    def parse_args_list():
        out = []
        while True:
            g = parse_expr()
            if peek() == "x" and isinstance(peek(1), int):
                take()
                out.extend([g] * take())
            else:
                out.append(g)
            if peek() == ",":
                take()
                continue
            return out

    def parse_expr():
        tok = take()
        if not isinstance(tok, str):
            raise CliError(f"expected a constructor, got {tok!r}")
        if tok in ("join", "union", "product") and peek() == "(":
            take()
            args = parse_args_list()
            if take() != ")":
                raise CliError("unbalanced parentheses in builder")
            if tok == "union":
                return graphs.disjoint_union(*args)
            if len(args) < 2:
                raise CliError(f"{tok} needs at least two arguments")
            acc = args[0]
            for g in args[1:]:
                acc = graphs.join(acc, g) if tok == "join" else graphs.cartesian_product(acc, g)
            return acc
        short = _SHORTHAND.match(tok)
        if short:
            kind, k = short.group(1), int(short.group(2))
            return {"K": graphs.complete, "P": graphs.path, "C": graphs.cycle}[kind](k)
        if tok in ("g1", "g2"):
            return parse_config(tok)
        ints = take_ints()
        table = {
            "path": (graphs.path, 1),
            "cycle": (graphs.cycle, 1),
            "star": (graphs.star, 1),
            "complete": (graphs.complete, 1),
            "K": (graphs.complete, 1),
            "biclique": (graphs.complete_bipartite, 2),
            "complete_bipartite": (graphs.complete_bipartite, 2),
            "firefly": (graphs.firefly, 3),
            "empty": (graphs.empty_graph, 1),
        }
        if tok not in table:
            raise CliError(f"unknown constructor {tok!r}")
        fn, arity = table[tok]
        if len(ints) != arity:
            raise CliError(f"{tok} expects {arity} integer argument(s)")
        try:
            return fn(*ints)
        except ValueError as exc:
            raise CliError(str(exc)) from exc

    g = parse_expr()
    if pos[0] != len(tokens):
        raise CliError(f"trailing builder input at {tokens[pos[0]]!r}")
    return g


# -- run configuration ---------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    command: str
    precision: Fraction = DEFAULT_PRECISION
    n_max: int | None = None
    jobs: int = 1
    out: str | None = None

    def __post_init__(self):
        if self.precision <= 0:
            raise CliError("precision must be positive")
        budget = enumeration.configured_budget()
        if self.n_max is not None and self.n_max > budget:
            raise CliError(
                f"n_max={self.n_max} exceeds the budget {budget} "
                f"(set {enumeration.BUDGET_ENV} to raise it)",
                code=EXIT_BUDGET,
            )
        if self.jobs < 1:
            raise CliError("jobs must be at least 1")


def _graphs_from_args(args):
    sources = [s for s in (args.g6, args.builder, args.file) if s]
    if len(sources) != 1:
        raise CliError("exactly one of --g6, --builder, --file is required")
    if args.g6:
        return [graphs.from_graph6(args.g6)]
    if args.builder:
        return [parse_builder(args.builder)]
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError(f"no graphs in {args.file}")
    if lines[0].isdigit():
        return [graphs.from_adjacency_text(text)]
    return [graphs.from_graph6(ln) for ln in lines]


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


# -- commands -------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    cfg = RunConfig("spectrum", precision=Fraction(args.precision), out=args.out)
    reports = [
        spectra.spectrum(g, args.kind, precision=cfg.precision).to_json_dict()
        for g in _graphs_from_args(args)
    ]
    text = "\n".join(_dump(r) for r in reports)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    cfg = RunConfig("classify", out=args.out)
    out = []
    for g in _graphs_from_args(args):
        member = graphs.family_membership(g)
        doc = {
            "graph6": graphs.to_graph6(g),
            "n": g.n,
            "degree_sequence": list(graphs.degree_sequence(g)),
            "connected": graphs.is_connected(g),
            "bipartite": graphs.is_bipartite(g),
            "family": member,
            "L_integral": spectra.is_L_integral(g),
            "Q_integral": spectra.is_Q_integral(g),
            "tag": enumeration.theorem_tag(g),
        }
        if g.n >= 2:
            doc["algebraic_connectivity"] = spectra.algebraic_connectivity(g).to_json()
            doc["vertex_connectivity"] = graphs.vertex_connectivity(g)
        out.append(doc)
    _emit("\n".join(_dump(d) for d in out), cfg.out)
    return EXIT_OK


def _partition_or_die(text, n):
    try:
        return partitions.parse_partition(text, n)
    except (ValueError, IndexError) as exc:
        raise CliError(f"invalid partition: {exc}", code=EXIT_BAD_PARTITION) from exc


def cmd_quotient(args) -> int:
    cfg = RunConfig("quotient", out=args.out)
    (g,) = _graphs_from_args(args)
    cells = _partition_or_die(args.partition, g.n)
    matrix = spectra.laplacian(g) if args.kind == "L" else spectra.signless_laplacian(g)
    ok, witness = partitions.check_equitable(matrix, cells)
    if not ok:
        raise CliError(f"partition is not equitable: {witness}", code=EXIT_BAD_PARTITION)
    quotient = partitions.quotient_matrix(matrix, cells)
    _, cofactor = partitions.eigenvalue_containment_check(matrix, cells)
    doc = {
        "graph6": graphs.to_graph6(g),
        "kind": args.kind,
        "partition": partitions.format_partition(cells),
        "quotient": [[_entry_json(e) for e in row] for row in quotient.entries],
        "quotient_char_poly": char_poly(quotient).to_text(),
        "divides": True,
        "cofactor": cofactor.to_text(),
    }
    _emit(_dump(doc), cfg.out)
    return EXIT_OK


def cmd_refine(args) -> int:
    cfg = RunConfig("refine", out=args.out)
    (g,) = _graphs_from_args(args)
    seed = _partition_or_die(args.partition, g.n)
    matrix = spectra.laplacian(g) if args.kind == "L" else spectra.signless_laplacian(g)
    refined = partitions.coarsest_equitable_refinement(matrix, seed)
    quotient = partitions.quotient_matrix(matrix, refined)
    _, cofactor = partitions.eigenvalue_containment_check(matrix, refined)
    doc = {
        "graph6": graphs.to_graph6(g),
        "kind": args.kind,
        "seed": partitions.format_partition(seed),
        "partition": partitions.format_partition(refined),
        "cells": len(refined),
        "quotient": [[_entry_json(e) for e in row] for row in quotient.entries],
        "divides": True,
        "cofactor": cofactor.to_text(),
    }
    _emit(_dump(doc), cfg.out)
    return EXIT_OK


def _entry_json(e):
    return e.to_text() if isinstance(e, MPoly) else e


def _parse_range(text: str):
    """'2..10' or a single integer; returns an inclusive (lo, hi) pair."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _case_report(case_id: str, cap: int, overrides: dict | None = None) -> dict:
    poly_report = families.verify_printed_polynomial(case_id)
    matrix_report = families.verify_printed_matrix(case_id)
    signs = families.verify_sign_claims(case_id, cap=cap, overrides=overrides)
    doc = {
        "case": case_id,
        "title": families.get_case(case_id).title,
        "printed_polynomial": poly_report,
        "printed_matrix": matrix_report,
        "sign_claims": signs,
        "excluded_instances": families.excluded_instance_report(case_id),
    }
    if case_id == "4.7-c1.2":
        doc["closed_forms"] = [
            families.closed_form_root_check(sub, cap=cap) for sub in ("i", "ii", "iii", "iv")
        ]
    point = next(families.grid_points(families.get_case(case_id), cap, overrides), None)
    if point is not None:
        doc["cross_check"] = families.cross_check_with_realization(case_id, **point)
    return doc


def cmd_families(args) -> int:
    cfg = RunConfig("families", out=args.out)
    cap = args.grid_cap
    overrides = {}
    if args.s:
        overrides["s"] = _parse_range(args.s)
    if args.t:
        overrides["t"] = _parse_range(args.t)
    if args.case == "all":
        ids = families.case_ids()
    else:
        try:
            families.get_case(args.case)
        except KeyError as exc:
            raise CliError(str(exc), code=EXIT_UNKNOWN_CASE) from exc
        ids = [args.case]
    docs = [_case_report(cid, cap, overrides or None) for cid in ids]
    _emit("\n".join(_dump(d) for d in docs), cfg.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = RunConfig("enumerate", n_max=args.n, out=args.out)
    lines = []
    for config in enumeration.enumerate_family(args.family, args.n):
        g = graphs.realize(config)
        lines.append(
            _dump(
                {
                    "family": config.family,
                    "n": g.n,
                    "graph6": graphs.to_graph6(g),
                    "hub_edge": config.hub_edge,
                    "paths": list(config.paths),
                    "pendants_u": list(config.pendants_u),
                    "cycles_u": list(config.cycles_u),
                    "pendants_v": list(config.pendants_v),
                    "cycles_v": list(config.cycles_v),
                }
            )
        )
    _emit("\n".join(lines), cfg.out)
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    cfg = RunConfig("verify-theorem", n_max=args.max, jobs=args.jobs, out=args.out)
    try:
        summary = enumeration.verify_theorem(args.min, args.max, jobs=cfg.jobs)
    except enumeration.BudgetExceededError as exc:
        raise CliError(str(exc), code=EXIT_BUDGET) from exc
    if cfg.out:
        stream = "\n".join(_dump(v.to_json_dict()) for v in summary.verdicts)
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(stream + "\n")
    sys.stdout.write(summary.to_tsv() + "\n")
    sys.stdout.write(f"{len(summary.disagreements)} disagreements\n")
    if summary.small_n_exceptions:
        sys.stdout.write(
            f"{len(summary.small_n_exceptions)} small-order exceptions (n < 9)\n"
        )
    return EXIT_OK


def cmd_erratum_report(args) -> int:
    cfg = RunConfig("erratum-report", out=args.out)
    _emit("\n".join(_dump(e) for e in families.erratum_entries()), cfg.out)
    return EXIT_OK


# -- argument wiring -------------------------------------------------------------


def _add_source_flags(p):
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--builder", help="builder expression (see module docstring)")
    p.add_argument("--file", help="file with adjacency text or graph6 lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapspec",
        description="Exact integral-spectrum decisions for sparse graph families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="exact spectrum report of one or more graphs")
    _add_source_flags(p)
    p.add_argument("--kind", choices=("L", "Q"), default="L")
    p.add_argument("--precision", default="1/1000000", help="interval width, e.g. 1/1000000")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("classify", help="family membership, integrality, tag")
    _add_source_flags(p)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("quotient", help="quotient matrix over an equitable partition")
    _add_source_flags(p)
    p.add_argument("--partition", required=True, help='cells like "0 | 1 | 2 3 4" or "0 | 1 | *"')
    p.add_argument("--kind", choices=("L", "Q"), default="L")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("refine", help="coarsest equitable refinement of a seed partition")
    _add_source_flags(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--kind", choices=("L", "Q"), default="L")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_refine)

    p = sub.add_parser("families", help="verify a catalog case (or all)")
    p.add_argument("--case", required=True, help='case id like 4.4, or "all"')
    p.add_argument("--grid-cap", type=int, default=families.GRID_CAP_DEFAULT)
    p.add_argument("--s", help='parameter range like "2..10" or a single value')
    p.add_argument("--t", help='parameter range like "1..5" or a single value')
    p.add_argument("--out")
    p.set_defaults(fn=cmd_families)

    p = sub.add_parser("enumerate", help="stream every family member of one order")
    p.add_argument("--family", choices=("G1", "G2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify-theorem", help="exhaustive classification sweep")
    p.add_argument("--min", type=int, default=9)
    p.add_argument("--max", "--max-n", dest="max", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the verdict stream (JSON lines) here")
    p.set_defaults(fn=cmd_verify_theorem)

    p = sub.add_parser("erratum-report", help="documented discrepancies of the source text")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_erratum_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
