"""Command line interface.

Subcommands:

- ``formula``: evaluate closed-form edge maxima over parameter grids.
- ``construct``: emit an extremal host as an edge-list file.
- ``check``: decide whether a host contains a disjoint pattern family.
- ``extract``: pull a disjoint cycle family out of a host, with a trace.
- ``search``: exhaustive or budgeted maximisation on small hosts.
- ``verify``: run the acceptance criteria and render a report.

Machine-readable output is JSON wrapped in ``{"schema": 1, ...}``.
Exit codes: 0 on success, 1 when ``verify`` records a failing
criterion, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import acceptance, formulas
from .constructions import (
    ConstructionSpec,
    ConstructionSizeError,
    InfeasibleConstructionError,
    build_construction,
)
from .detect import contains_disjoint_family
from .extractor import ExtractionError, extract_disjoint_linear, extract_disjoint_minimal
from .formulas import UnsupportedParameters
from .hypergraph import EdgeListParseError, HypergraphError, parse_edge_list, write_edge_list
from .patterns import FamilySpec, PatternKind
from .search import SearchBudget, max_edges_avoiding


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return values


def _envelope(command: str, reproducible: bool) -> dict:
    out: dict = {"schema": 1, "command": command}
    if not reproducible:
        out["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    return out


def _read_host(path: str):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turancycles",
        description="edge maxima, extremal hosts, and cycle families in k-uniform hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_formula = sub.add_parser("formula", help="evaluate closed-form edge maxima")
    p_formula.add_argument(
        "--variant",
        required=True,
        choices=("minimal", "linear", "path", "kmw"),
    )
    p_formula.add_argument("--n", required=True, type=_parse_int_list, metavar="N[,N...]")
    p_formula.add_argument("--k", required=True, type=_parse_int_list, metavar="K[,K...]")
    p_formula.add_argument(
        "--lengths",
        nargs="+",
        type=_parse_int_list,
        metavar="L[,L...]",
        help="one or more length lists, e.g. --lengths 3 3,4",
    )
    p_formula.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_formula.add_argument("--reproducible", action="store_true")

    p_construct = sub.add_parser("construct", help="emit an extremal host")
    p_construct.add_argument(
        "--variant",
        required=True,
        choices=("minimal", "linear", "path", "meeting"),
    )
    p_construct.add_argument("--n", required=True, type=int)
    p_construct.add_argument("--k", required=True, type=int)
    p_construct.add_argument("--lengths", type=_parse_int_list, metavar="L[,L...]")
    p_construct.add_argument(
        "--s-set", type=_parse_int_list, metavar="V[,V...]", dest="s_set"
    )
    p_construct.add_argument("--out", help="output file (default stdout)")

    p_check = sub.add_parser("check", help="detect a disjoint pattern family")
    p_check.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_check.add_argument(
        "--spec", required=True, help='family such as "minimal:3+linear:4"'
    )
    p_check.add_argument("--reproducible", action="store_true")

    p_extract = sub.add_parser("extract", help="extract a disjoint cycle family")
    p_extract.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_extract.add_argument(
        "--spec", required=True, help='homogeneous family such as "minimal:3+minimal:4"'
    )
    p_extract.add_argument("--reproducible", action="store_true")

    p_search = sub.add_parser("search", help="maximise edges avoiding a family")
    p_search.add_argument("--n", required=True, type=int)
    p_search.add_argument("--k", required=True, type=int)
    p_search.add_argument("--spec", required=True)
    p_search.add_argument("--max-nodes", type=int, default=None)
    p_search.add_argument("--max-seconds", type=float, default=None)
    p_search.add_argument("--no-symmetry", action="store_true")
    p_search.add_argument("--reproducible", action="store_true")

    p_verify = sub.add_parser("verify", help="run the acceptance criteria")
    p_verify.add_argument("--grid", choices=sorted(acceptance.GRIDS), default="small")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--reproducible", action="store_true")

    return parser


def _cmd_formula(args: argparse.Namespace) -> int:
    rows = []
    length_lists: list[tuple[int, ...]]
    if args.variant == "kmw":
        if args.lengths:
            print("formula --variant kmw takes no --lengths", file=sys.stderr)
            return 2
        length_lists = [()]
    else:
        if not args.lengths:
            print(f"formula --variant {args.variant} requires --lengths", file=sys.stderr)
            return 2
        length_lists = [tuple(item) for item in args.lengths]
    for n in args.n:
        for k in args.k:
            for lengths in length_lists:
                row = {"variant": args.variant, "n": n, "k": k, "lengths": list(lengths)}
                if args.variant == "minimal":
                    res = formulas.minimal_family_turan(n, k, lengths)
                    row.update(
                        value=res.value,
                        t=res.t,
                        correction=res.correction,
                        in_hypothesis=res.in_hypothesis,
                    )
                elif args.variant == "linear":
                    res = formulas.linear_family_turan(n, k, lengths)
                    row.update(
                        value=res.value,
                        t=res.t,
                        correction=res.correction,
                        in_hypothesis=res.in_hypothesis,
                    )
                elif args.variant == "path":
                    if len(lengths) != 1:
                        print(
                            "formula --variant path takes single-length items",
                            file=sys.stderr,
                        )
                        return 2
                    row.update(value=formulas.linear_path_turan(n, k, lengths[0]))
                else:
                    row.update(value=formulas.kmw_bound(n, k))
                rows.append(row)
    if args.format == "json":
        out = _envelope("formula", args.reproducible)
        out["results"] = rows
        print(json.dumps(out, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("variant,n,k,lengths,value,t,correction,in_hypothesis")
        for row in rows:
            lengths_text = "+".join(str(l) for l in row["lengths"])
            print(
                f"{row['variant']},{row['n']},{row['k']},{lengths_text},"
                f"{row['value']},{row.get('t', '')},{row.get('correction', '')},"
                f"{row.get('in_hypothesis', '')}"
            )
    else:
        for row in rows:
            lengths_text = "+".join(str(l) for l in row["lengths"])
            parts = [
                f"variant={row['variant']}",
                f"n={row['n']}",
                f"k={row['k']}",
            ]
            if lengths_text:
                parts.append(f"lengths={lengths_text}")
            parts.append(f"value={row['value']}")
            if "t" in row:
                parts.append(f"t={row['t']}")
            print("  ".join(parts))
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = ConstructionSpec(
        variant=args.variant,
        n=args.n,
        k=args.k,
        lengths=tuple(args.lengths) if args.lengths else (),
        s_set=tuple(args.s_set) if args.s_set else None,
    )
    host = build_construction(spec)
    text = write_edge_list(host)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    host = _read_host(args.infile)
    spec = FamilySpec.from_text(args.spec, host.k)
    family = contains_disjoint_family(host, spec)
    out = _envelope("check", args.reproducible)
    out.update(
        n=host.n,
        k=host.k,
        num_edges=host.num_edges,
        spec=spec.to_text(),
        found=family is not None,
        witnesses=[w.to_dict() for w in family] if family else [],
    )
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    host = _read_host(args.infile)
    spec = FamilySpec.from_text(args.spec, host.k)
    kinds = {kind for kind, _ in spec.components}
    lengths = [length for _, length in spec.components]
    if kinds == {PatternKind.MINIMAL_CYCLE}:
        runner = extract_disjoint_minimal
    elif kinds == {PatternKind.LINEAR_CYCLE}:
        runner = extract_disjoint_linear
    else:
        print(
            "extract expects a homogeneous family of minimal or of linear cycles",
            file=sys.stderr,
        )
        return 2
    out = _envelope("extract", args.reproducible)
    out.update(n=host.n, k=host.k, num_edges=host.num_edges, spec=spec.to_text())
    try:
        result = runner(host, lengths)
    except ExtractionError as exc:
        out.update(found=False, stage=exc.stage, detail=exc.detail)
        print(json.dumps(out, indent=2, sort_keys=True))
        return 0
    trace = result.trace.to_dict()
    if args.reproducible:
        trace.pop("stage_seconds", None)
    out.update(
        found=True,
        witnesses=[w.to_dict() for w in result.witnesses],
        trace=trace,
    )
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    spec = FamilySpec.from_text(args.spec, args.k)
    budget = SearchBudget(
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
        symmetry_pruning=not args.no_symmetry,
    )
    result = max_edges_avoiding(args.n, args.k, spec, budget=budget)
    out = _envelope("search", args.reproducible)
    out.update(
        n=args.n,
        k=args.k,
        spec=spec.to_text(),
        max_edges=result.max_edges,
        exhaustive=result.exhaustive,
        nodes_explored=result.nodes_explored,
        witness=[sorted(edge) for edge in result.witness],
    )
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = acceptance.run_all(grid=args.grid, seed=args.seed)
    sys.stdout.write(acceptance.render_report(results, reproducible=args.reproducible))
    return 0 if all(r.passed for r in results) else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "formula": _cmd_formula,
        "construct": _cmd_construct,
        "check": _cmd_check,
        "extract": _cmd_extract,
        "search": _cmd_search,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (
        UnsupportedParameters,
        InfeasibleConstructionError,
        ConstructionSizeError,
        EdgeListParseError,
        HypergraphError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
