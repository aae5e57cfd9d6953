"""Command-line front door.

Verbs: mutate, class, finite, decompose, classify, unfold, verify-unfold,
scan-minimal, serve.  Exit codes: 0 success, 1 domain rejection (for example
a rejected unfolding), 2 usage or parse error.  Analysis verbs can be sent
to a running service with --server; by default they run in-process through
the same code the service uses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .analysis import analyze_diagram
from .classes import (
    enumerate_class_diagrams,
    enumerate_class_matrices,
    is_mutation_finite_diagram,
    minimal_mutation_infinite_scan,
)
from .diagram import Diagram, diagram_of, mutate_diagram
from .errors import MutafoldError, ParseError, ValidationError
from .io import parse_input, print_diagram, print_matrix, print_unfolding, print_value
from .matrix import ExchangeMatrix, mutate_matrix
from .sdecomp import decomposition_weight, is_s_decomposable
from .unfolding import local_unfolding, nonlocal_unfolding, verify_unfolding

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return parse_input(_read(path))


def _emit(args, text_form: str, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text_form)


def cmd_mutate(args) -> int:
    value = _load(args.input)
    if isinstance(value, ExchangeMatrix):
        out = mutate_matrix(value, args.at)
        sys.stdout.write(print_matrix(out))
    elif isinstance(value, Diagram):
        out = mutate_diagram(value, args.at)
        sys.stdout.write(print_diagram(out))
    else:
        raise ParseError("mutate takes a matrix or diagram")
    return EXIT_OK


def cmd_class(args) -> int:
    value = _load(args.input)
    if isinstance(value, ExchangeMatrix):
        enum = enumerate_class_matrices(
            value, max_nodes=args.max_nodes, sign_quotient=args.sign_quotient
        )
    elif isinstance(value, Diagram):
        enum = enumerate_class_diagrams(value, max_nodes=args.max_nodes)
    else:
        raise ParseError("class takes a matrix or diagram")
    record = {
        "complete": enum.complete,
        "size": enum.size if enum.complete else None,
        "explored": enum.explored,
        "frontier_witness": enum.frontier_witness,
    }
    if enum.complete:
        _emit(args, f"complete size={enum.size}", record)
        return EXIT_OK
    _emit(
        args,
        f"infinite witness={' '.join(map(str, enum.frontier_witness or []))}",
        record,
    )
    return EXIT_OK


def cmd_finite(args) -> int:
    value = _load(args.input)
    if isinstance(value, ExchangeMatrix):
        S, B = diagram_of(value), value
    elif isinstance(value, Diagram):
        S, B = value, None
    else:
        raise ParseError("finite takes a matrix or diagram")
    summary = is_mutation_finite_diagram(S, max_nodes=args.max_nodes)
    record = summary.to_dict()
    if not summary.finite:
        _emit(
            args,
            f"infinite witness={' '.join(map(str, summary.witness or []))}",
            record,
        )
        return EXIT_OK
    parts = ["finite"]
    if B is not None:
        m = enumerate_class_matrices(
            B, max_nodes=args.max_nodes, sign_quotient=args.sign_quotient
        )
        record["size_matrices"] = m.size
        parts.append(f"size_matrices={m.size}")
    record["size_diagrams"] = summary.size
    parts.append(f"size_diagrams={summary.size}")
    _emit(args, " ".join(parts), record)
    return EXIT_OK


def cmd_decompose(args) -> int:
    value = _load(args.input)
    S = diagram_of(value) if isinstance(value, ExchangeMatrix) else value
    if not isinstance(S, Diagram):
        raise ParseError("decompose takes a matrix or diagram")
    dec = is_s_decomposable(S)
    if dec is None:
        _emit(args, "non-decomposable", {"s_decomposable": False})
        return EXIT_REJECTED
    _emit(
        args,
        dec.serialize(),
        {"s_decomposable": True, "decomposition": dec.serialize()},
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    value = _load(args.input)
    if isinstance(value, ExchangeMatrix):
        S, B = diagram_of(value), value
    elif isinstance(value, Diagram):
        S, B = value, None
    else:
        raise ParseError("classify takes a matrix or diagram")
    if args.server:
        return _remote_classify(args, value)
    info = analyze_diagram(S, B=B, max_nodes=args.max_nodes)
    if not info["finite"]:
        _emit(args, "mutation-infinite", info)
        return EXIT_REJECTED
    tag = info["named_type"] or "none"
    dec_flag = "true" if info["s_decomposable"] else "false"
    _emit(args, f"named_type {tag} s_decomposable={dec_flag}", info)
    return EXIT_OK


def _remote_classify(args, value) -> int:
    import httpx

    resp = httpx.post(
        args.server.rstrip("/") + "/analyze", json={"text": print_value(value)}
    )
    if resp.status_code != 200:
        print(f"server error: {resp.text}", file=sys.stderr)
        return EXIT_USAGE
    info = resp.json()
    tag = info["named_type"] or "none"
    dec_flag = "true" if info["s_decomposable"] else "false"
    _emit(args, f"named_type {tag} s_decomposable={dec_flag}", info)
    return EXIT_OK


def cmd_unfold(args) -> int:
    value = _load(args.input)
    if isinstance(value, ExchangeMatrix):
        S, B = diagram_of(value), value
    elif isinstance(value, Diagram):
        S, B = value, None
    else:
        raise ParseError("unfold takes a matrix or diagram")
    dec = is_s_decomposable(S)
    if dec is None:
        print("non-decomposable diagram has no block unfolding", file=sys.stderr)
        return EXIT_REJECTED
    if B is None:
        spec = local_unfolding(S, dec)
    else:
        w = decomposition_weight(S, dec, B).w
        spec = (
            local_unfolding(S, dec, B=B)
            if w == 1
            else nonlocal_unfolding(S, dec, B)
        )
    sys.stdout.write(print_unfolding(spec))
    return EXIT_OK


def cmd_verify_unfold(args) -> int:
    spec = _load(args.input)
    report = verify_unfolding(
        spec,
        policy=args.policy,
        depth=args.depth,
        trials=args.trials,
        seed=args.seed,
        max_nodes=args.max_nodes,
    )
    if args.format == "json":
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(report.verdict)
        if report.witness is not None and report.verdict == "rejected":
            print("witness mu " + " ".join(map(str, report.witness)))
        if report.violated:
            tag, (i, j) = report.violated
            print(f"violated {tag} block E{i}xE{j}")
    return EXIT_OK if report.verdict != "rejected" else EXIT_REJECTED


def cmd_scan_minimal(args) -> int:
    diagrams = minimal_mutation_infinite_scan(
        args.order, weight_cap=args.weight_cap, max_nodes=args.max_nodes
    )
    record = {"count": len(diagrams), "diagrams": [print_diagram(d) for d in diagrams]}
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"count {len(diagrams)}")
        for d in diagrams:
            sys.stdout.write(print_diagram(d))
            print("---")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    host, _, port = args.bind.partition(":")
    app = create_app(args.journal)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8787), log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutafold",
        description="mutation, finiteness, decomposition and unfolding of "
        "skew-symmetrizable matrices and their diagrams",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, with_budget=True):
        p.add_argument("input", help="input file ('-' for stdin)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_budget:
            p.add_argument(
                "--max-nodes",
                type=int,
                default=int(os.environ.get("MUTAFOLD_MAX_NODES", 200_000)),
            )
        p.add_argument("--sign-quotient", action="store_true")
        p.add_argument("--server", default=os.environ.get("MUTAFOLD_SERVER"))

    p = sub.add_parser("mutate", help="mutate a matrix or diagram at a vertex")
    common(p)
    p.add_argument("--at", "-k", type=int, required=True)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("class", help="enumerate the mutation class")
    common(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("finite", help="decide finite mutation type")
    common(p)
    p.set_defaults(func=cmd_finite)

    p = sub.add_parser("decompose", help="find a block decomposition")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="named-type classification")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("unfold", help="construct an unfolding")
    common(p)
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("verify-unfold", help="verify an unfolding spec")
    common(p)
    p.add_argument("--policy", choices=("exhaustive", "bounded"), default="exhaustive")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_unfold)

    p = sub.add_parser("scan-minimal", help="minimal mutation-infinite scan")
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--weight-cap", type=int, default=4)
    p.add_argument(
        "--max-nodes",
        type=int,
        default=int(os.environ.get("MUTAFOLD_MAX_NODES", 200_000)),
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_scan_minimal)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--bind", default="127.0.0.1:8787")
    p.add_argument("--journal", default=os.environ.get("MUTAFOLD_JOURNAL"))
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MutafoldError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
