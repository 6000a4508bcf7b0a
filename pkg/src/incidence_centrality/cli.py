"""Command-line entry point.

Exit codes: 0 success, 2 usage error, 3 malformed input, 4 invalid graph,
5 disconnected graph, 6 numerical error, 7 I/O error, 8 oracle check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from .centrality import graph_centralities, hypergraph_centralities
from .errors import CentralityError, ParseError
from .experiments import (
    generate_cycle,
    generate_er,
    generate_grid_motif,
    generate_path,
    load_karate,
    run_equivalence,
    run_grid_experiment,
)
from .io import export_experiment, export_report, parse_edgelist, parse_hyperedgelist
from .oracles import check_resistance_sum_identity, resistance_matrix, svd_resistance_matrix
from .spectral import RegularizationConfig, compact_svd
from .graph import build_incidence, connected_components

log = logging.getLogger("incidence_centrality")

EXIT_USAGE = 2
EXIT_IO = 7
EXIT_ORACLE_FAILED = 8

LOG_ENV = "INCIDENCE_CENTRALITY_LOG"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="incidence-centrality",
        description="SVD incidence-matrix centralities, hub/authority scores and oracle checks.",
    )
    p.add_argument("--input", help="edge-list / hyperedge-list path, or a built-in graph: "
                   "karate, grid, path:N, cycle:N, er:N:P:SEED")
    p.add_argument("--format", choices=["edgelist", "hyperedgelist"], default="edgelist")
    p.add_argument("--node-ids", choices=["auto", "index", "label"], default="auto")
    p.add_argument("--mode", choices=["centrality", "hypergraph", "equivalence", "grid", "oracle-check"],
                   default="centrality")
    p.add_argument("--lambda", dest="lam", type=float, default=0.99)
    p.add_argument("--tau", type=float, default=1e-8)
    p.add_argument("--alpha", type=float, default=None,
                   help="hub/authority blend weight; required for grid mode and for hub/authority output")
    p.add_argument("--rank-k", type=int, default=None)
    p.add_argument("--reg-mode", choices=["matrix", "tikhonov", "none"], default="tikhonov")
    p.add_argument("--aggregate", choices=["normalized", "raw"], default="normalized")
    p.add_argument("--output", default=None, help="output path (default: stdout)")
    p.add_argument("--output-format", choices=["json", "csv", "dot"], default="json")
    return p


def _config(args) -> RegularizationConfig:
    return RegularizationConfig(mode=args.reg_mode, lam=args.lam, tau=args.tau)


def _builtin_graph(spec: str):
    name, _, rest = spec.partition(":")
    parts = rest.split(":") if rest else []
    try:
        if name == "karate" and not parts:
            return load_karate()
        if name == "grid" and not parts:
            return generate_grid_motif()
        if name == "path" and len(parts) == 1:
            return generate_path(int(parts[0]))
        if name == "cycle" and len(parts) == 1:
            return generate_cycle(int(parts[0]))
        if name == "er" and len(parts) == 3:
            return generate_er(int(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as exc:
        if isinstance(exc, CentralityError):
            raise
        raise ParseError(f"bad built-in graph spec {spec!r}: {exc}") from None
    return None


def _load_graph(args):
    if not args.input:
        raise ParseError("--input is required for this mode")
    if not Path(args.input).exists():
        g = _builtin_graph(args.input)
        if g is not None:
            return g
    return parse_edgelist(args.input, args.node_ids)


def _write(args, payload: bytes, edges_payload: bytes | None = None):
    if args.output is None:
        sys.stdout.write(payload.decode())
        if edges_payload is not None:
            sys.stdout.write("\n" + edges_payload.decode())
        return
    out = Path(args.output)
    out.write_bytes(payload)
    if edges_payload is not None:
        out.with_name(f"{out.stem}.edges{out.suffix}").write_bytes(edges_payload)


def _emit_report(args, report):
    if args.output_format == "csv":
        _write(args, export_report(report, "csv", "vertices"), export_report(report, "csv", "edges"))
    else:
        _write(args, export_report(report, args.output_format))


def _emit_experiment(args, result):
    fmt = args.output_format
    if fmt == "dot":
        raise ParseError("experiment results export as json or csv")
    if fmt == "csv":
        edges = export_experiment(result, "csv", "edges") if "edges" in result.tables else None
        _write(args, export_experiment(result, "csv", "vertices"), edges)
    else:
        _write(args, export_experiment(result, "json"))


def _oracle_check(args) -> int:
    g = _load_graph(args).undirected()
    d = compact_svd(build_incidence(g))
    residual = check_resistance_sum_identity(d)
    tol = 1e-8 * g.n
    max_res = float(residual.max()) if residual.size else 0.0
    diff = np.abs(svd_resistance_matrix(d).values - resistance_matrix(g).values)
    payload = {
        "n": g.n,
        "m": g.m,
        "components": len(connected_components(g)),
        "max_residual": max_res,
        "tolerance": tol,
        "residual": residual.tolist(),
        "max_resistance_discrepancy": float(diff.max()) if diff.size else 0.0,
        "passed": max_res <= tol,
    }
    _write(args, (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode())
    return 0 if payload["passed"] else EXIT_ORACLE_FAILED


def run(args) -> int:
    if args.mode == "centrality":
        g = _load_graph(args)
        if args.alpha is None:
            log.info("no --alpha given; hub/authority scores omitted")
        report = graph_centralities(g, _config(args), alpha=args.alpha, k=args.rank_k, aggregate=args.aggregate)
        _emit_report(args, report)
    elif args.mode == "hypergraph":
        if not args.input:
            raise ParseError("--input is required for hypergraph mode")
        h = parse_hyperedgelist(args.input, args.node_ids)
        _emit_report(args, hypergraph_centralities(h, _config(args), k=args.rank_k))
    elif args.mode == "equivalence":
        g = _load_graph(args)
        cfg = _config(args)
        name = args.input if not Path(args.input).exists() else "equivalence"
        _emit_experiment(args, run_equivalence(g, cfg, name=name))
    elif args.mode == "grid":
        _emit_experiment(args, run_grid_experiment(args.alpha, _config(args)))
    elif args.mode == "oracle-check":
        return _oracle_check(args)
    return 0


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get(LOG_ENV, "WARNING").upper(), format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    if args.mode == "grid" and args.alpha is None:
        parser.print_usage(sys.stderr)
        print("error: --mode grid requires an explicit --alpha", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(args)
    except CentralityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
