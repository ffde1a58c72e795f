"""Command-line front end.

    hspec matrix   --edges "0>1,2>1,1>4,3>4,3>2,3>1"
    hspec spectrum --graph6 "D~{" --format json
    hspec check    --input graphs.g6
    hspec survey   --nmax 6 --jobs 4
    hspec families friendship 3
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator

from .checks import GraphReport, check_graph, graph_rng, run_checks
from .families import FAMILIES
from .graph import (
    MAX_ENUMERATION_ORDER,
    Graph,
    OrientedGraph,
    ParseError,
    default_orientation,
    encode_graph6,
    enumerate_triangles,
    graph_from_mask,
    parse_edge_list,
    parse_graph6,
    random_orientation,
)
from .incidence import (
    edge_labels,
    edge_vertex_incidence,
    helmholtzian_direct,
    hprime,
    lambda_signed,
    laplacian,
    matrix_to_json,
    matrix_to_text,
    triangle_edge_incidence,
    triangle_labels,
    triangular_signed,
    vertex_labels,
)
from .jacobi import sym_eigenvalues
from .spectra import TOL_GROUP, TOL_ZERO, closed_form_spectrum, compare_multisets, group_spectrum, verify_block_spectrum


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    graph6: str | None = None
    edges: str | None = None
    orient: str = "default"
    seed: int = 0
    format: str = "table"
    tol_group: float = TOL_GROUP
    tol_zero: float = TOL_ZERO
    nmax: int = 6
    jobs: int = 1
    flips: int = 5

    def __post_init__(self):
        sources = [s for s in (self.input, self.graph6, self.edges) if s is not None]
        if len(sources) > 1:
            raise UsageError("give at most one of --input, --graph6, --edges")
        if self.command in ("matrix", "spectrum", "check") and not sources:
            raise UsageError(f"{self.command} needs --input, --graph6 or --edges")
        if not 1 <= self.nmax <= MAX_ENUMERATION_ORDER:
            raise UsageError(f"--nmax must be between 1 and {MAX_ENUMERATION_ORDER}, got {self.nmax}")


# -- input --------------------------------------------------------------------------


def _is_g6_path(path: str) -> bool:
    return Path(path).suffix in (".g6", ".graph6")


def load_graphs(cfg: RunConfig) -> Iterator[tuple[str, OrientedGraph]]:
    """Yield ``(name, oriented graph)`` for every input graph, orientation applied."""
    if cfg.graph6 is not None:
        items = [(cfg.graph6, default_orientation(parse_graph6(cfg.graph6)))]
    elif cfg.edges is not None:
        items = [("edges", parse_edge_list(cfg.edges))]
    elif _is_g6_path(cfg.input):
        items = _read_g6_file(cfg.input)
    else:
        text = Path(cfg.input).read_text()
        try:
            items = [(cfg.input, parse_edge_list(text))]
        except ParseError as exc:
            raise ParseError(f"{cfg.input}: {exc}") from None
    for name, og in items:
        yield name, _apply_orientation(og, cfg, name)


def _read_g6_file(path: str) -> Iterator[tuple[str, OrientedGraph]]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = parse_graph6(line)
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            yield line, default_orientation(g)


def _apply_orientation(og: OrientedGraph, cfg: RunConfig, name: str) -> OrientedGraph:
    if cfg.orient == "default":
        return og
    if cfg.orient == "random":
        return random_orientation(og.graph, graph_rng(cfg.seed, name))
    spec = parse_edge_list(Path(cfg.orient).read_text())
    wanted = {tuple(sorted(a)): a for a in spec.arcs}
    if set(wanted) != set(og.edges):
        raise ParseError(f"{cfg.orient}: orientation file does not list exactly the graph's edges")
    return OrientedGraph(og.graph, tuple(wanted[e] for e in og.edges))


# -- commands --------------------------------------------------------------------------


def _matrices(og: OrientedGraph) -> list[tuple[str, object, list[str], list[str]]]:
    t = enumerate_triangles(og.graph)
    vl, el, tl = vertex_labels(og), edge_labels(og), triangle_labels(t)
    return [
        ("B", edge_vertex_incidence(og), el, vl),
        ("C", triangle_edge_incidence(og, t), tl, el),
        ("L", laplacian(og), vl, vl),
        ("H", helmholtzian_direct(og, t), el, el),
        ("A(Lambda_R)", lambda_signed(og, t).adjacency(), el, el),
        ("A(G_tri)", triangular_signed(og, t).adjacency(), tl, tl),
        ("H'", hprime(og, t), vl + tl, vl + tl),
    ]


def cmd_matrix(cfg: RunConfig, out) -> int:
    docs = []
    for name, og in load_graphs(cfg):
        mats = _matrices(og)
        if cfg.format == "json":
            docs.append({"graph": name, "matrices": {
                k: matrix_to_json(M, rl, cl) for k, M, rl, cl in mats}})
            continue
        print(f"# {name}: n={og.n} m={og.m}", file=out)
        if og.m == 0:
            print("edgeless graph: H is the 0x0 matrix", file=out)
        for k, M, rl, cl in mats:
            print(f"{k}:", file=out)
            out.write(matrix_to_text(M, rl, cl))
        print(file=out)
    if docs:
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2), file=out)
    return 0


def cmd_spectrum(cfg: RunConfig, out) -> int:
    docs, status = [], 0
    for name, og in load_graphs(cfg):
        if og.m == 0:
            raise UsageError(f"{name}: spectrum needs at least one edge (H is 0x0)")
        t = enumerate_triangles(og.graph)
        sp_h = group_spectrum(sym_eigenvalues(helmholtzian_direct(og, t)), cfg.tol_group)
        sp_l = group_spectrum(sym_eigenvalues(laplacian(og)), cfg.tol_group)
        sp_t = group_spectrum(sym_eigenvalues(triangular_signed(og, t).adjacency()), cfg.tol_group)
        block = verify_block_spectrum(og, t, cfg.tol_zero)
        status |= 0 if block.passed else 1
        if cfg.format == "json":
            docs.append({"graph": name, "H": sp_h.to_json(), "L": sp_l.to_json(),
                         "G_tri": sp_t.to_json(), "block_decomposition": block.passed})
            continue
        shifted = group_spectrum(sorted(block.triangle_nonzero, reverse=True), cfg.tol_group)
        lap = group_spectrum(sorted(block.laplacian_nonzero, reverse=True), cfg.tol_group)
        print(f"# {name}: n={og.n} m={og.m} triangles={len(t)}", file=out)
        print(f"H      : {sp_h.format()}", file=out)
        print(f"L      : {sp_l.format()}", file=out)
        print(f"G_tri  : {sp_t.format()}", file=out)
        verdict = "ok" if block.passed else "MISMATCH"
        print(f"nonzero Sp(H) = {{{lap.format()}}} + {{{shifted.format()}}}  [{verdict}]", file=out)
        print(file=out)
    if docs:
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2), file=out)
    return status


def cmd_check(cfg: RunConfig, out) -> int:
    status, docs = 0, []
    for name, og in load_graphs(cfg):
        report = run_checks(og, graph_rng(cfg.seed, name), cfg.flips, cfg.tol_zero)
        status |= 0 if report.passed else 1
        if cfg.format == "json":
            docs.append({"graph": name, "passed": report.passed, "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]})
            continue
        print(f"# {name}: n={og.n} m={og.m}", file=out)
        for c in report.checks:
            print(c.line(), file=out)
        print(file=out)
    if docs:
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2), file=out)
    return status


@dataclass
class _Row:
    g6: str
    n: int
    m: int
    report: GraphReport


def _survey_one(args) -> _Row:
    g6, seed, flips, tol_zero = args
    g = parse_graph6(g6)
    return _Row(g6, g.n, g.m, check_graph(g, seed, flips, tol_zero))


def _survey_source(cfg: RunConfig) -> Iterator[str]:
    if cfg.input is not None:
        for name, og in load_graphs(cfg):
            yield encode_graph6(og.graph)
        return
    for n in range(1, cfg.nmax + 1):
        for mask in range(1 << (n * (n - 1) // 2)):
            yield encode_graph6(graph_from_mask(n, mask))


def cmd_survey(cfg: RunConfig, out) -> int:
    jobs = [(g6, cfg.seed, cfg.flips, cfg.tol_zero) for g6 in _survey_source(cfg)]
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            rows = list(pool.imap(_survey_one, jobs, chunksize=256))
    else:
        rows = [_survey_one(j) for j in jobs]

    graphs = len(rows)
    edgeful = [r for r in rows if r.m > 0]
    counter = [r for r in edgeful if abs(r.report.lambda1 - r.report.mu1) > cfg.tol_zero]
    failed = [r for r in edgeful if not r.report.implementation_ok]
    converse = [r for r in edgeful if r.report.converse_counterexample]
    boundary = [r for r in edgeful if r.report.boundary_case]
    by_order = Counter(r.n for r in rows)
    summary = {
        "graphs": graphs,
        "graphs_by_order": " ".join(f"{n}:{by_order[n]}" for n in sorted(by_order)),
        "graphs_with_edges": len(edgeful),
        "lambda1_ne_mu1": len(counter),
        "check_failures": len(failed),
        "odd_cycle_converse_counterexamples": len(converse),
        "irreducible": sum(1 for r in edgeful if r.report.irreducible),
        "nonnegative_orientation": sum(1 for r in edgeful if r.report.nonneg_found),
        "odd_cycle_ge5_but_no_induced_one": len(boundary),
        "of_which_nonnegative_orientation": sum(1 for r in boundary if r.report.nonneg_found),
    }
    if cfg.format == "json":
        doc = dict(summary)
        doc["counterexamples"] = [{"graph6": r.g6, "lambda1": r.report.lambda1, "mu1": r.report.mu1}
                                  for r in counter]
        doc["failures"] = [{"graph6": r.g6, "checks": [c.name for c in r.report.checks if not c.passed]}
                           for r in failed]
        doc["converse_counterexamples"] = [r.g6 for r in converse]
        print(json.dumps(doc, indent=2), file=out)
    else:
        for r in counter:
            print(f"counterexample {r.g6} {r.report.lambda1!r} {r.report.mu1!r}", file=out)
        for r in converse:
            print(f"converse-counterexample {r.g6}", file=out)
        for r in failed:
            names = ",".join(c.name for c in r.report.checks if not c.passed)
            print(f"check-failure {r.g6} {names}", file=out)
        for k, v in summary.items():
            print(f"{k:<36} {v}", file=out)
    return 1 if failed or converse else 0


def cmd_families(cfg: RunConfig, out, family: str, n: int) -> int:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    closed = closed_form_spectrum(family, n, cfg.tol_group)
    g: Graph = FAMILIES[family](n)
    computed = group_spectrum(sym_eigenvalues(helmholtzian_direct(default_orientation(g), enumerate_triangles(g))),
                              cfg.tol_group)
    ok = compare_multisets(closed.values, computed.values, cfg.tol_group).ok
    if cfg.format == "json":
        print(json.dumps({"family": family, "n": n, "closed_form": closed.to_json(),
                          "computed": computed.to_json(), "match": ok}, indent=2), file=out)
    else:
        print(f"{family}({n}) closed form: {closed.format()}", file=out)
        print(f"{family}({n}) computed   : {computed.format()}", file=out)
        print("match" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="edge-list file, or graph6 lines if it ends in .g6")
    src.add_argument("--graph6", metavar="STR", help="single graph6 string")
    src.add_argument("--edges", metavar="STR", help="inline edge list, e.g. '0>1,1 2'")
    common.add_argument("--orient", default="default", metavar="default|random|FILE",
                        help="edge orientation: as parsed, seeded random, or u>v lines from FILE")
    common.add_argument("--seed", type=int, default=0, help="random seed (env HSPEC_SEED overrides)")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--tol-group", type=float, default=TOL_GROUP)
    common.add_argument("--tol-zero", type=float, default=TOL_ZERO)
    common.add_argument("--flips", type=int, default=5, help="random single-edge flips per orientation check")

    p = argparse.ArgumentParser(prog="hspec", description="Helmholtzian matrices and spectra of small graphs")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("matrix", parents=[common], help="print B, C, L, H, A(Lambda_R), A(G_tri), H'")
    sub.add_parser("spectrum", parents=[common], help="H, L and G_tri spectra with the block decomposition")
    sub.add_parser("check", parents=[common], help="run every theorem check on the input graph(s)")
    sv = sub.add_parser("survey", parents=[common], help="exhaustive checks over all graphs up to --nmax vertices")
    sv.add_argument("--nmax", type=int, default=6)
    sv.add_argument("--jobs", type=int, default=1)
    fam = sub.add_parser("families", parents=[common], help="closed-form spectrum of a named family")
    fam.add_argument("family", choices=sorted(FAMILIES))
    fam.add_argument("n", type=int)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    seed = args.seed
    if os.environ.get("HSPEC_SEED"):
        seed = int(os.environ["HSPEC_SEED"])
    try:
        cfg = RunConfig(
            command=args.command, input=args.input, graph6=args.graph6, edges=args.edges,
            orient=args.orient, seed=seed, format=args.format, tol_group=args.tol_group,
            tol_zero=args.tol_zero, nmax=getattr(args, "nmax", 6), jobs=getattr(args, "jobs", 1),
            flips=args.flips,
        )
        if cfg.command == "matrix":
            return cmd_matrix(cfg, out)
        if cfg.command == "spectrum":
            return cmd_spectrum(cfg, out)
        if cfg.command == "check":
            return cmd_check(cfg, out)
        if cfg.command == "survey":
            return cmd_survey(cfg, out)
        return cmd_families(cfg, out, args.family, args.n)
    except (ParseError, UsageError, OSError, ValueError) as exc:
        print(f"hspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
