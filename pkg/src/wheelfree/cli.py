"""Command-line front end: checks, colorings, decompositions, generation and verification."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import coloring
from .coloring import OutOfClass, TheoremViolation
from .connectivity import connectivity_level, find_clique_cutset
from .core import SizeCapExceeded, edge, find_isomorphism, is_connected
from .formats import ParseError, from_edgelist, from_graph6, to_edgelist, to_graph6
from .linegraph import RootVerificationError
from .patterns import BudgetExhausted, PatternKind, chord_edges, find_pattern, find_wheel
from .planar import EmbeddingError, is_planar
from .structure import (DecompositionError, catalog_by_name, decompose, generate,
                        is_basic_by_characterization, is_basic_by_class, is_basic_by_definition,
                        load_catalog, replay_graph, tree_from_json, tree_to_json)

EXIT_OK, EXIT_PARSE, EXIT_OUT_OF_CLASS, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4, 5
INTERNAL_ERRORS = (TheoremViolation, DecompositionError, RootVerificationError, EmbeddingError)


class CommandFailed(Exception):
    def __init__(self, code: int, message: str, certificate: str | None = None):
        super().__init__(message)
        self.code = code
        self.certificate = certificate


@dataclass
class Report:
    command: str
    input_digest: str = ""
    verdicts: dict = field(default_factory=dict)
    certificates: list[str] = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    fallbacks: dict = field(default_factory=dict)
    output: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    error: str | None = None

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(asdict(self), indent=1, sort_keys=True)
        lines = [f"command: {self.command}"]
        if self.input_digest:
            lines.append(f"input: sha256:{self.input_digest}")
        lines += [f"{k}: {_fmt(v)}" for k, v in self.verdicts.items()]
        lines += self.certificates
        lines += self.output
        if self.fallbacks:
            lines.append("fallbacks: " + " ".join(f"{k}={v}" for k, v in self.fallbacks.items()))
        if self.timings:
            lines.append("time: " + " ".join(f"{k}={v:.3f}s" for k, v in self.timings.items()))
        if self.error:
            lines.append(f"error: {self.error}")
        return "\n".join(lines)


def _fmt(v) -> str:
    if v is None:
        return "unknown"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def threads_from_env() -> int:
    raw = os.environ.get("WHEELFREE_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise CommandFailed(EXIT_PARSE, f"WHEELFREE_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise CommandFailed(EXIT_PARSE, f"WHEELFREE_THREADS must be a positive integer, got {raw!r}")
    return n


def _read_input(path: str, fmt: str, report: Report):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CommandFailed(EXIT_PARSE, f"cannot read {path}: {exc}")
    report.input_digest = hashlib.sha256(data).hexdigest()
    text = data.decode("ascii", errors="replace")
    if fmt == "edgelist":
        return from_edgelist(text)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].startswith(">>graph6<<"):
        lines[0] = lines[0][len(">>graph6<<"):]
        lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line, found {len(lines)}")
    return from_graph6(lines[0])


def _budget(args) -> float | None:
    return None if args.budget_ms <= 0 else args.budget_ms / 1000.0


def _record_stats(report: Report, before: tuple[int, int]) -> None:
    report.fallbacks = {"edge": coloring.STATS.edge_fallbacks - before[0],
                        "vertex": coloring.STATS.vertex_fallbacks - before[1]}


# -- commands --------------------------------------------------------------------

def cmd_check(args, report: Report) -> None:
    g = _read_input(args.graph, args.format, report)
    t = time.perf_counter()
    planar = is_planar(g)
    report.verdicts["vertices"] = g.n
    report.verdicts["edges"] = g.m
    report.verdicts["planar"] = planar
    report.verdicts["connectivity"] = connectivity_level(g)
    try:
        wheel = find_wheel(g, _budget(args))
        report.verdicts["wheel_free"] = wheel is None
        if wheel is not None:
            report.certificates.append(wheel.certificate())
    except BudgetExhausted:
        report.verdicts["wheel_free"] = None
    for kind in PatternKind:
        hit = find_pattern(g, kind)
        report.verdicts[f"pattern_{kind.name.lower()}"] = hit is not None
        if hit is not None:
            report.certificates.append(f"PATTERN {kind.name} " + " ".join(map(str, hit)))
    cut = find_clique_cutset(g, 3) if g.n and is_connected(g) else None
    report.verdicts["clique_cutset"] = cut is not None
    if cut is not None:
        report.certificates.append(cut.certificate())
    if g.n and is_connected(g):
        by_def = is_basic_by_definition(g)
        report.verdicts["basic_definition"] = by_def.is_basic
        report.verdicts["basic_characterization"] = is_basic_by_characterization(g)
        report.verdicts["basic_class"] = is_basic_by_class(g, _budget(args))
        if by_def.root is not None:
            report.certificates.append("ROOT " + to_graph6(by_def.root))
    report.timings["check"] = time.perf_counter() - t
    wf = report.verdicts["wheel_free"]
    if wf is None:
        raise CommandFailed(EXIT_BUDGET, "wheel search exceeded the budget")
    if not (planar and wf):
        raise CommandFailed(EXIT_OUT_OF_CLASS, "not a wheel-free planar graph")


def cmd_color(args, report: Report) -> None:
    g = _read_input(args.graph, args.format, report)
    before = (coloring.STATS.edge_fallbacks, coloring.STATS.vertex_fallbacks)
    t = time.perf_counter()
    try:
        col = coloring.three_color_wheel_free_planar(g, _budget(args))
    except OutOfClass as exc:
        raise CommandFailed(EXIT_OUT_OF_CLASS, str(exc),
                            exc.witness.certificate() if exc.witness else None)
    report.timings["color"] = time.perf_counter() - t
    _record_stats(report, before)
    report.verdicts["colors"] = len(set(col.values()))
    report.verdicts["verified"] = coloring.verify_vertex_coloring(g, col, 3)
    report.output += [f"{v} {col[v]}" for v in range(g.n)]


def cmd_edge_color(args, report: Report) -> None:
    g = _read_input(args.graph, args.format, report)
    if g.max_degree() > 3:
        v = max(range(g.n), key=g.degree)
        raise CommandFailed(EXIT_OUT_OF_CLASS, "maximum degree exceeds 3", f"DEGREE {v} {g.degree(v)}")
    chords = chord_edges(g)
    if len(chords) > 1:
        raise CommandFailed(EXIT_OUT_OF_CLASS, "more than one edge is a chord of a cycle",
                            "CHORDS " + " ".join(f"{u}-{v}" for u, v in chords))
    before = (coloring.STATS.edge_fallbacks, coloring.STATS.vertex_fallbacks)
    t = time.perf_counter()
    col = coloring.three_edge_color_almost_chordless(g)
    report.timings["edge_color"] = time.perf_counter() - t
    _record_stats(report, before)
    report.verdicts["colors"] = len(set(col.values()))
    report.verdicts["verified"] = coloring.verify_edge_coloring(g, col, 3)
    report.output += [f"{u} {v} {col[(u, v)]}" for u, v in g.edges()]


def cmd_decompose(args, report: Report) -> None:
    g = _read_input(args.graph, args.format, report)
    t = time.perf_counter()
    try:
        tree = decompose(g, _budget(args))
    except ValueError as exc:
        raise CommandFailed(EXIT_OUT_OF_CLASS, str(exc))
    report.timings["decompose"] = time.perf_counter() - t
    report.verdicts["leaves"] = len(tree.leaves)
    text = tree_to_json(tree)
    if args.out:
        Path(args.out).write_text(text + "\n")
        report.verdicts["tree_file"] = args.out
    else:
        report.output.append(text)


def cmd_replay(args, report: Report) -> None:
    try:
        data = Path(args.tree).read_bytes()
    except OSError as exc:
        raise CommandFailed(EXIT_PARSE, f"cannot read {args.tree}: {exc}")
    report.input_digest = hashlib.sha256(data).hexdigest()
    try:
        tree = tree_from_json(data.decode())
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"invalid decomposition tree: {exc}")
    t = time.perf_counter()
    try:
        g = replay_graph(tree)
    except ValueError as exc:
        raise CommandFailed(EXIT_OUT_OF_CLASS, f"tree does not replay: {exc}")
    report.verdicts["leaves"] = len(tree.leaves)
    report.output.append(to_graph6(g))
    if args.against:
        other = _read_input(args.against, args.format, Report("against"))
        try:
            iso = g == other or find_isomorphism(g, other, cap=args.cap) is not None
        except SizeCapExceeded as exc:
            raise CommandFailed(EXIT_BUDGET, str(exc))
        report.verdicts["isomorphic"] = iso
        if not iso:
            raise CommandFailed(EXIT_OUT_OF_CLASS, "replayed graph differs from the reference")
    report.timings["replay"] = time.perf_counter() - t


def cmd_generate(args, report: Report) -> None:
    extra = load_catalog(args.catalog) if args.catalog else None
    catalog = catalog_by_name(extra)
    unknown = [s for s in args.seeds if s not in catalog]
    if unknown:
        raise CommandFailed(EXIT_PARSE, f"unknown seed {unknown[0]!r}; known: {', '.join(sorted(catalog))}")
    rng = random.Random(args.rng)
    for _ in range(args.count):
        g = generate(args.seeds, args.glues, rng, catalog)
        report.output.append(to_edgelist(g).rstrip("\n") if args.format == "edgelist" else to_graph6(g))


def _read_coloring(path: str, arity: int) -> dict:
    col = {}
    for i, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line or ":" in line:  # blank, or a report header line
            continue
        parts = line.split()
        if len(parts) != arity or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"{path}:{i}: expected {arity} integers")
        nums = [int(p) for p in parts]
        key = nums[0] if arity == 2 else edge(nums[0], nums[1])
        col[key] = nums[-1]
    return col


def cmd_verify(args, report: Report) -> None:
    g = _read_input(args.graph, args.format, report)
    col = _read_coloring(args.coloring, 3 if args.edges else 2)
    try:
        ok = (coloring.verify_edge_coloring(g, col, args.colors) if args.edges
              else coloring.verify_vertex_coloring(g, col, args.colors))
    except ValueError as exc:
        raise CommandFailed(EXIT_OUT_OF_CLASS, str(exc))
    report.verdicts["proper"] = ok
    if not ok:
        raise CommandFailed(EXIT_OUT_OF_CLASS, "coloring is not proper")


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the structured report")
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--budget-ms", type=int, default=5000,
                        help="wheel-search budget in milliseconds (<= 0: unlimited)")

    p = argparse.ArgumentParser(prog="wheelfree", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="planarity, connectivity, wheels, patterns, basic tests")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("color", parents=[common], help="3-color a wheel-free planar graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("edge-color", parents=[common], help="3-edge-color an almost chordless subcubic graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_edge_color)

    s = sub.add_parser("decompose", parents=[common], help="split on triangle cutsets into basic graphs")
    s.add_argument("graph")
    s.add_argument("--out", help="write the tree JSON here instead of stdout")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("replay", parents=[common], help="rebuild a graph from a decomposition tree")
    s.add_argument("tree")
    s.add_argument("--against", help="graph file to compare with (up to isomorphism)")
    s.add_argument("--cap", type=int, default=None, help="vertex cap for the isomorphism test")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("generate", parents=[common], help="emit class members built by face-triangle gluing")
    s.add_argument("seeds", nargs="+")
    s.add_argument("--glues", type=int, default=0)
    s.add_argument("--rng", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--catalog", help="graph6 file of extra 3-connected cubic planar seeds")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", parents=[common], help="check a coloring file against a graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--edges", action="store_true", help="coloring lines are 'u v color'")
    s.add_argument("--colors", type=int, default=None, help="maximum allowed color")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> tuple[Report, bool]:
    args = build_parser().parse_args(argv)
    report = Report(args.command)
    try:
        report.verdicts["threads"] = threads_from_env()
        args.func(args, report)
    except CommandFailed as exc:
        report.exit_code, report.error = exc.code, str(exc)
        if exc.certificate:
            report.certificates.append(exc.certificate)
    except ParseError as exc:
        report.exit_code, report.error = EXIT_PARSE, str(exc)
    except BudgetExhausted as exc:
        report.exit_code, report.error = EXIT_BUDGET, str(exc) or "budget exhausted"
    except INTERNAL_ERRORS as exc:
        report.exit_code, report.error = EXIT_INTERNAL, f"{type(exc).__name__}: {exc}"
    return report, args.json


def main(argv: list[str] | None = None) -> int:
    report, as_json = run(argv)
    if report.command == "generate" and not as_json and report.exit_code == EXIT_OK:
        print("\n".join(report.output))
    else:
        print(report.render(as_json))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
