"""Command-line interface: graph6 in, text or JSON lines out.

Examples::

    mimkit gen extremal_mim 1 | mimkit count
    mimkit gen path 4 | mimkit enumerate
    mimkit verify --exhaustive 6
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import IO, Iterator

from .enumeration import enumerate_mim_cameron, maximum_induced_matching
from .generators import FAMILIES, exhaustive_graphs, generate
from .graph import Graph
from .graph6 import Graph6Error, read_graph6, to_graph6
from .matchings import Matching, enumerate_mim_oracle, format_matching
from .transforms import LemmaReport, retarget_twin_set, retarget_vertex
from .verification import (
    ORACLE_MAX_N,
    lemma6_sweep,
    lemma23_reports,
    lemma45_reports,
    summarize,
    verify_bound,
)

LEMMAS = ("lemma2", "lemma3", "lemma4", "lemma5", "lemma6")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    input: str | None = None
    graph: str | None = None
    strategy: str = "auto"
    format: str = "text"
    jobs: int = 1
    seed: int = 0
    max_n: int = 16
    force: bool = False
    extra: dict = field(default_factory=dict)


def _parse_graph_spec(spec: str) -> Graph:
    name, _, rest = spec.partition(":")
    params = [int(p) for p in rest.split(",") if p]
    return generate(name, *params)


def _input_graphs(cfg: CommandConfig, stdin: IO[str], errors: list[str]) -> Iterator[tuple[str, Graph]]:
    if cfg.graph is not None:
        g = _parse_graph_spec(cfg.graph)
        yield to_graph6(g), g
        return
    if cfg.input in (None, "-"):
        stream = stdin
        yield from _graph6_items(stream, errors)
    else:
        with open(cfg.input) as fh:
            yield from _graph6_items(fh, errors)


def _graph6_items(lines, errors: list[str]) -> Iterator[tuple[str, Graph]]:
    for lineno, raw, item in read_graph6(lines):
        if isinstance(item, Graph6Error):
            errors.append(f"line {lineno}: {item}")
            continue
        yield raw, item


def _use_oracle(cfg: CommandConfig, g: Graph) -> bool:
    if cfg.strategy == "oracle":
        use = True
    elif cfg.strategy == "cameron":
        use = False
    else:
        use = g.n <= ORACLE_MAX_N
    if use and g.n > cfg.max_n and not cfg.force:
        raise UsageError(f"oracle refused for n={g.n} > --max-n {cfg.max_n}; pass --force")
    return use


def _matchings(cfg: CommandConfig, g: Graph, ordered: bool = True) -> Iterator[Matching]:
    if _use_oracle(cfg, g):
        return enumerate_mim_oracle(g)
    stream = enumerate_mim_cameron(g)
    return iter(sorted(stream)) if ordered else stream


def _emit(out: IO[str], cfg: CommandConfig, text: str, payload: dict) -> None:
    if cfg.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def run(cfg: CommandConfig, stdin: IO[str] = sys.stdin, stdout: IO[str] = sys.stdout,
        stderr: IO[str] = sys.stderr) -> int:
    """Execute one subcommand; returns the process exit status."""
    errors: list[str] = []
    try:
        status = _dispatch(cfg, stdin, stdout, errors)
    except (UsageError, ValueError, OSError) as exc:
        stderr.write(f"mimkit: error: {exc}\n")
        return 2
    for msg in errors:
        stderr.write(f"mimkit: {msg}\n")
    return 1 if errors or status else 0


def _dispatch(cfg: CommandConfig, stdin, out, errors: list[str]) -> int:
    sub = cfg.subcommand
    if sub == "gen":
        g = generate(cfg.extra["family"], *cfg.extra["params"])
        _emit(out, cfg, to_graph6(g), {"graph6": to_graph6(g), "n": g.n, "edges": g.edge_count})
        return 0

    if sub == "verify" and cfg.extra.get("exhaustive"):
        source = iter(exhaustive_graphs(cfg.extra["exhaustive"]))
    else:
        source = (g for _, g in _input_graphs(cfg, stdin, errors))

    if sub == "verify":
        reports = []
        for r in verify_bound(source, jobs=cfg.jobs):
            reports.append(r)
            out.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
        summary = summarize(reports)
        out.write(json.dumps(summary, sort_keys=True) + "\n")
        return 1 if summary["violations"] or summary["errors"] else 0

    failures = 0
    for seq, g in enumerate(source):
        g6 = to_graph6(g)
        if sub == "count":
            count = sum(1 for _ in _matchings(cfg, g, ordered=False))
            _emit(out, cfg, str(count), {"graph6": g6, "count": count})
        elif sub == "enumerate":
            if seq and cfg.format == "text":
                out.write("--\n")
            _enumerate(cfg, g, g6, out)
        elif sub == "maximum":
            m = maximum_induced_matching(g, cfg.extra.get("method") or "stream")
            _emit(out, cfg, f"{len(m)}\t{format_matching(m)}",
                  {"graph6": g6, "size": len(m), "matching": [list(e) for e in m]})
        elif sub == "transform":
            u, v = cfg.extra["u"], cfg.extra["v"]
            fn = retarget_twin_set if cfg.extra.get("twin_set") else retarget_vertex
            res = fn(g, u, v)
            text = "\n".join([to_graph6(res.graph),
                              "removed: " + format_matching(res.removed),
                              "added: " + format_matching(res.added)])
            _emit(out, cfg, text, {"graph6": to_graph6(res.graph), "input": g6, "pair": [u, v],
                                   "removed": [list(e) for e in res.removed],
                                   "added": [list(e) for e in res.added]})
        elif sub == "lemmas":
            failures += _lemmas(cfg, g, out, random.Random(f"{cfg.seed}:{seq}"))
    if sub == "lemmas":
        out.write(json.dumps({"summary": True, "failures": failures}) + "\n")
    return 1 if failures else 0


def _enumerate(cfg: CommandConfig, g: Graph, g6: str, out: IO[str]) -> None:
    timestamps = cfg.extra.get("timestamps")
    if timestamps and cfg.strategy != "oracle":
        stream = enumerate_mim_cameron(g)
        for m in stream:
            _emit(out, cfg, f"{format_matching(m)}\t{stream.delays[-1]:.9f}",
                  {"graph6": g6, "matching": [list(e) for e in m], "delay": stream.delays[-1]})
        return
    for m in _matchings(cfg, g):
        _emit(out, cfg, format_matching(m), {"graph6": g6, "matching": [list(e) for e in m]})


def _lemmas(cfg: CommandConfig, g: Graph, out: IO[str], rng: random.Random) -> int:
    selected = cfg.extra.get("lemmas") or LEMMAS
    reports: list = []
    if "lemma2" in selected or "lemma3" in selected:
        reports += [r for r in lemma23_reports(g) if r.lemma in selected]
    if "lemma4" in selected or "lemma5" in selected:
        reports += [r for r in lemma45_reports(g) if r.lemma in selected]
    if "lemma6" in selected:
        reports += lemma6_sweep([g], rng)
    failures = 0
    for r in reports:
        record = r.to_dict()
        if not isinstance(r, LemmaReport):
            record["lemma"] = "lemma6"
        failures += record.get("holds") is False
        out.write(json.dumps(record, sort_keys=True) + "\n")
    return failures


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="graph6 file, or - for stdin (default)")
    common.add_argument("--graph", "-g", help="generator spec instead of input, e.g. extremal_mim:2")
    common.add_argument("--strategy", choices=("oracle", "cameron", "auto"), default="auto")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=int(os.environ.get("MIMKIT_JOBS", "1")))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=16, help="largest n the oracle may run on")
    common.add_argument("--force", action="store_true", help="override --max-n")

    parser = argparse.ArgumentParser(prog="mimkit", description="Maximal induced matchings in graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("count", parents=[common], help="number of maximal induced matchings per graph")
    p = sub.add_parser("enumerate", parents=[common], help="list maximal induced matchings")
    p.add_argument("--timestamps", action="store_true", help="stream unsorted with per-item delay")
    p = sub.add_parser("maximum", parents=[common], help="maximum induced matching size and witness")
    p.add_argument("--method", choices=("stream", "branch"))
    p = sub.add_parser("verify", parents=[common], help="check the triangle-free bound, JSON lines")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs on N <= 7 vertices")
    p = sub.add_parser("transform", parents=[common], help="retarget u to v")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--twin-set", action="store_true", help="move the whole twin class of u")
    p = sub.add_parser("lemmas", parents=[common], help="property-check reports, JSON lines")
    p.add_argument("lemmas", nargs="*", metavar="LEMMA",
                   help=f"any of {', '.join(LEMMAS)} (default all)")
    p = sub.add_parser("gen", parents=[common], help="graph6 of a named family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    base = {"input", "graph", "strategy", "format", "jobs", "seed", "max_n", "force", "subcommand"}
    extra = {k: v for k, v in vars(args).items() if k not in base}
    if args.input is not None and args.graph is not None:
        raise UsageError("give either --input or --graph, not both")
    unknown = set(getattr(args, "lemmas", None) or ()) - set(LEMMAS)
    if unknown:
        raise UsageError(f"unknown lemma selector(s): {', '.join(sorted(unknown))}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return CommandConfig(args.subcommand, args.input, args.graph, args.strategy, args.format,
                         args.jobs, args.seed, args.max_n, args.force, extra)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        parser.error(str(exc))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
