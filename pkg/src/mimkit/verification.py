"""Exhaustive and stream-driven checks of the counting bounds.

All bound comparisons are integer power comparisons, e.g. ``count**3 <= 3**n``
for the triangle-free bound, so equality cases are decided exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from multiprocessing import Pool
from typing import Iterable, Iterator

from .enumeration import count_mim, count_mis, enumerate_mim_cameron
from .generators import complete_bipartite, exhaustive_adjacency, exhaustive_graphs, extremal_mim
from .graph import Graph, VertexSet, Vertices, bits
from .graph6 import Graph6Error, from_graph6, to_graph6
from .matchings import Matching, count_mim_oracle, covered_mask, enumerate_mim_oracle, matchings_constrained
from .transforms import LemmaReport, check_lemma2, check_lemma3, check_lemma4, check_lemma5, retarget_adjacency

ORACLE_MAX_N = 12


def within_triangle_free_bound(count: int, n: int) -> bool:
    return count ** 3 <= 3 ** n


def within_general_bound(count: int, n: int) -> bool:
    return count ** 5 <= 10 ** n


@dataclass
class BoundReport:
    seq: int
    graph_id: str
    n: int | None = None
    triangle_free: bool | None = None
    mim_count: int | None = None
    bound_holds: bool | None = None
    extremal: bool | None = None
    oracle_count: int | None = None
    skipped: bool = False
    error: str | None = None

    @property
    def violation(self) -> bool:
        return self.bound_holds is False or (
            self.oracle_count is not None and self.oracle_count != self.mim_count)

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(seq: int, g: Graph, graph_id: str | None = None,
                 cross_check_max_n: int = ORACLE_MAX_N) -> BoundReport:
    """Count with the Cameron enumerator and, for small graphs, the oracle too."""
    report = BoundReport(seq, graph_id if graph_id is not None else to_graph6(g), g.n)
    report.triangle_free = g.is_triangle_free()
    if not report.triangle_free:
        report.skipped = True
        return report
    count = sum(1 for _ in enumerate_mim_cameron(g))
    report.mim_count = count
    report.bound_holds = within_triangle_free_bound(count, g.n)
    report.extremal = count ** 3 == 3 ** g.n
    if g.n <= cross_check_max_n:
        report.oracle_count = count_mim_oracle(g)
    return report


def _report_task(task: tuple[int, str, int]) -> BoundReport:
    seq, text, limit = task
    try:
        g = from_graph6(text)
    except Graph6Error as exc:
        return BoundReport(seq, text, error=str(exc))
    return bound_report(seq, g, text, limit)


def verify_bound(source: Iterable[Graph | str], jobs: int = 1,
                 cross_check_max_n: int = ORACLE_MAX_N) -> Iterator[BoundReport]:
    """One report per input graph, in input order.

    ``source`` may mix :class:`Graph` objects and graph6 lines; malformed
    lines produce a report carrying ``error`` instead of aborting the run.
    """
    def tasks() -> Iterator[tuple[int, str, int]]:
        seq = 0
        for item in source:
            if isinstance(item, Graph):
                item = to_graph6(item)
            else:
                item = item.strip()
                if not item or item == ">>graph6<<":
                    continue
            yield seq, item, cross_check_max_n
            seq += 1

    if jobs <= 1:
        yield from map(_report_task, tasks())
        return
    with Pool(jobs) as pool:
        yield from pool.imap(_report_task, tasks(), chunksize=64)


def summarize(reports: Iterable[BoundReport]) -> dict:
    summary = {"summary": True, "graphs": 0, "triangle_free": 0, "skipped": 0, "errors": 0,
               "violations": 0, "extremal": 0, "max_mim_count": 0}
    for r in reports:
        summary["graphs"] += 1
        if r.error:
            summary["errors"] += 1
            continue
        if r.skipped:
            summary["skipped"] += 1
            continue
        summary["triangle_free"] += 1
        summary["violations"] += r.violation
        summary["extremal"] += bool(r.extremal)
        summary["max_mim_count"] = max(summary["max_mim_count"], r.mim_count)
    return summary


def exhaustive_bound_sweep(n: int) -> dict:
    """Triangle-free bound over every labelled graph on ``n`` vertices.

    Non-triangle-free graphs are filtered before any report is built; the
    summary carries the failing graph6 strings, if any.
    """
    graphs = tri_free = extremal = 0
    failures: list[str] = []
    max_count = 0
    seq = 0
    for adj in exhaustive_adjacency(n):
        graphs += 1
        g = Graph._trusted(adj)
        if not g.is_triangle_free():
            continue
        tri_free += 1
        r = bound_report(seq, g)
        seq += 1
        extremal += bool(r.extremal)
        max_count = max(max_count, r.mim_count)
        if r.violation:
            failures.append(r.graph_id)
    return {"n": n, "graphs": graphs, "triangle_free": tri_free, "extremal": extremal,
            "max_mim_count": max_count, "violations": len(failures), "failures": failures}


@dataclass
class Lemma6Report:
    graph6: str
    avoid: list[int]
    edge: tuple[int, int]
    lhs: int
    rhs: int
    injective: bool
    images_maximal: bool
    bound_holds: bool | None
    holds: bool

    def to_dict(self) -> dict:
        return asdict(self)


def check_lemma6(g: Graph, x: Vertices, u: int, v: int,
                 mims: list[Matching] | None = None) -> Lemma6Report:
    """Map each matching of M_G(X, {u, v}) to itself minus ``uv`` inside G - (X u N[{u, v}]).

    Checks that every image is a maximal induced matching of the smaller
    graph and that no two matchings share an image, hence lhs <= rhs.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    xmask = g.mask_of(x)
    if xmask >> u & 1 or xmask >> v & 1:
        raise ValueError("X must avoid u and v")
    pair = 1 << u | 1 << v
    if mims is None:
        cls = list(matchings_constrained(g, VertexSet(g.n, xmask), (u, v)))
    else:
        cls = [m for m in mims if not covered_mask(m) & xmask and covered_mask(m) & pair == pair]
    gone = xmask | g.closed_neighborhood(VertexSet(g.n, pair)).mask
    smaller, label_map = g.delete_vertices(VertexSet(g.n, gone))
    new_label = {old: new for new, old in enumerate(label_map)}
    targets = set(enumerate_mim_oracle(smaller))

    uv = (min(u, v), max(u, v))
    images = set()
    images_maximal = True
    for m in cls:
        rest = [e for e in m if e != uv]
        try:
            image = tuple(sorted((new_label[a], new_label[b]) for a, b in rest))
        except KeyError:
            images_maximal = False
            continue
        images_maximal &= image in targets
        images.add(image)
    injective = len(images) == len(cls)
    lhs, rhs = len(cls), len(targets)
    bound = within_triangle_free_bound(lhs, smaller.n) if g.is_triangle_free() else None
    return Lemma6Report(to_graph6(g), list(bits(xmask)), uv, lhs, rhs, injective, images_maximal,
                        bound, lhs <= rhs and injective and images_maximal and bound is not False)


def lemma6_sweep(graphs: Iterable[Graph], rng: random.Random) -> Iterator[Lemma6Report]:
    """Every edge with X empty and with one random nonempty X avoiding the edge."""
    for g in graphs:
        mims = list(enumerate_mim_oracle(g))
        for u, v in g.edges():
            yield check_lemma6(g, (), u, v, mims)
            rest = [w for w in range(g.n) if w != u and w != v]
            if rest:
                k = rng.randint(1, len(rest))
                yield check_lemma6(g, rng.sample(rest, k), u, v, mims)


@dataclass
class ExtremalFamilyReport:
    p: int
    n: int
    mim_count: int
    expected: int
    enumerated: bool
    extremal: bool
    seconds: float
    delay: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.mim_count == self.expected and self.extremal


def verify_extremal_family(p: int, enumerate_limit: int = 5) -> ExtremalFamilyReport:
    """Count p disjoint copies of K_{3,3}; full enumeration up to ``enumerate_limit`` copies.

    Beyond the limit the count is the product of per-component counts.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    g = extremal_mim(p)
    start = time.perf_counter()
    if p <= enumerate_limit:
        stream = enumerate_mim_cameron(g)
        count = sum(1 for _ in stream)
        delay = stream.delay_stats()
        enumerated = True
    else:
        count = sum(1 for _ in enumerate_mim_cameron(complete_bipartite(3, 3))) ** p
        delay = {}
        enumerated = False
    seconds = time.perf_counter() - start
    return ExtremalFamilyReport(p, g.n, count, 9 ** p, enumerated, count ** 3 == 3 ** g.n, seconds, delay)


def is_k33_structured(g: Graph) -> bool:
    """Exactly K_{3,3} on six vertices: two twin classes of size three joined completely."""
    if g.n != 6 or g.edge_count != 9:
        return False
    blocks = g.twin_partition().blocks
    if len(blocks) != 2 or len(blocks[0]) != 3:
        return False
    a, b = blocks
    return all(g.adj[v] == b.mask for v in a) and all(g.adj[v] == a.mask for v in b)


def characterize_extremal_n6() -> dict:
    """Over all triangle-free labelled graphs on 6 vertices, 9 matchings iff K_{3,3}."""
    tri_free = k33 = hits = 0
    exceptions: list[str] = []
    max_other = 0
    for g in exhaustive_graphs(6):
        if not g.is_triangle_free():
            continue
        tri_free += 1
        count = count_mim_oracle(g)
        structured = is_k33_structured(g)
        k33 += structured
        hits += count == 9
        if structured:
            if count != 9:
                exceptions.append(to_graph6(g))
        else:
            max_other = max(max_other, count)
            if count > 8:
                exceptions.append(to_graph6(g))
    return {"triangle_free": tri_free, "k33_labelings": k33, "count_9": hits,
            "max_other": max_other, "exceptions": exceptions}


def companion_bounds(graphs: Iterable[Graph]) -> dict:
    """General bound on matchings plus the two independent-set ceilings.

    Checks count**5 <= 10**n for maximal induced matchings and
    mis**3 <= 3**n for every graph, and mis**2 <= 2**n for triangle-free ones.
    """
    total = tri_free = 0
    failures: list[tuple[str, str]] = []
    for g in graphs:
        total += 1
        n = g.n
        mim = count_mim(g)
        mis = count_mis(g)
        if not within_general_bound(mim, n):
            failures.append(("mim_general", to_graph6(g)))
        if mis ** 3 > 3 ** n:
            failures.append(("mis_general", to_graph6(g)))
        if g.is_triangle_free():
            tri_free += 1
            if mis ** 2 > 2 ** n:
                failures.append(("mis_triangle_free", to_graph6(g)))
    return {"graphs": total, "triangle_free": tri_free, "violations": len(failures), "failures": failures}


def lemma23_reports(g: Graph, counter=count_mim_oracle) -> Iterator[LemmaReport]:
    """Both disjunction checks for every unordered non-adjacent pair of ``g``.

    Pairs covered together by some maximal induced matching are reported as
    inapplicable.
    """
    covers = [covered_mask(m) for m in enumerate_mim_oracle(g)]
    g6 = to_graph6(g)
    for u, v in combinations(range(g.n), 2):
        both = 1 << u | 1 << v
        if g.has_edge(u, v) or any(c & both == both for c in covers):
            for lemma in ("lemma2", "lemma3"):
                yield LemmaReport(lemma, g6, (u, v), False, None,
                                  reason="some maximal induced matching covers both u and v")
            continue
        yield check_lemma2(g, u, v, counter=counter, applicable=True)
        yield check_lemma3(g, u, v, counter=counter, applicable=True)


def lemma23_sweep(graphs: Iterable[Graph]) -> dict:
    """Aggregate :func:`lemma23_reports` with counts memoised per labelled graph."""
    counter = lru_cache(maxsize=1 << 17)(count_mim_oracle)
    applicable = failures = pairs = 0
    failed: list[LemmaReport] = []
    for g in graphs:
        for r in lemma23_reports(g, counter):
            pairs += 1
            if r.applicable:
                applicable += 1
                if not r.holds:
                    failures += 1
                    failed.append(r)
    return {"checks": pairs, "applicable": applicable, "failures": failures, "failed": failed}


def lemma45_sweep(graphs: Iterable[Graph]) -> dict:
    """Triangle-freeness and twin-class drop after twin-set retargeting, all ordered pairs.

    Runs on raw neighbour masks; triangle-containing inputs are skipped.
    """
    graphs_checked = pairs = strict = 0
    failures: list[tuple[str, str, int, int]] = []
    for g in graphs:
        if not g.is_triangle_free():
            continue
        graphs_checked += 1
        adj = g.adj
        tau = len(set(adj))
        for u in range(g.n):
            for v in range(g.n):
                if u == v or adj[u] >> v & 1:
                    continue
                pairs += 1
                out = Graph._trusted(retarget_adjacency(adj, u, v))
                if not out.is_triangle_free():
                    failures.append(("lemma4", to_graph6(g), u, v))
                if adj[u] != adj[v]:
                    strict += 1
                    if not len(set(out.adj)) < tau:
                        failures.append(("lemma5", to_graph6(g), u, v))
    return {"graphs": graphs_checked, "pairs": pairs, "non_twin_pairs": strict,
            "failures": len(failures), "failed": failures}


def lemma45_reports(g: Graph) -> Iterator[LemmaReport]:
    for u in range(g.n):
        for v in range(g.n):
            if u != v and not g.has_edge(u, v):
                yield check_lemma4(g, u, v)
                yield check_lemma5(g, u, v)


def oracle_cameron_mismatches(graphs: Iterable[Graph]) -> list[str]:
    """graph6 ids where the two enumerators disagree as sets."""
    bad = []
    for g in graphs:
        oracle = list(enumerate_mim_oracle(g))
        cameron = sorted(enumerate_mim_cameron(g))
        if oracle != cameron:
            bad.append(to_graph6(g))
    return bad


def parse_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and line != ">>graph6<<":
            yield from_graph6(line)
