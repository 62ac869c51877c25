"""Maximal induced matchings as maximal independent sets of L(G)^2.

Two edges of G are adjacent in the square of the line graph exactly when
they share an endpoint or some edge of G joins them, i.e. when they cannot
both belong to an induced matching. Enumerating maximal independent sets
of that graph with polynomial delay therefore lists the maximal induced
matchings of G with polynomial delay.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, VertexSet, bits
from .matchings import Edge, Matching


@dataclass(frozen=True)
class LineGraphMap:
    host: Graph
    edge_of_vertex: tuple[Edge, ...]


def line_graph(g: Graph) -> LineGraphMap:
    """L(G), with vertex ``k`` standing for the ``k``-th edge of ``g`` in canonical order."""
    edges = g.edges()
    incident = [0] * g.n
    for k, (u, v) in enumerate(edges):
        incident[u] |= 1 << k
        incident[v] |= 1 << k
    rows = tuple((incident[u] | incident[v]) & ~(1 << k) for k, (u, v) in enumerate(edges))
    return LineGraphMap(Graph._trusted(rows), tuple(edges))


def graph_square(g: Graph) -> Graph:
    """Same vertices; adjacency at distance one or two."""
    adj = g.adj
    rows = []
    for v, row in enumerate(adj):
        reach = row
        for w in bits(row):
            reach |= adj[w]
        rows.append(reach & ~(1 << v))
    return Graph._trusted(tuple(rows))


def _mis_masks(adj: tuple[int, ...]) -> Iterator[int]:
    """Reverse search over prefixes G[0..i).

    A node ``(i, S)`` holds a maximal independent set ``S`` of the prefix
    graph on vertices ``0..i-1``. Its children are the maximal independent
    sets of the next prefix whose canonical parent is ``S``; the parent of
    ``T`` containing ``i`` is the greedy lexicographic completion of
    ``T - {i}`` in the previous prefix. Every node has a child, so the work
    between two outputs is polynomial.
    """
    n = len(adj)
    stack = [(0, 0)]
    while stack:
        i, s = stack.pop()
        if i == n:
            yield s
            continue
        bit = 1 << i
        earlier = adj[i] & (bit - 1)
        if not s & earlier:
            stack.append((i + 1, s | bit))
            continue
        t = (s & ~earlier) | bit
        if _is_maximal_prefix(adj, t, i + 1) and _greedy_completion(adj, t & ~bit, i) == s:
            stack.append((i + 1, t))
        stack.append((i + 1, s))


def _is_maximal_prefix(adj: tuple[int, ...], s: int, limit: int) -> bool:
    for j in range(limit):
        if not s >> j & 1 and not adj[j] & s:
            return False
    return True


def _greedy_completion(adj: tuple[int, ...], s: int, limit: int) -> int:
    for j in range(limit):
        if not s >> j & 1 and not adj[j] & s:
            s |= 1 << j
    return s


def enumerate_mis(g: Graph) -> Iterator[VertexSet]:
    """Every maximal independent set of ``g`` exactly once.

    An edgeless graph yields the single set V (the empty set when n = 0).
    """
    n = g.n
    for mask in _mis_masks(g.adj):
        yield VertexSet(n, mask)


def count_mis(g: Graph) -> int:
    """Count maximal independent sets by pivoted branching (no enumeration order)."""
    return _count_mis_rows(g.adj)


def _count_mis_rows(adj) -> int:
    closed = [row | 1 << v for v, row in enumerate(adj)]

    def rec(cand: int, excl: int) -> int:
        if not cand:
            return 0 if excl else 1
        # Some vertex of N[pivot] within cand joins every extension.
        pivot_space = cand | excl
        best, pivot_row = -1, 0
        while pivot_space:
            low = pivot_space & -pivot_space
            pivot_space ^= low
            row = closed[low.bit_length() - 1] & cand
            hits = bin(row).count("1")
            if best < 0 or hits < best:
                best, pivot_row = hits, row
                if hits <= 1:
                    break
        total = 0
        branch = pivot_row
        while branch:
            low = branch & -branch
            branch ^= low
            w = closed[low.bit_length() - 1]
            total += rec(cand & ~w, excl & ~w)
            cand &= ~low
            excl |= low
        return total

    return rec((1 << len(adj)) - 1, 0)


def conflict_rows(g: Graph) -> tuple[int, ...]:
    """Rows of L(G)^2 computed directly: edges whose endpoints meet N[{u, v}]."""
    edges = g.edges()
    incident = [0] * g.n
    for k, (u, v) in enumerate(edges):
        incident[u] |= 1 << k
        incident[v] |= 1 << k
    adj = g.adj
    rows = []
    for k, (u, v) in enumerate(edges):
        row = 0
        for w in bits(adj[u] | adj[v] | 1 << u | 1 << v):
            row |= incident[w]
        rows.append(row & ~(1 << k))
    return tuple(rows)


def count_mim(g: Graph) -> int:
    """Number of maximal induced matchings, counted without listing them."""
    return _count_mis_rows(conflict_rows(g))


class EnumerationStream:
    """Lazily pulled matchings with the wall-clock gap before each item recorded."""

    def __init__(self, source: Iterator[Matching]):
        self._source = source
        self._last: float | None = None
        self.timestamps: list[float] = []
        self.delays: list[float] = []

    def __iter__(self) -> EnumerationStream:
        return self

    def __next__(self) -> Matching:
        if self._last is None:
            self._last = time.perf_counter()
        item = next(self._source)
        now = time.perf_counter()
        self.delays.append(now - self._last)
        self.timestamps.append(now)
        self._last = now
        return item

    def delay_stats(self) -> dict[str, float | int]:
        if not self.delays:
            return {"count": 0, "max": 0.0, "median": 0.0}
        return {
            "count": len(self.delays),
            "max": max(self.delays),
            "median": statistics.median(self.delays),
        }


def enumerate_mim_cameron(g: Graph) -> EnumerationStream:
    """Maximal induced matchings of ``g`` via MIS enumeration on L(G)^2."""
    lm = line_graph(g)
    square = graph_square(lm.host)
    edge_of = lm.edge_of_vertex

    def pull() -> Iterator[Matching]:
        for mask in _mis_masks(square.adj):
            yield tuple(edge_of[k] for k in bits(mask))

    return EnumerationStream(pull())


def maximum_induced_matching(g: Graph, strategy: str = "stream") -> Matching:
    """A maximum induced matching; ties go to the lexicographically least.

    ``stream`` takes the maximum over the Cameron enumeration; ``branch``
    runs a direct branch and bound over edges.
    """
    if strategy == "stream":
        best: Matching | None = None
        for m in enumerate_mim_cameron(g):
            if best is None or len(m) > len(best) or (len(m) == len(best) and m < best):
                best = m
        return best if best is not None else ()
    if strategy == "branch":
        return _branch_and_bound(g)
    raise ValueError(f"unknown strategy {strategy!r}")


def _branch_and_bound(g: Graph) -> Matching:
    edges = g.edges()
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    ends = [1 << u | 1 << v for u, v in edges]
    reach = [closed[u] | closed[v] for u, v in edges]
    full = (1 << g.n) - 1
    best: list[int] = []
    chosen: list[int] = []

    # Depth-first in lexicographic order; only strict improvements replace
    # the incumbent, so the first witness of the optimum size is kept.
    def rec(start: int, blocked: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        free = bin(full & ~blocked).count("1")
        if len(chosen) + free // 2 <= len(best):
            return
        for k in range(start, len(edges)):
            if ends[k] & blocked:
                continue
            chosen.append(k)
            rec(k + 1, blocked | reach[k])
            chosen.pop()

    rec(0, 0)
    return tuple(edges[k] for k in best)
