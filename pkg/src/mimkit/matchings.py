"""Induced matchings: predicates, a backtracking oracle, and constrained counts.

A matching is a tuple of ``(low, high)`` edges in ascending order. The
oracle works directly on vertices: an edge may join the matching only if
neither endpoint lies in the closed neighbourhood of the vertices already
covered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, Vertices, bits

Edge = tuple[int, int]
Matching = tuple[Edge, ...]


def as_matching(edges: Iterable[Edge]) -> Matching:
    """Canonical form: each edge as (low, high), edges sorted."""
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def covered_mask(m: Iterable[Edge]) -> int:
    mask = 0
    for u, v in m:
        mask |= 1 << u | 1 << v
    return mask


def format_matching(m: Matching) -> str:
    return " ".join(f"{u}-{v}" for u, v in m)


def parse_matching(text: str) -> Matching:
    edges = []
    for token in text.split():
        u, sep, v = token.partition("-")
        if not sep:
            raise ValueError(f"bad edge token {token!r}")
        edges.append((int(u), int(v)))
    return as_matching(edges)


def is_induced_matching(g: Graph, m: Iterable[Edge]) -> bool:
    """True iff ``m`` is a matching and no edge of ``g`` joins two of its edges."""
    m = list(m)
    for u, v in m:
        if not g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not in the graph")
    seen = 0
    for u, v in m:
        pair = 1 << u | 1 << v
        if seen & pair:
            return False
        seen |= pair
    for u, v in m:
        others = seen & ~(1 << u | 1 << v)
        if (g.adj[u] | g.adj[v]) & others:
            return False
    return True


def is_maximal_induced_matching(g: Graph, m: Iterable[Edge]) -> bool:
    m = as_matching(m)
    if not is_induced_matching(g, m):
        raise ValueError("not an induced matching")
    present = set(m)
    return not any(is_induced_matching(g, m + (e,)) for e in g.edges() if e not in present)


class _Backtracker:
    """Shared state for walking induced matchings in lexicographic order."""

    def __init__(self, g: Graph):
        self.edges = g.edges()
        closed = [row | 1 << v for v, row in enumerate(g.adj)]
        self.ends = [1 << u | 1 << v for u, v in self.edges]
        self.reach = [closed[u] | closed[v] for u, v in self.edges]

    def eligible(self, blocked: int, lo: int = 0, hi: int | None = None) -> list[int]:
        ends = self.ends
        return [k for k in range(lo, len(ends) if hi is None else hi) if not ends[k] & blocked]

    def doomed(self, start: int, blocked: int) -> bool:
        """A skipped edge is still addable but nothing after ``start`` can block it."""
        later = 0
        for k in self.eligible(blocked, start):
            later |= self.reach[k]
        return any(not self.ends[k] & later for k in self.eligible(blocked, 0, start))

    def walk(self) -> Iterator[list[int]]:
        chosen: list[int] = []

        def rec(start: int, blocked: int) -> Iterator[list[int]]:
            if not self.eligible(blocked):
                yield chosen
                return
            if self.doomed(start, blocked):
                return
            for k in self.eligible(blocked, start):
                chosen.append(k)
                yield from rec(k + 1, blocked | self.reach[k])
                chosen.pop()

        return rec(0, 0)


def enumerate_mim_oracle(g: Graph) -> Iterator[Matching]:
    """Every maximal induced matching of ``g`` once, in lexicographic order.

    Edgeless graphs yield the empty matching.
    """
    bt = _Backtracker(g)
    edges = bt.edges
    for chosen in bt.walk():
        yield tuple(edges[k] for k in chosen)


def count_mim_oracle(g: Graph) -> int:
    return sum(1 for _ in _Backtracker(g).walk())


@dataclass(frozen=True)
class ConstraintPair:
    """Vertices a matching must leave uncovered (``avoid``) and must cover (``cover``)."""

    avoid: frozenset[int] = frozenset()
    cover: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "avoid", frozenset(self.avoid))
        object.__setattr__(self, "cover", frozenset(self.cover))
        if self.avoid & self.cover:
            raise ValueError(f"avoid and cover overlap on {sorted(self.avoid & self.cover)}")


def _masks(g: Graph, avoid: Vertices, cover: Vertices) -> tuple[int, int]:
    x, y = g.mask_of(avoid), g.mask_of(cover)
    if x & y:
        raise ValueError(f"avoid and cover overlap on {list(bits(x & y))}")
    return x, y


def matchings_constrained(g: Graph, avoid: Vertices = (), cover: Vertices = ()) -> Iterator[Matching]:
    """Maximal induced matchings of ``g`` covering nothing in ``avoid`` and all of ``cover``.

    Maximality is always judged in ``g`` itself.
    """
    x, y = _masks(g, avoid, cover)
    for m in enumerate_mim_oracle(g):
        c = covered_mask(m)
        if not c & x and c & y == y:
            yield m


def count_mim_constrained(g: Graph, c: ConstraintPair) -> int:
    return sum(1 for _ in matchings_constrained(g, c.avoid, c.cover))


def partition_by_pair(g: Graph, u: int, v: int) -> tuple[int, int, int, int]:
    """Sizes of M({v},{u}), M({u},{v}), M({},{u,v}), M({u,v},{}).

    The four classes partition the maximal induced matchings of ``g``.
    """
    if u == v:
        raise ValueError("u and v must differ")
    bu, bv = 1 << u, 1 << v
    counts = [0, 0, 0, 0]
    for m in enumerate_mim_oracle(g):
        c = covered_mask(m)
        has_u, has_v = bool(c & bu), bool(c & bv)
        if has_u and not has_v:
            counts[0] += 1
        elif has_v and not has_u:
            counts[1] += 1
        elif has_u:
            counts[2] += 1
        else:
            counts[3] += 1
    return counts[0], counts[1], counts[2], counts[3]
