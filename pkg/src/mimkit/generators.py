"""Named graph families, exhaustive labelled enumeration, and random graphs."""

from __future__ import annotations

import random
from typing import Callable, Iterator, Sequence

from .graph import Graph

MAX_EXHAUSTIVE_ORDER = 7


def _positive(name: str, *values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v <= 0:
            raise ValueError(f"{name}: parameters must be positive integers, got {values}")


def complete(k: int) -> Graph:
    _positive("complete", k)
    return Graph(k, [(i, j) for j in range(k) for i in range(j)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides ``0..a-1`` and ``a..a+b-1``."""
    _positive("complete_bipartite", a, b)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    _positive("path", k)
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    _positive("cycle", k)
    if k < 3:
        raise ValueError(f"cycle: need at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k}: centre 0 joined to leaves ``1..k``."""
    _positive("star", k)
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def empty(k: int) -> Graph:
    _positive("empty", k)
    return Graph(k)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Lay the parts out in consecutive vertex blocks, in the given order."""
    if not graphs:
        raise ValueError("disjoint_union: need at least one graph")
    adj: list[int] = []
    for g in graphs:
        offset = len(adj)
        adj.extend(row << offset for row in g.adj)
    return Graph._trusted(tuple(adj))


def moon_moser(p: int) -> Graph:
    """``p`` disjoint triangles."""
    _positive("moon_moser", p)
    return disjoint_union([complete(3)] * p)


def extremal_mim(p: int) -> Graph:
    """``p`` disjoint copies of K_{3,3}."""
    _positive("extremal_mim", p)
    return disjoint_union([complete_bipartite(3, 3)] * p)


def gupta(p: int) -> Graph:
    """``p`` disjoint copies of K_5."""
    _positive("gupta", p)
    return disjoint_union([complete(5)] * p)


def perfect_matching(p: int) -> Graph:
    """1-regular graph: ``p`` disjoint edges."""
    _positive("perfect_matching", p)
    return disjoint_union([complete(2)] * p)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path,
    "cycle": cycle,
    "star": star,
    "empty": empty,
    "moon_moser": moon_moser,
    "extremal_mim": extremal_mim,
    "gupta": gupta,
    "perfect_matching": perfect_matching,
    "petersen": petersen,
}


def generate(family: str, *params) -> Graph:
    """Build a named family, e.g. ``generate("extremal_mim", 2)``.

    ``disjoint_union`` takes graphs as its parameters.
    """
    if family == "disjoint_union":
        return disjoint_union(list(params))
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(*params)


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order; bit ``k`` of an edge mask is pair ``k``."""
    return [(i, j) for j in range(n) for i in range(j)]


def graph_from_pair_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._trusted(tuple(adj))


def exhaustive_adjacency(n: int) -> Iterator[tuple[int, ...]]:
    """Adjacency rows of every labelled graph on ``n`` vertices, by edge-mask counter.

    The last column's pairs are the high bits of the mask, so each graph is
    a graph on ``n - 1`` vertices (low bits) plus the neighbourhood of the
    new vertex ``n - 1``.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}")
    if n == 1:
        yield (0,)
        return
    sub = list(exhaustive_adjacency(n - 1))
    last = n - 1
    for col in range(1 << last):
        lift = tuple((col >> i & 1) << last for i in range(last))
        for rows in sub:
            yield tuple([r | b for r, b in zip(rows, lift)] + [col])


def exhaustive_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices exactly once.

    The k-th graph yielded has edge mask k over :func:`pair_order`.
    """
    for adj in exhaustive_adjacency(n):
        yield Graph._trusted(adj)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) using the supplied generator."""
    return Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])
