"""Twin retargeting: rewiring a vertex (or its whole twin class) to copy another's neighbourhood.

The check functions evaluate the counting and structural properties of
these operations on concrete graphs, using the oracle for every count.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .graph import Graph, bits
from .graph6 import to_graph6
from .matchings import Edge, count_mim_oracle, covered_mask, enumerate_mim_oracle


@dataclass(frozen=True)
class RetargetResult:
    graph: Graph
    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]


def _check_pair(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices ({u}, {v}) out of range({g.n})")
    if u == v:
        raise ValueError("retargeting needs two distinct vertices")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _retarget(g: Graph, movers: int, u: int, v: int) -> RetargetResult:
    drop = g.adj[u] & ~g.adj[v]
    gain = g.adj[v] & ~g.adj[u]
    removed = sorted(_edge(w, x) for w in bits(movers) for x in bits(drop))
    added = sorted(_edge(w, y) for w in bits(movers) for y in bits(gain))
    return RetargetResult(g.with_edges(removed, added), tuple(removed), tuple(added))


def retarget_vertex(g: Graph, u: int, v: int) -> RetargetResult:
    """Make ``u`` a twin of the non-adjacent vertex ``v``; only edges at ``u`` change."""
    _check_pair(g, u, v)
    return _retarget(g, 1 << u, u, v)


def retarget_twin_set(g: Graph, u: int, v: int) -> RetargetResult:
    """Make every twin of ``u`` (``u`` included) a twin of ``v`` in one rewrite."""
    _check_pair(g, u, v)
    return _retarget(g, g.twin_set(u).mask, u, v)


def retarget_twin_set_iterated(g: Graph, u: int, v: int) -> RetargetResult:
    """Same target as :func:`retarget_twin_set`, one vertex at a time."""
    _check_pair(g, u, v)
    removed: list[Edge] = []
    added: list[Edge] = []
    h = g
    for w in g.twin_set(u):
        if w == v:
            continue
        step = retarget_vertex(h, w, v)
        h = step.graph
        removed += step.removed
        added += step.added
    return RetargetResult(h, tuple(sorted(removed)), tuple(sorted(added)))


def retarget_adjacency(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Bulk twin-set retarget on raw neighbour masks (no validation)."""
    row_u, row_v = adj[u], adj[v]
    movers = 0
    for w, row in enumerate(adj):
        if row == row_u:
            movers |= 1 << w
    drop = row_u & ~row_v
    gain = row_v & ~row_u
    out = []
    for w, row in enumerate(adj):
        if movers >> w & 1:
            row = (row & ~drop) | gain
        else:
            if drop >> w & 1:
                row &= ~movers
            if gain >> w & 1:
                row |= movers
        out.append(row)
    return tuple(out)


@dataclass
class LemmaReport:
    """Outcome of one property check on ``(graph, u, v)``.

    ``holds`` is None when the check's hypothesis is not met.
    """

    lemma: str
    graph6: str
    pair: tuple[int, int]
    applicable: bool
    holds: bool | None
    counts: dict[str, int] = field(default_factory=dict)
    reason: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def covers_both(g: Graph, u: int, v: int) -> bool:
    both = 1 << u | 1 << v
    return any(covered_mask(m) & both == both for m in enumerate_mim_oracle(g))


def _disjunction(lemma: str, g: Graph, u: int, v: int, transform, counter, applicable) -> LemmaReport:
    g6 = to_graph6(g)
    if u == v or g.has_edge(u, v):
        return LemmaReport(lemma, g6, (u, v), False, None, reason="u and v must be distinct and non-adjacent")
    if applicable is None:
        applicable = not covers_both(g, u, v)
    if not applicable:
        return LemmaReport(lemma, g6, (u, v), False, None,
                           reason="some maximal induced matching covers both u and v")
    base = counter(g)
    forward = counter(transform(g, u, v).graph)
    backward = counter(transform(g, v, u).graph)
    return LemmaReport(lemma, g6, (u, v), True, forward >= base or backward >= base,
                       {"base": base, "forward": forward, "backward": backward})


def check_lemma2(g: Graph, u: int, v: int, counter=count_mim_oracle,
                 applicable: bool | None = None) -> LemmaReport:
    """If no maximal induced matching covers u and v, one of G_{u->v}, G_{v->u} has at least as many.

    ``applicable`` skips the covering test when the caller has already done it.
    """
    return _disjunction("lemma2", g, u, v, retarget_vertex, counter, applicable)


def check_lemma3(g: Graph, u: int, v: int, counter=count_mim_oracle,
                 applicable: bool | None = None) -> LemmaReport:
    """Twin-set version of :func:`check_lemma2`."""
    return _disjunction("lemma3", g, u, v, retarget_twin_set, counter, applicable)


def check_lemma4(g: Graph, u: int, v: int) -> LemmaReport:
    """Twin-set retargeting keeps a triangle-free graph triangle-free."""
    g6 = to_graph6(g)
    if u == v or g.has_edge(u, v) or not g.is_triangle_free():
        return LemmaReport("lemma4", g6, (u, v), False, None,
                           reason="needs a triangle-free graph and distinct non-adjacent u, v")
    return LemmaReport("lemma4", g6, (u, v), True, retarget_twin_set(g, u, v).graph.is_triangle_free())


def check_lemma5(g: Graph, u: int, v: int) -> LemmaReport:
    """Twin-set retargeting of non-twins strictly lowers the number of twin classes."""
    g6 = to_graph6(g)
    if (u == v or g.has_edge(u, v) or not g.is_triangle_free()
            or g.adj[u] == g.adj[v]):
        return LemmaReport("lemma5", g6, (u, v), False, None,
                           reason="needs a triangle-free graph and non-adjacent non-twins u, v")
    before = g.twin_partition().tau
    after = retarget_twin_set(g, u, v).graph.twin_partition().tau
    return LemmaReport("lemma5", g6, (u, v), True, after < before, {"tau_before": before, "tau_after": after})
