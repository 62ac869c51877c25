"""Simple undirected graphs on vertices 0..n-1 backed by adjacency bitsets."""

from __future__ import annotations

from typing import Iterable, Iterator, Union


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable bitset of vertices drawn from ``range(n)``."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside range({n})")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range({n})")
            mask |= 1 << v
        return cls(n, mask)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _other(self, other: VertexSet) -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("vertex sets belong to graphs of different order")
        return other.mask

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask | self._other(other))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & self._other(other))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & ~self._other(other))

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {sorted(self)})"


Vertices = Union[VertexSet, Iterable[int]]


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the neighbourhood of ``v`` as an int bitmask. Edges are
    reported canonically as ``(low, high)`` pairs in lexicographic order.
    """

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range({n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.edge_count = sum(bin(a).count("1") for a in adj) // 2

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        """Build from neighbour masks; symmetry and loop-freeness are checked."""
        adj = tuple(adj)
        n = len(adj)
        for u, a in enumerate(adj):
            if a >> n or a >> u & 1:
                raise ValueError(f"bad neighbour mask for vertex {u}")
            for v in bits(a):
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls._trusted(adj)

    @classmethod
    def _trusted(cls, adj: tuple[int, ...], edge_count: int | None = None) -> Graph:
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        if edge_count is None:
            edge_count = sum(bin(a).count("1") for a in adj) // 2
        g.edge_count = edge_count
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.n, (1 << self.n) - 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> u + 1 << u + 1)]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def closed_neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v] | 1 << v)

    def mask_of(self, vertices: Vertices) -> int:
        """Convert a vertex collection into a bitmask, validating the range."""
        if isinstance(vertices, VertexSet):
            if vertices.n != self.n:
                raise ValueError("vertex set belongs to a graph of different order")
            return vertices.mask
        return VertexSet.of(self.n, vertices).mask

    def closed_neighborhood(self, a: Vertices) -> VertexSet:
        """Return N[A], the union of closed neighbourhoods of the vertices of ``a``."""
        mask = self.mask_of(a)
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return VertexSet(self.n, out)

    def open_neighborhood(self, a: Vertices) -> VertexSet:
        """Return N(A) = N[A] minus A."""
        mask = self.mask_of(a)
        closed = self.closed_neighborhood(VertexSet(self.n, mask))
        return VertexSet(self.n, closed.mask & ~mask)

    def delete_vertices(self, a: Vertices) -> tuple[Graph, list[int]]:
        """Induced subgraph on the remaining vertices, relabelled in ascending order.

        Returns the graph and ``label_map`` with ``label_map[new] == old``.
        """
        removed = self.mask_of(a)
        keep = [v for v in range(self.n) if not removed >> v & 1]
        index = {old: new for new, old in enumerate(keep)}
        adj = []
        for old in keep:
            row = 0
            for w in bits(self.adj[old] & ~removed):
                row |= 1 << index[w]
            adj.append(row)
        return Graph._trusted(tuple(adj)), keep

    def induced_subgraph(self, a: Vertices) -> tuple[Graph, list[int]]:
        return self.delete_vertices(self.vertices - VertexSet(self.n, self.mask_of(a)))

    def is_triangle_free(self) -> bool:
        adj = self.adj
        for u in range(self.n):
            row = adj[u]
            for v in bits(row >> u + 1 << u + 1):
                if row & adj[v]:
                    return False
        return True

    def twin_partition(self) -> TwinPartition:
        """Group vertices by identical open neighbourhoods."""
        groups: dict[int, int] = {}
        for v, row in enumerate(self.adj):
            groups[row] = groups.get(row, 0) | 1 << v
        blocks = sorted(groups.values(), key=lambda m: m & -m)
        return TwinPartition(tuple(VertexSet(self.n, b) for b in blocks))

    def twin_set(self, u: int) -> VertexSet:
        row = self.adj[u]
        return VertexSet(self.n, sum(1 << w for w, r in enumerate(self.adj) if r == row))

    def components(self) -> list[VertexSet]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(VertexSet(self.n, comp))
        return out

    # -- conversions -------------------------------------------------------

    def to_graph6(self) -> str:
        from .graph6 import to_graph6

        return to_graph6(self)

    def with_edges(self, removed: Iterable[tuple[int, int]] = (),
                   added: Iterable[tuple[int, int]] = ()) -> Graph:
        adj = list(self.adj)
        for u, v in removed:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in added:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._trusted(tuple(adj))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class TwinPartition:
    """Partition of V(G) into false-twin classes; ``tau`` is the class count."""

    __slots__ = ("blocks",)

    def __init__(self, blocks: tuple[VertexSet, ...]):
        self.blocks = blocks

    @property
    def tau(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> VertexSet:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return f"TwinPartition({[sorted(b) for b in self.blocks]})"


def closed_neighborhood(g: Graph, a: Vertices) -> VertexSet:
    return g.closed_neighborhood(a)


def open_neighborhood(g: Graph, a: Vertices) -> VertexSet:
    return g.open_neighborhood(a)


def delete_vertices(g: Graph, a: Vertices) -> tuple[Graph, list[int]]:
    return g.delete_vertices(a)


def is_triangle_free(g: Graph) -> bool:
    return g.is_triangle_free()


def twin_partition(g: Graph) -> TwinPartition:
    return g.twin_partition()
