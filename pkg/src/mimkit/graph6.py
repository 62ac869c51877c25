"""graph6 encoding for graphs of at most 62 vertices.

The body packs the upper triangle of the adjacency matrix column by column
(``(0,1), (0,2), (1,2), (0,3), ...``) into 6-bit big-endian groups, each
offset by 63 and padded with zero bits.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def to_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise ValueError(f"graph6 codec supports at most {MAX_ORDER} vertices, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << 6 - nbits) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)
    first = ord(line[0])
    if first == 126:
        raise Graph6Error(f"multi-byte order field unsupported (n > {MAX_ORDER})", base)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid order byte {line[0]!r}", base)
    n = first - 63
    need = n * (n - 1) // 2
    nchars = (need + 5) // 6
    body = line[1:]
    for k, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + 1 + k)
    if len(body) < nchars:
        raise Graph6Error(f"truncated body: expected {nchars} bytes, got {len(body)}",
                          base + 1 + len(body))
    if len(body) > nchars:
        raise Graph6Error(f"trailing data after {nchars} body bytes", base + 1 + nchars)

    adj = [0] * n
    i, j = 0, 1
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if j >= n:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + 1 + k)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(tuple(adj))


def read_graph6(lines: Iterable[str] | IO[str]) -> Iterator[tuple[int, str, Graph | Graph6Error]]:
    """Parse a graph6 stream, yielding ``(line_number, raw, graph_or_error)``.

    Blank lines and a leading header line are skipped; malformed lines yield
    the error instead of raising so callers can report and continue.
    """
    for lineno, raw in enumerate(lines, 1):
        raw = raw.strip()
        if not raw or raw == HEADER:
            continue
        try:
            yield lineno, raw, from_graph6(raw)
        except Graph6Error as exc:
            yield lineno, raw, exc
