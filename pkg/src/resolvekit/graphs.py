"""Finite simple graphs: construction, graph6 I/O, and exact distances.

Vertices are always 0-based indices.  Adjacency is kept as one bitmask
per vertex, which keeps BFS and the labeled-graph enumeration cheap.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6ParseError, NotConnectedError


def edge_pairs(q: int) -> list[tuple[int, int]]:
    """Upper-triangle vertex pairs in column (colex) order:
    (0,1),(0,2),(1,2),(0,3),...  This is the graph6 bit order and the
    bit order of labeled-graph edge masks."""
    return [(i, j) for j in range(1, q) for i in range(j)]


class Graph:
    """Immutable simple undirected graph on vertices ``0..q-1``."""

    __slots__ = ("q", "adj")

    def __init__(self, q: int, adj: tuple[int, ...]):
        self.q = q
        self.adj = adj

    @classmethod
    def from_edges(cls, q: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if q < 1:
            raise ValueError("graph needs at least one vertex")
        adj = [0] * q
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < q and 0 <= v < q):
                raise ValueError(f"edge ({u},{v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(q, tuple(adj))

    @classmethod
    def from_edge_mask(cls, q: int, mask: int) -> "Graph":
        adj = [0] * q
        bit = 1
        for j in range(1, q):
            for i in range(j):
                if mask & bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit <<= 1
        return cls(q, tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        bit = 1
        for j in range(1, self.q):
            for i in range(j):
                if self.adj[i] >> j & 1:
                    mask |= bit
                bit <<= 1
        return mask

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(1, self.q) for i in range(j) if self.adj[i] >> j & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_connected(self) -> bool:
        if self.q == 1:
            return True
        adj = self.adj
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= adj[v]
                f &= f - 1
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.q) - 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.q == other.q and self.adj == other.adj

    def __hash__(self):
        return hash((self.q, self.adj))

    def __repr__(self):
        return f"Graph(q={self.q}, edges={self.edges()})"


# -- graph6 ------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str | bytes) -> Graph:
    """Parse one graph6 record (single-byte size, so at most 62 vertices).

    The first byte holds the vertex count plus 63; the remaining bytes
    carry the upper triangle of the adjacency matrix in column order,
    six bits per byte, most significant bit first.
    """
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(_G6_HEADER.encode("ascii")):
        data = data[len(_G6_HEADER):]
    if not data:
        raise Graph6ParseError("empty graph6 record")
    if data[0] == 126:
        raise Graph6ParseError("multi-byte vertex counts (n > 62) not supported", 0)
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte} out of graph6 range [63,126]", off)
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 < need:
        raise Graph6ParseError(f"truncated record: need {need} edge bytes, got {len(data) - 1}")
    if len(data) - 1 > need:
        raise Graph6ParseError("trailing bytes after graph6 record", need + 1)
    adj = [0] * max(n, 1)
    pos = 0
    pairs = edge_pairs(n)
    for byte in data[1:]:
        val = byte - 63
        for shift in range(5, -1, -1):
            if pos >= nbits:
                break
            if val >> shift & 1:
                i, j = pairs[pos]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj[:n])) if n else Graph(1, (0,))


def write_graph6(g: Graph) -> str:
    """Encode a graph (at most 62 vertices) as a graph6 record."""
    if g.q > 62:
        raise ValueError("graph6 writer limited to 62 vertices")
    out = [g.q + 63]
    val = 0
    nbits = 0
    for i, j in edge_pairs(g.q):
        val = val << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(val + 63)
            val = nbits = 0
    if nbits:
        out.append((val << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    """Parse a stream of graph6 records, one per line.

    A ``>>graph6<<`` header is skipped, whether it stands alone on the
    first line or is glued to the first record.  Blank lines are ignored.
    """
    for line in lines:
        text = line.decode("ascii") if isinstance(line, bytes) else line
        text = text.strip()
        if text.startswith(_G6_HEADER):
            text = text[len(_G6_HEADER):].strip()
        if text:
            yield parse_graph6(text)


# -- named generators --------------------------------------------------


def complete(q: int) -> Graph:
    if q < 2:
        raise ValueError("complete graph needs q >= 2")
    full = (1 << q) - 1
    return Graph(q, tuple(full ^ (1 << v) for v in range(q)))


def path(q: int) -> Graph:
    if q < 2:
        raise ValueError("path needs q >= 2")
    return Graph.from_edges(q, [(i, i + 1) for i in range(q - 1)])


def cycle(q: int) -> Graph:
    if q < 3:
        raise ValueError("cycle needs q >= 3")
    return Graph.from_edges(q, [(i, (i + 1) % q) for i in range(q)])


def complete_bipartite(q1: int, q2: int) -> Graph:
    if q1 < 1 or q2 < 1 or q1 + q2 < 2:
        raise ValueError("complete bipartite needs nonempty parts")
    return Graph.from_edges(q1 + q2, [(a, q1 + b) for a in range(q1) for b in range(q2)])


def complete_minus_clique(q: int, k: int) -> Graph:
    """K_q with the edges inside the clique on vertices ``0..k-1`` removed,
    so the low-degree vertices come first."""
    if not 2 <= k < q:
        raise ValueError("need 2 <= k < q")
    edges = [(i, j) for j in range(1, q) for i in range(j) if not (i < k and j < k)]
    return Graph.from_edges(q, edges)


_FAMILIES = {
    "complete": lambda q: complete(q),
    "path": lambda q: path(q),
    "cycle": lambda q: cycle(q),
    "complete_bipartite": lambda q1, q2: complete_bipartite(q1, q2),
    "complete_minus_clique": lambda q, k: complete_minus_clique(q, k),
}


def generator(family: str, *params: int) -> Graph:
    """Dispatch on a family name; see ``_FAMILIES`` for the choices."""
    try:
        make = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}") from None
    return make(*params)


# -- distances ---------------------------------------------------------


class DistMatrix:
    """All-pairs shortest path lengths of a connected graph."""

    __slots__ = ("entries", "q", "diam")

    def __init__(self, entries: tuple[tuple[int, ...], ...]):
        self.entries = entries
        self.q = len(entries)
        self.diam = max(max(row) for row in entries)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __len__(self) -> int:
        return self.q

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, DistMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __repr__(self):
        return f"DistMatrix(q={self.q}, diam={self.diam})"


def distance_matrix(g: Graph) -> DistMatrix:
    """BFS from every vertex; raises NotConnectedError on disconnected
    input because every construction downstream assumes connectivity."""
    q = g.q
    adj = g.adj
    full = (1 << q) - 1
    rows = []
    for s in range(q):
        row = [0] * q
        seen = frontier = 1 << s
        d = 0
        while frontier:
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
            d += 1
        if seen != full:
            raise NotConnectedError("graph not connected")
        rows.append(tuple(row))
    return DistMatrix(tuple(rows))


def enumerate_connected_labeled(q: int) -> Iterator[Graph]:
    """Every labeled simple connected graph on ``q`` vertices, exactly
    once, in increasing edge-mask order.  Capped at q = 7 (2^21 masks);
    larger corpora come from external graph6 files."""
    if not 2 <= q <= 7:
        raise ValueError("labeled enumeration supports 2 <= q <= 7")
    pairs = edge_pairs(q)
    nbits = len(pairs)
    full = (1 << q) - 1
    for mask in range(1 << nbits):
        adj = [0] * q
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        if seen == full:
            yield Graph(q, tuple(adj))
