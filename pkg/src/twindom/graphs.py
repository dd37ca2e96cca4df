"""Immutable simple-graph representation, basic queries, and text formats.

Vertices are dense integer ids ``0..n-1``. Adjacency is stored as one
bitmask per vertex, so neighborhood intersection, union, and containment
tests are single integer operations regardless of degree. All analyses in
the package are pure functions over these immutable values, which makes
them safe to share across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

GRAPH6_MAX_N = 68719476735  # largest order representable in the 8-byte size header


class GraphParseError(ValueError):
    """Malformed graph text. Carries the offending line (1-based) when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple undirected graph.

    ``adj[v]`` is the open-neighborhood bitmask of ``v`` and ``closed[v]``
    additionally contains ``v`` itself. ``labels``, when present, holds one
    external display name per vertex and never takes part in equality.
    """

    __slots__ = ("n", "adj", "closed", "full", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init_from_masks(n, masks, labels)

    def _init_from_masks(self, n: int, masks: Sequence[int], labels: Sequence[str] | None) -> None:
        self.n = n
        self.adj = tuple(masks)
        self.closed = tuple(m | (1 << v) for v, m in enumerate(masks))
        self.full = (1 << n) - 1
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int], labels: Sequence[str] | None = None) -> "Graph":
        """Build from adjacency bitmasks already known to be symmetric and loop-free."""
        g = cls.__new__(cls)
        g._init_from_masks(n, masks, labels)
        return g

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> set[int]:
        return set(bit_indices(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ordered pairs (u, v) with u < v, ascending."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for off in bit_indices(higher):
                yield (u, u + 1 + off)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for graph of order {self.n}")

    def relabeled(self, labels: Sequence[str] | None) -> "Graph":
        return Graph.from_masks(self.n, self.adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class BasicStats(NamedTuple):
    min_degree: int
    max_degree: int
    edge_count: int
    component_count: int
    isolated_count: int


def open_neighborhood(g: Graph, v: int) -> set[int]:
    """Vertices adjacent to ``v``; never contains ``v``."""
    g.check_vertex(v)
    return set(bit_indices(g.adj[v]))


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """``v`` together with its neighbors."""
    g.check_vertex(v)
    return set(bit_indices(g.closed[v]))


def closed_neighborhood_of_set(g: Graph, s: Iterable[int]) -> set[int]:
    """Union of closed neighborhoods over ``s``; empty for empty ``s``."""
    m = 0
    for v in s:
        g.check_vertex(v)
        m |= g.closed[v]
    return set(bit_indices(m))


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by least member."""
    out = []
    remaining = g.full
    adj = g.adj
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def basic_stats(g: Graph) -> BasicStats:
    degs = [m.bit_count() for m in g.adj]
    return BasicStats(
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        edge_count=sum(degs) // 2,
        component_count=len(component_masks(g)),
        isolated_count=degs.count(0),
    )


# -- graph6 ---------------------------------------------------------------
#
# Standard 6-bit encoding: printable bytes 63..126, size header followed by
# the upper triangle of the adjacency matrix in column order, zero-padded
# to a multiple of six bits.


def _graph6_decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed by the size header)."""
    if not data:
        raise GraphParseError("empty graph6 string")
    if data[0] != 126:  # '~'
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise GraphParseError("truncated graph6 size header")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(data: bytes | str, line: int | None = None) -> Graph:
    """Decode one graph6-encoded graph."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"invalid graph6 byte {b!r} at offset {i}", line)
    try:
        n, start = _graph6_decode_size(data)
    except GraphParseError as e:
        raise GraphParseError(str(e), line) from None
    nbits = n * (n - 1) // 2
    body = data[start:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}", line
        )
    masks = [0] * n
    bit = 0
    for b in body:
        chunk = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                break
            if (chunk >> k) & 1:
                # column-order upper triangle: bit index -> pair (i, j), i < j
                j = _col_of(bit)
                i = bit - j * (j - 1) // 2
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit += 1
    return Graph.from_masks(n, masks)


def _col_of(bit: int) -> int:
    # smallest j with j*(j+1)/2 > bit
    j = int((2 * bit) ** 0.5)
    while j * (j - 1) // 2 > bit:
        j -= 1
    while (j + 1) * j // 2 <= bit:
        j += 1
    return j


def serialize_graph6(g: Graph) -> bytes:
    """Encode as graph6 (without trailing newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports at most {GRAPH6_MAX_N} vertices")
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        head = bytes([126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)])
    out = []
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return head + bytes(out)


def iter_graph6_lines(text: bytes | str) -> Iterator[Graph]:
    """Parse a stream with one graph6 string per line, skipping blank lines."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        yield parse_graph6(stripped, line=lineno)


# -- edge-list text -------------------------------------------------------


def parse_edgelist(text: bytes | str) -> Graph:
    """Parse the whitespace edge-list format.

    An optional first line ``n <count>`` fixes the vertex count. Every
    other nonblank line names one edge as two tokens. Tokens are integer
    ids when all of them parse as integers, otherwise labels mapped to ids
    in first-appearance order. Duplicate edges collapse; self-loops are
    rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows: list[tuple[int, str, str]] = []
    declared_n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks:
            continue
        if declared_n is None and not rows and len(toks) == 2 and toks[0] == "n":
            try:
                declared_n = int(toks[1])
            except ValueError:
                raise GraphParseError("header count is not an integer", lineno) from None
            if declared_n < 0:
                raise GraphParseError("header count is negative", lineno)
            continue
        if len(toks) != 2:
            raise GraphParseError(f"expected two tokens, got {len(toks)}", lineno)
        rows.append((lineno, toks[0], toks[1]))

    all_int = all(_is_int(a) and _is_int(b) for _, a, b in rows)
    labels: list[str] | None = None
    if all_int:
        ids = [(ln, int(a), int(b)) for ln, a, b in rows]
    else:
        index: dict[str, int] = {}
        ids = []
        for ln, a, b in rows:
            for tok in (a, b):
                if tok not in index:
                    index[tok] = len(index)
            ids.append((ln, index[a], index[b]))
        labels = list(index)

    if declared_n is not None:
        n = declared_n
    elif ids:
        n = 1 + max(max(u, v) for _, u, v in ids)
    else:
        n = 0
    if labels is not None and len(labels) < n:
        labels += [str(i) for i in range(len(labels), n)]

    masks = [0] * n
    for ln, u, v in ids:
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", ln)
        if u >= n or v >= n or u < 0 or v < 0:
            raise GraphParseError(f"vertex id {max(u, v)} outside 0..{n - 1}", ln)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_masks(n, masks, labels)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
        return True
    except ValueError:
        return False


def serialize_edgelist(g: Graph) -> bytes:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_graph(text: bytes | str, fmt: str = "graph6") -> Graph:
    """Parse one graph in the named format (``graph6`` or ``edgelist``)."""
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "graph6") -> bytes:
    """Serialize; inverse of :func:`parse_graph` on (n, edge set)."""
    if fmt == "graph6":
        return serialize_graph6(g)
    if fmt == "edgelist":
        return serialize_edgelist(g)
    raise ValueError(f"unknown graph format {fmt!r}")
