"""Induced-subgraph detection, chordality, and girth.

The named patterns are the triangle ``c3``, the hexagon ``c6``, and two
chorded hexagons: ``h1`` adds one short chord (between two cycle vertices
at distance two), ``h2`` adds two short chords on opposite sides. A graph
is *free* of a pattern list when none of them embeds as an induced
subgraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, bit_indices

_HEX = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-vertex -> host-vertex preserving adjacency and
    non-adjacency. ``mapping[i]`` is the image of pattern vertex ``i``."""

    pattern: str
    mapping: tuple[int, ...]


C3 = Pattern("c3", Graph(3, [(0, 1), (1, 2), (2, 0)]))
C6 = Pattern("c6", Graph(6, _HEX))
H1 = Pattern("h1", Graph(6, _HEX + [(1, 5)]))
H2 = Pattern("h2", Graph(6, _HEX + [(1, 5), (2, 4)]))

PATTERNS: dict[str, Pattern] = {p.name: p for p in (C3, C6, H1, H2)}

# Default eligibility patterns, in the order witnesses are searched.
ELIGIBILITY_PATTERNS = (C6, H1, H2)


def pattern_by_name(name: str) -> Pattern:
    try:
        return PATTERNS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}; expected one of {sorted(PATTERNS)}") from None


def find_induced(g: Graph, pattern: Pattern) -> Embedding | None:
    """Search for an induced embedding of ``pattern`` in ``g``.

    Backtracks over pattern vertices in id order, trying host candidates
    in ascending id, so a hit is the lexicographically least image tuple.
    Candidates are pruned by degree and by adjacency/non-adjacency against
    all previously mapped vertices.
    """
    p = pattern.graph
    k = p.n
    if k > g.n:
        return None
    pdeg = [p.degree(i) for i in range(k)]
    gdeg = [m.bit_count() for m in g.adj]
    # per slot: earlier pattern neighbors and non-neighbors
    before_adj = [[j for j in range(i) if p.has_edge(i, j)] for i in range(k)]
    before_non = [[j for j in range(i) if not p.has_edge(i, j)] for i in range(k)]
    gadj = g.adj
    full = g.full

    mapping: list[int] = []
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        cand = full & ~used
        for j in before_adj[i]:
            cand &= gadj[mapping[j]]
        for j in before_non[i]:
            cand &= ~gadj[mapping[j]]
        need = pdeg[i]
        for u in bit_indices(cand):
            if gdeg[u] < need:
                continue
            mapping.append(u)
            used |= 1 << u
            if extend(i + 1):
                return True
            used ^= 1 << u
            mapping.pop()
        return False

    if extend(0):
        return Embedding(pattern.name, tuple(mapping))
    return None


def is_free(g: Graph, patterns: tuple[Pattern, ...] = ELIGIBILITY_PATTERNS) -> tuple[bool, Embedding | None]:
    """(True, None) when no pattern embeds induced, else (False, first witness)."""
    for p in patterns:
        emb = find_induced(g, p)
        if emb is not None:
            return False, emb
    return True, None


class _PartClass:
    __slots__ = ("members", "prev", "next")

    def __init__(self, members: set[int]):
        self.members = members
        self.prev: "_PartClass | None" = None
        self.next: "_PartClass | None" = None


def _lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order via partition refinement.

    Unvisited vertices sit in an ordered list of classes; each pivot's
    unvisited neighbors split off in front of their class. Ties break to
    the least vertex id, so the order is deterministic.
    """
    n = g.n
    order: list[int] = []
    if n == 0:
        return order
    sentinel = _PartClass(set())
    first = _PartClass(set(range(n)))
    sentinel.next = first
    first.prev = sentinel
    node_of: list[_PartClass | None] = [first] * n

    def unlink(node: _PartClass) -> None:
        node.prev.next = node.next
        if node.next is not None:
            node.next.prev = node.prev

    for _ in range(n):
        head = sentinel.next
        v = min(head.members)
        head.members.discard(v)
        node_of[v] = None
        order.append(v)
        if not head.members:
            unlink(head)
        groups: dict[int, tuple[_PartClass, set[int]]] = {}
        for w in bit_indices(g.adj[v]):
            nd = node_of[w]
            if nd is None:
                continue
            entry = groups.get(id(nd))
            if entry is None:
                groups[id(nd)] = (nd, {w})
            else:
                entry[1].add(w)
        for nd, grp in groups.values():
            nd.members -= grp
            moved = _PartClass(grp)
            moved.prev = nd.prev
            moved.next = nd
            nd.prev.next = moved
            nd.prev = moved
            for w in grp:
                node_of[w] = moved
            if not nd.members:
                unlink(nd)
    return order


def is_chordal(g: Graph) -> bool:
    """Perfect-elimination test on the reversed lexicographic BFS order."""
    n = g.n
    if n <= 2:
        return True
    order = _lexbfs_order(g)
    elim = order[::-1]
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    later_mask = [0] * n  # neighbors of v eliminated after v
    seen = 0
    for v in reversed(elim):
        later_mask[v] = g.adj[v] & seen
        seen |= 1 << v
    for v in elim:
        later = later_mask[v]
        if later == 0:
            continue
        u = min(bit_indices(later), key=lambda w: pos[w])
        rest = later & ~(1 << u)
        if rest & ~g.adj[u]:
            return False
    return True


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        # cycles discoverable while expanding level d have length >= 2d
        while frontier and 2 * dist[frontier[0]] < best:
            nxt = []
            for u in frontier:
                du = dist[u]
                for w in bit_indices(adj[u]):
                    if w not in dist:
                        dist[w] = du + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cycle = du + dist[w] + 1
                        if cycle < best:
                            best = cycle
            frontier = nxt
        if best == 3:
            break
    return best
