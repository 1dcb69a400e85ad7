"""Immutable bitmask graphs, graph6 I/O, and bipartite matching primitives.

Vertices are 0..n-1 and vertex sets are plain Python ints used as bitmasks,
which keeps every set operation a single machine-word-ish operation for the
graph sizes the exact solvers can handle (n <= 64).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GraphError(ValueError):
    """Base class for graph construction / precondition errors."""


class Graph6Error(GraphError):
    """Malformed or unsupported graph6 data."""


class NotBipartiteError(GraphError):
    """Raised when an odd cycle is found by the 2-coloring check."""


class IsolatedVertexError(GraphError):
    """Raised when an edge cover is requested for a graph with isolated vertices."""


MAX_VERTICES = 64


def bits(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    """Bitmask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex neighbor bitmasks."""

    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & (1 << v):
                raise GraphError(f"loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"neighbor out of range at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] & (1 << v):
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return bool(self.adj[u] & (1 << v))

    def edges(self):
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1)
            for u in bits(higher):
                out.append((v, u + v + 1))
        return out

    def edge_count(self):
        return sum(self.degree(v) for v in range(self.n)) // 2

    def neighbors(self, v):
        return list(bits(self.adj[v]))


def graph_from_edges(n, edges):
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced_subgraph(g, vertex_mask):
    """Induced subgraph plus the list mapping new indices to original vertices."""
    keep = list(bits(vertex_mask))
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in bits(g.adj[v] & vertex_mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(keep), tuple(adj)), keep


# ---------------------------------------------------------------------------
# graph6 serialization (short form, n <= 62)


def parse_graph6(data):
    """Decode one short-form graph6 record (bytes or str)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise Graph6Error("empty graph6 record")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    head = data[0]
    if head == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= head <= 126:
        raise Graph6Error(f"header byte {head} outside 63..126")
    n = head - 63
    nbits = n * (n - 1) // 2
    body = data[1:]
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated graph6 bit field")
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 record")
    bitstream = 0
    for byte in body:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"body byte {byte} outside 63..126")
        bitstream = (bitstream << 6) | (byte - 63)
    pad = 6 * need - nbits
    bitstream >>= pad
    adj = [0] * n
    # Column order: x(0,1), x(0,2), x(1,2), x(0,3), ... with the first listed
    # bit arriving most significant in the stream.
    pos = nbits
    for col in range(1, n):
        for row in range(col):
            pos -= 1
            if (bitstream >> pos) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
    return Graph(n, tuple(adj))


def write_graph6(g):
    """Encode a graph as one short-form graph6 record (bytes)."""
    if g.n > 62:
        raise Graph6Error("short-form graph6 only supports n <= 62")
    nbits = g.n * (g.n - 1) // 2
    bitstream = 0
    for col in range(1, g.n):
        for row in range(col):
            bitstream = (bitstream << 1) | ((g.adj[row] >> col) & 1)
    need = (nbits + 5) // 6
    bitstream <<= 6 * need - nbits
    out = bytearray([63 + g.n])
    for i in range(need - 1, -1, -1):
        out.append(63 + ((bitstream >> (6 * i)) & 63))
    return bytes(out)


# ---------------------------------------------------------------------------
# structural predicates


def connected_components(g):
    """Component masks, ordered by smallest member."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen & (1 << start):
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g):
    return g.n <= 1 or len(connected_components(g)) == 1


def is_acyclic(g):
    return g.edge_count() == g.n - len(connected_components(g))


@dataclass(frozen=True)
class DegreeProfile:
    max_degree: int
    is_cubic: bool
    is_subcubic: bool


def classify_degrees(g):
    degs = [g.degree(v) for v in range(g.n)]
    dmax = max(degs, default=0)
    return DegreeProfile(
        max_degree=dmax,
        is_cubic=g.n > 0 and all(d == 3 for d in degs),
        is_subcubic=dmax <= 3,
    )


def claw_centers(g):
    """Mask of vertices with three pairwise nonadjacent neighbors."""
    centers = 0
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                centers |= 1 << v
                break
    return centers


def bipartition(g):
    """2-coloring as (side0_mask, side1_mask); raises on an odd cycle."""
    color = {}
    side = [0, 0]
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        side[0] |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if u in color:
                    if color[u] == color[v]:
                        raise NotBipartiteError(f"odd cycle through edge {v}-{u}")
                else:
                    color[u] = 1 - color[v]
                    side[color[u]] |= 1 << u
                    queue.append(u)
    return side[0], side[1]


# ---------------------------------------------------------------------------
# bipartite matching and edge cover


def maximum_matching_bipartite(g):
    """Maximum matching of a bipartite graph via augmenting paths.

    Returns a frozenset of (u, v) edges with u < v.
    """
    left, _right = bipartition(g)
    match = [-1] * g.n  # partner or -1

    def try_augment(v, visited):
        for u in bits(g.adj[v]):
            if visited & (1 << u):
                continue
            visited |= 1 << u
            if match[u] == -1:
                match[u] = v
                match[v] = u
                return True, visited
            ok, visited = try_augment(match[u], visited)
            if ok:
                match[u] = v
                match[v] = u
                return True, visited
        return False, visited

    for v in bits(left):
        if match[v] == -1:
            try_augment(v, 0)
    out = set()
    for v in range(g.n):
        if match[v] > v:
            out.add((v, match[v]))
    return frozenset(out)


def minimum_edge_cover(g):
    """Minimum edge cover of a bipartite graph without isolated vertices.

    Gallai completion: a maximum matching plus, for every unmatched vertex,
    its lowest-index incident edge. The size is n - |matching|.
    """
    for v in range(g.n):
        if g.adj[v] == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated")
    matching = maximum_matching_bipartite(g)
    covered = 0
    for u, v in matching:
        covered |= (1 << u) | (1 << v)
    cover = set(matching)
    for v in range(g.n):
        if not covered & (1 << v):
            u = next(bits(g.adj[v]))
            cover.add((min(u, v), max(u, v)))
    return frozenset(cover)


# ---------------------------------------------------------------------------
# small named graphs (test and demo fodder)


def path_graph(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return graph_from_edges(n, edges)


def complete_graph(n):
    return graph_from_edges(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a, b):
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves):
    """K_{1,leaves} with the center at vertex 0."""
    return graph_from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def prism_graph():
    """K3 x K2 (the triangular prism)."""
    return graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


def disjoint_union(g, h):
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return graph_from_edges(g.n + h.n, edges)
