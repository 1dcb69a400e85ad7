"""Vertex replacement gadgets, 3-1 trees, and the tight cubic family.

Replacements delete a vertex and attach a fixed gadget to its former
neighbors, matching the neighbors in ascending index order to the gadget's
attachment points.  Every construction returns a GadgetMap recording the
vertex correspondence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import BoundReport, minimum_path_cover
from .forcing import ForcingRecord, _chains_from_steps, zero_forcing_number
from .graphs import (Graph, GraphError, bits, classify_degrees, graph_from_edges,
                     is_acyclic, is_connected, mask_of)


@dataclass(frozen=True)
class GadgetMap:
    source: Graph
    result: Graph
    replaced: tuple  # replaced source vertices
    vertex_map: dict  # surviving source vertex -> result vertex
    gadget_vertices: dict  # replaced vertex -> {label: result vertex}


@dataclass(frozen=True)
class ThreeOneTree:
    tree: Graph
    leaves: int
    internal: int


def as_31_tree(g):
    """Validate that g is a tree with every degree in {1, 3}."""
    if not is_acyclic(g) or not is_connected(g) or g.n < 2:
        raise GraphError("not a nontrivial tree")
    leaves = 0
    internal = 0
    for v in range(g.n):
        d = g.degree(v)
        if d == 1:
            leaves |= 1 << v
        elif d == 3:
            internal |= 1 << v
        else:
            raise GraphError(f"vertex {v} has degree {d}, expected 1 or 3")
    return ThreeOneTree(g, leaves, internal)


# ---------------------------------------------------------------------------
# single-vertex replacements

# Degree-1 gadget (seven vertices): K4-e whose degree-2 vertex is itself
# replaced by K4-e.  Attachment point is v'.
_DEG1_LABELS = ("v'", "a", "b", "c", "d", "e", "f")
_DEG1_EDGES = [("v'", "a"), ("v'", "b"), ("a", "b"), ("a", "e"), ("b", "f"),
               ("c", "e"), ("c", "d"), ("f", "d"), ("c", "f"), ("e", "d")]
_DEG1_ATTACH = ("v'",)

# Degree-2 gadget: K4-e on {v1, v2, a, b} with the missing edge v1-v2.
_DEG2_LABELS = ("v1", "v2", "a", "b")
_DEG2_EDGES = [("v1", "a"), ("v1", "b"), ("v2", "a"), ("v2", "b"), ("a", "b")]
_DEG2_ATTACH = ("v1", "v2")

# Degree-3 gadget: a triangle, one attachment per corner.
_DEG3_LABELS = ("v1", "v2", "v3")
_DEG3_EDGES = [("v1", "v2"), ("v2", "v3"), ("v1", "v3")]
_DEG3_ATTACH = ("v1", "v2", "v3")


def _replace_vertex(g, v, labels, internal_edges, attach):
    if g.degree(v) != len(attach):
        raise GraphError(
            f"vertex {v} has degree {g.degree(v)}, gadget expects {len(attach)}")
    survivors = [u for u in range(g.n) if u != v]
    vmap = {u: i for i, u in enumerate(survivors)}
    base = len(survivors)
    gpos = {lab: base + i for i, lab in enumerate(labels)}
    edges = [(vmap[a], vmap[b]) for a, b in g.edges() if v not in (a, b)]
    edges += [(gpos[a], gpos[b]) for a, b in internal_edges]
    for u, lab in zip(sorted(bits(g.adj[v])), attach):
        edges.append((vmap[u], gpos[lab]))
    result = graph_from_edges(base + len(labels), edges)
    return GadgetMap(g, result, (v,), vmap, {v: gpos})


def replace_deg1(g, v):
    """Replace a degree-1 vertex; alpha and Z both increase by exactly 2."""
    return _replace_vertex(g, v, _DEG1_LABELS, _DEG1_EDGES, _DEG1_ATTACH)


def replace_deg2(g, v):
    """Replace a degree-2 vertex with K4-e; alpha and Z both increase by 1."""
    return _replace_vertex(g, v, _DEG2_LABELS, _DEG2_EDGES, _DEG2_ATTACH)


def replace_claw_center(g, v):
    """Replace a degree-3 vertex with a triangle.

    Guarantees alpha(result) <= alpha(g) + 1 and Z(g) <= Z(result).
    """
    return _replace_vertex(g, v, _DEG3_LABELS, _DEG3_EDGES, _DEG3_ATTACH)


def cubify(g):
    """Repeatedly replace degree-1 and degree-2 vertices until cubic.

    Preserves alpha - Z exactly and keeps the graph connected.
    """
    if g.n < 2 or not is_connected(g) or not classify_degrees(g).is_subcubic:
        raise GraphError("cubify requires a connected subcubic graph on >= 2 vertices")
    current = g
    # original vertex -> current vertex, for vertices not yet replaced
    fwd = {v: v for v in range(g.n)}
    replaced = []
    while True:
        target = next((v for v in range(current.n) if current.degree(v) < 3), None)
        if target is None:
            break
        step = (replace_deg1 if current.degree(target) == 1 else replace_deg2)(
            current, target)
        for orig in list(fwd):
            if fwd[orig] == target:
                replaced.append(orig)
                del fwd[orig]
            else:
                fwd[orig] = step.vertex_map[fwd[orig]]
        current = step.result
    return GadgetMap(g, current, tuple(replaced), fwd, {})


# ---------------------------------------------------------------------------
# 3-1 trees


def _rooted_shape(g, v, parent):
    return "(" + "".join(sorted(_rooted_shape(g, u, v)
                                for u in bits(g.adj[v]) if u != parent)) + ")"


def tree_canonical_form(g):
    """Canonical string of a tree (rooted at its center), for isomorphism tests."""
    if g.n == 1:
        return "()"
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    while len(alive) > 2:
        drop = [v for v in alive if deg[v] <= 1]
        for v in drop:
            alive.discard(v)
            for u in bits(g.adj[v]):
                if u in alive:
                    deg[u] -= 1
    centers = sorted(alive)
    if len(centers) == 1:
        return _rooted_shape(g, centers[0], -1)
    c1, c2 = centers
    return "".join(sorted([_rooted_shape(g, c1, c2), _rooted_shape(g, c2, c1)]))


def generate_31_trees(n):
    """All pairwise non-isomorphic 3-1 trees on n vertices.

    Grown by leaf expansion (a leaf becomes a degree-3 vertex with two fresh
    leaves) from K_{1,3}, with canonical-form isomorphism rejection.
    """
    if n % 2 != 0 or n < 4:
        raise GraphError("3-1 trees require an even vertex count >= 4")
    current = [graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])]
    size = 4
    while size < n:
        seen = {}
        for t in current:
            for leaf in range(t.n):
                if t.degree(leaf) != 1:
                    continue
                edges = t.edges() + [(leaf, t.n), (leaf, t.n + 1)]
                bigger = graph_from_edges(t.n + 2, edges)
                seen.setdefault(tree_canonical_form(bigger), bigger)
        current = [seen[k] for k in sorted(seen)]
        size += 2
    return [as_31_tree(t) for t in current]


# ---------------------------------------------------------------------------
# the tight family G_T

# Leaf gadget: K4 with one subdivided edge; the subdivision vertex is the
# attachment point l'.
_LEAF_LABELS = ("l'", "a", "b", "c", "d")
_LEAF_EDGES = [("l'", "b"), ("b", "d"), ("a", "d"), ("c", "d"), ("a", "l'"),
               ("c", "a"), ("c", "b")]


def build_tight_graph(t):
    """G_T: every leaf of the 3-1 tree replaced by the subdivided-K4 gadget."""
    tree = t.tree
    internals = sorted(bits(t.internal))
    vmap = {v: i for i, v in enumerate(internals)}
    edges = [(vmap[a], vmap[b]) for a, b in tree.edges()
             if a in vmap and b in vmap]
    gadget_vertices = {}
    pos = len(internals)
    for leaf in sorted(bits(t.leaves)):
        gpos = {lab: pos + i for i, lab in enumerate(_LEAF_LABELS)}
        gadget_vertices[leaf] = gpos
        edges += [(gpos[a], gpos[b]) for a, b in _LEAF_EDGES]
        neighbor = next(bits(tree.adj[leaf]))
        edges.append((vmap[neighbor], gpos["l'"]))
        pos += len(_LEAF_LABELS)
    result = graph_from_edges(pos, edges)
    return GadgetMap(tree, result, tuple(sorted(bits(t.leaves))), vmap,
                     gadget_vertices)


def check_tight_family(t, deadline=None):
    """Verify Z(G_T) = Z(T) + n + 2 = alpha(G_T) + 1 for a 3-1 tree."""
    from .independence import maximum_independent_set

    z_tree = len(minimum_path_cover(t.tree))
    built = build_tight_graph(t)
    z, witness = zero_forcing_number(built.result, deadline)
    alpha = maximum_independent_set(built.result, deadline).alpha
    value = z_tree + t.tree.n + 2
    holds = z == value and value == alpha + 1
    return BoundReport("tight_family_equality", value, holds, witness)


# ---------------------------------------------------------------------------
# leaf forcing sets (every leaf in the set performs a force)


def leaf_forcing_zfset(g):
    """Minimum zero forcing set of a 3-1 tree on >= 5 vertices together with a
    replayable record in which every leaf of the set performs a force."""
    t = as_31_tree(g)
    if g.n < 5:
        raise GraphError("requires a 3-1 tree on at least 5 vertices")
    z, _ = zero_forcing_number(g)
    full = g.full_mask

    def ordering_with_leaf_forces(b):
        targets = b & t.leaves
        failed = set()

        def dfs(blue, leaves_forced, steps):
            if blue == full:
                return steps if leaves_forced == targets else None
            key = (blue, leaves_forced)
            if key in failed:
                return None
            for v in bits(blue):
                white = g.adj[v] & ~blue
                if white and white & (white - 1) == 0:
                    w = white.bit_length() - 1
                    forced = leaves_forced
                    if targets & (1 << v):
                        forced |= 1 << v
                    res = dfs(blue | white, forced, steps + [(v, w)])
                    if res is not None:
                        return res
            failed.add(key)
            return None

        return dfs(b, 0, [])

    for combo in itertools.combinations(range(g.n), z):
        b = mask_of(combo)
        steps = ordering_with_leaf_forces(b)
        if steps is not None:
            record = ForcingRecord(b, tuple(steps), _chains_from_steps(b, steps))
            return b, record
    raise GraphError(
        "no minimum zero forcing set with all member leaves forcing; "
        "this contradicts a proven property of 3-1 trees")
