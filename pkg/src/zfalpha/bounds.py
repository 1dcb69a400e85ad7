"""Constructive machinery relating zero forcing, independence, and decycling.

Everything here either builds an explicit zero forcing set (and verifies it by
closure) or exhaustively searches for a decycling partition, so every reported
bound comes with a checkable witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .forcing import closure, is_zero_forcing_set, zero_forcing_number
from .graphs import (GraphError, bits, classify_degrees, connected_components,
                     induced_subgraph, is_acyclic, is_connected, mask_of,
                     minimum_edge_cover)
from .independence import is_independent, is_near_independent, maximum_independent_set


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    bound_value: int
    holds: bool
    witness: int  # forcing-set mask where applicable, else 0
    applicable: bool = True


@dataclass(frozen=True)
class DecyclingPartition:
    r_mask: int
    s_mask: int
    s_class: str  # independent | near_independent | other
    r_class: str  # tree | forest_2_components | other


@dataclass(frozen=True)
class EmbeddabilityReport:
    phi: int
    phi_witness: int
    max_genus: int
    upper_embeddable: bool
    one_face: bool
    two_face: bool


# ---------------------------------------------------------------------------
# path covers of forests


def minimum_path_cover(f):
    """Minimum path cover of an acyclic graph, as a list of vertex sequences.

    Leaf-to-root greedy: at each vertex join two open child chains when
    possible, else extend one, else start a new chain.  The count equals the
    zero forcing number of the forest (cross-checked in the test suite).
    """
    if not is_acyclic(f):
        raise GraphError("minimum_path_cover requires an acyclic graph")
    closed = []
    open_path = {}
    for comp in connected_components(f):
        root = next(bits(comp))
        parent = {root: -1}
        order = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(f.adj[v]):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
                    stack.append(u)
        for v in reversed(order):
            opens = sorted(u for u in bits(f.adj[v])
                           if parent.get(u) == v and u in open_path)
            if len(opens) >= 2:
                a, b = opens[0], opens[1]
                joined = open_path.pop(a) + [v] + list(reversed(open_path.pop(b)))
                closed.append(joined)
                for u in opens[2:]:
                    closed.append(open_path.pop(u))
            elif len(opens) == 1:
                open_path[v] = open_path.pop(opens[0]) + [v]
            else:
                open_path[v] = [v]
        if root in open_path:
            closed.append(open_path.pop(root))
    return closed


# ---------------------------------------------------------------------------
# maximum independent set with all-path complement


def _component_of(g, v, within):
    comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u] & within
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def _cycle_components(g, h_mask):
    """Components of the induced subgraph on h_mask that contain a cycle."""
    out = []
    rem = h_mask
    while rem:
        v = next(bits(rem))
        comp = _component_of(g, v, h_mask)
        rem &= ~comp
        nverts = comp.bit_count()
        nedges = sum((g.adj[u] & comp).bit_count() for u in bits(comp)) // 2
        if nedges >= nverts:
            out.append(comp)
    return out


def _forbid_k4_components(g):
    for comp in connected_components(g):
        if comp.bit_count() == 4 and all(
                (g.adj[v] & comp).bit_count() == 3 for v in bits(comp)):
            raise GraphError("a component isomorphic to K4 is not allowed")


def path_complement_mis(g):
    """A maximum independent set A such that every component of g-A is a path.

    Starts from an exact maximum independent set and repeatedly applies the
    alternating-path swaps, each of which strictly reduces the number of
    cycles in the complement.
    """
    profile = classify_degrees(g)
    if not profile.is_cubic:
        raise GraphError("path_complement_mis requires a cubic graph")
    _forbid_k4_components(g)
    a_mask = maximum_independent_set(g).witness
    while True:
        h_mask = g.full_mask & ~a_mask
        cycles = _cycle_components(g, h_mask)
        if not cycles:
            return a_mask
        improved = _swap_once(g, a_mask, h_mask, cycles)
        if improved is None:
            raise GraphError("no cycle-reducing swap found; invariant violated")
        new_cycles = len(_cycle_components(g, g.full_mask & ~improved))
        if new_cycles >= len(cycles):
            raise GraphError("swap did not reduce the cycle count")
        a_mask = improved


def _swap_once(g, a_mask, h_mask, cycle_comps):
    n_cycles = len(cycle_comps)

    def h_degree(v):
        return (g.adj[v] & h_mask).bit_count()

    def comp_of(v):
        return _component_of(g, v, h_mask)

    def cycles_after(candidate):
        return len(_cycle_components(g, g.full_mask & ~candidate))

    def try_candidate(cs, as_):
        removed = mask_of(as_)
        added = mask_of(cs)
        a_prime = (a_mask & ~removed) | added
        if is_independent(g, a_prime) and cycles_after(a_prime) < n_cycles:
            return a_prime
        # secondary swap through a degree-2 neighbor of the last a-vertex
        a_k = as_[-1]
        for x in bits(g.adj[a_k] & h_mask):
            if x == cs[-1] or h_degree(x) != 2:
                continue
            hits = [i for i, ci in enumerate(cs) if g.adj[x] & (1 << ci)]
            if not hits:
                continue
            i = hits[0]
            removed2 = mask_of(as_[:i]) | (1 << as_[-1])
            added2 = mask_of(cs[:i]) | (1 << x)
            a_second = (a_mask & ~removed2) | added2
            if (a_second.bit_count() == a_mask.bit_count()
                    and is_independent(g, a_second)
                    and cycles_after(a_second) < n_cycles):
                return a_second
        return None

    def grow(cs, as_, used_comps, used_a):
        a_k = as_[-1]
        for c in bits(g.adj[a_k] & h_mask):
            if h_degree(c) != 1:
                continue
            comp = comp_of(c)
            if any(comp & uc for uc in used_comps):
                continue
            others = [u for u in bits(comp) if u != c and h_degree(u) == 1]
            if not others or not g.adj[a_k] & (1 << others[0]):
                continue
            nxt_a = g.adj[c] & a_mask & ~(1 << a_k)
            if nxt_a == 0:
                continue
            a_next = next(bits(nxt_a))
            if used_a & (1 << a_next):
                continue
            result = grow(cs + [c], as_ + [a_next],
                          used_comps + [comp], used_a | (1 << a_next))
            if result is not None:
                return result
        return try_candidate(cs, as_)

    for comp in sorted(cycle_comps, key=lambda m: m & -m):
        for c0 in bits(comp):
            a0_mask = g.adj[c0] & a_mask
            if a0_mask == 0:
                continue
            for a0 in bits(a0_mask):
                result = grow([c0], [a0], [comp], 1 << a0)
                if result is not None:
                    return result
    return None


# ---------------------------------------------------------------------------
# forcing sets from decycling sets


def _path_components_after_removal(g, f_mask, removed_edges):
    """Components of the forest on f_mask after deleting removed_edges.

    Returns each component as an ordered vertex path; raises if any component
    is not a path.
    """
    adj = {}
    for v in bits(f_mask):
        nbrs = set(bits(g.adj[v] & f_mask))
        adj[v] = nbrs
    for u, v in removed_edges:
        adj[u].discard(v)
        adj[v].discard(u)
    paths = []
    seen = set()
    for v in sorted(adj):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            w = stack.pop()
            for u in adj[w]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        degs = {w: len(adj[w] & comp) for w in comp}
        if any(d > 2 for d in degs.values()):
            raise GraphError("component is not a path after edge-cover removal")
        ends = sorted(w for w in comp if degs[w] <= 1)
        if len(comp) == 1:
            paths.append([next(iter(comp))])
            continue
        if len(ends) != 2:
            raise GraphError("cyclic component after edge-cover removal")
        walk = [ends[0]]
        prev = None
        while len(walk) < len(comp):
            nxts = [u for u in adj[walk[-1]] & comp if u != prev]
            prev = walk[-1]
            walk.append(nxts[0])
        paths.append(walk)
    return paths


def _endpoints_forcing(g, base_blue, paths):
    """Pick one endpoint per path so that base_blue plus the picks forces g.

    Tries lowest endpoints first and backtracks over the remaining endpoint
    choices; a valid choice always exists for the constructions used here.
    """
    def search(i, blue):
        if i == len(paths):
            return blue if closure(g, blue) == g.full_mask else None
        p = paths[i]
        choices = [p[0]] if len(p) == 1 else sorted((p[0], p[-1]))
        for end in choices:
            result = search(i + 1, blue | (1 << end))
            if result is not None:
                return result
        return None

    return search(0, base_blue)


def forcing_set_from_decycling(g, s_mask):
    """Explicit zero forcing set of size <= alpha + beta(G[S]) + c.

    Requires g cubic and g-S acyclic with c components.  Builds the witness
    through an edge cover of the degree-3 vertices of the forest F = g-S,
    deletes those edges to leave a path cover of F, and takes S plus one
    endpoint per path.
    """
    if not classify_degrees(g).is_cubic:
        raise GraphError("forcing_set_from_decycling requires a cubic graph")
    f_mask = g.full_mask & ~s_mask
    forest, f_verts = induced_subgraph(g, f_mask)
    if not is_acyclic(forest):
        raise GraphError("g - S must be acyclic")
    c = len(connected_components(forest)) if forest.n else 0

    deg_f = {v: (g.adj[v] & f_mask).bit_count() for v in bits(f_mask)}
    d3 = sorted(v for v in bits(f_mask) if deg_f[v] == 3)
    d3_index = {v: i for i, v in enumerate(d3)}

    # auxiliary bipartite graph on the degree-3 vertices, with a fresh pendant
    # attached to each vertex isolated among them
    aux_edges = []
    for v in d3:
        for u in bits(g.adj[v] & f_mask):
            if u in d3_index and u > v:
                aux_edges.append((d3_index[v], d3_index[u]))
    aux_n = len(d3)
    touched = set()
    for a, b in aux_edges:
        touched.add(a)
        touched.add(b)
    pendant_owner = {}
    for i in range(len(d3)):
        if i not in touched:
            pendant_owner[aux_n] = i
            aux_edges.append((i, aux_n))
            aux_n += 1

    removed = []
    if aux_n:
        from .graphs import graph_from_edges
        aux = graph_from_edges(aux_n, aux_edges)
        for a, b in sorted(minimum_edge_cover(aux)):
            if a < len(d3) and b < len(d3):
                removed.append((d3[a], d3[b]))
            else:
                owner = d3[pendant_owner[max(a, b)]]
                # substitute the lowest-index forest edge at the same vertex
                u = next(bits(g.adj[owner] & f_mask))
                removed.append((min(owner, u), max(owner, u)))

    paths = _path_components_after_removal(g, f_mask, removed)
    witness = _endpoints_forcing(g, s_mask, paths)
    if witness is None:
        raise GraphError("constructed endpoint set failed to force the graph")

    sub_s, _ = induced_subgraph(g, s_mask)
    beta_s = sub_s.n - maximum_independent_set(sub_s).alpha if sub_s.n else 0
    alpha = maximum_independent_set(g).alpha
    value = alpha + beta_s + c
    holds = is_zero_forcing_set(g, witness) and witness.bit_count() <= value
    return BoundReport("decycling_forcing", value, holds, witness)


# ---------------------------------------------------------------------------
# decycling number, embeddability, and decycling partitions


def decycling_number(g):
    """Minimum decycling (feedback vertex) set by ascending-size subset search."""
    if is_acyclic(g):
        return 0, 0
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            s = mask_of(combo)
            sub, _ = induced_subgraph(g, g.full_mask & ~s)
            if is_acyclic(sub):
                return size, s
    raise AssertionError("unreachable: removing all vertices decycles")


def _require_connected_cubic(g, op):
    if not classify_degrees(g).is_cubic or not is_connected(g):
        raise GraphError(f"{op} requires a connected cubic graph")


def find_partition_one_face(g):
    """Partition with S independent and g[R] a tree, or None (exhaustive).

    For cubic g the counting identity forces |S| = (n+2)/4, so only subsets
    of that size are examined.
    """
    _require_connected_cubic(g, "find_partition_one_face")
    if (g.n + 2) % 4 != 0:
        return None
    k = (g.n + 2) // 4
    for combo in itertools.combinations(range(g.n), k):
        s = mask_of(combo)
        if not is_independent(g, s):
            continue
        r = g.full_mask & ~s
        sub, _ = induced_subgraph(g, r)
        if is_acyclic(sub) and is_connected(sub):
            return DecyclingPartition(r, s, "independent", "tree")
    return None


def find_partition_two_face(g):
    """Partition matching either two-face clause, or None (exhaustive).

    Clause 1: g[R] a tree and S near independent.
    Clause 2: g[R] a two-component forest and S independent.
    Both clauses force |S| = (n+4)/4 on cubic input.
    """
    _require_connected_cubic(g, "find_partition_two_face")
    if g.n % 4 != 0:
        return None
    k = (g.n + 4) // 4
    for combo in itertools.combinations(range(g.n), k):
        s = mask_of(combo)
        r = g.full_mask & ~s
        sub, _ = induced_subgraph(g, r)
        if not is_acyclic(sub):
            continue
        ncomp = len(connected_components(sub))
        if ncomp == 1 and is_near_independent(g, s):
            return DecyclingPartition(r, s, "near_independent", "tree")
        if ncomp == 2 and is_independent(g, s):
            return DecyclingPartition(r, s, "independent", "forest_2_components")
    return None


def embeddability_report(g):
    """Decycling number, maximum genus, and face-embeddability classification."""
    _require_connected_cubic(g, "embeddability_report")
    phi, witness = decycling_number(g)
    ceiling = (g.n + 2 + 3) // 4
    return EmbeddabilityReport(
        phi=phi,
        phi_witness=witness,
        max_genus=g.n // 2 + 1 - phi,
        upper_embeddable=phi == ceiling,
        one_face=find_partition_one_face(g) is not None,
        two_face=find_partition_two_face(g) is not None,
    )


# ---------------------------------------------------------------------------
# bound checks


def check_three_alpha_bound(g):
    """Z <= 3*alpha - n/2 for cubic graphs without K4 components."""
    a_mask = path_complement_mis(g)
    s_mask = g.full_mask & ~a_mask
    construction = forcing_set_from_decycling(g, s_mask)
    alpha = a_mask.bit_count()
    value = 3 * alpha - g.n // 2
    z, _ = zero_forcing_number(g)
    holds = z <= value and construction.holds
    return BoundReport("three_alpha_minus_half_n", value, holds, construction.witness)


def _is_complete_mask(g, comp):
    size = comp.bit_count()
    return all((g.adj[v] & comp).bit_count() == size - 1 for v in bits(comp))


def _degree_alpha_set(g):
    """Recursive zero-forcing-set construction of size <= (max_degree - 1) * alpha."""
    delta = classify_degrees(g).max_degree
    a_mask = maximum_independent_set(g).witness
    blue = a_mask
    h_mask = g.full_mask & ~a_mask
    rem = h_mask
    while rem:
        v = next(bits(rem))
        comp = _component_of(g, v, h_mask)
        rem &= ~comp
        size = comp.bit_count()
        degs = {u: (g.adj[u] & comp).bit_count() for u in bits(comp)}
        maxd = max(degs.values())
        if maxd <= 2:
            nedges = sum(degs.values()) // 2
            if nedges == size - 1:
                # path: lowest endpoint
                blue |= 1 << min(u for u in bits(comp) if degs[u] <= 1)
            elif delta == 3:
                # cycle, max degree 3: one vertex lying in a triangle of g
                # suffices (the rest is forced through the independent set);
                # without such a vertex the whole cycle is forced through it
                pick = None
                for u in bits(comp):
                    nbrs = list(bits(g.adj[u]))
                    if any(g.has_edge(x, y)
                           for x, y in itertools.combinations(nbrs, 2)):
                        pick = u
                        break
                blue |= 1 << (pick if pick is not None else next(bits(comp)))
            else:
                # cycle, max degree >= 4: two adjacent vertices form a zero
                # forcing set of the component on its own
                u = next(bits(comp))
                blue |= (1 << u) | (g.adj[u] & comp) & -(g.adj[u] & comp)
        elif _is_complete_mask(g, comp):
            if size == delta + 1:
                # pick two vertices with no common neighbor in A to leave white
                pair = None
                for x, y in itertools.combinations(sorted(bits(comp)), 2):
                    if not (g.adj[x] & g.adj[y] & a_mask):
                        pair = (x, y)
                        break
                if pair is None:
                    raise GraphError(
                        "complete component with all pairs sharing an "
                        "A-neighbor; graph is complete or disconnected")
                blue |= comp & ~((1 << pair[0]) | (1 << pair[1]))
            else:
                blue |= comp & ~(1 << max(bits(comp)))
        else:
            sub, verts = induced_subgraph(g, comp)
            sub_blue = _degree_alpha_set(sub)
            for i in bits(sub_blue):
                blue |= 1 << verts[i]
    return blue


def degree_alpha_construction(g):
    """Explicit zero forcing set witnessing Z <= (max_degree - 1) * alpha."""
    delta = classify_degrees(g).max_degree
    if delta < 3:
        raise GraphError("requires maximum degree at least 3")
    if not is_connected(g):
        raise GraphError("requires a connected graph")
    if _is_complete_mask(g, g.full_mask):
        raise GraphError("requires a non-complete graph")
    witness = _degree_alpha_set(g)
    alpha = maximum_independent_set(g).alpha
    value = (delta - 1) * alpha
    holds = is_zero_forcing_set(g, witness) and witness.bit_count() <= value
    return BoundReport("degree_alpha", value, holds, witness)


def check_small_z_bounds(g, z=None, alpha=None):
    """Counting bounds: ceil(n/(Z+1)) <= alpha, and Z <= alpha
    whenever Z <= sqrt(n).  Returns two reports; the second is marked not
    applicable when its hypothesis fails."""
    if z is None:
        z, _ = zero_forcing_number(g)
    if alpha is None:
        alpha = maximum_independent_set(g).alpha
    lower = -(-g.n // (z + 1))
    first = BoundReport("alpha_at_least_n_over_z_plus_1", lower, lower <= alpha, 0)
    if z * z <= g.n:
        second = BoundReport("z_at_most_alpha_when_z_small", alpha, z <= alpha, 0)
    else:
        second = BoundReport("z_at_most_alpha_when_z_small", alpha, True, 0,
                             applicable=False)
    return first, second
