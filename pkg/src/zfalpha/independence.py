"""Exact maximum independent set / minimum vertex cover and related predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .forcing import _check_deadline
from .graphs import bits


@dataclass(frozen=True)
class IndependenceCertificate:
    alpha: int
    witness: int
    beta: int
    cover_witness: int


def is_independent(g, members):
    for v in bits(members):
        if g.adj[v] & members:
            return False
    return True


def induced_edge_count(g, members):
    return sum((g.adj[v] & members).bit_count() for v in bits(members)) // 2


def is_near_independent(g, members):
    """True iff the set induces exactly one edge."""
    return induced_edge_count(g, members) == 1


def _solve_degree_le2(g, cand):
    """Optimal independent set when every candidate vertex has candidate-degree <= 2.

    The candidate-induced components are paths and cycles; alternate from a
    deterministic endpoint (paths) or start vertex (cycles).
    """
    chosen = 0
    remaining = cand
    while remaining:
        # peel one component
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & remaining
            frontier = nxt & ~comp
            comp |= frontier
        remaining &= ~comp
        size = comp.bit_count()
        degs = {v: (g.adj[v] & comp).bit_count() for v in bits(comp)}
        endpoints = [v for v in bits(comp) if degs[v] <= 1]
        if endpoints:
            # path: walk from the lowest endpoint, take every other vertex
            v, prev = endpoints[0], -1
            take = True
            for _ in range(size):
                if take:
                    chosen |= 1 << v
                take = not take
                nxts = [u for u in bits(g.adj[v] & comp) if u != prev]
                if not nxts:
                    break
                prev, v = v, nxts[0]
        else:
            # cycle: walk from the lowest vertex, floor(size/2) alternating picks
            v = next(bits(comp))
            prev = -1
            for i in range(size):
                if i % 2 == 0 and i < size - (size % 2):
                    chosen |= 1 << v
                nxts = [u for u in bits(g.adj[v] & comp) if u != prev]
                if not nxts:
                    break
                prev, v = v, nxts[0]
    return chosen


def maximum_independent_set(g, deadline=None):
    """Exact alpha(g) by branch and bound on a maximum-degree vertex.

    Prunes with the candidate count; components of maximum degree <= 2 are
    solved directly.  Deterministic lowest-index tie-breaking throughout.
    """
    best = [0, 0]  # size, mask

    def consider(mask):
        size = mask.bit_count()
        if size > best[0]:
            best[0], best[1] = size, mask

    def expand(cand, cur):
        _check_deadline(deadline, "independent-set")
        cur_size = cur.bit_count()
        if cur_size + cand.bit_count() <= best[0]:
            return
        if cand == 0:
            consider(cur)
            return
        best_v, best_d = -1, -1
        for v in bits(cand):
            d = (g.adj[v] & cand).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d <= 2:
            consider(cur | _solve_degree_le2(g, cand))
            return
        v = best_v
        expand(cand & ~(g.adj[v] | (1 << v)), cur | (1 << v))
        expand(cand & ~(1 << v), cur)

    expand(g.full_mask, 0)
    witness = best[1]
    cover = g.full_mask & ~witness
    return IndependenceCertificate(
        alpha=best[0], witness=witness, beta=g.n - best[0], cover_witness=cover)
