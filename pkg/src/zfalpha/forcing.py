"""Zero forcing: closure, chronological forces, forts, and the exact solver.

The exact solver runs an implicit hitting-set loop over forts: every zero
forcing set must intersect every fort, so a minimum hitting set of any fort
collection is a lower bound.  Whenever a candidate hitting set stalls, the
white complement of its closure is itself a fort and is added to the
collection, so the loop makes strict progress until the lower bound is
certified by a set that actually forces.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as _np

from .graphs import GraphError, bits


class NotForcingSetError(GraphError):
    """The given blue set does not force the whole graph."""


class SolverBudgetExceeded(RuntimeError):
    """An exact solver ran past its deadline."""

    def __init__(self, solver, elapsed):
        super().__init__(f"{solver} exceeded its time budget after {elapsed:.1f}s")
        self.solver = solver
        self.elapsed = elapsed


def _check_deadline(deadline, solver):
    if deadline is not None and time.monotonic() > deadline:
        raise SolverBudgetExceeded(solver, 0.0)


def closure(g, blue):
    """Fixpoint of the color change rule starting from ``blue``.

    Round-based sweep in ascending vertex order; the result is
    order-independent (confluence is asserted by the test suite).
    """
    changed = True
    while changed:
        changed = False
        for v in bits(blue):
            white = g.adj[v] & ~blue
            if white and white & (white - 1) == 0:
                blue |= white
                changed = True
    return blue


def is_zero_forcing_set(g, blue):
    return closure(g, blue) == g.full_mask


@dataclass(frozen=True)
class ForcingRecord:
    """A chronological list of forces plus the derived forcing chains."""

    initial: int
    steps: tuple  # ordered (forcer, forced) pairs
    chains: tuple  # vertex tuples partitioning V

    def replay_ok(self, g):
        """Validate every step against the color change rule."""
        blue = self.initial
        for forcer, forced in self.steps:
            if not blue & (1 << forcer):
                return False
            white = g.adj[forcer] & ~blue
            if white != 1 << forced:
                return False
            blue |= 1 << forced
        return blue == g.full_mask


def _chains_from_steps(initial, steps):
    succ = {forcer: forced for forcer, forced in steps}
    chains = []
    for head in bits(initial):
        chain = [head]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    return tuple(chains)


def chronological_forces(g, blue):
    """Canonical chronological record: lowest-index eligible forcer acts first."""
    initial = blue
    steps = []
    while True:
        for v in bits(blue):
            white = g.adj[v] & ~blue
            if white and white & (white - 1) == 0:
                w = white.bit_length() - 1
                steps.append((v, w))
                blue |= white
                break
        else:
            break
    if blue != g.full_mask:
        raise NotForcingSetError(
            f"closure stalled with {blue.bit_count()} of {g.n} vertices blue")
    return ForcingRecord(initial, tuple(steps), _chains_from_steps(initial, steps))


# ---------------------------------------------------------------------------
# forts


def is_fort(g, members):
    """True iff no outside vertex has exactly one neighbor inside ``members``."""
    if members == 0:
        raise GraphError("a fort must be nonempty")
    outside = g.full_mask & ~members
    for v in bits(outside):
        inside = g.adj[v] & members
        if inside and inside & (inside - 1) == 0:
            return False
    return True


def _shrink_fort(g, members):
    """Greedy element removal while the set remains a fort."""
    shrunk = True
    while shrunk:
        shrunk = False
        for v in bits(members):
            candidate = members & ~(1 << v)
            if candidate and is_fort(g, candidate):
                members = candidate
                shrunk = True
    return members


def enumerate_minimal_forts(g, cap):
    """Up to ``cap`` inclusion-minimal forts, by subset search in ascending size."""
    if cap < 1:
        raise GraphError("cap must be at least 1")
    found = []
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            members = 0
            for v in combo:
                members |= 1 << v
            if any(f & ~members == 0 for f in found):
                continue
            if is_fort(g, members):
                found.append(members)
                if len(found) >= cap:
                    return found
    return found


# ---------------------------------------------------------------------------
# exact solver


def _greedy_forcing_set(g, forbidden=0):
    """Upper-bound witness: grow by maximum closure gain, then prune greedily."""
    blue = 0
    closed = 0
    allowed = g.full_mask & ~forbidden
    while closed != g.full_mask:
        best_v, best_gain = -1, -1
        for v in bits(allowed & ~blue):
            gain = closure(g, blue | (1 << v)).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            raise GraphError("no forcing set avoids the forbidden vertices")
        blue |= 1 << best_v
        closed = closure(g, blue)
    for v in bits(blue):
        candidate = blue & ~(1 << v)
        if candidate and closure(g, candidate) == g.full_mask:
            blue = candidate
    return blue


def _seed_forts(g):
    """All minimal forts on at most three vertices, a cheap strong start for
    the hitting-set lower bound."""
    forts = []
    for v in range(g.n):
        if g.adj[v] == 0:
            forts.append(1 << v)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            pair = (1 << u) | (1 << v)
            if is_fort(g, pair):
                forts.append(pair)
    if g.n <= 40:
        for combo in itertools.combinations(range(g.n), 3):
            triple = sum(1 << v for v in combo)
            if any(f & ~triple == 0 for f in forts):
                continue
            if is_fort(g, triple):
                forts.append(triple)
    return forts


def _popcount64(arr):
    if hasattr(_np, "bitwise_count"):
        return _np.bitwise_count(arr)
    x = arr.copy()
    x = x - ((x >> _np.uint64(1)) & _np.uint64(0x5555555555555555))
    x = (x & _np.uint64(0x3333333333333333)) + (
        (x >> _np.uint64(2)) & _np.uint64(0x3333333333333333))
    x = (x + (x >> _np.uint64(4))) & _np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * _np.uint64(0x0101010101010101)) >> _np.uint64(56)


def _solve_exact(g, forbidden=0, deadline=None):
    """Minimum zero forcing set avoiding ``forbidden``; returns (witness, forts).

    Iterative-deepening search over vertex sets.  Each node branches on an
    unhit fort; when every known fort is hit but the closure stalls, the
    stalled white set yields a new fort and the search continues against it.
    Infeasible (set, budget) states are memoized across depths.  The fort
    collection is kept as a numpy array (sorted by fort size) so the per-node
    unhit filter runs vectorized.
    """
    if g.n == 0:
        return 0, []
    full = g.full_mask
    ub_witness = _greedy_forcing_set(g, forbidden)
    forts = _seed_forts(g)
    if not forts:
        forts = [_shrink_fort(g, full)]
    forts.sort(key=lambda f: (f.bit_count(), f))
    fort_arr = [_np.array(forts, dtype=_np.uint64)]
    allowed = _np.uint64(full & ~forbidden)
    seen = {}

    def add_fort(f):
        forts.append(f)
        size = f.bit_count()
        pos = 0
        while pos < len(fort_arr[0]) and int(fort_arr[0][pos]).bit_count() <= size:
            pos += 1
        fort_arr[0] = _np.insert(fort_arr[0], pos, _np.uint64(f))

    def dfs(chosen, budget):
        _check_deadline(deadline, "zero-forcing")
        if seen.get(chosen, -1) >= budget:
            return None
        arr = fort_arr[0]
        unhit = arr[(arr & _np.uint64(chosen)) == 0]
        branch = None
        if unhit.size:
            cand = unhit & allowed
            if not cand.all():
                seen[chosen] = g.n
                return None
            branch = int(cand[int(_popcount64(cand).argmin())])
            # greedy disjoint-fort packing, early exit once it exceeds budget
            packing_used = 0
            packing = 0
            for f in unhit.tolist():
                if not f & packing_used:
                    packing_used |= f
                    packing += 1
                    if packing > budget:
                        seen[chosen] = budget
                        return None
        else:
            closed = closure(g, chosen)
            if closed == full:
                return chosen
            new_fort = _shrink_fort(g, full & ~closed)
            add_fort(new_fort)
            branch = new_fort & ~forbidden
            if branch == 0:
                seen[chosen] = g.n
                return None
        if budget == 0:
            seen[chosen] = 0
            return None
        for v in bits(branch):
            result = dfs(chosen | (1 << v), budget - 1)
            if result is not None:
                return result
        seen[chosen] = budget
        return None

    packing_used = 0
    lower = 0
    for f in forts:
        if not f & packing_used:
            packing_used |= f
            lower += 1
    for size in range(max(lower, 1), ub_witness.bit_count()):
        found = dfs(0, size)
        if found is not None:
            return found, forts
    return ub_witness, forts


def zero_forcing_number(g, deadline=None):
    """Exact Z(g) with a minimum witness set."""
    witness, _ = _solve_exact(g, deadline=deadline)
    return witness.bit_count(), witness


def min_zfset_avoiding(g, v, deadline=None):
    """A minimum zero forcing set of a connected nontrivial graph avoiding ``v``."""
    from .graphs import is_connected

    if g.n < 2 or not is_connected(g):
        raise GraphError("requires a connected graph on at least 2 vertices")
    z, _ = zero_forcing_number(g, deadline)
    witness, _ = _solve_exact(g, forbidden=1 << v, deadline=deadline)
    if witness.bit_count() != z:
        raise GraphError(
            f"no minimum zero forcing set avoids vertex {v}; "
            "this contradicts a known property of connected graphs")
    return witness
