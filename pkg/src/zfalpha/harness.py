"""Batch verification: certificates, bound sweeps, and forcing traces.

A certificate records the exact invariants of one graph together with every
bound check that applies to it.  Serialization deliberately omits wall-clock
timings so that identical inputs produce byte-identical certificate files.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .bounds import (BoundReport, check_small_z_bounds, decycling_number,
                     degree_alpha_construction, find_partition_one_face,
                     find_partition_two_face, forcing_set_from_decycling,
                     path_complement_mis)
from .forcing import SolverBudgetExceeded, closure, zero_forcing_number
from .graphs import (GraphError, bits, claw_centers, classify_degrees,
                     is_connected, parse_graph6, write_graph6)
from .independence import maximum_independent_set


@dataclass(frozen=True)
class RunConfig:
    """Knobs for a verification run; exactly one input mode per run."""

    budget_secs: float = 60.0
    workers: int = 1
    check_embeddability: bool = True
    check_constructions: bool = True

    def __post_init__(self):
        if self.budget_secs <= 0:
            raise ValueError("budget_secs must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def effective_workers(self):
        env = os.environ.get("ZFW_WORKERS")
        return int(env) if env else self.workers


@dataclass(frozen=True)
class Certificate:
    graph6: str
    n: int
    z: int
    alpha: int
    phi: object  # int for cubic graphs, else None
    upper_embeddable: object
    one_face: object
    two_face: object
    claw_center_count: int
    bounds: tuple  # BoundReport entries
    incomplete: tuple  # solver names that exceeded the time budget
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def violations(self):
        return tuple(b for b in self.bounds if b.applicable and not b.holds)

    def to_json(self):
        payload = {
            "graph6": self.graph6,
            "n": self.n,
            "z": self.z,
            "alpha": self.alpha,
            "phi": self.phi,
            "upper_embeddable": self.upper_embeddable,
            "one_face": self.one_face,
            "two_face": self.two_face,
            "claw_center_count": self.claw_center_count,
            "bounds": [
                {"name": b.bound_name, "value": b.bound_value,
                 "holds": b.holds, "witness": b.witness,
                 "applicable": b.applicable}
                for b in self.bounds],
            "incomplete": list(self.incomplete),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line):
        d = json.loads(line)
        return cls(
            graph6=d["graph6"], n=d["n"], z=d["z"], alpha=d["alpha"],
            phi=d["phi"], upper_embeddable=d["upper_embeddable"],
            one_face=d["one_face"], two_face=d["two_face"],
            claw_center_count=d["claw_center_count"],
            bounds=tuple(BoundReport(b["name"], b["value"], b["holds"],
                                     b["witness"], b["applicable"])
                         for b in d["bounds"]),
            incomplete=tuple(d["incomplete"]))


CSV_COLUMNS = ("graph6", "n", "z", "alpha", "phi", "upper_embeddable",
               "one_face", "two_face", "claw_center_count", "violations")


def _is_k4(g):
    return g.n == 4 and all(g.degree(v) == 3 for v in range(g.n))


def verify_graph(g, cfg=None):
    """Certificate with exact Z and alpha plus every applicable bound check.

    A solver that runs past the per-solver budget is listed in
    ``incomplete``; the remaining checks still run.
    """
    if not is_connected(g):
        raise GraphError("verify_graph requires a connected graph")
    cfg = cfg or RunConfig()
    timings = {}
    incomplete = []

    def timed(name, fn, *args):
        deadline = time.monotonic() + cfg.budget_secs
        start = time.perf_counter()
        try:
            return fn(*args, deadline) if fn in _DEADLINE_AWARE else fn(*args)
        except SolverBudgetExceeded:
            incomplete.append(name)
            return None
        finally:
            timings[name] = time.perf_counter() - start

    _DEADLINE_AWARE = {zero_forcing_number, maximum_independent_set}

    z_result = timed("zero_forcing", zero_forcing_number, g)
    alpha_result = timed("independence", maximum_independent_set, g)
    z = z_result[0] if z_result else None
    alpha = alpha_result.alpha if alpha_result else None

    profile = classify_degrees(g)
    claws = claw_centers(g).bit_count()
    bounds = []
    phi = upper = one = two = None

    if profile.is_cubic and z is not None and alpha is not None:
        if _is_k4(g):
            bounds.append(BoundReport("z_le_alpha_plus_1", alpha + 1, True, 0,
                                      applicable=False))
        else:
            bounds.append(BoundReport("z_le_alpha_plus_1", alpha + 1,
                                      z <= alpha + 1, 0))
        if cfg.check_embeddability:
            phi, _ = decycling_number(g)
            upper = phi == (g.n + 2 + 3) // 4
            part1 = find_partition_one_face(g)
            part2 = find_partition_two_face(g)
            one = part1 is not None
            two = part2 is not None
            if cfg.check_constructions:
                if part1 is not None:
                    rep = forcing_set_from_decycling(g, part1.s_mask)
                    ok = rep.holds and rep.witness.bit_count() <= alpha + 1
                    bounds.append(BoundReport("one_face_forcing", alpha + 1,
                                              ok, rep.witness))
                elif part2 is not None:
                    rep = forcing_set_from_decycling(g, part2.s_mask)
                    ok = rep.holds and rep.witness.bit_count() <= alpha + 2
                    bounds.append(BoundReport("two_face_forcing", alpha + 2,
                                              ok, rep.witness))
        if cfg.check_constructions and not _is_k4(g):
            a_mask = path_complement_mis(g)
            rep = forcing_set_from_decycling(g, g.full_mask & ~a_mask)
            value = 3 * alpha - g.n // 2
            ok = rep.holds and z <= value
            bounds.append(BoundReport("three_alpha_minus_half_n", value, ok,
                                      rep.witness))

    if profile.is_subcubic and not _is_k4(g) and None not in (z, alpha):
        bounds.append(BoundReport("z_le_alpha_plus_1_plus_claw_centers",
                                  alpha + 1 + claws, z <= alpha + 1 + claws, 0))

    if None not in (z, alpha):
        bounds.extend(check_small_z_bounds(g, z, alpha))

    if (cfg.check_constructions and profile.max_degree >= 3
            and not _is_k4(g) and g.n >= 2
            and not all(g.degree(v) == g.n - 1 for v in range(g.n))
            and None not in (z, alpha)):
        bounds.append(degree_alpha_construction(g))

    return Certificate(
        graph6=write_graph6(g).decode("ascii"), n=g.n, z=z, alpha=alpha, phi=phi,
        upper_embeddable=upper, one_face=one, two_face=two,
        claw_center_count=claws, bounds=tuple(bounds),
        incomplete=tuple(incomplete), timings=timings)


def _verify_worker(args):
    g6, cfg = args
    return verify_graph(parse_graph6(g6), cfg)


@dataclass(frozen=True)
class BatchSummary:
    graphs_checked: int
    violation_certs: tuple  # graph6 strings with at least one failed bound
    incomplete_certs: tuple
    upper_embeddable_fraction: dict  # n -> fraction among cubic graphs
    one_face_fraction: dict
    claw_free_checked: int
    claw_free_holds: int

    @property
    def ok(self):
        return not self.violation_certs


def verify_batch(graphs, cfg=None, out_path=None, csv_path=None):
    """Run verify_graph over a graph stream; returns (summary, certificates).

    Certificates are written to ``out_path`` (one JSON object per line) in
    input order regardless of worker count, so output is deterministic.
    """
    cfg = cfg or RunConfig()
    graphs = list(graphs)
    workers = cfg.effective_workers()
    if workers > 1 and len(graphs) > 1:
        jobs = [(write_graph6(g).decode("ascii"), cfg) for g in graphs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            certs = list(pool.map(_verify_worker, jobs))
    else:
        certs = [verify_graph(g, cfg) for g in graphs]

    violations = tuple(c.graph6 for c in certs if c.violations)
    incomplete = tuple(c.graph6 for c in certs if c.incomplete)
    upper, one, claw_checked, claw_holds = {}, {}, 0, 0
    per_n = {}
    for c in certs:
        if c.phi is not None:
            per_n.setdefault(c.n, []).append(c)
        if c.claw_center_count == 0 and c.phi is not None:
            conj = [b for b in c.bounds if b.bound_name == "z_le_alpha_plus_1"
                    and b.applicable]
            if conj:
                claw_checked += 1
                claw_holds += conj[0].holds
    for n, group in per_n.items():
        upper[n] = sum(bool(c.upper_embeddable) for c in group) / len(group)
        one[n] = sum(bool(c.one_face) for c in group) / len(group)

    if out_path is not None:
        with open(out_path, "w") as fh:
            for c in certs:
                fh.write(c.to_json() + "\n")
    if csv_path is not None:
        with open(csv_path, "w") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for c in certs:
                row = [c.graph6, c.n, c.z, c.alpha, c.phi, c.upper_embeddable,
                       c.one_face, c.two_face, c.claw_center_count,
                       len(c.violations)]
                fh.write(",".join("" if x is None else str(x) for x in row)
                         + "\n")

    summary = BatchSummary(
        graphs_checked=len(certs), violation_certs=violations,
        incomplete_certs=incomplete, upper_embeddable_fraction=upper,
        one_face_fraction=one, claw_free_checked=claw_checked,
        claw_free_holds=claw_holds)
    return summary, certs


# ---------------------------------------------------------------------------
# forcing traces


def trace_forcing(g, blue, dot=False):
    """Human-readable forcing trace, or a stall report if ``blue`` is not a
    zero forcing set.  With ``dot=True`` returns DOT source instead: members
    of the initial set are filled, chain edges are directed."""
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
    stalled = blue != g.full_mask
    if dot:
        chain = {(a, b) for a, b in steps}
        lines = ["graph forcing {"]
        for v in range(g.n):
            style = ' [style=filled fillcolor=lightblue]' if initial >> v & 1 \
                else ("" if blue >> v & 1 else ' [style=dashed]')
            lines.append(f"  {v}{style};")
        for a, b in g.edges():
            if (a, b) in chain or (b, a) in chain:
                lines.append(f"  {a} -- {b} [dir=forward penwidth=2];")
            else:
                lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines)
    if stalled:
        still_blue = sorted(bits(closure(g, initial)))
        return (f"stalled: blue = {{{', '.join(map(str, still_blue))}}}, "
                f"{g.n - len(still_blue)} vertices never forced")
    if not steps:
        return "no forces needed: every vertex starts blue"
    return ", ".join(f"{a}→{b}" for a, b in steps)
