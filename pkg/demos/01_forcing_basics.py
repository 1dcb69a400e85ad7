"""A tour of the forcing machinery: closures, traces, forts, and exact Z.

Run with: python3 demos/01_forcing_basics.py
"""

from zfalpha import (bits, chronological_forces, closure, cycle_graph,
                     enumerate_minimal_forts, is_zero_forcing_set, path_graph,
                     petersen_graph, prism_graph, trace_forcing,
                     zero_forcing_number)


def show(title):
    print(f"\n=== {title} ===")


show("The color change rule on a path")
p = path_graph(6)
print("P6, start with vertex 0 blue:")
print(" ", trace_forcing(p, 0b000001))
print("  so Z(P6) =", zero_forcing_number(p)[0])

show("A single vertex is not enough on a cycle")
c = cycle_graph(6)
print("C6, start with vertex 0 blue:")
print(" ", trace_forcing(c, 0b000001))
print("  closure stops at", sorted(bits(closure(c, 0b000001))))
print("  two adjacent vertices do force:", is_zero_forcing_set(c, 0b000011))

show("Chronological records are replayable")
rec = chronological_forces(c, 0b000011)
print("  steps:", rec.steps)
print("  chains:", rec.chains)
print("  replays correctly:", rec.replay_ok(c))

show("Forts explain lower bounds")
# No vertex outside a fort sees exactly one fort vertex, so a forcing set
# must intersect every fort.
g = prism_graph()
forts = enumerate_minimal_forts(g, cap=10)
print("  some minimal forts of the prism:", [sorted(bits(f)) for f in forts[:4]])
z, witness = zero_forcing_number(g)
print(f"  Z(prism) = {z}, witness {sorted(bits(witness))}")
for f in forts:
    assert witness & f, "a forcing set must hit every fort"
print("  the witness hits all of them")

show("The Petersen graph")
g = petersen_graph()
z, witness = zero_forcing_number(g)
print(f"  Z = {z}, witness {sorted(bits(witness))}")
print(trace_forcing(g, witness))
