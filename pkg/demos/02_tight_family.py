"""The tight family: cubic graphs where Z exceeds alpha by exactly one.

Every tree whose degrees are all 1 or 3 can be turned into a connected cubic
graph by replacing each leaf with a small gadget (K4 with one subdivided
edge).  The resulting graphs satisfy Z = alpha + 1 on the nose, so the
inequality Z <= alpha + 1 cannot be improved for cubic graphs.

Run with: python3 demos/02_tight_family.py
"""

from zfalpha import (bits, build_tight_graph, check_tight_family,
                     generate_31_trees, maximum_independent_set,
                     minimum_path_cover, write_graph6, zero_forcing_number)

for n in (4, 6, 8):
    for i, t in enumerate(generate_31_trees(n)):
        built = build_tight_graph(t)
        g = built.result
        z_tree = len(minimum_path_cover(t.tree))
        z, witness = zero_forcing_number(g)
        alpha = maximum_independent_set(g).alpha
        rep = check_tight_family(t)
        print(f"tree on {n} vertices (#{i}): {write_graph6(t.tree).decode()}")
        print(f"  gadget graph: n = {g.n}, {write_graph6(g).decode()}")
        print(f"  Z(tree) = {z_tree} (path cover), Z = {z}, alpha = {alpha}")
        print(f"  Z = Z(tree) + n + 2 = alpha + 1 holds: {rep.holds}")
        print(f"  witness forcing set: {sorted(bits(witness))}")
        print()

print("Each leaf gadget contributes two disjoint two-vertex forts, which is")
print("what pushes the forcing number all the way up to alpha + 1.")
t = generate_31_trees(4)[0]
built = build_tight_graph(t)
for leaf, gpos in built.gadget_vertices.items():
    print(f"  leaf {leaf}: forts {{{gpos['a']},{gpos['b']}}} and "
          f"{{{gpos['c']},{gpos['d']}}}")
