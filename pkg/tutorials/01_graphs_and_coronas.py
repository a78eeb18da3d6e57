"""Graphs, families and the corona product.

Run with ``python tutorials/01_graphs_and_coronas.py``.
"""

from coronalab import FamilySpec, corona, diameter, distances, format_dimacs, generate, girth, parse_dimacs, power

# Families are generated from a tag and size parameters; random ones take a seed.
p4 = generate(FamilySpec("path", (4,)))
k2 = generate(FamilySpec("complete", (2,)))
tree = generate(FamilySpec("random-tree", (7,), seed=3))
print("P4:", p4, " edges:", p4.edges())
print("random tree (seed 3):", tree.edges())

# Distances come back as a numpy matrix, with inf between components.
print("distance matrix of P4:\n", distances(p4))
print("diameter(P4) =", diameter(p4), " girth(P4) =", girth(p4))

# The k-th power joins vertices at distance <= k; distance-k colorings of g
# are ordinary colorings of power(g, k).
print("edges of P4^2:", power(p4, 2).edges())

# The corona G ⊙ H keeps G and hangs one copy of H off every vertex of G.
# Layout: the n1 centers come first, then copy i occupies n1 + i*n2 + j.
g, lab = corona(p4, k2)
print(f"P4 ⊙ K2 has {g.n} vertices and {g.m} edges")
for v in (0, 3, 4, 5, 11):
    print(f"  vertex {v:2d} is {lab.label(v)}")
print("diameter grows by two:", diameter(p4), "->", diameter(g))

# DIMACS text round-trips exactly.
text = format_dimacs(g, comment="P4 corona K2")
assert parse_dimacs(text) == g
print(text.splitlines()[1])
