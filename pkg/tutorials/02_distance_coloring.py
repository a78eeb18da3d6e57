"""Exact chromatic and distance-k chromatic numbers of coronas.

Each value comes with a coloring that is re-checked against the distance
predicate, and is compared here with the closed forms it should match.
"""

from coronalab import corona
from coronalab.coloring import (
    chromatic_number,
    corona_chromatic_formula,
    corona_dist_bounds,
    distance_k_chromatic,
    validate_coloring,
)
from coronalab.harness import parse_family


def fam(token):
    return parse_family(token, 7)[1]


# Ordinary coloring: chi(G ⊙ H) = max{chi(G), chi(H) + 1}.
for g, h in [("C5", "K1"), ("P3", "K3"), ("K4", "C4")]:
    cg, _ = corona(fam(g), fam(h))
    res = chromatic_number(cg)
    print(f"chi({g} ⊙ {h}) = {res.value}   colors {res.witness.colors}")

# Distance-2 coloring of path coronas: n2 + 3 colors.
for n1 in (3, 4, 5):
    cg, _ = corona(fam(f"P{n1}"), fam("K2"))
    res = distance_k_chromatic(cg, 2)
    assert validate_coloring(cg, 2, res.witness)
    print(f"chi_2(P{n1} ⊙ K2) = {res.value}  (formula {corona_chromatic_formula('chi2-path', n1=n1, n2=2)})")

# The general distance-2 bounds are not always tight.
for g, h in [("C4", "N2"), ("C5", "N2"), ("K3,3", "K1")]:
    b = corona_dist_bounds(fam(g), fam(h), 2)
    exact = distance_k_chromatic(corona(fam(g), fam(h))[0], 2).value
    print(f"{g} ⊙ {h}: {b.lower} <= chi_2 = {exact} <= {b.upper}")

# Larger distances on path coronas follow n2(k-1) + k + 1 (or + k when k = n1).
for k in range(2, 6):
    cg, _ = corona(fam("P5"), fam("K1"))
    print(f"chi_{k}(P5 ⊙ K1) = {distance_k_chromatic(cg, k).value}"
          f"  (formula {corona_chromatic_formula('chik-path', n1=5, k=k, n2=1)})")
