"""Classical, k-, distance-k and independent domination, plus partitions."""

from coronalab import corona
from coronalab import domination as dom
from coronalab.harness import parse_family


def fam(token):
    return parse_family(token, 7)[1]


G, H = fam("P4"), fam("C4")
cg, lab = corona(G, H)
print(f"P4 ⊙ C4 has {cg.n} vertices")

gamma = dom.domination_number(cg)
print("gamma =", gamma.value, "witness", gamma.witness, "(the centers)")
print("gamma_c =", dom.connected_domination_number(cg).value)
print("i =", dom.independent_domination_number(cg).value,
      " beta0 =", dom.independence_number(cg).value)
for k in (2, 3):
    gk = dom.k_domination_number(cg, k).value
    formula = G.n * min(dom.k_domination_number(H, k).value, dom.k_domination_number(H, k - 1).value + 1)
    print(f"gamma_{k} = {gk} (formula {formula})")
    print(f"gamma_<={k} = {dom.distance_k_domination_number(cg, k).value}"
          f" = gamma_<={k - 1}(P4) = {dom.distance_k_domination_number(G, k - 1).value}")

# The k-domination formula needs room in each copy: with n2 < k it undercounts.
p2k1, _ = corona(fam("P2"), fam("K1"))
print("gamma_2(P2 ⊙ K1) =", dom.k_domination_number(p2k1, 2).value, "while the formula gives 2")

# Partitions into dominating sets, and into independent dominating sets.
small, _ = corona(fam("P3"), fam("C4"))
d = dom.domatic_number(small, cap=small.n)
print("domatic number of P3 ⊙ C4:", d.value, d.witness)
k2k2, _ = corona(fam("K2"), fam("K2"))
di = dom.idomatic_number(k2k2)
print("idomatic number of K2 ⊙ K2:", di.value, di.witness)
print("C5 has an idomatic partition:", dom.idomatic_number(fam("C5")) is not None)
