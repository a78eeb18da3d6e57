"""Metric dimension and the two locating-dominating numbers."""

from coronalab import corona
from coronalab.domination import ld_case_classify, locating_domination_number, location_numbers, domination_number
from coronalab.harness import parse_family


def fam(token):
    return parse_family(token, 7)[1]


# The chain dim <= gamma_ld <= gamma_l-d on a few connected graphs.
for token in ("P4", "C6", "K2,3", "T6"):
    dim, ld, l_d = location_numbers(fam(token))
    print(f"{token}: dim {dim.value} {dim.witness}, gamma_ld {ld.value}, gamma_l-d {l_d.value} {l_d.witness}")

# On coronas the two smaller numbers can differ: in P2 ⊙ K1 = P4 one end
# vertex resolves everything but does not dominate.
dim, ld, _ = location_numbers(corona(fam("P2"), fam("K1"))[0])
print(f"P2 ⊙ K1: dim {dim.value}, gamma_ld {ld.value}")

# The locating-dominating number of G ⊙ H depends on which of two cases H is in.
for h in ("P3", "K2", "K3"):
    case = ld_case_classify(fam(h))
    lh = locating_domination_number(fam(h)).value
    for g in ("P2", "C4"):
        G = fam(g)
        expected = G.n * lh + (domination_number(G).value if case.case == "II" else 0)
        got = locating_domination_number(corona(G, fam(h))[0]).value
        print(f"{g} ⊙ {h}: case {case.case} (evidence {case.evidence}), gamma_l-d = {got}, formula {expected}")
