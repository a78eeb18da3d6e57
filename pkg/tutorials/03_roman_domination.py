"""Roman domination: exact values, witnesses and the b2max statistic."""

from coronalab import corona
from coronalab.domination import construct_corona_witness, domination_number, roman_domination
from coronalab.harness import parse_family


def fam(token):
    return parse_family(token, 7)[1]


# gamma_R with an optimal assignment; b2max is the largest number of 2s
# among ALL minimum-weight Roman functions, found by enumeration.
for token in ("P3", "P4", "C5", "K1,3"):
    res, b2max = roman_domination(fam(token))
    f = res.witness
    print(f"gamma_R({token}) = {res.value}  f = {f.values}  (b0, b1, b2) = ({f.b0}, {f.b1}, {f.b2})  b2max = {b2max}")

# With n2 >= 2 every center takes a 2 and the rest 0: gamma_R(G ⊙ H) = 2 n1.
for g, h in [("C4", "K2"), ("P3", "P3")]:
    cg, _ = corona(fam(g), fam(h))
    res, _ = roman_domination(cg, with_b2max=False)
    print(f"gamma_R({g} ⊙ {h}) = {res.value} = 2 * {fam(g).n}")

# For H = K1 the value is gamma_R(G) + n - b2max(G); the library builds
# the corresponding assignment and checks it against that value.
for token in ("P3", "P4", "C6"):
    w = construct_corona_witness("roman-k1", fam(token), fam("K1"))
    cg, _ = corona(fam(token), fam("K1"))
    exact = roman_domination(cg, with_b2max=False)[0].value
    gamma = domination_number(cg).value
    print(f"{token} ⊙ K1: constructed weight {w.value}, exact {exact}, gamma {gamma} <= gamma_R <= {2 * gamma}")
