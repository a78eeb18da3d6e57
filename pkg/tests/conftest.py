import pytest

from coronalab.harness import parse_family


def fam(token, seed=7):
    """Graph for a family token such as P4, C6, K1,3 or N2."""
    return parse_family(token, seed)[1]


@pytest.fixture
def graph_of():
    return fam


def small_instances(max_n=9):
    """Default-family graphs and coronas with at most ``max_n`` vertices, as (name, graph)."""
    from coronalab import corona
    from coronalab.harness import DEFAULT_G, DEFAULT_H

    out, seen = [], set()
    for tok in DEFAULT_G + DEFAULT_H:
        g = fam(tok)
        if g.n <= max_n and tok not in seen:
            seen.add(tok)
            out.append((tok, g))
    for gt in DEFAULT_G:
        for ht in DEFAULT_H:
            g, h = fam(gt), fam(ht)
            if g.n * (1 + h.n) <= max_n:
                out.append((f"{gt}⊙{ht}", corona(g, h)[0]))
    return out
