"""Exact maximum and maximum-weight cliques on bitset adjacency."""


def complement_adj(adj):
    full = (1 << len(adj)) - 1
    return tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(adj))


def _color_sort(adj, cand):
    order = []
    bounds = []
    k = 0
    rest = cand
    while rest:
        k += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            rest &= ~low
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(adj, within=None):
    """Bitmask of a maximum clique, optionally restricted to the vertex mask ``within``."""
    n = len(adj)
    best = [0, 0]

    def expand(clique, size, cand):
        order, bounds = _color_sort(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best[1]:
                return
            v = order[idx]
            bit = 1 << v
            nxt = cand & adj[v]
            if nxt:
                expand(clique | bit, size + 1, nxt)
            elif size + 1 > best[1]:
                best[0], best[1] = clique | bit, size + 1
            cand &= ~bit

    cand = (1 << n) - 1 if within is None else within
    if cand:
        expand(0, 0, cand)
    return best[0]


def max_weight_clique(adj, weights):
    """Maximum total weight clique for non-negative integer weights.

    Returns ``(mask, weight)``. The bound colors the candidates greedily
    and charges each color class its heaviest vertex.
    """
    n = len(adj)
    best = [0, 0]

    def bound_order(cand):
        order = []
        bounds = []
        total = 0
        rest = cand
        while rest:
            q = rest
            heaviest = 0
            members = []
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                rest &= ~low
                members.append(v)
                heaviest = max(heaviest, weights[v])
            total += heaviest
            for v in members:
                order.append(v)
                bounds.append(total)
        return order, bounds

    def expand(clique, weight, cand):
        order, bounds = bound_order(cand)
        for idx in range(len(order) - 1, -1, -1):
            if weight + bounds[idx] <= best[1]:
                return
            v = order[idx]
            bit = 1 << v
            w = weight + weights[v]
            if w > best[1]:
                best[0], best[1] = clique | bit, w
            nxt = cand & adj[v]
            if nxt:
                expand(clique | bit, w, nxt)
            cand &= ~bit

    positive = 0
    for v in range(n):
        if weights[v] > 0:
            positive |= 1 << v
    if positive:
        expand(0, 0, positive)
    return best[0], best[1]
