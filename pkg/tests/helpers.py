"""Brute-force oracles and generators shared across the suite.

Everything here is deliberately independent of the library internals: the
oracles work on explicit pair sets computed by graph search over cover lists,
never on the bitmask machinery they are checking.
"""

import itertools

from spreadhom import Poset


def closure_pairs(n, covers):
    """All (x, y) with x <= y, by DFS over the cover relation."""
    adj = {i: [] for i in range(n)}
    for a, b in covers:
        adj[a].append(b)
    pairs = set()
    for x in range(n):
        stack = [x]
        seen = {x}
        while stack:
            y = stack.pop()
            pairs.add((x, y))
            for z in adj[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return pairs


def oracle_is_antichain(p, subset):
    leq = closure_pairs(p.n, p.covers)
    return all(
        (x, y) not in leq and (y, x) not in leq
        for x, y in itertools.combinations(subset, 2)
    )


def oracle_is_convex(p, subset):
    leq = closure_pairs(p.n, p.covers)
    s = set(subset)
    for x in s:
        for z in s:
            for y in range(p.n):
                if (x, y) in leq and (y, z) in leq and y not in s:
                    return False
    return True


def oracle_is_connected(p, subset):
    s = set(subset)
    if not s:
        return False
    edges = [(a, b) for a, b in p.covers if a in s and b in s]
    comp = {next(iter(s))}
    grew = True
    while grew:
        grew = False
        for a, b in edges:
            if (a in comp) != (b in comp):
                comp.update((a, b))
                grew = True
    return comp == s


def oracle_connected_convex_subsets(p):
    """All nonempty connected convex subsets, by filtering the power set."""
    out = set()
    for r in range(1, p.n + 1):
        for subset in itertools.combinations(range(p.n), r):
            if oracle_is_convex(p, subset) and oracle_is_connected(p, subset):
                out.add(frozenset(subset))
    return out


def random_poset(rng, n):
    """Random poset on n elements: random DAG in a shuffled linear order,
    then reduce to covers."""
    order = list(range(n))
    rng.shuffle(order)
    rel = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                rel.add((order[i], order[j]))
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    covers = [
        (a, b)
        for a, b in rel
        if not any((a, c) in rel and (c, b) in rel for c in range(n))
    ]
    return Poset(n, covers)


def mask_to_set(mask):
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return out
