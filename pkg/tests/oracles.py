"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from wheelramsey.graph import Graph


def naive_has_cycle(g: Graph, ell: int) -> bool:
    for subset in combinations(range(g.n), ell):
        first, rest = subset[0], subset[1:]
        for order in permutations(rest):
            if order and order[0] > order[-1]:
                continue
            walk = (first,) + order
            if all(g.has_edge(walk[i], walk[(i + 1) % ell]) for i in range(ell)):
                return True
    return False


def naive_matching_number(g: Graph) -> int:
    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        for u in range(g.n):
            if rest >> u & 1 and g.has_edge(u, v):
                top = max(top, 1 + best(rest & ~(1 << u)))
        return top

    return best((1 << g.n) - 1)


def is_isomorphic_to(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return any(
        all(h.has_edge(p[u], p[v]) for u, v in g.edges()) for p in permutations(range(g.n))
    )
