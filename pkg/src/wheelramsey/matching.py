"""Maximum cardinality matchings.

General graphs use Edmonds' augmenting-path search with blossom contraction
(the O(n^3) formulation that tracks blossom bases instead of contracting
explicitly). Bipartite graphs given as left-side bitmask rows use plain
augmenting paths.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, bits


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Return a maximum matching of ``g`` as sorted ``(u, v)`` pairs, ``u < v``."""
    n = g.n
    adj = [list(bits(r)) for r in g.rows]
    mate = [-1] * n

    # greedy start; the search below only has to fix what greedy got wrong
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] == -1:
            _augment_from(root, adj, mate)

    return sorted((v, mate[v]) for v in range(n) if mate[v] > v)


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    # flip the alternating path ending at the free vertex `to`
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def bipartite_matching(left_rows: Sequence[int], n_right: int) -> list[int]:
    """Maximum matching of a bipartite graph.

    ``left_rows[i]`` is the bitmask of right vertices adjacent to left vertex
    ``i``. Returns ``match_left`` with the matched right vertex or -1.
    """
    match_right = [-1] * n_right
    match_left = [-1] * len(left_rows)

    def try_augment(u: int, visited: list[bool]) -> bool:
        for w in bits(left_rows[u]):
            if visited[w]:
                continue
            visited[w] = True
            if match_right[w] == -1 or try_augment(match_right[w], visited):
                match_right[w] = u
                match_left[u] = w
                return True
        return False

    for u in range(len(left_rows)):
        # cheap free-neighbor pass before the full search
        free = left_rows[u]
        for w in bits(free):
            if match_right[w] == -1:
                match_right[w], match_left[u] = u, w
                break
        else:
            try_augment(u, [False] * n_right)
    return match_left
