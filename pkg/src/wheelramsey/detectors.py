"""Exact containment tests: fixed-length cycles, wheels, fans, stars,
matchings, cliques, plus cycle spectra, blocks and bipartitions.

The cycle search is a backtracking DFS over simple paths. Each call is
confined to one block (a cycle never leaves its block), anchored at the least
vertex of the candidate cycle, and pruned by

* a bitset BFS that checks the end of the path can still get back to the
  anchor using exactly the number of vertices left, and
* twin reduction: two unvisited vertices with the same neighborhood are
  interchangeable, so only the lower-indexed one is ever branched on.

Every search carries a node budget. Running out is reported as
``exhausted=True`` rather than as absence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import FamilySpec, Graph, Kind, bits, popcount
from .matching import maximum_matching

DEFAULT_NODE_BUDGET = 10**8


class BudgetExhausted(Exception):
    pass


class Budget:
    """Mutable node counter shared by all sub-searches of one call."""

    def __init__(self, limit: int | None = DEFAULT_NODE_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of a containment query.

    ``witness`` uses original vertex labels: the cycle in order; hub first
    for wheels and fans; center first for stars; a flat ``u0, v0, u1, v1, ...``
    edge list for matchings; the vertex set for cliques.
    """

    found: bool
    witness: tuple[int, ...] | None = None
    exhausted: bool = False
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.found


# -- blocks and bipartiteness -------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[int, ...]  # vertex bitmasks
    cut_vertices: frozenset[int]

    def block_sets(self) -> list[frozenset[int]]:
        return [frozenset(bits(b)) for b in self.blocks]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components and articulation points (iterative Tarjan).

    Isolated vertices are reported as single-vertex blocks; a bridge is a
    two-vertex block.
    """
    n = g.n
    nbrs = [list(bits(r)) for r in g.rows]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    found: list[int] = []
    cuts: set[int] = set()
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        if not nbrs[s]:
            found.append(1 << s)
            continue
        stack = [(s, -1, iter(nbrs[s]))]
        edges: list[tuple[int, int]] = []
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edges.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(nbrs[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edges.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                mask = 0
                while True:
                    a, b = edges.pop()
                    mask |= (1 << a) | (1 << b)
                    if (a, b) == (u, v):
                        break
                found.append(mask)
                if u == s:
                    root_children += 1
                else:
                    cuts.add(u)
        if root_children >= 2:
            cuts.add(s)
    return BlockDecomposition(tuple(found), frozenset(cuts))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    if len(g.components()) != 1:
        return False
    return not blocks(g).cut_vertices


@dataclass(frozen=True)
class Bipartition:
    """Either a proper 2-coloring (``sides``) or an odd cycle certificate."""

    sides: tuple[frozenset[int], frozenset[int]] | None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.sides is not None


def is_bipartite(g: Graph) -> Bipartition:
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        for v in queue:
            for w in bits(g.rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return Bipartition(None, _odd_cycle(parent, v, w))
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition((left, right))


def _odd_cycle(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    on_u = {v: i for i, v in enumerate(path_u)}
    j = 0
    while path_w[j] not in on_u:
        j += 1
    meet = on_u[path_w[j]]
    return tuple(path_u[: meet + 1] + path_w[:j][::-1])


def _is_bipartite_mask(rows: Sequence[int]) -> bool:
    n = len(rows)
    color = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        for v in queue:
            for w in bits(rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


# -- exact-length cycles ------------------------------------------------------


def _lower_twins(rows: Sequence[int]) -> list[int]:
    """For each v, the bitmask of vertices u < v with N(u) - v == N(v) - u."""
    n = len(rows)
    out = [0] * n
    for v in range(n):
        rv = rows[v]
        for u in range(v):
            if rows[u] & ~(1 << v) == rv & ~(1 << u):
                out[v] |= 1 << u
    return out


def _cycle_in_block(
    rows: Sequence[int], ell: int, budget: Budget, through: int | None = None
) -> list[int] | None:
    """Find an ``ell``-cycle in a small graph given by bitmask rows.

    With ``through`` set, only cycles containing that vertex are searched.
    """
    n = len(rows)
    twins = _lower_twins(rows)
    full = (1 << n) - 1

    if through is None:
        anchors = [a for a in range(n) if not twins[a]]
    else:
        anchors = [through]

    for anchor in anchors:
        if through is None:
            allowed = full & ~((1 << (anchor + 1)) - 1)
        else:
            allowed = full & ~(1 << anchor)
        closers = rows[anchor] & allowed
        if popcount(closers) < 2:
            continue
        path = [anchor]

        def reachable(end: int, avail: int, need: int) -> bool:
            # can a path of exactly `need` further vertices from `end` inside
            # `avail` finish on a closer?  (necessary condition only)
            target = closers & avail
            seen = 0
            frontier = 1 << end
            depth = 0
            hit = False
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= rows[x]
                nxt &= avail & ~seen
                if not nxt:
                    break
                depth += 1
                seen |= nxt
                frontier = nxt
                if not hit and nxt & target:
                    if depth > need:
                        return False
                    hit = True
            return hit and popcount(seen) >= need

        def extend(end: int, avail: int) -> bool:
            budget.tick()
            need = ell - len(path)
            cand = rows[end] & avail
            if need == 1:
                cand &= closers
                if cand:
                    path.append((cand & -cand).bit_length() - 1)
                    return True
                return False
            if len(path) > 1 and not reachable(end, avail, need):
                return False
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                if twins[w] & avail:
                    continue
                path.append(w)
                if extend(w, avail & ~low):
                    return True
                path.pop()
            return False

        if extend(anchor, allowed):
            return path
    return None


def has_cycle_of_length(
    g: Graph,
    ell: int,
    *,
    budget: Budget | int | None = None,
    through: int | None = None,
) -> DetectionResult:
    """Decide whether ``g`` contains a cycle on exactly ``ell`` vertices.

    ``through`` restricts the search to cycles containing that vertex.
    """
    if ell < 3:
        raise ValueError("cycle length must be at least 3")
    bud = _as_budget(budget)
    start = bud.used
    if ell > g.n:
        return DetectionResult(False)
    try:
        cyc = _find_cycle(g, ell, bud, through)
    except BudgetExhausted:
        return DetectionResult(False, exhausted=True, nodes=bud.used - start)
    if cyc is None:
        return DetectionResult(False, nodes=bud.used - start)
    return DetectionResult(True, tuple(g.labels[v] for v in cyc), nodes=bud.used - start)


def _as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_NODE_BUDGET if budget is None else budget)


def _find_cycle(g: Graph, ell: int, bud: Budget, through: int | None) -> list[int] | None:
    """Local-index cycle or None; raises BudgetExhausted."""
    for block in blocks(g).blocks:
        if popcount(block) < ell:
            continue
        if through is not None and not block >> through & 1:
            continue
        members = list(bits(block))
        sub = g.induced(members)
        if ell % 2 and _is_bipartite_mask(sub.rows):
            continue
        local_through = None if through is None else members.index(through)
        cyc = _cycle_in_block(sub.rows, ell, bud, local_through)
        if cyc is not None:
            return [members[v] for v in cyc]
    return None


# -- cliques --------------------------------------------------------------


def _find_clique(rows: Sequence[int], size: int, candidates: int) -> list[int] | None:
    """Bron-Kerbosch with pivoting, stopping at the first clique of ``size``."""
    if size <= 0:
        return []

    def expand(r: list[int], p: int, x: int) -> list[int] | None:
        if len(r) >= size:
            return r
        if len(r) + popcount(p) < size:
            return None
        pu = p | x
        pivot = max(bits(pu), key=lambda u: popcount(rows[u] & p)) if pu else None
        todo = p & ~rows[pivot] if pivot is not None else p
        for v in bits(todo):
            got = expand(r + [v], p & rows[v], x & rows[v])
            if got is not None:
                return got
            p &= ~(1 << v)
            x |= 1 << v
        return None

    return expand([], candidates, 0)


# -- family dispatch -------------------------------------------------------------


def contains_family(
    g: Graph,
    f: FamilySpec,
    *,
    budget: Budget | int | None = None,
    through: int | None = None,
) -> DetectionResult:
    """Decide whether ``g`` contains a copy of ``f``.

    With ``through`` set, only copies using that vertex count. Witness
    ordering is described on :class:`DetectionResult`.
    """
    bud = _as_budget(budget)
    start = bud.used
    try:
        wit = _dispatch(g, f, bud, through)
    except BudgetExhausted:
        return DetectionResult(False, exhausted=True, nodes=bud.used - start)
    if wit is None:
        return DetectionResult(False, nodes=bud.used - start)
    return DetectionResult(True, tuple(g.labels[v] for v in wit), nodes=bud.used - start)


def _dispatch(g: Graph, f: FamilySpec, bud: Budget, through: int | None) -> list[int] | None:
    kind, k = f.kind, f.param
    if kind is Kind.CYCLE:
        return _find_cycle(g, k, bud, through) if k <= g.n else None
    if kind is Kind.WHEEL:
        if k == 1:
            return _find_edge(g, through)
        if k == 2:
            return _find_cycle(g, 3, bud, through) if g.n >= 3 else None
        return _find_wheel(g, k, bud, through)
    if kind is Kind.FAN:
        return _find_fan(g, k, through)
    if kind is Kind.STAR:
        return _find_star(g, k, through)
    if kind is Kind.MATCHING:
        picked = _k_matching(g, maximum_matching(g), k, through)
        return None if picked is None else [v for e in picked for v in e]
    return _find_clique_family(g, k, through)


def _k_matching(
    g: Graph, mm: list[tuple[int, int]], k: int, through: int | None
) -> list[tuple[int, int]] | None:
    """k edges of the maximum matching ``mm``, covering ``through`` if given."""
    if len(mm) < k:
        return None
    if through is None:
        return mm[:k]
    hit = [e for e in mm if through in e]
    if not hit:
        # `through` is exposed; every neighbor of it is matched (maximality),
        # so trading that neighbor's edge keeps the size
        nb = g.rows[through]
        i = next((i for i, (a, b) in enumerate(mm) if nb >> a & 1 or nb >> b & 1), None)
        if i is None:
            return None
        a, b = mm[i]
        x = a if nb >> a & 1 else b
        mm = mm[:i] + mm[i + 1 :]
        hit = [(min(through, x), max(through, x))]
    rest = [e for e in mm if through not in e]
    return hit + rest[: k - 1]


def _find_edge(g: Graph, through: int | None) -> list[int] | None:
    verts = range(g.n) if through is None else [through]
    for v in verts:
        if g.rows[v]:
            u = (g.rows[v] & -g.rows[v]).bit_length() - 1
            return [v, u]
    return None


def _find_star(g: Graph, m: int, through: int | None) -> list[int] | None:
    if through is None:
        centers = range(g.n)
    else:
        centers = [through] + list(bits(g.rows[through]))
    for c in centers:
        if g.degree(c) >= m:
            leaves = list(bits(g.rows[c]))
            if through is not None and c != through:
                leaves.remove(through)
                leaves = [through] + leaves
            return [c] + leaves[:m]
    return None


def _hubs(g: Graph, min_degree: int, through: int | None) -> list[int]:
    pool = range(g.n) if through is None else [through] + list(bits(g.rows[through]))
    hubs = [v for v in pool if g.degree(v) >= min_degree]
    hubs.sort(key=lambda v: (-g.degree(v), v))
    return hubs


def _find_wheel(g: Graph, k: int, bud: Budget, through: int | None) -> list[int] | None:
    for hub in _hubs(g, k, through):
        members = list(bits(g.rows[hub]))
        rim_through = None
        if through is not None and hub != through:
            rim_through = members.index(through)
        cyc = _find_cycle(g.induced(members), k, bud, rim_through)
        if cyc is not None:
            return [hub] + [members[v] for v in cyc]
    return None


def _find_fan(g: Graph, k: int, through: int | None) -> list[int] | None:
    for hub in _hubs(g, 2 * k, through):
        members = list(bits(g.rows[hub]))
        sub = g.induced(members)
        local = None
        if through is not None and hub != through:
            local = members.index(through)
        picked = _k_matching(sub, maximum_matching(sub), k, local)
        if picked is not None:
            return [hub] + [members[v] for e in picked for v in e]
    return None


def _find_clique_family(g: Graph, k: int, through: int | None) -> list[int] | None:
    if through is None:
        return _find_clique(g.rows, k, g.vertex_mask)
    got = _find_clique(g.rows, k - 1, g.rows[through])
    return None if got is None else [through] + got


def verify_embedding(g: Graph, f: FamilySpec, witness: Sequence[int]) -> bool:
    """Check that ``witness`` (original labels of ``g``) is a copy of ``f``."""
    index = {lab: i for i, lab in enumerate(g.labels)}
    try:
        w = [index[x] for x in witness]
    except KeyError:
        return False
    kind, k = f.kind, f.param
    adj = g.has_edge
    if kind is Kind.WHEEL and k <= 2:
        kind, k = (Kind.CLIQUE, k + 1)
    if len(w) != f.order or len(set(w)) != len(w):
        return False
    if kind is Kind.CYCLE:
        return all(adj(w[i], w[(i + 1) % k]) for i in range(k))
    if kind is Kind.WHEEL:
        hub, rim = w[0], w[1:]
        return all(adj(hub, x) for x in rim) and all(adj(rim[i], rim[(i + 1) % k]) for i in range(k))
    if kind is Kind.FAN:
        hub, rest = w[0], w[1:]
        return all(adj(hub, x) for x in rest) and all(adj(rest[2 * i], rest[2 * i + 1]) for i in range(k))
    if kind is Kind.STAR:
        return all(adj(w[0], x) for x in w[1:])
    if kind is Kind.MATCHING:
        return all(adj(w[2 * i], w[2 * i + 1]) for i in range(k))
    return all(adj(a, b) for i, a in enumerate(w) for b in w[i + 1 :])


def max_matching(g: Graph) -> int:
    return len(maximum_matching(g))


# -- spectra ---------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSpectrum:
    """Cycle lengths present up to the probed limit.

    ``girth``/``circumference``/``longest_even``/``longest_odd`` are None when
    no qualifying cycle exists within the probed range.
    """

    present: frozenset[int]
    limit: int
    exhausted: frozenset[int] = field(default_factory=frozenset)

    @property
    def girth(self) -> int | None:
        return min(self.present, default=None)

    @property
    def circumference(self) -> int | None:
        return max(self.present, default=None)

    @property
    def longest_even(self) -> int | None:
        return max((x for x in self.present if x % 2 == 0), default=None)

    @property
    def longest_odd(self) -> int | None:
        return max((x for x in self.present if x % 2), default=None)

    def is_pancyclic(self, n: int) -> bool:
        return self.present == frozenset(range(3, n + 1))

    def is_weakly_pancyclic(self) -> bool:
        if not self.present:
            return True
        return self.present == frozenset(range(self.girth, self.circumference + 1))


def cycle_spectrum(g: Graph, ell_max: int | None = None, *, budget: int | None = None) -> CycleSpectrum:
    """Probe every length 3..ell_max (default n) with :func:`has_cycle_of_length`.

    Lengths whose probe ran out of budget are listed in ``exhausted``.
    """
    limit = g.n if ell_max is None else ell_max
    if limit > g.n:
        raise ValueError(f"ell_max={limit} exceeds n={g.n}")
    present, gave_up = set(), set()
    for ell in range(3, limit + 1):
        res = has_cycle_of_length(g, ell, budget=budget)
        if res.found:
            present.add(ell)
        elif res.exhausted:
            gave_up.add(ell)
    return CycleSpectrum(frozenset(present), limit, frozenset(gave_up))
