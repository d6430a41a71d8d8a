"""Cut-vertex deletion to reach 2-connected pieces, and maximum fractional
matchings with their (A, C, D) structure."""

from __future__ import annotations

from dataclasses import dataclass

from .detectors import blocks
from .graph import Graph, bits, popcount
from .matching import bipartite_matching


def two_connect_reduce(g: Graph, k: int = 2) -> frozenset[int]:
    """Delete cut vertices one at a time until every component is 2-connected.

    Each round removes the cut vertex whose smallest split-off piece is
    largest, ties to the lowest index. Components with at most two vertices
    are accepted as they are. When ``min degree >= n/k + k`` the result has at
    most ``k - 2`` vertices; ``k`` only documents that bound and does not
    change the procedure.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    alive = g.vertex_mask
    removed: set[int] = set()
    while True:
        members = list(bits(alive))
        cuts = sorted(members[c] for c in blocks(g.induced(members)).cut_vertices)
        if not cuts:
            return frozenset(removed)
        best, best_piece = -1, -1
        for c in cuts:
            pieces = [popcount(comp) for comp in _components(g, alive & ~(1 << c)) if comp & g.rows[c]]
            if min(pieces) > best_piece:
                best, best_piece = c, min(pieces)
        removed.add(best)
        alive &= ~(1 << best)


def _components(g: Graph, mask: int) -> list[int]:
    comps = []
    left = mask
    while left:
        comp = frontier = left & -left
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


@dataclass(frozen=True)
class FractionalMatching:
    """Vertex-disjoint edges and odd cycles (cycles listed in order)."""

    edges: tuple[tuple[int, int], ...]
    odd_cycles: tuple[tuple[int, ...], ...]

    @property
    def covered(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.odd_cycles)

    def vertices(self) -> frozenset[int]:
        out = {v for e in self.edges for v in e}
        out.update(v for c in self.odd_cycles for v in c)
        return frozenset(out)

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen or u == v:
                return False
            seen.update((u, v))
        for cyc in self.odd_cycles:
            if len(cyc) < 3 or len(cyc) % 2 == 0 or seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                return False
            if not all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
                return False
            seen.update(cyc)
        return True


def _double_cover_matching(g: Graph, skip: int = 0) -> list[int]:
    """Max matching of the bipartite double cover of ``g`` minus ``skip``.

    Left copy ``vL`` is joined to ``uR`` for every edge ``uv``.
    """
    keep = g.vertex_mask & ~skip
    left = [g.rows[v] & keep if keep >> v & 1 else 0 for v in range(g.n)]
    return bipartite_matching(left, g.n)


def fractional_cover_number(g: Graph, skip: int = 0) -> int:
    """Vertices covered by a maximum fractional matching of ``g - skip``."""
    return sum(1 for w in _double_cover_matching(g, skip) if w != -1)


def max_fractional_matching(g: Graph) -> FractionalMatching:
    """A maximum fractional matching, rebuilt from a double-cover matching.

    The matched pairs ``vL -> uR`` define a map with in- and out-degree at
    most one, i.e. disjoint directed paths and cycles. Odd cycles of length at
    least 3 are kept; even cycles and paths are cut into edges starting from
    their lowest-index end.
    """
    succ = _double_cover_matching(g)
    pred = [-1] * g.n
    for v, u in enumerate(succ):
        if u != -1:
            pred[u] = v
    edges: list[tuple[int, int]] = []
    odd: list[tuple[int, ...]] = []
    done = [False] * g.n
    for v in range(g.n):
        if done[v] or not _cycle_through(v, succ):
            continue
        cyc = [v]
        while succ[cyc[-1]] != v:
            cyc.append(succ[cyc[-1]])
        for x in cyc:
            done[x] = True
        if len(cyc) == 2:
            edges.append((min(cyc), max(cyc)))
        elif len(cyc) % 2:
            odd.append(tuple(_rotate_min(cyc)))
        else:
            edges.extend(_pair_up(_rotate_min(cyc)))
    for v in range(g.n):
        if done[v] or pred[v] != -1:
            continue
        path = [v]
        while succ[path[-1]] != -1:
            path.append(succ[path[-1]])
        for x in path:
            done[x] = True
        if path[-1] < path[0]:
            path.reverse()
        edges.extend(_pair_up(path))
    edges.sort()
    odd.sort()
    return FractionalMatching(tuple(edges), tuple(odd))


def _cycle_through(v: int, succ: list[int]) -> bool:
    x = succ[v]
    for _ in range(len(succ)):
        if x == -1:
            return False
        if x == v:
            return True
        x = succ[x]
    return False


def _rotate_min(cyc: list[int]) -> list[int]:
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


def _pair_up(seq: list[int]) -> list[tuple[int, int]]:
    return [(min(seq[i], seq[i + 1]), max(seq[i], seq[i + 1])) for i in range(0, len(seq) - 1, 2)]


@dataclass(frozen=True)
class PulleyblankDecomposition:
    """Partition (A, C, D) of V attached to a maximum fractional matching.

    ``p`` is the number of vertices that matching covers. ``D`` holds the
    vertices some maximum fractional matching leaves uncovered, ``A`` their
    outside neighbors, and ``C`` everything else.
    """

    A: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]
    p: int

    def check(self, g: Graph) -> list[str]:
        """Return the list of violated structural properties (empty if none)."""
        problems = []
        if self.A & self.C or self.A & self.D or self.C & self.D:
            problems.append("sets overlap")
        if self.A | self.C | self.D != frozenset(range(g.n)):
            problems.append("sets do not cover V")
        if len(self.D) != len(self.A) + g.n - self.p:
            problems.append("|D| != |A| + |V| - p")
        if 2 * len(self.A) + len(self.C) != self.p:
            problems.append("2|A| + |C| != p")
        if any(g.has_edge(u, v) for u in self.D for v in self.D):
            problems.append("D not independent")
        if any(g.has_edge(u, v) for u in self.C for v in self.D):
            problems.append("edge between C and D")
        if self.D and g.n and len(self.A) < min(g.degree(v) for v in range(g.n)):
            problems.append("|A| < min degree")
        return problems


def pulleyblank_decomposition(g: Graph) -> PulleyblankDecomposition:
    p = fractional_cover_number(g)
    d_mask = 0
    for v in range(g.n):
        if fractional_cover_number(g, 1 << v) == p:
            d_mask |= 1 << v
    a_mask = 0
    for v in bits(d_mask):
        a_mask |= g.rows[v]
    a_mask &= ~d_mask
    c_mask = g.vertex_mask & ~a_mask & ~d_mask
    return PulleyblankDecomposition(
        frozenset(bits(a_mask)), frozenset(bits(c_mask)), frozenset(bits(d_mask)), p
    )
