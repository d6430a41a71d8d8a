"""Dense graphs, red/blue colorings of complete graphs, and target families.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighborhood
intersections and degree counts are single big-int operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighborhood bitmask of ``v``. ``labels`` maps local
    indices back to the vertices of the graph this one was cut out of (the
    identity for freshly built graphs).
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= {self.n}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    # -- construction -------------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...], labels: tuple[int, ...] = ()) -> "Graph":
        # skips validation; callers guarantee symmetric loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "labels", labels or tuple(range(n)))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, k: int) -> "Graph":
        if k < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(k, ((i, (i + 1) % k) for i in range(k)))

    @classmethod
    def wheel(cls, k: int) -> "Graph":
        """W_k with the hub as vertex 0 and the rim ``1..k`` in cycle order."""
        if k == 1:
            return cls.complete(2)
        if k == 2:
            return cls.complete(3)
        rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
        return cls.from_edges(k + 1, rim + [(0, i) for i in range(1, k + 1)])

    @classmethod
    def star(cls, m: int) -> "Graph":
        return cls.from_edges(m + 1, ((0, i) for i in range(1, m + 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._trusted(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def induced(self, vertices: Sequence[int] | int) -> "Graph":
        """Induced subgraph, relabelled ``0..k-1`` in increasing vertex order.

        ``labels`` of the result are composed with this graph's labels, so
        they always point at the outermost original vertices.
        """
        if isinstance(vertices, int):
            keep = list(bits(vertices))
        else:
            keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph._trusted(len(keep), tuple(rows), tuple(self.labels[v] for v in keep))

    def delete(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.rows + tuple(r << shift for r in other.rows))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def neighborhood_subgraph(g: Graph, v: int) -> Graph:
    """G[N(v)]; ``labels`` record the original vertex of each new index."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return g.induced(g.rows[v])


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(min degree, max degree, nondecreasing degree sequence)."""
    seq = sorted(g.degree(v) for v in range(g.n))
    if not seq:
        return 0, 0, []
    return seq[0], seq[-1], seq


# -- colorings ---------------------------------------------------------------


class Color(Enum):
    RED = 1
    BLUE = 2


@dataclass(frozen=True)
class TwoColoring:
    """Red/blue coloring of K_n; blue is whatever red is not."""

    red: Graph

    @property
    def n(self) -> int:
        return self.red.n

    @property
    def blue(self) -> Graph:
        return self.red.complement()

    @classmethod
    def from_blue(cls, blue: Graph) -> "TwoColoring":
        return cls(blue.complement())


def color_class(c: TwoColoring, color: Color | str) -> Graph:
    if isinstance(color, str):
        color = Color[color.upper()]
    return c.red if color is Color.RED else c.blue


# -- target families -----------------------------------------------------------


class Kind(Enum):
    CYCLE = "C"
    WHEEL = "W"
    FAN = "F"
    STAR = "S"
    MATCHING = "M"
    CLIQUE = "K"


_MIN_PARAM = {Kind.CYCLE: 3}


@dataclass(frozen=True)
class FamilySpec:
    """A target graph: C_k, W_k (k+1 vertices), F_k, K_{1,m}, nK_2 or K_n."""

    kind: Kind
    param: int

    def __post_init__(self) -> None:
        lo = _MIN_PARAM.get(self.kind, 1)
        if self.param < lo:
            raise ValueError(f"{self.kind.value}{self.param}: parameter must be >= {lo}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the ``C<k>``/``W<k>``/``F<k>``/``S<m>``/``M<n>``/``K<n>`` DSL.

        ``W<k>`` is the wheel on k+1 vertices (hub plus a k-cycle).
        """
        match = re.fullmatch(r"\s*([CWFSMK])(\d+)\s*", text)
        if not match:
            raise ValueError(
                f"bad family spec {text!r}; expected one of C<k>, W<k>, F<k>, S<m>, M<n>, K<n>"
            )
        return cls(Kind(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.kind.value}{self.param}"

    @property
    def order(self) -> int:
        """Number of vertices of the target graph."""
        k, p = self.kind, self.param
        if k is Kind.CYCLE or k is Kind.CLIQUE:
            return p
        if k is Kind.WHEEL:
            return 2 if p == 1 else 3 if p == 2 else p + 1
        if k is Kind.FAN:
            return 2 * p + 1
        if k is Kind.STAR:
            return p + 1
        return 2 * p

    def graph(self) -> Graph:
        """A concrete copy of the target."""
        k, p = self.kind, self.param
        if k is Kind.CYCLE:
            return Graph.cycle(p)
        if k is Kind.WHEEL:
            return Graph.wheel(p)
        if k is Kind.FAN:
            edges = [(0, i) for i in range(1, 2 * p + 1)]
            edges += [(2 * i + 1, 2 * i + 2) for i in range(p)]
            return Graph.from_edges(2 * p + 1, edges)
        if k is Kind.STAR:
            return Graph.star(p)
        if k is Kind.MATCHING:
            return Graph.from_edges(2 * p, ((2 * i, 2 * i + 1) for i in range(p)))
        return Graph.complete(p)


# -- witness files -----------------------------------------------------------

WITNESS_MAGIC = "ramsey-witness v1"


class WitnessFormatError(ValueError):
    pass


def format_witness(c: TwoColoring, header: Sequence[str] = ()) -> str:
    lines = [WITNESS_MAGIC]
    lines += [f"# {h}" for h in header]
    lines.append(f"vertices {c.n}")
    lines += [f"red {u} {v}" for u, v in c.red.edges()]
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> tuple[TwoColoring, dict[str, str]]:
    """Parse a ``ramsey-witness v1`` document.

    Returns the coloring and any ``# key: value`` header comments.
    """
    lines = text.replace("\r\n", "\n").split("\n")
    if not lines or lines[0].strip() != WITNESS_MAGIC:
        raise WitnessFormatError(f"first line must be {WITNESS_MAGIC!r}")
    meta: dict[str, str] = {}
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, val = body.partition(":")
                meta[key.strip()] = val.strip()
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise WitnessFormatError(f"line {lineno}: duplicate vertices line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise WitnessFormatError(f"line {lineno}: expected 'vertices <N>'")
            n = int(parts[1])
        elif parts[0] == "red":
            if n is None:
                raise WitnessFormatError(f"line {lineno}: edge before 'vertices' line")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise WitnessFormatError(f"line {lineno}: expected 'red <u> <v>'")
            u, v = int(parts[1]), int(parts[2])
            if u == v:
                raise WitnessFormatError(f"line {lineno}: self-loop {u}")
            if u > v:
                raise WitnessFormatError(f"line {lineno}: edges must be written with u < v")
            if u >= n or v >= n:
                raise WitnessFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise WitnessFormatError(f"line {lineno}: duplicate edge {key}")
            seen.add(key)
        else:
            raise WitnessFormatError(f"line {lineno}: unrecognised record {parts[0]!r}")
    if n is None:
        raise WitnessFormatError("missing 'vertices' line")
    return TwoColoring(Graph.from_edges(n, seen)), meta
