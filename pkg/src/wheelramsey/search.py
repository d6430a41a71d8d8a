"""Exhaustive Ramsey search on small complete graphs.

A 2-coloring of K_N is stored as its red graph. Good colorings (no red f1,
no blue f2) are grown one vertex at a time: every good coloring on N vertices
restricts to a good coloring on N-1, so it suffices to extend one
representative per isomorphism class. A new vertex only needs to be checked
for forbidden copies that pass through it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import networkx as nx

from .detectors import BudgetExhausted, contains_family
from .graph import FamilySpec, Graph, TwoColoring

DEFAULT_SEARCH_BUDGET = 10**9
BUDGET_ENV = "RAMSEY_NODE_BUDGET"


def budget_from_env(default: int = DEFAULT_SEARCH_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


class Status(str, Enum):
    RAMSEY_VALUE = "ramsey_value"
    LOWER_BOUND_ONLY = "lower_bound_only"
    EXHAUSTED_BUDGET = "exhausted_budget"


@dataclass
class SearchStats:
    nodes: int = 0
    pruned: int = 0
    isomorphs: int = 0


@dataclass(frozen=True)
class SearchOutcome:
    """``value`` is R(f1, f2) for ``ramsey_value``; otherwise the largest N
    shown to admit a good coloring plus one (a lower bound)."""

    status: Status
    value: int
    witness: TwoColoring | None
    stats: SearchStats
    transcript: tuple[str, ...] = field(default=())


class SearchBudgetExhausted(RuntimeError):
    def __init__(self, n: int, stats: SearchStats):
        super().__init__(f"search budget exhausted while extending to N={n}")
        self.n = n
        self.stats = stats


def _extend(red: Graph, f1: FamilySpec | None, f2: FamilySpec | None) -> tuple[list[Graph], int]:
    """All one-vertex extensions of ``red`` with no forbidden copy through the new vertex."""
    n = red.n
    keep: list[Graph] = []
    rejected = 0
    for nbrs in range(1 << n):
        rows = [r | (1 << n) if nbrs >> v & 1 else r for v, r in enumerate(red.rows)]
        rows.append(nbrs)
        g = Graph(n + 1, tuple(rows))
        if _closes(g, f1, n) or _closes(g.complement(), f2, n):
            rejected += 1
            continue
        keep.append(g)
    return keep, rejected


def _closes(g: Graph, f: FamilySpec | None, v: int) -> bool:
    if f is None:
        return False
    res = contains_family(g, f, through=v)
    if res.exhausted:
        raise BudgetExhausted(f"detector budget exhausted on {f}")
    return res.found


def _extend_job(args: tuple[Graph, FamilySpec | None, FamilySpec | None]) -> tuple[list[Graph], int]:
    return _extend(*args)


class _IsoClasses:
    """Isomorphism-class representatives, bucketed by a WL hash."""

    def __init__(self) -> None:
        self._buckets: dict[str, list[nx.Graph]] = {}
        self.reps: list[Graph] = []
        self.duplicates = 0

    def add(self, g: Graph) -> None:
        h = g.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(h, other):
                self.duplicates += 1
                return
        bucket.append(h)
        self.reps.append(g)


class GoodColoringLevels:
    """Incremental generator of good colorings, one level per vertex count.

    ``f1`` or ``f2`` may be None, in which case that color is unconstrained;
    with both None the levels are all graphs up to isomorphism.
    """

    def __init__(
        self,
        f1: FamilySpec | None,
        f2: FamilySpec | None,
        *,
        budget: int | None = None,
        threads: int = 1,
    ) -> None:
        self.f1, self.f2 = f1, f2
        self.limit = budget_from_env() if budget is None else budget
        self.threads = max(1, threads)
        self.stats = SearchStats()
        self.levels: list[list[Graph]] = [[Graph.empty(0)]]
        self.level_nodes: list[int] = [0]

    def level(self, n: int) -> list[Graph]:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        while len(self.levels) <= n:
            self._grow()
        return self.levels[n]

    def _grow(self) -> None:
        parents = self.levels[-1]
        n_next = len(self.levels)
        cost = len(parents) << (n_next - 1)
        if self.stats.nodes + cost > self.limit:
            raise SearchBudgetExhausted(n_next, self.stats)
        classes = _IsoClasses()
        for children, rejected in self._map(parents):
            self.stats.pruned += rejected
            for g in children:
                classes.add(g)
        self.stats.nodes += cost
        self.stats.isomorphs += classes.duplicates
        self.levels.append(classes.reps)
        self.level_nodes.append(cost)

    def _map(self, parents: list[Graph]) -> Iterable[tuple[list[Graph], int]]:
        jobs = [(p, self.f1, self.f2) for p in parents]
        if self.threads == 1 or len(jobs) < 2:
            return map(_extend_job, jobs)
        # map() keeps input order, so the merged result matches the sequential run
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(_extend_job, jobs, chunksize=max(1, len(jobs) // (4 * self.threads))))


def exists_good_coloring(
    f1: FamilySpec, f2: FamilySpec, n: int, *, budget: int | None = None, threads: int = 1
) -> TwoColoring | None:
    """A coloring of K_n with no red ``f1`` and no blue ``f2``, or None.

    Raises :class:`SearchBudgetExhausted` when the node budget runs out.
    """
    if n < 1:
        raise ValueError("N must be at least 1")
    found = GoodColoringLevels(f1, f2, budget=budget, threads=threads).level(n)
    return TwoColoring(found[0]) if found else None


def ramsey_number(
    f1: FamilySpec, f2: FamilySpec, n_max: int, *, budget: int | None = None, threads: int = 1
) -> SearchOutcome:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    levels = GoodColoringLevels(f1, f2, budget=budget, threads=threads)
    transcript: list[str] = []
    last_good: Graph | None = None
    for n in range(1, n_max + 1):
        try:
            found = levels.level(n)
        except SearchBudgetExhausted:
            transcript.append(f"N={n} status=exhausted nodes={levels.stats.nodes}")
            witness = TwoColoring(last_good) if last_good is not None else None
            return SearchOutcome(Status.EXHAUSTED_BUDGET, n, witness, levels.stats, tuple(transcript))
        transcript.append(f"N={n} status={'found' if found else 'none'} nodes={levels.level_nodes[n]}")
        if not found:
            witness = TwoColoring(last_good) if last_good is not None else None
            return SearchOutcome(Status.RAMSEY_VALUE, n, witness, levels.stats, tuple(transcript))
        last_good = found[0]
    assert last_good is not None
    return SearchOutcome(Status.LOWER_BOUND_ONLY, n_max + 1, TwoColoring(last_good), levels.stats, tuple(transcript))


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on ``n`` vertices."""
    return GoodColoringLevels(None, None).level(n)


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    red_family: FamilySpec
    blue_family: FamilySpec
    red_copy: tuple[int, ...] | None
    blue_copy: tuple[int, ...] | None
    exhausted: bool = False

    def render(self) -> str:
        lines = [f"red {self.red_family}: " + ("absent" if self.red_copy is None else f"FOUND {list(self.red_copy)}")]
        lines.append(
            f"blue {self.blue_family}: " + ("absent" if self.blue_copy is None else f"FOUND {list(self.blue_copy)}")
        )
        if self.exhausted:
            lines.append("search budget exhausted: result not certified")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def verify_witness(
    c: TwoColoring, f1: FamilySpec, f2: FamilySpec, *, budget: int | None = None
) -> VerificationReport:
    """Check that ``c`` has no red ``f1`` and no blue ``f2``."""
    red = contains_family(c.red, f1, budget=budget)
    blue = contains_family(c.blue, f2, budget=budget)
    exhausted = red.exhausted or blue.exhausted
    return VerificationReport(
        passed=not (red.found or blue.found or exhausted),
        red_family=f1,
        blue_family=f2,
        red_copy=tuple(red.witness) if red.found else None,
        blue_copy=tuple(blue.witness) if blue.found else None,
        exhausted=exhausted,
    )


__all__ = [
    "BUDGET_ENV",
    "BudgetExhausted",
    "GoodColoringLevels",
    "SearchBudgetExhausted",
    "SearchOutcome",
    "SearchStats",
    "Status",
    "VerificationReport",
    "all_graphs",
    "exists_good_coloring",
    "ramsey_number",
    "verify_witness",
]
