"""Lower-bound colorings and auxiliary graphs.

Every generator lays out its vertices deterministically (cliques contiguous,
X before Y) so the emitted witness files are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

from .detectors import DetectionResult, contains_family
from .graph import FamilySpec, Graph, Kind, TwoColoring, bits, format_witness


class InfeasibleParameters(ValueError):
    """Raised when a generator is asked for parameters outside its regime."""


# -- building blocks -----------------------------------------------------------


def circulant(size: int, jumps: Sequence[int]) -> Graph:
    edges = {(min(i, (i + j) % size), max(i, (i + j) % size)) for i in range(size) for j in jumps}
    return Graph.from_edges(size, edges)


def _regular_piece(size: int, degree: int) -> Graph:
    """A connected-enough ``degree``-regular circulant on ``size`` vertices."""
    if degree == size - 1:
        return Graph.complete(size)
    jumps = list(range(1, degree // 2 + 1))
    if degree % 2:
        jumps.append(size // 2)
    return circulant(size, jumps)


def regular_bounded_components(n: int, k: int) -> Graph:
    """A (k-1)-regular graph on n vertices whose components have <= 2k-1 vertices.

    Parts are copies of K_k, with the remainder folded into one part of size
    k..2k-1 realized as a circulant. Requires ``n == 0`` or ``n >= k``, and
    ``n`` or ``k - 1`` even.
    """
    d = k - 1
    if d < 0 or d > n:
        raise InfeasibleParameters(f"need 0 <= k-1 <= n, got n={n}, k={k}")
    if n % 2 and d % 2:
        raise InfeasibleParameters(f"no {d}-regular graph on an odd number ({n}) of vertices")
    if n == 0:
        return Graph.empty(0)
    if n < k:
        # k-1 == n: degree n on n vertices is impossible
        raise InfeasibleParameters(f"no {d}-regular graph on {n} vertices")
    sizes = [k] * (n // k)
    rest = n - k * len(sizes)
    if rest:
        sizes[-1] += rest
    g = Graph.empty(0)
    for s in sizes:
        g = g.disjoint_union(_regular_piece(s, d))
    return g


def multipartite_complete(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are laid out contiguously."""
    if any(s < 1 for s in part_sizes):
        raise InfeasibleParameters("every part needs at least one vertex")
    owner = [i for i, s in enumerate(part_sizes) for _ in range(s)]
    n = len(owner)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]))


def _disjoint_cliques(sizes: Sequence[int]) -> Graph:
    g = Graph.empty(0)
    for s in sizes:
        g = g.disjoint_union(Graph.complete(s))
    return g


def _join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of a and b plus every edge between them."""
    g = a.disjoint_union(b)
    left = (1 << a.n) - 1
    right = ((1 << b.n) - 1) << a.n
    rows = tuple(r | (right if v < a.n else left) for v, r in enumerate(g.rows))
    return Graph(g.n, rows)


# -- witness reports ---------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    """A coloring of K_N with no red ``avoided_red`` and no blue ``avoided_blue``.

    ``claimed_bound`` is N + 1, the Ramsey lower bound the coloring proves.
    ``certified`` is filled in by :func:`certify`.
    """

    generator: str
    params: tuple[tuple[str, int], ...]
    coloring: TwoColoring
    avoided_red: FamilySpec
    avoided_blue: FamilySpec
    claimed_bound: int
    certified: bool = False
    red_check: DetectionResult | None = None
    blue_check: DetectionResult | None = None

    def header(self) -> list[str]:
        return [
            f"generator: {self.generator}",
            "params: " + " ".join(f"{k}={v}" for k, v in self.params),
            f"claimed_bound: {self.claimed_bound}",
            f"avoided_red: {self.avoided_red}",
            f"avoided_blue: {self.avoided_blue}",
            f"certified: {'yes' if self.certified else 'no'}",
        ]

    def to_text(self) -> str:
        return format_witness(self.coloring, self.header())


def certify(report: WitnessReport, budget: int | None = None) -> WitnessReport:
    red = contains_family(report.coloring.red, report.avoided_red, budget=budget)
    blue = contains_family(report.coloring.blue, report.avoided_blue, budget=budget)
    ok = not (red.found or red.exhausted or blue.found or blue.exhausted)
    return WitnessReport(
        report.generator,
        report.params,
        report.coloring,
        report.avoided_red,
        report.avoided_blue,
        report.claimed_bound,
        ok,
        red,
        blue,
    )


def _report(name: str, params: dict[str, int], red: Graph, f1: FamilySpec, f2: FamilySpec) -> WitnessReport:
    return WitnessReport(name, tuple(params.items()), TwoColoring(red), f1, f2, red.n + 1)


# -- stars versus wheels -------------------------------------------------------------


def witness_star_wheel(m: int, n: int) -> WitnessReport:
    """No red K_{1,m}, no blue W_2n, on 2m+n-1 vertices (2m+n-2 if m, n even).

    X comes first: inside X the blue graph is (n-1)-regular with components of
    order <= 2n-1; Y is a red clique of order m; X-Y edges are blue.
    """
    if not m >= n >= 2:
        raise InfeasibleParameters(f"star-wheel witness needs m >= n >= 2, got m={m}, n={n}")
    both_even = m % 2 == 0 and n % 2 == 0
    x_size = n + m - 2 if both_even else n + m - 1
    blue_x = regular_bounded_components(x_size, n)
    # red: complement of the blue structure inside X, clique on Y, nothing across
    red = blue_x.complement().disjoint_union(Graph.complete(m))
    return _report(
        "star-wheel", {"m": m, "n": n}, red, FamilySpec(Kind.STAR, m), FamilySpec(Kind.WHEEL, 2 * n)
    )


def mindegree_wheel_graph(n: int, k: int) -> Graph:
    """An n-vertex graph with no W_2k and the largest minimum degree the
    two-part construction allows (X first, then the independent set Y)."""
    if not (k >= 2 and 3 * k < n):
        raise InfeasibleParameters(f"mindegree-wheel graph needs 2 <= k < n/3, got n={n}, k={k}")
    half_floor = (n + k) // 2
    if (k - 1) % 2 == 0 or half_floor % 2 == 0:
        x_size, y_size = half_floor, n - half_floor
    else:
        x_size, y_size = half_floor - 1, n - half_floor + 1
    return _join(regular_bounded_components(x_size, k), Graph.empty(y_size))


def mindegree_wheel_value(n: int, k: int) -> int:
    """Minimum degree of :func:`mindegree_wheel_graph`."""
    half_floor, half_ceil = (n + k) // 2, (n + k + 1) // 2
    if (k - 1) % 2 == 0 or half_floor % 2 == 0:
        return half_ceil - 1
    return half_floor - 1


def witness_mindegree_wheel(n: int, k: int) -> WitnessReport:
    """The graph above as a coloring: blue = G, so red degrees are at most
    n-1-delta and there is no red K_{1, n-delta}."""
    g = mindegree_wheel_graph(n, k)
    delta = min(g.degree(v) for v in range(g.n))
    return _report(
        "mindeg-wheel",
        {"n": n, "k": k},
        g.complement(),
        FamilySpec(Kind.STAR, n - delta),
        FamilySpec(Kind.WHEEL, 2 * k),
    )


# -- even cycles versus wheels, fans and stars --------------------------------------


def witness_cycle_wheel_two_cliques(m: int, n: int) -> WitnessReport:
    """Two red K_{2m-1} joined by blue: no red C_2m, blue is bipartite."""
    if not m >= n >= 2:
        raise InfeasibleParameters(f"cycle-wheel witness needs m >= n >= 2, got m={m}, n={n}")
    red = _disjoint_cliques([2 * m - 1, 2 * m - 1])
    return _report(
        "cycle-wheel", {"m": m, "n": n}, red, FamilySpec(Kind.CYCLE, 2 * m), FamilySpec(Kind.WHEEL, 2 * n)
    )


def witness_cycle_fan_three_cliques(m: int, n: int) -> WitnessReport:
    """Red cliques of orders 2m-1, n-1, n-1 joined by blue; no blue F_n."""
    if not (n <= 2 * m and m < n and m >= 2):
        raise InfeasibleParameters(f"cycle-fan witness needs n/2 <= m < n, got m={m}, n={n}")
    red = _disjoint_cliques([2 * m - 1, n - 1, n - 1])
    return _report(
        "cycle-fan", {"m": m, "n": n}, red, FamilySpec(Kind.CYCLE, 2 * m), FamilySpec(Kind.FAN, n)
    )


@dataclass(frozen=True)
class CycleStarRegime:
    """Where 2m-1 sits against the thresholds (2n-1)/q.

    ``q`` is the integer with (2n-1)/q < 2m-1 <= (2n-1)/(q-1). In sub-case 1,
    (q+1)(2n-1)/q^2 < 2m-1; otherwise sub-case 2 with ``r`` the residue of
    2n-1 mod q taken in 1..q.
    """

    q: int
    subcase: int
    r: int | None


def cycle_star_regime(m: int, n: int) -> CycleStarRegime:
    a, b = 2 * m - 1, 2 * n - 1
    q = b // a + 1
    if Fraction((q + 1) * b, q * q) < a:
        return CycleStarRegime(q, 1, None)
    r = b % q or q
    return CycleStarRegime(q, 2, r)


def witness_cycle_star_cliques(m: int, n: int) -> WitnessReport:
    """Disjoint red cliques (plus an apex in sub-case 2) with blue degrees
    at most 2n-1 and no red C_2m."""
    if not (2 <= m and 2 * m <= n):
        raise InfeasibleParameters(f"cycle-star witness needs 2 <= m <= n/2, got m={m}, n={n}")
    reg = cycle_star_regime(m, n)
    q = reg.q
    if reg.subcase == 1:
        red = _disjoint_cliques([2 * m - 1] * q)
    else:
        c = ceil(Fraction(2 * n - 1, q))
        r = reg.r
        assert r is not None
        big = [c] * r
        small = [c - 1] * (q - r + 1)
        body = _disjoint_cliques(big + small)
        apex = body.n
        small_start = c * r
        edges = body.edges() + [(v, apex) for v in range(small_start, apex)]
        red = Graph.from_edges(apex + 1, edges)
    return _report(
        "cycle-star", {"m": m, "n": n}, red, FamilySpec(Kind.CYCLE, 2 * m), FamilySpec(Kind.STAR, 2 * n)
    )


# -- matchings versus fans -----------------------------------------------------------


def witness_matching_fan(n: int) -> WitnessReport:
    """X of order n-1 and Y of order 2n, red across, blue inside."""
    if n < 2:
        raise InfeasibleParameters(f"matching-fan witness needs n >= 2, got n={n}")
    blue = _disjoint_cliques([n - 1, 2 * n])
    return _report(
        "matching-fan", {"n": n}, blue.complement(), FamilySpec(Kind.MATCHING, n), FamilySpec(Kind.FAN, n)
    )


GENERATORS = {
    "star-wheel": witness_star_wheel,
    "mindeg-wheel": witness_mindegree_wheel,
    "cycle-wheel": witness_cycle_wheel_two_cliques,
    "cycle-fan": witness_cycle_fan_three_cliques,
    "cycle-star": witness_cycle_star_cliques,
    "matching-fan": witness_matching_fan,
}


def component_orders(g: Graph) -> list[int]:
    return sorted(len(list(bits(c))) for c in g.components())


def build_witness(name: str, m: int, n: int) -> WitnessReport:
    """Run generator ``name`` with the command-line parameter convention.

    ``n`` is always the wheel/fan/star-side parameter. For ``matching-fan``
    only ``n`` is used; for ``mindeg-wheel`` ``m`` is the number of vertices
    and ``n`` plays the role of k in W_2k.
    """
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
    if name == "matching-fan":
        return witness_matching_fan(n)
    return GENERATORS[name](m, n)
