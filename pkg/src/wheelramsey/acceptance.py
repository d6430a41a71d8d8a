"""The end-to-end acceptance checks, shared by ``selftest`` and the test suite.

Each check returns a :class:`CriterionResult`; none of them raise on a
mathematical mismatch, so a failing criterion is reported, not hidden.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .constructions import (
    GENERATORS,
    InfeasibleParameters,
    build_witness,
    certify,
    component_orders,
    multipartite_complete,
    regular_bounded_components,
)
from .decompositions import pulleyblank_decomposition, two_connect_reduce
from .detectors import contains_family, cycle_spectrum, is_two_connected
from .formulas import (
    cycle_star_ratio,
    cycle_star_value,
    cycle_wheel_bounds,
    cycle_wheel_ratio,
    continuity_defects,
    even_wheel_diag_bounds,
    figure_csv,
    odd_star_wheel_value,
    odd_wheel_diag_bounds,
    star_wheel_value,
)
from .graph import FamilySpec, Graph, Kind, bits, parse_witness, popcount
from .search import all_graphs, ramsey_number, verify_witness

SEED = 20240611


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.title} ({self.seconds:.1f}s): {self.detail}"


def _timed(number: int, title: str, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0)


# -- 1 ----------------------------------------------------------------------------


def witness_instances(n_max: int = 8, m_max: int = 12) -> Iterator[tuple[str, int, int]]:
    """Every (generator, m, n) in the grid the generator accepts."""
    for name in GENERATORS:
        for n in range(1, n_max + 1):
            for m in range(1, m_max + 1):
                if name == "matching-fan" and m != 1:
                    continue
                try:
                    build_witness(name, m, n)
                except InfeasibleParameters:
                    continue
                yield name, m, n


def check_witness_sweep() -> CriterionResult:
    def body() -> tuple[bool, str]:
        count, bad = 0, []
        for name, m, n in witness_instances():
            report = certify(build_witness(name, m, n))
            # round-trip through the file format, then verify independently
            coloring, meta = parse_witness(report.to_text())
            f1, f2 = FamilySpec.parse(meta["avoided_red"]), FamilySpec.parse(meta["avoided_blue"])
            verdict = verify_witness(coloring, f1, f2)
            count += 1
            if not (report.certified and verdict.passed and int(meta["claimed_bound"]) == coloring.n + 1):
                bad.append((name, m, n))
        ok = count >= 60 and not bad
        return ok, f"{count} instances, {len(bad)} uncertified {bad[:5]}"

    return _timed(1, "witness certification sweep", body)


# -- 2 ----------------------------------------------------------------------------

ORACLE_TARGETS = (
    ("C6", "C4", 7),
    ("C6", "C6", 8),
    ("C4", "C4", 6),
    ("M2", "F2", 6),
    ("M3", "F3", 9),
    ("S2", "W6", 7),
)


def check_oracle_values(budget: int = 10**9) -> CriterionResult:
    def body() -> tuple[bool, str]:
        got = []
        ok = True
        for a, b, expected in ORACLE_TARGETS:
            out = ramsey_number(FamilySpec.parse(a), FamilySpec.parse(b), 12, budget=budget)
            got.append(f"R({a},{b})={out.value}")
            ok &= out.status.value == "ramsey_value" and out.value == expected
        return ok, ", ".join(got)

    return _timed(2, "oracle exact values", body)


# -- 3 ----------------------------------------------------------------------------


def regular_feasible(n: int, k: int) -> bool:
    """Stated hypothesis (0 <= k-1 <= n, n or k-1 even) minus the case
    n = k-1 > 0, where no graph on n vertices has degree n."""
    d = k - 1
    if not 0 <= d <= n or (n % 2 and d % 2):
        return False
    return n == 0 or n >= k


def check_regular_components(n_max: int = 60) -> CriterionResult:
    def body() -> tuple[bool, str]:
        built, bad = 0, []
        for n in range(0, n_max + 1):
            for k in range(1, n_max + 2):
                if not regular_feasible(n, k):
                    try:
                        regular_bounded_components(n, k)
                        bad.append(("accepted infeasible", n, k))
                    except InfeasibleParameters:
                        pass
                    continue
                g = regular_bounded_components(n, k)
                built += 1
                if g.n != n or any(g.degree(v) != k - 1 for v in range(n)):
                    bad.append(("not regular", n, k))
                elif any(size > 2 * k - 1 for size in component_orders(g)):
                    bad.append(("component too large", n, k))
        return not bad, f"{built} feasible (n, k) built, {len(bad)} problems {bad[:3]}"

    return _timed(3, "bounded-component regular graphs", body)


# -- 4 ----------------------------------------------------------------------------


def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into non-increasing positive parts."""
    if total == 0:
        yield ()
        return
    top = total if largest is None else min(largest, total)
    for first in range(top, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def expected_multipartite_spectrum(parts: tuple[int, ...]) -> frozenset[int]:
    total, big, t = sum(parts), max(parts), len(parts)
    if t == 2:
        return frozenset(range(4, 2 * min(parts) + 1, 2))
    if 2 * big <= total:
        return frozenset(range(3, total + 1))
    return frozenset(range(3, 2 * (total - big) + 1))


def check_multipartite_spectra(total_max: int = 14) -> CriterionResult:
    def body() -> tuple[bool, str]:
        tested, bad = 0, []
        for total in range(2, total_max + 1):
            for parts in partitions(total):
                if len(parts) < 2:
                    continue
                spec = cycle_spectrum(multipartite_complete(parts))
                tested += 1
                if spec.exhausted or spec.present != expected_multipartite_spectrum(parts):
                    bad.append(parts)
                elif len(parts) >= 3 and 2 * max(parts) <= total and not spec.is_pancyclic(total):
                    bad.append(parts)
        return not bad, f"{tested} part-size vectors, {len(bad)} mismatches {bad[:3]}"

    return _timed(4, "complete multipartite cycle spectra", body)


# -- 5 ----------------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def brute_fractional_cover(g: Graph) -> int:
    """Largest number of vertices covered by disjoint edges and odd cycles.

    Odd cycles are found as vertex sets carrying a Hamiltonian cycle, by a
    subset dynamic program independent of the cycle detectors.
    """
    n = g.n
    full = (1 << n) - 1
    # ends[S]: vertices v such that a path from min(S) to v uses exactly S
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    odd_sets: list[int] = []
    for s in range(1, 1 << n):
        e = ends[s]
        if not e:
            continue
        low = (s & -s).bit_length() - 1
        size = popcount(s)
        if size >= 3 and size % 2 and any(g.rows[v] >> low & 1 for v in bits(e)):
            odd_sets.append(s)
        reach = 0
        for v in bits(e):
            reach |= g.rows[v]
        # only extend by vertices above the anchor, so min(S) stays the anchor
        for w in bits(reach & ~s & (full ^ ((1 << (low + 1)) - 1))):
            ends[s | 1 << w] |= 1 << w

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        for u in bits(g.rows[v] & rest):
            top = max(top, 2 + best(rest & ~(1 << u)))
        for s in odd_sets:
            if s >> v & 1 and s & mask == s:
                top = max(top, popcount(s) + best(mask & ~s))
        return top

    return best(full)


def check_fractional_decomposition(samples: int = 1000, seed: int = SEED) -> CriterionResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed)
        bad, oracle_checked, nonempty_d = [], 0, 0
        for i in range(samples):
            n = rng.randint(1, 12)
            g = random_graph(rng, n, rng.uniform(0.05, 0.9))
            dec = pulleyblank_decomposition(g)
            problems = dec.check(g)
            if dec.D:
                nonempty_d += 1
            if n <= 10:
                oracle_checked += 1
                if brute_fractional_cover(g) != dec.p:
                    problems.append("p disagrees with exhaustive enumeration")
            if problems:
                bad.append((i, problems))
        return not bad, (
            f"{samples} graphs, {oracle_checked} oracle-checked, {nonempty_d} with D nonempty, "
            f"{len(bad)} failures {bad[:2]}"
        )

    return _timed(5, "fractional matching (A, C, D) decomposition", body)


# -- 6 ----------------------------------------------------------------------------


def glued_clusters(rng: random.Random, k: int) -> Graph:
    """Dense random clusters chained through connector vertices.

    Connectors only see their two neighboring clusters, so they are cut
    vertices unless random cross edges happen to bridge the clusters.
    """
    n = rng.randint(8, 40)
    t = rng.randint(1, k - 1) if rng.random() < 0.2 else k - 1
    body_size = n - (t - 1)
    # near-equal cluster sizes so the degree condition can hold with t > 1
    sizes = [body_size // t + (1 if i < body_size % t else 0) for i in range(t)]
    edges: set[tuple[int, int]] = set()
    starts = []
    pos = 0
    p = rng.uniform(0.85, 1.0)
    for s in sizes:
        starts.append(pos)
        for u in range(pos, pos + s):
            for v in range(u + 1, pos + s):
                if rng.random() < p:
                    edges.add((u, v))
        pos += s
    for i in range(t - 1):
        c = pos + i
        for j in (i, i + 1):
            members = range(starts[j], starts[j] + sizes[j])
            for u in members:
                if rng.random() < 0.9:
                    edges.add((u, c))
    if rng.random() < 0.1:
        for _ in range(rng.randint(1, 3)):
            u, v = rng.sample(range(body_size), 2)
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def min_degree_ok(g: Graph, k: int) -> bool:
    if g.n == 0:
        return False
    delta = min(g.degree(v) for v in range(g.n))
    return delta >= Fraction(g.n, k) + k


def check_cut_vertex_reduction(samples: int = 500, seed: int = SEED) -> CriterionResult:
    def body() -> tuple[bool, str]:
        rng = random.Random(seed)
        bad, with_cuts, tried = [], 0, 0
        accepted = 0
        while accepted < samples:
            k = (3, 4, 5)[accepted % 3]
            tried += 1
            g = glued_clusters(rng, k)
            if not min_degree_ok(g, k):
                continue
            accepted += 1
            removed = two_connect_reduce(g, k)
            if removed:
                with_cuts += 1
            rest = g.delete(removed)
            parts_ok = all(is_two_connected(rest.induced(c)) for c in rest.components())
            if len(removed) > k - 2 or not parts_ok:
                bad.append((g.n, k, sorted(removed)))
        return not bad, (
            f"{samples} graphs ({tried} generated), {with_cuts} needed deletions, {len(bad)} failures {bad[:2]}"
        )

    return _timed(6, "cut-vertex deletion to 2-connected pieces", body)


# -- 7 ----------------------------------------------------------------------------


def check_figure_curves(n: int = 5040, steps: int = 100) -> CriterionResult:
    def body() -> tuple[bool, str]:
        defects = continuity_defects(cycle_wheel_ratio) + continuity_defects(cycle_star_ratio)
        rows = list(csv.reader(io.StringIO(figure_csv(1, n, steps))))
        header, data = rows[0], rows[1:]
        xs = [Fraction(r[0]) for r in data]
        ys = [Fraction(r[1]) for r in data]
        increasing_x = all(a < b for a, b in zip(xs, xs[1:]))
        # read right to left: the curve falls as m shrinks and stays above 2
        monotone = all(a <= b for a, b in zip(ys, ys[1:]))
        near_two = 2 < ys[0] < Fraction(21, 10) and all(y > 2 for y in ys)
        ok = not defects and header == ["m_over_n", "leading_coeff_over_n"] and increasing_x and monotone and near_two
        return ok, (
            f"{len(defects)} discontinuities for q <= 50; {len(data)} CSV rows, monotone={monotone}, "
            f"smallest m/n={xs[0]} gives {ys[0]}"
        )

    return _timed(7, "piecewise curves: continuity and sweep shape", body)


# -- 8 ----------------------------------------------------------------------------


def chain_violations(grid: int = 100, diag: int = 10**4) -> tuple[list[str], int]:
    """Inequalities among concrete bounds that fail, plus a count of points
    where the star lower bound beats the wheel lower bound (allowed)."""
    bad: list[str] = []
    for n in range(2, diag + 1):
        star = star_wheel_value(2 * n, n)
        wheel = even_wheel_diag_bounds(n)
        cyc = cycle_wheel_bounds(n, n)
        if not (star.lower <= wheel.upper <= 2 * cyc.upper):
            bad.append(f"even sandwich n={n}")
        if not (wheel.lower <= wheel.upper and star.lower <= wheel.upper):
            bad.append(f"even diagonal n={n}")
    for n in range(1, grid + 1):
        if not (odd_star_wheel_value(2 * n + 1, n).lower <= odd_wheel_diag_bounds(n).upper):
            bad.append(f"odd sandwich n={n}")
    stronger_star = 0
    for m in range(2, grid + 1):
        for n in range(2, grid + 1):
            star = cycle_star_value(m, n)
            wheel = cycle_wheel_bounds(m, n)
            if wheel.upper is not None and star.lower is not None and star.lower > wheel.upper:
                bad.append(f"cycle chain m={m} n={n}")
            if star.value is not None and wheel.value is not None and star.value > wheel.value:
                bad.append(f"cycle chain exact m={m} n={n}")
            if star.lower is not None and wheel.lower is not None and star.lower > wheel.lower:
                stronger_star += 1
    return bad, stronger_star


def check_chain_consistency() -> CriterionResult:
    def body() -> tuple[bool, str]:
        bad, stronger = chain_violations()
        return not bad, (
            f"{len(bad)} violated inequalities {bad[:3]}; "
            f"{stronger} grid points where the star lower bound exceeds the wheel lower bound"
        )

    return _timed(8, "sandwich and chain consistency", body)


# -- 9 ----------------------------------------------------------------------------


def min_degree_forces(graphs: list[Graph], min_deg: int, target: FamilySpec) -> bool:
    return all(contains_family(g, target).found for g in graphs if g.n and min(map(g.degree, range(g.n))) >= min_deg)


def check_degree_duality(n_max: int = 7, m_max: int = 6, k_max: int = 3) -> CriterionResult:
    def body() -> tuple[bool, str]:
        graphs = {n: all_graphs(n) for n in range(1, n_max + 1)}
        bad, relevant, formula_checked = [], 0, 0
        for m in range(1, m_max + 1):
            for k in range(1, k_max + 1):
                star, wheel = FamilySpec(Kind.STAR, m), FamilySpec(Kind.WHEEL, 2 * k)
                out = ramsey_number(star, wheel, n_max)
                value = out.value if out.status.value == "ramsey_value" else None
                if value is not None:
                    relevant += 1
                    if k >= 2 and m <= k:
                        formula_checked += 1
                        if star_wheel_value(m, k).value != value:
                            bad.append(f"formula R(S{m},W{2 * k})")
                for n in range(1, n_max + 1):
                    forced = min_degree_forces(graphs[n], n - m, wheel)
                    if forced != (value is not None and value <= n):
                        bad.append(f"m={m} k={k} N={n}")
        return not bad, (
            f"{relevant} pairs with value <= {n_max}, {formula_checked} also matched the formula, "
            f"{len(bad)} disagreements {bad[:3]}"
        )

    return _timed(9, "minimum degree / star-wheel duality", body)


CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    check_witness_sweep,
    check_oracle_values,
    check_regular_components,
    check_multipartite_spectra,
    check_fractional_decomposition,
    check_cut_vertex_reduction,
    check_figure_curves,
    check_chain_consistency,
    check_degree_duality,
)


def run_all(echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for check in CRITERIA:
        res = check()
        results.append(res)
        if echo is not None:
            echo(res.line())
    return results


__all__ = ["CRITERIA", "CriterionResult", "brute_fractional_cover", "partitions", "run_all"]
