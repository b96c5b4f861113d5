"""The edge cover game: coalition costs, stability checkers, the
dual-based allocation with its guaranteed fraction of the grand cost, the
per-instance integrality gap, and odd-set membership verification.

Players are vertices; a coalition pays the cheapest edge set covering its
members, drawn from the edges inside it or crossing its boundary. An
allocation has the core property when no coalition is charged more than
its own cost, which for this game is equivalent to feasibility for the
dual packing LP."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .covers import EdgeVector, is_feasible_cover, is_half_integral, min_edge_cover_exact
from .errors import CapExceededError
from .graphs import Edge, WeightedGraph, edge_key, shortest_odd_cycle
from .lp import dual_packing_lp, fractional_cover_lp, solve
from .rationals import parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)

Allocation = tuple[Fraction, ...]


def _validated_allocation(g: WeightedGraph, allocation: Sequence[Fraction]) -> Allocation:
    values = tuple(Fraction(v) for v in allocation)
    if len(values) != g.vertex_count:
        raise ValueError(
            f"allocation must assign a value to every vertex "
            f"(expected {g.vertex_count}, got {len(values)})"
        )
    for v, value in enumerate(values):
        if value < 0:
            raise ValueError(f"allocation for vertex {v} is negative")
    return values


def parse_allocation(text: str, vertex_count: int) -> Allocation:
    """Parse an allocation file: one "v p/q" line per vertex, any order;
    "#" comment lines and blank lines are ignored."""
    values: dict[int, Fraction] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {line_no}: expected 'vertex value'")
        try:
            v = int(parts[0])
        except ValueError:
            raise ValueError(f"line {line_no}: bad vertex id {parts[0]!r}") from None
        if not 0 <= v < vertex_count:
            raise ValueError(f"line {line_no}: vertex {v} is out of range")
        if v in values:
            raise ValueError(f"line {line_no}: vertex {v} appears twice")
        try:
            value = parse_rational(parts[1])
        except ValueError:
            raise ValueError(f"line {line_no}: bad rational {parts[1]!r}") from None
        if value < 0:
            raise ValueError(f"line {line_no}: negative allocation for vertex {v}")
        values[v] = value
    for v in range(vertex_count):
        if v not in values:
            raise ValueError(f"missing allocation for vertex {v}")
    return tuple(values[v] for v in range(vertex_count))


def coalition_cost(
    g: WeightedGraph,
    members: Iterable[int],
    *,
    max_candidate_edges: int = 24,
) -> Fraction:
    """c(S): the minimum weight of an edge set covering the coalition."""
    return min_edge_cover_exact(g, members, max_candidate_edges=max_candidate_edges).weight


def check_core_dual(
    g: WeightedGraph, allocation: Sequence[Fraction]
) -> tuple[bool, Edge | None]:
    """Core property via dual feasibility: a_u + a_v <= w_uv on every edge."""
    a = _validated_allocation(g, allocation)
    for u, v in g.edges:
        if a[u] + a[v] > g.weight(u, v):
            return False, (u, v)
    return True, None


def check_core_stars(
    g: WeightedGraph, allocation: Sequence[Fraction]
) -> tuple[bool, tuple[int, frozenset[int]] | None]:
    """Core property via star inequalities: a(T + v) <= w(delta(v, T)) for
    every center v and nonempty neighbor set T.

    Only the worst star per center needs checking: the slack of (v, T) is
    a_v plus the sum of the margins a_u - w_uv over T, which is maximized
    by taking exactly the neighbors with positive margin, or the single
    best neighbor when no margin is positive (T must be nonempty).
    """
    a = _validated_allocation(g, allocation)
    for v in range(g.vertex_count):
        margins = [(a[u] - g.weight(u, v), u) for u in g.neighbors(v)]
        members = [u for margin, u in margins if margin > 0]
        if not members:
            members = [max(margins, key=lambda t: (t[0], -t[1]))[1]]
        total = a[v] + sum(a[u] for u in members)
        capacity = sum(g.weight(u, v) for u in members)
        if total > capacity:
            return False, (v, frozenset(members))
    return True, None


@dataclass(frozen=True)
class AllocationReport:
    """A stable allocation with its guaranteed and achieved fractions of
    the grand coalition cost; cost fields are None when the exact cover
    solver cap was exceeded."""

    allocation: Allocation
    alpha: Fraction
    total: Fraction
    grand_cost: Fraction | None
    ratio: Fraction | None


def allocate_alpha_core(
    g: WeightedGraph, *, max_candidate_edges: int = 24
) -> AllocationReport:
    """Allocation from an optimal dual packing solution.

    Dual feasibility gives the core property coalition by coalition, and
    the total equals the fractional covering optimum, which is at least
    ell/(ell+1) of the integral grand cost because the integrality gap is
    1 + 1/ell (ell the shortest odd cycle length); on bipartite graphs the
    total matches the grand cost exactly. All of that is asserted, not
    assumed.
    """
    dual = solve(dual_packing_lp(g))
    if dual.status != "optimal":
        raise RuntimeError(f"dual packing LP ended with status {dual.status}")
    allocation = dual.values
    total = dual.objective_value
    primal = solve(fractional_cover_lp(g))
    if primal.objective_value != total:
        raise RuntimeError("dual total does not match the fractional covering optimum")
    feasible, bad_edge = check_core_dual(g, allocation)
    if not feasible:
        raise RuntimeError(f"dual solution violates its own constraint on edge {bad_edge}")

    ell = shortest_odd_cycle(g).length
    alpha = ONE if ell is None else Fraction(ell, ell + 1)

    try:
        grand = coalition_cost(g, g.vertices(), max_candidate_edges=max_candidate_edges)
    except CapExceededError:
        grand = None
    ratio = None
    if grand is not None:
        if total < alpha * grand:
            raise RuntimeError("allocation misses the guaranteed fraction of the grand cost")
        if ell is None and total != grand:
            raise RuntimeError("bipartite allocation total must equal the grand cost")
        if grand:
            ratio = total / grand
    return AllocationReport(allocation, alpha, total, grand, ratio)


@dataclass(frozen=True)
class GapReport:
    """Integrality gap of the covering relaxation on one graph.

    rho = 1 + 1/ell where ell is the shortest odd cycle length, or 1 on
    bipartite graphs. The witness weighting puts unit weights on one
    shortest odd cycle, the instance family along which the gap is
    attained."""

    ell: int | None
    rho: Fraction
    cycle: tuple[int, ...] | None
    witness_weights: dict[Edge, Fraction] | None


def integrality_gap(g: WeightedGraph) -> GapReport:
    report = shortest_odd_cycle(g)
    if report.length is None:
        return GapReport(None, ONE, None, None)
    assert report.witness is not None
    cycle_edges = {edge_key(a, b) for a, b in zip(report.witness, report.witness[1:])}
    weights = {e: (ONE if e in cycle_edges else ZERO) for e in g.edges}
    return GapReport(report.length, ONE + Fraction(1, report.length), report.witness, weights)


def verify_scaled_cover_membership(
    g: WeightedGraph,
    values: EdgeVector,
    *,
    scale: Fraction | None = None,
    max_vertices: int = 14,
) -> tuple[bool, frozenset[int] | None]:
    """Check the scaled cover against every odd-set constraint.

    For each odd-cardinality vertex set U the edges touching U must carry
    scaled total at least ceil(|U|/2). The default scale is 1 + 1/ell (1 on
    bipartite graphs); pass ``scale`` explicitly to test a raw vector.
    Returns the first violated U in mask order, if any.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise CapExceededError(f"{n} vertices exceed the odd-set enumeration cap of {max_vertices}")
    x = {e: Fraction(v) for e, v in values.items()}
    if set(x) != set(g.edges):
        raise ValueError("vector must assign a value to every edge of the graph")
    if not is_half_integral(x):
        raise ValueError("vector is not half-integral")
    if not is_feasible_cover(g, x):
        raise ValueError("vector is not a feasible cover")
    if scale is None:
        ell = shortest_odd_cycle(g).length
        scale = ONE if ell is None else ONE + Fraction(1, ell)

    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    edge_values = [x[e] for e in g.edges]
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size % 2 == 0:
            continue
        touching = sum(
            value for value, emask in zip(edge_values, edge_masks) if mask & emask
        )
        if scale * touching < (size + 1) // 2:
            return False, frozenset(v for v in range(n) if mask >> v & 1)
    return True, None


def exact_best_ratio(
    g: WeightedGraph, *, max_candidate_edges: int = 24
) -> Fraction:
    """Largest alpha for which this instance admits a stable allocation
    covering alpha of the grand cost: fractional optimum over c(V)."""
    fractional = solve(fractional_cover_lp(g)).objective_value
    grand = coalition_cost(g, g.vertices(), max_candidate_edges=max_candidate_edges)
    if grand == 0:
        raise ValueError("grand coalition cost is zero; the ratio is undefined")
    return fractional / grand
