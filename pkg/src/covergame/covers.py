"""Minimum-weight edge covers: exact integral search, the bipartite LP
route, half-integral covers through the doubling construction, and the
rounding that leaves only vertex-disjoint odd cycles fractional."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import CapExceededError
from .graphs import (
    DoubledGraph,
    Edge,
    WeightedGraph,
    boundary,
    coalition,
    double_graph,
    edge_key,
    edges_within,
    is_bipartite,
)
from .lp import dual_packing_lp, fractional_cover_lp, solve
from .rationals import format_rational

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

EdgeVector = dict[Edge, Fraction]


@dataclass(frozen=True)
class CoverCertificate:
    """An edge cover with its exact weight and, when available, a dual
    allocation of equal total certifying optimality."""

    kind: str  # "integral" | "half-integral" | "fractional"
    values: EdgeVector
    weight: Fraction
    dual_witness: tuple[Fraction, ...] | None = None

    def nonzero_entries(self) -> list[tuple[Edge, Fraction]]:
        return [(e, x) for e, x in sorted(self.values.items()) if x]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "weight": format_rational(self.weight),
            "entries": [
                {"edge": [u, v], "value": format_rational(x)}
                for (u, v), x in self.nonzero_entries()
            ],
            "dual_witness": None
            if self.dual_witness is None
            else [format_rational(y) for y in self.dual_witness],
        }


def cover_weight(g: WeightedGraph, values: EdgeVector) -> Fraction:
    return Fraction(sum(g.weight(*e) * x for e, x in values.items() if x))


def is_feasible_cover(g: WeightedGraph, values: EdgeVector) -> bool:
    """Every vertex carries total incident value at least one."""
    return all(
        sum(values[edge_key(v, u)] for u in g.neighbors(v)) >= 1 for v in range(g.vertex_count)
    )


def is_half_integral(values: EdgeVector) -> bool:
    return all(x in (ZERO, HALF, ONE) for x in values.values())


def min_edge_cover_exact(
    g: WeightedGraph,
    members: Iterable[int] | None = None,
    *,
    max_candidate_edges: int = 24,
) -> CoverCertificate:
    """Exact minimum-weight cover of a coalition by branch and bound.

    Candidates are the edges inside the coalition plus its boundary; any
    other edge only adds weight. Branching always targets the lowest
    uncovered vertex and tries its covering edges cheapest-first, pruning
    with the admissible bound sum(cheapest incident weight)/2 (each edge
    covers at most two uncovered vertices). First-found optima are kept,
    so the result is deterministic.
    """
    s = coalition(g, g.vertices() if members is None else members)
    candidates = sorted(set(edges_within(g, s)) | set(boundary(g, s)))
    if len(candidates) > max_candidate_edges:
        raise CapExceededError(
            f"{len(candidates)} candidate edges exceed the exact-solver cap of {max_candidate_edges}"
        )

    options = {
        v: sorted((e for e in candidates if v in e), key=lambda e: (g.weight(*e), e))
        for v in sorted(s)
    }
    cheapest = {v: g.weight(*edges[0]) for v, edges in options.items()}

    best_weight: Fraction | None = None
    best_edges: tuple[Edge, ...] | None = None

    def search(uncovered: frozenset[int], chosen: list[Edge], weight: Fraction) -> None:
        nonlocal best_weight, best_edges
        if not uncovered:
            if best_weight is None or weight < best_weight:
                best_weight = weight
                best_edges = tuple(chosen)
            return
        if best_weight is not None:
            if weight + sum(cheapest[v] for v in uncovered) / 2 >= best_weight:
                return
        v = min(uncovered)
        for e in options[v]:
            chosen.append(e)
            search(uncovered - set(e), chosen, weight + g.weight(*e))
            chosen.pop()

    search(frozenset(s), [], ZERO)
    assert best_weight is not None and best_edges is not None
    values = {e: ZERO for e in g.edges}
    for e in best_edges:
        values[e] = ONE
    return CoverCertificate("integral", values, best_weight)


def bipartite_min_edge_cover(
    g: WeightedGraph, *, include_dual_witness: bool = True
) -> CoverCertificate:
    """Minimum-weight edge cover of a bipartite graph via the covering LP.

    The incidence matrix of a bipartite graph is totally unimodular, so the
    basic optimal solution of the LP is a 0/1 vector; that is asserted
    rather than trusted. The optional witness is an optimal dual packing
    vector whose total equals the cover weight.
    """
    report = is_bipartite(g)
    if not report.bipartite:
        raise ValueError("LP-based integral covers require a bipartite graph")
    primal = solve(fractional_cover_lp(g))
    if primal.status != "optimal":
        raise RuntimeError(f"covering LP ended with status {primal.status}")
    values: EdgeVector = {}
    for j, e in enumerate(g.edges):
        x = primal.values[j]
        if x != 0 and x != 1:
            raise RuntimeError(f"basic optimum is not 0/1 on a bipartite graph (edge {e}: {x})")
        values[e] = x
    witness = None
    if include_dual_witness:
        dual = solve(dual_packing_lp(g))
        if dual.objective_value != primal.objective_value:
            raise RuntimeError("primal and dual optima disagree")
        witness = dual.values
    return CoverCertificate("integral", values, primal.objective_value, witness)


def half_integral_cover(
    g: WeightedGraph, *, include_dual_witness: bool = True
) -> CoverCertificate:
    """Optimal fractional edge cover with values in {0, 1/2, 1}.

    Non-bipartite graphs go through the doubling construction: solve the
    integral cover problem on the bipartite double and average the two
    copies of each edge. Bipartite graphs short-circuit to the direct LP
    cover, which is already integral and optimal; running the doubling
    there could mix two different minimum covers of the two copies and
    leave spurious 1/2 entries. The weight always equals the optimum of
    the fractional covering LP, certified by an equal-total dual witness.
    """
    report = is_bipartite(g)
    if report.bipartite:
        base = bipartite_min_edge_cover(g, include_dual_witness=include_dual_witness)
        return CoverCertificate("half-integral", base.values, base.weight, base.dual_witness)

    doubled: DoubledGraph = double_graph(g)
    cover = bipartite_min_edge_cover(doubled.graph, include_dual_witness=False)
    values: EdgeVector = {}
    for e in g.edges:
        e1, e2 = doubled.doubled_pair(e)
        values[e] = (cover.values[e1] + cover.values[e2]) / 2
    weight = cover_weight(g, values)
    if 2 * weight != cover.weight:
        raise RuntimeError("averaged cover weight disagrees with the doubled cover")
    if not is_feasible_cover(g, values):
        raise RuntimeError("averaged cover is not feasible")
    witness = None
    if include_dual_witness:
        dual = solve(dual_packing_lp(g))
        if dual.objective_value != weight:
            raise RuntimeError("half-integral weight does not match the packing optimum")
        witness = dual.values
    return CoverCertificate("half-integral", values, weight, witness)


def _half_support_components(g: WeightedGraph, values: EdgeVector) -> list[dict[int, list[int]]]:
    """Connected components of the 1/2-valued support, as adjacency maps,
    ordered by smallest vertex."""
    adjacency: dict[int, list[int]] = {}
    for u, v in g.edges:
        if values[(u, v)] == HALF:
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
    for v in adjacency:
        adjacency[v].sort()
    components = []
    seen: set[int] = set()
    for start in sorted(adjacency):
        if start in seen:
            continue
        comp: dict[int, list[int]] = {}
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp[v] = adjacency[v]
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        components.append(comp)
    return components


def _cycle_walk(adj: dict[int, list[int]]) -> list[int]:
    """Closed walk of a component that is a simple cycle, starting at its
    smallest vertex toward its smallest neighbor."""
    start = min(adj)
    walk = [start, adj[start][0]]
    prev, cur = start, walk[1]
    while cur != start:
        nxt = next(u for u in adj[cur] if u != prev)
        walk.append(nxt)
        prev, cur = cur, nxt
    return walk


def _bfs_distances(adj: dict[int, list[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _lex_shortest_path(adj: dict[int, list[int]], a: int, b: int) -> list[int]:
    from_a = _bfs_distances(adj, a)
    from_b = _bfs_distances(adj, b)
    length = from_a[b]
    path = [a]
    v = a
    for step in range(1, length + 1):
        v = min(
            u
            for u in adj[v]
            if from_a.get(u) == step and from_b.get(u) == length - step
        )
        path.append(v)
    return path


def _petals(adj: dict[int, list[int]], center: int) -> list[list[int]]:
    """Cycles through the center of a component whose other vertices all
    have degree two."""
    unused = set(adj[center])
    petals = []
    while unused:
        first = min(unused)
        walk = [center, first]
        prev, cur = center, first
        while cur != center:
            nxt = next(u for u in adj[cur] if u != prev)
            walk.append(nxt)
            prev, cur = cur, nxt
        unused.discard(first)
        unused.discard(walk[-2])
        petals.append(walk)
    return petals


def _incident_total(g: WeightedGraph, values: EdgeVector, v: int) -> Fraction:
    return Fraction(sum(values[edge_key(v, u)] for u in g.neighbors(v)))


def _rounding_walk(g: WeightedGraph, values: EdgeVector, adj: dict[int, list[int]]) -> list[int]:
    """Pick a walk in a non-odd-cycle support component whose alternating
    update keeps both rounded vectors feasible.

    Open walks must start and end at "slack" vertices, those with total
    incident value >= 3/2, because one of the two updates lowers the first
    (and possibly last) walk edge by 1/2; interior vertices are touched by
    two consecutive walk edges whose updates cancel. Degree-one support
    vertices are always slack (feasibility forces a full edge next to
    their lone half edge) and so are degree->=3 vertices (three halves).
    With fewer than two slack vertices the component is a flower of cycles
    through its single slack vertex: an even petal rounds like an even
    cycle, and two odd petals concatenate into an even closed walk whose
    four end-edges at the center cancel in pairs.
    """
    slack = sorted(v for v in adj if _incident_total(g, values, v) >= Fraction(3, 2))
    if len(slack) >= 2:
        return _lex_shortest_path(adj, slack[0], slack[1])
    if not slack:
        raise RuntimeError("support component has no roundable structure")
    petals = _petals(adj, slack[0])
    for walk in petals:
        if (len(walk) - 1) % 2 == 0:
            return walk
    return petals[0] + petals[1][1:]


def _apply_alternating_round(
    g: WeightedGraph, values: EdgeVector, walk: list[int]
) -> EdgeVector:
    """Shift the walk edges by alternating +-1/2 both ways and keep the
    better result (ties by lexicographic value vector)."""
    edges = [edge_key(a, b) for a, b in zip(walk, walk[1:])]
    first_down: EdgeVector = dict(values)
    first_up: EdgeVector = dict(values)
    for i, e in enumerate(edges):
        delta = HALF if i % 2 else -HALF
        first_down[e] += delta
        first_up[e] -= delta
    ranked = []
    for candidate in (first_down, first_up):
        if not is_feasible_cover(g, candidate):
            raise RuntimeError("alternating rounding broke cover feasibility")
        ranked.append(
            (cover_weight(g, candidate), tuple(candidate[e] for e in g.edges), candidate)
        )
    ranked.sort(key=lambda item: (item[0], item[1]))
    return ranked[0][2]


def canonicalize_to_odd_cycles(g: WeightedGraph, values: EdgeVector) -> EdgeVector:
    """Round an optimal half-integral cover until its fractional support is
    a disjoint union of vertex-disjoint odd cycles.

    Each pass finds a support component that is not a simple odd cycle,
    rounds an even cycle or a slack-to-slack walk in it, and keeps
    whichever of the two alternating shifts does not increase the weight
    (their weights average to the current one, so the kept vector stays
    optimal). Every pass makes at least one more coordinate integral,
    which bounds the number of passes by the edge count.
    """
    x: EdgeVector = {e: Fraction(v) for e, v in values.items()}
    if set(x) != set(g.edges):
        raise ValueError("vector must assign a value to every edge of the graph")
    if not is_half_integral(x):
        raise ValueError("vector is not half-integral")
    if not is_feasible_cover(g, x):
        raise ValueError("vector is not a feasible cover")
    optimum = solve(fractional_cover_lp(g)).objective_value
    if cover_weight(g, x) != optimum:
        raise ValueError("vector is not an optimal fractional cover")

    for _ in range(g.edge_count + 1):
        walk = None
        for adj in _half_support_components(g, x):
            if all(len(nbrs) == 2 for nbrs in adj.values()):
                if len(adj) % 2 == 1:
                    continue  # already a simple odd cycle
                walk = _cycle_walk(adj)
                break
            walk = _rounding_walk(g, x, adj)
            break
        if walk is None:
            return x
        x = _apply_alternating_round(g, x, walk)
        if cover_weight(g, x) != optimum:
            raise RuntimeError("rounding changed the cover weight")
    raise RuntimeError("canonicalization failed to terminate")


def fractional_support_cycles(
    g: WeightedGraph, values: EdgeVector
) -> tuple[tuple[int, ...], ...]:
    """The odd cycles carrying the 1/2 entries of a canonical vector, as
    closed vertex walks ordered by smallest vertex.

    Raises ValueError when the support is not a disjoint union of simple
    odd cycles.
    """
    cycles = []
    for adj in _half_support_components(g, values):
        if not all(len(nbrs) == 2 for nbrs in adj.values()) or len(adj) % 2 == 0:
            raise ValueError("fractional support is not a disjoint union of odd cycles")
        cycles.append(tuple(_cycle_walk(adj)))
    return tuple(cycles)
