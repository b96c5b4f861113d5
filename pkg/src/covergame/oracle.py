"""Brute-force reference implementations.

These are deliberately naive, share no optimization logic with the fast
paths they certify, and refuse instances beyond small budgets. The CLI
exposes them behind --exhaustive; the test suite uses them as oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceededError
from .graphs import WeightedGraph, coalition

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


@dataclass(frozen=True)
class OracleBudget:
    max_cover_edges: int = 20
    max_coalition_vertices: int = 12
    max_grid_edges: int = 12

    def __post_init__(self):
        if min(self.max_cover_edges, self.max_coalition_vertices, self.max_grid_edges) <= 0:
            raise ValueError("oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def brute_min_cover(
    g: WeightedGraph, members: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET
) -> Fraction:
    """Minimum cover weight over all 2^m subsets of the candidate edges.

    Subsets are walked in Gray-code order, flipping one edge per step, so
    the running weight and per-vertex hit counts stay exact with O(1)
    bookkeeping while still visiting every subset (no pruning).
    """
    s = coalition(g, members)
    candidates = [e for e in g.edges if e[0] in s or e[1] in s]
    k = len(candidates)
    if k > budget.max_cover_edges:
        raise CapExceededError(
            f"{k} candidate edges exceed the oracle budget of {budget.max_cover_edges}"
        )
    weights = [g.weight(*e) for e in candidates]
    covered = [tuple(v for v in e if v in s) for e in candidates]

    hits = {v: 0 for v in s}
    uncovered = len(s)
    weight = ZERO
    chosen = [False] * k
    best: Fraction | None = None
    for step in range(1, 1 << k):
        i = (step & -step).bit_length() - 1
        if chosen[i]:
            chosen[i] = False
            weight -= weights[i]
            for v in covered[i]:
                hits[v] -= 1
                if hits[v] == 0:
                    uncovered += 1
        else:
            chosen[i] = True
            weight += weights[i]
            for v in covered[i]:
                if hits[v] == 0:
                    uncovered -= 1
                hits[v] += 1
        if uncovered == 0 and (best is None or weight < best):
            best = weight
    if best is None:
        raise RuntimeError("no covering subset found despite minimum degree one")
    return best


def brute_fractional_optimum(
    g: WeightedGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> Fraction:
    """Minimum fractional cover weight over the full {0, 1/2, 1}^m grid.

    Valid as an LP oracle because some optimal fractional cover is
    half-integral.
    """
    m = g.edge_count
    if m > budget.max_grid_edges:
        raise CapExceededError(f"{m} edges exceed the grid oracle budget of {budget.max_grid_edges}")
    incident = [
        tuple(j for j, e in enumerate(g.edges) if v in e) for v in range(g.vertex_count)
    ]
    weights = [g.weight(*e) for e in g.edges]
    best: Fraction | None = None
    for point in itertools.product((ZERO, HALF, ONE), repeat=m):
        if all(sum(point[j] for j in edges) >= 1 for edges in incident):
            weight = sum(w * x for w, x in zip(weights, point) if x)
            if best is None or weight < best:
                best = Fraction(weight)
    assert best is not None  # the all-ones point is always feasible
    return best


def brute_core_check(
    g: WeightedGraph,
    allocation: Sequence[Fraction],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[bool, frozenset[int] | None]:
    """Check a(S) <= c(S) for every nonempty coalition S, exhaustively.

    Coalition costs come from brute_min_cover. Returns the first violating
    coalition in mask order, if any.
    """
    n = g.vertex_count
    if n > budget.max_coalition_vertices:
        raise CapExceededError(
            f"{n} vertices exceed the coalition oracle budget of {budget.max_coalition_vertices}"
        )
    values = tuple(Fraction(v) for v in allocation)
    if len(values) != n:
        raise ValueError(f"allocation must assign a value to every vertex (expected {n})")
    for v, value in enumerate(values):
        if value < 0:
            raise ValueError(f"allocation for vertex {v} is negative")
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        total = sum(values[v] for v in members)
        if total > brute_min_cover(g, members, budget):
            return False, frozenset(members)
    return True, None
