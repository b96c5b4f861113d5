"""Shared builders for fixture and random test graphs."""

from __future__ import annotations

import random
from fractions import Fraction

from covergame import WeightedGraph, is_bipartite


def cycle_graph(k: int, weight=Fraction(1)) -> WeightedGraph:
    return WeightedGraph(k, [(i, (i + 1) % k, Fraction(weight)) for i in range(k)])


def path_graph(weights) -> WeightedGraph:
    ws = [Fraction(w) for w in weights]
    return WeightedGraph(len(ws) + 1, [(i, i + 1, w) for i, w in enumerate(ws)])


def star_graph(leaves: int, weight=Fraction(1)) -> WeightedGraph:
    return WeightedGraph(leaves + 1, [(0, i, Fraction(weight)) for i in range(1, leaves + 1)])


def triangle(weight=Fraction(1)) -> WeightedGraph:
    return cycle_graph(3, weight)


def random_weight(rng: random.Random, max_numerator=20, max_denominator=5, min_numerator=1) -> Fraction:
    return Fraction(rng.randint(min_numerator, max_numerator), rng.randint(1, max_denominator))


def random_graph(
    rng: random.Random,
    max_vertices=8,
    max_extra_edges=3,
    min_vertices=2,
    **weight_kwargs,
) -> WeightedGraph:
    """Random graph with minimum degree one: a random spanning tree plus a
    few extra edges, rational weights."""
    n = rng.randint(min_vertices, max_vertices)
    edges: dict[tuple[int, int], Fraction] = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = random_weight(rng, **weight_kwargs)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(pool)
    extra = rng.randint(0, min(max_extra_edges, len(pool)))
    for e in pool[:extra]:
        edges[e] = random_weight(rng, **weight_kwargs)
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


def random_bipartite_graph(
    rng: random.Random, max_vertices=10, max_extra_edges=4, **weight_kwargs
) -> WeightedGraph:
    """Random bipartite graph on parts {0..a-1} and {a..n-1}, min degree one."""
    n = rng.randint(2, max_vertices)
    a = rng.randint(1, n - 1)
    left = list(range(a))
    right = list(range(a, n))
    edges: dict[tuple[int, int], Fraction] = {}
    for u in left:
        edges[(u, rng.choice(right))] = random_weight(rng, **weight_kwargs)
    for v in right:
        if not any(v in e for e in edges):
            edges[(rng.choice(left), v)] = random_weight(rng, **weight_kwargs)
    pool = [(u, v) for u in left for v in right if (u, v) not in edges]
    rng.shuffle(pool)
    extra = rng.randint(0, min(max_extra_edges, len(pool)))
    for e in pool[:extra]:
        edges[e] = random_weight(rng, **weight_kwargs)
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


def random_nonbipartite_graph(
    rng: random.Random, max_vertices=8, max_extra_edges=3, **weight_kwargs
) -> WeightedGraph:
    for _ in range(200):
        g = random_graph(
            rng, max_vertices=max_vertices, min_vertices=3,
            max_extra_edges=max(2, max_extra_edges), **weight_kwargs,
        )
        if not is_bipartite(g).bipartite:
            return g
    raise AssertionError("failed to sample a non-bipartite graph")


def random_allocation(rng: random.Random, g: WeightedGraph, dual=None) -> tuple[Fraction, ...]:
    """Mixed allocation sampler: zeros, raw random values, scaled-down dual
    solutions, and duals perturbed upward at one vertex."""
    n = g.vertex_count
    kind = rng.randrange(4)
    if kind == 0:
        return tuple(Fraction(0) for _ in range(n))
    if kind == 1 or dual is None:
        return tuple(Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(n))
    if kind == 2:
        factor = Fraction(rng.randint(0, 4), 4)
        return tuple(factor * y for y in dual)
    bumped = list(dual)
    bumped[rng.randrange(n)] += Fraction(rng.randint(1, 3), 2)
    return tuple(bumped)
