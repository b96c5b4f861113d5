"""Exact simplex solver and the covering/packing LP builders."""

import io
import random
from fractions import Fraction

import pytest
from helpers import cycle_graph, path_graph, random_bipartite_graph, random_graph, star_graph, triangle

from covergame import (
    Constraint,
    LinearProgram,
    brute_fractional_optimum,
    dual_packing_lp,
    fractional_cover_lp,
    solve,
)

F = Fraction


def lp_min(objective, constraints):
    return LinearProgram(
        "min",
        tuple(F(c) for c in objective),
        tuple(Constraint(tuple(F(a) for a in row), rel, F(rhs)) for row, rel, rhs in constraints),
    )


def lp_max(objective, constraints):
    return LinearProgram(
        "max",
        tuple(F(c) for c in objective),
        tuple(Constraint(tuple(F(a) for a in row), rel, F(rhs)) for row, rel, rhs in constraints),
    )


class TestSolver:
    def test_min_single_variable(self):
        sol = solve(lp_min([1], [([1], ">=", 1)]))
        assert sol.status == "optimal"
        assert sol.values == (F(1),)
        assert sol.objective_value == 1

    def test_equality_constraint(self):
        sol = solve(lp_min([1, 1], [([1, 1], "=", 2)]))
        assert sol.status == "optimal"
        assert sol.objective_value == 2

    def test_max_sense(self):
        sol = solve(lp_max([1], [([1], "<=", F(5, 2))]))
        assert sol.status == "optimal"
        assert sol.objective_value == F(5, 2)

    def test_infeasible(self):
        sol = solve(lp_min([1], [([1], "<=", -1)]))
        assert sol.status == "infeasible"
        assert sol.values is None and sol.objective_value is None

    def test_unbounded(self):
        sol = solve(lp_max([1], [([-1], "<=", 1)]))
        assert sol.status == "unbounded"

    def test_negative_rhs_normalization(self):
        # -x <= -1 is x >= 1
        sol = solve(lp_min([1], [([-1], "<=", -1)]))
        assert sol.objective_value == 1

    def test_redundant_rows_are_dropped(self):
        sol = solve(lp_min([1, 1], [([1, 1], "=", 2), ([2, 2], "=", 4)]))
        assert sol.status == "optimal"
        assert sol.objective_value == 2

    def test_fractional_data(self):
        sol = solve(lp_min([F(2, 3), F(1, 5)], [([1, 0], ">=", F(3, 7)), ([0, 1], ">=", F(1, 2))]))
        assert sol.objective_value == F(2, 3) * F(3, 7) + F(1, 5) * F(1, 2)

    def test_pivot_trace(self):
        trace = io.StringIO()
        solve(fractional_cover_lp(triangle()), trace=trace)
        text = trace.getvalue()
        assert "enters" in text and "optimal" in text

    def test_determinism(self):
        lp = fractional_cover_lp(cycle_graph(7))
        assert solve(lp) == solve(lp)


class TestCoverLp:
    def test_triangle_shape_and_value(self):
        lp = fractional_cover_lp(triangle())
        assert len(lp.objective) == 3 and len(lp.constraints) == 3
        sol = solve(lp)
        assert sol.objective_value == F(3, 2)
        # the all-tight system pins the unique optimum at one half per edge
        assert sol.values == (F(1, 2), F(1, 2), F(1, 2))

    def test_path_and_star_shapes(self):
        assert len(fractional_cover_lp(path_graph([1, 1])).objective) == 2
        assert len(fractional_cover_lp(path_graph([1, 1])).constraints) == 3
        assert len(fractional_cover_lp(star_graph(3)).objective) == 3
        assert len(fractional_cover_lp(star_graph(3)).constraints) == 4

    def test_single_edge_weight(self):
        sol = solve(fractional_cover_lp(path_graph([F(5, 2)])))
        assert sol.objective_value == F(5, 2)
        assert sol.values == (F(1),)

    def test_bipartite_basic_optimum_is_integral(self):
        rng = random.Random(23)
        for _ in range(30):
            g = random_bipartite_graph(rng)
            sol = solve(fractional_cover_lp(g))
            assert all(x == 0 or x == 1 for x in sol.values)


class TestPackingLp:
    def test_triangle_value(self):
        # summing the three edge constraints bounds 2*total by 3, and the
        # all-halves point attains it, so 3/2 is optimal and unique
        sol = solve(dual_packing_lp(triangle()))
        assert sol.objective_value == F(3, 2)
        assert sol.values == (F(1, 2), F(1, 2), F(1, 2))

    def test_single_edge(self):
        sol = solve(dual_packing_lp(path_graph([F(7, 3)])))
        assert sol.objective_value == F(7, 3)

    def test_star_value(self):
        g = star_graph(3)
        assert brute_fractional_optimum(g) == 3
        sol = solve(dual_packing_lp(g))
        assert sol.objective_value == 3

    def test_strong_duality_random(self):
        rng = random.Random(29)
        for _ in range(50):
            g = random_graph(rng, max_vertices=7)
            primal = solve(fractional_cover_lp(g))
            dual = solve(dual_packing_lp(g))
            assert primal.status == dual.status == "optimal"
            assert primal.objective_value == dual.objective_value

    def test_weak_duality_random_feasible_points(self):
        rng = random.Random(31)
        for _ in range(30):
            g = random_graph(rng)
            primal_value = solve(fractional_cover_lp(g)).objective_value
            dual_value = solve(dual_packing_lp(g)).objective_value
            # any y with y_v <= min incident weight / 2 is packing-feasible
            y = []
            for v in range(g.vertex_count):
                cap = min(g.weight(v, u) for u in g.neighbors(v)) / 2
                y.append(cap * Fraction(rng.randint(0, 4), 4))
            for u, v in g.edges:
                assert y[u] + y[v] <= g.weight(u, v)
            assert sum(y) <= primal_value
            # and any x >= 1 everywhere is cover-feasible
            x = [1 + Fraction(rng.randint(0, 3), 2) for _ in g.edges]
            feasible_primal = sum(g.weight(*e) * xe for e, xe in zip(g.edges, x))
            assert dual_value <= feasible_primal


class TestExactness:
    def test_solutions_satisfy_constraints_exactly(self):
        rng = random.Random(37)
        for _ in range(20):
            g = random_graph(rng)
            lp = fractional_cover_lp(g)
            sol = solve(lp)
            for con in lp.constraints:
                lhs = sum(a * x for a, x in zip(con.coeffs, sol.values))
                assert lhs >= con.rhs  # exact comparison, no epsilon
            assert sum(c * x for c, x in zip(lp.objective, sol.values)) == sol.objective_value

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            LinearProgram("min", (F(1),), (Constraint((F(1), F(2)), ">=", F(1)),))

    def test_bad_sense_rejected(self):
        with pytest.raises(ValueError):
            LinearProgram("maximize", (F(1),), ())

    def test_bad_relation_rejected(self):
        with pytest.raises(ValueError):
            Constraint((F(1),), ">", F(1))
