"""Exact rational linear programming.

A dense two-phase tableau simplex over ``fractions.Fraction`` with Bland's
anti-cycling rule. Instances here are desk-scale, so exactness and
determinism are worth far more than sparse performance: the same input
always takes the same pivot path and yields the same basic optimal
solution, and feasibility of returned solutions is re-checked with exact
equality (there is no epsilon anywhere in this module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from .graphs import WeightedGraph, edge_key

ZERO = Fraction(0)
ONE = Fraction(1)

RELATIONS = (">=", "<=", "=")


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")


@dataclass(frozen=True)
class LinearProgram:
    """min or max of a linear objective over nonnegative variables."""

    sense: str
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise ValueError(f"sense must be 'min' or 'max', not {self.sense!r}")
        for c in self.constraints:
            if len(c.coeffs) != len(self.objective):
                raise ValueError("constraint arity does not match the objective")


@dataclass(frozen=True)
class LpSolution:
    """Solver outcome; ``values`` is a basic (vertex) solution when optimal.

    ``basis`` lists the structural variables that are basic at the optimum.
    """

    status: str  # "optimal" | "infeasible" | "unbounded"
    values: tuple[Fraction, ...] | None
    objective_value: Fraction | None
    basis: frozenset[int]


def _reduced_costs(cost: list[Fraction], tableau: list[list[Fraction]], basis: list[int]) -> list[Fraction]:
    # z[j] = c_j - c_B B^-1 A_j; the last entry carries minus the objective.
    z = list(cost) + [ZERO]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = tableau[i]
            for k in range(len(z)):
                z[k] -= cb * row[k]
    return z


def _pivot(
    tableau: list[list[Fraction]],
    basis: list[int],
    z: list[Fraction] | None,
    row: int,
    col: int,
) -> None:
    prow = tableau[row]
    piv = prow[col]
    if piv != 1:
        prow = tableau[row] = [a / piv for a in prow]
    for i, r in enumerate(tableau):
        if i == row:
            continue
        f = r[col]
        if f:
            tableau[i] = [a - f * b for a, b in zip(r, prow)]
    if z is not None:
        f = z[col]
        if f:
            z[:] = [a - f * b for a, b in zip(z, prow)]
    basis[row] = col


def _iterate(
    tableau: list[list[Fraction]],
    basis: list[int],
    z: list[Fraction],
    trace: TextIO | None,
    phase: int,
) -> str:
    width = len(z)
    while True:
        col = None
        for j in range(width - 1):  # Bland: lowest improving index enters
            if z[j] < 0:
                col = j
                break
        if col is None:
            if trace:
                trace.write(f"phase {phase}: optimal\n")
            return "optimal"
        row = None
        best: Fraction | None = None
        for i, r in enumerate(tableau):
            a = r[col]
            if a > 0:
                ratio = r[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row is None:
            if trace:
                trace.write(f"phase {phase}: unbounded in column {col}\n")
            return "unbounded"
        if trace:
            trace.write(f"phase {phase}: x{col} enters, x{basis[row]} leaves\n")
        _pivot(tableau, basis, z, row, col)


def _purge_artificials(tableau: list[list[Fraction]], basis: list[int], art_start: int) -> None:
    # Pivot zero-level artificials out of the basis; a row with no real
    # nonzero column is a redundant constraint and is dropped.
    keep: list[int] = []
    for i in range(len(tableau)):
        if basis[i] < art_start:
            keep.append(i)
            continue
        row = tableau[i]
        col = next((j for j in range(art_start) if row[j] != 0), None)
        if col is None:
            continue
        _pivot(tableau, basis, None, i, col)
        keep.append(i)
    tableau[:] = [tableau[i] for i in keep]
    basis[:] = [basis[i] for i in keep]


def _check_solution(lp: LinearProgram, values: tuple[Fraction, ...], objective: Fraction) -> None:
    for con in lp.constraints:
        lhs = sum(a * x for a, x in zip(con.coeffs, values))
        ok = lhs >= con.rhs if con.relation == ">=" else lhs <= con.rhs if con.relation == "<=" else lhs == con.rhs
        if not ok:
            raise RuntimeError(f"solver returned an infeasible point: {lhs} {con.relation} {con.rhs}")
    if sum(c * x for c, x in zip(lp.objective, values)) != objective:
        raise RuntimeError("solver objective does not match the returned point")


def solve(lp: LinearProgram, trace: TextIO | None = None) -> LpSolution:
    """Solve an LP exactly, returning a basic optimal solution when one exists.

    Phase 1 minimizes artificial variables introduced for ">=" and "="
    rows; phase 2 optimizes the real objective. Bland's rule (lowest
    eligible index, ties on the leaving side by lowest basic variable)
    guarantees termination and makes runs byte-reproducible. ``trace``
    receives one line per pivot when provided.
    """
    n = len(lp.objective)
    minimize = lp.sense == "min"
    cost = [Fraction(c) if minimize else -Fraction(c) for c in lp.objective]

    rows: list[list[Fraction]] = []
    relations: list[str] = []
    rhs_col: list[Fraction] = []
    for con in lp.constraints:
        coeffs = [Fraction(a) for a in con.coeffs]
        rel = con.relation
        rhs = Fraction(con.rhs)
        if rhs < 0:
            coeffs = [-a for a in coeffs]
            rhs = -rhs
            rel = {">=": "<=", "<=": ">=", "=": "="}[rel]
        rows.append(coeffs)
        relations.append(rel)
        rhs_col.append(rhs)

    m = len(rows)
    n_slack = sum(1 for rel in relations if rel != "=")
    n_art = sum(1 for rel in relations if rel != "<=")
    art_start = n + n_slack
    width = art_start + n_art + 1  # final column holds the right-hand side

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    s_col = n
    a_col = art_start
    for i in range(m):
        row = [ZERO] * width
        row[:n] = rows[i]
        row[-1] = rhs_col[i]
        rel = relations[i]
        if rel == "<=":
            row[s_col] = ONE
            basis.append(s_col)
            s_col += 1
        else:
            if rel == ">=":
                row[s_col] = -ONE
                s_col += 1
            row[a_col] = ONE
            basis.append(a_col)
            a_col += 1
        tableau.append(row)

    if n_art:
        phase_cost = [ZERO] * art_start + [ONE] * n_art
        z = _reduced_costs(phase_cost, tableau, basis)
        status = _iterate(tableau, basis, z, trace, phase=1)
        if status != "optimal":
            raise RuntimeError("phase 1 is bounded below by zero and cannot be unbounded")
        if z[-1] != 0:  # artificial total is -z[-1]; positive means infeasible
            return LpSolution("infeasible", None, None, frozenset())
        _purge_artificials(tableau, basis, art_start)
        tableau = [row[:art_start] + row[-1:] for row in tableau]

    full_cost = cost + [ZERO] * n_slack
    z = _reduced_costs(full_cost, tableau, basis)
    status = _iterate(tableau, basis, z, trace, phase=2)
    if status == "unbounded":
        return LpSolution("unbounded", None, None, frozenset())

    values = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            values[b] = tableau[i][-1]
    objective = -z[-1]
    if not minimize:
        objective = -objective
    solution = tuple(values)
    _check_solution(lp, solution, objective)
    return LpSolution("optimal", solution, objective, frozenset(b for b in basis if b < n))


def fractional_cover_lp(g: WeightedGraph) -> LinearProgram:
    """The fractional edge cover LP: one variable per edge, one ">= 1"
    covering constraint per vertex, objective min sum(w_e x_e)."""
    index = {e: j for j, e in enumerate(g.edges)}
    constraints = []
    for v in range(g.vertex_count):
        row = [ZERO] * len(g.edges)
        for u in g.neighbors(v):
            row[index[edge_key(u, v)]] = ONE
        constraints.append(Constraint(tuple(row), ">=", ONE))
    objective = tuple(g.weight(*e) for e in g.edges)
    return LinearProgram("min", objective, tuple(constraints))


def dual_packing_lp(g: WeightedGraph) -> LinearProgram:
    """The dual packing LP: one variable per vertex, one "y_u + y_v <= w_uv"
    constraint per edge, objective max sum(y_v)."""
    n = g.vertex_count
    constraints = []
    for u, v in g.edges:
        row = [ZERO] * n
        row[u] = ONE
        row[v] = ONE
        constraints.append(Constraint(tuple(row), "<=", g.weight(u, v)))
    return LinearProgram("max", tuple([ONE] * n), tuple(constraints))
