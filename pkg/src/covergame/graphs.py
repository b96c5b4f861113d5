"""Weighted-graph arena: parsing, coalition combinatorics, bipartiteness,
shortest odd cycles, and the bipartite doubling construction.

All types are immutable values after construction and every operation is a
pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .rationals import parse_rational

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Invalid graph input; ``kind`` names the violation class.

    Kinds: bad-header, malformed, loop, duplicate-edge, negative-weight,
    vertex-range, isolated-vertex.
    """

    def __init__(self, kind: str, message: str, line_no: int | None = None):
        self.kind = kind
        self.line_no = line_no
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"{kind}: {message}{where}")


def edge_key(u: int, v: int) -> Edge:
    """Normalized undirected edge key (min endpoint first)."""
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Simple undirected graph on vertices 0..n-1 with rational edge weights.

    Enforced invariants: no loops, no parallel edges, every weight >= 0, and
    minimum degree >= 1 (so an edge cover exists for every coalition).
    """

    __slots__ = ("vertex_count", "edges", "_weight", "_neighbors")

    def __init__(self, vertex_count: int, weighted_edges: Iterable[tuple[int, int, Fraction]]):
        if vertex_count <= 0:
            raise GraphFormatError("bad-header", "vertex count must be positive")
        weight: dict[Edge, Fraction] = {}
        for u, v, w in weighted_edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError("vertex-range", f"edge ({u}, {v}) is out of range")
            if u == v:
                raise GraphFormatError("loop", f"loop at vertex {u}")
            e = edge_key(u, v)
            if e in weight:
                raise GraphFormatError("duplicate-edge", f"edge {e[0]}-{e[1]} appears twice")
            w = Fraction(w)
            if w < 0:
                raise GraphFormatError("negative-weight", f"edge {e[0]}-{e[1]} has weight {w}")
            weight[e] = w
        adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in weight:
            adjacency[u].append(v)
            adjacency[v].append(u)
        for v, adj in enumerate(adjacency):
            if not adj:
                raise GraphFormatError("isolated-vertex", f"vertex {v} has no incident edge")
        self.vertex_count = vertex_count
        self.edges: tuple[Edge, ...] = tuple(sorted(weight))
        self._weight = weight
        self._neighbors = tuple(tuple(sorted(adj)) for adj in adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._weight

    def weight(self, u: int, v: int) -> Fraction:
        return self._weight[edge_key(u, v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        return tuple(edge_key(v, u) for u in self._neighbors[v])

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.vertex_count}, m={self.edge_count})"


def parse_graph(source: str | bytes) -> WeightedGraph:
    """Parse the text graph format.

    Line 1 holds ``n m``; the next ``m`` lines hold ``u v w`` with
    0 <= u < v < n and w a nonnegative integer or "p/q" fraction. Lines
    starting with ``#`` and blank lines are ignored. Violations raise
    GraphFormatError with a line number and a distinct error kind.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    significant: list[tuple[int, str]] = []
    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        significant.append((line_no, line))
    if not significant:
        raise GraphFormatError("bad-header", "empty input")

    header_no, header = significant[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError("bad-header", "expected 'n m'", header_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError("bad-header", "expected integers 'n m'", header_no) from None
    if n <= 0 or m < 0:
        raise GraphFormatError("bad-header", f"invalid sizes n={n}, m={m}", header_no)

    body = significant[1:]
    if len(body) != m:
        raise GraphFormatError(
            "malformed", f"expected {m} edge lines, found {len(body)}", header_no
        )

    weighted_edges: list[tuple[int, int, Fraction]] = []
    seen: set[Edge] = set()
    for line_no, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError("malformed", "expected 'u v w'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("malformed", "vertex ids must be integers", line_no) from None
        if u == v:
            raise GraphFormatError("loop", f"loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError("vertex-range", f"edge ({u}, {v}) is out of range", line_no)
        if u > v:
            raise GraphFormatError("malformed", "edges must be written with u < v", line_no)
        if (u, v) in seen:
            raise GraphFormatError("duplicate-edge", f"edge {u}-{v} appears twice", line_no)
        seen.add((u, v))
        try:
            w = parse_rational(parts[2])
        except ValueError:
            raise GraphFormatError("malformed", f"bad weight {parts[2]!r}", line_no) from None
        if w < 0:
            raise GraphFormatError("negative-weight", f"edge {u}-{v} has weight {w}", line_no)
        weighted_edges.append((u, v, w))

    degrees = [0] * n
    for u, v, _ in weighted_edges:
        degrees[u] += 1
        degrees[v] += 1
    for v, d in enumerate(degrees):
        if d == 0:
            raise GraphFormatError("isolated-vertex", f"vertex {v} has no incident edge", header_no)
    return WeightedGraph(n, weighted_edges)


def load_graph(path: str | Path) -> WeightedGraph:
    """Read and parse a graph file."""
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def coalition(g: WeightedGraph, members: Iterable[int]) -> frozenset[int]:
    """Validate a coalition: a nonempty subset of the vertex set."""
    s = frozenset(members)
    if not s:
        raise ValueError("coalition must be nonempty")
    for v in s:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"coalition member {v} is not a vertex")
    return s


def edges_within(g: WeightedGraph, members: Iterable[int]) -> tuple[Edge, ...]:
    """E[S]: the edges whose both endpoints lie in the coalition."""
    s = coalition(g, members)
    return tuple(e for e in g.edges if e[0] in s and e[1] in s)


def boundary(g: WeightedGraph, members: Iterable[int]) -> tuple[Edge, ...]:
    """delta(S): the edges incident to exactly one coalition vertex."""
    s = coalition(g, members)
    return tuple(e for e in g.edges if (e[0] in s) != (e[1] in s))


def star_edges(g: WeightedGraph, center: int, members: Iterable[int]) -> tuple[Edge, ...]:
    """delta(v, T): the edges between a center and a nonempty set of its neighbors."""
    if not (0 <= center < g.vertex_count):
        raise ValueError(f"star center {center} is not a vertex")
    t = frozenset(members)
    if not t:
        raise ValueError("star must have at least one member")
    neighborhood = set(g.neighbors(center))
    for u in t:
        if u not in neighborhood:
            raise ValueError(f"star member {u} is not adjacent to center {center}")
    return tuple(sorted(edge_key(center, u) for u in t))


@dataclass(frozen=True)
class BipartitenessReport:
    """Outcome of a two-coloring attempt.

    Either a proper 0/1 coloring, or a closed walk of odd length witnessing
    that no such coloring exists.
    """

    bipartite: bool
    coloring: tuple[int, ...] | None
    odd_closed_walk: tuple[int, ...] | None


def _odd_walk(parent: list[int], depth: list[int], v: int, u: int) -> tuple[int, ...]:
    # Distinct BFS-tree paths from v and u meet at their lowest common
    # ancestor; closing with the edge u-v gives an odd closed walk.
    path_v, path_u = [v], [u]
    a, b = v, u
    while depth[a] > depth[b]:
        a = parent[a]
        path_v.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        path_u.append(b)
    while a != b:
        a = parent[a]
        path_v.append(a)
        b = parent[b]
        path_u.append(b)
    return tuple(path_v + path_u[-2::-1] + [v])


def is_bipartite(g: WeightedGraph) -> BipartitenessReport:
    """Two-color the graph or exhibit an odd closed walk."""
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return BipartitenessReport(False, None, _odd_walk(parent, depth, v, u))
    return BipartitenessReport(True, tuple(color), None)


@dataclass(frozen=True)
class OddCycleReport:
    """Shortest odd cycle length and one witness cycle.

    ``length`` is None on bipartite graphs. The witness is a closed vertex
    sequence (first = last) of odd length >= 3.
    """

    length: int | None
    witness: tuple[int, ...] | None


def _parity_layers(g: WeightedGraph, start: int, start_parity: int) -> list[list[int]]:
    """BFS distances in the parity double cover from (start, start_parity).

    State (v, p) means vertex v reached by a walk of parity p; every edge
    flips the parity, so dist[v][1] is the shortest odd walk to v.
    """
    dist = [[-1, -1] for _ in range(g.vertex_count)]
    dist[start][start_parity] = 0
    queue = deque([(start, start_parity)])
    while queue:
        v, p = queue.popleft()
        d = dist[v][p] + 1
        q = 1 - p
        for u in g.neighbors(v):
            if dist[u][q] == -1:
                dist[u][q] = d
                queue.append((u, q))
    return dist


def shortest_odd_cycle(g: WeightedGraph) -> OddCycleReport:
    """Length of the shortest odd cycle with a deterministic witness.

    One BFS on the parity double cover per start vertex, so the total work
    grows as O(|V| |E|). A shortest odd closed walk is always a simple
    cycle: any repeated vertex would split it into two closed walks, one of
    them odd and strictly shorter. Ties are broken toward the lowest start
    vertex and then the lexicographically smallest vertex sequence.
    """
    best_len: int | None = None
    best_start = -1
    best_forward: list[list[int]] | None = None
    for s in range(g.vertex_count):
        forward = _parity_layers(g, s, 0)
        d = forward[s][1]
        if d != -1 and (best_len is None or d < best_len):
            best_len, best_start, best_forward = d, s, forward
    if best_len is None or best_forward is None:
        return OddCycleReport(None, None)

    backward = _parity_layers(g, best_start, 1)
    walk = [best_start]
    v = best_start
    for step in range(1, best_len + 1):
        parity = step % 2
        v = min(
            u
            for u in g.neighbors(v)
            if best_forward[u][parity] == step and backward[u][parity] == best_len - step
        )
        walk.append(v)
    return OddCycleReport(best_len, tuple(walk))


@dataclass(frozen=True)
class DoubledGraph:
    """Bipartite double of a graph, with correspondence maps.

    Vertex v of the source appears as v (first copy) and v + n (second
    copy); each source edge uv becomes the pair u-(v+n) and v-(u+n), both
    carrying the source weight. ``edge_origin`` maps every doubled edge back
    to its source edge.
    """

    graph: WeightedGraph
    source_vertex_count: int
    edge_origin: dict[Edge, Edge]

    def copies(self, v: int) -> tuple[int, int]:
        return (v, v + self.source_vertex_count)

    def doubled_pair(self, e: Edge) -> tuple[Edge, Edge]:
        u, v = e
        n = self.source_vertex_count
        return (edge_key(u, v + n), edge_key(v, u + n))


def double_graph(g: WeightedGraph) -> DoubledGraph:
    """Build the bipartite double cover with both copies of every edge."""
    n = g.vertex_count
    weighted_edges: list[tuple[int, int, Fraction]] = []
    origin: dict[Edge, Edge] = {}
    for u, v in g.edges:
        w = g.weight(u, v)
        for e in (edge_key(u, v + n), edge_key(v, u + n)):
            weighted_edges.append((e[0], e[1], w))
            origin[e] = (u, v)
    return DoubledGraph(WeightedGraph(2 * n, weighted_edges), n, origin)
