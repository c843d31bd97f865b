"""The graph of non-crossing side pairs and its component bounds.

Nodes are the m + n sides of an instance (sides of the first polygon are
0..m-1, sides of the second are m..m+n-1); edges join a side of one polygon
to a *disjoint* side of the other.  Since in general position two sides
either properly cross or are disjoint, the crossing count is exactly
``m*n - |edges|``, and a spanning-forest argument turns a component count
into a crossing bound: a bipartite graph on m + n nodes with c components
has at least m + n - c edges, so

    crossings <= m*n - (m + n) + c.

For two odd polygons the components are additionally at most (n + 5) / 2
where n is the smaller side count — that comparison is done in integers as
``2*c <= n + 5``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityError
from .polygon import SimplePolygon, crossing_count


@dataclass(frozen=True)
class DisjointnessGraph:
    """Bipartite graph of disjoint side pairs, with its components.

    ``component_id`` maps every node to the smallest node index in its
    component, so component labels are stable under re-traversal.
    """

    m: int
    n: int
    edges: frozenset[tuple[int, int]]  # (p_side, m + q_side), p first
    component_id: dict[int, int]

    @property
    def components(self) -> int:
        return len(set(self.component_id.values()))

    def component_of(self, node: int) -> int:
        return self.component_id[node]

    def nodes_of_component(self, label: int) -> tuple[int, ...]:
        return tuple(v for v in sorted(self.component_id) if self.component_id[v] == label)


def build_graph(p: SimplePolygon, q: SimplePolygon) -> DisjointnessGraph:
    """Disjointness graph of an instance in general position."""
    report = crossing_count(p, q)  # validates general position
    crossing_pairs = set(report.pairs)
    m, n = p.m, q.m
    edges = frozenset(
        (i, m + j)
        for i in range(m)
        for j in range(n)
        if (i, j) not in crossing_pairs
    )
    parent = list(range(m + n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    component_id = {v: find(v) for v in range(m + n)}
    return DisjointnessGraph(m=m, n=n, edges=edges, component_id=component_id)


@dataclass(frozen=True)
class BoundReport:
    ok: bool
    crossings: int
    disjoint_pairs: int
    components: int
    bound: int


def check_complementarity(p: SimplePolygon, q: SimplePolygon) -> BoundReport:
    """crossings + disjoint pairs == m*n, and the component crossing bound."""
    g = build_graph(p, q)
    crossings = p.m * q.m - len(g.edges)
    actual = crossing_count(p, q).total
    c = g.components
    bound = p.m * q.m - (p.m + q.m) + c
    ok = (actual == crossings) and (actual <= bound)
    return BoundReport(
        ok=ok,
        crossings=actual,
        disjoint_pairs=len(g.edges),
        components=c,
        bound=bound,
    )


@dataclass(frozen=True)
class WeakBoundReport:
    ok: bool
    components: int
    smaller_side_count: int

    @property
    def bound_doubled(self) -> int:
        # components <= (n + 5) / 2, kept in integers
        return self.smaller_side_count + 5


def check_weak_component_bound(p: SimplePolygon, q: SimplePolygon) -> WeakBoundReport:
    """Component bound 2*c <= n + 5 for odd/odd instances (n the smaller count).

    Raises ParityError when either polygon has an even number of sides — the
    bound's derivation needs both boundary walks to have odd length.
    """
    if p.m % 2 == 0 or q.m % 2 == 0:
        raise ParityError(f"both side counts must be odd, got {p.m}, {q.m}")
    g = build_graph(p, q)
    n = min(p.m, q.m)
    return WeakBoundReport(ok=2 * g.components <= n + 5, components=g.components, smaller_side_count=n)
