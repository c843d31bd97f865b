"""Simple polygons and exact boundary-crossing counts.

A polygon is a cyclic tuple of vertices; side ``i`` runs from vertex ``i``
to vertex ``i + 1 (mod m)``.  Counting how often two polygon boundaries
cross is only meaningful in general position (no three combined vertices
collinear, no two combined sides parallel); in general position every
boundary intersection is a proper crossing of two side interiors, so the
count is a plain sum of proper-cross tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    GeneralPositionViolation,
    NotSimple,
    PreconditionFailed,
    TooFewVertices,
)
from .geom import (
    GPReport,
    Point2,
    Segment,
    check_general_position,
    line_meet,
    orientation,
    point_on_segment,
    proper_cross,
    segments_intersect,
    sign,
)


def validate_simple(vertices: Sequence[Point2]) -> None:
    """Raise unless the cyclic vertex sequence bounds a simple polygon.

    Rejects: fewer than 3 vertices, repeated vertices, a vertex lying on a
    non-incident side, consecutive sides folding back onto each other, and
    any two non-adjacent sides that touch.
    """
    m = len(vertices)
    if m < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {m}")
    for i in range(m):
        for j in range(i + 1, m):
            if vertices[i] == vertices[j]:
                raise NotSimple(f"repeated vertex at positions {i} and {j}")
    sides = [Segment(vertices[i], vertices[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        j = (i + 1) % m
        v = vertices[j]  # shared endpoint of sides i and j
        u = vertices[i]
        w = vertices[(i + 2) % m]
        if orientation(u, v, w) == 0:
            # Collinear corner: a genuine fold-back, or (for m == 3) a
            # degenerate flat triangle. Either way the boundary overlaps.
            raise NotSimple(
                f"sides {i} and {j} overlap at vertex {j}", sides=(i, j)
            )
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue  # adjacent around the wrap
            if segments_intersect(sides[i], sides[j]):
                raise NotSimple(
                    f"sides {i} and {j} intersect", sides=(i, j)
                )


@dataclass(frozen=True)
class SimplePolygon:
    """An immutable simple polygon; validity is checked at construction."""

    vertices: tuple[Point2, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        validate_simple(self.vertices)

    @property
    def m(self) -> int:
        return len(self.vertices)

    def side(self, i: int) -> Segment:
        v = self.vertices
        return Segment(v[i % self.m], v[(i + 1) % self.m])

    @property
    def sides(self) -> tuple[Segment, ...]:
        return tuple(self.side(i) for i in range(self.m))

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.vertices)


@dataclass(frozen=True)
class CrossingReport:
    """All boundary crossings of a polygon pair, in side-index order.

    ``pairs[k] == (i, j)`` means side ``i`` of the first polygon properly
    crosses side ``j`` of the second at ``points[k]``.
    """

    total: int
    pairs: tuple[tuple[int, int], ...]
    points: tuple[Point2, ...]


def ensure_general_position(p: SimplePolygon, q: SimplePolygon) -> GPReport:
    report = check_general_position(p.vertices, q.vertices)
    if not report.ok:
        raise GeneralPositionViolation(
            f"general position violated: {report.reason}", report=report
        )
    return report


def crossing_count(p: SimplePolygon, q: SimplePolygon) -> CrossingReport:
    """Count proper crossings between the boundaries of two polygons.

    Requires general position of the combined vertex set (raises
    GeneralPositionViolation otherwise), which guarantees that boundary
    intersections are exactly the proper side crossings.
    """
    ensure_general_position(p, q)
    pairs = []
    points = []
    q_sides = q.sides
    for i, sp in enumerate(p.sides):
        for j, sq in enumerate(q_sides):
            if proper_cross(sp, sq):
                pairs.append((i, j))
                points.append(line_meet(sp, sq))
    return CrossingReport(total=len(pairs), pairs=tuple(pairs), points=tuple(points))


def segment_polygon_crossings(s: Segment, poly: SimplePolygon) -> int:
    """Number of sides of ``poly`` properly crossed by the segment ``s``.

    Preconditions (PreconditionFailed otherwise): no vertex of ``poly`` lies
    on the supporting line of ``s``, and neither endpoint of ``s`` lies on
    the boundary.  Both hold for any side of a partner polygon in general
    position.
    """
    for k, v in enumerate(poly.vertices):
        if orientation(s.a, s.b, v) == 0:
            raise PreconditionFailed(f"vertex {k} lies on the segment's line")
    for k, side in enumerate(poly.sides):
        if point_on_segment(s.a, side) or point_on_segment(s.b, side):
            raise PreconditionFailed(f"segment endpoint lies on side {k}")
    return sum(1 for side in poly.sides if proper_cross(s, side))


def line_polygon_crossings(s: Segment, poly: SimplePolygon) -> int:
    """Number of sides of ``poly`` strictly straddled by the line through ``s``.

    Precondition: no vertex of ``poly`` on the line (PreconditionFailed).
    The result is always even — the boundary is a closed curve — and
    therefore at most ``m - 1`` when ``poly`` has an odd number of sides.
    """
    hits = 0
    verts = poly.vertices
    m = len(verts)
    signs = []
    for k, v in enumerate(verts):
        o = orientation(s.a, s.b, v)
        if o == 0:
            raise PreconditionFailed(f"vertex {k} lies on the line")
        signs.append(o)
    for k in range(m):
        if signs[k] != signs[(k + 1) % m]:
            hits += 1
    return hits
