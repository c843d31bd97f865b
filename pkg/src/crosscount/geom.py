"""Exact rational plane geometry for segment-crossing analysis.

Coordinates are ints or :class:`fractions.Fraction`, mixed freely; every
predicate reduces to the sign of an exact expression, so nothing here ever
rounds or returns an approximate answer.

Conventions used throughout the package:

- ``orientation(a, b, c)`` is the sign of the signed area of the triangle
  ``abc``: ``CCW`` (+1), ``COLLINEAR`` (0) or ``CW`` (-1).
- A *proper cross* is a transversal intersection of two open segments.
- Two disjoint segments are *avoiding* when neither would hit the other if
  extended along its supporting line (parallel disjoint segments avoid).
- ``stabs(q, t)`` asks, for a disjoint non-parallel non-avoiding pair,
  whether the extension of ``q`` is the one that hits ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ConeUndefined, StabUndefined

Rational = Union[int, Fraction]

CCW = 1
COLLINEAR = 0
CW = -1


@dataclass(frozen=True)
class Point2:
    """A point, or a free vector, with exact coordinates.

    ``Point2(2, 3) == Point2(Fraction(2), Fraction(3))`` and the two hash
    alike, because Python's numeric hashing is consistent across int and
    Fraction.
    """

    x: Rational
    y: Rational

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def as_fractions(self) -> "Point2":
        return Point2(Fraction(self.x), Fraction(self.y))


def sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def cross(u: Point2, v: Point2) -> Rational:
    return u.x * v.y - u.y * v.x


def dot(u: Point2, v: Point2) -> Rational:
    return u.x * v.x + u.y * v.y


def orientation(a: Point2, b: Point2, c: Point2) -> int:
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


@dataclass(frozen=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    @property
    def direction(self) -> Point2:
        return self.b - self.a

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


def point_on_segment(p: Point2, s: Segment) -> bool:
    """Whether ``p`` lies on the closed segment ``s``."""
    if orientation(s.a, s.b, p) != COLLINEAR:
        return False
    # Collinear: reduce to a 1-d interval test on the dominant coordinate.
    if s.a.x != s.b.x:
        lo, hi = (s.a.x, s.b.x) if s.a.x < s.b.x else (s.b.x, s.a.x)
        return lo <= p.x <= hi
    lo, hi = (s.a.y, s.b.y) if s.a.y < s.b.y else (s.b.y, s.a.y)
    return lo <= p.y <= hi


def proper_cross(s: Segment, t: Segment) -> bool:
    """Transversal intersection of the two open segments."""
    o1 = orientation(s.a, s.b, t.a)
    o2 = orientation(s.a, s.b, t.b)
    if o1 * o2 >= 0:
        return False
    o3 = orientation(t.a, t.b, s.a)
    o4 = orientation(t.a, t.b, s.b)
    return o3 * o4 < 0


def segments_intersect(s: Segment, t: Segment) -> bool:
    """Whether the closed segments share at least one point."""
    if proper_cross(s, t):
        return True
    return (
        point_on_segment(t.a, s)
        or point_on_segment(t.b, s)
        or point_on_segment(s.a, t)
        or point_on_segment(s.b, t)
    )


def parallel(s: Segment, t: Segment) -> bool:
    return cross(s.direction, t.direction) == 0


def line_meet(s: Segment, t: Segment) -> Optional[Point2]:
    """Intersection of the supporting lines; None iff they are parallel."""
    d1 = s.direction
    d2 = t.direction
    den = cross(d1, d2)
    if den == 0:
        return None
    lam = Fraction(cross(t.a - s.a, d2)) / Fraction(den)
    return Point2(Fraction(s.a.x) + lam * d1.x, Fraction(s.a.y) + lam * d1.y)


def is_avoiding(s: Segment, t: Segment) -> bool:
    """Disjoint segments whose extensions miss each other.

    True iff the closed segments are disjoint and the meet of their
    supporting lines (when one exists) lies on neither of them.  Disjoint
    parallel segments avoid each other.
    """
    if segments_intersect(s, t):
        return False
    p = line_meet(s, t)
    if p is None:
        return True
    return not (point_on_segment(p, s) or point_on_segment(p, t))


def stabs(q: Segment, t: Segment) -> bool:
    """Whether the extension of ``q`` hits the segment ``t``.

    Defined only for disjoint, non-parallel, non-avoiding pairs: exactly one
    of the two segments contains the meet of the supporting lines, and this
    returns True when ``t`` is that segment.  Raises StabUndefined otherwise.
    """
    if segments_intersect(q, t):
        raise StabUndefined("segments intersect")
    p = line_meet(q, t)
    if p is None:
        raise StabUndefined("segments are parallel")
    on_t = point_on_segment(p, t)
    if not on_t and not point_on_segment(p, q):
        raise StabUndefined("segments are avoiding")
    return on_t


@dataclass(frozen=True)
class Cone:
    """Closed convex cone with a designated apex and two edge directions.

    ``d1`` points from the apex toward the first generating segment, ``d2``
    toward the second.  The directions are never parallel.
    """

    apex: Point2
    d1: Point2
    d2: Point2


def cone_of(s: Segment, t: Segment) -> Cone:
    """The cone spanned by two segments, seen from their (extended) meet.

    Two shapes are accepted: segments sharing exactly one endpoint (the apex
    is the shared endpoint), and disjoint non-parallel segments whose
    supporting lines meet off both of them (the apex is that meet).  Anything
    else — crossing or touching segments, parallel segments, a meet lying on
    a segment — raises ConeUndefined.
    """
    shared = [
        (u, v)
        for u in (s.a, s.b)
        for v in (t.a, t.b)
        if u == v
    ]
    if len(shared) >= 2:
        raise ConeUndefined("segments coincide")
    if len(shared) == 1:
        apex = shared[0][0]
        far_s = s.b if s.a == apex else s.a
        far_t = t.b if t.a == apex else t.a
        d1 = far_s - apex
        d2 = far_t - apex
        if cross(d1, d2) == 0:
            raise ConeUndefined("segments are collinear at the shared endpoint")
        return Cone(apex, d1, d2)
    if segments_intersect(s, t):
        raise ConeUndefined("segments cross")
    apex = line_meet(s, t)
    if apex is None:
        raise ConeUndefined("segments are parallel")
    if point_on_segment(apex, s) or point_on_segment(apex, t):
        raise ConeUndefined("line meet lies on a segment")
    d1 = s.a - apex
    d2 = t.a - apex
    return Cone(apex, d1, d2)


def cone_coordinates(c: Cone, p: Point2) -> tuple[int, int]:
    """Signs of the coordinates of ``p - apex`` in the (d1, d2) frame.

    Writing ``p - apex = alpha*d1 + beta*d2``, returns
    ``(sign(alpha), sign(beta))`` without performing any division.
    """
    v = p - c.apex
    den = sign(cross(c.d1, c.d2))
    return (sign(cross(v, c.d2)) * den, sign(cross(c.d1, v)) * den)


def cone_contains(c: Cone, p: Point2, *, interior: bool = False) -> bool:
    """Membership of ``p`` in the closed (or open) cone."""
    sa, sb = cone_coordinates(c, p)
    if interior:
        return sa > 0 and sb > 0
    return sa >= 0 and sb >= 0


@dataclass(frozen=True)
class GPReport:
    """Outcome of a general-position audit over labelled vertex cycles.

    Labels are ``(cycle_index, vertex_index)`` for collinear triples and
    ``(cycle_index, side_index)`` for parallel side pairs.
    """

    ok: bool
    reason: Optional[str] = None  # "collinear" | "parallel"
    collinear: Optional[tuple[tuple[int, int], ...]] = None
    parallel: Optional[tuple[tuple[int, int], ...]] = None


def check_general_position(*cycles: Sequence[Point2]) -> GPReport:
    """Audit one or more vertex cycles for general position.

    General position means: no three of the combined vertices are collinear
    (this also rules out repeated points), and no two of the combined sides
    are parallel — including side pairs within a single cycle.
    """
    labelled = [
        (ci, vi, p.x, p.y)
        for ci, cyc in enumerate(cycles)
        for vi, p in enumerate(cyc)
    ]
    n = len(labelled)
    for i in range(n):
        _, _, ax, ay = labelled[i]
        for j in range(i + 1, n):
            _, _, bx, by = labelled[j]
            ux = bx - ax
            uy = by - ay
            for k in range(j + 1, n):
                _, _, cx, cy = labelled[k]
                if ux * (cy - ay) == uy * (cx - ax):
                    return GPReport(
                        ok=False,
                        reason="collinear",
                        collinear=(
                            labelled[i][:2],
                            labelled[j][:2],
                            labelled[k][:2],
                        ),
                    )
    sides = []
    for ci, cyc in enumerate(cycles):
        m = len(cyc)
        for si in range(m):
            v = cyc[si]
            w = cyc[(si + 1) % m]
            sides.append((ci, si, w.x - v.x, w.y - v.y))
    for i in range(len(sides)):
        _, _, ux, uy = sides[i]
        for j in range(i + 1, len(sides)):
            _, _, vx, vy = sides[j]
            if ux * vy == uy * vx:
                return GPReport(
                    ok=False,
                    reason="parallel",
                    parallel=(sides[i][:2], sides[j][:2]),
                )
    return GPReport(ok=True)
