"""Structural analysis of how one polygon winds around two chosen sides.

Fixing two sides s, t of the first polygon whose supporting lines meet at an
apex, the plane splits into four quadrants.  In the frame used here,
quadrant 1 is the closed cone spanned by the directions from the apex
toward s and toward t, quadrant 3 is its opposite, and quadrants 2 / 4 are
the side wedges adjacent to t / s respectively.  If every side of the
second polygon meets s or t (which is forced whenever s and t lie in
different components of the disjointness graph — a side disjoint from both
would join them), then walking the second polygon's vertex cycle induces a
closed walk on the quadrants with a very restricted shape:

- steps between quadrants 1 and 4 cross s and miss t (label ``a``),
- steps between quadrants 1 and 2 cross t and miss s (label ``b``),
- steps between quadrants 1 and 3 cross exactly one of them (``a`` or ``b``),
- steps between quadrants 2 and 4 cross at least one (wildcard ``*``),
- any other step would meet neither segment and cannot occur.

Closed walks of odd length in this label structure always contain two
cyclically consecutive steps labeled ``a`` and ``b`` (checked exhaustively
by ``check_odd_closed_walks``), which yields, for any eligible side pair,
an *associated pair* of consecutive partner sides with a crossed/disjoint
pattern, a cone containment (*hooking*) in at least one direction, and a
separating *axis* through the two apexes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .disjointness import DisjointnessGraph
from .errors import (
    AssociationNotFound,
    DegenerateAxis,
    PreconditionFailed,
)
from .geom import (
    Cone,
    Point2,
    Segment,
    cone_contains,
    cone_coordinates,
    cone_of,
    is_avoiding,
    orientation,
    point_on_segment,
    segments_intersect,
)
from .polygon import SimplePolygon

# The side-walk multigraph: four quadrant nodes, five labeled edges.
WALK_EDGES = (
    ("e1", frozenset({2, 4}), "*"),
    ("e2", frozenset({1, 4}), "a"),
    ("e3", frozenset({1, 2}), "b"),
    ("e4", frozenset({1, 3}), "a"),
    ("e5", frozenset({1, 3}), "b"),
)


@dataclass(frozen=True)
class WalkStep:
    side: int  # index of the walked polygon's side
    start: int  # quadrant of vertex `side` (1..4)
    end: int  # quadrant of the next vertex
    label: str  # "a" | "b" | "*"


@dataclass(frozen=True)
class QuadrantWalk:
    steps: tuple[WalkStep, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def _quadrant(signs: tuple[int, int]) -> int:
    sa, sb = signs
    if sa > 0:
        return 1 if sb > 0 else 4
    return 2 if sb > 0 else 3


def classify_walk(walked: SimplePolygon, s: Segment, t: Segment) -> QuadrantWalk:
    """Quadrant walk of ``walked``'s boundary in the frame of (s, t).

    Preconditions (PreconditionFailed otherwise): the frame cone of (s, t)
    exists, no vertex of ``walked`` lies on a supporting line of s or t
    (automatic in general position), no side passes through the apex, and
    every side of ``walked`` meets s or t.
    """
    frame = cone_of(s, t)
    verts = walked.vertices
    n = len(verts)
    quadrants = []
    for k, v in enumerate(verts):
        signs = cone_coordinates(frame, v)
        if 0 in signs:
            raise PreconditionFailed(
                f"vertex {k} of the walked polygon lies on a frame line"
            )
        quadrants.append(_quadrant(signs))
    steps = []
    for k in range(n):
        a, b = quadrants[k], quadrants[(k + 1) % n]
        side = walked.side(k)
        pair = frozenset({a, b})
        crosses_s = segments_intersect(side, s)
        crosses_t = segments_intersect(side, t)
        if pair == {1, 4}:
            ok, label = crosses_s, "a"
        elif pair == {1, 2}:
            ok, label = crosses_t, "b"
        elif pair == {1, 3} or pair == {2, 4}:
            if point_on_segment(frame.apex, side):
                raise PreconditionFailed(
                    f"side {k} of the walked polygon passes through the frame apex"
                )
            if pair == {1, 3}:
                # Crossing both is geometrically impossible here: the step
                # meets one segment's ray and the other's opposite ray.
                ok = crosses_s != crosses_t
                label = "a" if crosses_s else "b"
            else:
                ok, label = crosses_s or crosses_t, "*"
        else:
            ok, label = False, ""
        if not ok:
            raise PreconditionFailed(
                f"side {k} of the walked polygon meets neither frame segment "
                "(the frame sides are not in different components)"
            )
        steps.append(WalkStep(side=k, start=a, end=b, label=label))
    return QuadrantWalk(steps=tuple(steps))


@dataclass(frozen=True)
class OddWalkReport:
    """Exhaustive audit of odd closed walks in the side-walk multigraph."""

    max_len: int
    ok: bool
    counterexample: Optional[tuple[str, ...]]  # edge names of a bad walk
    ab_free_closed_by_length: dict[int, int]  # all lengths found are even
    unfolded_is_path: bool


def _unfolded_graph() -> dict[str, set[str]]:
    """Split quadrant nodes 1 and 3 by incident label: the walk graph unfolds.

    An a/b-adjacency-free walk can never switch between a-edges and b-edges
    at nodes 1 or 3 (their only incident labels are a and b), so it lifts to
    this graph, where node "1" becomes "1a"/"1b" and "3" becomes "3a"/"3b".
    """
    adj: dict[str, set[str]] = {}

    def lift(node: int, label: str) -> str:
        if node in (1, 3) and label in ("a", "b"):
            return f"{node}{label}"
        return str(node)

    for _, nodes, label in WALK_EDGES:
        u, v = sorted(nodes)
        lu, lv = lift(u, label), lift(v, label)
        adj.setdefault(lu, set()).add(lv)
        adj.setdefault(lv, set()).add(lu)
    return adj


def _is_path(adj: dict[str, set[str]]) -> bool:
    nodes = list(adj)
    edge_count = sum(len(nb) for nb in adj.values()) // 2
    degrees = sorted(len(nb) for nb in adj.values())
    if edge_count != len(nodes) - 1:
        return False
    if degrees.count(1) != 2 or any(d > 2 for d in degrees):
        return False
    seen = set()
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        stack.extend(adj[u])
    return len(seen) == len(nodes)


def check_odd_closed_walks(max_len: int = 13) -> OddWalkReport:
    """Every odd closed walk of length <= max_len has adjacent labels a, b.

    Checked by exhaustively enumerating the closed walks *without* two
    cyclically consecutive a/b labels: all of them turn out to have even
    length, so an odd closed walk must contain the adjacent pair.  The
    enumeration prunes nothing else, so it is a complete search of the
    claim's complement.  The structural reason — splitting quadrant nodes 1
    and 3 by incident label unfolds the multigraph into a path, and closed
    walks on a path are even — is verified alongside.
    """
    by_length: dict[int, int] = {}
    counterexample: Optional[tuple[str, ...]] = None

    incident: dict[int, list[tuple[str, int, str]]] = {1: [], 2: [], 3: [], 4: []}
    for name, nodes, label in WALK_EDGES:
        u, v = sorted(nodes)
        incident[u].append((name, v, label))
        incident[v].append((name, u, label))

    def extend(
        start: int,
        node: int,
        first_label: str,
        prev_label: str,
        trail: list[str],
    ) -> None:
        nonlocal counterexample
        if len(trail) > 0 and node == start:
            # Closed: cyclic adjacency of last and first labels must also
            # avoid {a, b} for the walk to count as label-free.
            if {prev_label, first_label} != {"a", "b"}:
                length = len(trail)
                by_length[length] = by_length.get(length, 0) + 1
                if length % 2 == 1 and counterexample is None:
                    counterexample = tuple(trail)
            # A closed walk may still continue into a longer closed walk.
        if len(trail) == max_len:
            return
        for name, other, label in incident[node]:
            if {prev_label, label} == {"a", "b"}:
                continue
            trail.append(name)
            extend(start, other, first_label, label, trail)
            trail.pop()

    for start in (1, 2, 3, 4):
        for name, other, label in incident[start]:
            # Fix the first edge; walks are counted once per starting node
            # and first edge, which is fine — we need emptiness of the odd
            # set, not exact counts of distinct closed walks.
            extend(start, other, label, label, [name])

    adj = _unfolded_graph()
    report = OddWalkReport(
        max_len=max_len,
        ok=counterexample is None,
        counterexample=counterexample,
        ab_free_closed_by_length=dict(sorted(by_length.items())),
        unfolded_is_path=_is_path(adj),
    )
    return report


@dataclass(frozen=True)
class AssociatedPair:
    """Two consecutive partner sides matched to a side pair of this polygon.

    The pair polygon contributes sides (first_index, second) — consecutive
    (second = first_index + 1) or avoiding; the partner polygon contributes
    consecutive sides partner_index and partner_index + partner_direction.
    Crossing pattern: the partner side at ``partner_index`` misses the
    pair's first side and crosses its second; the neighbouring partner side
    does the opposite.

    ``pair_hooking``: the pair's cone contains the partner pair's apex.
    ``partner_hooking``: the partner pair's cone contains the pair's apex.
    At least one always holds.
    """

    first_index: int
    partner_index: int
    partner_direction: int  # +1 or -1
    pair_apex: Point2
    partner_apex: Point2
    pair_hooking: bool
    partner_hooking: bool


def _pattern_holds(
    q_b: Segment, q_a: Segment, s: Segment, t: Segment
) -> bool:
    """The associated-pair crossing pattern.

    q_b misses s and crosses t; q_a crosses s and misses t.
    """
    return (
        not segments_intersect(q_b, s)
        and segments_intersect(q_b, t)
        and segments_intersect(q_a, s)
        and not segments_intersect(q_a, t)
    )


def _build_pair(
    first_index: int,
    s: Segment,
    t: Segment,
    partner: SimplePolygon,
    j: int,
    direction: int,
) -> AssociatedPair:
    pair_cone = cone_of(s, t)
    partner_cone = cone_of(partner.side(j), partner.side(j + direction))
    pair_hooking = cone_contains(pair_cone, partner_cone.apex)
    partner_hooking = cone_contains(partner_cone, pair_cone.apex)
    return AssociatedPair(
        first_index=first_index,
        partner_index=j,
        partner_direction=direction,
        pair_apex=pair_cone.apex,
        partner_apex=partner_cone.apex,
        pair_hooking=pair_hooking,
        partner_hooking=partner_hooking,
    )


def find_associated_pair(
    pair_poly: SimplePolygon, i: int, partner: SimplePolygon
) -> AssociatedPair:
    """Associated partner pair for the consecutive sides (i, i+1).

    Precondition: every side of ``partner`` meets side i or side i+1 of
    ``pair_poly`` — guaranteed whenever the two sides lie in different
    components of the disjointness graph.  The walk's closed odd label
    sequence then contains an adjacent a/b pair; among all of them the one
    with the smallest partner index is returned, breaking a remaining tie
    toward direction +1.
    """
    s = pair_poly.side(i)
    t = pair_poly.side(i + 1)
    walk = classify_walk(partner, s, t)
    n = len(walk)
    candidates = []
    for k in range(n):
        la = walk.steps[k].label
        lb = walk.steps[(k + 1) % n].label
        if {la, lb} == {"a", "b"}:
            if la == "b":
                candidates.append(((k) % n, +1))
            else:
                candidates.append(((k + 1) % n, -1))
    if not candidates:
        raise AssociationNotFound(
            f"no adjacent a/b steps for pair ({i}, {i + 1}) — "
            "odd closed walks must contain one"
        )
    j, direction = min(candidates, key=lambda c: (c[0], -c[1]))
    ap = _build_pair(i, s, t, partner, j, direction)
    if not _pattern_holds(partner.side(j), partner.side(j + direction), s, t):
        raise AssociationNotFound(
            f"walk labels inconsistent with crossing pattern at partner side {j}"
        )
    return ap


def find_associated_pair_avoiding(
    pair_poly: SimplePolygon, i: int, k: int, partner: SimplePolygon
) -> AssociatedPair:
    """Associated partner pair for two *avoiding* sides (i, k).

    Same conclusion as for consecutive sides; the frame apex is the meet of
    the two supporting lines.  Precondition: the sides avoid each other and
    every partner side meets one of them (different components).
    """
    s = pair_poly.side(i)
    t = pair_poly.side(k)
    if not is_avoiding(s, t):
        raise PreconditionFailed(f"sides {i} and {k} are not avoiding")
    walk = classify_walk(partner, s, t)
    n = len(walk)
    candidates = []
    for idx in range(n):
        la = walk.steps[idx].label
        lb = walk.steps[(idx + 1) % n].label
        if {la, lb} == {"a", "b"}:
            if la == "b":
                candidates.append((idx % n, +1))
            else:
                candidates.append(((idx + 1) % n, -1))
    if not candidates:
        raise AssociationNotFound(
            f"no adjacent a/b steps for avoiding pair ({i}, {k})"
        )
    j, direction = min(candidates, key=lambda c: (c[0], -c[1]))
    ap = _build_pair(i, s, t, partner, j, direction)
    if not _pattern_holds(partner.side(j), partner.side(j + direction), s, t):
        raise AssociationNotFound(
            f"walk labels inconsistent with crossing pattern at partner side {j}"
        )
    return ap


def _segment_side_of_line(
    a: Point2, b: Point2, seg: Segment, allowed_on: Point2
) -> int:
    """Which open halfplane of line (a, b) a segment occupies.

    The segment may touch the line only at ``allowed_on`` (its own apex).
    Returns +1 / -1, or 0 if the segment straddles or improperly touches.
    """
    signs = []
    for p in (seg.a, seg.b):
        o = orientation(a, b, p)
        if o == 0 and p != allowed_on:
            return 0
        if o != 0:
            signs.append(o)
    if not signs:
        return 0
    if len(signs) == 2 and signs[0] != signs[1]:
        return 0
    return signs[0]


def check_axis(
    ap: AssociatedPair, pair_poly: SimplePolygon, partner: SimplePolygon
) -> bool:
    """The line through the two apexes separates the four sides correctly.

    The pair's first side lands with the partner's neighbouring side on one
    open halfplane, and the pair's second side with the partner's indexed
    side on the other; each segment may touch the axis only at its apex.
    """
    a, b = ap.pair_apex, ap.partner_apex
    if a == b:
        raise DegenerateAxis("the two apexes coincide")
    i = ap.first_index
    j = ap.partner_index
    d = ap.partner_direction
    side_pi = _segment_side_of_line(a, b, pair_poly.side(i), a)
    side_pn = _segment_side_of_line(a, b, pair_poly.side(i + 1), a)
    side_qj = _segment_side_of_line(a, b, partner.side(j), b)
    side_qn = _segment_side_of_line(a, b, partner.side(j + d), b)
    if 0 in (side_pi, side_pn, side_qj, side_qn):
        return False
    return side_pi == side_qn and side_pn == side_qj and side_pi == -side_pn


def eligible_consecutive_pairs(graph: DisjointnessGraph, *, role: str = "p") -> list[int]:
    """Indices i where sides i and i+1 lie in different components.

    ``role`` selects which polygon's sides are scanned: "p" for the first
    (nodes 0..m-1), "q" for the second (nodes m..m+n-1).
    """
    if role == "p":
        count, offset = graph.m, 0
    elif role == "q":
        count, offset = graph.n, graph.m
    else:
        raise ValueError(f"role must be 'p' or 'q', got {role!r}")
    out = []
    for i in range(count):
        a = graph.component_id[offset + i]
        b = graph.component_id[offset + (i + 1) % count]
        if a != b:
            out.append(i)
    return out


def associated_candidates(
    pair_poly: SimplePolygon, i: int, partner: SimplePolygon
) -> list[AssociatedPair]:
    """All consecutive partner pairs showing the crossing pattern for (i, i+1).

    Brute force over every partner side and direction — no walk machinery —
    so it doubles as an independent oracle for the walk-based finder.
    """
    s = pair_poly.side(i)
    t = pair_poly.side(i + 1)
    found = []
    n = partner.m
    for j in range(n):
        for direction in (+1, -1):
            if _pattern_holds(partner.side(j), partner.side(j + direction), s, t):
                found.append(_build_pair(i, s, t, partner, j, direction))
    return found


@dataclass(frozen=True)
class HookingExclusionViolation:
    role: str  # which polygon supplied the consecutive pairs
    pair_a: int  # first index of each consecutive pair
    pair_b: int
    mode: str  # "both_hooking" | "both_hooked"


@dataclass(frozen=True)
class HookingExclusionReport:
    ok: bool
    audited_pair_pairs: int
    violations: tuple[HookingExclusionViolation, ...]


def _audit_one_role(
    pair_poly: SimplePolygon,
    partner: SimplePolygon,
    component_of: list[int],
    role: str,
) -> tuple[int, list[HookingExclusionViolation]]:
    m = pair_poly.m
    eligible = [
        i for i in range(m) if component_of[i] != component_of[(i + 1) % m]
    ]
    # Hooking ability of each eligible pair, over all pattern witnesses.
    ability: dict[int, tuple[bool, bool]] = {}
    for i in eligible:
        cands = associated_candidates(pair_poly, i, partner)
        ability[i] = (
            any(c.pair_hooking for c in cands),
            any(c.partner_hooking for c in cands),  # partner hooking == pair hooked
        )
    audited = 0
    violations = []
    for a_pos in range(len(eligible)):
        i = eligible[a_pos]
        for b_pos in range(a_pos + 1, len(eligible)):
            k = eligible[b_pos]
            if (k - i) % m in (0, 1) or (i - k) % m in (0, 1):
                continue  # the two pairs share a side
            comps = {
                component_of[i],
                component_of[(i + 1) % m],
                component_of[k],
                component_of[(k + 1) % m],
            }
            if len(comps) != 4:
                continue
            audited += 1
            hook_i, hooked_i = ability[i]
            hook_k, hooked_k = ability[k]
            if hook_i and hook_k:
                violations.append(
                    HookingExclusionViolation(role=role, pair_a=i, pair_b=k, mode="both_hooking")
                )
            if hooked_i and hooked_k:
                violations.append(
                    HookingExclusionViolation(role=role, pair_a=i, pair_b=k, mode="both_hooked")
                )
    return audited, violations


def audit_hooking_exclusion(
    p: SimplePolygon, q: SimplePolygon, graph: DisjointnessGraph
) -> HookingExclusionReport:
    """Audit that two side-disjoint consecutive pairs spanning four distinct
    components are never both hooking, nor both hooked.

    "Is hooking" is existential over all pattern witnesses on the partner
    polygon, which only strengthens the audit.  Both polygons take the role
    of supplying the consecutive pairs.
    """
    comp_p = [graph.component_id[i] for i in range(p.m)]
    comp_q = [graph.component_id[p.m + j] for j in range(q.m)]
    audited_p, viol_p = _audit_one_role(p, q, comp_p, "p")
    audited_q, viol_q = _audit_one_role(q, p, comp_q, "q")
    violations = tuple(viol_p + viol_q)
    return HookingExclusionReport(
        ok=not violations,
        audited_pair_pairs=audited_p + audited_q,
        violations=violations,
    )
