"""Ramsey-type extraction tools.

Transitive sub-tournaments, Erdős–Szekeres cups/caps for points and for
lines, and monotone subsequences — each returned structure is re-verified by
its defining predicate before being handed back.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, DuplicateEntries, PreconditionFailed
from .geom import CCW, CW, Point2, orientation

Line = tuple[Fraction, Fraction]  # y = a*x + b as (a, b); non-vertical


@dataclass(frozen=True)
class Tournament:
    """A complete directed graph: exactly one arc between every node pair."""

    size: int
    beats: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        if self.size < 1 or len(self.beats) != self.size:
            raise DomainError("beats matrix must be size x size, size >= 1")
        for i, row in enumerate(self.beats):
            if len(row) != self.size:
                raise DomainError("beats matrix must be square")
            if row[i]:
                raise DomainError(f"node {i} beats itself")
            for j in range(i + 1, self.size):
                if row[j] == self.beats[j][i]:
                    raise DomainError(
                        f"exactly one of ({i},{j}) and ({j},{i}) must hold"
                    )

    @classmethod
    def random(cls, size: int, rng: random.Random) -> "Tournament":
        rows = [[False] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                if rng.getrandbits(1):
                    rows[i][j] = True
                else:
                    rows[j][i] = True
        return cls(size=size, beats=tuple(tuple(r) for r in rows))


def transitive_subtournament(t: Tournament) -> list[int]:
    """A chain of nodes in which every earlier node beats every later one.

    Greedy recursion: take the lowest-index node as pivot, recurse into the
    larger of its out-/in-neighbourhoods (out preferred on ties).  The chain
    has length at least 1 + floor(log2(size)).
    """

    def rec(nodes: list[int]) -> list[int]:
        if not nodes:
            return []
        v = nodes[0]
        out = [u for u in nodes[1:] if t.beats[v][u]]
        inn = [u for u in nodes[1:] if t.beats[u][v]]
        if len(out) >= len(inn):
            return [v] + rec(out)
        return rec(inn) + [v]

    chain = rec(list(range(t.size)))
    assert len(chain) >= 1 + (t.size.bit_length() - 1)
    assert all(
        t.beats[chain[i]][chain[j]]
        for i in range(len(chain))
        for j in range(i + 1, len(chain))
    )
    return chain


def es_number(r: int, s: int) -> int:
    """Threshold value binom(r+s-4, r-2): any general-position set of more
    than this many points contains an r-cup or an s-cap."""
    if r < 2 or s < 2:
        raise DomainError(f"es_number needs r, s >= 2, got ({r}, {s})")
    return math.comb(r + s - 4, r - 2)


class CupCapKind(Enum):
    CUP = "cup"
    CAP = "cap"


@dataclass(frozen=True)
class CupCapResult:
    kind: CupCapKind
    indices: tuple[int, ...]  # into the input list, ordered by x / by slope


def is_point_cup(points: Sequence[Point2]) -> bool:
    """Points in x-order where each interior point lies below its chord."""
    for i in range(len(points) - 1):
        if points[i].x >= points[i + 1].x:
            return False
    return all(
        orientation(points[i - 1], points[i], points[i + 1]) == CCW
        for i in range(1, len(points) - 1)
    )


def is_point_cap(points: Sequence[Point2]) -> bool:
    """Points in x-order where each interior point lies above its chord."""
    for i in range(len(points) - 1):
        if points[i].x >= points[i + 1].x:
            return False
    return all(
        orientation(points[i - 1], points[i], points[i + 1]) == CW
        for i in range(1, len(points) - 1)
    )


def _lex_smallest_chain(
    order: list[int], pts: Sequence[Point2], turn: int, length: int
) -> Optional[list[int]]:
    """Lexicographically smallest chain (positions into ``order``) of exactly
    ``length`` points whose consecutive triples all turn ``turn``."""
    k = len(order)
    if length > k:
        return None
    if length == 1:
        return [0] if k else None
    # best[i][j]: longest valid chain starting with (order[i], order[j]).
    best = [[2] * k for _ in range(k)]
    for i in range(k - 1, -1, -1):
        for j in range(i + 1, k):
            a, b = pts[order[i]], pts[order[j]]
            top = 2
            row = best[j]
            for h in range(j + 1, k):
                if orientation(a, b, pts[order[h]]) == turn and row[h] + 1 > top:
                    top = row[h] + 1
            best[i][j] = top
    start = None
    for i in range(k):
        for j in range(i + 1, k):
            if best[i][j] >= length:
                start = (i, j)
                break
        if start:
            break
    if start is None:
        return None
    chain = [start[0], start[1]]
    need = length - 2
    while need:
        i, j = chain[-2], chain[-1]
        a, b = pts[order[i]], pts[order[j]]
        for h in range(j + 1, k):
            if orientation(a, b, pts[order[h]]) == turn and best[j][h] >= need + 1:
                chain.append(h)
                need -= 1
                break
        else:  # pragma: no cover - the table guarantees an extension
            raise AssertionError("chain table inconsistent")
    return chain


def find_cup_or_cap_points(
    pts: Sequence[Point2], r: int, s: int
) -> CupCapResult:
    """An r-cup or an s-cap in a large-enough general-position point set.

    Preconditions: at least es_number(r, s) + 1 points, pairwise distinct
    x-coordinates, no three collinear.  Preference on double success: cup.
    Returns original indices, ordered by x; ties broken toward the
    lexicographically smallest position sequence.
    """
    if r < 2 or s < 2:
        raise DomainError(f"need r, s >= 2, got ({r}, {s})")
    if len(pts) < es_number(r, s) + 1:
        raise PreconditionFailed(
            f"need at least {es_number(r, s) + 1} points, got {len(pts)}"
        )
    order = sorted(range(len(pts)), key=lambda i: pts[i].x)
    for a, b in zip(order, order[1:]):
        if pts[a].x == pts[b].x:
            raise PreconditionFailed("duplicate x-coordinates")
    k = len(order)
    for i in range(k):
        for j in range(i + 1, k):
            for h in range(j + 1, k):
                if orientation(pts[order[i]], pts[order[j]], pts[order[h]]) == 0:
                    raise PreconditionFailed("three collinear points")
    cup = _lex_smallest_chain(order, pts, CCW, r)
    if cup is not None:
        result = CupCapResult(
            kind=CupCapKind.CUP, indices=tuple(order[i] for i in cup)
        )
        assert is_point_cup([pts[i] for i in result.indices])
        return result
    cap = _lex_smallest_chain(order, pts, CW, s)
    if cap is None:  # pragma: no cover - excluded by the threshold theorem
        raise AssertionError("no cup and no cap above the ES threshold")
    result = CupCapResult(kind=CupCapKind.CAP, indices=tuple(order[i] for i in cap))
    assert is_point_cap([pts[i] for i in result.indices])
    return result


def dual_point(line: Line) -> Point2:
    """Duality y = a*x + b <-> (a, -b); slope order becomes x order and the
    cup/cap kind is preserved."""
    a, b = line
    return Point2(Fraction(a), -Fraction(b))


def _meet(l1: Line, l2: Line) -> Point2:
    a1, b1 = l1
    a2, b2 = l2
    x = Fraction(b2 - b1, a1 - a2)
    return Point2(x, a1 * x + b1)


def _below(point: Point2, line: Line) -> bool:
    a, b = line
    return point.y < a * point.x + b


def is_line_cup(lines: Sequence[Line]) -> bool:
    """Lines in slope order where consecutive neighbours meet below the
    middle line.  Direct evaluation — no duality involved."""
    for i in range(len(lines) - 1):
        if lines[i][0] >= lines[i + 1][0]:
            return False
    return all(
        _below(_meet(lines[i - 1], lines[i + 1]), lines[i])
        for i in range(1, len(lines) - 1)
    )


def is_line_cap(lines: Sequence[Line]) -> bool:
    for i in range(len(lines) - 1):
        if lines[i][0] >= lines[i + 1][0]:
            return False
    return all(
        not _below(_meet(lines[i - 1], lines[i + 1]), lines[i])
        and _meet(lines[i - 1], lines[i + 1]).y
        != lines[i][0] * _meet(lines[i - 1], lines[i + 1]).x + lines[i][1]
        for i in range(1, len(lines) - 1)
    )


def find_cup_or_cap_lines(lines: Sequence[Line], r: int, s: int) -> CupCapResult:
    """An r-cup or an s-cap among non-vertical, pairwise non-parallel lines,
    no three concurrent.

    Computed through the duality (a, b) -> (a, -b) onto the point search,
    then re-verified with the direct line predicate (two independent
    routes).
    """
    k = len(lines)
    slopes = [Fraction(a) for a, _ in lines]
    if len(set(slopes)) != k:
        raise PreconditionFailed("parallel lines")
    for i in range(k):
        for j in range(i + 1, k):
            p = _meet(lines[i], lines[j])
            for h in range(j + 1, k):
                a, b = lines[h]
                if p.y == a * p.x + b:
                    raise PreconditionFailed("three concurrent lines")
    duals = [dual_point(l) for l in lines]
    result = find_cup_or_cap_points(duals, r, s)
    chosen = [lines[i] for i in result.indices]
    if result.kind is CupCapKind.CUP:
        assert is_line_cup(chosen)
    else:
        assert is_line_cap(chosen)
    return result


def longest_monotone(seq: Sequence) -> tuple[list, list]:
    """Longest increasing and longest decreasing subsequences of distinct
    numbers (index-lexicographically smallest maximizers).

    In a sequence of r^2 + 1 distinct numbers, one of the two has length at
    least r + 1.
    """
    k = len(seq)
    if len(set(seq)) != k:
        raise DuplicateEntries("entries must be distinct")

    def extract(up: bool) -> list:
        # length[i]: longest run starting at i, filled right to left.
        length = [1] * k
        for i in range(k - 2, -1, -1):
            vi = seq[i]
            top = 1
            for j in range(i + 1, k):
                if (seq[j] > vi) == up and seq[j] != vi and length[j] + 1 > top:
                    top = length[j] + 1
            length[i] = top
        target = max(length, default=0)
        out = []
        need = target
        prev = None
        for i in range(k):
            if length[i] == need and (prev is None or (seq[i] > prev) == up):
                out.append(seq[i])
                prev = seq[i]
                need -= 1
                if need == 0:
                    break
        return out

    inc = extract(True)
    dec = extract(False)
    assert all(a < b for a, b in zip(inc, inc[1:]))
    assert all(a > b for a, b in zip(dec, dec[1:]))
    return inc, dec
