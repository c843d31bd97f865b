"""Verified extremal instances for every side-parity class.

For two simple polygons with m and n sides in general position, the maximum
number of boundary crossings attained by the builders here is

- ``m * n`` when m and n are both even,
- ``m * (n - 1)`` when m is even and n is odd (symmetrically ``(m - 1) * n``),
- ``m * n - (m + n) + 3`` when both are odd.

The even/even instance is a tall "meander" — an m-gon whose sides all cross
a small central square top-to-bottom — paired with a rotated copy whose
sides all cross it left-to-right, so every side pair crosses.  The even/odd
instance pairs the meander with a wide ladder whose n-1 "rung" sides cross
everything and whose single "cap" side crosses nothing.  The odd/odd
instance pairs two capped ladders in a corner arrangement: the two caps and
the two sides adjacent to them trade exactly three extra crossings while a
single side pair stays disjoint.

Every build is verified from scratch (simplicity, general position, exact
crossing count) before it is returned; coordinates are integers produced by
scaling small exact rationals and adding a deterministic jitter that breaks
the base layout's collinear and parallel families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .errors import ConstructionFailed, DomainError, ParityMismatch
from .geom import Point2
from .polygon import SimplePolygon, crossing_count

JITTER = 2048
_SCALE_HEADROOM = 65536  # jitter is ~3% of the smallest scaled clearance
_MAX_ATTEMPTS = 100


class Family(Enum):
    """Side-parity class of an instance."""

    EVEN_EVEN = "even_even"
    EVEN_ODD = "even_odd"  # exactly one of m, n odd (either order)
    ODD_ODD = "odd_odd"


def family_for(m: int, n: int) -> Family:
    if m < 3 or n < 3:
        raise DomainError(f"polygons need at least 3 sides, got {m}, {n}")
    if m % 2 == 0 and n % 2 == 0:
        return Family.EVEN_EVEN
    if m % 2 == 1 and n % 2 == 1:
        return Family.ODD_ODD
    return Family.EVEN_ODD


def expected_crossings(m: int, n: int, family: Family | None = None) -> int:
    """The crossing count the (m, n) builder attains."""
    actual = family_for(m, n)
    if family is not None and family != actual:
        raise ParityMismatch(f"({m}, {n}) is {actual.value}, not {family.value}")
    if actual == Family.EVEN_EVEN:
        return m * n
    if actual == Family.EVEN_ODD:
        return m * (n - 1) if m % 2 == 0 else (m - 1) * n
    return m * n - (m + n) + 3


def _meander(m: int) -> list[Point2]:
    """Tall m-gon (m even) whose every side crosses [-1/2,1/2]^2 top-to-bottom.

    t = m/2 apexes sit just inside |x| < 1/2 at y = 1, t-1 valleys at y = -1
    between them, and one deep vertex far below closes the cycle with two
    long sides that also thread the central square.
    """
    t = m // 2
    tops = [Point2(Fraction(2 * i - (t - 1), 2 * t), Fraction(1)) for i in range(t)]
    bots = [Point2(tops[i].x + Fraction(1, 2 * t), Fraction(-1)) for i in range(t - 1)]
    deep = Point2(Fraction(0), Fraction(-4 * m))
    cycle: list[Point2] = []
    for i in range(t - 1):
        cycle.append(tops[i])
        cycle.append(bots[i])
    cycle.append(tops[t - 1])
    cycle.append(deep)
    return cycle


def _rotated(points: list[Point2]) -> list[Point2]:
    # (x, y) -> (-2y, x): vertical strips become horizontal ones, so the
    # rotated meander crosses the central square left-to-right.
    return [Point2(-2 * p.y, p.x) for p in points]


def _capped_ladder(n: int) -> list[Point2]:
    """Wide n-gon (n odd): n-1 rungs spanning x in [-2, 2], one idle cap.

    Rung heights increase strictly inside |y| < 1/2; the cap is the nearly
    vertical right-hand side between the first and last vertex, held at
    x = 2 while interior right-hand vertices stop at x = 2 - 1/16, so the
    cap touches the rungs only at its own endpoints.
    """
    verts = []
    for j in range(n):
        if j % 2 == 1:
            x = Fraction(-2)
        elif j in (0, n - 1):
            x = Fraction(2)
        else:
            x = Fraction(31, 16)
        y = Fraction(2 * (j + 1) - (n + 1), 2 * (n + 1))
        verts.append(Point2(x, y))
    return verts


def _corner_first(m: int) -> list[Point2]:
    """Odd m-gon: zigzag over a deep baseline, plus a climbing side and a cap.

    Vertices alternate between tops hanging strictly below the cap's chord
    (the sag term) and a baseline at y = -10.  The last two sides are the
    climbing side from (10, -10) to (42, 50) and the cap back to (-15, 500).
    """
    s = (m - 1) // 2

    def top_y(x: Fraction) -> Fraction:
        chord = 50 + (42 - x) * Fraction(150, 19)
        sag = (x + 15) * (42 - x) / 10
        return chord - sag

    xs_top = [Fraction(-15) + Fraction(23 * j, s) for j in range(s)] + [Fraction(42)]
    xs_bot = [Fraction(-15) + Fraction(23 * (2 * k + 1), 2 * s) for k in range(s - 1)]
    xs_bot.append(Fraction(10))
    cycle: list[Point2] = []
    for j in range(s):
        cycle.append(Point2(xs_top[j], top_y(xs_top[j])))
        cycle.append(Point2(xs_bot[j], Fraction(-10)))
    cycle.append(Point2(xs_top[s], top_y(xs_top[s])))  # (42, 50)
    return cycle


def _corner_second(n: int) -> list[Point2]:
    """Odd n-gon: low ladder with a climbing side to (40, 100) and a cap.

    Interior rungs zigzag between x = -20 and x = 20 at heights strictly
    between -6 and -1; the first vertex (41, -6) keeps the cap clear of the
    climbing region of the partner polygon.
    """
    verts = [Point2(Fraction(41), Fraction(-6))]
    for j in range(1, n - 1):
        x = Fraction(-20) if j % 2 == 1 else Fraction(20)
        verts.append(Point2(x, Fraction(-6) + Fraction(5 * j, n - 1)))
    verts.append(Point2(Fraction(40), Fraction(100)))
    return verts


def _base_cycles(m: int, n: int, family: Family) -> tuple[list[Point2], list[Point2]]:
    if family == Family.EVEN_EVEN:
        return _meander(m), _rotated(_meander(n))
    if family == Family.EVEN_ODD:
        if m % 2 == 0:
            return _meander(m), _capped_ladder(n)
        second, first = _base_cycles(n, m, family)
        return first, second
    return _corner_first(m), _corner_second(n)


def _scaled_ints(cycles: tuple[list[Point2], list[Point2]]) -> tuple[list[tuple[int, int]], list[tuple[int, int]], int]:
    dens = {Fraction(c).denominator for cyc in cycles for p in cyc for c in (p.x, p.y)}
    scale = lcm(*dens) * _SCALE_HEADROOM
    out = []
    for cyc in cycles:
        ints = []
        for p in cyc:
            x = Fraction(p.x) * scale
            y = Fraction(p.y) * scale
            ints.append((int(x), int(y)))
        out.append(ints)
    return out[0], out[1], scale


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of one extremal build."""

    m: int
    n: int
    family: Family | None = None  # None: inferred from the parities
    seed: int = 0

    def resolved_family(self) -> Family:
        fam = family_for(self.m, self.n)
        if self.family is not None and self.family != fam:
            raise ParityMismatch(
                f"({self.m}, {self.n}) is {fam.value}, not {self.family.value}"
            )
        return fam


@dataclass(frozen=True)
class Construction:
    """A verified extremal instance."""

    p: SimplePolygon
    q: SimplePolygon
    family: Family
    crossings: int
    attempts: int


def build_extremal(m: int, n: int, *, family: Family | None = None, seed: int = 0) -> Construction:
    """Build and fully verify an extremal (m, n) instance.

    Deterministic for fixed (m, n, seed).  Each attempt jitters the scaled
    base layout, then re-checks simplicity, general position and the exact
    crossing count; a failed check just burns the attempt.  One attempt
    almost always suffices — the retry loop exists because the jitter is
    random and could in principle re-create a degeneracy.
    """
    spec = ConstructionSpec(m=m, n=n, family=family, seed=seed)
    fam = spec.resolved_family()
    target = expected_crossings(m, n)
    base_p, base_q, _ = _scaled_ints(_base_cycles(m, n, fam))
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        rng = random.Random(f"crosscount:{fam.value}:{m}:{n}:{seed}:{attempt}")
        try:
            p = SimplePolygon(tuple(
                Point2(x + rng.randint(-JITTER, JITTER), y + rng.randint(-JITTER, JITTER))
                for x, y in base_p
            ))
            q = SimplePolygon(tuple(
                Point2(x + rng.randint(-JITTER, JITTER), y + rng.randint(-JITTER, JITTER))
                for x, y in base_q
            ))
            report = crossing_count(p, q)
        except Exception:
            continue
        if report.total == target:
            return Construction(p=p, q=q, family=fam, crossings=target, attempts=attempt)
    raise ConstructionFailed(
        f"no verified ({m}, {n}) instance in {_MAX_ATTEMPTS} attempts"
    )


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    expected: int
    actual: int
    family: Family


def verify_construction(p: SimplePolygon, q: SimplePolygon) -> VerificationReport:
    """Recount a claimed extremal pair against its parity-class target."""
    fam = family_for(p.m, q.m)
    expected = expected_crossings(p.m, q.m)
    actual = crossing_count(p, q).total
    return VerificationReport(ok=actual == expected, expected=expected, actual=actual, family=fam)
