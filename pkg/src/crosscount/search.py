"""Randomized search for crossing-rich polygon pairs, plus corpus building.

The hill climb works on raw integer vertex tuples with a self-contained
validity check (simplicity + general position) and crossing counter, so a
step costs microseconds; ``SimplePolygon`` objects are only materialized at
the boundaries.  All randomness is derived from string-keyed generators, so
every run is reproducible from (m, n, seed, budget, grid size) alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence, Union

from .constructions import build_extremal
from .errors import GiveUp, ParityError
from .geom import Point2
from .polygon import SimplePolygon

IntPoint = tuple[int, int]
Seed = Union[int, str]

DEFAULT_GRID_BOUND = 1 << 20
DEFAULT_KICK_INTERVAL = 10_000
_CHUNK = 10_000  # steps per derived RNG stream
_RADII = (1, 8, 64, 1024, 16384, 262144)
_INSTANCE_ATTEMPTS = 400


# ---------------------------------------------------------------------------
# Integer-only validity and counting (the hot path)


def _valid_score(pv: Sequence[IntPoint], qv: Sequence[IntPoint]) -> Optional[int]:
    """Crossing count if (pv, qv) is a simple, general-position pair, else None.

    Self-contained integer arithmetic: general position (no three of the
    combined vertices collinear — subsumes repeated vertices and flat
    corners — and no two sides parallel) plus no self-crossing makes both
    cycles simple polygons; crossings are then exactly the proper crossings.
    """
    pts = list(pv) + list(qv)
    npts = len(pts)
    # No three collinear (counts repeated points as collinear).
    for i in range(npts - 2):
        ax, ay = pts[i]
        for j in range(i + 1, npts - 1):
            bx, by = pts[j]
            ux, uy = bx - ax, by - ay
            for k in range(j + 1, npts):
                cx, cy = pts[k]
                if ux * (cy - ay) == uy * (cx - ax):
                    return None
    # Side direction vectors; no two sides parallel.
    m, n = len(pv), len(qv)
    dirs = []
    for verts in (pv, qv):
        kk = len(verts)
        for i in range(kk):
            x1, y1 = verts[i]
            x2, y2 = verts[(i + 1) % kk]
            dirs.append((x2 - x1, y2 - y1))
    nd = len(dirs)
    for i in range(nd - 1):
        ux, uy = dirs[i]
        for j in range(i + 1, nd):
            vx, vy = dirs[j]
            if ux * vy == uy * vx:
                return None

    def proper(ax, ay, bx, by, cx, cy, dx, dy):
        abx, aby = bx - ax, by - ay
        o1 = abx * (cy - ay) - aby * (cx - ax)
        o2 = abx * (dy - ay) - aby * (dx - ax)
        if (o1 > 0) == (o2 > 0):
            return False
        cdx, cdy = dx - cx, dy - cy
        o3 = cdx * (ay - cy) - cdy * (ax - cx)
        o4 = cdx * (by - cy) - cdy * (bx - cx)
        return (o3 > 0) != (o4 > 0)

    # No self-crossings (given general position, any self-intersection of a
    # cycle is a proper crossing of non-adjacent sides).
    for verts in (pv, qv):
        kk = len(verts)
        for i in range(kk - 1):
            ax, ay = verts[i]
            bx, by = verts[i + 1]
            for j in range(i + 2, kk):
                if i == 0 and j == kk - 1:
                    continue
                cx, cy = verts[j]
                dx, dy = verts[(j + 1) % kk]
                if proper(ax, ay, bx, by, cx, cy, dx, dy):
                    return None
    total = 0
    for i in range(m):
        ax, ay = pv[i]
        bx, by = pv[(i + 1) % m]
        for j in range(n):
            cx, cy = qv[j]
            dx, dy = qv[(j + 1) % n]
            if proper(ax, ay, bx, by, cx, cy, dx, dy):
                total += 1
    return total


def _disjoint_components(pv: Sequence[IntPoint], qv: Sequence[IntPoint]) -> int:
    """Connected components of the side-disjointness graph.

    Self-contained integer arithmetic — deliberately shares no code with the
    graph builder in the disjointness module, so the two can cross-check
    each other in tests.
    """
    m, n = len(pv), len(qv)
    parent = list(range(m + n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        ax, ay = pv[i]
        bx, by = pv[(i + 1) % m]
        abx, aby = bx - ax, by - ay
        for j in range(n):
            cx, cy = qv[j]
            dx, dy = qv[(j + 1) % n]
            o1 = abx * (cy - ay) - aby * (cx - ax)
            o2 = abx * (dy - ay) - aby * (dx - ax)
            if (o1 > 0) != (o2 > 0):
                cdx, cdy = dx - cx, dy - cy
                o3 = cdx * (ay - cy) - cdy * (ax - cx)
                o4 = cdx * (by - cy) - cdy * (bx - cx)
                if (o3 > 0) != (o4 > 0):
                    continue  # crossing pair: not an edge
            ra, rb = find(i), find(m + j)
            if ra != rb:
                parent[ra] = rb
    return len({find(x) for x in range(m + n)})


# ---------------------------------------------------------------------------
# Random star-shaped instances


def _angular_sorted(points: list[IntPoint]) -> Optional[list[IntPoint]]:
    """Points sorted counterclockwise around their centroid; None when two
    share a ray from the centroid (the polygon could degenerate)."""
    k = len(points)
    cx = Fraction(sum(x for x, _ in points), k)
    cy = Fraction(sum(y for _, y in points), k)
    rel = [(Fraction(x) - cx, Fraction(y) - cy) for x, y in points]
    if any(dx == 0 and dy == 0 for dx, dy in rel):
        return None

    def half(d):
        dx, dy = d
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        c = u[0] * v[1] - u[1] * v[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    for i in range(k - 1):
        for j in range(i + 1, k):
            if half(rel[i]) == half(rel[j]) and (
                rel[i][0] * rel[j][1] == rel[i][1] * rel[j][0]
            ):
                return None
    order = sorted(range(k), key=cmp_to_key(lambda a, b: cmp(rel[a], rel[b])))
    return [points[i] for i in order]


def random_instance(
    m: int,
    n: int,
    grid_bound: int = DEFAULT_GRID_BOUND,
    seed: Seed = 0,
) -> tuple[SimplePolygon, SimplePolygon]:
    """A random simple, general-position pair with integer vertices.

    Each polygon is star-shaped: random grid points ordered around their
    centroid.  Invalid draws are rejected; deterministic per seed.
    """
    if m < 3 or n < 3:
        raise GiveUp(f"need m, n >= 3, got ({m}, {n})")
    rng = random.Random(f"crosscount:inst:{m}:{n}:{grid_bound}:{seed}")
    for _ in range(_INSTANCE_ATTEMPTS):
        pv = _angular_sorted(
            [
                (rng.randint(-grid_bound, grid_bound), rng.randint(-grid_bound, grid_bound))
                for _ in range(m)
            ]
        )
        qv = _angular_sorted(
            [
                (rng.randint(-grid_bound, grid_bound), rng.randint(-grid_bound, grid_bound))
                for _ in range(n)
            ]
        )
        if pv is None or qv is None:
            continue
        if _valid_score(pv, qv) is None:
            continue
        return (
            SimplePolygon(tuple(Point2(x, y) for x, y in pv)),
            SimplePolygon(tuple(Point2(x, y) for x, y in qv)),
        )
    raise GiveUp(
        f"no valid instance for (m={m}, n={n}, grid_bound={grid_bound}, seed={seed!r}) "
        f"after {_INSTANCE_ATTEMPTS} attempts"
    )


# ---------------------------------------------------------------------------
# Hill climbing


@dataclass(frozen=True)
class SearchState:
    """Best-so-far of a crossing-maximization run.

    ``instance`` is the best pair found; ``score`` its independently
    recountable crossing number; ``best_history`` the strictly improving
    (step, score) checkpoints, starting with the step-0 instance.
    """

    seed: int
    instance: tuple[SimplePolygon, SimplePolygon]
    score: int
    step: int
    grid_bound: int
    best_history: tuple[tuple[int, int], ...]


def _int_verts(poly: SimplePolygon) -> list[IntPoint]:
    out = []
    for v in poly.vertices:
        fx, fy = Fraction(v.x), Fraction(v.y)
        if fx.denominator != 1 or fy.denominator != 1:
            raise GiveUp("search operates on integer-vertex instances")
        out.append((fx.numerator, fy.numerator))
    return out


def _chunk_rng(seed: int, chunk: int) -> random.Random:
    return random.Random(f"crosscount:search:{seed}:{chunk}")


def _draw(rng: random.Random, nverts: int, grid_bound: int):
    v = rng.randrange(nverts)
    radius = min(_RADII[rng.randrange(len(_RADII))], grid_bound)
    dx = rng.randint(-radius, radius)
    dy = rng.randint(-radius, radius)
    return v, dx, dy


def _climb(
    m: int,
    n: int,
    seed: int,
    grid_bound: int,
    kick_interval: int,
    start_step: int,
    budget: int,
    cur_p: list[IntPoint],
    cur_q: list[IntPoint],
    cur_score: int,
    best: tuple[tuple[IntPoint, ...], tuple[IntPoint, ...], int],
    history: list[tuple[int, int]],
) -> SearchState:
    hard_cap = m * n - max(m, n)
    nverts = m + n
    best_p, best_q, best_score = best
    rng = _chunk_rng(seed, start_step // _CHUNK)
    for _ in range(start_step % _CHUNK):
        _draw(rng, nverts, grid_bound)  # resync the derived stream
    step = start_step
    for _ in range(budget):
        step += 1
        if (step - 1) % _CHUNK == 0:
            rng = _chunk_rng(seed, (step - 1) // _CHUNK)
        v, dx, dy = _draw(rng, nverts, grid_bound)
        stagnant = step - history[-1][0]
        if stagnant >= kick_interval and stagnant % kick_interval == 0:
            # Plateau kick: restart the walk from a fresh random instance
            # (the best found so far is kept separately).
            try:
                rp, rq = random_instance(m, n, grid_bound, seed=f"{seed}:kick:{step}")
            except GiveUp:
                continue
            cur_p, cur_q = _int_verts(rp), _int_verts(rq)
            rescored = _valid_score(cur_p, cur_q)
            assert rescored is not None
            cur_score = rescored
            continue
        verts = cur_p if v < m else cur_q
        idx = v if v < m else v - m
        old = verts[idx]
        nx = old[0] + dx
        ny = old[1] + dy
        if nx < -grid_bound or nx > grid_bound or ny < -grid_bound or ny > grid_bound:
            continue
        verts[idx] = (nx, ny)
        new_score = _valid_score(cur_p, cur_q)
        if new_score is None or new_score < cur_score:
            verts[idx] = old
            continue
        cur_score = new_score
        if new_score > best_score:
            assert new_score <= hard_cap, "crossing predicate violated the parity cap"
            best_score = new_score
            best_p, best_q = tuple(cur_p), tuple(cur_q)
            history.append((step, new_score))
    instance = (
        SimplePolygon(tuple(Point2(x, y) for x, y in best_p)),
        SimplePolygon(tuple(Point2(x, y) for x, y in best_q)),
    )
    return SearchState(
        seed=seed,
        instance=instance,
        score=best_score,
        step=step,
        grid_bound=grid_bound,
        best_history=tuple(history),
    )


def maximize_crossings(
    m: int,
    n: int,
    budget: int,
    seed: int = 0,
    *,
    grid_bound: int = DEFAULT_GRID_BOUND,
    kick_interval: int = DEFAULT_KICK_INTERVAL,
) -> SearchState:
    """Hill-climb the crossing count of a random odd/odd pair.

    One vertex moves per step (mixed radii); a move is accepted when the
    pair stays simple and in general position and the count does not drop.
    After ``kick_interval`` steps without a new best, the walk restarts
    from a fresh random instance.  Deterministic per
    (m, n, budget, seed, grid_bound).
    """
    if m % 2 == 0 or n % 2 == 0 or m < 3 or n < 3:
        raise ParityError(f"search targets odd/odd pairs, got ({m}, {n})")
    p0, q0 = random_instance(m, n, grid_bound, seed=f"{seed}:init")
    pv, qv = _int_verts(p0), _int_verts(q0)
    score0 = _valid_score(pv, qv)
    assert score0 is not None
    return _climb(
        m,
        n,
        seed,
        grid_bound,
        kick_interval,
        start_step=0,
        budget=budget,
        cur_p=pv,
        cur_q=qv,
        cur_score=score0,
        best=(tuple(pv), tuple(qv), score0),
        history=[(0, score0)],
    )


def resume(
    state: SearchState,
    budget: int,
    *,
    kick_interval: int = DEFAULT_KICK_INTERVAL,
) -> SearchState:
    """Continue a run for ``budget`` more steps, restarting the walk from the
    saved best instance; the derived random stream picks up at the saved
    step, so the continuation is deterministic."""
    p, q = state.instance
    pv, qv = _int_verts(p), _int_verts(q)
    score = _valid_score(pv, qv)
    assert score is not None and score == state.score
    return _climb(
        p.m,
        q.m,
        state.seed,
        state.grid_bound,
        kick_interval,
        start_step=state.step,
        budget=budget,
        cur_p=pv,
        cur_q=qv,
        cur_score=score,
        best=(tuple(pv), tuple(qv), state.score),
        history=list(state.best_history),
    )


def best_over_seeds(
    m: int,
    n: int,
    budget: int,
    seeds: Sequence[int],
    *,
    grid_bound: int = DEFAULT_GRID_BOUND,
    kick_interval: int = DEFAULT_KICK_INTERVAL,
) -> SearchState:
    """Best state over several independent seeds (ties: lowest seed)."""
    if not seeds:
        raise GiveUp("need at least one seed")
    best = None
    for s in seeds:
        st = maximize_crossings(
            m, n, budget, s, grid_bound=grid_bound, kick_interval=kick_interval
        )
        if best is None or st.score > best.score:
            best = st
    return best


# ---------------------------------------------------------------------------
# Conjecture monitoring


@dataclass(frozen=True)
class WithinBound:
    crossings: int
    bound: int
    claimed_score_matched: bool


@dataclass(frozen=True)
class CandidateCounterexample:
    instance: tuple[SimplePolygon, SimplePolygon]
    crossings: int
    bound: int
    claimed_score_matched: bool


def _independent_recount(p: SimplePolygon, q: SimplePolygon) -> int:
    """Crossing recount from scratch — raw coordinates and local orientation
    arithmetic only, sharing no code with the library predicates."""
    pv = [(Fraction(v.x), Fraction(v.y)) for v in p.vertices]
    qv = [(Fraction(v.x), Fraction(v.y)) for v in q.vertices]
    m, n = len(pv), len(qv)

    def side(ax, ay, bx, by, px, py):
        v = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        return (v > 0) - (v < 0)

    total = 0
    for i in range(m):
        ax, ay = pv[i]
        bx, by = pv[(i + 1) % m]
        for j in range(n):
            cx, cy = qv[j]
            dx, dy = qv[(j + 1) % n]
            if (
                side(ax, ay, bx, by, cx, cy) * side(ax, ay, bx, by, dx, dy) < 0
                and side(cx, cy, dx, dy, ax, ay) * side(cx, cy, dx, dy, bx, by) < 0
            ):
                total += 1
    return total


def conjecture_monitor(
    state: SearchState,
) -> Union[WithinBound, CandidateCounterexample]:
    """Compare a search result against the conjectured cap mn - (m+n) + 3.

    The state's claimed score is never trusted: the instance is recounted
    through an independent arithmetic path, and only the recount decides.
    A tampered score therefore cannot fabricate a counterexample.
    """
    p, q = state.instance
    m, n = p.m, q.m
    if m % 2 == 0 or n % 2 == 0:
        raise ParityError(f"conjectured bound applies to odd/odd, got ({m}, {n})")
    recount = _independent_recount(p, q)
    bound = m * n - (m + n) + 3
    matched = recount == state.score
    if recount > bound:
        return CandidateCounterexample(
            instance=state.instance,
            crossings=recount,
            bound=bound,
            claimed_score_matched=matched,
        )
    return WithinBound(crossings=recount, bound=bound, claimed_score_matched=matched)


# ---------------------------------------------------------------------------
# Corpus generation


@dataclass(frozen=True)
class CorpusEntry:
    index: int
    # "star" | "perturbed_extremal" | "crossing_climb" | "extremal"
    # | "annex_extremal" | "annex_perturbed"
    kind: str
    p: SimplePolygon
    q: SimplePolygon


def _perturb_accepted(
    pv: list[IntPoint],
    qv: list[IntPoint],
    rng: random.Random,
    moves: int,
    radius: int,
) -> None:
    """Random single-vertex integer moves, in place; a move is kept only if
    the pair stays simple and in general position."""
    m = len(pv)
    nverts = m + len(qv)
    for _ in range(moves):
        v = rng.randrange(nverts)
        dx = rng.randint(-radius, radius)
        dy = rng.randint(-radius, radius)
        verts = pv if v < m else qv
        idx = v if v < m else v - m
        old = verts[idx]
        verts[idx] = (old[0] + dx, old[1] + dy)
        if _valid_score(pv, qv) is None:
            verts[idx] = old


def _odd_values(value_range: tuple[int, int]) -> list[int]:
    lo, hi = value_range
    vals = [v for v in range(lo, hi + 1) if v % 2 == 1 and v >= 3]
    if not vals:
        raise GiveUp(f"no odd values >= 3 in range {value_range}")
    return vals


def build_corpus(
    count: int,
    m_range: tuple[int, int] = (3, 11),
    n_range: tuple[int, int] = (3, 11),
    seed: int = 7,
    *,
    extremal_range: tuple[int, int] = (3, 19),
    grid_bound: int = DEFAULT_GRID_BOUND,
    annex: bool = True,
) -> list[CorpusEntry]:
    """Deterministic mixed corpus of general-position instances.

    The first ``count`` entries are odd/odd, cycled by index: random
    star-shaped pairs; extremal constructions softened by accepted random
    moves; short crossing-maximization climbs.  All odd/odd extremal
    constructions for the ``extremal_range`` sizes follow.  Finally, unless
    ``annex`` is false, an audit annex of even-sided extremal pairs (raw
    and perturbed) is appended: their all-pairs-crossing structure shatters
    the disjointness graph into singleton components, which is what feeds
    the four-distinct-component exclusion audit non-vacuously.
    """
    m_vals = _odd_values(m_range)
    n_vals = _odd_values(n_range)
    entries: list[CorpusEntry] = []
    for k in range(count):
        rng = random.Random(f"crosscount:corpus:{seed}:{k}")
        m = m_vals[rng.randrange(len(m_vals))]
        n = n_vals[rng.randrange(len(n_vals))]
        mode = k % 3
        if mode == 0:
            p, q = random_instance(m, n, grid_bound, seed=f"{seed}:corpus:{k}")
            entries.append(CorpusEntry(index=k, kind="star", p=p, q=q))
        elif mode == 1:
            c = build_extremal(m, n)
            pv, qv = _int_verts(c.p), _int_verts(c.q)
            span = max(
                max(abs(x) for x, _ in pv + qv), max(abs(y) for _, y in pv + qv)
            )
            _perturb_accepted(pv, qv, rng, moves=3 * (m + n), radius=max(span // 64, 8))
            entries.append(
                CorpusEntry(
                    index=k,
                    kind="perturbed_extremal",
                    p=SimplePolygon(tuple(Point2(x, y) for x, y in pv)),
                    q=SimplePolygon(tuple(Point2(x, y) for x, y in qv)),
                )
            )
        else:
            st = maximize_crossings(
                m, n, budget=600, seed=k, grid_bound=grid_bound
            )
            entries.append(
                CorpusEntry(
                    index=k, kind="crossing_climb", p=st.instance[0], q=st.instance[1]
                )
            )
    base = count
    for m in _odd_values(extremal_range):
        for n in _odd_values(extremal_range):
            c = build_extremal(m, n)
            entries.append(CorpusEntry(index=base, kind="extremal", p=c.p, q=c.q))
            base += 1
    if annex:
        evens = [v for v in range(4, 11) if v % 2 == 0]
        sizes = [(m, n) for m in evens for n in evens]
        sizes += [(m, n) for m in evens for n in (5, 7, 9)]
        for m, n in sizes:
            c = build_extremal(m, n)
            entries.append(
                CorpusEntry(index=base, kind="annex_extremal", p=c.p, q=c.q)
            )
            base += 1
            rng = random.Random(f"crosscount:corpus:{seed}:annex:{m}:{n}")
            pv, qv = _int_verts(c.p), _int_verts(c.q)
            span = max(
                max(abs(x) for x, _ in pv + qv), max(abs(y) for _, y in pv + qv)
            )
            _perturb_accepted(pv, qv, rng, moves=2 * (m + n), radius=max(span // 64, 8))
            entries.append(
                CorpusEntry(
                    index=base,
                    kind="annex_perturbed",
                    p=SimplePolygon(tuple(Point2(x, y) for x, y in pv)),
                    q=SimplePolygon(tuple(Point2(x, y) for x, y in qv)),
                )
            )
            base += 1
    return entries


def corpus_to_jsonl(entries: Sequence[CorpusEntry]) -> str:
    """Canonical JSON-lines serialization (byte-for-byte reproducible)."""
    import json

    from .io_render import polygon_to_obj

    lines = []
    for e in entries:
        lines.append(
            json.dumps(
                {
                    "index": e.index,
                    "kind": e.kind,
                    "p": polygon_to_obj(e.p),
                    "q": polygon_to_obj(e.q),
                },
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"


def corpus_from_jsonl(text: str) -> list[CorpusEntry]:
    import json

    from .errors import ParseError
    from .io_render import polygon_from_obj

    entries = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed corpus line: {e}") from e
        entries.append(
            CorpusEntry(
                index=doc["index"],
                kind=doc["kind"],
                p=polygon_from_obj(doc["p"]),
                q=polygon_from_obj(doc["q"]),
            )
        )
    return entries
