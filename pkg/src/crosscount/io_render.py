"""Serialization of polygon pairs and deterministic SVG rendering.

File format: a single JSON object with ``format_version``, the two vertex
lists ``p`` and ``q`` (coordinates as canonical ``num/den`` strings in
lowest terms, positive denominator), and an optional ``metadata`` object.
Serialization is canonical — sorted keys, no whitespace — so identical
inputs produce identical bytes, and load → save round-trips byte-for-byte.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ParseError, VersionMismatch
from .geom import Cone, Point2, Rational, line_meet
from .polygon import SimplePolygon

FORMAT_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def rational_str(v: Rational) -> str:
    """Canonical ``num/den`` form, lowest terms, denominator positive."""
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational literal: {s!r}")
    num, _, den = s.partition("/")
    if den == "":
        return Fraction(int(num))
    if int(den) == 0:
        raise ParseError(f"zero denominator: {s!r}")
    return Fraction(int(num), int(den))


def polygon_to_obj(poly: SimplePolygon) -> list[list[str]]:
    return [[rational_str(v.x), rational_str(v.y)] for v in poly.vertices]


def polygon_from_obj(obj: object) -> SimplePolygon:
    if not isinstance(obj, list):
        raise ParseError("vertex list must be a JSON array")
    verts = []
    for item in obj:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"vertex must be a [x, y] pair, got {item!r}")
        verts.append(Point2(parse_rational(item[0]), parse_rational(item[1])))
    return SimplePolygon(tuple(verts))


def dumps_pair(
    p: SimplePolygon, q: SimplePolygon, metadata: Optional[dict] = None
) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "p": polygon_to_obj(p),
        "q": polygon_to_obj(q),
    }
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads_pair(text: str) -> tuple[SimplePolygon, SimplePolygon, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(
            f"format_version {version!r} unsupported (expected {FORMAT_VERSION})"
        )
    if "p" not in doc or "q" not in doc:
        raise ParseError("missing 'p' or 'q' vertex list")
    p = polygon_from_obj(doc["p"])
    q = polygon_from_obj(doc["q"])
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be a JSON object")
    return p, q, metadata


def save_pair(
    path: str,
    p: SimplePolygon,
    q: SimplePolygon,
    metadata: Optional[dict] = None,
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_pair(p, q, metadata))


def load_pair(path: str) -> tuple[SimplePolygon, SimplePolygon, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_pair(fh.read())


# ---------------------------------------------------------------------------
# SVG rendering


@dataclass(frozen=True)
class RenderOptions:
    show_crossings: bool = True
    # Line through two points, drawn dotted (e.g. an associated pair's axis).
    show_axis: Optional[tuple[Point2, Point2]] = None
    show_cones: tuple[Cone, ...] = ()
    # Sides to emphasize: ("p"|"q", side index) pairs.
    highlight_sides: tuple[tuple[str, int], ...] = ()


_CANVAS = 1000
_MARGIN = 40


def _fmt(v: Union[Fraction, int]) -> str:
    return f"{float(v):.4f}"


class _Frame:
    """Exact affine map from model coordinates onto the SVG canvas."""

    def __init__(self, points: Sequence[Point2]):
        xs = [Fraction(p.x) for p in points]
        ys = [Fraction(p.y) for p in points]
        self.minx, self.maxy = min(xs), max(ys)
        spanx = max(xs) - self.minx
        spany = self.maxy - min(ys)
        span = max(spanx, spany, Fraction(1))
        self.scale = Fraction(_CANVAS - 2 * _MARGIN) / span

    def map(self, p: Point2) -> tuple[Fraction, Fraction]:
        x = (Fraction(p.x) - self.minx) * self.scale + _MARGIN
        y = (self.maxy - Fraction(p.y)) * self.scale + _MARGIN
        return x, y

    def xy(self, p: Point2) -> str:
        x, y = self.map(p)
        return f"{_fmt(x)},{_fmt(y)}"


def _path(frame: _Frame, poly: SimplePolygon) -> str:
    return "M " + " L ".join(frame.xy(v) for v in poly.vertices) + " Z"


def render_svg(
    p: SimplePolygon, q: SimplePolygon, options: Optional[RenderOptions] = None
) -> str:
    """Deterministic standalone SVG: first polygon solid, second dashed,
    crossings circled, optional dotted axis line, cones, and highlights."""
    opts = options or RenderOptions()
    frame = _Frame(list(p.vertices) + list(q.vertices))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_CANVAS} {_CANVAS}">',
        f'<rect width="{_CANVAS}" height="{_CANVAS}" fill="#ffffff"/>',
        f'<path d="{_path(frame, p)}" fill="none" stroke="#1f6fb2" stroke-width="2.5"/>',
        f'<path d="{_path(frame, q)}" fill="none" stroke="#c23b22" stroke-width="2.5" '
        'stroke-dasharray="9 6"/>',
    ]
    for who, idx in opts.highlight_sides:
        poly = p if who == "p" else q
        seg = poly.side(idx)
        color = "#1f6fb2" if who == "p" else "#c23b22"
        (x1, y1), (x2, y2) = frame.map(seg.a), frame.map(seg.b)
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="6" stroke-opacity="0.45"/>'
        )
    if opts.show_axis is not None:
        a, b = opts.show_axis
        # Extend the chord far beyond the canvas; the viewport clips it.
        ax, ay = frame.map(a)
        bx, by = frame.map(b)
        dx, dy = bx - ax, by - ay
        lo, hi = Fraction(-50), Fraction(51)
        parts.append(
            f'<line x1="{_fmt(ax + lo * dx)}" y1="{_fmt(ay + lo * dy)}" '
            f'x2="{_fmt(ax + hi * dx)}" y2="{_fmt(ay + hi * dy)}" '
            'stroke="#555555" stroke-width="1.5" stroke-dasharray="2 7"/>'
        )
    for cone in opts.show_cones:
        apex = frame.map(cone.apex)
        for d in (cone.d1, cone.d2):
            tip = frame.map(cone.apex + d)
            ex, ey = apex[0] + (tip[0] - apex[0]) * 50, apex[1] + (tip[1] - apex[1]) * 50
            parts.append(
                f'<line x1="{_fmt(apex[0])}" y1="{_fmt(apex[1])}" '
                f'x2="{_fmt(ex)}" y2="{_fmt(ey)}" '
                'stroke="#777777" stroke-width="1" stroke-dasharray="6 4"/>'
            )
    if opts.show_crossings:
        from .polygon import crossing_count  # local import avoids cycles

        report = crossing_count(p, q)
        for pt in report.points:
            x, y = frame.map(pt)
            parts.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
                'fill="none" stroke="#111111" stroke-width="1.3"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
