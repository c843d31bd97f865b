"""Exact crossing counts for pairs of simple polygons.

The package counts proper boundary crossings of two simple polygons with
exact rational arithmetic, builds verified extremal instances for every
side-parity class, analyses the structure of non-crossing side pairs
(disjointness components, associated side pairs, hooking), and bundles the
combinatorial tools (transitive subtournaments, cup/cap extraction,
monotone subsequences) used to reason about very large configurations.
"""

from .errors import CrosscountError
from .geom import Point2, Segment, Cone
from .polygon import SimplePolygon, CrossingReport, crossing_count

__all__ = [
    "CrosscountError",
    "Point2",
    "Segment",
    "Cone",
    "SimplePolygon",
    "CrossingReport",
    "crossing_count",
    "__version__",
]

__version__ = "0.1.0"
