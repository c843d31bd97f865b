"""Exception taxonomy.

Every error raised on purpose by this package derives from CrosscountError,
so callers can catch one type at the CLI boundary. Predicates that have a
precondition (cone membership, stabbing, walk classification) raise a
dedicated subclass instead of returning a junk value.
"""

from __future__ import annotations


class CrosscountError(Exception):
    """Base class for all deliberate failures."""


class TooFewVertices(CrosscountError):
    """Polygon with fewer than 3 vertices."""


class NotSimple(CrosscountError):
    """Polygon boundary self-intersects (or repeats a vertex).

    Carries the offending side index pair when known.
    """

    def __init__(self, message: str, sides: tuple[int, int] | None = None):
        super().__init__(message)
        self.sides = sides


class GeneralPositionViolation(CrosscountError):
    """Combined vertex set has a collinear triple or a parallel side pair."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ConeUndefined(CrosscountError):
    """The two segments don't span a cone (parallel, or properly crossing)."""


class StabUndefined(CrosscountError):
    """stabs() precondition failed (segments not disjoint, parallel, or avoiding)."""


class ParityMismatch(CrosscountError):
    """Construction family doesn't match the requested side parities."""


class ConstructionFailed(CrosscountError):
    """No jitter draw produced a verified extremal instance."""


class PreconditionFailed(CrosscountError):
    """A structural routine was called outside its stated hypothesis."""


class AssociationNotFound(CrosscountError):
    """No associated pair exists for an eligible consecutive pair (would be a bug)."""


class DegenerateAxis(CrosscountError):
    """The two cone apexes coincide, so no separating line is defined."""


class ParityError(CrosscountError):
    """A bound that needs odd side counts was asked about even ones."""


class DomainError(CrosscountError):
    """Arguments outside a function's documented domain (e.g. r < 2)."""


class DuplicateEntries(CrosscountError):
    """Sequence routine requires distinct values but got repeats."""


class GiveUp(CrosscountError):
    """Random sampling exhausted its retry budget."""


class ParseError(CrosscountError):
    """Malformed serialized geometry."""


class VersionMismatch(CrosscountError):
    """Serialized payload declares an unsupported format version."""
