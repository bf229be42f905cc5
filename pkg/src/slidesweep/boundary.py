"""Algebra of counterclockwise boundary arcs.

A region is a set of unit "ticks" of the boundary (the perimeter is an
integer because vertices are lattice points, and every arc endpoint produced
by the protocol is a lattice point).  Tick sets are stored as arbitrary
precision bitmasks, which makes union/subtract/equality canonical and exact.
These are the regularized circular-interval semantics: single points carry
no ticks, so arc(a, a) is empty and abutting arcs merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import BoundaryPoint, GeometryError, OrthoPolygon, Point


class PointsFromDifferentPolygons(GeometryError):
    pass


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc between two boundary points.

    ``start == end`` with ``full=False`` is the empty arc; ``full=True``
    denotes the whole boundary.  Endpoints are perimeter coordinates.
    """

    start: int
    end: int
    full: bool = False

    @property
    def empty(self) -> bool:
        return self.start == self.end and not self.full


class BoundaryRegion:
    """Canonical finite union of boundary arcs over one polygon."""

    __slots__ = ("poly", "mask")

    def __init__(self, poly: OrthoPolygon, mask: int = 0):
        self.poly = poly
        self.mask = mask

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def empty(poly: OrthoPolygon) -> "BoundaryRegion":
        return BoundaryRegion(poly, 0)

    @staticmethod
    def full(poly: OrthoPolygon) -> "BoundaryRegion":
        return BoundaryRegion(poly, (1 << poly.perimeter) - 1)

    @staticmethod
    def from_arc(poly: OrthoPolygon, a: Point, b: Point) -> "BoundaryRegion":
        ta = poly.perim_of(a)
        tb = poly.perim_of(b)
        return BoundaryRegion(poly, _span_mask(poly.perimeter, ta, tb))

    @staticmethod
    def from_ticks(poly: OrthoPolygon, ticks) -> "BoundaryRegion":
        m = 0
        for t in ticks:
            m |= 1 << (t % poly.perimeter)
        return BoundaryRegion(poly, m)

    # -- set algebra -----------------------------------------------------------

    def _check(self, other: "BoundaryRegion") -> None:
        if self.poly is not other.poly:
            raise PointsFromDifferentPolygons(
                "operands parameterize different polygons"
            )

    def union(self, other: "BoundaryRegion") -> "BoundaryRegion":
        self._check(other)
        return BoundaryRegion(self.poly, self.mask | other.mask)

    def subtract(self, other: "BoundaryRegion") -> "BoundaryRegion":
        self._check(other)
        return BoundaryRegion(self.poly, self.mask & ~other.mask)

    def intersect(self, other: "BoundaryRegion") -> "BoundaryRegion":
        self._check(other)
        return BoundaryRegion(self.poly, self.mask & other.mask)

    def issubset(self, other: "BoundaryRegion") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def is_full(self) -> bool:
        return self.mask == (1 << self.poly.perimeter) - 1

    def is_empty(self) -> bool:
        return self.mask == 0

    def contains(self, p: "BoundaryPoint | Point | Fraction", offset=None) -> bool:
        """Closed membership of a boundary point.

        Accepts a BoundaryPoint, a lattice point, or (perimeter) Fraction/int.
        Integer positions touch two ticks and are contained when either is.
        """
        t = self._to_perim(p, offset)
        L = self.poly.perimeter
        if isinstance(t, Fraction) and t.denominator != 1:
            return bool(self.mask >> (int(t) % L) & 1)
        ti = int(t) % L
        return bool(self.mask >> ti & 1) or bool(self.mask >> ((ti - 1) % L) & 1)

    def _to_perim(self, p, offset):
        if isinstance(p, BoundaryPoint):
            return self.poly.perim(p)
        if isinstance(p, tuple):
            return self.poly.perim_of(p)
        if offset is not None:
            raise ValueError("offset only valid with an edge index")
        return p

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundaryRegion) and self.poly is other.poly \
            and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.poly), self.mask))

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self) -> str:
        return f"BoundaryRegion({self.runs()})"

    # -- canonical structure ------------------------------------------------------

    def runs(self) -> list[tuple[int, int]]:
        """Maximal tick runs as half-open [a, b) perimeter intervals.

        Runs never wrap: a run across v_1 splits at 0.  Full is [(0, L)].
        """
        L = self.poly.perimeter
        out: list[tuple[int, int]] = []
        t = 0
        m = self.mask
        while t < L:
            if m >> t & 1:
                a = t
                while t < L and m >> t & 1:
                    t += 1
                out.append((a, t))
            else:
                t += 1
        return out

    def arcs(self) -> list[Arc]:
        """Maximal ccw arcs (merged across v_1, unlike ``runs``)."""
        L = self.poly.perimeter
        if self.is_full():
            return [Arc(0, 0, full=True)]
        rs = self.runs()
        if len(rs) >= 2 and rs[0][0] == 0 and rs[-1][1] == L:
            first = rs.pop(0)
            last = rs.pop()
            rs.append((last[0], first[1]))
        return [Arc(a, b % L) for a, b in rs]

    def measure(self) -> int:
        return self.mask.bit_count()


def _span_mask(L: int, ta: int, tb: int) -> int:
    ta %= L
    tb %= L
    if ta == tb:
        return 0
    if ta < tb:
        return ((1 << tb) - 1) & ~((1 << ta) - 1)
    return (((1 << L) - 1) & ~((1 << ta) - 1)) | ((1 << tb) - 1)


def arc(poly: OrthoPolygon, a: Point, b: Point) -> BoundaryRegion:
    """Region of the ccw arc from ``a`` to ``b``; arc(a, a) is empty."""
    return BoundaryRegion.from_arc(poly, a, b)


def union(r1: BoundaryRegion, r2: BoundaryRegion) -> BoundaryRegion:
    return r1.union(r2)


def subtract(r1: BoundaryRegion, r2: BoundaryRegion) -> BoundaryRegion:
    return r1.subtract(r2)


def contains(r: BoundaryRegion, p) -> bool:
    return r.contains(p)


def is_full(r: BoundaryRegion) -> bool:
    return r.is_full()
