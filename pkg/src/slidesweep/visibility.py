"""Sliding visibility: guard segments, beams, coverage, event positions.

A guard robot travels along an axis-parallel segment and sees exactly the
maximal chord through its position perpendicular to the segment ("beam").
The sliding visibility region of a segment is the union of its beams.  All
tests are exact; half-integer geometry is handled by scaling the polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boundary import BoundaryRegion
from .geometry import GeometryError, OrthoPolygon, Point, Rect


class SegmentOutsidePolygon(GeometryError):
    pass


_SCALED_CACHE: dict[tuple[int, int], OrthoPolygon] = {}


def scaled_cached(poly: OrthoPolygon, k: int) -> OrthoPolygon:
    if k == 1:
        return poly
    key = (id(poly), k)
    got = _SCALED_CACHE.get(key)
    if got is None:
        got = poly.scaled(k)
        _SCALED_CACHE[key] = got
    return got


@dataclass(frozen=True)
class GuardSegment:
    """Axis-parallel lattice segment a sliding robot travels along."""

    p1: Point
    p2: Point

    def __post_init__(self):
        a, b = self.p1, self.p2
        if a == b:
            raise GeometryError("guard segment must have positive length")
        if a[0] != b[0] and a[1] != b[1]:
            raise GeometryError("guard segment must be axis-parallel")
        if a > b:
            object.__setattr__(self, "p1", b)
            object.__setattr__(self, "p2", a)

    @property
    def vertical(self) -> bool:
        return self.p1[0] == self.p2[0]

    @property
    def orientation(self) -> str:
        return "vertical" if self.vertical else "horizontal"

    @property
    def line(self) -> int:
        return self.p1[0] if self.vertical else self.p1[1]

    @property
    def lo(self) -> int:
        return self.p1[1] if self.vertical else self.p1[0]

    @property
    def hi(self) -> int:
        return self.p2[1] if self.vertical else self.p2[0]

    def point_at(self, c: int) -> Point:
        if not self.lo <= c <= self.hi:
            raise GeometryError(f"coordinate {c} not on segment {self}")
        return (self.line, c) if self.vertical else (c, self.line)

    def coord_of(self, p: Point) -> int:
        if p != self.point_at(p[1] if self.vertical else p[0]):
            raise GeometryError(f"{p} not on segment {self}")
        return p[1] if self.vertical else p[0]

    def validate_in(self, poly: OrthoPolygon) -> None:
        for k in range(self.lo, self.hi):
            if not poly.unit_inside(self.line, k, self.vertical):
                raise SegmentOutsidePolygon(f"{self} leaves the polygon")


@dataclass
class VisibilityRegion:
    """Union of closed rectangles (some may be degenerate boundary lines)."""

    rects: list[Rect]

    def area2x(self) -> int:
        return sum(r.area() for r in self.rects)


@dataclass(frozen=True)
class Beam:
    """A robot's instantaneous field of view: the maximal perpendicular chord."""

    position: Point
    chord: tuple[Point, Point]


def beam_at(poly: OrthoPolygon, s: GuardSegment, t: Point) -> Beam:
    s.coord_of(t)
    orient = "horizontal" if s.vertical else "vertical"
    return Beam(t, poly.maximal_chord(t, orient))


def _strips(poly: OrthoPolygon, s: GuardSegment) -> list[Rect]:
    """Unit strips of the visibility region, perpendicular to the segment."""
    p2 = scaled_cached(poly, 2)
    out: list[Rect] = []
    for k in range(s.lo, s.hi):
        lo2, hi2 = p2.chord_run(2 * k + 1, 2 * s.line, vertical=not s.vertical)
        if s.vertical:
            r = Rect(lo2 // 2, k, hi2 // 2, k + 1)
        else:
            r = Rect(k, lo2 // 2, k + 1, hi2 // 2)
        out.append(r)
    return out


def visibility_region(poly: OrthoPolygon, s: GuardSegment) -> VisibilityRegion:
    s.validate_in(poly)
    strips = _strips(poly, s)
    rects: list[Rect] = []
    for r in strips:
        if rects and s.vertical and rects[-1].x0 == r.x0 and rects[-1].x1 == r.x1 \
                and rects[-1].y1 == r.y0:
            rects[-1] = Rect(r.x0, rects[-1].y0, r.x1, r.y1)
        elif rects and not s.vertical and rects[-1].y0 == r.y0 \
                and rects[-1].y1 == r.y1 and rects[-1].x1 == r.x0:
            rects[-1] = Rect(rects[-1].x0, r.y0, r.x1, r.y1)
        else:
            rects.append(r)
    # beams at integer positions can reach along boundary lines beyond the
    # neighbouring strips; keep those as degenerate rectangles so membership
    # matches covers_point everywhere, not just on strip interiors.
    for c in range(s.lo, s.hi + 1):
        lo, hi = poly.chord_run(c, s.line, vertical=not s.vertical)
        spans = []
        for r in strips:
            if s.vertical and r.y0 <= c <= r.y1:
                spans.append((r.x0, r.x1))
            elif not s.vertical and r.x0 <= c <= r.x1:
                spans.append((r.y0, r.y1))
        if not any(a <= lo and hi <= b for a, b in spans):
            if s.vertical:
                rects.append(Rect(lo, c, hi, c))
            else:
                rects.append(Rect(c, lo, c, hi))
    return VisibilityRegion(rects)


def covers_point(poly: OrthoPolygon, s: GuardSegment, p: Point) -> bool:
    """Exact: is there q on s with pq perpendicular to s and inside closure."""
    return covers_point_scaled(poly, s, p, 1)


def covers_point_scaled(poly: OrthoPolygon, s: GuardSegment,
                        p_scaled: Point, scale: int) -> bool:
    ps = scaled_cached(poly, scale)
    px, py = p_scaled
    if s.vertical:
        sx = s.line * scale
        if not s.lo * scale <= py <= s.hi * scale:
            return False
        a, b = min(px, sx), max(px, sx)
        if a == b:
            return True
        for k in range(a, b):
            if not ps.unit_inside(py, k, vertical=False):
                return False
        return True
    sy = s.line * scale
    if not s.lo * scale <= px <= s.hi * scale:
        return False
    a, b = min(py, sy), max(py, sy)
    if a == b:
        return True
    for k in range(a, b):
        if not ps.unit_inside(px, k, vertical=True):
            return False
    return True


def half_cells(poly: OrthoPolygon) -> list[Point]:
    """All half-unit cells (indexed on the x2 lattice) inside the polygon."""
    p2 = scaled_cached(poly, 2)
    out = []
    for cx in range(p2.xmin, p2.xmax):
        for cy in range(p2.ymin, p2.ymax):
            if p2.cell_inside(cx, cy):
                out.append((cx, cy))
    return out


def segment_cover_cells(poly: OrthoPolygon, s: GuardSegment) -> set[Point]:
    """Half-cells covered by a segment's visibility region (exact)."""
    cells: set[Point] = set()
    for r in _strips(poly, s):
        for cx in range(2 * r.x0, 2 * r.x1):
            for cy in range(2 * r.y0, 2 * r.y1):
                cells.add((cx, cy))
    return cells


@dataclass
class CoverageReport:
    complete: bool
    witness: tuple[Fraction, Fraction] | None


def coverage_complete(poly: OrthoPolygon, segments: list[GuardSegment]) -> CoverageReport:
    """Exact coverage check on the half-unit cell decomposition.

    Visibility regions are unions of half-lattice-aligned strips, so a cell
    is covered iff its center is, and complete coverage of the closed polygon
    reduces to covering every inside half-cell.
    """
    inside = half_cells(poly)
    covered: set[Point] = set()
    for s in segments:
        covered |= segment_cover_cells(poly, s)
    for c in inside:
        if c not in covered:
            return CoverageReport(False, (Fraction(2 * c[0] + 1, 4),
                                          Fraction(2 * c[1] + 1, 4)))
    return CoverageReport(True, None)


@dataclass(frozen=True)
class CriticalPosition:
    position: Point
    kind: str            # "endpoint" | "reflex" | "waiting"
    subject: int | None  # reflex vertex index or robot id


def critical_positions(poly: OrthoPolygon, s: GuardSegment,
                       waiting: dict[int, Point] | None = None) -> list[CriticalPosition]:
    """Event positions on a segment per the event-point definition.

    These are the positions whose beam contains a reflex vertex or a waiting
    robot's point, plus the two segment endpoints, ordered along the segment.
    """
    waiting = waiting or {}
    events: list[tuple[int, int, int, CriticalPosition]] = []
    for rank, c in ((0, s.lo), (0, s.hi)):
        pos = s.point_at(c)
        events.append((c, rank, -1, CriticalPosition(pos, "endpoint", None)))
    for j in poly.reflex_vertices():
        v = poly.vertices[j]
        c = v[1] if s.vertical else v[0]
        if not s.lo <= c <= s.hi:
            continue
        pos = s.point_at(c)
        lo, hi = poly.chord_run(c, s.line, vertical=not s.vertical)
        coord = v[0] if s.vertical else v[1]
        if lo <= coord <= hi:
            events.append((c, 1, j, CriticalPosition(pos, "reflex", j)))
    for rid, w in sorted(waiting.items()):
        c = w[1] if s.vertical else w[0]
        if not s.lo <= c <= s.hi:
            continue
        pos = s.point_at(c)
        lo, hi = poly.chord_run(c, s.line, vertical=not s.vertical)
        coord = w[0] if s.vertical else w[1]
        if lo <= coord <= hi:
            events.append((c, 2, rid, CriticalPosition(pos, "waiting", rid)))
    events.sort(key=lambda e: e[:3])
    return [e[3] for e in events]


def swept_boundary(poly: OrthoPolygon, s: GuardSegment,
                   c_from: int, c_to: int) -> BoundaryRegion:
    """Boundary ticks covered by the beam while moving from one segment
    coordinate to another (endpoints included; a static beam claims the
    boundary pieces lying along its chord).
    """
    lo, hi = min(c_from, c_to), max(c_from, c_to)
    p2 = scaled_cached(poly, 2)
    ticks = []
    for t in range(poly.perimeter):
        mx2, my2 = poly.tick_midpoint2(t)
        horizontal = poly.tick_is_horizontal(t)
        if s.vertical:
            if horizontal:
                y = my2 // 2
                if lo <= y <= hi:
                    clo, chi = poly.chord_run(y, s.line, vertical=False)
                    if 2 * clo <= mx2 - 1 and mx2 + 1 <= 2 * chi:
                        ticks.append(t)
            else:
                k = (my2 - 1) // 2
                if lo <= k and k + 1 <= hi:
                    clo2, chi2 = p2.chord_run(my2, 2 * s.line, vertical=False)
                    if clo2 <= mx2 <= chi2:
                        ticks.append(t)
        else:
            if not horizontal:
                x = mx2 // 2
                if lo <= x <= hi:
                    clo, chi = poly.chord_run(x, s.line, vertical=True)
                    if 2 * clo <= my2 - 1 and my2 + 1 <= 2 * chi:
                        ticks.append(t)
            else:
                k = (mx2 - 1) // 2
                if lo <= k and k + 1 <= hi:
                    clo2, chi2 = p2.chord_run(mx2, 2 * s.line, vertical=True)
                    if clo2 <= my2 <= chi2:
                        ticks.append(t)
    return BoundaryRegion.from_ticks(poly, ticks)
