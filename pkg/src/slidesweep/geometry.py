"""Exact lattice geometry for simple orthogonal polygons.

Everything here is integer arithmetic: vertices live on the lattice, and
window feet and maximal-chord endpoints of such polygons are again lattice
points, so exactness is free.  Polygons are counterclockwise; the boundary
is parameterized by arc length from the first vertex, which makes
"counterclockwise order between two boundary points" a total order.
"""

from __future__ import annotations

from dataclasses import dataclass

Point = tuple[int, int]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class NonOrthogonalEdge(GeometryError):
    pass


class SelfIntersection(GeometryError):
    pass


class ClockwiseInput(GeometryError):
    pass


class GeneralPositionViolation(GeometryError):
    pass


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True, order=True)
class BoundaryPoint:
    """A point on the polygon boundary in canonical form.

    ``edge`` indexes the directed edge v_i -> v_{i+1}; ``offset`` is the
    distance from the edge start, with 0 <= offset < len(edge), so every
    vertex is represented on its outgoing edge.  Lexicographic order on
    (edge, offset) is counterclockwise order from v_1.
    """

    edge: int
    offset: int


class OrthoPolygon:
    """A simple orthogonal polygon with integer vertices, counterclockwise."""

    def __init__(self, vertices: list[Point]):
        self.vertices: list[Point] = [(int(x), int(y)) for x, y in vertices]
        self.n = len(self.vertices)
        self._build_edges()
        self._validate()
        self.edge_len = [self._edge_length(i) for i in range(self.n)]
        self.perimeter = sum(self.edge_len)
        self._prefix = [0] * self.n
        for i in range(1, self.n):
            self._prefix[i] = self._prefix[i - 1] + self.edge_len[i - 1]
        self._reflex = [i for i in range(self.n) if self._turn(i) < 0]
        self._reflex_set = set(self._reflex)
        self._window_cache: dict[tuple[int, str], Window] = {}
        self._chord_cache: dict[tuple[bool, int, int], tuple[int, int]] = {}

    def _build_edges(self) -> None:
        self.xmin = min(x for x, _ in self.vertices)
        self.xmax = max(x for x, _ in self.vertices)
        self.ymin = min(y for _, y in self.vertices)
        self.ymax = max(y for _, y in self.vertices)
        self._vert_edges: list[tuple[int, int, int, int]] = []
        self._horz_edges: list[tuple[int, int, int, int]] = []
        for i in range(self.n):
            (x1, y1), (x2, y2) = self.edge(i)
            if x1 == x2 and y1 != y2:
                self._vert_edges.append((x1, min(y1, y2), max(y1, y2), i))
            elif y1 == y2 and x1 != x2:
                self._horz_edges.append((y1, min(x1, x2), max(x1, x2), i))

    # -- construction / validation ------------------------------------------

    def _edge_length(self, i: int) -> int:
        (x1, y1), (x2, y2) = self.edge(i)
        return abs(x2 - x1) + abs(y2 - y1)

    def _turn(self, i: int) -> int:
        a = self.vertices[i - 1]
        b = self.vertices[i]
        c = self.vertices[(i + 1) % self.n]
        return _sgn(_cross(a, b, c))

    def _validate(self) -> None:
        if self.n < 4:
            raise GeometryError("orthogonal polygon needs at least 4 vertices")
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise SelfIntersection(f"repeated vertex {v}")
            seen.add(v)
        for i in range(self.n):
            (x1, y1), (x2, y2) = self.edge(i)
            if (x1 == x2) == (y1 == y2):
                raise NonOrthogonalEdge(f"edge {i} from {(x1, y1)} to {(x2, y2)}")
        for i in range(self.n):
            a1, a2 = self.edge(i)
            b1, b2 = self.edge((i + 1) % self.n)
            if ((a1[0] == a2[0]) == (b1[0] == b2[0])):
                raise NonOrthogonalEdge(
                    f"consecutive edges {i},{(i + 1) % self.n} do not alternate"
                )
        area2 = self._signed_area2()
        if area2 < 0:
            raise ClockwiseInput("vertices are clockwise; reverse them")
        if area2 == 0:
            raise SelfIntersection("degenerate polygon with zero area")
        self._check_simple()
        if sum(self._turn(i) for i in range(self.n)) != 4:
            raise SelfIntersection("boundary winds more than once")
        self._check_general_position()

    def _signed_area2(self) -> int:
        s = 0
        for i in range(self.n):
            (x1, y1), (x2, y2) = self.edge(i)
            s += x1 * y2 - x2 * y1
        return s

    def _check_simple(self) -> None:
        segs = [self.edge(i) for i in range(self.n)]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                adjacent = j == i + 1 or (i == 0 and j == self.n - 1)
                if _segments_touch(segs[i], segs[j], allow_shared_endpoint=adjacent):
                    raise SelfIntersection(f"edges {i} and {j} intersect")

    def _check_general_position(self) -> None:
        # Only four or more collinear reflex vertices are rejected; the
        # validator follows that wording literally (two or three are fine).
        by_x: dict[int, int] = {}
        by_y: dict[int, int] = {}
        for i in range(self.n):
            if self._turn(i) < 0:
                x, y = self.vertices[i]
                by_x[x] = by_x.get(x, 0) + 1
                by_y[y] = by_y.get(y, 0) + 1
        for count in list(by_x.values()) + list(by_y.values()):
            if count >= 4:
                raise GeneralPositionViolation(
                    f"{count} reflex vertices are collinear"
                )

    # -- basic queries --------------------------------------------------------

    def edge(self, i: int) -> tuple[Point, Point]:
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def area(self) -> int:
        a2 = self._signed_area2()
        return a2 // 2

    def is_reflex(self, i: int) -> bool:
        return i in self._reflex_set

    def reflex_vertices(self) -> list[int]:
        return list(self._reflex)

    def prev_vertex(self, i: int) -> int:
        return (i - 1) % self.n

    def next_vertex(self, i: int) -> int:
        return (i + 1) % self.n

    def scaled(self, k: int) -> "OrthoPolygon":
        return OrthoPolygon([(x * k, y * k) for x, y in self.vertices])

    # -- boundary parameterization ---------------------------------------------

    def boundary_point(self, p: Point) -> BoundaryPoint:
        """Canonical boundary point for a lattice point on the boundary."""
        for i in range(self.n):
            off = self._offset_on_edge(i, p)
            if off is not None and off < self.edge_len[i]:
                return BoundaryPoint(i, off)
        raise GeometryError(f"{p} is not on the boundary")

    def _offset_on_edge(self, i: int, p: Point) -> int | None:
        (x1, y1), (x2, y2) = self.edge(i)
        x, y = p
        if x1 == x2:
            if x != x1 or not min(y1, y2) <= y <= max(y1, y2):
                return None
            return abs(y - y1)
        if y != y1 or not min(x1, x2) <= x <= max(x1, x2):
            return None
        return abs(x - x1)

    def perim(self, bp: BoundaryPoint) -> int:
        return self._prefix[bp.edge] + bp.offset

    def perim_of(self, p: Point) -> int:
        return self.perim(self.boundary_point(p))

    def point_at_perim(self, t: int) -> Point:
        t %= self.perimeter
        lo, hi = 0, self.n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._prefix[mid] <= t:
                lo = mid
            else:
                hi = mid - 1
        off = t - self._prefix[lo]
        (x1, y1), (x2, y2) = self.edge(lo)
        return (x1 + _sgn(x2 - x1) * off, y1 + _sgn(y2 - y1) * off)

    def tick_midpoint2(self, t: int) -> Point:
        """Doubled coordinates of the midpoint of boundary tick [t, t+1)."""
        x1, y1 = self.point_at_perim(t)
        x2, y2 = self.point_at_perim((t + 1) % self.perimeter)
        return (x1 + x2, y1 + y2)

    def tick_is_horizontal(self, t: int) -> bool:
        a = self.point_at_perim(t)
        b = self.point_at_perim((t + 1) % self.perimeter)
        return a[1] == b[1]

    # -- membership -------------------------------------------------------------

    def on_boundary(self, p: Point) -> bool:
        for i in range(self.n):
            if self._offset_on_edge(i, p) is not None:
                return True
        return False

    def cell_inside(self, cx: int, cy: int) -> bool:
        """Open unit cell (cx, cy)-(cx+1, cy+1): entirely interior or not.

        Boundary edges lie on lattice lines, so open unit cells never straddle
        the boundary; midpoint ray parity is exact.
        """
        count = 0
        for ex, lo, hi, _ in self._vert_edges:
            if ex > cx and lo <= cy and cy + 1 <= hi:
                count += 1
        return count % 2 == 1

    def unit_inside(self, line: int, k: int, vertical: bool) -> bool:
        """Closed membership of a unit boundary-line segment.

        For ``vertical`` the segment is {line} x [k, k+1], else [k, k+1] x
        {line}.  True when it lies on a boundary edge or in the interior.
        """
        if vertical:
            for ex, lo, hi, _ in self._vert_edges:
                if ex == line and lo <= k and k + 1 <= hi:
                    return True
            return self.cell_inside(line, k) or self.cell_inside(line - 1, k)
        for ey, lo, hi, _ in self._horz_edges:
            if ey == line and lo <= k and k + 1 <= hi:
                return True
        return self.cell_inside(k, line) or self.cell_inside(k, line - 1)

    def point_in_closed(self, p: Point) -> bool:
        if self.on_boundary(p):
            return True
        x, y = p
        if not (self.xmin < x < self.xmax and self.ymin < y < self.ymax):
            return False
        # off the boundary, all four incident unit cells share p's status
        return self.cell_inside(x, y) or self.cell_inside(x - 1, y) \
            or self.cell_inside(x, y - 1) or self.cell_inside(x - 1, y - 1)

    # -- maximal chords -----------------------------------------------------------

    def maximal_chord(self, p: Point, orientation: str) -> tuple[Point, Point]:
        """Maximal axis-parallel segment through ``p`` inside closure(P)."""
        x, y = p
        if orientation == "vertical":
            lo, hi = self.chord_run(x, y, vertical=True)
            return ((x, lo), (x, hi))
        if orientation == "horizontal":
            lo, hi = self.chord_run(y, x, vertical=False)
            return ((lo, y), (hi, y))
        raise ValueError(f"bad orientation {orientation!r}")

    def chord_run(self, line: int, pos: int, vertical: bool) -> tuple[int, int]:
        """Extent of the maximal run of closed units on a lattice line."""
        key = (vertical, line, pos)
        cached = self._chord_cache.get(key)
        if cached is not None:
            return cached
        lo_bound = self.ymin if vertical else self.xmin
        hi_bound = self.ymax if vertical else self.xmax
        lo = max(min(pos, hi_bound), lo_bound)
        hi = lo
        while lo > lo_bound and self.unit_inside(line, lo - 1, vertical):
            lo -= 1
        while hi < hi_bound and self.unit_inside(line, hi, vertical):
            hi += 1
        if lo == hi:
            probe = (line, pos) if vertical else (pos, line)
            if not self.on_boundary(probe):
                raise GeometryError(f"{probe} outside closure")
        if not (lo <= pos <= hi):
            raise GeometryError("position outside its chord run")
        self._chord_cache[key] = (lo, hi)
        return lo, hi


def _segments_touch(a, b, allow_shared_endpoint: bool) -> bool:
    """True when two axis-parallel closed segments intersect improperly."""
    (ax1, ay1), (ax2, ay2) = a
    (bx1, by1), (bx2, by2) = b
    a_vert = ax1 == ax2
    b_vert = bx1 == bx2
    if a_vert and b_vert:
        if ax1 != bx1:
            return False
        lo = max(min(ay1, ay2), min(by1, by2))
        hi = min(max(ay1, ay2), max(by1, by2))
        return lo < hi or (lo == hi and not allow_shared_endpoint)
    if not a_vert and not b_vert:
        if ay1 != by1:
            return False
        lo = max(min(ax1, ax2), min(bx1, bx2))
        hi = min(max(ax1, ax2), max(bx1, bx2))
        return lo < hi or (lo == hi and not allow_shared_endpoint)
    if b_vert:
        return _segments_touch(b, a, allow_shared_endpoint)
    # a vertical, b horizontal
    if not (min(bx1, bx2) <= ax1 <= max(bx1, bx2)
            and min(ay1, ay2) <= by1 <= max(ay1, ay2)):
        return False
    corner = (ax1, by1)
    if allow_shared_endpoint and corner in (a[0], a[1]) and corner in (b[0], b[1]):
        return False
    return True


def validate_polygon(points: list[Point]) -> OrthoPolygon:
    """Validate and wrap a counterclockwise orthogonal lattice polygon."""
    return OrthoPolygon(points)


def reflex_vertices(poly: OrthoPolygon) -> list[int]:
    return poly.reflex_vertices()


@dataclass(frozen=True)
class Window:
    """Inward extension of an edge incident to a reflex vertex."""

    vertex: int                    # reflex vertex index
    side: str                      # "prev" extends the edge arriving from
                                   # v_{j-1}, "next" the edge leaving to v_{j+1}
    hit: Point                     # first boundary point hit by the extension
    segment: tuple[Point, Point]   # from the reflex vertex to the hit


def window(poly: OrthoPolygon, j: int, side: str) -> Window:
    if not poly.is_reflex(j):
        raise GeometryError(f"vertex {j} is not reflex")
    if side not in ("prev", "next"):
        raise ValueError(f"bad side {side!r}")
    key = (j, side)
    cached = poly._window_cache.get(key)
    if cached is not None:
        return cached
    v = poly.vertices[j]
    u = poly.vertices[poly.prev_vertex(j) if side == "prev" else poly.next_vertex(j)]
    d = (_sgn(v[0] - u[0]), _sgn(v[1] - u[1]))
    hit = _first_boundary_hit(poly, v, d)
    w = Window(j, side, hit, (v, hit))
    poly._window_cache[key] = w
    return w


def _first_boundary_hit(poly: OrthoPolygon, start: Point, d: Point) -> Point:
    x0, y0 = start
    best: int | None = None
    if d[0] != 0:
        for ex, lo, hi, _ in poly._vert_edges:
            if lo <= y0 <= hi:
                t = (ex - x0) * d[0]
                if t > 0 and (best is None or t < best):
                    best = t
        for ey, lo, hi, _ in poly._horz_edges:
            if ey == y0:
                for xx in (lo, hi):
                    t = (xx - x0) * d[0]
                    if t > 0 and (best is None or t < best):
                        best = t
    else:
        for ey, lo, hi, _ in poly._horz_edges:
            if lo <= x0 <= hi:
                t = (ey - y0) * d[1]
                if t > 0 and (best is None or t < best):
                    best = t
        for ex, lo, hi, _ in poly._vert_edges:
            if ex == x0:
                for yy in (lo, hi):
                    t = (yy - y0) * d[1]
                    if t > 0 and (best is None or t < best):
                        best = t
    if best is None:
        raise GeometryError(f"window ray from {start} escapes the polygon")
    return (x0 + d[0] * best, y0 + d[1] * best)


_SUBPOLY_KINDS = ("P_prev", "Pp_prev", "P_next", "Pp_next")


@dataclass(frozen=True)
class SubPolygonRef:
    """One of the two sub-polygons induced by a window, named by its arc.

    P_prev  = (v, x): the prev-window side containing v_{j+1}
    Pp_prev = (x, v): its complement
    P_next  = (y, v): the next-window side containing v_{j-1}
    Pp_next = (v, y): its complement
    """

    window: Window
    which: str
    arc_from: Point
    arc_to: Point


def subpolygon(poly: OrthoPolygon, w: Window, which: str) -> SubPolygonRef:
    if which not in _SUBPOLY_KINDS:
        raise ValueError(f"bad sub-polygon kind {which!r}")
    v = poly.vertices[w.vertex]
    foot = w.hit
    table = {
        ("prev", "P_prev"): (v, foot),
        ("prev", "Pp_prev"): (foot, v),
        ("next", "P_next"): (foot, v),
        ("next", "Pp_next"): (v, foot),
    }
    ends = table.get((w.side, which))
    if ends is None:
        raise ValueError(f"{which} does not belong to a {w.side}-side window")
    return SubPolygonRef(w, which, ends[0], ends[1])


def arc_vertex_loop(poly: OrthoPolygon, arc_from: Point, arc_to: Point) -> list[Point]:
    """Points along the ccw boundary arc: endpoints plus interior vertices."""
    ta = poly.perim_of(arc_from)
    tb = poly.perim_of(arc_to)
    span = (tb - ta) % poly.perimeter
    inner: list[tuple[int, Point]] = []
    if span:
        for i in range(poly.n):
            rel = (poly._prefix[i] - ta) % poly.perimeter
            if 0 < rel < span:
                inner.append((rel, poly.vertices[i]))
    inner.sort()
    out = [arc_from] + [p for _, p in inner]
    if out[-1] != arc_to:
        out.append(arc_to)
    return out


def arc_region_contains(poly: OrthoPolygon, arc_from: Point, arc_to: Point,
                        probe2: Point) -> bool:
    """Even-odd test of a doubled-coordinate probe against a sub-polygon.

    The region is bounded by the ccw arc from ``arc_from`` to ``arc_to`` and
    the straight axis-parallel closing segment back to the start.  The probe
    must not lie on any lattice line carrying a loop segment, which holds for
    probes with one odd coordinate off the closing line.
    """
    loop = arc_vertex_loop(poly, arc_from, arc_to)
    px2, py2 = probe2
    count = 0
    pts = loop + [arc_from]
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x1 == x2 and y1 != y2:
            if 2 * x1 > px2 and 2 * min(y1, y2) < py2 < 2 * max(y1, y2):
                count += 1
        elif y1 != y2:
            raise GeometryError("arc region closing segment is not axis-parallel")
    return count % 2 == 1


@dataclass(frozen=True)
class Rect:
    x0: int
    y0: int
    x1: int
    y1: int

    def area(self) -> int:
        return (self.x1 - self.x0) * (self.y1 - self.y0)


@dataclass
class CellDecomposition:
    cells: list[Rect]
    adjacency: list[tuple[int, int, tuple[int, str] | None]]


def window_partition(poly: OrthoPolygon) -> CellDecomposition:
    """Partition of P into rectangles induced by the full window set."""
    wins: list[Window] = []
    for j in poly.reflex_vertices():
        wins.append(window(poly, j, "prev"))
        wins.append(window(poly, j, "next"))
    xs = sorted({x for x, _ in poly.vertices})
    ys = sorted({y for _, y in poly.vertices})
    sub: dict[tuple[int, int], int] = {}
    boxes: list[Rect] = []
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            # vertex-grid boxes never straddle the boundary, so the unit cell
            # at the lower-left corner decides membership for the whole box
            if poly.cell_inside(xs[i], ys[j]):
                sub[(i, j)] = len(boxes)
                boxes.append(Rect(xs[i], ys[j], xs[i + 1], ys[j + 1]))
    parent = list(range(len(boxes)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def window_covers(vertical: bool, line: int, lo: int, hi: int) -> tuple[int, str] | None:
        for w in wins:
            (wx1, wy1), (wx2, wy2) = w.segment
            if vertical and wx1 == wx2 == line and \
                    min(wy1, wy2) <= lo and hi <= max(wy1, wy2):
                return (w.vertex, w.side)
            if not vertical and wy1 == wy2 == line and \
                    min(wx1, wx2) <= lo and hi <= max(wx1, wx2):
                return (w.vertex, w.side)
        return None

    for (i, j), a in sub.items():
        b = sub.get((i + 1, j))
        if b is not None and window_covers(True, xs[i + 1], ys[j], ys[j + 1]) is None:
            union(a, b)
        b = sub.get((i, j + 1))
        if b is not None and window_covers(False, ys[j + 1], xs[i], xs[i + 1]) is None:
            union(a, b)

    groups: dict[int, list[Rect]] = {}
    for a in range(len(boxes)):
        groups.setdefault(find(a), []).append(boxes[a])
    merged: list[Rect] = []
    root_to_cell: dict[int, int] = {}
    for root in sorted(groups):
        parts = groups[root]
        r = Rect(min(p.x0 for p in parts), min(p.y0 for p in parts),
                 max(p.x1 for p in parts), max(p.y1 for p in parts))
        if sum(p.area() for p in parts) != r.area():
            raise GeometryError("window partition produced a non-rectangle")
        root_to_cell[root] = len(merged)
        merged.append(r)
    order = sorted(range(len(merged)), key=lambda c: (merged[c].y0, merged[c].x0))
    remap = {old: new for new, old in enumerate(order)}
    cells = [merged[old] for old in order]
    adjacency: list[tuple[int, int, tuple[int, str] | None]] = []
    seen: set[tuple[int, int]] = set()
    for (i, j), a in sub.items():
        for di, dj, vertical in ((1, 0, True), (0, 1, False)):
            b = sub.get((i + di, j + dj))
            if b is None:
                continue
            ca = remap[root_to_cell[find(a)]]
            cb = remap[root_to_cell[find(b)]]
            if ca == cb:
                continue
            key = (min(ca, cb), max(ca, cb))
            if key in seen:
                continue
            seen.add(key)
            if vertical:
                tag = window_covers(True, xs[i + 1], ys[j], ys[j + 1])
            else:
                tag = window_covers(False, ys[j + 1], xs[i], xs[i + 1])
            adjacency.append((key[0], key[1], tag))
    adjacency.sort()
    return CellDecomposition(cells, adjacency)


def maximal_chord(poly: OrthoPolygon, p: Point,
                  orientation: str) -> tuple[Point, Point]:
    return poly.maximal_chord(p, orientation)
