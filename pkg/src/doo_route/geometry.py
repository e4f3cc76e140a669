"""Planar geometry for the work region.

Polygons are plain tuples of :class:`Point2`.  Outer boundaries run
counter-clockwise, holes (components) clockwise.  Free space is the
boundary minus the holes; :func:`decompose` tiles it with convex regions
(ear clipping with hole bridging, then Hertel-Mehlhorn merging) unless the
layout ships its own convex pieces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    BadPredecomposition,
    DegeneratePolygon,
    HoleOutsideBoundary,
    LayoutError,
    NonSimplePolygon,
    OverlappingHoles,
    TriangulationFailure,
    WrongOrientation,
)

EPS = 1e-9  # coordinate tolerance, metres
LEN_EPS = 1e-6  # minimum shared-side length, metres
AREA_RTOL = 1e-6  # relative area tolerance for tilings


class Point2(NamedTuple):
    x: float
    y: float


def _pt(p) -> Point2:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise LayoutError(f"non-finite coordinate {p!r}")
    return Point2(x, y)


@dataclass(frozen=True)
class Polygon:
    vertices: tuple

    def __post_init__(self):
        pts = tuple(_pt(p) for p in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if len(pts) < 3:
            raise DegeneratePolygon(f"polygon needs >= 3 vertices, got {len(pts)}")
        for i, p in enumerate(pts):
            q = pts[(i + 1) % len(pts)]
            if math.hypot(q.x - p.x, q.y - p.y) <= EPS:
                raise DegeneratePolygon(f"vertices {i} and {(i + 1) % len(pts)} coincide")
        if polygon_area(pts) == 0.0:
            if not is_simple(pts):
                raise NonSimplePolygon("polygon edges cross")
            raise DegeneratePolygon("polygon has zero signed area")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def area(self) -> float:
        return polygon_area(self.vertices)

    def reversed(self) -> "Polygon":
        return Polygon(self.vertices[::-1])

    def edges(self):
        pts = self.vertices
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]

    def to_list(self) -> list:
        return [[p.x, p.y] for p in self.vertices]


@dataclass(frozen=True)
class ConvexRegion:
    id: int
    polygon: Polygon
    centroid: Point2


@dataclass(frozen=True)
class TunnelSpec:
    id: int
    entrance_a: Point2
    entrance_b: Point2

    def __post_init__(self):
        a, b = _pt(self.entrance_a), _pt(self.entrance_b)
        object.__setattr__(self, "entrance_a", a)
        object.__setattr__(self, "entrance_b", b)
        if math.hypot(a.x - b.x, a.y - b.y) <= EPS:
            raise LayoutError(f"tunnel {self.id} has coincident entrances")


def _as_polygon(p) -> Polygon:
    return p if isinstance(p, Polygon) else Polygon(tuple(p))


@dataclass(frozen=True)
class Layout:
    boundary: Polygon
    holes: tuple = ()
    tunnels: tuple = ()
    predecomposed: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "boundary", _as_polygon(self.boundary))
        object.__setattr__(self, "holes", tuple(_as_polygon(h) for h in self.holes))
        object.__setattr__(self, "tunnels", tuple(self.tunnels))
        if self.predecomposed is not None:
            object.__setattr__(
                self, "predecomposed", tuple(_as_polygon(p) for p in self.predecomposed)
            )

    @property
    def free_area(self) -> float:
        return polygon_area(self.boundary) - sum(abs(polygon_area(h)) for h in self.holes)


@dataclass(frozen=True)
class ValidatedLayout(Layout):
    """A :class:`Layout` whose invariants have been checked.

    Predecomposed pieces are normalised to counter-clockwise order.
    """


# --- primitives -----------------------------------------------------------


def _points(poly) -> tuple:
    if isinstance(poly, Polygon):
        return poly.vertices
    return tuple(Point2(float(p[0]), float(p[1])) for p in poly)


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _dist(a, b) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def _seg_point_dist(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return _dist(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / L2
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy))


def _line_dist(p, a, b) -> float:
    """Signed distance of p from the directed line a->b (left positive)."""
    return _cross(a, b, p) / _dist(a, b)


def segments_intersect(a, b, c, d, tol: float = EPS) -> bool:
    """Closed-segment intersection test; touching within ``tol`` counts."""
    o1, o2 = _line_dist(a, c, d), _line_dist(b, c, d)
    o3, o4 = _line_dist(c, a, b), _line_dist(d, a, b)
    if ((o1 > tol and o2 < -tol) or (o1 < -tol and o2 > tol)) and (
        (o3 > tol and o4 < -tol) or (o3 < -tol and o4 > tol)
    ):
        return True
    return (
        _seg_point_dist(a, c, d) <= tol
        or _seg_point_dist(b, c, d) <= tol
        or _seg_point_dist(c, a, b) <= tol
        or _seg_point_dist(d, a, b) <= tol
    )


def polygon_area(polygon) -> float:
    """Signed shoelace area: positive for counter-clockwise order."""
    pts = _points(polygon)
    n = len(pts)
    s = 0.0
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def is_convex(polygon) -> bool:
    """True iff all turns share one sign; collinear vertices are allowed.

    The polygon is assumed simple.
    """
    pts = _points(polygon)
    n = len(pts)
    if n < 3:
        raise DegeneratePolygon(f"polygon needs >= 3 vertices, got {n}")
    sign = 0
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        cr = _cross(a, b, c)
        tol = EPS * max(_dist(a, b), _dist(b, c))
        if abs(cr) <= tol:
            # collinear is fine, a reversal is not
            if (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0:
                return False
            continue
        s = 1 if cr > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return sign != 0


def _convex_and_simple(pts) -> bool:
    # a same-sign turning sequence can still wind twice (pentagram)
    if not is_convex(pts) or len(set(pts)) != len(pts):
        return False
    turn = 0.0
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        h0 = math.atan2(b[1] - a[1], b[0] - a[0])
        h1 = math.atan2(c[1] - b[1], c[0] - b[0])
        d = h1 - h0
        while d <= -math.pi:
            d += 2 * math.pi
        while d > math.pi:
            d -= 2 * math.pi
        turn += d
    return abs(abs(turn) - 2 * math.pi) < 1e-6


def is_simple(polygon) -> bool:
    pts = _points(polygon)
    n = len(pts)
    if n < 3:
        return False
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        a, b = edges[i]
        c = edges[(i + 1) % n][1]
        # adjacent edges may only meet at their shared vertex
        if abs(_cross(a, b, c)) <= EPS * max(_dist(a, b), _dist(b, c)):
            if (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0:
                return False
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_intersect(a, b, *edges[j]):
                return False
    return True


def point_in_polygon(p, polygon, tol: float = EPS) -> int:
    """1 inside, 0 on the boundary (within ``tol``), -1 outside."""
    pts = _points(polygon)
    n = len(pts)
    inside = False
    x, y = p[0], p[1]
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if _seg_point_dist(p, a, b) <= tol:
            return 0
        if (a[1] > y) != (b[1] > y):
            xi = a[0] + (y - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x < xi:
                inside = not inside
    return 1 if inside else -1


def clip_convex(subject, clip) -> list:
    """Sutherland-Hodgman: ``subject`` clipped by convex CCW ``clip``."""
    out = list(_points(subject))
    cpts = _points(clip)
    m = len(cpts)
    for i in range(m):
        if not out:
            break
        a, b = cpts[i], cpts[(i + 1) % m]
        inp, out = out, []
        for k in range(len(inp)):
            p, q = inp[k - 1], inp[k]
            pin = _cross(a, b, p) >= 0.0
            qin = _cross(a, b, q) >= 0.0
            if qin:
                if not pin:
                    out.append(_line_hit(p, q, a, b))
                out.append(q)
            elif pin:
                out.append(_line_hit(p, q, a, b))
    return out


def _line_hit(p, q, a, b) -> Point2:
    d1 = _cross(a, b, p)
    d2 = _cross(a, b, q)
    t = d1 / (d1 - d2)
    return Point2(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _overlap_area(subject, convex_ccw) -> float:
    pts = clip_convex(subject, convex_ccw)
    return abs(polygon_area(pts)) if len(pts) >= 3 else 0.0


def centroid(polygon) -> Point2:
    pts = _points(polygon)
    a = polygon_area(pts)
    if abs(a) < 1e-300:
        n = len(pts)
        return Point2(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)
    # shift to the first vertex to keep the products small
    ox, oy = pts[0]
    cx = cy = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i][0] - ox, pts[i][1] - oy
        x1, y1 = pts[(i + 1) % n][0] - ox, pts[(i + 1) % n][1] - oy
        w = x0 * y1 - x1 * y0
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    return Point2(ox + cx / (6.0 * a), oy + cy / (6.0 * a))


def inradius_at(point, polygon) -> float:
    """Distance from ``point`` to the nearest edge of ``polygon``."""
    pts = _points(polygon)
    return min(_seg_point_dist(point, pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))


# --- validation -----------------------------------------------------------


def validate_layout(layout: Layout) -> ValidatedLayout:
    if isinstance(layout, ValidatedLayout):
        return layout
    bnd = layout.boundary
    if not is_simple(bnd):
        raise NonSimplePolygon("boundary is not simple", index=None)
    if polygon_area(bnd) <= 0:
        raise WrongOrientation("boundary must be counter-clockwise", index=None)

    for i, h in enumerate(layout.holes):
        if not is_simple(h):
            raise NonSimplePolygon(f"hole {i} is not simple", index=i)
        if polygon_area(h) >= 0:
            raise WrongOrientation(f"hole {i} must be clockwise", index=i)
        if any(point_in_polygon(p, bnd) != 1 for p in h) or _polygons_touch(h, bnd):
            raise HoleOutsideBoundary(f"hole {i} is not strictly inside the boundary", index=i)
    for i, h in enumerate(layout.holes):
        for j in range(i + 1, len(layout.holes)):
            g = layout.holes[j]
            if (
                _polygons_touch(h, g)
                or point_in_polygon(g[0], h) >= 0
                or point_in_polygon(h[0], g) >= 0
            ):
                raise OverlappingHoles(f"holes {i} and {j} overlap", index=j)

    pieces = None
    if layout.predecomposed is not None:
        pieces = tuple(_validate_pieces(layout))
    return ValidatedLayout(bnd, layout.holes, layout.tunnels, pieces)


def _polygons_touch(p, q) -> bool:
    for a, b in p.edges():
        for c, d in q.edges():
            if segments_intersect(a, b, c, d):
                return True
    return False


def _validate_pieces(layout: Layout):
    free = layout.free_area
    tol = AREA_RTOL * free
    pieces = []
    for i, piece in enumerate(layout.predecomposed):
        if not is_simple(piece) or not is_convex(piece):
            raise BadPredecomposition(f"piece {i} is not a simple convex polygon", index=i)
        if piece.area < 0:
            piece = piece.reversed()
        a = piece.area
        if abs(_overlap_area(layout.boundary, piece) - a) > tol:
            raise BadPredecomposition(f"piece {i} leaves the boundary", index=i)
        for h in layout.holes:
            if _overlap_area(h, piece) > tol:
                raise BadPredecomposition(f"piece {i} overlaps a component", index=i)
        pieces.append(piece)
    for i, p in enumerate(pieces):
        for j in range(i + 1, len(pieces)):
            if _overlap_area(pieces[j], p) > tol:
                raise BadPredecomposition(f"pieces {i} and {j} overlap", index=j)
    total = sum(p.area for p in pieces)
    if abs(total - free) > tol:
        raise BadPredecomposition(
            f"pieces cover {total:.9g} m^2 of {free:.9g} m^2 free space", index=None
        )
    return pieces


# --- triangulation --------------------------------------------------------


def _left(a, b, c) -> bool:
    return _cross(a, b, c) > 0.0


def _left_on(a, b, c) -> bool:
    return _cross(a, b, c) >= 0.0


def _in_cone(poly, i, b) -> bool:
    a0, a1, a2 = poly[i - 1], poly[i], poly[(i + 1) % len(poly)]
    if _left_on(a1, a2, a0):
        return _left(a1, b, a0) and _left(b, a1, a2)
    return not (_left_on(a1, b, a2) and _left_on(b, a1, a0))


def _bridge_holes(outer: list, holes: list) -> list:
    poly = list(outer)
    order = sorted(range(len(holes)), key=lambda k: (-max(p.x for p in holes[k]), k))
    pending = set(order)
    for k in order:
        pending.discard(k)
        hole = holes[k]
        m = max(range(len(hole)), key=lambda i: (hole[i].x, -hole[i].y))
        M = hole[m]
        others = [holes[j] for j in sorted(pending)]
        cands = sorted(range(len(poly)), key=lambda i: (_dist(poly[i], M), i))
        for vi in cands:
            V = poly[vi]
            if _dist(V, M) <= EPS or not _in_cone(poly, vi, M):
                continue
            if _bridge_blocked(V, M, poly, hole, others):
                continue
            mid = Point2(0.5 * (V.x + M.x), 0.5 * (V.y + M.y))
            if point_in_polygon(mid, hole) >= 0:
                continue
            break
        else:
            raise TriangulationFailure(f"no visible bridge for hole {k}", index=k)
        ring = list(hole[m:]) + list(hole[:m])
        poly = poly[: vi + 1] + ring + [M, V] + poly[vi + 1 :]
    return poly


def _bridge_blocked(V, M, poly, hole, others) -> bool:
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if _dist(a, V) <= EPS or _dist(b, V) <= EPS:
            continue
        if segments_intersect(V, M, a, b):
            return True
    h = len(hole)
    for i in range(h):
        a, b = hole[i], hole[(i + 1) % h]
        if _dist(a, M) <= EPS or _dist(b, M) <= EPS:
            continue
        if segments_intersect(V, M, a, b):
            return True
    for g in others:
        for i in range(len(g)):
            if segments_intersect(V, M, g[i], g[(i + 1) % len(g)]):
                return True
    return False


def _in_triangle(p, a, b, c) -> bool:
    return (
        _line_dist(p, a, b) >= -EPS and _line_dist(p, b, c) >= -EPS and _line_dist(p, c, a) >= -EPS
    )


def _ear_clip(pts: list) -> list:
    idx = list(range(len(pts)))
    tris = []
    while len(idx) > 3:
        m = len(idx)
        for k in range(m):
            ia, ib, ic = idx[k - 1], idx[k], idx[(k + 1) % m]
            a, b, c = pts[ia], pts[ib], pts[ic]
            if _cross(a, b, c) <= EPS * max(_dist(a, b), _dist(b, c)):
                continue
            blocked = False
            for j in idx:
                if j in (ia, ib, ic):
                    continue
                q = pts[j]
                if _dist(q, a) <= EPS or _dist(q, b) <= EPS or _dist(q, c) <= EPS:
                    continue
                if _in_triangle(q, a, b, c):
                    blocked = True
                    break
            if not blocked:
                tris.append((a, b, c))
                del idx[k]
                break
        else:
            # no strict ear left: drop a zero-area vertex and retry
            for k in range(m):
                a, b, c = pts[idx[k - 1]], pts[idx[k]], pts[idx[(k + 1) % m]]
                if abs(_cross(a, b, c)) <= EPS * max(_dist(a, b), _dist(b, c)):
                    del idx[k]
                    break
            else:
                raise TriangulationFailure("ear clipping stalled")
    a, b, c = (pts[i] for i in idx)
    if _cross(a, b, c) > EPS * max(_dist(a, b), _dist(b, c)):
        tris.append((a, b, c))
    return tris


def triangulate(boundary, holes: Sequence = ()) -> list:
    outer = list(_points(boundary))
    if polygon_area(outer) < 0:
        outer.reverse()
    hs = []
    for h in holes:
        pts = list(_points(h))
        if polygon_area(pts) > 0:
            pts.reverse()
        hs.append(pts)
    merged = _bridge_holes(outer, hs) if hs else outer
    try:
        return [Polygon(t) for t in _ear_clip(merged)]
    except LayoutError as exc:
        raise TriangulationFailure(str(exc)) from exc


# --- convex merging -------------------------------------------------------


def _merge_along(P, Q, i, j) -> list:
    # P[i]->P[i+1] is the reverse of Q[j]->Q[j+1]
    pr = P[i + 1 :] + P[: i + 1]
    qr = Q[j + 1 :] + Q[: j + 1]
    return pr + qr[1:-1]


def merge_convex(triangles: Iterable) -> list:
    """Hertel-Mehlhorn: drop shared diagonals while the union stays convex."""
    pieces = {}
    for i, t in enumerate(triangles):
        pts = list(_points(t))
        if polygon_area(pts) < 0:
            pts.reverse()
        pieces[i] = pts
    merged_any = True
    while merged_any:
        merged_any = False
        owner = {}
        for pid in sorted(pieces):
            P = pieces[pid]
            for i in range(len(P)):
                owner[(P[i], P[(i + 1) % len(P)])] = (pid, i)
        for pid in sorted(pieces):
            P = pieces[pid]
            for i in range(len(P)):
                hit = owner.get((P[(i + 1) % len(P)], P[i]))
                if hit is None or hit[0] == pid:
                    continue
                oid, j = hit
                cand = _merge_along(P, pieces[oid], i, j)
                if _convex_and_simple(cand):
                    keep, drop = min(pid, oid), max(pid, oid)
                    pieces[keep] = cand
                    del pieces[drop]
                    merged_any = True
                    break
            if merged_any:
                break
    out = []
    for rid, pid in enumerate(sorted(pieces)):
        poly = Polygon(tuple(pieces[pid]))
        out.append(ConvexRegion(rid, poly, centroid(poly)))
    return out


def decompose(layout: Layout) -> list:
    vl = validate_layout(layout)
    if vl.predecomposed is not None:
        return [ConvexRegion(i, p, centroid(p)) for i, p in enumerate(vl.predecomposed)]
    return merge_convex(triangulate(vl.boundary, vl.holes))


# --- point location -------------------------------------------------------


class RegionIndex:
    """Vectorised half-plane membership over a fixed set of convex regions."""

    def __init__(self, regions: Sequence[ConvexRegion]):
        regs = sorted(regions, key=lambda r: r.id)
        self.regions = tuple(regs)
        self.ids = np.array([r.id for r in regs], dtype=np.int64)
        k = max(len(r.polygon) for r in regs) if regs else 1
        self.origins = np.zeros((len(regs), k, 2))
        self.dirs = np.zeros((len(regs), k, 2))
        for ri, r in enumerate(regs):
            pts = r.polygon.vertices
            if r.polygon.area < 0:
                pts = pts[::-1]
            n = len(pts)
            for e in range(k):
                a, b = pts[e % n], pts[(e + 1) % n]
                L = _dist(a, b)
                self.origins[ri, e] = a
                self.dirs[ri, e] = ((b[0] - a[0]) / L, (b[1] - a[1]) / L)

    def locate(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if len(self.ids) == 0:
            return np.full(len(pts), -1, dtype=np.int64)
        rx = pts[:, None, None, 0] - self.origins[None, :, :, 0]
        ry = pts[:, None, None, 1] - self.origins[None, :, :, 1]
        s = self.dirs[None, :, :, 0] * ry - self.dirs[None, :, :, 1] * rx
        inside = (s >= -EPS).all(axis=2)
        first = inside.argmax(axis=1)
        return np.where(inside.any(axis=1), self.ids[first], -1)


@lru_cache(maxsize=64)
def region_index(regions: tuple) -> RegionIndex:
    return RegionIndex(regions)


def locate(point, regions: Sequence[ConvexRegion], layout: Optional[Layout] = None) -> int:
    """Vertex id of the region containing ``point``; -1 outside.

    Points on a shared side resolve to the lowest region id.  ``layout``
    only short-circuits points beyond the boundary's bounding box.
    """
    if layout is not None:
        xs = [p.x for p in layout.boundary]
        ys = [p.y for p in layout.boundary]
        if not (min(xs) - EPS <= point[0] <= max(xs) + EPS and min(ys) - EPS <= point[1] <= max(ys) + EPS):
            return -1
    return int(region_index(tuple(regions)).locate([point])[0])


def locate_many(points, regions: Sequence[ConvexRegion]) -> np.ndarray:
    return region_index(tuple(regions)).locate(points)


def shared_side(a: ConvexRegion, b: ConvexRegion):
    """Longest collinear overlap of an edge of ``a`` with an edge of ``b``.

    Returns ``(p, q)`` or ``None`` when no overlap exceeds ``LEN_EPS``;
    a corner touch is not a side.
    """
    best, best_len = None, LEN_EPS
    for p0, p1 in a.polygon.edges():
        L = _dist(p0, p1)
        ux, uy = (p1.x - p0.x) / L, (p1.y - p0.y) / L
        for q0, q1 in b.polygon.edges():
            c0 = ux * (q0.y - p0.y) - uy * (q0.x - p0.x)
            c1 = ux * (q1.y - p0.y) - uy * (q1.x - p0.x)
            if abs(c0) > EPS or abs(c1) > EPS:
                continue
            t0 = ux * (q0.x - p0.x) + uy * (q0.y - p0.y)
            t1 = ux * (q1.x - p0.x) + uy * (q1.y - p0.y)
            lo, hi = max(0.0, min(t0, t1)), min(L, max(t0, t1))
            if hi - lo > best_len:
                best_len = hi - lo
                best = (
                    Point2(p0.x + ux * lo, p0.y + uy * lo),
                    Point2(p0.x + ux * hi, p0.y + uy * hi),
                )
    return best


def edge_on_polygon_boundary(p, q, polygon) -> bool:
    """True if segment p-q overlaps some edge of ``polygon`` by > LEN_EPS."""
    L = _dist(p, q)
    ux, uy = (q[0] - p[0]) / L, (q[1] - p[1]) / L
    for a, b in polygon.edges():
        c0 = ux * (a.y - p[1]) - uy * (a.x - p[0])
        c1 = ux * (b.y - p[1]) - uy * (b.x - p[0])
        if abs(c0) > EPS or abs(c1) > EPS:
            continue
        t0 = ux * (a.x - p[0]) + uy * (a.y - p[1])
        t1 = ux * (b.x - p[0]) + uy * (b.y - p[1])
        if min(L, max(t0, t1)) - max(0.0, min(t0, t1)) > LEN_EPS:
            return True
    return False
