"""Spatial representation graph over a convex decomposition.

Vertex ids: ``-1`` is the outside region, ``0..k-1`` the convex regions in
decomposition order, then two entrance vertices per tunnel (``entrance_a``
first) in tunnel order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import CoincidentAnchors, EntranceInHole, GraphError, UnknownVertex, Unreachable
from .geometry import (
    EPS,
    ConvexRegion,
    Layout,
    Point2,
    _dist,
    edge_on_polygon_boundary,
    locate,
    point_in_polygon,
    shared_side,
)

OUTSIDE = -1


@dataclass(frozen=True)
class VertexKind:
    id: int
    kind: str  # "outside" | "region" | "entrance"
    region: Optional[int] = None
    tunnel: Optional[int] = None
    end: Optional[str] = None  # "A" | "B"
    anchor: Optional[Point2] = None
    host: Optional[int] = None


@dataclass(frozen=True)
class SpatialGraph:
    kinds: tuple
    edges: frozenset
    _adj: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = {k.id: [] for k in self.kinds}
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u not in adj or v not in adj:
                raise UnknownVertex(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", {k: tuple(sorted(vs)) for k, vs in adj.items()})

    @classmethod
    def from_edges(cls, vertex_ids: Iterable[int], edges: Iterable) -> "SpatialGraph":
        """Abstract graph: -1 is outside, every other id a region."""
        kinds = tuple(
            VertexKind(v, "outside") if v == OUTSIDE else VertexKind(v, "region", region=v)
            for v in sorted(set(vertex_ids))
        )
        return cls(kinds, frozenset(_norm(u, v) for u, v in edges))

    @property
    def n(self) -> int:
        """Number of non-outside vertices."""
        return len(self.kinds) - (1 if OUTSIDE in self._adj else 0)

    @property
    def vertex_ids(self) -> tuple:
        return tuple(k.id for k in self.kinds)

    def kind(self, v: int) -> VertexKind:
        for k in self.kinds:
            if k.id == v:
                return k
        raise UnknownVertex(f"unknown vertex {v}")

    def __contains__(self, v) -> bool:
        return v in self._adj

    def adjacency(self) -> dict:
        return self._adj

    def is_connected(self) -> bool:
        ids = list(self._adj)
        if not ids:
            return True
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(ids)


def _norm(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


def _bbox(poly):
    xs = [p.x for p in poly]
    ys = [p.y for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def _boxes_touch(a, b) -> bool:
    return a[0] <= b[2] + EPS and b[0] <= a[2] + EPS and a[1] <= b[3] + EPS and b[1] <= a[3] + EPS


def build_graph(regions: Sequence[ConvexRegion], layout: Layout) -> SpatialGraph:
    regs = sorted(regions, key=lambda r: r.id)
    if [r.id for r in regs] != list(range(len(regs))):
        raise GraphError("region ids must be dense from 0")
    k = len(regs)

    anchors = []
    for t in sorted(layout.tunnels, key=lambda t: t.id):
        anchors.append((t, "A", t.entrance_a))
        anchors.append((t, "B", t.entrance_b))
    for i in range(len(anchors)):
        for j in range(i + 1, len(anchors)):
            if _dist(anchors[i][2], anchors[j][2]) <= EPS:
                raise CoincidentAnchors(
                    f"tunnel {anchors[i][0].id} and tunnel {anchors[j][0].id} share an entrance point"
                )

    kinds = [VertexKind(OUTSIDE, "outside")]
    kinds += [VertexKind(r.id, "region", region=r.id) for r in regs]
    edges = set()

    # rule 1: regions sharing a side
    boxes = [_bbox(r.polygon) for r in regs]
    for i in range(k):
        for j in range(i + 1, k):
            if _boxes_touch(boxes[i], boxes[j]) and shared_side(regs[i], regs[j]) is not None:
                edges.add((i, j))

    # rule 2: regions with a side on the outer boundary (not on a hole)
    for r in regs:
        if any(edge_on_polygon_boundary(p, q, layout.boundary) for p, q in r.polygon.edges()):
            edges.add((OUTSIDE, r.id))

    # rules 3 and 4: tunnel entrances
    vid = k
    for t, end, anchor in anchors:
        for hi, h in enumerate(layout.holes):
            if point_in_polygon(anchor, h) == 1:
                raise EntranceInHole(f"tunnel {t.id} entrance {end} lies inside component {hi}")
        host = locate(anchor, regs)
        kinds.append(VertexKind(vid, "entrance", tunnel=t.id, end=end, anchor=anchor, host=host))
        edges.add(_norm(vid, host))
        if end == "B":
            edges.add((vid - 1, vid))
        vid += 1

    g = SpatialGraph(tuple(kinds), frozenset(edges))
    if not g.is_connected():
        raise GraphError("spatial graph is not connected")
    return g


def neighbors(g: SpatialGraph, v: int) -> tuple:
    try:
        return g._adj[v]
    except KeyError:
        raise UnknownVertex(f"unknown vertex {v}") from None


def has_edge(g: SpatialGraph, u: int, v: int) -> bool:
    if u not in g._adj:
        raise UnknownVertex(f"unknown vertex {u}")
    if v not in g._adj:
        raise UnknownVertex(f"unknown vertex {v}")
    return _norm(u, v) in g.edges if u != v else False


def _expand_order(v: int):
    # the outside vertex is expanded last among equals
    return (v == OUTSIDE, v)


def shortest_path(g: SpatialGraph, u: int, v: int) -> tuple:
    """Minimum-hop path ``u .. v`` inclusive, deterministic.

    Breadth-first; neighbours are expanded in ascending id order except the
    outside vertex, which goes last.
    """
    adj = g._adj
    if u not in adj:
        raise UnknownVertex(f"unknown vertex {u}")
    if v not in adj:
        raise UnknownVertex(f"unknown vertex {v}")
    if u == v:
        return (u,)
    parent = {u: None}
    q = deque([u])
    while q:
        x = q.popleft()
        for w in sorted(adj[x], key=_expand_order):
            if w in parent:
                continue
            parent[w] = x
            if w == v:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            q.append(w)
    raise Unreachable(f"no path from {u} to {v}")
