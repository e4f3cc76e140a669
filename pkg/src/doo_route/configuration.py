"""Discrete configurations: encoding a DOO polyline as a vertex walk.

A configuration is a plain ``tuple`` of vertex ids.  :func:`encode` keeps
slack touches; :func:`simplify` removes them.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BadTunnelTag, ConfigurationError, EmptyPolyline, InvalidConfiguration
from .geometry import EPS, ConvexRegion, Layout, Point2, _pt, locate_many
from .spatial_graph import SpatialGraph, has_edge, shortest_path

SNAP_TOL = 1e-3
DEFAULT_SAMPLE_STEP = 1e-3


@dataclass(frozen=True)
class DooPolyline:
    """Geometric DOO state.

    ``tunnel_tags`` holds ``(segment_index, tunnel_id)`` pairs; a tagged
    segment runs through the tunnel instead of across the surface.
    """

    points: tuple
    tunnel_tags: frozenset = frozenset()

    def __post_init__(self):
        pts = tuple(_pt(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(
            self, "tunnel_tags", frozenset((int(s), int(t)) for s, t in self.tunnel_tags)
        )
        if len(pts) < 2:
            raise EmptyPolyline(f"polyline needs >= 2 points, got {len(pts)}")
        for i in range(len(pts) - 1):
            if math.hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y) <= EPS:
                raise ConfigurationError(f"polyline points {i} and {i + 1} coincide")
        for s, _ in self.tunnel_tags:
            if not 0 <= s < len(pts) - 1:
                raise BadTunnelTag(f"tag on segment {s} but polyline has {len(pts) - 1} segments")

    @property
    def n_segments(self) -> int:
        return len(self.points) - 1

    def arc_params(self) -> np.ndarray:
        p = np.asarray(self.points)
        return np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(p, axis=0).T))])

    @property
    def length(self) -> float:
        return float(self.arc_params()[-1])


@dataclass(frozen=True)
class CutSite:
    """A point on the polyline where a grasp may begin or end."""

    s: float
    point: Point2


@dataclass(frozen=True)
class TraceEntry:
    vertex: int
    head: CutSite
    tail: CutSite


def _sample_run(pts, segs, step, params):
    xs, ss = [], []
    for n, k in enumerate(segs):
        p, q = np.asarray(pts[k]), np.asarray(pts[k + 1])
        L = float(np.hypot(*(q - p)))
        N = max(1, math.ceil(L / step))
        t = np.arange(N + 1) / N
        if n > 0:
            t = t[1:]
        xs.append(p[None, :] + t[:, None] * (q - p)[None, :])
        ss.append(params[k] + t * L)
    return np.concatenate(xs), np.concatenate(ss)


def _tunnel_entrances(g: SpatialGraph) -> dict:
    out = {}
    for k in g.kinds:
        if k.kind == "entrance":
            out.setdefault(k.tunnel, {})[k.end] = k
    return out


def encode_trace(
    doo: DooPolyline,
    g: SpatialGraph,
    regions: Sequence[ConvexRegion],
    layout: Optional[Layout] = None,
    sample_step: float = DEFAULT_SAMPLE_STEP,
) -> list:
    """Raw (unsimplified) encoding with a cut site per entry."""
    if sample_step <= 0:
        raise ConfigurationError("sample_step must be positive")
    pts = doo.points
    params = doo.arc_params()
    tags = dict(doo.tunnel_tags)
    entrances = _tunnel_entrances(g)
    regions = tuple(regions)
    entries: list = []

    def push(v, site):
        if entries and entries[-1].vertex == v:
            entries[-1] = TraceEntry(v, entries[-1].head, site)
        else:
            entries.append(TraceEntry(v, site, site))

    def flush(run):
        if not run:
            return
        xy, ss = _sample_run(pts, run, sample_step, params)
        labels = locate_many(xy, regions)
        start = 0
        for i in range(1, len(labels) + 1):
            if i == len(labels) or labels[i] != labels[start]:
                mid = (start + i - 1) // 2
                site = CutSite(float(ss[mid]), Point2(float(xy[mid, 0]), float(xy[mid, 1])))
                push(int(labels[start]), site)
                start = i

    run = []
    for k in range(doo.n_segments):
        if k not in tags:
            run.append(k)
            continue
        flush(run)
        run = []
        tid = tags[k]
        if tid not in entrances or len(entrances[tid]) != 2:
            raise BadTunnelTag(f"segment {k} tagged with unknown tunnel {tid}")
        ea, eb = entrances[tid]["A"], entrances[tid]["B"]
        p, q = pts[k], pts[k + 1]
        if _near(p, ea.anchor) and _near(q, eb.anchor):
            near, far = ea, eb
        elif _near(p, eb.anchor) and _near(q, ea.anchor):
            near, far = eb, ea
        else:
            raise BadTunnelTag(f"segment {k} endpoints are not at tunnel {tid} entrances")
        push(near.id, CutSite(float(params[k]), p))
        push(far.id, CutSite(float(params[k + 1]), q))
    flush(run)

    # bridge junctions that sampling could not resolve
    out = [entries[0]]
    for e in entries[1:]:
        u = out[-1].vertex
        if not has_edge(g, u, e.vertex):
            site = out[-1].tail
            for w in shortest_path(g, u, e.vertex)[1:-1]:
                out.append(TraceEntry(w, site, site))
        out.append(e)
    return out


def _near(p, q) -> bool:
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= SNAP_TOL


def encode(
    doo: DooPolyline,
    g: SpatialGraph,
    regions: Sequence[ConvexRegion],
    layout: Optional[Layout] = None,
    sample_step: float = DEFAULT_SAMPLE_STEP,
) -> tuple:
    return tuple(e.vertex for e in encode_trace(doo, g, regions, layout, sample_step))


def _reduce(items, vertex_of, merge):
    # leftmost (a, b, a) is always the one completed by the newest item
    stack = []
    for it in items:
        if len(stack) >= 2 and vertex_of(stack[-2]) == vertex_of(it):
            stack.pop()
            stack[-1] = merge(stack[-1], it)
        else:
            stack.append(it)
    return stack


def simplify(c: Sequence[int]) -> tuple:
    """Remove slack touches: reduce every contiguous ``(a, b, a)`` to ``a``."""
    return tuple(_reduce(c, lambda v: v, lambda left, right: left))


def simplify_trace(entries: Sequence[TraceEntry]) -> list:
    return _reduce(
        entries, lambda e: e.vertex, lambda left, right: TraceEntry(left.vertex, left.head, right.tail)
    )


def validate(c: Sequence[int], g: SpatialGraph) -> Optional[int]:
    """``None`` if ``c`` is a valid walk on ``g``, else the first bad index."""
    if len(c) == 0:
        return 0
    adj = g.adjacency()
    for i, v in enumerate(c):
        if v not in adj:
            return i
    edges = g.edges
    for i in range(len(c) - 1):
        u, v = c[i], c[i + 1]
        if u == v or ((u, v) if u < v else (v, u)) not in edges:
            return i
    return None


def require_valid(c: Sequence[int], g: SpatialGraph, what: str = "configuration") -> tuple:
    c = tuple(c)
    bad = validate(c, g)
    if bad is not None:
        raise InvalidConfiguration(f"{what} {list(c)} is invalid at index {bad}", bad)
    return c


def reverse(c: Sequence[int]) -> tuple:
    return tuple(reversed(c))


def bidirectional_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = tuple(a), tuple(b)
    return a == b or a == b[::-1]


_LITERAL = re.compile(r"^\s*[\(\[]\s*(-?\d+\s*(,\s*-?\d+\s*)*,?)?\s*[\)\]]\s*$")


def parse_configuration(text) -> tuple:
    """Parse ``{"seq": [...]}``, a JSON list, or a literal like ``(-1, 1, 27)``."""
    if isinstance(text, (list, tuple)):
        obj = list(text)
    elif isinstance(text, dict):
        obj = text.get("seq")
    else:
        s = str(text).strip()
        if s.startswith("{"):
            obj = json.loads(s).get("seq")
        elif _LITERAL.match(s):
            obj = [int(t) for t in re.findall(r"-?\d+", s)]
        else:
            raise ConfigurationError(f"not a configuration literal: {s[:40]!r}")
    if not isinstance(obj, list) or not obj:
        raise ConfigurationError("configuration must be a non-empty sequence")
    seq = []
    for v in obj:
        if isinstance(v, bool) or not isinstance(v, int) or v < -1:
            raise ConfigurationError(f"bad vertex id {v!r}")
        seq.append(v)
    return tuple(seq)
