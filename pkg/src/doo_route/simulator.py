"""Quasi-static pick-and-place world, episodes and the seeded benchmark.

Re-laid DOO portions are straight segments between placement targets:
region centroids, tunnel anchors, and points just beyond the outer
boundary for the outside vertex.  Two targets in neighbouring regions are
joined directly when the straight segment crosses only those two regions,
otherwise through the midpoint of their shared side.
"""
from __future__ import annotations

import gc
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .configuration import (
    DEFAULT_SAMPLE_STEP,
    DooPolyline,
    _sample_run,
    encode,
    encode_trace,
    require_valid,
    simplify,
    simplify_trace,
    validate,
)
from .errors import ConfigurationError, DegenerateSplice, GenerationFailure, SpanOutOfRange
from .geometry import (
    EPS,
    ConvexRegion,
    Layout,
    Point2,
    _dist,
    decompose,
    edge_on_polygon_boundary,
    inradius_at,
    locate,
    locate_many,
    shared_side,
)
from .router import Done, RoutingAction, bidirectional_distance, next_action
from .spatial_graph import OUTSIDE, SpatialGraph, build_graph, neighbors

OUTSIDE_OFFSET = 2 * EPS
_MERGE_TOL = 10 * EPS
MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class World:
    layout: Layout
    regions: tuple
    graph: SpatialGraph
    doo: DooPolyline
    sample_step: float = DEFAULT_SAMPLE_STEP

    @classmethod
    def create(cls, layout: Layout, doo: DooPolyline, sample_step: float = DEFAULT_SAMPLE_STEP):
        regions = tuple(decompose(layout))
        return cls(layout, regions, build_graph(regions, layout), doo, sample_step)

    def trace(self) -> list:
        raw = encode_trace(self.doo, self.graph, self.regions, self.layout, self.sample_step)
        return simplify_trace(raw)

    def raw_configuration(self) -> tuple:
        return encode(self.doo, self.graph, self.regions, self.layout, self.sample_step)

    def configuration(self) -> tuple:
        return simplify(self.raw_configuration())


@dataclass(frozen=True)
class PickPlaceCommand:
    """Grasp ``grasp_range`` (arc length) and re-lay it through ``waypoints``.

    A tag ``(k, tunnel)`` marks the segment from waypoint ``k`` to
    ``k + 1`` as a tunnel traversal; ``k = -1`` is the segment leaving the
    retained point at the start of the grasp.
    """

    grasp_range: tuple
    waypoints: tuple
    tunnel_tags: frozenset = frozenset()


# --- placement geometry ---------------------------------------------------


class _Scene:
    def __init__(self, layout: Layout, regions: tuple, graph: SpatialGraph, step: float):
        self.layout = layout
        self.regions = regions
        self.by_id = {r.id: r for r in regions}
        self.graph = graph
        self.kinds = {k.id: k for k in graph.kinds}
        self.step = step
        self._sides = {}
        self._exits = {}
        self.ring = self._offset_ring()

    def _offset_ring(self):
        b = list(self.layout.boundary.vertices)
        n = len(b)
        normals = []
        for i in range(n):
            p, q = b[i], b[(i + 1) % n]
            L = _dist(p, q)
            normals.append(((q.y - p.y) / L, -(q.x - p.x) / L))
        ring = []
        for i in range(n):
            n1, n2 = normals[i - 1], normals[i]
            mx, my = n1[0] + n2[0], n1[1] + n2[1]
            ml = math.hypot(mx, my)
            mx, my = mx / ml, my / ml
            k = OUTSIDE_OFFSET / max(mx * n1[0] + my * n1[1], 0.05)
            ring.append(Point2(b[i].x + k * mx, b[i].y + k * my))
        return ring

    def waypoint(self, v: int, rng=None) -> Point2:
        k = self.kinds[v]
        if k.kind == "entrance":
            return k.anchor
        r = self.by_id[v]
        c = r.centroid
        if rng is None:
            return c
        rad = 0.25 * inradius_at(c, r.polygon)
        dx, dy = rng.uniform(-rad, rad, size=2)
        return Point2(c.x + float(dx), c.y + float(dy))

    def side(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        if key not in self._sides:
            self._sides[key] = shared_side(self.by_id[key[0]], self.by_id[key[1]])
        return self._sides[key]

    def portal(self, u: int, v: int, rng=None) -> Point2:
        p, q = self.side(u, v)
        t = 0.5 if rng is None else float(rng.uniform(0.25, 0.75))
        return Point2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))

    def segment_code(self, p, q) -> tuple:
        xy, _ = _sample_run([p, q], [0], self.step, [0.0])
        labels = locate_many(xy, self.regions)
        out = []
        for v in labels:
            if not out or out[-1] != v:
                out.append(int(v))
        return tuple(out)

    def exit_point(self, u: int) -> Point2:
        if u not in self._exits:
            best, best_len = None, 0.0
            for p, q in self.by_id[u].polygon.edges():
                if edge_on_polygon_boundary(p, q, self.layout.boundary) and _dist(p, q) > best_len:
                    best, best_len = (p, q), _dist(p, q)
            if best is None:
                raise DegenerateSplice(f"region {u} does not touch the outer boundary")
            p, q = best
            sgn = 1.0 if self.by_id[u].polygon.area > 0 else -1.0
            nx, ny = sgn * (q.y - p.y) / best_len, -sgn * (q.x - p.x) / best_len
            self._exits[u] = Point2(
                0.5 * (p.x + q.x) + OUTSIDE_OFFSET * nx, 0.5 * (p.y + q.y) + OUTSIDE_OFFSET * ny
            )
        return self._exits[u]

    def outside_point_for(self, v: int) -> Point2:
        k = self.kinds[v]
        return k.anchor if k.kind == "entrance" else self.exit_point(v)

    def _project_ring(self, x):
        ring, n = self.ring, len(self.ring)
        best = None
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            dx, dy = b.x - a.x, b.y - a.y
            t = ((x[0] - a.x) * dx + (x[1] - a.y) * dy) / (dx * dx + dy * dy)
            t = min(1.0, max(0.0, t))
            p = Point2(a.x + t * dx, a.y + t * dy)
            d = _dist(p, x)
            if best is None or d < best[0] - 1e-15:
                best = (d, i, p)
        return best[1], best[2]

    def ring_path(self, x, y) -> list:
        """Outside path from ``x`` to ``y`` hugging the boundary."""
        ring, n = self.ring, len(self.ring)
        i, px = self._project_ring(x)
        j, py = self._project_ring(y)
        if i == j:
            mids = []
        else:
            fwd = [ring[(k % n)] for k in range(i + 1, (j if j > i else j + n) + 1)]
            bwd = [ring[(k % n)] for k in range(i, (j if j < i else j - n), -1)]
            mids = fwd if _path_len([px] + fwd + [py]) <= _path_len([px] + bwd + [py]) else bwd
        return [Point2(*x), px] + mids + [py, Point2(*y)]


def _path_len(pts) -> float:
    return sum(_dist(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


@lru_cache(maxsize=16)
def _scene(layout, regions, graph, step) -> _Scene:
    return _Scene(layout, regions, graph, step)


def _scene_for(world: World) -> _Scene:
    return _scene(world.layout, tuple(world.regions), world.graph, world.sample_step)


def _chain_path(scene: _Scene, chain, start=None, end=None, rng=None):
    """Points realising the vertex walk ``chain`` and its tunnel segments.

    ``start``/``end`` pin the first/last chain vertex to given points.
    Returns ``(points, {segment_index: tunnel_id})``.
    """
    pts, tags = [], {}

    def add(p, tag=None):
        if pts and _dist(p, pts[-1]) <= _MERGE_TOL:
            return
        pts.append(Point2(float(p[0]), float(p[1])))
        if tag is not None:
            tags[len(pts) - 2] = tag

    last = len(chain) - 1
    kinds = scene.kinds

    def pinned(t):
        if t == 0 and start is not None:
            return start
        if t == last and end is not None:
            return end
        return scene.waypoint(chain[t], rng)

    if last == 0:
        v = chain[0]
        if start is not None:
            add(start)
            if end is not None:
                add(end)
        elif v == OUTSIDE:
            add(scene.ring[0])
            add(scene.ring[1])
        else:
            p = pinned(0)
            add(p)
            if end is not None:
                add(end)
        return pts, tags

    if chain[0] == OUTSIDE:
        add(start if start is not None else scene.outside_point_for(chain[1]))
    else:
        add(pinned(0))
    for t in range(1, last + 1):
        u, v = chain[t - 1], chain[t]
        if v == OUTSIDE:
            if t == last and end is not None:
                if kinds[u].kind == "region" and scene.segment_code(pts[-1], end) == (u, v):
                    add(end)
                    continue
                if kinds[u].kind == "region":
                    add(scene.exit_point(u))
                for p in scene.ring_path(pts[-1], end)[1:]:
                    add(p)
            elif kinds[u].kind == "region":
                add(scene.exit_point(u))
            continue
        pv = pinned(t)
        kv = kinds[v]
        if u == OUTSIDE:
            if kv.kind == "region" and scene.segment_code(pts[-1], pv) == (u, v):
                add(pv)
                continue
            for p in scene.ring_path(pts[-1], scene.outside_point_for(v))[1:]:
                add(p)
            add(pv)
            continue
        ku = kinds[u]
        if ku.kind == "entrance" and kv.kind == "entrance":
            add(pv, tag=ku.tunnel)
        elif ku.kind == "region" and kv.kind == "region":
            if scene.segment_code(pts[-1], pv) != (u, v):
                add(scene.portal(u, v, rng))
            add(pv)
        else:
            add(pv)
    return pts, tags


def _collapse(seq) -> list:
    out = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    return out


# --- actions --------------------------------------------------------------


def realize_action(world: World, action: RoutingAction, oriented_goal=None) -> PickPlaceCommand:
    """Turn a span replacement on ``world``'s configuration into a grasp.

    The grasp starts at a sample inside the vertex just before the span and
    ends at one inside the vertex just after it, so the retained ends keep
    their encoding.
    """
    trace = world.trace()
    m = len(trace)
    s, e = action.span_start, action.span_end
    if not 0 <= s <= e <= m:
        raise SpanOutOfRange(f"span [{s}, {e}) outside configuration of length {m}")
    left = trace[s - 1] if s > 0 else None
    right = trace[e] if e < m else None
    chain = _collapse(
        ([left.vertex] if left else []) + list(action.replacement) + ([right.vertex] if right else [])
    )
    scene = _scene_for(world)
    pts, tags = _chain_path(
        scene, chain, left.tail.point if left else None, right.head.point if right else None
    )
    lo = 1 if left else 0
    hi = len(pts) - (1 if right else 0)
    if not left and not right and len(pts) == 1:
        pts.append(_nudge(scene, pts[0]))
        hi = 2
    waypoints = tuple(pts[lo:hi])
    cmd_tags = frozenset((k - lo, tid) for k, tid in tags.items())
    grasp = (left.tail.s if left else 0.0, right.head.s if right else world.doo.length)
    return PickPlaceCommand(grasp, waypoints, cmd_tags)


def _nudge(scene: _Scene, p) -> Point2:
    v = locate(p, scene.regions)
    if v >= 0:
        r = scene.by_id[v]
        c = r.centroid
        target = c if _dist(c, p) > 1e-6 else r.polygon[0]
        return Point2(p[0] + 0.5 * (target[0] - p[0]), p[1] + 0.5 * (target[1] - p[1]))
    return Point2(p[0] + scene.step, p[1])


def _point_at(pts, params, k, s) -> Point2:
    L = params[k + 1] - params[k]
    t = 0.0 if L == 0 else min(1.0, max(0.0, (s - params[k]) / L))
    a, b = pts[k], pts[k + 1]
    return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def apply_command(world: World, cmd: PickPlaceCommand) -> World:
    doo = world.doo
    pts = doo.points
    params = doo.arc_params()
    L = float(params[-1])
    tol = 1e-12 * max(1.0, L)
    s0, s1 = cmd.grasp_range
    if not (-tol <= s0 <= s1 + tol and s1 <= L + tol):
        raise DegenerateSplice(f"grasp range {cmd.grasp_range} outside [0, {L}]")
    tags = dict(doo.tunnel_tags)
    ctags = dict(cmd.tunnel_tags)
    nodes, segtags = [], []

    def add(p, tag=None):
        if nodes and _dist(p, nodes[-1]) <= _MERGE_TOL:
            return
        if nodes:
            segtags.append(tag)
        nodes.append(Point2(float(p[0]), float(p[1])))

    nseg = len(pts) - 1
    if s0 > tol:
        k0 = min(int(np.searchsorted(params, s0, side="right")) - 1, nseg - 1)
        for k in range(k0 + 1):
            add(pts[k], tags.get(k - 1))
        add(_point_at(pts, params, k0, s0), tags.get(k0))
    for i, p in enumerate(cmd.waypoints):
        add(p, ctags.get(i - 1))
    if s1 < L - tol:
        k1 = min(int(np.searchsorted(params, s1, side="right")) - 1, nseg - 1)
        add(_point_at(pts, params, k1, s1), ctags.get(len(cmd.waypoints) - 1))
        for k in range(k1 + 1, len(pts)):
            add(pts[k], tags.get(k - 1))
    if len(nodes) == 1:
        add(_nudge(_scene_for(world), nodes[0]))
    if len(nodes) < 2:
        raise DegenerateSplice("splice left an empty polyline")
    try:
        new = DooPolyline(
            tuple(nodes), frozenset((i, t) for i, t in enumerate(segtags) if t is not None)
        )
        out = replace(world, doo=new)
        bad = validate(out.raw_configuration(), world.graph)
    except ConfigurationError as exc:
        raise DegenerateSplice(str(exc)) from exc
    if bad is not None:
        raise DegenerateSplice(f"re-encoded configuration invalid at index {bad}")
    return out


# --- episodes -------------------------------------------------------------


@dataclass(frozen=True)
class StepRecord:
    action: RoutingAction
    command: PickPlaceCommand
    projected: tuple
    configuration: tuple
    plan_time_ns: int
    distance_before: int
    distance_after: int

    @property
    def agrees(self) -> bool:
        return self.configuration == simplify(self.projected)


@dataclass(frozen=True)
class Episode:
    initial: tuple
    goal: tuple
    steps: tuple
    outcome: str  # "converged" | "action_cap_reached"
    plan_times_ns: tuple
    final_world: World = field(repr=False)

    @property
    def converged(self) -> bool:
        return self.outcome == "converged"

    @property
    def final_configuration(self) -> tuple:
        return self.steps[-1].configuration if self.steps else self.initial


def _timed_plan(current, goal, graph):
    # collector pauses are excluded from timings, as timeit does
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        out = next_action(current, goal, graph)
        dt = time.perf_counter_ns() - t0
    finally:
        if enabled:
            gc.enable()
    return out, dt


def run_episode(world: World, goal: Sequence[int], max_actions: int) -> Episode:
    if max_actions < 1:
        raise ValueError("max_actions must be >= 1")
    goal = require_valid(goal, world.graph, "goal")
    initial = world.configuration()
    current = initial
    steps, times = [], []
    while True:
        out, dt = _timed_plan(current, goal, world.graph)
        times.append(dt)
        if isinstance(out, Done):
            outcome = "converged"
            break
        if len(steps) >= max_actions:
            outcome = "action_cap_reached"
            break
        cmd = realize_action(world, out.action, out.oriented_goal)
        world = apply_command(world, cmd)
        nxt = world.configuration()
        steps.append(
            StepRecord(
                out.action,
                cmd,
                out.projected,
                nxt,
                dt,
                out.distance_before,
                bidirectional_distance(nxt, goal),
            )
        )
        current = nxt
    return Episode(initial, goal, tuple(steps), outcome, tuple(times), world)


# --- random instances -----------------------------------------------------


def random_polyline(
    layout: Layout,
    regions: Sequence[ConvexRegion],
    graph: SpatialGraph,
    length_range=(0.3, 0.5),
    seed: int = 0,
    sample_step: float = DEFAULT_SAMPLE_STEP,
) -> DooPolyline:
    """Seeded random walk over neighbouring regions, cut to a target length.

    The walk never enters the outside vertex, never turns straight back
    unless stuck, and always leaves a tunnel before ending.
    """
    lo, hi = float(length_range[0]), float(length_range[1])
    if not 0 < lo <= hi:
        raise ValueError(f"bad length range {length_range!r}")
    scene = _scene(layout, tuple(regions), graph, sample_step)
    rng = np.random.default_rng(seed)
    region_ids = sorted(r.id for r in regions)
    for _ in range(100):
        target = float(rng.uniform(lo, hi))
        v = region_ids[int(rng.integers(len(region_ids)))]
        pts = [scene.waypoint(v, rng)]
        tags = {}
        prev = None
        length = 0.0
        hops = 0
        while (length < target or scene.kinds[v].kind == "entrance") and hops < 10_000:
            opts = [w for w in neighbors(graph, v) if w != OUTSIDE and w != prev]
            if not opts:
                opts = [prev] if prev is not None else []
            if not opts:
                break
            w = opts[int(rng.integers(len(opts)))]
            leg, leg_tags = _chain_path(scene, [v, w], start=pts[-1], rng=rng)
            base = len(pts) - 1
            pts.extend(leg[1:])
            for k, tid in leg_tags.items():
                tags[base + k] = tid
            length += _path_len(leg)
            prev, v = v, w
            hops += 1
        if len(pts) < 2:
            continue
        cut = _truncate(pts, tags, target)
        if cut is None:
            continue
        pts2, tags2 = cut
        total = _path_len(pts2)
        if not 0.9 * lo <= total <= 1.1 * hi:
            continue
        try:
            doo = DooPolyline(tuple(pts2), frozenset(tags2.items()))
        except ConfigurationError:
            continue
        if validate(encode(doo, graph, regions, layout, sample_step), graph) is None:
            return doo
    raise GenerationFailure(f"no valid polyline after 100 attempts (seed {seed})")


def _truncate(pts, tags, target):
    acc = 0.0
    for k in range(len(pts) - 1):
        L = _dist(pts[k], pts[k + 1])
        if acc + L >= target:
            if k in tags:
                # finish the tunnel, then stop halfway along the next leg
                if k + 2 >= len(pts):
                    return None
                a, b = pts[k + 1], pts[k + 2]
                end = Point2(0.5 * (a.x + b.x), 0.5 * (a.y + b.y))
                keep = k + 2
            else:
                t = (target - acc) / L
                a, b = pts[k], pts[k + 1]
                end = Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
                keep = k + 1
            out = list(pts[:keep])
            if _dist(out[-1], end) > _MERGE_TOL:
                out.append(end)
            if len(out) < 2:
                return None
            return out, {s: t for s, t in tags.items() if s < len(out) - 1}
        acc += L
    return list(pts), dict(tags)


# --- benchmark ------------------------------------------------------------


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, index: int) -> int:
    return (seed ^ splitmix64(index)) & MASK64


@dataclass(frozen=True)
class TrialResult:
    index: int
    subseed: int
    excluded: bool
    initial: tuple = ()
    goal: tuple = ()
    actions: int = 0
    outcome: str = ""
    configurations: tuple = ()
    plan_times_us: tuple = ()
    agreement: bool = True
    monotone: bool = True

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "index": self.index,
            "subseed": self.subseed,
            "excluded": self.excluded,
            "initial": list(self.initial),
            "goal": list(self.goal),
            "actions": self.actions,
            "outcome": self.outcome,
            "configurations": [list(c) for c in self.configurations],
            "agreement": self.agreement,
            "monotone": self.monotone,
        }
        if timing:
            d["plan_times_us"] = list(self.plan_times_us)
        return d


@dataclass(frozen=True)
class BenchmarkStats:
    trials: int
    completed: int
    excluded: int
    success_rate: float
    mean_actions: float
    max_actions: int
    plan_time_p50_us: float
    plan_time_p99_us: float
    plan_time_max_us: float
    seed: int
    per_trial: tuple = ()

    TIMING_FIELDS = ("plan_time_p50_us", "plan_time_p99_us", "plan_time_max_us")

    def to_dict(self, trials: bool = True, timing: bool = True) -> dict:
        d = {
            "trials": self.trials,
            "completed": self.completed,
            "excluded": self.excluded,
            "success_rate": self.success_rate,
            "mean_actions": self.mean_actions,
            "max_actions": self.max_actions,
            "seed": self.seed,
        }
        if timing:
            d.update({k: getattr(self, k) for k in self.TIMING_FIELDS})
        if trials:
            d["per_trial"] = [t.to_dict(timing) for t in self.per_trial]
        return d


def run_trial(layout, regions, graph, index, seed, max_actions, length_range, sample_step=DEFAULT_SAMPLE_STEP):
    sub = trial_seed(seed, index)
    rng = np.random.default_rng(sub)
    s_init, s_goal = (int(x) for x in rng.integers(0, 2**63 - 1, size=2))
    try:
        init = random_polyline(layout, regions, graph, length_range, s_init, sample_step)
        goal_doo = random_polyline(layout, regions, graph, length_range, s_goal, sample_step)
    except GenerationFailure:
        return TrialResult(index, sub, True)
    world = World(layout, tuple(regions), graph, init, sample_step)
    goal = simplify(encode(goal_doo, graph, regions, layout, sample_step))
    ep = run_episode(world, goal, max_actions)
    dists = [bidirectional_distance(ep.initial, goal)] + [s.distance_after for s in ep.steps]
    return TrialResult(
        index,
        sub,
        False,
        ep.initial,
        goal,
        len(ep.steps),
        ep.outcome,
        tuple(s.configuration for s in ep.steps),
        tuple(t / 1000.0 for t in ep.plan_times_ns),
        all(s.agrees for s in ep.steps),
        all(b < a for a, b in zip(dists, dists[1:])),
    )


def _trial_args(args):
    return run_trial(*args)


def summarize(results: Sequence[TrialResult], seed: int) -> BenchmarkStats:
    results = sorted(results, key=lambda r: r.index)
    done = [r for r in results if not r.excluded]
    times = np.array([t for r in done for t in r.plan_times_us], dtype=float)
    acts = [r.actions for r in done]
    return BenchmarkStats(
        trials=len(results),
        completed=len(done),
        excluded=len(results) - len(done),
        success_rate=(sum(r.outcome == "converged" for r in done) / len(done)) if done else 0.0,
        mean_actions=float(np.mean(acts)) if acts else 0.0,
        max_actions=max(acts) if acts else 0,
        plan_time_p50_us=float(np.percentile(times, 50)) if times.size else 0.0,
        plan_time_p99_us=float(np.percentile(times, 99)) if times.size else 0.0,
        plan_time_max_us=float(times.max()) if times.size else 0.0,
        seed=seed,
        per_trial=tuple(results),
    )


def _workers(workers: Optional[int]) -> int:
    if workers is None:
        raw = os.environ.get("DOO_ROUTE_THREADS", "1")
        workers = int(raw) if raw.strip() else 1
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def run_benchmark(
    layout: Layout,
    n_trials: int,
    seed: int,
    max_actions: int = 15,
    length_range=(0.3, 0.5),
    workers: Optional[int] = None,
    sample_step: float = DEFAULT_SAMPLE_STEP,
) -> BenchmarkStats:
    """Seeded closed-loop trials; trial ``i`` is seeded by ``seed ^ splitmix64(i)``.

    ``workers`` defaults to ``DOO_ROUTE_THREADS`` (unset: 1, 0: all cores).
    """
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    regions = tuple(decompose(layout))
    graph = build_graph(regions, layout)
    args = [
        (layout, regions, graph, i, seed, max_actions, tuple(length_range), sample_step)
        for i in range(n_trials)
    ]
    n = _workers(workers)
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_trial_args, args))
    else:
        results = [run_trial(*a) for a in args]
    return summarize(results, seed)
