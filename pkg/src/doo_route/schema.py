"""JSON I/O for layouts, polylines, configurations and graphs."""
from __future__ import annotations

import json
from typing import Sequence

from .configuration import DooPolyline, parse_configuration
from .errors import LayoutError
from .geometry import ConvexRegion, Layout, TunnelSpec
from .spatial_graph import SpatialGraph


def _xy_list(poly) -> list:
    return [[float(p[0]), float(p[1])] for p in poly]


def layout_from_dict(d: dict) -> Layout:
    if not isinstance(d, dict) or "boundary" not in d:
        raise LayoutError("layout JSON needs a 'boundary' array")
    try:
        tunnels = tuple(
            TunnelSpec(int(t["id"]), tuple(t["a"]), tuple(t["b"])) for t in d.get("tunnels", [])
        )
        regions = d.get("regions")
        return Layout(
            d["boundary"],
            tuple(d.get("holes", [])),
            tunnels,
            None if regions is None else tuple(regions),
        )
    except (KeyError, TypeError) as exc:
        raise LayoutError(f"malformed layout JSON: {exc}") from exc


def layout_to_dict(layout: Layout, regions: Sequence[ConvexRegion] = None) -> dict:
    d = {
        "boundary": _xy_list(layout.boundary),
        "holes": [_xy_list(h) for h in layout.holes],
        "tunnels": [
            {"id": t.id, "a": list(t.entrance_a), "b": list(t.entrance_b)} for t in layout.tunnels
        ],
    }
    if regions is not None:
        regs = sorted(regions, key=lambda r: r.id)
        d["regions"] = [_xy_list(r.polygon) for r in regs]
        d["centroids"] = [[r.centroid.x, r.centroid.y] for r in regs]
    elif layout.predecomposed is not None:
        d["regions"] = [_xy_list(p) for p in layout.predecomposed]
    return d


def polyline_from_dict(d: dict) -> DooPolyline:
    if not isinstance(d, dict) or "points" not in d:
        raise ValueError("polyline JSON needs a 'points' array")
    return DooPolyline(tuple(tuple(p) for p in d["points"]), frozenset(tuple(t) for t in d.get("tunnel_tags", [])))


def polyline_to_dict(doo: DooPolyline) -> dict:
    return {"points": _xy_list(doo.points), "tunnel_tags": sorted(list(t) for t in doo.tunnel_tags)}


def configuration_to_dict(c) -> dict:
    return {"seq": list(c)}


def graph_to_dict(g: SpatialGraph) -> dict:
    verts = []
    for k in g.kinds:
        v = {"id": k.id, "kind": k.kind}
        if k.kind == "entrance":
            v.update(tunnel=k.tunnel, end=k.end, anchor=list(k.anchor), host=k.host)
        verts.append(v)
    return {"n": g.n, "vertices": verts, "edges": [list(e) for e in sorted(g.edges)]}


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def load_layout(path: str) -> Layout:
    return layout_from_dict(load_json(path))


def load_polyline(path: str) -> DooPolyline:
    return polyline_from_dict(load_json(path))


def load_configuration(path: str) -> tuple:
    with open(path) as fh:
        return parse_configuration(fh.read())
