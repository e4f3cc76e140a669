"""SVG rendering of a board, its graph and a DOO polyline."""
from __future__ import annotations

from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .configuration import DooPolyline
from .geometry import ConvexRegion, Layout
from .spatial_graph import OUTSIDE, SpatialGraph

_SIZE = 600


def render_svg(
    layout: Layout,
    regions: Sequence[ConvexRegion],
    graph: Optional[SpatialGraph] = None,
    doo: Optional[DooPolyline] = None,
) -> str:
    xs = [p.x for p in layout.boundary]
    ys = [p.y for p in layout.boundary]
    x0, y0, x1, y1 = min(xs), min(ys), max(xs), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = 0.05 * span
    scale = _SIZE / (span + 2 * pad)

    def tx(p):
        # SVG y grows downwards
        return f"{(p[0] - x0 + pad) * scale:.2f},{(y1 - p[1] + pad) * scale:.2f}"

    def poly(pts, style):
        return f'<polygon points="{" ".join(tx(p) for p in pts)}" {style}/>'

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        poly(layout.boundary, 'fill="#fafafa" stroke="#000" stroke-width="2"'),
    ]
    for h in layout.holes:
        out.append(poly(h, 'fill="#999" stroke="#333"'))
    regs = sorted(regions, key=lambda r: r.id)
    for r in regs:
        out.append(poly(r.polygon, 'fill="none" stroke="#4a7" stroke-width="1"'))
    pos = {r.id: r.centroid for r in regs}
    if graph is not None:
        for k in graph.kinds:
            if k.kind == "entrance":
                pos[k.id] = k.anchor
        for u, v in sorted(graph.edges):
            if u == OUTSIDE or v == OUTSIDE:
                continue
            a, b = tx(pos[u]).split(","), tx(pos[v]).split(",")
            out.append(
                f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                'stroke="#c84" stroke-width="1" stroke-dasharray="4 3"/>'
            )
        for k in graph.kinds:
            if k.kind == "entrance":
                c = tx(k.anchor).split(",")
                out.append(f'<rect x="{float(c[0]) - 4:.2f}" y="{float(c[1]) - 4:.2f}" width="8" height="8" fill="#c84"/>')
    for r in regs:
        c = tx(r.centroid).split(",")
        out.append(f'<circle cx="{c[0]}" cy="{c[1]}" r="3" fill="#262"/>')
        out.append(
            f'<text x="{float(c[0]) + 4:.2f}" y="{float(c[1]) - 4:.2f}" font-size="10">{escape(str(r.id))}</text>'
        )
    if doo is not None:
        tags = dict(doo.tunnel_tags)
        for k in range(doo.n_segments):
            a, b = tx(doo.points[k]).split(","), tx(doo.points[k + 1]).split(",")
            dash = ' stroke-dasharray="2 2"' if k in tags else ""
            out.append(
                f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="#d22" stroke-width="2.5"{dash}/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
