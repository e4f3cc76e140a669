"""``doo-route`` command line.

Exit codes: 0 success, 2 invalid input, 3 planner found no progress.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .boards import bundled_board
from .configuration import DEFAULT_SAMPLE_STEP, encode, parse_configuration, simplify
from .errors import DooRouteError, NoProgress
from .geometry import decompose
from .render import render_svg
from .router import Done, next_action
from .schema import (
    configuration_to_dict,
    graph_to_dict,
    layout_to_dict,
    load_json,
    load_layout,
    polyline_from_dict,
)
from .simulator import World, realize_action, apply_command, run_benchmark
from .spatial_graph import build_graph

EXIT_INPUT = 2
EXIT_NO_PROGRESS = 3


def _layout(arg):
    return bundled_board() if arg == "bundled" else load_layout(arg)


def _world_parts(arg):
    layout = _layout(arg)
    regions = tuple(decompose(layout))
    return layout, regions, build_graph(regions, layout)


def _seq_or_polyline(arg):
    """A file (polyline or configuration JSON) or an inline sequence literal."""
    if os.path.exists(arg):
        obj = load_json(arg)
        if isinstance(obj, dict) and "points" in obj:
            return polyline_from_dict(obj)
        return parse_configuration(obj)
    return parse_configuration(arg)


def _configuration(arg, layout, regions, graph, step):
    obj = _seq_or_polyline(arg)
    if isinstance(obj, tuple):
        return obj
    return simplify(encode(obj, graph, regions, layout, step))


def _polyline(arg):
    obj = _seq_or_polyline(arg)
    if isinstance(obj, tuple):
        raise ValueError(f"{arg}: expected a polyline file")
    return obj


def cmd_decompose(a):
    layout = _layout(a.layout)
    regions = decompose(layout)
    d = layout_to_dict(layout, regions)
    if a.format == "text":
        lines = [f"{len(regions)} regions"]
        for r, c in zip(d["regions"], d["centroids"]):
            lines.append(f"  {len(r)}-gon centroid ({c[0]:.6g}, {c[1]:.6g})")
        return "\n".join(lines)
    return d


def cmd_graph(a):
    _, _, g = _world_parts(a.layout)
    d = graph_to_dict(g)
    if a.format == "text":
        return f"{len(d['vertices'])} vertices, {len(d['edges'])} edges\n" + "\n".join(
            f"  {u} -- {v}" for u, v in d["edges"]
        )
    return d


def cmd_encode(a):
    layout, regions, g = _world_parts(a.layout)
    c = encode(_polyline(a.polyline), g, regions, layout, a.sample_step)
    if not a.raw:
        c = simplify(c)
    return str(c) if a.format == "text" else configuration_to_dict(c)


def cmd_plan(a):
    layout, regions, g = _world_parts(a.layout)
    cur = _configuration(a.current, layout, regions, g, a.sample_step)
    goal = _configuration(a.goal, layout, regions, g, a.sample_step)
    t0 = time.perf_counter_ns()
    out = next_action(cur, goal, g)
    dt = (time.perf_counter_ns() - t0) / 1000.0
    if isinstance(out, Done):
        return "done" if a.format == "text" else {"outcome": "done"}
    act = out.action
    d = {
        "outcome": "next",
        "span": [act.span_start, act.span_end],
        "replacement": list(act.replacement),
        "projected": list(out.projected),
        "distance_before": out.distance_before,
        "distance_after": act.expected_distance_after,
        "plan_time_us": dt,
    }
    if a.format == "text":
        return (
            f"replace [{act.span_start}, {act.span_end}) with {list(act.replacement)} -> "
            f"{list(out.projected)} (distance {out.distance_before} -> {act.expected_distance_after})"
        )
    return d


def cmd_simulate(a):
    layout, regions, g = _world_parts(a.layout)
    world = World(layout, regions, g, _polyline(a.polyline), a.sample_step)
    goal = _configuration(a.goal, layout, regions, g, a.sample_step)
    if a.cap < 1:
        raise ValueError("--cap must be >= 1")
    current = world.configuration()
    records = [{"type": "start", "configuration": list(current), "goal": list(goal)}]
    steps = 0
    while True:
        t0 = time.perf_counter_ns()
        out = next_action(current, goal, g)
        dt = (time.perf_counter_ns() - t0) / 1000.0
        if isinstance(out, Done) or steps >= a.cap:
            records.append(
                {
                    "type": "end",
                    "outcome": "converged" if isinstance(out, Done) else "action_cap_reached",
                    "actions": steps,
                    "configuration": list(current),
                }
            )
            break
        cmd = realize_action(world, out.action, out.oriented_goal)
        world = apply_command(world, cmd)
        current = world.configuration()
        steps += 1
        records.append(
            {
                "type": "step",
                "step": steps,
                "span": [out.action.span_start, out.action.span_end],
                "replacement": list(out.action.replacement),
                "projected": list(out.projected),
                "configuration": list(current),
                "grasp_range": list(cmd.grasp_range),
                "waypoints": [list(p) for p in cmd.waypoints],
                "tunnel_tags": sorted(list(t) for t in cmd.tunnel_tags),
                "plan_time_us": dt,
            }
        )
    if a.format == "text":
        return "\n".join(
            f"{r['type']}: {r['configuration']}" + (f" ({r['outcome']})" if r["type"] == "end" else "")
            for r in records
        )
    return records


def cmd_bench(a):
    stats = run_benchmark(
        _layout(a.layout), a.trials, a.seed, a.cap, (a.len_min, a.len_max), sample_step=a.sample_step
    )
    if a.format == "text":
        return (
            f"trials {stats.trials} (excluded {stats.excluded}), success {stats.success_rate:.3f}, "
            f"actions mean {stats.mean_actions:.2f} max {stats.max_actions}, "
            f"plan p50 {stats.plan_time_p50_us:.1f} us p99 {stats.plan_time_p99_us:.1f} us"
        )
    return stats.to_dict(trials=not a.summary)


def cmd_render(a):
    layout, regions, g = _world_parts(a.layout)
    doo = _polyline(a.polyline) if a.polyline else None
    return render_svg(layout, regions, g, doo)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--sample-step", type=float, default=DEFAULT_SAMPLE_STEP, metavar="M")

    p = argparse.ArgumentParser(prog="doo-route", description="Topological DOO routing tools.")
    sub = p.add_subparsers(dest="command", required=True)
    layout_help = "layout JSON file, or 'bundled'"

    s = sub.add_parser("decompose", parents=[common], help="convex decomposition of a layout")
    s.add_argument("layout", help=layout_help)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("graph", parents=[common], help="spatial graph of a layout")
    s.add_argument("layout", help=layout_help)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("encode", parents=[common], help="configuration of a polyline")
    s.add_argument("layout", help=layout_help)
    s.add_argument("polyline")
    s.add_argument("--raw", action="store_true", help="keep slack touches")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("plan", parents=[common], help="next routing action")
    s.add_argument("layout", help=layout_help)
    s.add_argument("current", help="polyline or configuration file, or a literal like '(0, 1)'")
    s.add_argument("goal", help="configuration file or literal")
    s.set_defaults(func=cmd_plan)

    s = sub.add_parser("simulate", parents=[common], help="closed-loop episode (JSON lines)")
    s.add_argument("layout", help=layout_help)
    s.add_argument("polyline")
    s.add_argument("goal", help="configuration file or literal")
    s.add_argument("--cap", type=int, default=15)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("bench", parents=[common], help="seeded benchmark")
    s.add_argument("--layout", default="bundled", help=layout_help)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=15)
    s.add_argument("--len-min", type=float, default=0.3)
    s.add_argument("--len-max", type=float, default=0.5)
    s.add_argument("--summary", action="store_true", help="omit per-trial records")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("render", parents=[common], help="SVG of board, graph and polyline")
    s.add_argument("layout", help=layout_help)
    s.add_argument("--polyline")
    s.set_defaults(func=cmd_render)
    return p


def _emit(result, a) -> str:
    if isinstance(result, str):
        text = result if result.endswith("\n") else result + "\n"
    elif isinstance(result, list):
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in result)
    else:
        text = json.dumps(result, sort_keys=True) + "\n"
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    try:
        _emit(a.func(a), a)
    except NoProgress as exc:
        print(f"error: NoProgress: {exc}", file=sys.stderr)
        return EXIT_NO_PROGRESS
    except (DooRouteError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}".splitlines()[0], file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
