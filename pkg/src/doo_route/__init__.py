"""Topological routing of deformable one-dimensional objects on a board."""
from .boards import bundled_board
from .configuration import (
    DooPolyline,
    encode,
    parse_configuration,
    reverse,
    simplify,
    validate,
)
from .errors import *  # noqa: F401,F403
from .geometry import ConvexRegion, Layout, Point2, Polygon, TunnelSpec, decompose, locate, shared_side
from .kernels import BACKEND
from .router import Done, Next, RoutingAction, bidirectional_distance, edit_distance, next_action, project
from .simulator import (
    BenchmarkStats,
    Episode,
    PickPlaceCommand,
    World,
    apply_command,
    random_polyline,
    realize_action,
    run_benchmark,
    run_episode,
)
from .spatial_graph import OUTSIDE, SpatialGraph, build_graph, has_edge, neighbors, shortest_path

__version__ = "0.1.0"
