import sys

import pytest

from doo_route.geometry import Layout, TunnelSpec, decompose
from doo_route.spatial_graph import build_graph


def square(x0, y0, x1, y1):
    return ((x0, y0), (x1, y0), (x1, y1), (x0, y1))


def fix_a_layout():
    """10 m square split at x = 5."""
    return Layout(square(0, 0, 10, 10), predecomposed=(square(0, 0, 5, 10), square(5, 0, 10, 10)))


def fix_b_layout():
    """2 m square of unit cells with a tunnel from cell 0 to cell 3."""
    cells = (square(0, 0, 1, 1), square(1, 0, 2, 1), square(0, 1, 1, 2), square(1, 1, 2, 2))
    return Layout(square(0, 0, 2, 2), tunnels=(TunnelSpec(0, (0.5, 0.5), (1.5, 1.5)),), predecomposed=cells)


class Fixture:
    def __init__(self, layout):
        self.layout = layout
        self.regions = tuple(decompose(layout))
        self.graph = build_graph(self.regions, layout)


@pytest.fixture(scope="session")
def fix_a():
    return Fixture(fix_a_layout())


@pytest.fixture(scope="session")
def fix_b():
    return Fixture(fix_b_layout())


@pytest.fixture(scope="session")
def board():
    from doo_route.boards import bundled_board

    return Fixture(bundled_board())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.line(line)
