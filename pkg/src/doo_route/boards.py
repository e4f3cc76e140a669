"""Bundled layouts."""
from .geometry import Layout, TunnelSpec

BOARD_SIZE = 0.38

_XS = (0.0, 0.06, 0.12, 0.19, 0.26, 0.32, 0.38)
_YS = (0.0, 0.055, 0.12, 0.19, 0.26, 0.325, 0.38)
_HOLE_CELLS = ((1, 1), (4, 1), (1, 4), (4, 4))
_CENTER = ((2, 2), (3, 2), (2, 3), (3, 3))


def _rect(x0, y0, x1, y1):
    return ((x0, y0), (x1, y0), (x1, y1), (x0, y1))


def bundled_board() -> Layout:
    """0.38 m square stand-in task board.

    A 6x6 grid: four single-cell components, full-width strips along the
    bottom and top edges, a merged 2x2 centre cell, and one bridge from
    cell (1, 2) over the centre to cell (4, 3).  19 regions, all
    predecomposed.
    """
    X, Y = _XS, _YS
    regions = [_rect(X[0], Y[0], X[6], Y[1])]
    for r in range(1, 5):
        for c in range(6):
            if (c, r) in _HOLE_CELLS:
                continue
            if (c, r) in _CENTER:
                if (c, r) == (2, 2):
                    regions.append(_rect(X[2], Y[2], X[4], Y[4]))
                continue
            regions.append(_rect(X[c], Y[r], X[c + 1], Y[r + 1]))
    regions.append(_rect(X[0], Y[5], X[6], Y[6]))
    holes = [_rect(X[c], Y[r], X[c + 1], Y[r + 1])[::-1] for c, r in _HOLE_CELLS]
    tunnel = TunnelSpec(0, (0.085, 0.16), (0.295, 0.215))
    return Layout(_rect(0.0, 0.0, BOARD_SIZE, BOARD_SIZE), holes, (tunnel,), regions)
