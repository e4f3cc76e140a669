"""Sequence-matching router.

Aligns the current configuration with the (best-oriented) goal by unit-cost
Levenshtein DP and turns the leftmost contiguous block of mismatches into
one span-replacement action.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from . import kernels
from .configuration import require_valid, simplify, validate
from .errors import NoProgress, SpanOutOfRange
from .spatial_graph import SpatialGraph, has_edge, shortest_path

_KIND = {kernels.MATCH: "match", kernels.SUB: "substitute", kernels.DELETE: "delete", kernels.INSERT: "insert"}


class EditOp(NamedTuple):
    kind: str  # match | substitute | delete | insert
    pos_a: Optional[int]
    pos_b: Optional[int]


@dataclass(frozen=True)
class Alignment:
    distance: int
    ops: tuple


@dataclass(frozen=True)
class RoutingAction:
    span_start: int
    span_end: int
    replacement: tuple
    expected_distance_after: int


@dataclass(frozen=True)
class Done:
    pass


@dataclass(frozen=True)
class Next:
    action: RoutingAction
    oriented_goal: tuple
    distance_before: int
    projected: tuple


PlanOutcome = Union[Done, Next]


def edit_distance(a: Sequence[int], b: Sequence[int]):
    """Levenshtein distance and the full ``(len(a)+1, len(b)+1)`` table."""
    tab = kernels.table(tuple(a), tuple(b))
    return int(tab[len(a), len(b)]), tab


def distance(a: Sequence[int], b: Sequence[int]) -> int:
    return kernels.distance(tuple(a), tuple(b))


def _to_ops(raw) -> tuple:
    return tuple(
        EditOp(_KIND[c], None if i < 0 else i, None if j < 0 else j) for c, i, j in raw
    )


def backtrace(table, a: Sequence[int], b: Sequence[int]) -> Alignment:
    """One optimal alignment; ties prefer match, substitute, delete, insert."""
    a, b = tuple(a), tuple(b)
    ops = _to_ops(kernels.trace(np.asarray(table), a, b))
    return Alignment(sum(op.kind != "match" for op in ops), ops)


def bidirectional_distance(c: Sequence[int], goal: Sequence[int]) -> int:
    c, goal = tuple(c), tuple(goal)
    return min(kernels.distance(c, goal), kernels.distance(c, goal[::-1]))


def orient_goal(current: Sequence[int], goal: Sequence[int]):
    """Goal or its reverse, whichever is closer; forward wins ties."""
    current, goal = tuple(current), tuple(goal)
    fwd = kernels.distance(current, goal)
    rev = goal[::-1]
    bwd = kernels.distance(current, rev)
    if bwd < fwd:
        return rev, bwd
    return goal, fwd


def _collapse(seq) -> tuple:
    out = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


def project(c: Sequence[int], action: RoutingAction) -> tuple:
    c = tuple(c)
    s, e = action.span_start, action.span_end
    if not 0 <= s <= e <= len(c):
        raise SpanOutOfRange(f"span [{s}, {e}) outside configuration of length {len(c)}")
    return _collapse(c[:s] + tuple(action.replacement) + c[e:])


def _windows(ops, lo, hi):
    yield lo, hi
    n = len(ops)
    grow_right = True
    while lo > 0 or hi < n:
        if grow_right and hi < n:
            hi += 1
        elif lo > 0:
            lo -= 1
        else:
            hi += 1
        grow_right = not grow_right
        yield lo, hi


def _bridge(current, s, e, repl, g) -> tuple:
    left = current[s - 1 : s]
    right = current[e : e + 1]
    chain = list(_collapse(left + repl + right))
    out = chain[:1]
    for v in chain[1:]:
        if not has_edge(g, out[-1], v):
            out.extend(shortest_path(g, out[-1], v)[1:-1])
        out.append(v)
    if left and out and out[0] == left[0]:
        out = out[1:]
    if right and out and out[-1] == right[0]:
        out = out[:-1]
    return tuple(out)


def next_action(current: Sequence[int], goal: Sequence[int], g: SpatialGraph) -> PlanOutcome:
    """Next routing move, or :class:`Done` when the goal is reached.

    The returned action's projection is valid on ``g`` and strictly lowers
    the bidirectional distance; when the goal is slack-free the simplified
    projection does too.
    """
    current = require_valid(current, g, "current")
    goal = require_valid(goal, g, "goal")
    # canonical orientation first, so reversing the goal never changes the plan
    canon = min(goal, goal[::-1])
    oriented, d_bi = orient_goal(current, canon)
    if d_bi == 0:
        return Done()
    rev = oriented[::-1]
    settle = simplify(goal) == goal

    def score(c):
        return min(kernels.distance(c, oriented), kernels.distance(c, rev))

    _, raw = kernels.align(current, oriented)
    n = len(raw)
    a_before = [0] * (n + 1)
    b_before = [0] * (n + 1)
    for k, (code, i, j) in enumerate(raw):
        a_before[k + 1] = a_before[k] + (i >= 0)
        b_before[k + 1] = b_before[k] + (j >= 0)
    lo = 0
    while raw[lo][0] == kernels.MATCH:
        lo += 1
    hi = lo
    while hi < n and raw[hi][0] != kernels.MATCH:
        hi += 1

    tried = set()
    for wlo, whi in _windows(raw, lo, hi):
        s, e = a_before[wlo], a_before[whi]
        repl = oriented[b_before[wlo] : b_before[whi]]
        proj = _collapse(current[:s] + repl + current[e:])
        if proj in tried or not proj:
            continue
        tried.add(proj)
        if validate(proj, g) is not None:
            repl = _bridge(current, s, e, repl, g)
            proj = _collapse(current[:s] + repl + current[e:])
            if not proj or validate(proj, g) is not None:
                continue
        after = score(proj)
        if after >= d_bi:
            continue
        if settle and score(simplify(proj)) >= d_bi:
            continue
        return Next(RoutingAction(s, e, tuple(repl), after), oriented, d_bi, proj)
    raise NoProgress(f"no distance-reducing action from {list(current)} toward {list(goal)}")
