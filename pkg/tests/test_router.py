import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from doo_route.configuration import simplify, validate
from doo_route.errors import InvalidConfiguration, SpanOutOfRange
from doo_route.router import (
    Done,
    Next,
    RoutingAction,
    backtrace,
    bidirectional_distance,
    distance,
    edit_distance,
    next_action,
    orient_goal,
    project,
)

from _oracles import d_bi, levenshtein_recursive, random_connected_graph, random_walk

seqs = st.lists(st.integers(-1, 6), min_size=1, max_size=7).map(tuple)


def test_edit_distance_examples():
    assert edit_distance((0, 1), (0, 1))[0] == 0
    assert edit_distance((0, 1), (0, 2))[0] == 1
    assert edit_distance((-1, 0, 1, -1), (-1, 0, 3, 1, -1))[0] == 1
    d, tab = edit_distance((0, 1, 2), (1, 2))
    assert tab.shape == (4, 3) and d == 1


def test_backtrace_examples():
    kinds = lambda a, b: [op.kind for op in backtrace(edit_distance(a, b)[1], a, b).ops]
    assert kinds((0, 1), (0, 1)) == ["match", "match"]
    assert kinds((0, 1), (0, 2)) == ["match", "substitute"]
    assert kinds((0, 1), (0, 3, 1)) == ["match", "insert", "match"]
    al = backtrace(edit_distance((0, 1), (0, 3, 1))[1], (0, 1), (0, 3, 1))
    assert al.distance == 1
    assert al.ops[1].pos_a is None and al.ops[1].pos_b == 1


@settings(max_examples=300, deadline=None)
@given(seqs, seqs)
def test_alignment_reconstructs_goal(a, b):
    d, tab = edit_distance(a, b)
    al = backtrace(tab, a, b)
    assert al.distance == d == levenshtein_recursive(a, b)
    out = []
    ia = ib = 0
    for op in al.ops:
        if op.kind in ("match", "substitute"):
            assert op.pos_a == ia and op.pos_b == ib
            if op.kind == "match":
                assert a[ia] == b[ib]
            out.append(b[ib])
            ia += 1
            ib += 1
        elif op.kind == "delete":
            assert op.pos_a == ia
            ia += 1
        else:
            assert op.pos_b == ib
            out.append(b[ib])
            ib += 1
    assert tuple(out) == b and ia == len(a)
    assert backtrace(tab, a, b) == al


@settings(max_examples=200, deadline=None)
@given(seqs, seqs, seqs)
def test_metric_properties(a, b, c):
    assert distance(a, a) == 0
    assert distance(a, b) == distance(b, a)
    assert distance(a, c) <= distance(a, b) + distance(b, c)


def test_orient_goal():
    assert orient_goal((0, 1), (1, 0)) == ((0, 1), 0)
    assert orient_goal((0, 1), (0, 1)) == ((0, 1), 0)
    assert orient_goal((0, 1), (0, 3, 1)) == ((0, 3, 1), 1)
    # forward wins ties
    assert orient_goal((0, 1, 2), (5, 1, 6))[0] == (5, 1, 6)


def test_next_action_done(fix_b):
    assert isinstance(next_action((0, 1), (0, 1), fix_b.graph), Done)
    assert isinstance(next_action((0, 1), (1, 0), fix_b.graph), Done)


def test_next_action_full_swap(fix_b):
    out = next_action((0, 1), (2, 3), fix_b.graph)
    assert isinstance(out, Next)
    assert (out.action.span_start, out.action.span_end) == (0, 2)
    assert out.action.replacement == (2, 3)
    assert out.projected == (2, 3)
    assert out.action.expected_distance_after == 0


def test_next_action_rejects_goal_invalid_on_graph(fix_b):
    # (0, 3, 1) needs the edge 0-3, which the four-cell board does not have
    with pytest.raises(InvalidConfiguration) as ei:
        next_action((0, 1), (0, 3, 1), fix_b.graph)
    assert ei.value.offending_index == 0


def test_next_action_insertion_needs_bridge(fix_b):
    out = next_action((0, 1), (0, 1, 3, 1), fix_b.graph)
    assert validate(out.projected, fix_b.graph) is None
    assert bidirectional_distance(out.projected, (0, 1, 3, 1)) < 2


def test_project_examples():
    assert project((0, 1), RoutingAction(0, 2, (2, 3), 0)) == (2, 3)
    assert project((0, 1), RoutingAction(1, 2, (3, 1), 0)) == (0, 3, 1)
    assert project((0, 1), RoutingAction(1, 1, (), 0)) == (0, 1)
    with pytest.raises(SpanOutOfRange):
        project((0, 1), RoutingAction(1, 3, (), 0))
    with pytest.raises(SpanOutOfRange):
        project((0, 1), RoutingAction(2, 1, (), 0))


def _run_to_done(cur, goal, g):
    steps = 0
    while True:
        out = next_action(cur, goal, g)
        if isinstance(out, Done):
            return steps
        before = d_bi(cur, goal)
        nxt = project(cur, out.action)
        assert nxt == out.projected
        assert validate(nxt, g) is None
        assert d_bi(nxt, goal) == out.action.expected_distance_after < before
        cur = nxt
        steps += 1
        assert steps <= 100


@pytest.mark.parametrize("seed", range(150))
def test_progress_random_graphs(seed):
    rng = np.random.default_rng(seed)
    g = random_connected_graph(rng)
    cur, goal = random_walk(rng, g), random_walk(rng, g)
    assert _run_to_done(cur, goal, g) <= d_bi(cur, goal)


@pytest.mark.parametrize("seed", range(100))
def test_simplified_goal_monotone_after_resettle(seed):
    # the closed loop re-simplifies after each action; progress must survive that
    rng = np.random.default_rng(10_000 + seed)
    g = random_connected_graph(rng)
    cur, goal = simplify(random_walk(rng, g)), simplify(random_walk(rng, g))
    d = d_bi(cur, goal)
    for _ in range(50):
        out = next_action(cur, goal, g)
        if isinstance(out, Done):
            break
        cur = simplify(out.projected)
        nd = d_bi(cur, goal)
        assert nd < d
        d = nd
    else:
        pytest.fail("no convergence")


@pytest.mark.parametrize("seed", range(100))
def test_orientation_invariance(seed):
    rng = np.random.default_rng(20_000 + seed)
    g = random_connected_graph(rng)
    cur, goal = random_walk(rng, g), random_walk(rng, g)
    a = next_action(cur, goal, g)
    b = next_action(cur, goal[::-1], g)
    assert type(a) is type(b)
    if isinstance(a, Next):
        assert d_bi(cur, goal) - d_bi(a.projected, goal) == d_bi(cur, goal) - d_bi(b.projected, goal)
        assert a == b


def test_next_action_deterministic(fix_b):
    assert next_action((0, 1, 3), (2, 0, 4, 5), fix_b.graph) == next_action((0, 1, 3), (2, 0, 4, 5), fix_b.graph)
