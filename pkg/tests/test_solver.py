import random

from hypothesis import given, settings, strategies as st

from happy_edges.graph import FAR, NEAR, LabeledGraph, verify_coloring
from happy_edges.solver import (
    SolveQuery,
    check_all_labelings,
    decide,
    min_colors,
    propagate_order_constraints,
)

from .oracles import brute_force_decide


def test_single_near_edge_r1():
    g = LabeledGraph(2, [(0, 1, NEAR)])
    result = decide(SolveQuery(g, r=1))
    assert result.status == "SAT"
    assert result.t == 0
    assert result.coloring == {0: 0, 1: 0}


def test_triangle_one_far_with_t():
    g = LabeledGraph(3, [(0, 1, NEAR), (1, 2, NEAR), (0, 2, FAR)])
    result = decide(SolveQuery(g, r=3, t=1))
    assert result.status == "SAT"
    assert verify_coloring(g, result.coloring, 1).valid


def test_min_colors_single_vertex():
    g = LabeledGraph(1, [])
    assert min_colors(g)[:2] == (1, 0)


def test_min_colors_triangle_one_far():
    # at t=0 near edges force equality around to the far pair, so t*=1
    # (value frozen from brute-force enumeration over r=1..3)
    g = LabeledGraph(3, [(0, 1, NEAR), (1, 2, NEAR), (0, 2, FAR)])
    expected, _ = brute_force_decide(g, 2)
    assert not expected
    r, t, witness = min_colors(g)
    assert (r, t) == (3, 1)
    assert verify_coloring(g, witness, t).valid


def test_min_colors_triangle_two_far():
    # one near pair equal, the odd vertex apart: {0,0,1} at t=0
    g = LabeledGraph(3, [(0, 1, NEAR), (1, 2, FAR), (0, 2, FAR)])
    r, t, witness = min_colors(g)
    assert (r, t) == (2, 0)
    assert verify_coloring(g, witness, t).valid


def test_check_all_labelings_single_edge():
    g = LabeledGraph(2, [(0, 1, NEAR)])
    ok, _ = check_all_labelings(g, r=3, t=1)
    assert ok


def test_check_all_labelings_hexagon():
    g = LabeledGraph(6, [(i, (i + 1) % 6, NEAR) for i in range(5)] + [(0, 5, NEAR)])
    ok, _ = check_all_labelings(g, r=5, t=1)
    assert ok


def test_check_all_labelings_triangle_fails():
    g = LabeledGraph(3, [(0, 1, NEAR), (1, 2, NEAR), (0, 2, NEAR)])
    # all-far labeling needs range 2t+3: impossible at (4,1) and (5,2)
    for r, t in [(4, 1), (5, 2)]:
        ok, failing = check_all_labelings(g, r=r, t=t)
        assert not ok
        assert failing is not None


def test_budget_is_reported():
    g = LabeledGraph(8, [(u, v, NEAR) for u in range(8) for v in range(u + 1, 8)])
    result = decide(SolveQuery(g, r=8, t=0, budget=3))
    assert result.status == "BudgetExceeded"


def _random_graph(rng, max_n=8):
    n = rng.randint(1, max_n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.45:
                edges.append((u, v, NEAR if rng.random() < 0.5 else FAR))
    return LabeledGraph(n, edges)


def test_agrees_with_brute_force_on_random_instances():
    rng = random.Random(20331)
    for _ in range(120):
        g = _random_graph(rng)
        r = rng.randint(1, 4)
        t = rng.choice([None, rng.randint(0, r - 1)])
        expected, _ = brute_force_decide(g, r, t)
        got = decide(SolveQuery(g, r=r, t=t))
        assert got.status == ("SAT" if expected else "UNSAT")
        if got.status == "SAT":
            assert verify_coloring(g, got.coloring, got.t).valid
            assert min(got.coloring.values()) == 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_sat_witnesses_verify(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labels = [data.draw(st.sampled_from([NEAR, FAR])) for _ in chosen]
    g = LabeledGraph(n, [(u, v, l) for (u, v), l in zip(chosen, labels)])
    r = data.draw(st.integers(min_value=1, max_value=4))
    result = decide(SolveQuery(g, r=r))
    expected, _ = brute_force_decide(g, r)
    assert result.status == ("SAT" if expected else "UNSAT")


def test_determinism():
    rng = random.Random(7)
    g = _random_graph(rng)
    a = decide(SolveQuery(g, r=4))
    b = decide(SolveQuery(g, r=4))
    assert a == b


# -- order propagation ------------------------------------------------------


def test_rule_a_triangle():
    # far base (0,2), near edges through apex 1
    g = LabeledGraph(3, [(0, 1, NEAR), (1, 2, NEAR), (0, 2, FAR)])
    result = propagate_order_constraints(g, {(0, 1)})
    assert (1, 2) in result.facts
    assert not result.contradiction


def test_rule_b_triangle():
    g = LabeledGraph(3, [(0, 1, FAR), (1, 2, FAR), (0, 2, NEAR)])
    result = propagate_order_constraints(g, {(0, 1)})
    assert (2, 1) in result.facts


def test_rule_d_four_cycle():
    # opposite far edges (0,1), (2,3); near (1,2), (0,3)
    g = LabeledGraph(4, [(0, 1, FAR), (1, 2, NEAR), (2, 3, FAR), (0, 3, NEAR)])
    result = propagate_order_constraints(g, {(0, 1)})
    assert (3, 2) in result.facts  # c(u3) < c(u2)
    assert (3, 1) in result.facts
    assert (0, 2) in result.facts


def test_rule_c_four_cycle():
    # far edges (0,3), (2,3) adjacent at 3; near (0,1), (1,2)
    g = LabeledGraph(4, [(0, 1, NEAR), (1, 2, NEAR), (2, 3, FAR), (0, 3, FAR)])
    result = propagate_order_constraints(g, {(0, 3)})
    assert (1, 3) in result.facts
    assert (2, 3) in result.facts


def test_k4_gadget_order_contradiction():
    # outer triangle far, spokes near; seeding u<x forces a cyclic order
    g = LabeledGraph(
        4,
        [
            (0, 1, FAR),
            (1, 2, FAR),
            (0, 2, FAR),
            (0, 3, NEAR),
            (1, 3, NEAR),
            (2, 3, NEAR),
        ],
    )
    result = propagate_order_constraints(g, {(0, 3)})
    assert result.contradiction


def test_order_pruning_preserves_verdicts():
    rng = random.Random(99)
    for _ in range(40):
        g = _random_graph(rng, max_n=6)
        r = rng.randint(1, 4)
        plain = decide(SolveQuery(g, r=r))
        pruned = decide(SolveQuery(g, r=r, use_order_pruning=True))
        assert plain.status == pruned.status
