import itertools
import random

import pytest

from happy_edges.coloring import color_lattice_linear
from happy_edges.coloring.linear import (
    assign_unique_colors,
    build_constraints,
    color_gadget,
    is_extendible,
    orient_grid,
    topological_order,
)
from happy_edges.graph import FAR, NEAR, verify_coloring
from happy_edges.lattices import PatchParams, generate


def test_gadget_all_near():
    labels = (NEAR, NEAR, NEAR, NEAR, NEAR)
    cu, cv = color_gadget(labels, (6, 7, 8, 9), k=4)
    assert (cu, cv) == (5, 5)


def test_gadget_all_far():
    labels = (FAR, FAR, FAR, FAR, FAR)
    cu, cv = color_gadget(labels, (6, 7, 8, 9), k=4)
    assert (cu, cv) == (1, 14)


def test_gadget_lambda_values():
    # near w1, exactly one past the threshold from w2
    labels = (NEAR, NEAR, FAR, NEAR, NEAR)
    cu, cv = color_gadget(labels, (6, 9, 7, 8), k=4)
    assert cu == 9 - 5  # lam for the (w1, w2) side
    assert abs(6 - cu) <= 4 and abs(9 - cu) == 5


def test_gadget_rejects_non_extendible():
    # both anchor pairs mixed, matched edge near, orders disagree
    labels = (NEAR, NEAR, FAR, NEAR, FAR)
    assert not is_extendible(labels, (6, 9, 8, 7))
    with pytest.raises(ValueError):
        color_gadget(labels, (6, 9, 8, 7), k=4)


def test_gadget_exhaustive_k4():
    """Every admissible label pattern x every distinct anchor coloring at k=4:
    all five edges verify; non-extendible combinations raise."""
    k = 4
    count = 0
    for labels in itertools.product([NEAR, FAR], repeat=5):
        for perm in itertools.permutations([6, 7, 8, 9]):
            if is_extendible(labels, perm):
                cu, cv = color_gadget(labels, perm, k)
                count += 1
                checks = [
                    (labels[0], cu, cv),
                    (labels[1], cu, perm[0]), (labels[2], cu, perm[1]),
                    (labels[3], cv, perm[2]), (labels[4], cv, perm[3]),
                ]
                for label, a, b in checks:
                    assert (abs(a - b) <= k) == (label == NEAR)
                assert 1 <= cu <= 3 * k + 2 and 1 <= cv <= 3 * k + 2
            else:
                with pytest.raises(ValueError):
                    color_gadget(labels, perm, k)
    assert count > 500


def test_orientation_all_unconstrained_is_acyclic():
    patch = generate("D(3^2.4.3.4)", PatchParams(2, 2))
    labels = [NEAR] * len(patch.graph.edges)
    constraints = build_constraints(patch, labels)
    assert all(c.same_order is None for c in constraints)
    orientation = orient_grid(patch.annotations.grid_faces, constraints)
    order = topological_order(orientation, sorted(patch.annotations.independent_set))
    assert len(order) == len(patch.annotations.independent_set)


@pytest.mark.parametrize("name", ["D(3^2.4.3.4)", "D(3^4.6)"])
def test_orientation_random_constraints(name):
    """Random labelings: the sweep always returns an acyclic orientation
    meeting every constraint."""
    patch = generate(name, PatchParams(3, 3))
    anchors = sorted(patch.annotations.independent_set)
    rng = random.Random(31)
    for _ in range(100):
        labels = [rng.choice([NEAR, FAR]) for _ in patch.graph.edges]
        constraints = build_constraints(patch, labels)
        orientation = orient_grid(patch.annotations.grid_faces, constraints)
        colors = assign_unique_colors(orientation, anchors)
        # every oriented edge increases in color
        for a, b in orientation.oriented_edges():
            assert colors[a] < colors[b]
        # and the per-face constraints hold
        for face, constraint in zip(patch.annotations.grid_faces, constraints):
            if constraint.same_order is None:
                continue
            w1, w2 = face.w12
            w3, w4 = face.w34
            rel12 = (colors[w1] < colors[w2]) ^ constraint.swap12
            rel34 = (colors[w3] < colors[w4]) ^ constraint.swap34
            assert (rel12 == rel34) == constraint.same_order


def test_unique_colors_shifted_band():
    patch = generate("D(3^2.4.3.4)", PatchParams(1, 1))
    labels = [NEAR] * len(patch.graph.edges)
    constraints = build_constraints(patch, labels)
    orientation = orient_grid(patch.annotations.grid_faces, constraints)
    anchors = sorted(patch.annotations.independent_set)
    colors = assign_unique_colors(orientation, anchors)
    m = len(anchors)
    assert sorted(colors.values()) == list(range(m + 2, 2 * m + 2))


@pytest.mark.parametrize("name", ["D(3^2.4.3.4)", "D(3^4.6)"])
def test_full_colorer_random_labelings(name):
    patch = generate(name, PatchParams(2, 2))
    anchors = patch.annotations.independent_set
    m = len(anchors)
    rng = random.Random(8)
    for _ in range(200):
        labels = [FAR if rng.random() < rng.choice([0.3, 0.5, 0.7]) else NEAR
                  for _ in patch.graph.edges]
        scheme = color_lattice_linear(patch, labels)
        assert scheme.t == m and scheme.r == 3 * m + 2
        g = patch.graph.with_labels(labels)
        report = verify_coloring(g, scheme.coloring, m)
        assert report.valid
        assert report.range_used <= 3 * m + 2
        anchor_colors = sorted(scheme.coloring[v] for v in anchors)
        assert anchor_colors == list(range(m + 2, 2 * m + 2))
        assert all(1 <= scheme.coloring[v] <= 3 * m + 2 for v in scheme.coloring)
