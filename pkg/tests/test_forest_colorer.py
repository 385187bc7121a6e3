import itertools
import random

import pytest

from happy_edges.coloring import color_forest, decompose
from happy_edges.coloring.forest import decomposition_from_sets
from happy_edges.graph import FAR, NEAR, LabeledGraph, verify_coloring
from happy_edges.lattices import PatchParams, generate


def hexagon(labels):
    return LabeledGraph(6, [(i, (i + 1) % 6, l) for i, l in enumerate(labels)])


def hexagon_decomposition(g):
    return decomposition_from_sets(g, {0, 3}, {1, 2, 4, 5})


def test_hexagon_all_near():
    g = hexagon([NEAR] * 6)
    scheme = color_forest(g, hexagon_decomposition(g))
    assert scheme.coloring == {0: 0, 1: 1, 2: 1, 3: 0, 4: 1, 5: 1}
    assert verify_coloring(g, scheme.coloring, 1).valid


def test_hexagon_all_far():
    g = hexagon([FAR] * 6)
    scheme = color_forest(g, hexagon_decomposition(g))
    assert scheme.coloring == {0: 0, 1: 2, 2: -2, 3: 0, 4: 2, 5: -2}
    assert verify_coloring(g, scheme.coloring, 1).valid


def test_hexagon_exhaustive_labelings():
    for bits in itertools.product([NEAR, FAR], repeat=6):
        g = hexagon(list(bits))
        scheme = color_forest(g, hexagon_decomposition(g))
        report = verify_coloring(g, scheme.coloring, 1)
        assert report.valid
        assert report.range_used <= 5
        assert all(abs(c) <= 2 for c in scheme.coloring.values())


def test_degenerate_decomposition_tree_only():
    # empty white set, path as the whole forest
    g = LabeledGraph(3, [(0, 1, FAR), (1, 2, NEAR)])
    d = decomposition_from_sets(g, set(), {0, 1, 2})
    scheme = color_forest(g, d)
    assert verify_coloring(g, scheme.coloring, 1).valid


def test_decompose_requires_annotations():
    patch = generate("3^6", PatchParams(2, 2))
    with pytest.raises(ValueError):
        decompose(patch)


@pytest.mark.parametrize("name", ["6^3", "4.8^2"])
def test_random_labelings_verify(name):
    patch = generate(name, PatchParams(3, 3))
    d = decompose(patch)
    rng = random.Random(hash(name) & 0xFFFF)
    m = len(patch.graph.edges)
    for _ in range(300):
        labels = [FAR if rng.random() < rng.choice([0.2, 0.5, 0.8]) else NEAR
                  for _ in range(m)]
        g = patch.graph.with_labels(labels)
        scheme = color_forest(g, d)
        report = verify_coloring(g, scheme.coloring, 1)
        assert report.valid
        assert report.range_used <= 5
        # anchors stay 0 and no two are adjacent
        assert all(scheme.coloring[v] == 0 for v in d.independent)


@pytest.mark.parametrize("name", ["6^3", "4.8^2"])
def test_determinism(name):
    patch = generate(name, PatchParams(2, 2))
    d = decompose(patch)
    rng = random.Random(5)
    labels = [rng.choice([NEAR, FAR]) for _ in patch.graph.edges]
    g = patch.graph.with_labels(labels)
    assert color_forest(g, d) == color_forest(g, d)


from hypothesis import given, settings, strategies as st


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_any_labeling_any_annotated_patch(data):
    name = data.draw(st.sampled_from(["6^3", "4.8^2"]))
    rows = data.draw(st.integers(min_value=1, max_value=3))
    cols = data.draw(st.integers(min_value=1, max_value=3))
    patch = generate(name, PatchParams(rows, cols))
    labels = [
        data.draw(st.sampled_from([NEAR, FAR])) for _ in patch.graph.edges
    ]
    g = patch.graph.with_labels(labels)
    scheme = color_forest(g, decompose(patch))
    report = verify_coloring(g, scheme.coloring, 1)
    assert report.valid
    assert report.range_used <= 5
