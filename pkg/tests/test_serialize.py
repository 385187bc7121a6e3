import pytest

from happy_edges.graph import FAR, NEAR, LabeledGraph
from happy_edges.serialize import (
    coloring_from_dict,
    coloring_to_dict,
    dump,
    graph_from_dict,
    graph_to_dict,
    labels_from_dict,
    labels_to_dict,
    load,
)


def test_graph_round_trip():
    g = LabeledGraph(4, [(0, 1, NEAR), (1, 2, FAR), (0, 3, FAR)])
    assert graph_from_dict(graph_to_dict(g)) == g


def test_graph_ids_stable_through_files(tmp_path):
    g = LabeledGraph(3, [(2, 0, FAR), (1, 0, NEAR)])
    path = tmp_path / "g.json"
    dump(graph_to_dict(g), str(path))
    again = graph_from_dict(load(str(path)))
    assert again == g
    assert again.edges == g.edges  # canonical order survives


def test_coloring_round_trip():
    c = {0: -2, 1: 0, 2: 5}
    data = coloring_to_dict(c, t=2)
    assert data == {"colors": [-2, 0, 5], "t": 2}
    back, t = coloring_from_dict(data)
    assert back == c and t == 2


def test_coloring_requires_dense_ids():
    with pytest.raises(ValueError):
        coloring_to_dict({0: 1, 2: 2}, t=0)


def test_labels_round_trip():
    labels = [NEAR, FAR, FAR]
    assert labels_from_dict(labels_to_dict(labels)) == labels
