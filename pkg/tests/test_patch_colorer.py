import itertools
import random

import pytest

from happy_edges.coloring import color_lattice_patchwise
from happy_edges.coloring.patch import (
    NINE_COLORS,
    choose_middle,
    color_tridodec_cell,
)
from happy_edges.graph import FAR, NEAR, edge_satisfied, verify_coloring
from happy_edges.lattices import PatchParams, generate


def test_choose_middle_examples():
    assert choose_middle(0, 1, NEAR, NEAR, "a") == 2
    assert choose_middle(0, 1, FAR, FAR, "a") == -3
    assert choose_middle(1, -3, FAR, NEAR, "c") == -4


def test_choose_middle_rejects_bad_hypotheses():
    with pytest.raises(ValueError):
        choose_middle(1, 1, NEAR, NEAR, "a")  # start must be 0
    with pytest.raises(ValueError):
        choose_middle(0, 1, NEAR, NEAR, "b")  # end magnitude must be >= 2
    with pytest.raises(ValueError):
        choose_middle(0, 4, NEAR, NEAR, "c")  # end magnitude must be <= 3


@pytest.mark.parametrize("case,starts,ends", [
    ("a", [0], [1, -1, 2, -2, 3, -3, 4, -4]),
    ("b", [0], [2, -2, 3, -3, 4, -4]),
    ("c", [1, -1], [2, -2, 3, -3]),
])
def test_choose_middle_total_over_hypotheses(case, starts, ends):
    targets = {"a": (2, 3), "b": (2, 4), "c": (1, 4)}[case]
    for c0 in starts:
        for c2 in ends:
            for l01 in (NEAR, FAR):
                for l12 in (NEAR, FAR):
                    v = choose_middle(c0, c2, l01, l12, case)
                    assert abs(v) in targets
                    assert edge_satisfied(l01, c0, v, 2)
                    assert edge_satisfied(l12, v, c2, 2)


def test_tridodec_cell_exhaustive():
    """Every labeling of the 9 cell edges extends, for both entry colors."""
    patch = generate("3.12^2", PatchParams(1, 1))
    (cell,) = patch.annotations.patch_cells
    m = len(patch.graph.edges)
    assert m == 9
    for bits in itertools.product([NEAR, FAR], repeat=m):
        g = patch.graph.with_labels(list(bits))
        for start in (1, -1):
            colors = {cell.u[0]: 0, cell.u[1]: 0}
            handoff = color_tridodec_cell(g, cell, colors, start)
            assert handoff in (1, -1)
            assert all(c in NINE_COLORS for c in colors.values())
            report = verify_coloring(g, colors, 2)
            assert report.valid


def test_sqhexdodec_cell_random():
    patch = generate("4.6.12", PatchParams(1, 1))
    rng = random.Random(99)
    m = len(patch.graph.edges)
    for _ in range(4000):
        labels = [rng.choice([NEAR, FAR]) for _ in range(m)]
        scheme = color_lattice_patchwise(patch, labels)
        g = patch.graph.with_labels(labels)
        report = verify_coloring(g, scheme.coloring, 2)
        assert report.valid
        assert all(c in NINE_COLORS for c in scheme.coloring.values())
        handoff = scheme.coloring[patch.annotations.patch_cells[0].v[10]]
        assert abs(handoff) in (2, 4)


@pytest.mark.parametrize("name,rows,cols,n", [
    ("3.12^2", 2, 3, 300), ("4.6.12", 2, 2, 300),
])
def test_assembly_random_labelings(name, rows, cols, n):
    patch = generate(name, PatchParams(rows, cols))
    rng = random.Random(2024)
    m = len(patch.graph.edges)
    for _ in range(n):
        labels = [FAR if rng.random() < rng.choice([0.25, 0.5, 0.75]) else NEAR
                  for _ in range(m)]
        scheme = color_lattice_patchwise(patch, labels)
        g = patch.graph.with_labels(labels)
        report = verify_coloring(g, scheme.coloring, 2)
        assert report.valid
        assert report.range_used <= 9
        # anchors all zero
        for cell in patch.annotations.patch_cells:
            assert all(scheme.coloring[u] == 0 for u in cell.u if u is not None)


def test_chain_handoff_contract():
    """The color handed across cells always lands in the next admissible set."""
    patch = generate("3.12^2", PatchParams(1, 4))
    rng = random.Random(7)
    for _ in range(200):
        labels = [rng.choice([NEAR, FAR]) for _ in patch.graph.edges]
        scheme = color_lattice_patchwise(patch, labels)
        for cell in patch.annotations.patch_cells:
            assert scheme.coloring[cell.v[0]] in (1, -1)
            assert scheme.coloring[cell.v[5]] in (1, -1)


def test_restriction_of_assembly_stays_valid():
    from happy_edges.graph import induced_subgraph

    patch = generate("3.12^2", PatchParams(2, 2))
    rng = random.Random(3)
    labels = [rng.choice([NEAR, FAR]) for _ in patch.graph.edges]
    scheme = color_lattice_patchwise(patch, labels)
    g = patch.graph.with_labels(labels)
    keep = set(range(0, g.vertex_count, 2)) | {1, 3}
    sub, remap = induced_subgraph(g, keep)
    restricted = {remap[v]: scheme.coloring[v] for v in keep}
    assert verify_coloring(sub, restricted, 2).valid


def test_color_subpatch_embeds_and_restricts():
    import random

    from happy_edges.coloring import color_subpatch
    from happy_edges.graph import induced_subgraph

    rng = random.Random(17)
    for name, rc in [("3.12^2", (2, 2)), ("4.6.12", (1, 2)), ("6^3", (3, 3))]:
        patch = generate(name, PatchParams(*rc))
        n = patch.graph.vertex_count
        keep = set(rng.sample(range(n), (2 * n) // 3))
        sub, _ = induced_subgraph(patch.graph, keep)
        sub_labels = [rng.choice([NEAR, FAR]) for _ in sub.edges]
        scheme, remap = color_subpatch(patch, keep, sub_labels)
        labeled = sub.with_labels(sub_labels)
        assert verify_coloring(labeled, scheme.coloring, scheme.t).valid
        assert set(scheme.coloring) == set(remap[v] for v in keep)
