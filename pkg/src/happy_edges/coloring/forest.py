"""(5,1) colorer for graphs that split into a 2-independent set and a forest.

The white set gets color 0.  Each forest component is rooted and walked
breadth-first; a vertex picks its magnitude (1 or 2) from the label of its
edge to the white set, and its sign so the edge to its already-colored tree
parent holds.  Works for every labeling, which is exactly why the hexagon
and truncated-square lattices make safe puzzle boards.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..graph import Coloring, FAR, LabeledGraph, edge_satisfied
from . import ColoringScheme


@dataclass
class ForestDecomposition:
    independent: set[int]
    forest: set[int]
    components: list[tuple[int, list[int]]]  # (root, BFS order)


def decompose(patch) -> ForestDecomposition:
    """Read the generator's white/forest annotation off a lattice patch."""
    ann = patch.annotations
    if ann.independent_set is None or ann.forest_vertices is None:
        raise ValueError(f"{patch.name} carries no forest decomposition")
    return decomposition_from_sets(patch.graph, ann.independent_set, ann.forest_vertices)


def decomposition_from_sets(
    g: LabeledGraph, independent: set[int], forest: set[int]
) -> ForestDecomposition:
    if independent & forest:
        raise ValueError("white and forest sets overlap")
    if independent | forest != set(range(g.vertex_count)):
        raise ValueError("white and forest sets must cover the graph")
    seen = set()
    components = []
    for root in sorted(forest):
        if root in seen:
            continue
        order = []
        queue = deque([root])
        seen.add(root)
        while queue:
            v = queue.popleft()
            order.append(v)
            for w, _ in g.neighbors(v):
                if w in forest and w not in seen:
                    seen.add(w)
                    queue.append(w)
        components.append((root, order))
    return ForestDecomposition(set(independent), set(forest), components)


def color_forest(g: LabeledGraph, d: ForestDecomposition) -> ColoringScheme:
    """Color g with threshold 1 and palette {-2..2} for its current labels."""
    colors: Coloring = {v: 0 for v in d.independent}
    for root, order in d.components:
        parent: dict[int, int] = {}
        for v in order:
            anchor = None
            for w, label in g.neighbors(v):
                if w in d.independent:
                    if anchor is not None:
                        raise ValueError(f"vertex {v} touches the white set twice")
                    anchor = (w, label)
            magnitude = 2 if anchor is not None and anchor[1] == FAR else 1
            if v == root:
                colors[v] = magnitude
            else:
                p = parent[v]
                label = g.label_of(v, p)
                value = magnitude
                if not edge_satisfied(label, value, colors[p], 1):
                    value = -magnitude
                # parent colors live in {+-1, +-2}, so one sign always works
                assert edge_satisfied(label, value, colors[p], 1)
                colors[v] = value
            for w, _ in g.neighbors(v):
                if w in d.forest and w not in parent and w != root:
                    parent.setdefault(w, v)
    return ColoringScheme(coloring=colors, t=1, r=5, algorithm="forest")
