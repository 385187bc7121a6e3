"""Constructive threshold-colorers for the six always-colorable lattices."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Coloring


@dataclass
class ColoringScheme:
    """Result bundle: the coloring, the threshold it verifies at, the palette
    size it fits in, and which algorithm produced it."""

    coloring: Coloring
    t: int
    r: int
    algorithm: str


from .forest import ForestDecomposition, color_forest, decompose  # noqa: E402
from .patch import color_lattice_patchwise  # noqa: E402
from .linear import color_lattice_linear  # noqa: E402


def color_patch(patch, labels) -> ColoringScheme:
    """Dispatch to the constructive colorer that covers patch's lattice."""
    if patch.name in ("6^3", "4.8^2"):
        graph = patch.graph.with_labels(labels)
        return color_forest(graph, decompose(patch))
    if patch.name in ("3.12^2", "4.6.12"):
        return color_lattice_patchwise(patch, labels)
    if patch.name in ("D(3^2.4.3.4)", "D(3^4.6)"):
        return color_lattice_linear(patch, labels)
    raise ValueError(f"no constructive colorer for {patch.name}")


def color_subpatch(patch, keep, sub_labels) -> tuple[ColoringScheme, dict]:
    """Color an induced subgraph of a generated patch.

    The cell colorers are stated for whole assembly cells, so arbitrary
    induced subgraphs are handled by lifting the labeling to the covering
    patch (absent edges default near), coloring that, and restricting;
    restriction can only remove constraints.  Returns the scheme on the
    subgraph plus the old-to-new vertex map.
    """
    from ..graph import NEAR, induced_subgraph, verify_coloring

    sub, remap = induced_subgraph(patch.graph, set(keep))
    if len(sub_labels) != len(sub.edges):
        raise ValueError("one label per subgraph edge, canonical order")
    label_by_pair = {
        (u, v): label for (u, v, _), label in zip(sub.edges, sub_labels)
    }
    lifted = []
    for u, v, _ in patch.graph.edges:
        if u in remap and v in remap:
            a, b = remap[u], remap[v]
            lifted.append(label_by_pair.get((min(a, b), max(a, b)), NEAR))
        else:
            lifted.append(NEAR)
    full = color_patch(patch, lifted)
    restricted = {remap[v]: full.coloring[v] for v in keep}
    labeled = sub.with_labels(sub_labels)
    assert verify_coloring(labeled, restricted, full.t).valid
    return (
        ColoringScheme(
            coloring=restricted, t=full.t, r=full.r, algorithm=full.algorithm
        ),
        remap,
    )


__all__ = [
    "ColoringScheme",
    "ForestDecomposition",
    "color_forest",
    "color_lattice_linear",
    "color_lattice_patchwise",
    "color_patch",
    "color_subpatch",
    "decompose",
]
