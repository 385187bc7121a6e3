"""(9,2) colorers for the two dodecagon lattices.

Both work cell by cell along a row: the anchors (square-marked vertices) are
fixed at 0, a start vertex seeds the chain, and each later vertex is chosen
by a middle-of-a-path rule inside the nine-color palette {0, +-1 .. +-4}.
Rows meet only at anchors, so coloring rows independently colors the patch.
"""

from __future__ import annotations

from ..graph import Coloring, EdgeLabel, FAR, NEAR, edge_satisfied, verify_coloring
from . import ColoringScheme

NINE_COLORS = (0, 1, -1, 2, -2, 3, -3, 4, -4)

_CASE_TARGETS = {
    "a": (2, 3),  # start 0, far end anywhere nonzero  -> |result| in {2,3}
    "b": (2, 4),  # start 0, far end magnitude >= 2    -> {2,4}
    "c": (1, 4),  # start +-1, far end magnitude 2..3  -> {1,4}
}


def choose_middle(c0: int, c2: int, l01: EdgeLabel, l12: EdgeLabel, case: str) -> int:
    """Color the middle vertex of a path (v0, v1, v2) at threshold 2.

    The magnitude comes from the label toward v0 (near takes the small
    option), the sign agrees with c2 exactly when v1 is near to v2.
    """
    near_mag, far_mag = _CASE_TARGETS[case]
    if case == "a" and not (c0 == 0 and 1 <= abs(c2) <= 4):
        raise ValueError(f"case a needs c0=0 and c2 in +-1..4, got {c0}, {c2}")
    if case == "b" and not (c0 == 0 and 2 <= abs(c2) <= 4):
        raise ValueError(f"case b needs c0=0 and c2 in +-2..4, got {c0}, {c2}")
    if case == "c" and not (abs(c0) == 1 and 2 <= abs(c2) <= 3):
        raise ValueError(f"case c needs c0=+-1 and c2 in +-2..3, got {c0}, {c2}")
    magnitude = near_mag if l01 == NEAR else far_mag
    sign = 1 if c2 > 0 else -1
    if l12 == FAR:
        sign = -sign
    value = sign * magnitude
    assert edge_satisfied(l01, c0, value, 2) and edge_satisfied(l12, value, c2, 2)
    return value


def _pick(options, constraints):
    """First palette value satisfying every (label, other_color) pair at t=2."""
    for value in options:
        if all(edge_satisfied(l, value, c, 2) for l, c in constraints):
            return value
    raise AssertionError(f"no color in {options} fits {constraints}")


# -- (3,12^2) ---------------------------------------------------------------

# valid colors for the table vertex, keyed by (start color, l(v0,v1), l(v1,v3));
# None marks combinations resolved by negating the already-colored tail
_BRIDGE_TABLE = {
    (1, NEAR, FAR): (4,),
    (1, NEAR, NEAR): (2,),
    (1, FAR, NEAR): None,
    (1, FAR, FAR): (-4, -2),
    (-1, NEAR, FAR): (2, 4),
    (-1, NEAR, NEAR): None,
    (-1, FAR, NEAR): (-2,),
    (-1, FAR, FAR): (-4,),
    (4, NEAR, FAR): None,
    (4, NEAR, NEAR): (2, 4),
    (4, FAR, NEAR): None,
    (4, FAR, FAR): (-4, -2),
    (-4, NEAR, FAR): (2, 4),
    (-4, NEAR, NEAR): None,
    (-4, FAR, NEAR): (-4, -2),
    (-4, FAR, FAR): None,
}


def color_tridodec_cell(g, cell, colors: Coloring, start: int) -> int:
    """Extend colors over one 8-vertex cell; returns the handoff color.

    Anchors must already be 0 and the chain entry v0 colored ``start`` in
    {+1,-1}; every cell edge verifies at threshold 2 afterwards.
    """
    if start not in (1, -1):
        raise ValueError("chain entry color must be +1 or -1")
    u0, u1 = cell.u
    v = cell.v
    lab = g.label_of
    colors[v[0]] = start
    colors[v[1]] = choose_middle(0, colors[v[0]], lab(u0, v[1]), lab(v[1], v[0]), "a")
    colors[v[2]] = choose_middle(
        colors[v[0]], colors[v[1]], lab(v[0], v[2]), lab(v[2], v[1]), "c"
    )
    colors[v[3]] = choose_middle(0, colors[v[2]], lab(u1, v[3]), lab(v[3], v[2]), "a")
    colors[v[4]] = choose_middle(0, colors[v[3]], lab(u1, v[4]), lab(v[4], v[3]), "a")
    colors[v[5]] = _pick((1, -1), [(lab(v[4], v[5]), colors[v[4]])])
    return colors[v[5]]


# -- (4,6,12) ---------------------------------------------------------------


def color_sqhexdodec_cell(g, cell, colors: Coloring, start: int) -> int:
    """Extend colors over one 16-vertex cell; returns the handoff color in
    {+-2, +-4}.  The negative-start case is handled by symmetry: color the
    mirror and negate."""
    if abs(start) not in (2, 4):
        raise ValueError("chain entry color must be in +-2, +-4")
    if start < 0:
        flipped = dict(colors)
        handoff = _sqhexdodec_positive(g, cell, flipped, -start, negate=True)
        for vid in [x for x in cell.u if x is not None] + cell.v:
            colors[vid] = flipped[vid]
        return handoff
    return _sqhexdodec_positive(g, cell, colors, start, negate=False)


def _sqhexdodec_positive(g, cell, colors, start, negate):
    u0, u1, u2, u3, u4 = cell.u
    v = cell.v
    lab = g.label_of
    colors[v[0]] = start
    colors[v[6]] = 1
    colors[v[5]] = choose_middle(0, colors[v[6]], lab(u2, v[5]), lab(v[5], v[6]), "a")
    colors[v[4]] = choose_middle(0, colors[v[5]], lab(u3, v[4]), lab(v[4], v[5]), "a")
    colors[v[3]] = choose_middle(
        colors[v[6]], colors[v[4]], lab(v[6], v[3]), lab(v[3], v[4]), "c"
    )

    entry = _BRIDGE_TABLE[(colors[v[3]], lab(v[0], v[1]), lab(v[1], v[3]))]
    if entry is None:
        for vid in (v[3], v[4], v[5], v[6]):
            colors[vid] = -colors[vid]
        entry = _BRIDGE_TABLE[(colors[v[3]], lab(v[0], v[1]), lab(v[1], v[3]))]
    colors[v[1]] = _pick(entry, [(lab(v[0], v[1]), colors[v[0]]),
                                 (lab(v[1], v[3]), colors[v[3]])])

    colors[v[2]] = choose_middle(0, colors[v[1]], lab(u0, v[2]), lab(v[2], v[1]), "a")
    colors[v[8]] = choose_middle(0, colors[v[2]], lab(u1, v[8]), lab(v[8], v[2]), "a")
    colors[v[7]] = choose_middle(
        colors[v[6]], colors[v[8]], lab(v[6], v[7]), lab(v[7], v[8]), "c"
    )
    colors[v[9]] = choose_middle(0, colors[v[7]], lab(u1, v[9]), lab(v[9], v[7]), "a")
    constraints = [(lab(v[9], v[10]), colors[v[9]])]
    if u4 is not None:
        constraints.append((lab(u4, v[10]), 0))
    colors[v[10]] = _pick((2, -2, 4, -4), constraints)

    if negate:
        for vid in v:
            colors[vid] = -colors[vid]
    return colors[v[10]]


def color_lattice_patchwise(patch, labels) -> ColoringScheme:
    """Assemble the per-cell colorings over a whole patch."""
    if patch.name not in ("3.12^2", "4.6.12"):
        raise ValueError(f"patchwise colorer does not cover {patch.name}")
    cells = patch.annotations.patch_cells
    if not cells:
        raise ValueError("patch carries no assembly cells")
    g = patch.graph.with_labels(labels)
    colors: Coloring = {}
    for cell in cells:
        for u in cell.u:
            if u is not None:
                colors[u] = 0

    rows: dict[int, list] = {}
    for cell in cells:
        rows.setdefault(cell.cell[0], []).append(cell)

    if patch.name == "3.12^2":
        for _, row in sorted(rows.items()):
            handoff = 1
            for cell in sorted(row, key=lambda c: c.cell[1]):
                handoff = color_tridodec_cell(g, cell, colors, handoff)
    else:
        for _, row in sorted(rows.items()):
            handoff = None
            for cell in sorted(row, key=lambda c: c.cell[1], reverse=True):
                if handoff is None:
                    # chain start: magnitude from the anchor edge, positive sign
                    u0 = cell.u[0]
                    v0 = cell.v[0]
                    handoff = 2 if g.label_of(u0, v0) == NEAR else 4
                handoff = color_sqhexdodec_cell(g, cell, colors, handoff)

    report = verify_coloring(g, colors, 2)
    assert report.valid, f"cell assembly failed: {report.violations[:3]}"
    return ColoringScheme(coloring=colors, t=2, r=9, algorithm="patch")
