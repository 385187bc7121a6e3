"""(3m+2, m) colorer for the Cairo and floret pentagonal lattices.

The unique-color set (all squares' centers / hex-plus-free-triangle centers)
gets m distinct colors from {m+2 .. 2m+1}, ordered by an acyclic orientation
of the derived grid; the orientation is swept face by face so that every
matched pair's four anchors satisfy an extendibility condition.  Each matched
degree-3 pair is then finished from a fixed assignment table at threshold m.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Coloring, EdgeLabel, FAR, NEAR, verify_coloring
from . import ColoringScheme


@dataclass
class FaceConstraint:
    """Required relation between the two anchor-pair orders of one grid face.

    ``same_order`` of None means the face is unconstrained (one of its label
    pairs is uniform, so extendibility holds regardless).
    """

    same_order: bool | None
    swap12: bool
    swap34: bool


def _renames(l1: EdgeLabel, l2: EdgeLabel) -> bool:
    """True when the pair must swap so the near edge comes first."""
    return l1 == FAR and l2 == NEAR


def build_constraints(patch, labels) -> list[FaceConstraint]:
    g = patch.graph.with_labels(labels)
    ann = patch.annotations
    if ann.matching_pairs is None or ann.grid_faces is None:
        raise ValueError(f"{patch.name} carries no matched-pair annotations")
    constraints = []
    for face in ann.grid_faces:
        pair = ann.matching_pairs[face.pair_index]
        l0 = g.label_of(pair.u, pair.v)
        l1 = g.label_of(pair.u, pair.w[0])
        l2 = g.label_of(pair.u, pair.w[1])
        l3 = g.label_of(pair.v, pair.w[2])
        l4 = g.label_of(pair.v, pair.w[3])
        if l1 == l2 or l3 == l4:
            constraints.append(FaceConstraint(None, False, False))
            continue
        swap12 = _renames(l1, l2)
        swap34 = _renames(l3, l4)
        # after renaming: near edge labeled first; the orders of (w1,w2) and
        # (w3,w4) must agree exactly when the matched edge is near
        constraints.append(FaceConstraint(l0 == NEAR, swap12, swap34))
    return constraints


@dataclass
class GridOrientation:
    """Direction per oriented grid edge: direction[(a,b)]=True means a->b,
    i.e. the color of a must come out smaller than the color of b."""

    direction: dict[tuple[int, int], bool]

    def points_from_to(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        forward = self.direction[key]
        return forward if a < b else not forward

    def oriented_edges(self):
        for (a, b), forward in self.direction.items():
            yield (a, b) if forward else (b, a)


def orient_grid(grid_faces, constraints) -> GridOrientation:
    """Sweep the face list, orienting each face's outgoing edges.

    Incoming edges default to their stored direction when no earlier face
    oriented them.  The face's final corner always ends up a source or a
    sink, which is what makes the whole orientation acyclic.
    """
    direction: dict[tuple[int, int], bool] = {}

    def canon(a, b):
        return ((a, b), True) if a < b else ((b, a), False)

    def ensure(a, b):
        key, fwd = canon(a, b)
        if key not in direction:
            direction[key] = fwd  # default: as stored, "rightward/downward"

    def get(a, b) -> bool:
        key, fwd = canon(a, b)
        d = direction[key]
        return d if fwd else not d

    def put(a, b, points_a_to_b):
        key, fwd = canon(a, b)
        value = points_a_to_b if fwd else not points_a_to_b
        if key in direction and direction[key] != value:
            raise AssertionError("sweep tried to re-orient a settled edge")
        direction[key] = value

    for face, constraint in zip(grid_faces, constraints):
        inc = face.w12 if face.w12_incoming else face.w34
        out = face.w34 if face.w12_incoming else face.w12
        ensure(*face.free_in)
        ensure(*inc)
        if constraint.same_order is None:
            ensure(*out)
        else:
            inc_swap = constraint.swap12 if face.w12_incoming else constraint.swap34
            out_swap = constraint.swap34 if face.w12_incoming else constraint.swap12
            # truth value of "renamed first < renamed second" on the incoming side
            inc_rel = get(*inc) ^ inc_swap
            out_rel = inc_rel if constraint.same_order else not inc_rel
            put(out[0], out[1], out_rel ^ out_swap)
        # orient the free outgoing edge so the last corner is a source or sink
        other = out if out[0] == face.last or out[1] == face.last else inc
        into_last = get(*other) if other[1] == face.last else not get(*other)
        a, b = face.free_out
        if a == face.last:
            put(a, b, not into_last)
        else:
            put(a, b, into_last)
    return GridOrientation(direction)


def topological_order(orientation: GridOrientation, vertices) -> list[int]:
    indeg = {v: 0 for v in vertices}
    out: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in orientation.oriented_edges():
        out[a].append(b)
        indeg[b] += 1
    ready = sorted(v for v in vertices if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in sorted(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(order) != len(indeg):
        raise AssertionError("grid orientation contains a cycle")
    return order


def assign_unique_colors(orientation: GridOrientation, vertices) -> Coloring:
    """Bijection onto {m+2 .. 2m+1} along a topological order, m=|vertices|."""
    order = topological_order(orientation, vertices)
    m = len(order)
    return {v: rank + m + 2 for rank, v in enumerate(order)}


def is_extendible(labels5, w_colors) -> bool:
    """One of the three conditions that make the assignment table applicable."""
    l0, l1, l2, l3, l4 = labels5
    c1, c2, c3, c4 = w_colors
    if l1 == l2 or l3 == l4:
        return True
    if _renames(l1, l2):
        c1, c2 = c2, c1
    if _renames(l3, l4):
        c3, c4 = c4, c3
    if l0 == NEAR:
        return (c1 < c2) == (c3 < c4)
    return (c1 < c2) == (c4 < c3)


def color_gadget(labels5, w_colors, k: int) -> tuple[int, int]:
    """Colors for the matched pair (u, v) given its five edge labels and the
    four anchor colors (distinct, inside {k+2 .. 2k+1}).

    Raises on non-extendible input; the grid orientation guarantees the
    callers never produce one.
    """
    l0, l1, l2, l3, l4 = labels5
    c1, c2, c3, c4 = w_colors
    if not all(k + 2 <= c <= 2 * k + 1 for c in w_colors):
        raise ValueError("anchor colors outside {k+2 .. 2k+1}")
    if len(set(w_colors)) != 4:
        raise ValueError("anchor colors must be distinct")
    if not is_extendible(labels5, w_colors):
        raise ValueError("anchor coloring is not extendible for these labels")
    if _renames(l1, l2):
        l1, l2, c1, c2 = l2, l1, c2, c1
    if _renames(l3, l4):
        l3, l4, c3, c4 = l4, l3, c4, c3

    lam12 = c2 - k - 1 if c1 < c2 else c2 + k + 1
    lam34 = c4 - k - 1 if c3 < c4 else c4 + k + 1
    assert 1 <= lam12 <= 3 * k + 2 and 1 <= lam34 <= 3 * k + 2

    def unique_near_or_far(options, other, want_near):
        fits = [
            x for x in options if (abs(x - other) <= k) == want_near
        ]
        assert len(fits) == 1, "exactly one table alternative must work"
        return fits[0]

    near0 = l0 == NEAR
    key = (l1, l2, l3, l4)
    if key == (NEAR, NEAR, NEAR, NEAR):
        cu, cv = (k + 1, k + 1) if near0 else (k + 1, 2 * k + 2)
    elif key == (NEAR, NEAR, NEAR, FAR):
        cv = lam34
        cu = unique_near_or_far((k + 1, 2 * k + 2), cv, near0)
    elif key == (NEAR, NEAR, FAR, FAR):
        cu, cv = (k + 1, 1) if near0 else (k + 1, 3 * k + 2)
    elif key == (NEAR, FAR, NEAR, NEAR):
        cu = lam12
        cv = unique_near_or_far((k + 1, 2 * k + 2), cu, near0)
    elif key == (NEAR, FAR, NEAR, FAR):
        cu, cv = lam12, lam34
    elif key == (NEAR, FAR, FAR, FAR):
        cu = lam12
        cv = unique_near_or_far((1, 3 * k + 2), cu, near0)
    elif key == (FAR, FAR, NEAR, NEAR):
        cu, cv = (1, k + 1) if near0 else (3 * k + 2, k + 1)
    elif key == (FAR, FAR, NEAR, FAR):
        cv = lam34
        cu = unique_near_or_far((1, 3 * k + 2), cv, near0)
    elif key == (FAR, FAR, FAR, FAR):
        cu, cv = (1, 1) if near0 else (1, 3 * k + 2)
    else:
        raise ValueError(f"label pattern {key} is impossible after renaming")

    checks = [
        (l0, cu, cv), (l1, cu, c1), (l2, cu, c2), (l3, cv, c3), (l4, cv, c4),
    ]
    for label, a, b in checks:
        assert (abs(a - b) <= k) == (label == NEAR), (label, a, b, k)
    return cu, cv


def color_lattice_linear(patch, labels) -> ColoringScheme:
    if patch.name not in ("D(3^2.4.3.4)", "D(3^4.6)"):
        raise ValueError(f"linear colorer does not cover {patch.name}")
    g = patch.graph.with_labels(labels)
    ann = patch.annotations
    constraints = build_constraints(patch, labels)
    orientation = orient_grid(ann.grid_faces, constraints)
    anchors = sorted(ann.independent_set)
    colors = assign_unique_colors(orientation, anchors)
    m = len(anchors)

    for pair in ann.matching_pairs:
        labels5 = (
            g.label_of(pair.u, pair.v),
            g.label_of(pair.u, pair.w[0]),
            g.label_of(pair.u, pair.w[1]),
            g.label_of(pair.v, pair.w[2]),
            g.label_of(pair.v, pair.w[3]),
        )
        w_colors = tuple(colors[w] for w in pair.w)
        cu, cv = color_gadget(labels5, w_colors, m)
        colors[pair.u] = cu
        colors[pair.v] = cv

    report = verify_coloring(g, colors, m)
    assert report.valid, f"linear assembly failed: {report.violations[:3]}"
    return ColoringScheme(coloring=colors, t=m, r=3 * m + 2, algorithm="linear")
