"""Finite lattice patches with render coordinates and structural annotations.

``generate`` is deterministic: identical parameters give identical patches,
and growing the window keeps the shared part intact (the key list published
on the patch gives the id remap between window sizes).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from . import lattice_defs
from .graph import LabeledGraph, NEAR

LATTICE_NAMES = list(lattice_defs.BUILDERS)


@dataclass
class PatchParams:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be >= 1")


@dataclass
class PatchCell:
    """Role assignment of one assembly cell: anchors u (may contain None at
    window boundaries) and chain vertices v, by id."""

    cell: tuple[int, int]
    u: list
    v: list


@dataclass
class MatchingPair:
    """A matched degree-3 pair (u,v) with its four unique-color neighbors.

    Edge roles: e0=(u,v), e1=(u,w1), e2=(u,w2), e3=(v,w3), e4=(v,w4).  The
    near/far renaming demanded by the gadget table happens at coloring time,
    not here.
    """

    u: int
    v: int
    w: tuple[int, int, int, int]


@dataclass
class GridFace:
    """One quadrilateral face of the derived grid, prepared for the sweep.

    ``w12``/``w34`` are the two constrained opposite sides, stored in
    matching-pair w-order; ``w12_incoming`` says which of them is already
    oriented when the sweep reaches this face.  ``last`` is the corner that
    must end up a source or sink.
    """

    pair_index: int
    w12: tuple[int, int]
    w34: tuple[int, int]
    free_in: tuple[int, int]
    free_out: tuple[int, int]
    w12_incoming: bool
    last: int


@dataclass
class StructuralAnnotations:
    independent_set: set[int] | None = None
    forest_vertices: set[int] | None = None
    patch_cells: list[PatchCell] | None = None
    matching_pairs: list[MatchingPair] | None = None
    grid_faces: list[GridFace] | None = None


@dataclass
class LatticePatch:
    name: str
    params: PatchParams
    graph: LabeledGraph
    coords: list[tuple[float, float]]
    annotations: StructuralAnnotations
    keys: list = field(repr=False, default_factory=list)
    faces: list | None = field(repr=False, default=None)

    def key_to_id(self) -> dict:
        return {k: i for i, k in enumerate(self.keys)}


def generate(name: str, params: PatchParams) -> LatticePatch:
    """Build a rows x cols window of the named lattice.

    All edges start NEAR; labelings are applied per use (puzzles, colorers,
    tests) via ``graph.with_labels``.
    """
    if name not in lattice_defs.BUILDERS:
        raise ValueError(f"unknown lattice {name!r}")
    raw = lattice_defs.BUILDERS[name](params.rows, params.cols)

    order = sorted(
        raw.positions,
        key=lambda k: (round(raw.positions[k][1], 6), round(raw.positions[k][0], 6), k),
    )
    index = {k: i for i, k in enumerate(order)}
    edges = [(index[a], index[b], NEAR) for a, b in raw.edges]
    graph = LabeledGraph(len(order), edges)
    coords = [raw.positions[k] for k in order]

    ann = StructuralAnnotations()
    if raw.independent is not None:
        ann.independent_set = {index[k] for k in raw.independent}
    if raw.forest is not None:
        ann.forest_vertices = {index[k] for k in raw.forest}
    if raw.cells is not None:
        ann.patch_cells = [
            PatchCell(
                cell=c.cell,
                u=[index[k] if k is not None else None for k in c.u_keys],
                v=[index[k] for k in c.v_keys],
            )
            for c in raw.cells
        ]
    if raw.pairs is not None:
        ann.matching_pairs = [
            MatchingPair(u=index[p.u], v=index[p.v], w=tuple(index[k] for k in p.w))
            for p in raw.pairs
        ]
        ann.grid_faces = _derive_grid_faces(ann.matching_pairs, coords)
    faces = None
    if raw.faces is not None:
        faces = [tuple(index[k] for k in face) for face in raw.faces]
    return LatticePatch(
        name=name,
        params=params,
        graph=graph,
        coords=coords,
        annotations=ann,
        keys=order,
        faces=faces,
    )


# The sweep direction for derived-grid faces: mostly downward, slightly
# rightward, so no two face centers or face corners project equally.
_SWEEP = (0.12345678, -1.0)


def _derive_grid_faces(pairs: list[MatchingPair], coords) -> list[GridFace]:
    """Prepare the quadrilateral faces of the derived grid for the sweep.

    Each matched pair's four anchors, in cyclic order, form one parallelogram
    face of the grid.  A side counts as outgoing when its outward normal
    points along the sweep direction; the two outgoing sides of a
    parallelogram are adjacent, and their shared corner becomes the forced
    source-or-sink.  Every degree-3 grid vertex sits at obtuse face corners,
    which is what makes the forced corners break all directed cycles.
    Faces are ordered by topologically sorting "outgoing side leads to the
    face across it", so incoming sides are always oriented first.
    """
    dx, dy = _SWEEP

    def area2(cycle):
        total = 0.0
        for i in range(4):
            x1, y1 = coords[cycle[i]]
            x2, y2 = coords[cycle[(i + 1) % 4]]
            total += x1 * y2 - x2 * y1
        return total

    faces = []
    side_users: dict[frozenset, list[tuple[int, bool]]] = {}
    for idx, pair in enumerate(pairs):
        cycle = list(pair.w)
        ccw = area2(cycle) > 0
        sides = [
            (cycle[0], cycle[1]), (cycle[1], cycle[2]),
            (cycle[2], cycle[3]), (cycle[3], cycle[0]),
        ]
        outgoing = []
        for p, q in sides:
            tx = coords[q][0] - coords[p][0]
            ty = coords[q][1] - coords[p][1]
            nx, ny = (ty, -tx) if ccw else (-ty, tx)  # outward normal
            dot = nx * dx + ny * dy
            assert abs(dot) > 1e-9, "sweep direction parallel to a grid side"
            outgoing.append(dot > 0)
        out_idx = [i for i, flag in enumerate(outgoing) if flag]
        assert len(out_idx) == 2 and (0 in out_idx) != (2 in out_idx)
        corner_count: dict[int, int] = {}
        for i in out_idx:
            for v in sides[i]:
                corner_count[v] = corner_count.get(v, 0) + 1
        (last,) = [v for v, n in corner_count.items() if n == 2]
        faces.append(
            GridFace(
                pair_index=idx,
                w12=sides[0],
                w34=sides[2],
                free_in=sides[3] if outgoing[1] else sides[1],
                free_out=sides[1] if outgoing[1] else sides[3],
                w12_incoming=not outgoing[0],
                last=last,
            )
        )
        for i, side in enumerate(sides):
            side_users.setdefault(frozenset(side), []).append((idx, outgoing[i]))

    after: dict[int, list[int]] = {i: [] for i in range(len(faces))}
    indeg = [0] * len(faces)
    for users in side_users.values():
        if len(users) == 2:
            (fa, outa), (fb, outb) = users
            assert outa != outb, "shared side must be out for exactly one face"
            src, dst = (fa, fb) if outa else (fb, fa)
            after[src].append(dst)
            indeg[dst] += 1
    ready = sorted(i for i in range(len(faces)) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in after[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    assert len(order) == len(faces), "grid face dependencies contain a cycle"
    return [faces[i] for i in order]


# -- species -----------------------------------------------------------------


def _rotation(patch: LatticePatch, v: int) -> list[int]:
    cx, cy = patch.coords[v]
    nbrs = [w for w, _ in patch.graph.neighbors(v)]
    return sorted(
        nbrs, key=lambda w: math.atan2(patch.coords[w][1] - cy, patch.coords[w][0] - cx)
    )


def _trace_face(patch: LatticePatch, start_u: int, start_v: int, cap=64):
    """Walk the face left of the directed edge (u -> v); None when the walk
    leaves plausibility (too long for any tile face)."""
    cycle = [start_u]
    u, v = start_u, start_v
    while len(cycle) <= cap:
        cycle.append(v)
        rot = _rotation(patch, v)
        i = rot.index(u)
        u, v = v, rot[(i - 1) % len(rot)]
        if (u, v) == (start_u, start_v):
            return cycle[:-1] if cycle[-1] == start_u else cycle
        if u == start_u and v == start_v:
            return cycle
    return None


def _signed_area(patch: LatticePatch, cycle) -> float:
    total = 0.0
    for idx in range(len(cycle)):
        x1, y1 = patch.coords[cycle[idx]]
        x2, y2 = patch.coords[cycle[(idx + 1) % len(cycle)]]
        total += x1 * y2 - x2 * y1
    return total / 2.0


def species_of(patch: LatticePatch, v: int):
    """Face-degree sequence around v (clockwise up to direction), or
    "boundary" when v's face fan is incomplete."""
    deg = patch.graph.degree(v)
    if deg < 2:
        return "boundary"
    rot = _rotation(patch, v)
    sizes = []
    for w in rot:
        cycle = _trace_face(patch, v, w)
        if cycle is None or len(cycle) < 3:
            return "boundary"
        if _signed_area(patch, cycle) <= 0:
            return "boundary"
        if v not in cycle:
            return "boundary"
        sizes.append(len(cycle))
    return tuple(sizes)


def canonical_species(seq) -> tuple:
    """Smallest rotation of seq or its reversal; species comparisons are
    rotation- and reflection-invariant."""
    seq = tuple(seq)
    candidates = []
    for s in (seq, seq[::-1]):
        candidates.extend(s[i:] + s[:i] for i in range(len(s)))
    return min(candidates)


def expected_species(name: str) -> list[tuple]:
    return [canonical_species(s) for s in lattice_defs.SPECIES[name]]


# -- annotation validation ---------------------------------------------------


@dataclass
class AnnotationReport:
    valid: bool
    problems: list[str]


def _within_distance_2(graph: LabeledGraph, source: int, targets: set[int]):
    seen = {source}
    frontier = deque([(source, 0)])
    hits = []
    while frontier:
        node, d = frontier.popleft()
        if d == 2:
            continue
        for w, _ in graph.neighbors(node):
            if w not in seen:
                seen.add(w)
                if w in targets:
                    hits.append(w)
                frontier.append((w, d + 1))
    return hits


def _acyclic(graph: LabeledGraph, vertices: set[int]) -> bool:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in graph.edges:
        if u in vertices and v in vertices:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def validate_annotations(patch: LatticePatch) -> AnnotationReport:
    problems = []
    g = patch.graph
    ann = patch.annotations

    if ann.independent_set is not None and ann.forest_vertices is not None:
        I, T = ann.independent_set, ann.forest_vertices
        if I & T:
            problems.append("independent and forest sets overlap")
        if I | T != set(range(g.vertex_count)):
            problems.append("independent + forest sets do not cover the patch")
        for v in sorted(I):
            hits = _within_distance_2(g, v, I - {v})
            if hits:
                problems.append(f"vertices {v} and {hits[0]} are within distance 2")
        if not _acyclic(g, T):
            problems.append("forest set induces a cycle")
        for v in sorted(T):
            anchors = [w for w, _ in g.neighbors(v) if w in I]
            if len(anchors) > 1:
                problems.append(f"vertex {v} has {len(anchors)} anchors")

    if ann.matching_pairs is not None:
        I = ann.independent_set or set()
        for u, v, _ in g.edges:
            if u in I and v in I:
                problems.append(f"independent set contains edge ({u},{v})")
        used = set()
        matched = set()
        for idx, pair in enumerate(ann.matching_pairs):
            if pair.u in used or pair.v in used:
                problems.append(f"pair {idx} reuses a matched vertex")
            used.update((pair.u, pair.v))
            matched.update((pair.u, pair.v))
            if len(set(pair.w)) != 4:
                problems.append(f"pair {idx} has repeated anchors")
            if any(w not in I for w in pair.w):
                problems.append(f"pair {idx} anchor outside the unique-color set")
            wanted = [
                (pair.u, pair.v),
                (pair.u, pair.w[0]), (pair.u, pair.w[1]),
                (pair.v, pair.w[2]), (pair.v, pair.w[3]),
            ]
            for a, b in wanted:
                if not g.has_edge(a, b):
                    problems.append(f"pair {idx} missing edge ({a},{b})")
        leftovers = set(range(g.vertex_count)) - I - matched
        if leftovers:
            problems.append(f"{len(leftovers)} vertices neither unique-colored nor matched")

    if ann.grid_faces is not None:
        for idx, face in enumerate(ann.grid_faces):
            pair = ann.matching_pairs[face.pair_index]
            if set(face.w12) != {pair.w[0], pair.w[1]}:
                problems.append(f"grid face {idx} w12 mismatch")
            if set(face.w34) != {pair.w[2], pair.w[3]}:
                problems.append(f"grid face {idx} w34 mismatch")
            corners = set(face.w12) | set(face.w34)
            if len(corners) != 4:
                problems.append(f"grid face {idx} corner collision")
            if face.last not in corners:
                problems.append(f"grid face {idx} sink corner not on the face")

    if ann.patch_cells is not None:
        covered = set()
        for cell in ann.patch_cells:
            covered.update(x for x in cell.u if x is not None)
            covered.update(cell.v)
            vs = cell.v
            if patch.name == "3.12^2":
                u0, u1 = cell.u
                wanted = [
                    (vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2]), (u0, vs[1]),
                    (vs[2], vs[3]), (u1, vs[3]), (u1, vs[4]), (vs[3], vs[4]),
                    (vs[4], vs[5]),
                ]
            else:
                u0, u1, u2, u3, u4 = cell.u
                wanted = [
                    (vs[0], vs[1]), (vs[1], vs[2]), (vs[1], vs[3]), (vs[3], vs[4]),
                    (vs[3], vs[6]), (vs[4], vs[5]), (vs[5], vs[6]), (vs[6], vs[7]),
                    (vs[7], vs[8]), (vs[2], vs[8]), (vs[7], vs[9]), (vs[9], vs[10]),
                    (u0, vs[0]), (u0, vs[2]), (u1, vs[8]), (u1, vs[9]),
                    (u2, vs[5]), (u3, vs[4]),
                ]
                if u4 is not None:
                    wanted.append((u4, vs[10]))
            for a, b in wanted:
                if not g.has_edge(a, b):
                    problems.append(f"cell {cell.cell} missing edge ({a},{b})")
        if covered != set(range(g.vertex_count)):
            problems.append("assembly cells do not cover every vertex")

    return AnnotationReport(valid=not problems, problems=problems)


# -- colorability summary (served by the API) --------------------------------

#: status: total-colorable lattices carry their constructive (r, t); the two
#: linear ones state the size-dependent formula instead of numbers.
LATTICE_INFO = {
    "6^3": {"status": "total-colorable", "r": 5, "t": 1},
    "4.8^2": {"status": "total-colorable", "r": 5, "t": 1},
    "3.12^2": {"status": "total-colorable", "r": 9, "t": 2},
    "4.6.12": {"status": "total-colorable", "r": 9, "t": 2},
    "D(3^2.4.3.4)": {
        "status": "total-colorable", "r": None, "t": None, "note": "(3m+2, m)"
    },
    "D(3^4.6)": {
        "status": "total-colorable", "r": None, "t": None, "note": "(3m+2, m)"
    },
    "3^6": {"status": "non-colorable", "r": None, "t": None},
    "3^4.6": {"status": "non-colorable", "r": None, "t": None},
    "3^3.4^2": {"status": "non-colorable", "r": None, "t": None},
    "3^2.4.3.4": {"status": "non-colorable", "r": None, "t": None},
    "D(3.12^2)": {"status": "non-colorable", "r": None, "t": None},
    "D(4.6.12)": {"status": "non-colorable", "r": None, "t": None},
    "D(4.8^2)": {"status": "non-colorable", "r": None, "t": None},
    "4^4": {"status": "unbounded", "r": None, "t": None},
    "D(3.4.6.4)": {"status": "unbounded", "r": None, "t": None},
    "D(3.6.3.6)": {"status": "unbounded", "r": None, "t": None},
    "3.4.6.4": {"status": "open", "r": None, "t": None},
    "3.6.3.6": {"status": "open", "r": None, "t": None},
    "D(3^3.4^2)": {"status": "open", "r": None, "t": None},
}

#: The six lattices whose puzzles are backed by a constructive colorer.
CONSTRUCTIVE = [
    "6^3", "4.8^2", "3.12^2", "4.6.12", "D(3^2.4.3.4)", "D(3^4.6)",
]
