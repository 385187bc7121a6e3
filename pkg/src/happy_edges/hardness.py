"""Witnesses of non-colorability: fixed gadgets and growing spirals.

The five gadgets are labeled subgraphs of their lattices that admit no
threshold-coloring at any threshold.  Two have short hand derivations (the
double-apex triangle and the outer-far K4); the other three were found by
searching small lattice windows for labelings whose order constraints
collapse, then minimizing (scripts/find_gadgets.py).  Every gadget is
validated two independent ways in the test suite: exhaustive solver search
at bounded palette sizes, and subgraph embedding into a generated patch of
the named lattice.

The spirals are labeled subgraphs whose minimum color count grows without
bound: a square-grid spiral path, and spiral-shaped near-subgraphs of the
two Laves lattices whose faces each carry exactly two near edges.
"""

from __future__ import annotations

import itertools
import math

from .graph import FAR, NEAR, EdgeLabel, LabeledGraph
from .lattices import PatchParams, generate

GADGET_NAMES = ("fig6a", "fig6b", "fig6c", "fig6d", "fig6e")

#: Lattices each gadget embeds into (and thereby proves non-colorable).
GADGET_HOSTS = {
    "fig6a": ["3^6", "3^4.6"],
    "fig6b": ["3^3.4^2"],
    "fig6c": ["3^2.4.3.4"],
    "fig6d": ["D(3.12^2)"],
    "fig6e": ["D(4.6.12)", "D(4.8^2)"],
}

_GADGETS = {
    # far triangle; every side bridged by a near path through an apex
    "fig6a": (
        6,
        [
            (0, 1, "F"), (1, 2, "F"), (0, 2, "F"),
            (3, 0, "N"), (3, 1, "N"),
            (4, 1, "N"), (4, 2, "N"),
            (5, 0, "N"), (5, 2, "N"),
        ],
    ),
    # reconstructed: one square-and-triangle row of the elongated
    # triangular lattice, minimized to 8 vertices
    "fig6b": (
        8,
        [
            (0, 1, "N"), (0, 3, "N"), (1, 2, "N"), (1, 4, "F"),
            (2, 5, "N"), (3, 4, "F"), (3, 6, "N"), (4, 5, "F"),
            (4, 6, "N"), (4, 7, "N"), (5, 7, "N"), (6, 7, "F"),
        ],
    ),
    # reconstructed: snub-square window minimized to 11 vertices, with a
    # symbolic difference-bound proof that no threshold works
    "fig6c": (
        11,
        [
            (0, 1, "N"), (0, 3, "N"), (1, 2, "N"), (1, 4, "F"),
            (2, 4, "F"), (2, 5, "N"), (3, 4, "F"), (3, 6, "N"),
            (4, 6, "N"), (4, 7, "N"), (5, 7, "N"), (5, 8, "F"),
            (6, 7, "F"), (6, 9, "N"), (7, 8, "N"), (7, 10, "F"),
            (8, 10, "N"), (9, 10, "N"),
        ],
    ),
    # K4 with the outer triangle far and the spokes near
    "fig6d": (
        4,
        [
            (0, 1, "F"), (1, 2, "F"), (0, 2, "F"),
            (0, 3, "N"), (1, 3, "N"), (2, 3, "N"),
        ],
    ),
    # reconstructed: 4-wheel (hub 0), first labeling in enumeration order
    # whose symbolic difference bounds rule out every threshold
    "fig6e": (
        5,
        [
            (0, 1, "N"), (0, 2, "N"), (0, 3, "F"), (0, 4, "F"),
            (1, 2, "F"), (2, 3, "N"), (3, 4, "N"), (1, 4, "N"),
        ],
    ),
}


def build_gadget(name: str) -> LabeledGraph:
    if name not in _GADGETS:
        raise ValueError(f"unknown gadget {name!r}")
    n, edges = _GADGETS[name]
    return LabeledGraph(n, [(u, v, EdgeLabel.parse(l)) for u, v, l in edges])


def has_cycle_with_one_far(g: LabeledGraph) -> bool:
    """A cycle with exactly one far edge rules out every threshold-0
    coloring (near edges force equality around to the far pair)."""
    near_adj: dict[int, set[int]] = {v: set() for v in range(g.vertex_count)}
    for u, v, label in g.edges:
        if label == NEAR:
            near_adj[u].add(v)
            near_adj[v].add(u)
    for u, v, label in g.edges:
        if label != FAR:
            continue
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y in near_adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return False


def embeds_in(pattern: LabeledGraph, host: LabeledGraph) -> bool:
    """Subgraph monomorphism on topology (labels are the pattern's choice).

    Plain backtracking with degree pruning; patterns here never exceed a
    dozen vertices.
    """
    p_adj = [set(w for w, _ in pattern.neighbors(v)) for v in range(pattern.vertex_count)]
    h_adj = [set(w for w, _ in host.neighbors(v)) for v in range(host.vertex_count)]

    order = []
    placed = set()
    while len(order) < pattern.vertex_count:
        candidates = [v for v in range(pattern.vertex_count) if v not in placed]
        candidates.sort(key=lambda v: (-len(p_adj[v] & placed), -len(p_adj[v]), v))
        order.append(candidates[0])
        placed.add(candidates[0])

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        anchors = [(w, mapping[w]) for w in p_adj[v] if w in mapping]
        if anchors:
            pool = set(h_adj[anchors[0][1]])
            for _, hw in anchors[1:]:
                pool &= h_adj[hw]
        else:
            pool = set(range(host.vertex_count))
        for hv in sorted(pool):
            if hv in used or len(h_adj[hv]) < len(p_adj[v]):
                continue
            mapping[v] = hv
            used.add(hv)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(hv)
        return False

    return extend(0)


def gadget_embeds_in_hosts(name: str, window=(3, 3)) -> bool:
    pattern = build_gadget(name)
    for host_name in GADGET_HOSTS[name]:
        host = generate(host_name, PatchParams(*window)).graph
        if not embeds_in(pattern, host):
            return False
    return True


# -- square spiral ------------------------------------------------------------


def build_square_spiral(n: int) -> LabeledGraph:
    """The n x n grid block whose near edges form the spiral path.

    The path starts at the center and wraps outward: one step east, then
    north/west/south/east arms growing by two each round.  All other grid
    edges are far.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("spiral size must be odd and positive")
    path = [(0, 0)]
    m = 1
    while m < n:
        k = m + 1
        x, y = path[-1]
        path.append((x + 1, y))
        for dx, dy, steps in [(0, 1, k - 1), (-1, 0, k), (0, -1, k), (1, 0, k)]:
            for _ in range(steps):
                x, y = path[-1]
                path.append((x + dx, y + dy))
        m += 2
    assert len(path) == n * n

    half = (n - 1) // 2
    coords = sorted(
        ((x, y) for x in range(-half, half + 1) for y in range(-half, half + 1)),
        key=lambda c: (c[1], c[0]),
    )
    index = {c: i for i, c in enumerate(coords)}
    on_path = {
        frozenset((index[a], index[b])) for a, b in zip(path, path[1:])
    }
    edges = []
    for (x, y), i in index.items():
        for nbr in ((x + 1, y), (x, y + 1)):
            if nbr in index:
                j = index[nbr]
                label = NEAR if frozenset((i, j)) in on_path else FAR
                edges.append((i, j, label))
    return LabeledGraph(len(coords), edges)


# -- dual-lattice spirals -----------------------------------------------------


def _face_layout(patch):
    faces = patch.faces
    centers = []
    for face in faces:
        xs = [patch.coords[v][0] for v in face]
        ys = [patch.coords[v][1] for v in face]
        centers.append((sum(xs) / len(xs), sum(ys) / len(ys)))
    edge_faces: dict[frozenset, list[int]] = {}
    for idx, face in enumerate(faces):
        for a, b in zip(face, face[1:] + face[:1]):
            edge_faces.setdefault(frozenset((a, b)), []).append(idx)
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(faces))}
    for users in edge_faces.values():
        for a, b in itertools.combinations(users, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)
    return faces, centers, adjacency


def _spiral_face_order(patch, rings: int):
    """Patch faces within ``rings`` flowers of a central high-degree vertex,
    ordered ring by ring and by angle within a ring."""
    faces, centers, _ = _face_layout(patch)
    g = patch.graph
    cx = sum(x for x, _ in patch.coords) / len(patch.coords)
    cy = sum(y for _, y in patch.coords) / len(patch.coords)
    max_deg = max(g.degree(v) for v in range(g.vertex_count))
    center = min(
        (v for v in range(g.vertex_count) if g.degree(v) == max_deg),
        key=lambda v: (
            (patch.coords[v][0] - cx) ** 2 + (patch.coords[v][1] - cy) ** 2,
            v,
        ),
    )
    dist = {center: 0}
    frontier = [center]
    while frontier:
        nxt = []
        for v in frontier:
            for w, _ in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt

    chosen = []
    for idx, face in enumerate(faces):
        reach = max(dist.get(v, 10**6) for v in face)
        if reach <= rings + 1:
            chosen.append((reach, idx))

    def angle(i):
        return math.atan2(centers[i][1] - patch.coords[center][1],
                          centers[i][0] - patch.coords[center][0])

    chosen.sort(key=lambda ri: (ri[0], round(angle(ri[1]), 9), ri[1]))
    return [faces[idx] for _, idx in chosen]


class _NearShape:
    """Incremental structure checks on the growing near-subgraph."""

    def __init__(self, path_only: bool):
        self.path_only = path_only
        self.parent: dict[int, int] = {}
        self.degree: dict[int, int] = {}

    def snapshot(self):
        return dict(self.parent), dict(self.degree)

    def restore(self, snap):
        self.parent, self.degree = dict(snap[0]), dict(snap[1])

    def find(self, x):
        while self.parent.get(x, x) != x:
            self.parent[x] = self.parent.get(self.parent[x], self.parent[x])
            x = self.parent[x]
        return x

    def add(self, u, v) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False  # near cycle
        self.parent.setdefault(ru, ru)
        self.parent[ru] = rv
        self.degree[u] = self.degree.get(u, 0) + 1
        self.degree[v] = self.degree.get(v, 0) + 1
        if self.path_only and (self.degree[u] > 2 or self.degree[v] > 2):
            return False
        return True


def _near_subgraph_ok(labels: dict, path_only: bool) -> bool:
    """Final check: one component; path or caterpillar."""
    adj: dict[int, set[int]] = {}
    for (u, v), label in labels.items():
        if label == NEAR:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
    if not adj:
        return False
    seen = set()
    start = next(iter(adj))
    stack = [start]
    seen.add(start)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != set(adj):
        return False
    if path_only:
        return all(len(nbrs) <= 2 for nbrs in adj.values())
    # caterpillar: removing leaves must leave a path
    spine = {v for v, nbrs in adj.items() if len(nbrs) > 1}
    if not spine:
        return True
    for v in spine:
        inner = [w for w in adj[v] if w in spine]
        if len(inner) > 2:
            return False
    ends = [v for v in spine if len([w for w in adj[v] if w in spine]) <= 1]
    return len(ends) <= 2


def _spiral_candidates(name: str, size: int, path_only: bool):
    """All shape-valid labelings of the size-ring region, in a fixed
    backtracking order: every face gets exactly two near edges except the
    center face with three, the near subgraph stays acyclic with capped
    degrees, and finally forms one path (or caterpillar)."""
    patch = generate(name, PatchParams(size + 2, size + 2))
    face_order = _spiral_face_order(patch, rings=size)
    labels: dict[tuple[int, int], EdgeLabel] = {}
    shape = _NearShape(path_only)

    def face_edges(face):
        return [tuple(sorted((a, b))) for a, b in zip(face, face[1:] + face[:1])]

    def solve(i: int):
        if i == len(face_order):
            if _near_subgraph_ok(labels, path_only):
                yield dict(labels)
            return
        face = face_edges(face_order[i])
        target = 3 if i == 0 else 2
        fixed_near = sum(1 for e in face if labels.get(e) == NEAR)
        free = [e for e in face if e not in labels]
        need = target - fixed_near
        if need < 0 or need > len(free):
            return
        for chosen in itertools.combinations(free, need):
            snap = shape.snapshot()
            if all(shape.add(*e) for e in chosen):
                for e in free:
                    labels[e] = NEAR if e in chosen else FAR
                yield from solve(i + 1)
                for e in free:
                    del labels[e]
            shape.restore(snap)

    yield from solve(0)


def _labels_to_graph(labels) -> LabeledGraph:
    vertices = sorted({v for e in labels for v in e})
    remap = {v: i for i, v in enumerate(vertices)}
    edges = [(remap[u], remap[v], label) for (u, v), label in sorted(labels.items())]
    return LabeledGraph(len(vertices), edges)


_SPIRAL_CACHE: dict[tuple[str, int], tuple[LabeledGraph, int]] = {}
_SPIRAL_CANDIDATE_CAP = 2000
_SPIRAL_CHECK_BUDGET = 300_000


def _dual_spiral_with_demand(family: str, size: int) -> tuple[LabeledGraph, int]:
    from .solver import SolveQuery, decide

    key = (family, size)
    if key in _SPIRAL_CACHE:
        return _SPIRAL_CACHE[key]
    name = "D(3.4.6.4)" if family == "d3464" else "D(3.6.3.6)"
    path_only = family == "d3464"
    floor = 1 if size == 1 else _dual_spiral_with_demand(family, size - 1)[1]

    accepted = None
    for count, labels in enumerate(_spiral_candidates(name, size, path_only)):
        if count >= _SPIRAL_CANDIDATE_CAP:
            break
        g = _labels_to_graph(labels)
        if size == 1:
            accepted = g
            break
        # strict growth: the previous size's palette must no longer suffice
        result = decide(SolveQuery(g, r=floor, t=1, budget=_SPIRAL_CHECK_BUDGET))
        if result.status == "UNSAT":
            accepted = g
            break
    if accepted is None:
        raise RuntimeError(
            f"no spiral labeling with growing color demand found for "
            f"{family} size {size}"
        )
    demand = floor
    while decide(
        SolveQuery(accepted, r=demand, t=1, budget=10**8)
    ).status != "SAT":
        demand += 1
    _SPIRAL_CACHE[key] = (accepted, demand)
    return accepted, demand


def build_dual_spiral(family: str, size: int) -> LabeledGraph:
    """Spiral-labeled subgraph of D(3,4,6,4) (near path) or D(3,6,3,6)
    (near caterpillar): every face carries exactly two near edges except
    the starting face, which carries three.

    Labelings come from a deterministic backtracking enumeration over the
    faces in ring order; for sizes above 1, the first candidate whose
    minimum color count (at threshold 1) strictly exceeds the previous
    size's is taken, so consecutive sizes always climb.
    """
    if family not in ("d3464", "d3636"):
        raise ValueError(f"unknown spiral family {family!r}")
    if size < 1:
        raise ValueError("size must be >= 1")
    return _dual_spiral_with_demand(family, size)[0]
