"""Concrete constructions for the 11 Archimedean and 8 Laves lattices.

Each lattice is built from an explicit translational unit: a set of vertex
keys (integer tuples), a position function, and either a per-cell face list
(most lattices) or an explicit per-cell edge/role structure (the four
lattices whose colorers need structural annotations).  Vertices shared
between cells carry identical keys, so deduplication is exact and windows of
different sizes agree wherever they overlap.

Coordinates are floats, used for rendering, face ordering, and the species
walk; no coloring algorithm reads them.

The dual (Laves) lattices are built directly from their own face systems;
the duality is documented here, not computed geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

Key = tuple  # integer tuples, one shape per lattice


@dataclass
class RawCell:
    cell: tuple[int, int]
    u_keys: list  # entries may be None when clipped by the window
    v_keys: list


@dataclass
class RawPair:
    u: Key
    v: Key
    w: tuple  # (w1, w2, w3, w4); e1=(u,w1) e2=(u,w2) e3=(v,w3) e4=(v,w4)


@dataclass
class RawPatch:
    positions: dict
    edges: list
    faces: list | None = None
    independent: set | None = None
    forest: set | None = None
    cells: list | None = None
    pairs: list | None = None


def _window(cell_faces, position, rows, cols, margin=2):
    """Assemble the faces of a rows x cols window, then induce edges from a
    wider pool so the patch is an induced subgraph of the infinite lattice
    (edges between window vertices that only bound out-of-window faces are
    still present)."""
    faces = []
    for i in range(rows):
        for j in range(cols):
            faces.extend(cell_faces(i, j))
    positions = {}
    for face in faces:
        for k in face:
            if k not in positions:
                positions[k] = position(k)
    edge_set = {}
    for i in range(-margin, rows + margin):
        for j in range(-margin, cols + margin):
            for face in cell_faces(i, j):
                m = len(face)
                for idx in range(m):
                    a, b = face[idx], face[(idx + 1) % m]
                    if a in positions and b in positions:
                        edge_set[frozenset((a, b))] = (a, b)
    return RawPatch(
        positions=positions,
        edges=[tuple(sorted(e)) for e in edge_set],
        faces=faces,
    )


# -- Archimedean lattices ----------------------------------------------------


def build_triangular(rows, cols):
    """(3^6): parallelogram window of up/down triangle pairs."""
    a1, a2 = (1.0, 0.0), (0.5, SQRT3 / 2)

    def pos(k):
        i, j = k
        return (j * a1[0] + i * a2[0], j * a1[1] + i * a2[1])

    def cell_faces(i, j):
        return [
            [(i, j), (i, j + 1), (i + 1, j)],
            [(i, j + 1), (i + 1, j + 1), (i + 1, j)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_square(rows, cols):
    """(4^4)."""

    def pos(k):
        i, j = k
        return (float(j), float(i))

    def cell_faces(i, j):
        return [[(i, j), (i, j + 1), (i + 1, j + 1), (i + 1, j)]]

    return _window(cell_faces, pos, rows, cols)


def build_hexagonal(rows, cols):
    """(6^3) in brick coordinates: vertex (x, y), vertical edges at x+y even.

    The white set for the forest decomposition is the residue class
    x + 2y = 0 (mod 4); the rest induces disjoint zigzag paths.
    """

    def pos(k):
        x, y = k
        bump = 0.25 if (x + y) % 2 == 0 else -0.25
        return (x * SQRT3 / 2, y * 1.5 + bump)

    def cell_faces(i, j):
        x0, y = 2 * j + (i % 2), i
        return [
            [(x0, y), (x0 + 1, y), (x0 + 2, y),
             (x0 + 2, y + 1), (x0 + 1, y + 1), (x0, y + 1)]
        ]

    patch = _window(cell_faces, pos, rows, cols)
    patch.independent = {k for k in patch.positions if (k[0] + 2 * k[1]) % 4 == 0}
    patch.forest = set(patch.positions) - patch.independent
    return patch


_P48 = 1.0 + SQRT2  # octagon center spacing in the truncated square tiling


def build_truncated_square(rows, cols):
    """(4.8^2): octagons at cell centers, tilted squares at grid corners.

    Keys: (0,i,j,s) on horizontal gridlines, (1,i,j,s) on vertical ones.
    The white set is every square's east corner; the rest forms vertical
    paths threaded through the squares' west corners.
    """
    h = SQRT2 / 2

    def pos(k):
        t, i, j, s = k
        if t == 0:
            return (j * _P48 + (h if s else -h), i * _P48)
        return (j * _P48, i * _P48 + (h if s else -h))

    def cell_faces(i, j):
        return [
            [(0, i, j, 1), (1, i, j, 1), (0, i, j, 0), (1, i, j, 0)],
            [(0, i, j + 1, 0), (1, i, j + 1, 1), (1, i + 1, j + 1, 0),
             (0, i + 1, j + 1, 0), (0, i + 1, j, 1), (1, i + 1, j, 0),
             (1, i, j, 1), (0, i, j, 1)],
        ]

    patch = _window(cell_faces, pos, rows, cols)
    patch.independent = {k for k in patch.positions if k[0] == 0 and k[3] == 1}
    patch.forest = set(patch.positions) - patch.independent
    return patch


# Dodecagon corner offsets for unit edges, corners at angles 15 + 30k.
_RC = (2 + SQRT3) / 2
_RB = (1 + SQRT3) / 2
_DODEC = {
    0: (_RC, 0.5), 1: (_RB, _RB), 2: (0.5, _RC), 3: (-0.5, _RC),
    4: (-_RB, _RB), 5: (-_RC, 0.5), 6: (-_RC, -0.5), 7: (-_RB, -_RB),
    8: (-0.5, -_RC), 9: (0.5, -_RC), 10: (_RB, -_RB), 11: (_RC, -0.5),
}


def _dodec_pos(spacing):
    ax, ay = spacing, 0.0
    bx, by = spacing / 2, spacing * SQRT3 / 2

    def pos(k):
        i, j, c = k
        ox, oy = _DODEC[c]
        return (j * ax + i * bx + ox, j * ay + i * by + oy)

    return pos


def build_truncated_hexagonal(rows, cols):
    """(3,12^2), assembled as chained 8-vertex cells.

    Cell (i,j) covers the strip between dodecagon rows i and i+1; within a
    row, cell j hands its last chain vertex to cell j+1, and rows share only
    the 0-colorable anchor vertices.  The per-cell edge lists partition the
    lattice's edges, so any rectangular window is an induced subgraph.
    """
    pos = _dodec_pos(2 + SQRT3)
    cells = []
    edge_set = {}
    positions = {}

    def role_map(i, j):
        return {
            "u0": (i, j, 11), "u1": (i + 1, j, 11),
            "v0": (i, j, 1), "v1": (i, j, 0), "v2": (i, j + 1, 4),
            "v3": (i, j + 1, 3), "v4": (i, j + 1, 2), "v5": (i, j + 1, 1),
        }

    chain = [
        ("v0", "v1"), ("v0", "v2"), ("v1", "v2"), ("u0", "v1"),
        ("v2", "v3"), ("u1", "v3"), ("u1", "v4"), ("v3", "v4"), ("v4", "v5"),
    ]
    for i in range(rows):
        for j in range(cols):
            roles = role_map(i, j)
            for k in roles.values():
                positions.setdefault(k, pos(k))
            for a, b in chain:
                ka, kb = roles[a], roles[b]
                edge_set[frozenset((ka, kb))] = (ka, kb)
            cells.append(
                RawCell(
                    cell=(i, j),
                    u_keys=[roles["u0"], roles["u1"]],
                    v_keys=[roles[f"v{n}"] for n in range(6)],
                )
            )
    return RawPatch(
        positions=positions,
        edges=[tuple(sorted(e)) for e in edge_set],
        cells=cells,
    )


def build_truncated_trihexagonal(rows, cols):
    """(4,6,12), assembled as chained 16-vertex cells (11 chain vertices,
    5 anchors).  Rows run right to left: cell (i,j) hands v10 to cell
    (i,j-1); anchor u4 is the previous cell's u0 and may be absent on the
    window boundary."""
    pos = _dodec_pos(3 + SQRT3)
    cells = []
    edge_set = {}
    positions = {}

    def role_map(i, j):
        return {
            "v0": (i, j + 1, 3), "v1": (i, j + 1, 4), "v2": (i + 1, j, 9),
            "v3": (i, j + 1, 5), "v4": (i, j + 1, 6), "v5": (i, j, 11),
            "v6": (i, j, 0), "v7": (i, j, 1), "v8": (i + 1, j, 8),
            "v9": (i, j, 2), "v10": (i, j, 3),
            "u0": (i + 1, j, 10), "u1": (i + 1, j, 7),
            "u2": (i, j, 10), "u3": (i, j + 1, 7),
            "u4": (i + 1, j - 1, 10),
        }

    owned = [
        ("v0", "v1"), ("v1", "v2"), ("v1", "v3"), ("v3", "v4"), ("v3", "v6"),
        ("v4", "v5"), ("v5", "v6"), ("v6", "v7"), ("v7", "v8"), ("v2", "v8"),
        ("v7", "v9"), ("v9", "v10"),
        ("u0", "v0"), ("u0", "v2"), ("u1", "v8"), ("u1", "v9"),
        ("u2", "v5"), ("u3", "v4"),
    ]
    for i in range(rows):
        for j in range(cols):
            roles = role_map(i, j)
            for name, k in roles.items():
                if name != "u4":
                    positions.setdefault(k, pos(k))
            for a, b in owned:
                ka, kb = roles[a], roles[b]
                edge_set[frozenset((ka, kb))] = (ka, kb)
    for i in range(rows):
        for j in range(cols):
            roles = role_map(i, j)
            u4 = roles["u4"] if roles["u4"] in positions else None
            cells.append(
                RawCell(
                    cell=(i, j),
                    u_keys=[roles["u0"], roles["u1"], roles["u2"], roles["u3"], u4],
                    v_keys=[roles[f"v{n}"] for n in range(11)],
                )
            )
    return RawPatch(
        positions=positions,
        edges=[tuple(sorted(e)) for e in edge_set],
        cells=cells,
    )


_SNUBHEX_A1 = (2.5, SQRT3 / 2)
_SNUBHEX_A2 = (0.5, 1.5 * SQRT3)
_HEXC = {k: (math.cos(math.radians(60 * k)), math.sin(math.radians(60 * k)))
         for k in range(6)}
_SNUBHEX_STEP = [(0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1)]


def build_snub_hexagonal(rows, cols):
    """(3^4,6): flat-top unit hexagons on a sqrt(7) triangular lattice."""

    def pos(k):
        i, j, c = k
        ox, oy = _HEXC[c]
        return (
            j * _SNUBHEX_A1[0] + i * _SNUBHEX_A2[0] + ox,
            j * _SNUBHEX_A1[1] + i * _SNUBHEX_A2[1] + oy,
        )

    def shifted(i, j, step, c):
        di, dj = step
        return (i + di, j + dj, c)

    def cell_faces(i, j):
        faces = [[(i, j, c) for c in range(6)]]
        for k in range(6):
            faces.append(
                [(i, j, k), (i, j, (k + 1) % 6),
                 shifted(i, j, _SNUBHEX_STEP[k], (k + 3) % 6)]
            )
        faces.append([(i, j, 0), (i - 1, j + 1, 2), (i, j + 1, 4)])
        faces.append([(i, j, 1), (i, j + 1, 3), (i + 1, j, 5)])
        return faces

    return _window(cell_faces, pos, rows, cols)


def build_elongated_triangular(rows, cols):
    """(3^3,4^2): square rows alternating with triangle strips."""
    a2 = (0.5, 1 + SQRT3 / 2)

    def pos(k):
        t, i, j = k
        return (j + i * a2[0], i * a2[1] + (1.0 if t else 0.0))

    def cell_faces(i, j):
        return [
            [(0, i, j), (0, i, j + 1), (1, i, j + 1), (1, i, j)],
            [(1, i, j), (1, i, j + 1), (0, i + 1, j)],
            [(1, i, j + 1), (0, i + 1, j + 1), (0, i + 1, j)],
        ]

    return _window(cell_faces, pos, rows, cols)


_PSNUB = (math.sqrt(6) + SQRT2) / 2  # 2 cos 15: snub square lattice constant
_SNUBSQ_C = {
    k: (SQRT2 / 2 * math.cos(math.radians(60 + 90 * k)),
        SQRT2 / 2 * math.sin(math.radians(60 + 90 * k)))
    for k in range(4)
}


def build_snub_square(rows, cols):
    """(3^2,4,3,4): axis squares tilted +15 deg, interstitial squares -15."""

    def pos(k):
        i, j, c = k
        ox, oy = _SNUBSQ_C[c]
        return (j * _PSNUB + ox, i * _PSNUB + oy)

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j, 1), (i, j, 2), (i, j, 3)],
            [(i, j, 0), (i, j + 1, 1), (i + 1, j + 1, 2), (i + 1, j, 3)],
            [(i, j, 0), (i, j, 1), (i + 1, j, 2)],   # north triangle
            [(i, j, 1), (i, j, 2), (i, j - 1, 3)],   # west
            [(i, j, 2), (i, j, 3), (i - 1, j, 0)],   # south
            [(i, j, 0), (i, j, 3), (i, j + 1, 1)],   # east
        ]

    return _window(cell_faces, pos, rows, cols)


_A3464 = 1 + SQRT3
_RHOMBI_C = {k: (math.cos(math.radians(30 + 60 * k)),
                 math.sin(math.radians(30 + 60 * k))) for k in range(6)}


def build_rhombitrihexagonal(rows, cols):
    """(3,4,6,4): unit hexagons ringed by squares and triangles."""

    def pos(k):
        i, j, c = k
        ox, oy = _RHOMBI_C[c]
        return (
            j * _A3464 + i * _A3464 / 2 + ox,
            i * _A3464 * SQRT3 / 2 + oy,
        )

    def cell_faces(i, j):
        return [
            [(i, j, c) for c in range(6)],
            [(i, j, 5), (i, j, 0), (i, j + 1, 2), (i, j + 1, 3)],
            [(i, j, 0), (i + 1, j, 4), (i + 1, j, 3), (i, j, 1)],
            [(i, j, 1), (i + 1, j - 1, 5), (i + 1, j - 1, 4), (i, j, 2)],
            [(i, j, 0), (i, j + 1, 2), (i + 1, j, 4)],
            [(i, j, 1), (i + 1, j, 3), (i + 1, j - 1, 5)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_trihexagonal(rows, cols):
    """(3,6,3,6), the kagome lattice."""
    sites = {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (0.5, SQRT3 / 2)}

    def pos(k):
        t, i, j = k
        return (sites[t][0] + 2 * j + i, sites[t][1] + i * SQRT3)

    def cell_faces(i, j):
        return [
            [(0, i, j), (1, i, j), (2, i, j)],
            [(1, i, j), (0, i, j + 1), (2, i - 1, j + 1)],
            [(1, i, j), (0, i, j + 1), (2, i, j + 1),
             (1, i + 1, j), (0, i + 1, j), (2, i, j)],
        ]

    return _window(cell_faces, pos, rows, cols)


# -- Laves lattices ----------------------------------------------------------


def build_triakis_triangular(rows, cols):
    """D(3,12^2): 12-valent centers with 3-valent triangle sites."""
    s = 2 + SQRT3
    holes = {1: 1.0 / 3.0, 2: 2.0 / 3.0}

    def pos(k):
        i, j, t = k
        ox = j * s + i * s / 2
        oy = i * s * SQRT3 / 2
        if t == 0:
            return (ox, oy)
        f = holes[t]
        return (ox + f * s * 1.5, oy + f * s * SQRT3 / 2)

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j + 1, 0), (i, j, 1)],
            [(i, j, 0), (i + 1, j, 0), (i, j, 1)],
            [(i, j, 0), (i + 1, j, 0), (i, j - 1, 2)],
            [(i, j, 0), (i + 1, j - 1, 0), (i, j - 1, 2)],
            [(i, j, 0), (i + 1, j - 1, 0), (i, j - 1, 1)],
            [(i, j, 0), (i, j + 1, 0), (i - 1, j, 2)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_tetrakis_square(rows, cols):
    """D(4,8^2): octagon centers 8-valent, square centers 4-valent."""

    def pos(k):
        i, j, t = k
        if t == 0:
            return (j * _P48, i * _P48)
        return ((j + 0.5) * _P48, (i + 0.5) * _P48)

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j, 1), (i - 1, j, 1)],
            [(i, j, 0), (i, j - 1, 1), (i - 1, j - 1, 1)],
            [(i, j, 0), (i, j, 1), (i, j - 1, 1)],
            [(i, j, 0), (i - 1, j, 1), (i - 1, j - 1, 1)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_kisrhombille(rows, cols):
    """D(4,6,12): barycentric triangles around 12/6/4-valent centers."""
    s = 3 + SQRT3

    def pos(k):
        i, j, t = k
        ox = j * s + i * s / 2
        oy = i * s * SQRT3 / 2
        if t == 0:
            return (ox, oy)
        if t == 1:
            return (ox + s / 2, oy + s * SQRT3 / 6)
        if t == 2:
            return (ox + s, oy + s * SQRT3 / 3)
        if t == 3:
            return (ox + s / 2, oy)
        if t == 4:
            return (ox + s / 4, oy + s * SQRT3 / 4)
        return (ox - s / 4, oy + s * SQRT3 / 4)

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j, 3), (i, j, 1)],
            [(i, j, 0), (i, j, 4), (i, j, 1)],
            [(i, j, 0), (i, j, 4), (i, j - 1, 2)],
            [(i, j, 0), (i, j, 5), (i, j - 1, 2)],
            [(i, j, 0), (i, j, 5), (i, j - 1, 1)],
            [(i, j, 0), (i, j - 1, 3), (i, j - 1, 1)],
            [(i, j, 0), (i, j - 1, 3), (i - 1, j - 1, 2)],
            [(i, j, 0), (i - 1, j, 4), (i - 1, j - 1, 2)],
            [(i, j, 0), (i - 1, j, 4), (i - 1, j, 1)],
            [(i, j, 0), (i - 1, j + 1, 5), (i - 1, j, 1)],
            [(i, j, 0), (i - 1, j + 1, 5), (i - 1, j, 2)],
            [(i, j, 0), (i, j, 3), (i - 1, j, 2)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_rhombille(rows, cols):
    """D(3,6,3,6): rhombi between 6-valent and 3-valent sites."""

    def pos(k):
        t, i, j = k
        bx, by = 2 * j + i, i * SQRT3
        if t == 0:
            return (bx + 1.5, by + SQRT3 / 2)
        if t == 1:
            return (bx + 0.5, by + SQRT3 / 6)
        return (bx + 1.5, by - SQRT3 / 6)

    def cell_faces(i, j):
        return [
            [(1, i, j), (0, i, j - 1), (2, i, j - 1), (0, i - 1, j)],
            [(1, i, j), (0, i, j), (2, i, j), (0, i - 1, j)],
            [(1, i, j), (0, i, j), (2, i + 1, j - 1), (0, i, j - 1)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_deltoidal_trihexagonal(rows, cols):
    """D(3,4,6,4): kites around 6/4/3-valent sites."""
    base = build_rhombitrihexagonal(1, 1)  # corner geometry reused for centroids

    def primal(k):
        i, j, c = k
        ox, oy = _RHOMBI_C[c]
        return (
            j * _A3464 + i * _A3464 / 2 + ox,
            i * _A3464 * SQRT3 / 2 + oy,
        )

    def centroid(corner_keys):
        pts = [primal(k) for k in corner_keys]
        return (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))

    def pos(k):
        i, j, t = k
        if t == 0:
            return (j * _A3464 + i * _A3464 / 2, i * _A3464 * SQRT3 / 2)
        if t == 1:
            return centroid([(i, j, 0), (i, j + 1, 2), (i + 1, j, 4)])
        if t == 2:
            return centroid([(i, j + 1, 1), (i + 1, j + 1, 3), (i + 1, j, 5)])
        if t == 3:
            return centroid([(i, j, 5), (i, j, 0), (i, j + 1, 2), (i, j + 1, 3)])
        if t == 4:
            return centroid([(i, j, 0), (i + 1, j, 4), (i + 1, j, 3), (i, j, 1)])
        return centroid([(i, j, 1), (i + 1, j - 1, 5), (i + 1, j - 1, 4), (i, j, 2)])

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j, 3), (i, j, 1), (i, j, 4)],
            [(i, j, 0), (i, j, 4), (i, j - 1, 2), (i, j, 5)],
            [(i, j, 0), (i, j, 5), (i, j - 1, 1), (i, j - 1, 3)],
            [(i, j, 0), (i, j - 1, 3), (i - 1, j - 1, 2), (i - 1, j, 4)],
            [(i, j, 0), (i - 1, j, 4), (i - 1, j, 1), (i - 1, j + 1, 5)],
            [(i, j, 0), (i - 1, j + 1, 5), (i - 1, j, 2), (i, j, 3)],
        ]

    return _window(cell_faces, pos, rows, cols)


def build_prismatic_pentagonal(rows, cols):
    """D(3^3,4^2): pentagon rows over 4- and 3-valent sites."""
    a2 = (0.5, 1 + SQRT3 / 2)

    def pos(k):
        i, j, t = k
        bx, by = j + i * a2[0], i * a2[1]
        if t == 0:
            return (bx + 0.5, by + 0.5)
        if t == 1:
            return (bx + 0.5, by + 1 + SQRT3 / 6)
        return (bx + 1.0, by + 1 + SQRT3 / 3)

    def cell_faces(i, j):
        return [
            [(i, j, 0), (i, j - 1, 0), (i - 1, j - 1, 2), (i - 1, j, 1), (i - 1, j, 2)],
            [(i, j, 1), (i, j - 1, 2), (i, j - 1, 1), (i, j - 1, 0), (i, j, 0)],
        ]

    return _window(cell_faces, pos, rows, cols)


def _cairo_tri_pos(t, i, j):
    """Centroid of triangle faces of the snub square tiling (N/E/S/W of A)."""
    corners = {
        2: [(i, j, 0), (i, j, 1), (i + 1, j, 2)],
        3: [(i, j, 0), (i, j, 3), (i, j + 1, 1)],
        4: [(i, j, 2), (i, j, 3), (i - 1, j, 0)],
        5: [(i, j, 1), (i, j, 2), (i, j - 1, 3)],
    }[t]

    def primal(k):
        ii, jj, c = k
        ox, oy = _SNUBSQ_C[c]
        return (jj * _PSNUB + ox, ii * _PSNUB + oy)

    pts = [primal(k) for k in corners]
    return (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)


def build_cairo(rows, cols):
    """D(3^2,4,3,4), the Cairo pentagonal lattice, with the annotations the
    linear colorer consumes.

    Keys: (0,i,j) axis-square centers, (1,i,j) tilted-square centers,
    (2..5,i,j) triangle centers (north/east/south/west of axis square i,j).
    The 4-valent square centers form the unique-color set; triangle centers
    pair up into matched degree-3 edges, one per face of the derived grid.
    """

    def pos(k):
        t, i, j = k
        if t == 0:
            return (j * _PSNUB, i * _PSNUB)
        if t == 1:
            return ((j + 0.5) * _PSNUB, (i + 0.5) * _PSNUB)
        return _cairo_tri_pos(t, i, j)

    a_keys = {(0, i, j) for i in range(rows + 1) for j in range(cols + 1)}
    pairs = []
    for i in range(rows):
        for j in range(cols + 1):
            pairs.append(
                RawPair(
                    u=(2, i, j), v=(4, i + 1, j),
                    w=((0, i, j), (1, i, j - 1), (0, i + 1, j), (1, i, j)),
                )
            )
    for i in range(rows + 1):
        for j in range(cols):
            pairs.append(
                RawPair(
                    u=(3, i, j), v=(5, i, j + 1),
                    w=((0, i, j), (1, i, j), (0, i, j + 1), (1, i - 1, j)),
                )
            )
    b_keys = set()
    for p in pairs:
        b_keys.update(k for k in p.w if k[0] == 1)

    positions = {}
    edges = []
    for k in a_keys | b_keys:
        positions[k] = pos(k)
    for p in pairs:
        positions[p.u] = pos(p.u)
        positions[p.v] = pos(p.v)
        edges.append(tuple(sorted((p.u, p.v))))
        edges.append(tuple(sorted((p.u, p.w[0]))))
        edges.append(tuple(sorted((p.u, p.w[1]))))
        edges.append(tuple(sorted((p.v, p.w[2]))))
        edges.append(tuple(sorted((p.v, p.w[3]))))

    return RawPatch(
        positions=positions,
        edges=sorted(set(edges)),
        independent=a_keys | b_keys,
        pairs=pairs,
    )


def _floret_tri_pos(kind, i, j, k=None):
    def primal(key):
        ii, jj, c = key
        ox, oy = _HEXC[c]
        return (
            jj * _SNUBHEX_A1[0] + ii * _SNUBHEX_A2[0] + ox,
            jj * _SNUBHEX_A1[1] + ii * _SNUBHEX_A2[1] + oy,
        )

    if kind == "A":
        corners = [(i, j, 0), (i - 1, j + 1, 2), (i, j + 1, 4)]
    elif kind == "B":
        corners = [(i, j, 1), (i, j + 1, 3), (i + 1, j, 5)]
    else:
        corners = [(i, j, k), (i, j, (k + 1) % 6),
                   (i + _SNUBHEX_STEP[k][0], j + _SNUBHEX_STEP[k][1], (k + 3) % 6)]
    pts = [primal(c) for c in corners]
    return (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)


def build_floret(rows, cols):
    """D(3^4,6), the floret pentagonal lattice, annotated for the linear
    colorer.

    Keys: (0,i,j) hexagon centers (6-valent), (1,i,j)/(2,i,j) the two
    per-cell free-triangle centers (3-valent, in the unique-color set),
    (3+k,i,j) edge-triangle centers (3-valent, matched in pairs).  The
    derived grid is rhombille-shaped; its quadrilateral faces line up with
    the matched pairs.
    """

    def pos(key):
        t, i, j = key
        if t == 0:
            return (
                j * _SNUBHEX_A1[0] + i * _SNUBHEX_A2[0],
                j * _SNUBHEX_A1[1] + i * _SNUBHEX_A2[1],
            )
        if t == 1:
            return _floret_tri_pos("A", i, j)
        if t == 2:
            return _floret_tri_pos("B", i, j)
        return _floret_tri_pos("E", i, j, t - 3)

    def hexc(i, j):
        return (0, i, j)

    def fa(i, j):
        return (1, i, j)

    def fb(i, j):
        return (2, i, j)

    def et(i, j, k):
        return (3 + k, i, j)

    pairs = []
    for i in range(rows + 1):
        for j in range(cols):
            pairs.append(
                RawPair(
                    u=et(i, j, 0), v=et(i, j + 1, 3),
                    w=(hexc(i, j), fb(i, j), hexc(i, j + 1), fa(i, j)),
                )
            )
    for i in range(rows):
        for j in range(1, cols):
            pairs.append(
                RawPair(
                    u=et(i, j, 1), v=et(i + 1, j, 4),
                    w=(hexc(i, j), fa(i + 1, j - 1), hexc(i + 1, j), fb(i, j)),
                )
            )
    for i in range(rows):
        for j in range(1, cols + 1):
            pairs.append(
                RawPair(
                    u=et(i, j, 2), v=et(i + 1, j - 1, 5),
                    w=(hexc(i, j), fb(i, j - 1), hexc(i + 1, j - 1), fa(i + 1, j - 1)),
                )
            )

    positions = {}
    edges = []
    independent = set()
    for i in range(rows + 1):
        for j in range(cols + 1):
            independent.add(hexc(i, j))
    for i in range(rows + 1):
        for j in range(cols):
            independent.add(fa(i, j))
            independent.add(fb(i, j))
    for k in independent:
        positions[k] = pos(k)
    for p in pairs:
        positions[p.u] = pos(p.u)
        positions[p.v] = pos(p.v)
        edges.append(tuple(sorted((p.u, p.v))))
        edges.append(tuple(sorted((p.u, p.w[0]))))
        edges.append(tuple(sorted((p.u, p.w[1]))))
        edges.append(tuple(sorted((p.v, p.w[2]))))
        edges.append(tuple(sorted((p.v, p.w[3]))))

    return RawPatch(
        positions=positions,
        edges=sorted(set(edges)),
        independent=independent,
        pairs=pairs,
    )


BUILDERS = {
    "3^6": build_triangular,
    "4^4": build_square,
    "6^3": build_hexagonal,
    "3.12^2": build_truncated_hexagonal,
    "4.8^2": build_truncated_square,
    "4.6.12": build_truncated_trihexagonal,
    "3^4.6": build_snub_hexagonal,
    "3^3.4^2": build_elongated_triangular,
    "3^2.4.3.4": build_snub_square,
    "3.4.6.4": build_rhombitrihexagonal,
    "3.6.3.6": build_trihexagonal,
    "D(3.12^2)": build_triakis_triangular,
    "D(4.8^2)": build_tetrakis_square,
    "D(4.6.12)": build_kisrhombille,
    "D(3^4.6)": build_floret,
    "D(3^3.4^2)": build_prismatic_pentagonal,
    "D(3^2.4.3.4)": build_cairo,
    "D(3.4.6.4)": build_deltoidal_trihexagonal,
    "D(3.6.3.6)": build_rhombille,
}

#: Interior-vertex species accepted per lattice (tuples up to rotation and
#: reflection; Laves lattices list one entry per vertex class).
SPECIES = {
    "3^6": [(3,) * 6],
    "4^4": [(4,) * 4],
    "6^3": [(6, 6, 6)],
    "3.12^2": [(3, 12, 12)],
    "4.8^2": [(4, 8, 8)],
    "4.6.12": [(4, 6, 12)],
    "3^4.6": [(3, 3, 3, 3, 6)],
    "3^3.4^2": [(3, 3, 3, 4, 4)],
    "3^2.4.3.4": [(3, 3, 4, 3, 4)],
    "3.4.6.4": [(3, 4, 6, 4)],
    "3.6.3.6": [(3, 6, 3, 6)],
    "D(3.12^2)": [(3,) * 12, (3,) * 3],
    "D(4.8^2)": [(3,) * 8, (3,) * 4],
    "D(4.6.12)": [(3,) * 12, (3,) * 6, (3,) * 4],
    "D(3^4.6)": [(5,) * 6, (5,) * 3],
    "D(3^3.4^2)": [(5,) * 4, (5,) * 3],
    "D(3^2.4.3.4)": [(5,) * 4, (5,) * 3],
    "D(3.4.6.4)": [(4,) * 6, (4,) * 4, (4,) * 3],
    "D(3.6.3.6)": [(4,) * 6, (4,) * 3],
}
