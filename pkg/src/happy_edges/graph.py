"""Edge-labeled graphs, integer vertex colorings, and the verifier.

A coloring is *valid* for threshold ``t`` when every near edge has endpoint
colors within ``t`` of each other and every far edge has them strictly
further apart.  Everything else in the package is checked against
:func:`verify_coloring`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class EdgeLabel(enum.Enum):
    NEAR = "N"
    FAR = "F"

    @classmethod
    def parse(cls, value) -> "EdgeLabel":
        if isinstance(value, EdgeLabel):
            return value
        if value in ("N", "near", "NEAR"):
            return cls.NEAR
        if value in ("F", "far", "FAR"):
            return cls.FAR
        raise ValueError(f"not an edge label: {value!r}")


NEAR = EdgeLabel.NEAR
FAR = EdgeLabel.FAR

#: An edge is (u, v, label) with u < v.
Edge = tuple[int, int, EdgeLabel]

#: Colorings are total maps vertex id -> int.
Coloring = dict[int, int]


@dataclass
class LabeledGraph:
    """Undirected graph with near/far edge labels.

    Edges are canonicalized to ``u < v`` and sorted, so two graphs with the
    same edge set compare equal and serialize identically.  Instances are
    treated as immutable after construction.
    """

    vertex_count: int
    edges: list[Edge]
    _adj: dict[int, list[tuple[int, EdgeLabel]]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        canon = []
        seen = set()
        for u, v, label in self.edges:
            label = EdgeLabel.parse(label)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            canon.append((u, v, label))
        canon.sort(key=lambda e: (e[0], e[1]))
        self.edges = canon
        adj = {v: [] for v in range(self.vertex_count)}
        for u, v, label in canon:
            adj[u].append((v, label))
            adj[v].append((u, label))
        for nbrs in adj.values():
            nbrs.sort()
        self._adj = adj

    def neighbors(self, v: int) -> list[tuple[int, EdgeLabel]]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def label_of(self, u: int, v: int) -> EdgeLabel:
        for w, label in self._adj[u]:
            if w == v:
                return label
        raise KeyError(f"no edge ({u},{v})")

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self._adj[u])

    def with_labels(self, labels: list[EdgeLabel]) -> "LabeledGraph":
        """Same topology, new labels given in canonical edge order."""
        if len(labels) != len(self.edges):
            raise ValueError("label list length mismatch")
        return LabeledGraph(
            self.vertex_count,
            [(u, v, EdgeLabel.parse(l)) for (u, v, _), l in zip(self.edges, labels)],
        )


@dataclass
class VerifyReport:
    valid: bool
    violations: list[tuple[int, int, EdgeLabel]]
    range_used: int
    min_color: int
    max_color: int


def edge_satisfied(label: EdgeLabel, cu: int, cv: int, t: int) -> bool:
    return (abs(cu - cv) <= t) == (label == NEAR)


def verify_coloring(g: LabeledGraph, c: Coloring, t: int) -> VerifyReport:
    """Check c against g at threshold t; violations in canonical edge order."""
    if t < 0:
        raise ValueError("threshold must be >= 0")
    for v in range(g.vertex_count):
        if v not in c:
            raise ValueError(f"coloring missing vertex {v}")
    violations = [
        (u, v, label)
        for u, v, label in g.edges
        if not edge_satisfied(label, c[u], c[v], t)
    ]
    values = [c[v] for v in range(g.vertex_count)] or [0]
    lo, hi = min(values), max(values)
    return VerifyReport(
        valid=not violations,
        violations=violations,
        range_used=hi - lo + 1,
        min_color=lo,
        max_color=hi,
    )


def range_of(c: Coloring) -> int:
    """Number of colors an interval palette needs to contain c."""
    if not c:
        raise ValueError("empty coloring has no range")
    return max(c.values()) - min(c.values()) + 1


def normalize(c: Coloring) -> Coloring:
    """Shift colors so the minimum becomes 0; verdicts are unaffected."""
    if not c:
        raise ValueError("empty coloring")
    lo = min(c.values())
    return {v: x - lo for v, x in c.items()}


def induced_subgraph(
    g: LabeledGraph, keep: set[int]
) -> tuple[LabeledGraph, dict[int, int]]:
    """Subgraph induced by ``keep``, plus the old->new id map.

    New ids are assigned by ascending old id, so the construction is
    deterministic and reversible through the returned map.
    """
    for v in keep:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(sorted(keep))}
    edges = [
        (remap[u], remap[v], label)
        for u, v, label in g.edges
        if u in remap and v in remap
    ]
    return LabeledGraph(len(remap), edges), remap
