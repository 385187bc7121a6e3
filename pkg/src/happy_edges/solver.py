"""Exact decision procedure for threshold-colorability.

``decide`` answers whether a labeled graph admits a coloring with colors in
``{0..r-1}`` for a given threshold (or any threshold below ``r``), by
backtracking search with forward checking.  It is deliberately simple and
deterministic: the acceptance suite cross-checks it against brute-force
enumeration on small instances, and the constructive colorers replay their
outputs through it.

Two symmetry reductions are applied, both verdict-preserving:

* translation: some vertex must receive color 0 (any witness shifts down);
* reflection: the first vertex branched on is capped at ``(r-1)//2``
  (the map ``c -> r-1-c`` plus a shift produces the other representative).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Coloring, EdgeLabel, FAR, LabeledGraph, NEAR, verify_coloring


@dataclass
class SolveQuery:
    graph: LabeledGraph
    r: int
    t: int | None = None  # None = try every t in 0..r-1
    budget: int = 10**8  # node limit, not wall clock
    use_order_pruning: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("palette size r must be >= 1")
        if self.t is not None and self.t < 0:
            raise ValueError("threshold must be >= 0")


@dataclass
class SolveResult:
    status: str  # "SAT" | "UNSAT" | "BudgetExceeded"
    t: int | None = None
    coloring: Coloring | None = None
    nodes_explored: int = 0


class _Budget(Exception):
    pass


def decide(q: SolveQuery) -> SolveResult:
    g = q.graph
    if g.vertex_count == 0:
        return SolveResult("SAT", t=q.t if q.t is not None else 0, coloring={})
    has_far = any(label == FAR for _, _, label in g.edges)

    if q.t is not None:
        ts = [q.t]
    else:
        # A threshold >= r-1 can only work when no far edge exists, and then
        # t = r-1 with an all-zero coloring trivially does; small t fails fast.
        ts = list(range(0, max(q.r - 1, 0))) or [0]
        if not has_far and q.r - 1 not in ts:
            ts = ts + [q.r - 1]

    nodes = 0
    for t in ts:
        if t >= q.r - 1 and has_far and q.r > 1:
            # far edges need |delta| > t, impossible inside {0..r-1}
            continue
        if q.r == 1 and has_far:
            continue
        search = _Search(g, q.r, t, q.budget - nodes, q.use_order_pruning)
        try:
            witness = search.run()
        except _Budget:
            return SolveResult("BudgetExceeded", nodes_explored=q.budget)
        nodes += search.nodes
        if witness is not None:
            report = verify_coloring(g, witness, t)
            assert report.valid, "search returned an invalid witness"
            return SolveResult("SAT", t=t, coloring=witness, nodes_explored=nodes)
    return SolveResult("UNSAT", nodes_explored=nodes)


class _Search:
    def __init__(self, g, r, t, budget, use_order_pruning, use_symmetry=True):
        self.g = g
        self.r = r
        self.t = t
        self.budget = budget
        self.nodes = 0
        self.prune_orders = use_order_pruning
        self.use_symmetry = use_symmetry
        self.domains = [set(range(r)) for _ in range(g.vertex_count)]
        self.assigned: dict[int, int] = {}

    def run(self) -> Coloring | None:
        return self._extend(first=self.use_symmetry)

    def _pick(self) -> int:
        # most constrained first: smallest domain, then most colored
        # neighbors, then lowest id - keeps the search deterministic
        best = None
        for v in range(self.g.vertex_count):
            if v in self.assigned:
                continue
            key = (
                len(self.domains[v]),
                -sum(1 for w, _ in self.g.neighbors(v) if w in self.assigned),
                v,
            )
            if best is None or key < best[0]:
                best = (key, v)
        return best[1]

    def _consistent_values(self, v: int, first: bool):
        values = sorted(self.domains[v])
        if first:
            cap = (self.r - 1) // 2
            values = [x for x in values if x <= cap]
        return values

    def _zero_reachable(self) -> bool:
        if any(x == 0 for x in self.assigned.values()):
            return True
        return any(
            0 in self.domains[v]
            for v in range(self.g.vertex_count)
            if v not in self.assigned
        )

    def _extend(self, first=False) -> Coloring | None:
        if len(self.assigned) == self.g.vertex_count:
            if self.use_symmetry and min(self.assigned.values()) != 0:
                return None  # translation anchor
            return dict(self.assigned)
        v = self._pick()
        for value in self._consistent_values(v, first):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _Budget()
            removed: list[tuple[int, int]] = []
            ok = True
            self.assigned[v] = value
            for w, label in self.g.neighbors(v):
                if w in self.assigned:
                    if not _edge_ok(label, value, self.assigned[w], self.t):
                        ok = False
                        break
                    continue
                dom = self.domains[w]
                for x in list(dom):
                    if not _edge_ok(label, value, x, self.t):
                        dom.discard(x)
                        removed.append((w, x))
                if not dom:
                    ok = False
                    break
            if ok and self.use_symmetry and not self._zero_reachable():
                ok = False
            if ok and self.prune_orders and self._order_contradiction():
                ok = False
            if ok:
                result = self._extend()
                if result is not None:
                    return result
            del self.assigned[v]
            for w, x in removed:
                self.domains[w].add(x)
        return None

    def _order_contradiction(self) -> bool:
        facts = {
            (u, w)
            for u, w in itertools.permutations(self.assigned, 2)
            if self.g.has_edge(u, w) and self.assigned[u] < self.assigned[w]
        }
        return propagate_order_constraints(self.g, facts).contradiction


def _edge_ok(label: EdgeLabel, a: int, b: int, t: int) -> bool:
    return (abs(a - b) <= t) == (label == NEAR)


def min_colors(
    g: LabeledGraph, t: int | None = None, r_max: int = 16, budget: int = 10**8
) -> tuple[int, int, Coloring] | None:
    """Smallest palette size (then smallest threshold) that colors g.

    Returns (r*, t*, witness) or None when nothing works up to r_max.
    """
    for r in range(1, r_max + 1):
        result = decide(SolveQuery(g, r=r, t=t, budget=budget))
        if result.status == "SAT":
            return r, result.t, result.coloring
    return None


def check_all_labelings(
    g: LabeledGraph, r: int, t: int, max_edges: int = 20
) -> tuple[bool, list[EdgeLabel] | None]:
    """True when every labeling of g's topology is (r, t)-colorable.

    Enumerates all 2^|E| labelings, so it refuses graphs with more than
    ``max_edges`` edges unless the guard is raised explicitly.
    """
    m = len(g.edges)
    if m > max_edges:
        raise ValueError(f"{m} edges exceeds enumeration guard {max_edges}")
    for bits in itertools.product((NEAR, FAR), repeat=m):
        labeling = list(bits)
        candidate = g.with_labels(labeling)
        if decide(SolveQuery(candidate, r=r, t=t)).status != "SAT":
            return False, labeling
    return True, None


# ---------------------------------------------------------------------------
# order propagation
#
# Strict-order facts c(u) < c(v) propagate through two local patterns: a
# triangle with one far edge (or one near edge), and a 4-cycle whose far
# edges are adjacent or opposite.  Closing a fact set under these rules
# either stabilizes or forces a directed cycle, i.e. a contradiction.
# ---------------------------------------------------------------------------

Fact = tuple[int, int]  # (u, v) means c(u) < c(v)


@dataclass
class PropagationResult:
    facts: set[Fact]
    contradiction: bool
    implications: int = field(default=0)


def _triangle_rules(g: LabeledGraph):
    rules: dict[Fact, list[Fact]] = {}

    def add(h: Fact, c: Fact):
        rules.setdefault(h, []).append(c)

    for u, v, label in g.edges:
        common = [
            w
            for w, _ in g.neighbors(u)
            if w != v and g.has_edge(w, v) and w != u
        ]
        for w in common:
            lu, lv = g.label_of(u, w), g.label_of(v, w)
            if label == FAR and lu == NEAR and lv == NEAR:
                # far base (u,v), near apex w
                add((u, w), (w, v))
                add((v, w), (w, u))
                add((w, u), (v, w))
                add((w, v), (u, w))
            if label == NEAR and lu == FAR and lv == FAR:
                # near base (u,v), far apex w
                add((u, w), (v, w))
                add((v, w), (u, w))
                add((w, u), (w, v))
                add((w, v), (w, u))
    return rules


def _four_cycle_rules(g: LabeledGraph, rules):
    def add(h: Fact, c: Fact):
        rules.setdefault(h, []).append(c)

    n = g.vertex_count
    for a in range(n):
        nbrs_a = [w for w, _ in g.neighbors(a)]
        for c in range(a + 1, n):
            if g.has_edge(a, c):
                continue
            common = [w for w in nbrs_a if w != c and g.has_edge(w, c)]
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    b, d = common[i], common[j]
                    if g.has_edge(b, d):
                        continue
                    # chordless cycle a-b-c-d
                    _cycle_rules(g, (a, b, c, d), add)


def _cycle_rules(g, cycle, add):
    a, b, c, d = cycle
    edges = [(a, b), (b, c), (c, d), (d, a)]
    labels = [g.label_of(u, v) for u, v in edges]
    if labels.count(FAR) != 2:
        return
    far_idx = [i for i, s in enumerate(labels) if s == FAR]
    if (far_idx[1] - far_idx[0]) % 4 == 2:
        # opposite far edges: orient (x0,x1) far, (x1,x2) near, ...
        for shift in range(4):
            if labels[shift] == FAR and labels[(shift + 1) % 4] == NEAR:
                ring = [cycle[(shift + k) % 4] for k in range(4)]
                x0, x1, x2, x3 = ring
                # far (x0,x1) and (x2,x3); near (x1,x2), (x3,x0)
                add((x0, x1), (x0, x2))
                add((x0, x1), (x3, x1))
                add((x0, x1), (x3, x2))
                add((x1, x0), (x2, x0))
                add((x1, x0), (x1, x3))
                add((x1, x0), (x2, x3))
    else:
        # adjacent far edges sharing one corner
        for shift in range(4):
            if (
                labels[shift] == FAR
                and labels[(shift + 3) % 4] == FAR
            ):
                # corner = cycle[shift]; ring y0 far-adjacent corner
                y3 = cycle[shift]
                y0 = cycle[(shift + 3) % 4]
                y2 = cycle[(shift + 1) % 4]
                y1 = cycle[(shift + 2) % 4]
                # far (y0,y3), (y2,y3); near (y0,y1), (y1,y2)
                add((y0, y3), (y1, y3))
                add((y0, y3), (y2, y3))
                add((y2, y3), (y1, y3))
                add((y2, y3), (y0, y3))
                add((y3, y0), (y3, y1))
                add((y3, y0), (y3, y2))
                add((y3, y2), (y3, y1))
                add((y3, y2), (y3, y0))


def propagate_order_constraints(
    g: LabeledGraph, facts: set[Fact]
) -> PropagationResult:
    """Close strict-order facts under the triangle and 4-cycle rules."""
    rules = _triangle_rules(g)
    _four_cycle_rules(g, rules)
    closed = set(facts)
    queue = list(facts)
    steps = 0
    while queue:
        fact = queue.pop()
        for consequence in rules.get(fact, ()):
            if consequence not in closed:
                closed.add(consequence)
                queue.append(consequence)
                steps += 1
    return PropagationResult(closed, _has_cycle(closed), steps)


def _has_cycle(facts: set[Fact]) -> bool:
    out: dict[int, list[int]] = {}
    for u, v in facts:
        if (v, u) in facts:
            return True
        out.setdefault(u, []).append(v)
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[int, int] = {}
    for start in out:
        if color.get(start, WHITE) != WHITE:
            continue
        stack = [(start, iter(out.get(start, ())))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                state = color.get(nxt, WHITE)
                if state == GRAY:
                    return True
                if state == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(out.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return False
