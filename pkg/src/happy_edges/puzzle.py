"""Happy Edges puzzle generation, checking, and hints.

A puzzle is a labeled lattice patch with a fixed threshold and a hidden
witness solution.  On the six safely-colorable lattices the witness comes
from the matching constructive colorer, so generation never fails; on the
other boards the generator samples labelings until the exact solver finds
one solvable at threshold 1 within a small palette.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coloring import color_patch
from .graph import Coloring, EdgeLabel, FAR, NEAR, edge_satisfied, normalize
from .lattices import CONSTRUCTIVE, LatticePatch, PatchParams, generate
from .solver import SolveQuery, decide

MAX_SOLVER_VERTICES = 40
MAX_RETRIES = 50
SOLVER_R_MAX = 8
DEFAULT_FAR_PROB = 0.35


class GenerationError(RuntimeError):
    def __init__(self, message, attempts):
        super().__init__(message)
        self.attempts = attempts


@dataclass
class Puzzle:
    lattice: str
    rows: int
    cols: int
    far_prob: float
    seed: int
    patch: LatticePatch = field(repr=False)
    labels: list[EdgeLabel]
    t: int
    palette: int  # allowed colors are 0 .. palette-1
    givens: dict[int, int]
    witness: Coloring = field(repr=False)  # server-side only

    @property
    def puzzle_id(self) -> str:
        return f"{self.lattice}:{self.rows}:{self.cols}:{self.far_prob}:{self.seed}"

    def labeled_graph(self):
        return self.patch.graph.with_labels(self.labels)


def parse_puzzle_id(puzzle_id: str):
    name, rows, cols, far_prob, seed = puzzle_id.rsplit(":", 4)
    return name, int(rows), int(cols), float(far_prob), int(seed)


def _sample_labels(edge_count: int, far_prob: float, rng: random.Random):
    return [FAR if rng.random() < far_prob else NEAR for _ in range(edge_count)]


def generate_puzzle(
    name: str,
    rows: int,
    cols: int,
    far_prob: float = DEFAULT_FAR_PROB,
    seed: int = 0,
) -> Puzzle:
    """Build a reproducible puzzle: same parameters, same bytes."""
    if not 0 <= far_prob <= 1:
        raise ValueError("far_prob must lie in [0, 1]")
    patch = generate(name, PatchParams(rows, cols))
    rng = random.Random(f"happy-edges:{name}:{rows}:{cols}:{far_prob}:{seed}")
    m = len(patch.graph.edges)

    if name in CONSTRUCTIVE:
        labels = _sample_labels(m, far_prob, rng)
        scheme = color_patch(patch, labels)
        witness = normalize(scheme.coloring)
        return Puzzle(
            lattice=name, rows=rows, cols=cols, far_prob=far_prob, seed=seed,
            patch=patch, labels=labels, t=scheme.t, palette=scheme.r,
            givens={}, witness=witness,
        )

    if patch.graph.vertex_count > MAX_SOLVER_VERTICES:
        raise ValueError(
            f"{name} boards are solver-backed and limited to "
            f"{MAX_SOLVER_VERTICES} vertices; this one has "
            f"{patch.graph.vertex_count}"
        )
    for attempt in range(1, MAX_RETRIES + 1):
        labels = _sample_labels(m, far_prob, rng)
        g = patch.graph.with_labels(labels)
        for r in range(1, SOLVER_R_MAX + 1):
            result = decide(SolveQuery(g, r=r, t=1))
            if result.status == "SAT":
                return Puzzle(
                    lattice=name, rows=rows, cols=cols, far_prob=far_prob,
                    seed=seed, patch=patch, labels=labels, t=1, palette=r,
                    givens={}, witness=normalize(result.coloring),
                )
    raise GenerationError(
        f"no solvable labeling found for {name} after {MAX_RETRIES} attempts",
        attempts=MAX_RETRIES,
    )


# -- play state --------------------------------------------------------------

HAPPY = "happy"
UNHAPPY = "unhappy"
UNDETERMINED = "undetermined"


def check_state(puzzle: Puzzle, assignment: dict[int, int]):
    """Per-edge status plus a solved flag.

    Never consults the witness: any total assignment that satisfies every
    edge at the puzzle's threshold counts as solved.
    """
    for v, value in assignment.items():
        if not (0 <= v < puzzle.patch.graph.vertex_count):
            raise ValueError(f"vertex {v} out of range")
        if not (0 <= value < puzzle.palette):
            raise ValueError(f"color {value} outside the palette")
    g = puzzle.labeled_graph()
    statuses = []
    for u, v, label in g.edges:
        if u not in assignment or v not in assignment:
            statuses.append(UNDETERMINED)
        elif edge_satisfied(label, assignment[u], assignment[v], puzzle.t):
            statuses.append(HAPPY)
        else:
            statuses.append(UNHAPPY)
    solved = (
        len(assignment) == g.vertex_count
        and all(s == HAPPY for s in statuses)
    )
    return statuses, solved


def hint(puzzle: Puzzle, assignment: dict[int, int], budget: int = 5_000_000):
    """One consistent next move, or a status string.

    Returns ("complete", None), ("inconsistent", None), ("unknown", None),
    or ("hint", (vertex, color)).  Prefers the stored witness whenever the
    current assignment agrees with it.
    """
    statuses, solved = check_state(puzzle, assignment)
    if solved:
        return "complete", None
    g = puzzle.labeled_graph()
    merged = dict(puzzle.givens)
    merged.update(assignment)

    if all(puzzle.witness[v] == c for v, c in merged.items()):
        for v in range(g.vertex_count):
            if v not in merged:
                return "hint", (v, puzzle.witness[v])
        return "complete", None

    extension = _extend(g, merged, puzzle.palette, puzzle.t, budget)
    if extension == "budget":
        return "unknown", None
    if extension is None:
        return "inconsistent", None
    for v in range(g.vertex_count):
        if v not in merged:
            return "hint", (v, extension[v])
    return "complete", None


def _extend(g, pins: dict[int, int], r: int, t: int, budget: int):
    """Solve with some vertices pinned by splicing them into the search as
    singleton domains (via a wrapper graph trick: re-check afterwards)."""
    for (u, v, label) in g.edges:
        if u in pins and v in pins:
            if not edge_satisfied(label, pins[u], pins[v], t):
                return None
    result = _decide_with_pins(g, pins, r, t, budget)
    return result


def _decide_with_pins(g, pins, r, t, budget):
    from .solver import _Search, _Budget

    search = _Search(g, r, t, budget, use_order_pruning=False, use_symmetry=False)
    for v, value in pins.items():
        search.domains[v] = {value}
    try:
        witness = search.run()
    except _Budget:
        return "budget"
    return witness


__all__ = [
    "DEFAULT_FAR_PROB",
    "GenerationError",
    "Puzzle",
    "check_state",
    "generate_puzzle",
    "hint",
    "parse_puzzle_id",
]
