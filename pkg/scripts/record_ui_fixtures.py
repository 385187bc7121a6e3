"""Record server-side edge classifications for the UI contract tests.

Generates a handful of puzzles, samples 50 play states (partial witnesses,
corrupted witnesses, random junk inside the palette), runs the same
check_state the /api/check endpoint uses, and freezes everything into
frontend/test/fixtures.json.  The vitest suite replays the states through
the client-side classifier and demands byte-for-byte agreement.

Run:  python3 scripts/record_ui_fixtures.py
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, "src")

from happy_edges.puzzle import check_state, generate_puzzle
from happy_edges.service import puzzle_payload

BOARDS = [
    ("6^3", 2, 2, 0.4, 7),
    ("4^4", 2, 2, 0.3, 1),
    ("4.8^2", 2, 2, 0.5, 3),
    ("3.12^2", 1, 2, 0.5, 5),
    ("D(3^2.4.3.4)", 1, 1, 0.5, 2),
]

STATES_PER_BOARD = 10


def sample_states(puzzle, rng):
    n = puzzle.patch.graph.vertex_count
    witness = puzzle.witness
    states = [dict()]
    full = {v: witness[v] for v in range(n)}
    states.append(full)
    while len(states) < STATES_PER_BOARD:
        kind = rng.choice(["partial", "corrupt", "random"])
        if kind == "partial":
            kept = rng.sample(range(n), rng.randint(1, n - 1))
            states.append({v: witness[v] for v in kept})
        elif kind == "corrupt":
            state = dict(full)
            for v in rng.sample(range(n), rng.randint(1, max(1, n // 3))):
                state[v] = rng.randrange(puzzle.palette)
            states.append(state)
        else:
            kept = rng.sample(range(n), rng.randint(1, n))
            states.append({v: rng.randrange(puzzle.palette) for v in kept})
    return states


def main():
    rng = random.Random(2026)
    fixtures = []
    total_states = 0
    for name, rows, cols, far_prob, seed in BOARDS:
        puzzle = generate_puzzle(name, rows, cols, far_prob, seed)
        board = {"puzzle": puzzle_payload(puzzle), "states": []}
        for state in sample_states(puzzle, rng):
            statuses, solved = check_state(puzzle, state)
            board["states"].append(
                {
                    "assignment": {str(v): c for v, c in state.items()},
                    "edges": statuses,
                    "solved": solved,
                }
            )
            total_states += 1
        fixtures.append(board)
    out = Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(fixtures, indent=1) + "\n")
    print(f"wrote {total_states} recorded states across {len(fixtures)} boards to {out}")


if __name__ == "__main__":
    main()
