"""Stateless HTTP API for the Happy Edges puzzle.

Puzzles are reproducible from their parameters, so nothing is stored
between requests: /api/check and /api/hint accept either the inline puzzle
parameters or a puzzle_id string that encodes them.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import FileResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .lattices import LATTICE_INFO, LATTICE_NAMES
from .puzzle import (
    DEFAULT_FAR_PROB,
    GenerationError,
    Puzzle,
    check_state,
    generate_puzzle,
    hint,
    parse_puzzle_id,
)


class PuzzleRequest(BaseModel):
    lattice: str
    rows: int = Field(ge=1, le=10)
    cols: int = Field(ge=1, le=10)
    far_prob: float = Field(default=DEFAULT_FAR_PROB, ge=0.0, le=1.0)
    seed: int = 0


class StateRequest(BaseModel):
    puzzle_id: str | None = None
    puzzle: PuzzleRequest | None = None
    assignment: dict[int, int] = Field(default_factory=dict)


def puzzle_payload(p: Puzzle) -> dict:
    return {
        "puzzle_id": p.puzzle_id,
        "lattice": p.lattice,
        "rows": p.rows,
        "cols": p.cols,
        "far_prob": p.far_prob,
        "seed": p.seed,
        "vertex_count": p.patch.graph.vertex_count,
        "edges": [
            [u, v, label.value]
            for (u, v, _), label in zip(p.patch.graph.edges, p.labels)
        ],
        "coords": [[x, y] for x, y in p.patch.coords],
        "t": p.t,
        "palette": p.palette,
        "givens": {str(v): c for v, c in p.givens.items()},
    }


def _rebuild(request: StateRequest) -> Puzzle:
    if request.puzzle is not None:
        q = request.puzzle
        return generate_puzzle(q.lattice, q.rows, q.cols, q.far_prob, q.seed)
    if request.puzzle_id:
        return generate_puzzle(*parse_puzzle_id(request.puzzle_id))
    raise HTTPException(422, "provide puzzle or puzzle_id")


def create_app(static_dir: str | None = None, allow_solve: bool = False) -> FastAPI:
    app = FastAPI(title="Happy Edges")

    @app.get("/api/lattices")
    def lattices():
        return [
            {"name": name, **LATTICE_INFO[name]}
            for name in LATTICE_NAMES
        ]

    @app.post("/api/puzzle")
    def new_puzzle(request: PuzzleRequest):
        if request.lattice not in LATTICE_NAMES:
            raise HTTPException(422, f"unknown lattice {request.lattice!r}")
        try:
            p = generate_puzzle(
                request.lattice, request.rows, request.cols,
                request.far_prob, request.seed,
            )
        except GenerationError as exc:
            raise HTTPException(
                409, f"{exc} (attempts: {exc.attempts})"
            ) from exc
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        return puzzle_payload(p)

    @app.post("/api/check")
    def check(request: StateRequest):
        p = _rebuild(request)
        try:
            statuses, solved = check_state(p, dict(request.assignment))
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        return {"edges": statuses, "solved": solved}

    @app.post("/api/hint")
    def get_hint(request: StateRequest):
        p = _rebuild(request)
        try:
            status, move = hint(p, dict(request.assignment))
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        if status == "hint":
            vertex, color = move
            return {"vertex": vertex, "color": color}
        return {"status": status}

    @app.post("/api/solve")
    def solve(request: StateRequest):
        if not allow_solve:
            raise HTTPException(403, "witness endpoint is disabled")
        p = _rebuild(request)
        return {
            "colors": [p.witness[v] for v in range(p.patch.graph.vertex_count)],
            "t": p.t,
        }

    if static_dir:
        root = Path(static_dir)

        @app.get("/")
        def index():
            return FileResponse(root / "index.html")

        app.mount("/", StaticFiles(directory=str(root)), name="static")

    return app


def serve(port: int, static_dir: str | None = None, allow_solve: bool = False):
    import uvicorn

    uvicorn.run(
        create_app(static_dir=static_dir, allow_solve=allow_solve),
        host="127.0.0.1",
        port=port,
    )
