"""JSON file formats shared by the CLI, the HTTP API, and tests.

Graph file:    {"version": 1, "vertex_count": N, "edges": [[u, v, "N"|"F"], ...]}
Coloring file: {"colors": [c0, ..., cN-1], "t": t}
Labels file:   {"version": 1, "labels": ["N"|"F", ...]}   (canonical edge order)
Patch file:    graph file plus "coords": [[x, y], ...] and "annotations": {...}
"""

from __future__ import annotations

import json
from typing import Any

from .graph import Coloring, EdgeLabel, LabeledGraph


def graph_to_dict(g: LabeledGraph) -> dict[str, Any]:
    return {
        "version": 1,
        "vertex_count": g.vertex_count,
        "edges": [[u, v, label.value] for u, v, label in g.edges],
    }


def graph_from_dict(d: dict[str, Any]) -> LabeledGraph:
    return LabeledGraph(
        d["vertex_count"],
        [(u, v, EdgeLabel.parse(label)) for u, v, label in d["edges"]],
    )


def coloring_to_dict(c: Coloring, t: int) -> dict[str, Any]:
    n = len(c)
    if set(c) != set(range(n)):
        raise ValueError("coloring must cover vertices 0..n-1")
    return {"colors": [c[v] for v in range(n)], "t": t}


def coloring_from_dict(d: dict[str, Any]) -> tuple[Coloring, int]:
    return {v: x for v, x in enumerate(d["colors"])}, d["t"]


def labels_to_dict(labels: list[EdgeLabel]) -> dict[str, Any]:
    return {"version": 1, "labels": [l.value for l in labels]}


def labels_from_dict(d: dict[str, Any]) -> list[EdgeLabel]:
    return [EdgeLabel.parse(l) for l in d["labels"]]


def dump(obj: dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def load(path: str) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
