"""Threshold-coloring toolkit: lattices, constructive colorers, exact solver,
and the Happy Edges puzzle."""

from .graph import (
    Coloring,
    EdgeLabel,
    FAR,
    LabeledGraph,
    NEAR,
    VerifyReport,
    induced_subgraph,
    normalize,
    range_of,
    verify_coloring,
)

__all__ = [
    "Coloring",
    "EdgeLabel",
    "FAR",
    "LabeledGraph",
    "NEAR",
    "VerifyReport",
    "induced_subgraph",
    "normalize",
    "range_of",
    "verify_coloring",
]
