"""Command-line interface.

Subcommands mirror the package's modules: lattice generation, constructive
coloring, exact solving, hardness artifacts, puzzles, and the HTTP server.
All files use the JSON formats in happy_edges.serialize.
"""

from __future__ import annotations

import json
import sys

import click

from . import serialize
from .graph import verify_coloring
from .lattices import LATTICE_NAMES, PatchParams, generate
from .solver import SolveQuery, decide, min_colors


@click.group()
def main():
    """Threshold-coloring toolkit and the Happy Edges puzzle."""


# -- lattice -----------------------------------------------------------------


@main.group()
def lattice():
    """Lattice patch generation."""


@lattice.command("gen")
@click.option("--name", required=True, type=click.Choice(LATTICE_NAMES))
@click.option("--rows", required=True, type=int)
@click.option("--cols", required=True, type=int)
@click.option("-o", "--output", required=True, type=click.Path())
def lattice_gen(name, rows, cols, output):
    """Write a patch file: graph + coords + annotations."""
    patch = generate(name, PatchParams(rows, cols))
    data = serialize.graph_to_dict(patch.graph)
    data["name"] = name
    data["rows"] = rows
    data["cols"] = cols
    data["coords"] = [[x, y] for x, y in patch.coords]
    ann = {}
    a = patch.annotations
    if a.independent_set is not None:
        ann["independent_set"] = sorted(a.independent_set)
    if a.forest_vertices is not None:
        ann["forest_vertices"] = sorted(a.forest_vertices)
    if a.patch_cells is not None:
        ann["patch_cells"] = [
            {"cell": list(c.cell), "u": c.u, "v": c.v} for c in a.patch_cells
        ]
    if a.matching_pairs is not None:
        ann["matching_pairs"] = [
            {"u": p.u, "v": p.v, "w": list(p.w)} for p in a.matching_pairs
        ]
    if a.grid_faces is not None:
        ann["grid_faces"] = [
            {
                "pair": f.pair_index,
                "w12": list(f.w12),
                "w34": list(f.w34),
                "free_in": list(f.free_in),
                "free_out": list(f.free_out),
                "w12_incoming": f.w12_incoming,
                "last": f.last,
            }
            for f in a.grid_faces
        ]
    if ann:
        data["annotations"] = ann
    serialize.dump(data, output)
    click.echo(f"wrote {name} {rows}x{cols}: "
               f"{patch.graph.vertex_count} vertices to {output}")


# -- color -------------------------------------------------------------------


@main.command()
@click.option("--algorithm", required=True,
              type=click.Choice(["forest", "patch", "linear"]))
@click.option("--patch", "patch_file", required=True, type=click.Path(exists=True))
@click.option("--labels", "labels_file", required=True, type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
def color(algorithm, patch_file, labels_file, output):
    """Run a constructive colorer over a labeled patch."""
    from .coloring import color_lattice_linear, color_lattice_patchwise
    from .coloring import color_forest, decompose

    data = serialize.load(patch_file)
    name = data.get("name")
    if name not in LATTICE_NAMES:
        raise click.ClickException("patch file carries no known lattice name")
    rows, cols = _infer_window(data, name)
    patch = generate(name, PatchParams(rows, cols))
    if serialize.graph_to_dict(patch.graph)["edges"] != data["edges"]:
        raise click.ClickException("patch file does not match its generator")
    labels = serialize.labels_from_dict(serialize.load(labels_file))
    if algorithm == "forest":
        scheme = color_forest(patch.graph.with_labels(labels), decompose(patch))
    elif algorithm == "patch":
        scheme = color_lattice_patchwise(patch, labels)
    else:
        scheme = color_lattice_linear(patch, labels)
    serialize.dump(serialize.coloring_to_dict(scheme.coloring, scheme.t), output)
    click.echo(f"{algorithm}: t={scheme.t} palette={scheme.r} -> {output}")


def _infer_window(data, name):
    rows = data.get("rows")
    cols = data.get("cols")
    if rows and cols:
        return rows, cols
    for r in range(1, 12):
        for c in range(1, 12):
            p = generate(name, PatchParams(r, c))
            if p.graph.vertex_count == data["vertex_count"] and len(
                p.graph.edges
            ) == len(data["edges"]):
                return r, c
    raise click.ClickException("cannot infer the patch window size")


@main.command()
@click.option("--graph", "graph_file", required=True, type=click.Path(exists=True))
@click.option("--coloring", "coloring_file", required=True,
              type=click.Path(exists=True))
def verify(graph_file, coloring_file):
    """Check a coloring file against a graph file."""
    g = serialize.graph_from_dict(serialize.load(graph_file))
    coloring, t = serialize.coloring_from_dict(serialize.load(coloring_file))
    report = verify_coloring(g, coloring, t)
    click.echo(json.dumps({
        "valid": report.valid,
        "violations": [[u, v, l.value] for u, v, l in report.violations],
        "range_used": report.range_used,
    }))
    if not report.valid:
        sys.exit(1)


# -- solve -------------------------------------------------------------------


@main.command()
@click.option("--graph", "graph_file", required=True, type=click.Path(exists=True))
@click.option("--r", "r", type=int, default=None)
@click.option("--t", "t", type=int, default=None)
@click.option("--budget", type=int, default=10**8)
@click.option("--min-colors", "minimize", is_flag=True)
@click.option("--r-max", type=int, default=16)
def solve(graph_file, r, t, budget, minimize, r_max):
    """Decide threshold-colorability, or minimize the palette."""
    g = serialize.graph_from_dict(serialize.load(graph_file))
    if minimize:
        found = min_colors(g, t=t, r_max=r_max, budget=budget)
        if found is None:
            click.echo(json.dumps({"status": "none", "r_max": r_max}))
        else:
            rr, tt, witness = found
            click.echo(json.dumps({
                "status": "SAT", "r": rr, "t": tt,
                "colors": [witness[v] for v in range(g.vertex_count)],
            }))
        return
    if r is None:
        raise click.ClickException("--r is required unless --min-colors is set")
    result = decide(SolveQuery(g, r=r, t=t, budget=budget))
    payload = {"status": result.status, "t": result.t, "nodes": result.nodes_explored}
    if result.coloring is not None:
        payload["colors"] = [result.coloring[v] for v in range(g.vertex_count)]
    click.echo(json.dumps(payload))


# -- hardness ----------------------------------------------------------------


@main.group()
def hardness():
    """Non-colorability gadgets and spirals."""


@hardness.command("gadget")
@click.option("--name", required=True,
              type=click.Choice(["fig6a", "fig6b", "fig6c", "fig6d", "fig6e"]))
@click.option("-o", "--output", required=True, type=click.Path())
def hardness_gadget(name, output):
    from .hardness import build_gadget

    g = build_gadget(name)
    serialize.dump(serialize.graph_to_dict(g), output)
    click.echo(f"wrote {name}: {g.vertex_count} vertices to {output}")


@hardness.command("spiral")
@click.option("--family", required=True,
              type=click.Choice(["square", "d3464", "d3636"]))
@click.option("--n", "n", type=int, default=None, help="square spiral size (odd)")
@click.option("--size", type=int, default=None, help="dual spiral ring count")
@click.option("-o", "--output", required=True, type=click.Path())
def hardness_spiral(family, n, size, output):
    from .hardness import build_dual_spiral, build_square_spiral

    if family == "square":
        if n is None:
            raise click.ClickException("--n is required for the square family")
        g = build_square_spiral(n)
    else:
        if size is None:
            raise click.ClickException("--size is required for dual families")
        g = build_dual_spiral(family, size)
    serialize.dump(serialize.graph_to_dict(g), output)
    click.echo(f"wrote {family} spiral: {g.vertex_count} vertices to {output}")


# -- puzzle ------------------------------------------------------------------


@main.group()
def puzzle():
    """Puzzle generation and play."""


@puzzle.command("gen")
@click.option("--lattice", "name", required=True, type=click.Choice(LATTICE_NAMES))
@click.option("--rows", required=True, type=int)
@click.option("--cols", required=True, type=int)
@click.option("--far-prob", type=float, default=0.35)
@click.option("--seed", type=int, default=0)
@click.option("-o", "--output", required=True, type=click.Path())
def puzzle_gen(name, rows, cols, far_prob, seed, output):
    from .puzzle import generate_puzzle
    from .service import puzzle_payload

    p = generate_puzzle(name, rows, cols, far_prob, seed)
    serialize.dump(puzzle_payload(p), output)
    click.echo(f"wrote puzzle {p.puzzle_id} to {output}")


@puzzle.command("check")
@click.option("--puzzle", "puzzle_file", required=True, type=click.Path(exists=True))
@click.option("--assignment", "assignment_file", required=True,
              type=click.Path(exists=True))
def puzzle_check(puzzle_file, assignment_file):
    from .puzzle import check_state, generate_puzzle, parse_puzzle_id

    data = serialize.load(puzzle_file)
    p = generate_puzzle(*parse_puzzle_id(data["puzzle_id"]))
    assignment = {int(k): v for k, v in serialize.load(assignment_file).items()}
    statuses, solved = check_state(p, assignment)
    click.echo(json.dumps({"edges": statuses, "solved": solved}))


@puzzle.command("hint")
@click.option("--puzzle", "puzzle_file", required=True, type=click.Path(exists=True))
@click.option("--assignment", "assignment_file", default=None,
              type=click.Path(exists=True))
def puzzle_hint(puzzle_file, assignment_file):
    from .puzzle import generate_puzzle, hint, parse_puzzle_id

    data = serialize.load(puzzle_file)
    p = generate_puzzle(*parse_puzzle_id(data["puzzle_id"]))
    assignment = {}
    if assignment_file:
        assignment = {int(k): v for k, v in serialize.load(assignment_file).items()}
    status, move = hint(p, assignment)
    if status == "hint":
        click.echo(json.dumps({"vertex": move[0], "color": move[1]}))
    else:
        click.echo(json.dumps({"status": status}))


@puzzle.command("solve")
@click.option("--puzzle", "puzzle_file", required=True, type=click.Path(exists=True))
def puzzle_solve(puzzle_file):
    from .puzzle import generate_puzzle, parse_puzzle_id

    data = serialize.load(puzzle_file)
    p = generate_puzzle(*parse_puzzle_id(data["puzzle_id"]))
    click.echo(json.dumps({
        "colors": [p.witness[v] for v in range(p.patch.graph.vertex_count)],
        "t": p.t,
    }))


# -- serve -------------------------------------------------------------------


@main.command()
@click.option("--port", type=int, default=8080)
@click.option("--static", "static_dir", type=click.Path(), default=None)
@click.option("--allow-solve", is_flag=True,
              help="expose the witness endpoint (debugging)")
def serve(port, static_dir, allow_solve):
    """Run the HTTP API (and optionally the built UI)."""
    from .service import serve as run

    run(port=port, static_dir=static_dir, allow_solve=allow_solve)


if __name__ == "__main__":
    main()
