import json

from click.testing import CliRunner

from happy_edges.cli import main
from happy_edges.serialize import load


def test_lattice_gen_and_solve(tmp_path):
    runner = CliRunner()
    patch_file = tmp_path / "patch.json"
    result = runner.invoke(main, [
        "lattice", "gen", "--name", "4^4", "--rows", "2", "--cols", "2",
        "-o", str(patch_file),
    ])
    assert result.exit_code == 0, result.output
    data = load(str(patch_file))
    assert data["vertex_count"] == 9
    assert len(data["edges"]) == 12
    assert len(data["coords"]) == 9

    result = runner.invoke(main, [
        "solve", "--graph", str(patch_file), "--r", "2",
    ])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["status"] == "SAT"  # all edges default near


def test_color_forest_roundtrip(tmp_path):
    runner = CliRunner()
    patch_file = tmp_path / "patch.json"
    labels_file = tmp_path / "labels.json"
    coloring_file = tmp_path / "coloring.json"
    result = runner.invoke(main, [
        "lattice", "gen", "--name", "6^3", "--rows", "2", "--cols", "2",
        "-o", str(patch_file),
    ])
    assert result.exit_code == 0, result.output
    n_edges = len(load(str(patch_file))["edges"])
    labels = ["F" if i % 3 == 0 else "N" for i in range(n_edges)]
    labels_file.write_text(json.dumps({"version": 1, "labels": labels}))

    result = runner.invoke(main, [
        "color", "--algorithm", "forest", "--patch", str(patch_file),
        "--labels", str(labels_file), "-o", str(coloring_file),
    ])
    assert result.exit_code == 0, result.output
    coloring = load(str(coloring_file))
    assert coloring["t"] == 1

    # the verifier accepts it against the labeled graph
    graph_file = tmp_path / "labeled.json"
    data = load(str(patch_file))
    data["edges"] = [
        [u, v, l] for (u, v, _), l in zip(data["edges"], labels)
    ]
    graph_file.write_text(json.dumps(data))
    result = runner.invoke(main, [
        "verify", "--graph", str(graph_file), "--coloring", str(coloring_file),
    ])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["valid"] is True


def test_hardness_gadget_cli(tmp_path):
    runner = CliRunner()
    out = tmp_path / "g.json"
    result = runner.invoke(main, ["hardness", "gadget", "--name", "fig6d",
                                  "-o", str(out)])
    assert result.exit_code == 0, result.output
    data = load(str(out))
    assert data["vertex_count"] == 4
    labels = [l for _, _, l in data["edges"]]
    assert labels.count("F") == 3


def test_hardness_spiral_cli(tmp_path):
    runner = CliRunner()
    out = tmp_path / "s.json"
    result = runner.invoke(main, ["hardness", "spiral", "--family", "square",
                                  "--n", "3", "-o", str(out)])
    assert result.exit_code == 0, result.output
    assert load(str(out))["vertex_count"] == 9


def test_puzzle_cli_roundtrip(tmp_path):
    runner = CliRunner()
    puzzle_file = tmp_path / "p.json"
    result = runner.invoke(main, [
        "puzzle", "gen", "--lattice", "6^3", "--rows", "2", "--cols", "2",
        "--seed", "4", "-o", str(puzzle_file),
    ])
    assert result.exit_code == 0, result.output

    result = runner.invoke(main, ["puzzle", "hint", "--puzzle", str(puzzle_file)])
    assert result.exit_code == 0, result.output
    move = json.loads(result.output)
    assert "vertex" in move

    solution = runner.invoke(main, ["puzzle", "solve", "--puzzle", str(puzzle_file)])
    colors = json.loads(solution.output)["colors"]
    assignment_file = tmp_path / "a.json"
    assignment_file.write_text(json.dumps({str(v): c for v, c in enumerate(colors)}))
    result = runner.invoke(main, [
        "puzzle", "check", "--puzzle", str(puzzle_file),
        "--assignment", str(assignment_file),
    ])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["solved"] is True


def test_solve_min_colors_cli(tmp_path):
    runner = CliRunner()
    out = tmp_path / "g.json"
    runner.invoke(main, ["hardness", "spiral", "--family", "square", "--n", "3",
                         "-o", str(out)])
    result = runner.invoke(main, [
        "solve", "--graph", str(out), "--min-colors", "--t", "1", "--r-max", "6",
    ])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["status"] == "SAT"
    assert body["r"] == 3
