import pytest

from happy_edges.graph import verify_coloring
from happy_edges.lattices import CONSTRUCTIVE
from happy_edges.puzzle import (
    check_state,
    generate_puzzle,
    hint,
    parse_puzzle_id,
)


def test_hexagonal_puzzle_always_succeeds():
    p = generate_puzzle("6^3", 3, 3, far_prob=0.4, seed=7)
    assert p.t == 1
    assert p.palette == 5
    g = p.labeled_graph()
    assert verify_coloring(g, p.witness, p.t).valid
    assert all(0 <= c < p.palette for c in p.witness.values())


def test_square_puzzle_solver_backed():
    p = generate_puzzle("4^4", 3, 3, far_prob=0.3, seed=1)
    assert p.t == 1
    assert verify_coloring(p.labeled_graph(), p.witness, 1).valid


def test_all_near_puzzle_trivial():
    p = generate_puzzle("4^4", 2, 2, far_prob=0.0, seed=5)
    from happy_edges.graph import NEAR

    assert all(l == NEAR for l in p.labels)
    assert verify_coloring(p.labeled_graph(), {v: 0 for v in p.witness}, p.t).valid


def test_reproducible():
    a = generate_puzzle("6^3", 3, 3, 0.35, seed=11)
    b = generate_puzzle("6^3", 3, 3, 0.35, seed=11)
    assert a.labels == b.labels
    assert a.witness == b.witness
    assert a.puzzle_id == b.puzzle_id
    c = generate_puzzle("6^3", 3, 3, 0.35, seed=12)
    assert a.labels != c.labels


def test_puzzle_id_roundtrip():
    p = generate_puzzle("D(3^2.4.3.4)", 1, 1, 0.5, seed=3)
    assert parse_puzzle_id(p.puzzle_id) == ("D(3^2.4.3.4)", 1, 1, 0.5, 3)


def test_oversized_solver_board_rejected():
    with pytest.raises(ValueError):
        generate_puzzle("4^4", 8, 8, 0.3, seed=0)


@pytest.mark.parametrize("name", CONSTRUCTIVE)
def test_constructive_lattices_generate(name):
    p = generate_puzzle(name, 2, 2, 0.5, seed=1)
    assert verify_coloring(p.labeled_graph(), p.witness, p.t).valid


def test_check_state_empty():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=2)
    statuses, solved = check_state(p, {})
    assert not solved
    assert set(statuses) == {"undetermined"}


def test_check_state_witness_solves():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=2)
    statuses, solved = check_state(p, p.witness)
    assert solved
    assert set(statuses) == {"happy"}


def test_single_perturbation_marks_one_edge():
    p = generate_puzzle("6^3", 2, 2, 0.0, seed=4)  # all near, witness all zero
    g = p.labeled_graph()
    v = 0
    broken = dict(p.witness)
    broken[v] = min(p.palette - 1, p.witness[v] + 2)
    statuses, solved = check_state(p, broken)
    assert not solved
    unhappy = [e for e, s in zip(g.edges, statuses) if s == "unhappy"]
    assert unhappy
    assert all(v in (u, w) for u, w, _ in unhappy)


def test_check_rejects_out_of_palette():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=2)
    with pytest.raises(ValueError):
        check_state(p, {0: p.palette})


def test_hint_on_empty_board_is_witness_value():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=9)
    status, move = hint(p, {})
    assert status == "hint"
    vertex, color = move
    assert p.witness[vertex] == color


def test_hint_fills_last_gap():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=9)
    partial = dict(p.witness)
    del partial[3]
    status, move = hint(p, partial)
    assert status == "hint"
    assert move[0] == 3
    full = dict(partial)
    full[move[0]] = move[1]
    _, solved = check_state(p, full)
    assert solved


def test_hint_complete():
    p = generate_puzzle("6^3", 2, 2, 0.4, seed=9)
    status, move = hint(p, p.witness)
    assert status == "complete"


def test_hint_inconsistent():
    p = generate_puzzle("4^4", 2, 2, 0.5, seed=21)
    g = p.labeled_graph()
    # force both endpoints of a far edge equal: no extension exists
    far_edge = next(((u, v) for u, v, l in g.edges if l.value == "F"), None)
    if far_edge is None:
        pytest.skip("no far edge in this board")
    u, v = far_edge
    status, move = hint(p, {u: 0, v: 0})
    assert status == "inconsistent"


def test_hint_never_suggests_dead_end():
    p = generate_puzzle("4^4", 2, 2, 0.45, seed=33)
    state: dict[int, int] = {}
    for _ in range(p.patch.graph.vertex_count):
        status, move = hint(p, state)
        assert status == "hint"
        state[move[0]] = move[1]
        status2, _ = hint(p, state)
        assert status2 in ("hint", "complete")
    _, solved = check_state(p, state)
    assert solved


def test_solved_accepts_alternate_solutions():
    # all-near board: the witness is all zeros, but any constant works
    p = generate_puzzle("6^3", 2, 2, far_prob=0.0, seed=8)
    alternate = {v: 1 for v in range(p.patch.graph.vertex_count)}
    assert alternate != p.witness
    statuses, solved = check_state(p, alternate)
    assert solved


def test_generation_error_carries_attempts(monkeypatch):
    import happy_edges.puzzle as puzzle_module
    from happy_edges.puzzle import GenerationError

    # a palette of one color cannot satisfy any far edge, so every retry fails
    monkeypatch.setattr(puzzle_module, "SOLVER_R_MAX", 1)
    monkeypatch.setattr(puzzle_module, "MAX_RETRIES", 3)
    with pytest.raises(GenerationError) as excinfo:
        generate_puzzle("4^4", 2, 2, far_prob=1.0, seed=0)
    assert excinfo.value.attempts == 3
