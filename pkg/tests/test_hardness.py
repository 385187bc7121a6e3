import pytest

from happy_edges.graph import FAR, NEAR
from happy_edges.hardness import (
    GADGET_HOSTS,
    GADGET_NAMES,
    build_dual_spiral,
    build_gadget,
    build_square_spiral,
    embeds_in,
    has_cycle_with_one_far,
)
from happy_edges.lattices import PatchParams, generate
from happy_edges.solver import SolveQuery, decide, min_colors


def test_k4_gadget_shape():
    g = build_gadget("fig6d")
    assert g.vertex_count == 4
    assert len(g.edges) == 6
    labels = [l for *_, l in g.edges]
    assert labels.count(FAR) == 3 and labels.count(NEAR) == 3


def test_double_apex_triangle_shape():
    g = build_gadget("fig6a")
    # far triangle 0,1,2 plus a near path bridging each far pair
    assert g.label_of(0, 1) == FAR
    assert g.label_of(1, 2) == FAR
    assert g.label_of(0, 2) == FAR
    assert g.label_of(5, 0) == NEAR and g.label_of(5, 2) == NEAR


def test_unknown_gadget():
    with pytest.raises(ValueError):
        build_gadget("fig6z")


@pytest.mark.parametrize("name", GADGET_NAMES)
def test_gadgets_unsat_small_palettes(name):
    g = build_gadget(name)
    for r in range(1, 6):
        assert decide(SolveQuery(g, r=r)).status == "UNSAT"


@pytest.mark.parametrize("name", GADGET_NAMES)
def test_gadgets_have_one_far_cycle(name):
    assert has_cycle_with_one_far(build_gadget(name))


@pytest.mark.parametrize("name", GADGET_NAMES)
def test_gadgets_embed_in_their_lattices(name):
    pattern = build_gadget(name)
    for host_name in GADGET_HOSTS[name]:
        host = generate(host_name, PatchParams(3, 3)).graph
        assert embeds_in(pattern, host), f"{name} does not embed in {host_name}"


def test_embeds_in_rejects_impossible_pattern():
    # K4 cannot embed in the (bipartite) square lattice
    k4 = build_gadget("fig6d")
    host = generate("4^4", PatchParams(3, 3)).graph
    assert not embeds_in(k4, host)


def test_square_spiral_smallest():
    g = build_square_spiral(1)
    assert g.vertex_count == 1
    assert g.edges == []


def test_square_spiral_three():
    g = build_square_spiral(3)
    assert g.vertex_count == 9
    near = [e for e in g.edges if e[2] == NEAR]
    far = [e for e in g.edges if e[2] == FAR]
    assert len(near) == 8 and len(far) == 4
    # near edges form a single path: degrees <= 2, connected, acyclic
    deg = {}
    for u, v, _ in near:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    assert max(deg.values()) == 2
    assert sum(1 for d in deg.values() if d == 1) == 2


def test_square_spiral_rejects_even():
    with pytest.raises(ValueError):
        build_square_spiral(4)


def test_square_spiral_matches_grid_block():
    g = build_square_spiral(7)
    assert g.vertex_count == 49
    assert len(g.edges) == 2 * 7 * 6


def test_square_spiral_growth():
    values = []
    for n in (1, 3, 5):
        result = min_colors(build_square_spiral(n), t=1, r_max=10)
        assert result is not None
        values.append(result[0])
    assert values[0] < values[1] < values[2]


def _near_degrees(g):
    deg = {}
    for u, v, label in g.edges:
        if label == NEAR:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
    return deg


def test_dual_spiral_path_shape():
    g = build_dual_spiral("d3464", 2)
    deg = _near_degrees(g)
    assert max(deg.values()) <= 2


def test_dual_spiral_caterpillar_shape():
    g = build_dual_spiral("d3636", 2)
    deg = _near_degrees(g)
    # tree whose non-leaf vertices form a path
    near = [(u, v) for u, v, l in g.edges if l == NEAR]
    assert len(near) == len(deg) - 1  # acyclic + connected
    spine = {v for v, d in deg.items() if d > 1}
    adj = {}
    for u, v in near:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    for v in spine:
        assert len([w for w in adj[v] if w in spine]) <= 2


@pytest.mark.parametrize("family", ["d3464", "d3636"])
def test_dual_spirals_embed(family):
    name = "D(3.4.6.4)" if family == "d3464" else "D(3.6.3.6)"
    g = build_dual_spiral(family, 1)
    host = generate(name, PatchParams(3, 3)).graph
    assert embeds_in(g, host)


@pytest.mark.parametrize("family", ["d3464", "d3636"])
def test_dual_spiral_growth(family):
    first = min_colors(build_dual_spiral(family, 1), t=1, r_max=8)
    second = min_colors(build_dual_spiral(family, 2), t=1, r_max=8)
    assert first is not None and second is not None
    assert first[0] < second[0]


@pytest.mark.parametrize("family", ["d3464", "d3636"])
def test_dual_spirals_have_one_far_cycle(family):
    assert has_cycle_with_one_far(build_dual_spiral(family, 1))


def test_spirals_deterministic():
    assert build_dual_spiral("d3464", 1) == build_dual_spiral("d3464", 1)
    assert build_square_spiral(5) == build_square_spiral(5)
