"""Constrained coloring and the rigid-free emptiness test."""

import pytest

from squaregeo import (
    NecessaryStatus,
    build_chord_graph,
    build_graph,
    check_necessary,
    check_rigid_free,
    color_constrained,
    compute_ab_sets,
    validate_bab,
)
from squaregeo.chords import RigidPair
from squaregeo.errors import ScopeError
from squaregeo.necessary import (
    BLUE,
    RED,
    ColoringRefutation,
    TwoColoring,
    rigid_region_sets,
)

from conftest import enumerate_bab_instances
from oracles import rigid_pairs_by_definition, square_geometric_by_order_search

# Both private sides of this 7-vertex instance trap a rigid pair, so the
# rigid-free disjunction fails; the order-search oracle confirms there is no
# valid order pair at all.
RIGID_FAIL_EDGES = [
    (0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4),
    (2, 3), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
]

# A near miss for the same shape: vertex 0 meets the opposite region set in
# two y's, yet no single rigid pair lies inside N_Y(0), and the instance is
# square geometric. Distinguishes the emptiness test from counting.
REGION_OVERSHOOT_EDGES = [
    (0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4),
    (2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6),
]

FORCED_CONFLICT_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 4),
    (2, 3), (2, 5), (3, 4), (4, 5),
]


def _instance(n, edges, xa, xb, y):
    g = build_graph(n, edges)
    p = validate_bab(g, xa, xb, y)
    return g, p, build_chord_graph(g, p)


def test_g8_coloring_frozen(g8):
    g, p = g8
    cg = build_chord_graph(g, p)
    col = color_constrained(cg, compute_ab_sets(cg, p))
    assert isinstance(col, TwoColoring)
    assert sorted(col.red) == [(0, 5), (0, 6), (0, 7), (1, 6), (1, 7)]
    assert sorted(col.blue) == [(2, 4), (3, 4), (3, 5)]
    assert col.color_of((0, 5)) == RED
    assert col.color_of((3, 4)) == BLUE
    assert col.color_of((0, 3)) is None  # isolated node stays uncolored


def test_c4_coloring_canonical(c4):
    g, p = c4
    cg = build_chord_graph(g, p)
    col = color_constrained(cg, compute_ab_sets(cg, p))
    assert col.red == frozenset({(0, 3)})
    assert col.blue == frozenset({(1, 2)})


def test_forced_nodes_land_in_their_classes(g8):
    g, p = g8
    cg = build_chord_graph(g, p)
    ab = compute_ab_sets(cg, p)
    col = color_constrained(cg, ab)
    assert set(ab.script_a) <= col.red
    assert set(ab.script_b) <= col.blue


def test_triangle6_odd_cycle(triangle6):
    g, p = triangle6
    cg = build_chord_graph(g, p)
    ref = color_constrained(cg, compute_ab_sets(cg, p))
    assert isinstance(ref, ColoringRefutation)
    assert ref.kind == "odd-cycle"
    assert ref.cycle == ((1, 3), (0, 5), (2, 4))
    assert ref.detail == "odd cycle of length 3"
    nec = check_necessary(g, p, cg)
    assert nec.status is NecessaryStatus.FAIL
    assert nec.reason == "odd-cycle"
    assert nec.refutation == ref


def test_odd_cycle_is_really_a_cycle(triangle6):
    g, p = triangle6
    cg = build_chord_graph(g, p)
    ref = color_constrained(cg, compute_ab_sets(cg, p))
    k = len(ref.cycle)
    assert k % 2 == 1
    for i, node in enumerate(ref.cycle):
        nxt = ref.cycle[(i + 1) % k]
        assert (cg.adj[cg.node_index(node)] >> cg.node_index(nxt)) & 1


def test_forced_conflict_refutation():
    g, p, cg = _instance(6, FORCED_CONFLICT_EDGES, [0, 1, 2], [1, 2, 3], [4, 5])
    ref = color_constrained(cg, compute_ab_sets(cg, p))
    assert isinstance(ref, ColoringRefutation)
    assert ref.kind == "forced-conflict"
    assert ref.conflict == ((0, 5), (3, 5))
    assert ref.detail == "a forced-red and a forced-blue node share a color class"
    nec = check_necessary(g, p, cg)
    assert nec.status is NecessaryStatus.FAIL
    assert nec.reason == "forced-conflict"


def test_disconnected_chord_graph_is_out_of_scope(disconnected7):
    g, p = disconnected7
    cg = build_chord_graph(g, p)
    with pytest.raises(ScopeError):
        color_constrained(cg, compute_ab_sets(cg, p))
    nec = check_necessary(g, p, cg)
    assert nec.status is NecessaryStatus.OUT_OF_SCOPE
    assert "components" in nec.reason


def test_region_sets_frozen(g8, c4):
    g, p = g8
    cg = build_chord_graph(g, p)
    assert rigid_region_sets(cg, p) == (frozenset({4, 5, 6, 7}), frozenset({4, 5, 6, 7}))
    g, p = c4
    cg = build_chord_graph(g, p)
    assert rigid_region_sets(cg, p) == (frozenset({2, 3}), frozenset({2, 3}))


def test_region_sets_skip_isolated_nodes(g8):
    """(0, 3) is an isolated chord node on a private pair; neither end of it
    may contribute, which is invisible here but pinned by construction: the
    region sets collect y's only from nodes with a chord-graph neighbor."""
    g, p = g8
    cg = build_chord_graph(g, p)
    ra, rb = rigid_region_sets(cg, p)
    live = {cg.nodes[i] for i in range(len(cg.nodes)) if cg.adj[i]}
    assert ra == frozenset(y for x, y in live if x in p.x_a)
    assert rb == frozenset(y for x, y in live if x in p.x_b)


def test_g8_rigid_free(g8):
    g, p = g8
    cg = build_chord_graph(g, p)
    rfr = check_rigid_free(g, p, cg)
    assert (rfr.side_a_ok, rfr.side_b_ok) == (True, True)
    # Quantifying over the whole cliques instead flips both sides: shared
    # vertex 2 traps {1.5, 3.6} and shared vertex 1 traps {0.4, 2.5}.
    assert (rfr.side_a_ok_wide, rfr.side_b_ok_wide) == (False, False)
    assert rfr.a_violations == ()
    assert rfr.b_violations == ()
    assert rfr.holds


def test_rigid_free_failure_carries_witnesses():
    g, p, cg = _instance(7, RIGID_FAIL_EDGES, [0, 1, 2], [1, 2, 3], [4, 5, 6])
    rfr = check_rigid_free(g, p, cg)
    assert not rfr.side_a_ok and not rfr.side_b_ok
    assert not rfr.holds
    assert rfr.a_violations == ((0, RigidPair(x1=1, y1=4, x2=3, y2=5)),)
    assert rfr.b_violations == ((3, RigidPair(x1=0, y1=5, x2=2, y2=6)),)
    nec = check_necessary(g, p, cg)
    assert nec.status is NecessaryStatus.FAIL
    assert nec.reason == "rigid-free"
    assert not square_geometric_by_order_search(g)


def test_region_overshoot_alone_is_not_a_violation():
    g, p, cg = _instance(7, REGION_OVERSHOOT_EDGES, [0, 1, 2], [1, 2, 3], [4, 5, 6])
    ra, rb = rigid_region_sets(cg, p)
    ny0 = {y for y in p.y if g.adjacent(0, y)}
    assert len(ny0 & rb) == 2
    rfr = check_rigid_free(g, p, cg)
    assert rfr.side_a_ok
    assert rfr.holds
    nec = check_necessary(g, p, cg)
    assert nec.status is NecessaryStatus.PASS
    assert square_geometric_by_order_search(g)


def _sides_by_scan(g, p):
    """Quantifier-by-quantifier restatement of the rigid-free conditions."""
    pairs = rigid_pairs_by_definition(g, p)
    shared = set(p.shared)

    def trapped(v, other_private):
        nyv = {y for y in p.y if g.adjacent(v, y)}
        for (x1, y1), (x2, y2) in pairs:
            ends = {x1, x2}
            permitted = ends <= shared or (
                len(ends & shared) == 1 and len(ends & other_private) == 1
            )
            if permitted and y1 in nyv and y2 in nyv:
                return True
        return False

    a_priv, b_priv = set(p.a_only), set(p.b_only)
    return (
        not any(trapped(v, b_priv) for v in a_priv),
        not any(trapped(v, a_priv) for v in b_priv),
        not any(trapped(v, b_priv) for v in p.x_a),
        not any(trapped(v, a_priv) for v in p.x_b),
    )


def test_rigid_free_matches_direct_scan_small():
    for n in range(2, 6):
        for g, p in enumerate_bab_instances(n):
            cg = build_chord_graph(g, p)
            rfr = check_rigid_free(g, p, cg)
            got = (rfr.side_a_ok, rfr.side_b_ok, rfr.side_a_ok_wide, rfr.side_b_ok_wide)
            assert got == _sides_by_scan(g, p), (g.edges(), sorted(p.x_a), sorted(p.x_b))


def test_rigid_free_matches_direct_scan_generated():
    from squaregeo import generate_bab
    from squaregeo.errors import GenerationError

    shapes = [(1, 2, 1, 3), (2, 2, 1, 2), (1, 2, 2, 2), (2, 2, 2, 2), (1, 3, 1, 3)]
    for seed in range(120):
        try:
            g, p = generate_bab(shapes[seed % len(shapes)], 0.25 + (seed % 11) / 20, seed)
        except GenerationError:
            continue
        cg = build_chord_graph(g, p)
        rfr = check_rigid_free(g, p, cg)
        got = (rfr.side_a_ok, rfr.side_b_ok, rfr.side_a_ok_wide, rfr.side_b_ok_wide)
        assert got == _sides_by_scan(g, p), (g.edges(), sorted(p.x_a), sorted(p.x_b))


def test_pass_reports_both_checks(g8):
    g, p = g8
    nec = check_necessary(g, p)
    assert nec.status is NecessaryStatus.PASS
    assert nec.reason == ""
    assert isinstance(nec.coloring, TwoColoring)
    assert nec.rigid_free is not None and nec.rigid_free.holds
