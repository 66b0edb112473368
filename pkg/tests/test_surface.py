import random

import pytest
from hypothesis import given, settings, strategies as st

from snarklab.errors import (
    BudgetExceeded,
    IllegalContraction,
    MalformedRotation,
    NotTorus,
)
from snarklab import graphs
from snarklab.surface import PLANE, TORUS, RotationGraph, dart, reverse


def test_triangle_faces():
    g = graphs.triangle()
    fs = g.faces()
    assert len(fs) == 2
    assert all(len(f) == 3 for f in fs)
    g.check_euler()


def test_k4_is_plane_triangulation():
    g = graphs.k4()
    assert g.euler_characteristic() == 2
    assert g.is_triangulation()


def test_grid_face_and_edge_counts():
    for rows, cols in [(3, 3), (3, 4), (4, 5), (2, 3), (2, 2)]:
        g = graphs.torus_grid(rows, cols)
        n = rows * cols
        assert g.vertex_count == n
        assert g.edge_count == 3 * n
        assert len(g.faces()) == 2 * n
        assert g.is_triangulation()
        g.check_euler()


def test_one_vertex_two_loops_single_square_face():
    g = graphs.one_vertex_two_loops()
    fs = g.faces()
    assert len(fs) == 1
    assert fs[0].length == 4
    g.check_euler()


def test_malformed_rotation_rejected():
    with pytest.raises(MalformedRotation):
        RotationGraph(PLANE, [(0, 1), (0,)])  # dart 0 duplicated
    with pytest.raises(MalformedRotation):
        RotationGraph(PLANE, [(0,), (2,)])  # dart 1 missing


def test_dual_of_cube_is_octahedron():
    d = graphs.cube().dual()
    assert d.is_embedded_isomorphic(graphs.octahedron())


def test_dual_involution():
    for g in [graphs.k4(), graphs.cube(), graphs.torus_grid(3, 3),
              graphs.prism3()]:
        assert g.dual().dual().is_embedded_isomorphic(g)


def test_dual_of_torus_triangulation_is_cubic():
    g = graphs.torus_grid(3, 3).dual()
    assert g.is_cubic()
    g.check_euler()


def test_delete_and_suppress_identity():
    g = graphs.k4()
    h = g.delete_and_suppress([])
    assert h.is_embedded_isomorphic(g)


def test_delete_and_suppress_k4_single_edge():
    g = graphs.k4()
    e = next(iter(g.edge_ids()))
    h = g.delete_and_suppress([e])
    # deleting one K4 edge and suppressing both degree-2 ends leaves a
    # triple edge on two vertices (still cubic)
    assert h.vertex_count == 2
    assert h.edge_count == 3
    assert h.is_cubic()
    assert not any(h.is_loop(e2) for e2 in h.edge_ids())


def test_delete_and_suppress_petersen_edge():
    g = graphs.petersen_plane_like()
    e = next(iter(g.edge_ids()))
    h = g.delete_and_suppress([e])
    assert h.vertex_count == 8
    assert h.is_cubic()


def test_delete_and_suppress_rejects_degree_violations():
    g = graphs.torus_grid(3, 3)  # degree 6 everywhere
    with pytest.raises(IllegalContraction):
        g.delete_and_suppress([0])


def test_contract_identity_and_triangle():
    g = graphs.triangle()
    assert g.contract_edges([]).is_embedded_isomorphic(g)
    e = next(iter(g.edge_ids()))
    h = g.contract_edges([e])
    assert h.vertex_count == 2
    assert h.edge_count == 2  # doubled edge


def test_contract_path_merges_component():
    g = graphs.torus_grid(3, 4)
    # grab a 6-edge path via BFS tree edges
    dist = g.distances_from(0)
    tree = []
    seen = {0}
    frontier = [0]
    while frontier and len(tree) < 6:
        v = frontier.pop(0)
        for d in g.rotations[v]:
            w = g.dart_tail[reverse(d)]
            if w not in seen:
                seen.add(w)
                tree.append(d >> 1)
                frontier.append(w)
            if len(tree) == 6:
                break
    h = g.contract_edges(tree)
    assert h.vertex_count == g.vertex_count - 6


def test_edge_provenance_survives_surgery():
    g = graphs.k4()
    e = next(iter(g.edge_ids()))
    h = g.delete_and_suppress([e])
    srcs = set()
    for eid in h.edge_ids():
        srcs.update(h.edge_sources.get(eid, (eid,)))
    assert e not in srcs
    assert srcs <= set(g.edge_ids())


def test_representativity_one_vertex_map():
    assert graphs.one_vertex_two_loops().representativity() == 1


def test_representativity_grid():
    assert graphs.torus_grid(5, 5).representativity() == 5
    assert graphs.torus_grid(3, 5).representativity() == 3


def test_representativity_requires_torus():
    with pytest.raises(NotTorus):
        graphs.k4().representativity()


def brute_shortest_noncontractible(g):
    """Exhaustive simple-cycle search used as the oracle."""
    sig = g.homology_signatures()
    best = None
    n = g.vertex_count

    def extend(path_darts, used_vertices, start):
        nonlocal best
        v = g.dart_tail[reverse(path_darts[-1])] if path_darts else start
        if path_darts and v == start:
            s = g.walk_signature(path_darts, sig)
            if s != (0, 0):
                L = len(path_darts)
                if best is None or L < best:
                    best = L
            return
        if best is not None and len(path_darts) >= best:
            return
        for d in g.rotations[v]:
            w = g.dart_tail[reverse(d)]
            if w != start and w in used_vertices:
                continue
            extend(path_darts + [d], used_vertices | {w}, start)

    for s in range(n):
        extend([], {s}, s)
    return best


def test_representativity_matches_bruteforce():
    rng = random.Random(7)
    for n in [6, 9, 10, 12]:
        g = graphs.random_torus_triangulation(n, rng)
        assert g.representativity() == brute_shortest_noncontractible(g)


def test_three_edge_color_k4_and_prism():
    for g in [graphs.k4(), graphs.prism3(), graphs.cube()]:
        col = g.three_edge_color()
        assert col is not None
        assert g.coloring_is_proper(col)


def test_three_edge_color_petersen_none():
    g = graphs.petersen_plane_like()
    assert g.three_edge_color() is None


def test_three_edge_color_budget():
    g = graphs.petersen_plane_like()
    with pytest.raises(BudgetExceeded):
        g.three_edge_color(timeout_nodes=3)


def test_cyclic_cut_scan_petersen_empty():
    g = graphs.petersen_plane_like()
    assert g.cyclic_cut_scan(4) == []


def test_cyclic_cut_scan_two_triangles():
    # two triangles joined by a 3-edge matching: one cyclic 3-cut
    g = graphs.prism3()
    cuts = g.cyclic_cut_scan(3)
    assert len(cuts) == 1
    cut = cuts[0]
    assert cut.size == 3
    us = {frozenset(g.endpoints(e)) for e in cut.edges}
    assert us == {frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})}


def test_canonical_form_detects_relabeling():
    g = graphs.cube()
    perm = [3, 0, 1, 2, 7, 4, 5, 6]
    h = g.relabel(perm)
    assert g.is_embedded_isomorphic(h)
    assert not g.is_embedded_isomorphic(graphs.octahedron())


def test_mirror_is_isomorphic_via_reflection_folding():
    g = graphs.torus_grid(3, 4)
    assert g.is_embedded_isomorphic(g.mirror())


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=4, max_value=14), st.integers())
def test_euler_audit_random_triangulations(n, seed):
    g = graphs.random_torus_triangulation(n, random.Random(seed))
    assert g.vertex_count == n
    assert g.is_triangulation()
    g.check_euler()


@settings(max_examples=15, deadline=None)
@given(st.integers())
def test_suppression_lifts_colorings(seed):
    """Colorings of g after delete+suppress lift to partial colorings of g:
    the merged-edge color applies to every source edge on its path."""
    rng = random.Random(seed)
    g = graphs.random_cubic_graph(12, rng)
    if g is None:
        return
    e = sorted(g.edge_ids())[rng.randrange(g.edge_count)]
    try:
        h = g.delete_and_suppress([e])
    except IllegalContraction:
        return
    col = None
    try:
        col = h.three_edge_color()
    except BudgetExceeded:
        return
    if col is None:
        return
    lifted = {}
    for eid, c in col.items():
        for src in h.edge_sources.get(eid, (eid,)):
            lifted[src] = c
    # properness away from the deleted edge's endpoints
    u0, v0 = g.endpoints(e)
    for v in range(g.vertex_count):
        if v in (u0, v0):
            continue
        cs = [lifted.get(d >> 1) for d in g.rotations[v]]
        cs = [c for c in cs if c is not None]
        assert len(cs) == len(set(cs))
