"""Stock graphs and generators used across the toolkit and its tests."""

from __future__ import annotations

import random

from .surface import PLANE, TORUS, RotationGraph, dart, edge_of, reverse


def triangle() -> RotationGraph:
    return RotationGraph.from_faces(PLANE, 3, [(0, 1, 2), (0, 2, 1)])


def k4() -> RotationGraph:
    return RotationGraph.from_faces(
        PLANE, 4, [(0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 2, 1)])


def cube() -> RotationGraph:
    return RotationGraph.from_faces(
        PLANE, 8,
        [(0, 3, 2, 1), (4, 5, 6, 7),
         (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7)])


def octahedron() -> RotationGraph:
    return RotationGraph.from_faces(
        PLANE, 6,
        [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
         (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4)])


def prism3() -> RotationGraph:
    """The triangular prism (3-edge-colorable cubic plane graph)."""
    return RotationGraph.from_faces(
        PLANE, 6,
        [(0, 2, 1), (3, 4, 5),
         (0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)])


def petersen_adjacency() -> list[list[int]]:
    adj = [[] for _ in range(10)]
    for i in range(5):
        adj[i] += [(i + 1) % 5, (i - 1) % 5, i + 5]
        adj[i + 5] += [(i + 2) % 5 + 5, (i - 2) % 5 + 5, i]
    return adj


def abstract_graph(adjacency) -> RotationGraph:
    """Wrap an abstract adjacency structure with an arbitrary rotation
    system.  No Euler identity is claimed; useful for purely combinatorial
    operations (coloring, cut scans, isomorphism-free checks)."""
    return RotationGraph.from_neighbor_lists(PLANE, adjacency, validate=False)


def petersen_plane_like() -> RotationGraph:
    """The Petersen graph with an arbitrary rotation system."""
    return abstract_graph(petersen_adjacency())


def one_vertex_two_loops() -> RotationGraph:
    """The standard one-vertex torus map (two interleaved loops)."""
    return RotationGraph(TORUS, [(0, 2, 1, 3)])


def all_torus_embeddings(adjacency, limit=None) -> list[RotationGraph]:
    """Exhaust rotation systems of a cubic graph and keep the genus-1
    ones, deduplicated by embedded canonical form (reflections folded).

    Exponential in the vertex count; intended for graphs up to ~18
    vertices.
    """
    n = len(adjacency)
    base = [list(a) for a in adjacency]
    out = []
    seen = set()
    for mask in range(1 << n):
        rots = []
        for v in range(n):
            lst = base[v]
            if mask >> v & 1:
                lst = [lst[0], lst[2], lst[1]]
            rots.append(lst)
        g = RotationGraph.from_neighbor_lists(TORUS, rots, validate=False)
        if g.euler_characteristic() != 0:
            continue
        key = g.canonical_form()
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
        if limit is not None and len(out) >= limit:
            break
    return out


def petersen_torus_embeddings() -> list[RotationGraph]:
    return all_torus_embeddings(petersen_adjacency())


def torus_grid(rows: int, cols: int) -> RotationGraph:
    """Flat triangulated torus grid; every vertex has degree 6.

    Rows/cols of 2 produce parallel edges (still loopless), which is the
    smallest representativity-2 shape the discharging machinery accepts.
    """
    if rows < 2 or cols < 2:
        raise ValueError("need rows, cols >= 2 to stay loopless")
    n = rows * cols

    def v(i, j):
        return (i % rows) * cols + (j % cols)

    # edge ids: 3 per vertex (right, down, diagonal down-right)
    def e_right(i, j):
        return 3 * v(i, j)

    def e_down(i, j):
        return 3 * v(i, j) + 1

    def e_diag(i, j):
        return 3 * v(i, j) + 2

    rotations = []
    for i in range(rows):
        for j in range(cols):
            rotations.append([
                dart(e_right(i, j), 0),
                dart(e_diag(i, j), 0),
                dart(e_down(i, j), 0),
                dart(e_right(i, j - 1), 1),
                dart(e_diag(i - 1, j - 1), 1),
                dart(e_down(i - 1, j), 1),
            ])
    return RotationGraph(TORUS, rotations)


def insert_vertex_in_face(g: RotationGraph, face_index: int) -> RotationGraph:
    """Subdivide a triangular face with a new degree-3 vertex."""
    f = g.faces()[face_index]
    if len(f) != 3:
        raise ValueError("face must be a triangle")
    w = g.vertex_count
    max_e = max(g.edge_ids(), default=-1)
    rotations = [list(r) for r in g.rotations]
    # the new triangles replace face f; at each corner the spoke slots in
    # right before the face dart leaving that corner
    for i in range(3):
        d_out = f.darts[i]
        c = g.dart_tail[d_out]
        e_new = max_e + 1 + i
        rot = rotations[c]
        rot.insert(rot.index(d_out), dart(e_new, 0))
    rotations.append([dart(max_e + 1 + i, 1) for i in (2, 1, 0)])
    return RotationGraph(g.surface, rotations)


def flip_edge(g: RotationGraph, e: int) -> RotationGraph:
    """Flip the diagonal of the quadrilateral formed by the two triangles
    on either side of edge e.  Raises ValueError for non-flippable sites
    (shared face, non-triangles, or a flip that would duplicate an edge)."""
    d0, d1 = dart(e, 0), dart(e, 1)
    fod = g.face_of_dart()
    faces = g.faces()
    f0, f1 = faces[fod[d0]], faces[fod[d1]]
    if fod[d0] == fod[d1] or len(f0) != 3 or len(f1) != 3:
        raise ValueError("edge is not flippable")
    u, v = g.dart_tail[d0], g.dart_tail[d1]
    i0 = f0.darts.index(d0)
    x = f0.darts[(i0 + 1) % 3]        # v -> w0
    w0 = g.dart_tail[reverse(x)]
    i1 = f1.darts.index(d1)
    p = f1.darts[(i1 + 1) % 3]        # u -> w1
    w1 = g.dart_tail[reverse(p)]
    if w0 == w1 or g.has_edge(w0, w1):
        raise ValueError("flip would create a loop or parallel edge")
    rotations = [list(r) for r in g.rotations]
    rotations[u].remove(d0)
    rotations[v].remove(d1)
    # new diagonal reuses edge id e: dart(e,0) at w0, dart(e,1) at w1
    rot_w0 = rotations[w0]
    rot_w0.insert(rot_w0.index(reverse(x)) + 1, dart(e, 0))
    rot_w1 = rotations[w1]
    rot_w1.insert(rot_w1.index(reverse(p)) + 1, dart(e, 1))
    return RotationGraph(g.surface, rotations)


def random_torus_triangulation(n: int, rng: random.Random) -> RotationGraph:
    """A loopless torus triangulation on exactly n >= 4 vertices."""
    if n < 4:
        raise ValueError("need n >= 4")
    if n >= 9:
        g = torus_grid(3, 3)
    elif n >= 6:
        g = torus_grid(2, 3)
    else:
        g = torus_grid(2, 2)
    while g.vertex_count < n:
        g = insert_vertex_in_face(g, rng.randrange(len(g.faces())))
    for _ in range(2 * n):
        edges = sorted(g.edge_ids())
        rng.shuffle(edges)
        for e in edges:
            try:
                g2 = flip_edge(g, e)
            except ValueError:
                continue
            if g2.is_triangulation() and g2.euler_characteristic() == 0:
                g = g2
                break
    return g


def random_cubic_graph(n: int, rng: random.Random, tries: int = 200):
    """A random simple connected cubic graph on n vertices (abstract
    rotation system, no surface claim), or None if generation fails."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need even n >= 4")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if any(a == b for a, b in pairs):
            continue
        if len({(min(a, b), max(a, b)) for a, b in pairs}) != len(pairs):
            continue
        adj = [[] for _ in range(n)]
        for a, b in pairs:
            adj[a].append(b)
            adj[b].append(a)
        g = RotationGraph.from_neighbor_lists(PLANE, adj, validate=False)
        if g.is_connected():
            return g
    return None
