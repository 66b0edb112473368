"""Embedded multigraphs via rotation systems.

A graph 2-cell-embedded in a surface is stored as a clockwise cyclic order
of edge-ends (darts) at every vertex.  Edge ``e`` owns darts ``2e`` and
``2e + 1``; ``dart ^ 1`` is the reversed end.  Faces are traced with the
rule ``next = rotation-successor of the reversed dart``.  Loops and
parallel edges are first-class; faces of length 1 and 2 are allowed.

All values are immutable after construction and every operation returns a
new graph, so independent computations can run concurrently without
coordination.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    BudgetExceeded,
    IllegalContraction,
    MalformedRotation,
    NotTorus,
)

PLANE = "plane"
TORUS = "torus"
ANNULUS = "annulus"

_SURFACE_EULER = {PLANE: 2, TORUS: 0, ANNULUS: 2}


def dart(edge_id: int, end: int) -> int:
    return 2 * edge_id + end


def edge_of(d: int) -> int:
    return d >> 1


def reverse(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True)
class FaceWalk:
    """A closed facial walk, as the cyclic sequence of darts on its boundary."""

    darts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(edge_of(d) for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut together with its topological classification."""

    edges: frozenset[int]
    kind: str  # "disk", "annulus(k,l)" or "unknown"

    @property
    def size(self) -> int:
        return len(self.edges)


class RotationGraph:
    """An embedded multigraph given by clockwise rotations of darts.

    Parameters
    ----------
    surface:
        One of ``"plane"``, ``"torus"``, ``"annulus"``.
    rotations:
        Per vertex, the clockwise cyclic sequence of darts leaving it.
    edge_sources:
        Optional provenance map ``edge id -> tuple of pre-surgery edge
        ids`` kept through delete/suppress/contract operations.
    """

    __slots__ = ("surface", "rotations", "dart_tail", "_edges", "_faces",
                 "edge_sources", "_canon", "_sig")

    def __init__(self, surface, rotations, edge_sources=None, validate=True):
        self.surface = surface
        self.rotations = tuple(tuple(r) for r in rotations)
        tail = {}
        for v, rot in enumerate(self.rotations):
            for d in rot:
                if d in tail:
                    raise MalformedRotation(f"dart {d} appears twice")
                tail[d] = v
        self.dart_tail = tail
        edges = {}
        for d, v in tail.items():
            e = edge_of(d)
            if e not in edges:
                rd = reverse(d)
                if rd not in tail:
                    raise MalformedRotation(f"dart {rd} missing")
                edges[e] = (tail[dart(e, 0)], tail[dart(e, 1)])
        self._edges = dict(sorted(edges.items()))
        self.edge_sources = dict(edge_sources) if edge_sources else {}
        self._faces = None
        self._canon = {}
        self._sig = None
        if validate and surface not in _SURFACE_EULER:
            raise MalformedRotation(f"unknown surface {surface!r}")

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edge_ids(self):
        return self._edges.keys()

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def is_loop(self, e: int) -> bool:
        u, v = self._edges[e]
        return u == v

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int):
        """Neighbors of v in clockwise order (with multiplicity)."""
        return [self.dart_tail[reverse(d)] for d in self.rotations[v]]

    def darts(self):
        return self.dart_tail.keys()

    def is_cubic(self) -> bool:
        return all(len(r) == 3 for r in self.rotations)

    def dart_between(self, u: int, v: int) -> int:
        for d in self.rotations[u]:
            if self.dart_tail[reverse(d)] == v:
                return d
        raise KeyError(f"no edge {u}-{v}")

    def edge_between(self, u: int, v: int) -> int:
        return edge_of(self.dart_between(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.dart_between(u, v)
            return True
        except KeyError:
            return False

    def rotation_successor(self, d: int) -> int:
        rot = self.rotations[self.dart_tail[d]]
        return rot[(rot.index(d) + 1) % len(rot)]

    def rotation_predecessor(self, d: int) -> int:
        rot = self.rotations[self.dart_tail[d]]
        return rot[rot.index(d) - 1]

    # ------------------------------------------------------------------
    # faces and Euler bookkeeping

    def faces(self) -> list[FaceWalk]:
        """Facial walks; every dart lies in exactly one returned walk."""
        if self._faces is None:
            seen = set()
            out = []
            for start in sorted(self.dart_tail):
                if start in seen:
                    continue
                walk = []
                d = start
                while True:
                    walk.append(d)
                    seen.add(d)
                    d = self.rotation_successor(reverse(d))
                    if d == start:
                        break
                    if d in seen:
                        raise MalformedRotation("face trace re-entered a dart")
                out.append(FaceWalk(tuple(walk)))
            self._faces = out
        return self._faces

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + len(self.faces())

    def check_euler(self) -> None:
        expect = _SURFACE_EULER[self.surface]
        got = self.euler_characteristic()
        if got != expect:
            raise MalformedRotation(
                f"Euler characteristic {got} != {expect} for {self.surface}")

    def face_of_dart(self) -> dict[int, int]:
        """Map each dart to the index of its face in faces()."""
        out = {}
        for i, f in enumerate(self.faces()):
            for d in f.darts:
                out[d] = i
        return out

    def is_triangulation(self, allow_loops=False) -> bool:
        if not allow_loops and any(self.is_loop(e) for e in self._edges):
            return False
        return all(len(f) == 3 for f in self.faces())

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_neighbor_lists(cls, surface, neighbor_lists, validate=True):
        """Build from clockwise neighbor lists.

        Parallel edges and loops are paired up greedily: the k-th
        occurrence of ``v`` in ``u``'s list pairs with the k-th occurrence
        of ``u`` in ``v``'s list (a loop uses two consecutive occurrences
        of ``v`` in its own list).
        """
        items = []  # (u, slot_index, v)
        for u, lst in enumerate(neighbor_lists):
            for i, v in enumerate(lst):
                items.append((u, i, v))
        # assign edge ids
        next_eid = 0
        slot_dart = {}
        occ = {}
        for u, i, v in items:
            if (u, i) in slot_dart:
                continue
            if u == v:
                # loop: pair with the next unpaired occurrence of v in u's list
                js = [j for (uu, j, vv) in items
                      if uu == u and vv == v and j != i and (u, j) not in slot_dart]
                if not js:
                    raise MalformedRotation(f"unpaired loop at {u}")
                j = js[0]
                slot_dart[(u, i)] = dart(next_eid, 0)
                slot_dart[(u, j)] = dart(next_eid, 1)
                next_eid += 1
            else:
                k = occ.get((u, v), 0)
                occ[(u, v)] = k + 1
                # find k-th occurrence of u in v's list
                js = [j for j, w in enumerate(neighbor_lists[v]) if w == u]
                if k >= len(js):
                    raise MalformedRotation(f"unbalanced edge {u}-{v}")
                j = js[k]
                if (v, j) in slot_dart:
                    raise MalformedRotation(f"slot clash on edge {u}-{v}")
                slot_dart[(u, i)] = dart(next_eid, 0)
                slot_dart[(v, j)] = dart(next_eid, 1)
                occ[(v, u)] = occ.get((v, u), 0) + 1
                next_eid += 1
        rotations = []
        for u, lst in enumerate(neighbor_lists):
            rotations.append([slot_dart[(u, i)] for i in range(len(lst))])
        g = cls(surface, rotations, validate=validate)
        return g

    @classmethod
    def from_faces(cls, surface, n, faces):
        """Build a simple embedded graph from its oriented face list.

        Every face is a cyclic vertex sequence and every ordered pair
        (u, v) with uv an edge must occur in exactly one face.  Rotations
        are recovered from the corner successor relation.
        """
        eid = {}
        for f in faces:
            for a, b in zip(f, f[1:] + f[:1]):
                key = (min(a, b), max(a, b))
                if key not in eid:
                    eid[key] = len(eid)
        succ = {}  # dart -> its rotation successor
        def d_of(a, b):
            key = (min(a, b), max(a, b))
            return dart(eid[key], 0 if a < b else 1)
        for f in faces:
            k = len(f)
            for i in range(k):
                a, b, c = f[i - 1], f[i], f[(i + 1) % k]
                # face contains darts (a->b), (b->c): successor of (b->a) is (b->c)
                key = d_of(b, a)
                if key in succ:
                    raise MalformedRotation(
                        f"ordered pair ({b},{a}) used by two faces")
                succ[key] = d_of(b, c)
        rotations = [[] for _ in range(n)]
        placed = set()
        for d0 in sorted(succ):
            if d0 in placed:
                continue
            v = None
            cyc = []
            d = d0
            while d not in placed:
                placed.add(d)
                cyc.append(d)
                d = succ[d]
            rotations_v = cyc
            # tail vertex of d0
            for (a, b), e in eid.items():
                if dart(e, 0) == d0:
                    v = a
                elif dart(e, 1) == d0:
                    v = b
                if v is not None:
                    break
            if rotations[v]:
                raise MalformedRotation(f"vertex {v} has split rotation")
            rotations[v] = rotations_v
        return cls(surface, rotations)

    def relabel(self, perm) -> "RotationGraph":
        """Renumber vertices: new index = perm[old index]."""
        rots = [None] * self.vertex_count
        for v, rot in enumerate(self.rotations):
            rots[perm[v]] = rot
        return RotationGraph(self.surface, rots, self.edge_sources)

    def with_surface(self, surface) -> "RotationGraph":
        return RotationGraph(surface, self.rotations, self.edge_sources)

    def mirror(self) -> "RotationGraph":
        """The mirror embedding (all rotations reversed)."""
        return RotationGraph(self.surface,
                             [tuple(reversed(r)) for r in self.rotations],
                             self.edge_sources)

    # ------------------------------------------------------------------
    # connectivity helpers

    def components(self, skip_edges=frozenset()):
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for d in self.rotations[v]:
                    if edge_of(d) in skip_edges:
                        continue
                    w = self.dart_tail[reverse(d)]
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def distances_from(self, source, skip_edges=frozenset()):
        dist = {source: 0}
        q = deque([source])
        while q:
            v = q.popleft()
            for d in self.rotations[v]:
                if edge_of(d) in skip_edges:
                    continue
                w = self.dart_tail[reverse(d)]
                if w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist

    # ------------------------------------------------------------------
    # dual

    def dual(self) -> "RotationGraph":
        """The surface dual: one vertex per face, one edge per edge.

        Edge ids are preserved.  The dual dart ``d`` sits at the dual
        vertex for the face whose walk contains the primal dart ``d``, and
        the dual rotation is the face walk order, which makes the double
        dual isomorphic to the original embedded graph.
        """
        rotations = [list(f.darts) for f in self.faces()]
        return RotationGraph(self.surface, rotations)

    # ------------------------------------------------------------------
    # surgery

    def _builder(self):
        return _Builder(self)

    def delete_and_suppress(self, F) -> "RotationGraph":
        """Delete the edges in F and suppress resulting degree-2 vertices.

        Every edge of F must have degree-3 endpoints and no vertex may meet
        exactly two edges of F.  Edge provenance is threaded through merged
        edges.
        """
        F = set(F)
        for e in F:
            u, v = self.endpoints(e)
            if self.degree(u) != 3 or self.degree(v) != 3:
                raise IllegalContraction(f"edge {e} endpoint not degree 3")
        for v in range(self.vertex_count):
            inc = sum(1 for d in self.rotations[v] if edge_of(d) in F)
            if inc == 2:
                raise IllegalContraction(f"vertex {v} meets exactly 2 cut edges")
        b = self._builder()
        for e in F:
            b.delete_edge(e)
        b.suppress_all()
        return b.finish(self.surface)

    def contract_edges(self, X) -> "RotationGraph":
        """Contract every edge of X (loops arising inside X are deleted)."""
        X = set(X)
        for e in X:
            if self.is_loop(e):
                raise IllegalContraction(f"edge {e} is a loop")
        b = self._builder()
        for e in sorted(X):
            b.contract_edge(e)
        return b.finish(self.surface)

    def delete_edges(self, F) -> "RotationGraph":
        b = self._builder()
        for e in set(F):
            b.delete_edge(e)
        return b.finish(self.surface)

    # ------------------------------------------------------------------
    # homology on the torus

    def homology_signatures(self) -> dict[int, tuple[int, int]]:
        """Per-edge offsets in Z^2; a closed walk is noncontractible iff
        its signed offset total is nonzero.  Torus embeddings only."""
        if self.surface != TORUS:
            raise NotTorus("homology signatures need a torus embedding")
        if self._sig is not None:
            return self._sig
        self.check_euler()
        # primal spanning tree
        tree = set()
        seen = {0}
        q = deque([0])
        while q:
            v = q.popleft()
            for d in self.rotations[v]:
                w = self.dart_tail[reverse(d)]
                if w not in seen:
                    seen.add(w)
                    tree.add(edge_of(d))
                    q.append(w)
        if len(seen) != self.vertex_count:
            raise MalformedRotation("graph not connected")
        # dual spanning tree on the remaining edges
        fod = self.face_of_dart()
        nfaces = len(self.faces())
        cotree = set()
        dseen = {0}
        q = deque([0])
        adj = {}
        for e, (u, v) in self._edges.items():
            if e in tree:
                continue
            f1, f2 = fod[dart(e, 0)], fod[dart(e, 1)]
            adj.setdefault(f1, []).append((f2, e))
            adj.setdefault(f2, []).append((f1, e))
        while q:
            f = q.popleft()
            for f2, e in adj.get(f, []):
                if f2 not in dseen and e not in cotree:
                    dseen.add(f2)
                    cotree.add(e)
                    q.append(f2)
        left = [e for e in self._edges
                if e not in tree and e not in cotree]
        if len(left) != 2:
            raise MalformedRotation(
                f"tree-cotree decomposition left {len(left)} edges, expected 2")
        sig = {e: (0, 0) for e in tree}
        sig[left[0]] = (1, 0)
        sig[left[1]] = (0, 1)
        # peel the cotree: each face walk must sum to zero
        unsolved = {}
        for i, f in enumerate(self.faces()):
            todo = [d for d in f.darts if edge_of(d) in cotree
                    and edge_of(d) not in sig]
            unsolved[i] = f
        pending = set(cotree)
        while pending:
            progressed = False
            for i, f in unsolved.items():
                todo = [d for d in f.darts if edge_of(d) in pending]
                if len(todo) != 1:
                    continue
                d0 = todo[0]
                sx = sy = 0
                for d in f.darts:
                    if d == d0:
                        continue
                    ex, ey = sig[edge_of(d)]
                    s = 1 if d % 2 == 0 else -1
                    sx += s * ex
                    sy += s * ey
                s0 = 1 if d0 % 2 == 0 else -1
                sig[edge_of(d0)] = (-s0 * sx, -s0 * sy)
                pending.discard(edge_of(d0))
                progressed = True
            if not progressed:
                raise MalformedRotation("cotree peeling stalled")
        self._sig = sig
        return sig

    def walk_signature(self, darts_seq, sig=None) -> tuple[int, int]:
        if sig is None:
            sig = self.homology_signatures()
        sx = sy = 0
        for d in darts_seq:
            ex, ey = sig[edge_of(d)]
            s = 1 if d % 2 == 0 else -1
            sx += s * ex
            sy += s * ey
        return (sx, sy)

    def representativity(self) -> int:
        """Length of the shortest noncontractible cycle of the embedding."""
        if self.surface != TORUS:
            raise NotTorus("representativity needs a torus embedding")
        sig = self.homology_signatures()
        best = None
        for cap in itertools.count(1):
            if best is not None:
                return best
            if cap > self.edge_count + 1:
                raise MalformedRotation("no noncontractible cycle found")
            for src in range(self.vertex_count):
                # BFS over (vertex, signature) states up to depth cap
                start = (src, 0, 0)
                dist = {start: 0}
                q = deque([start])
                while q:
                    state = q.popleft()
                    v, sx, sy = state
                    d0 = dist[state]
                    if d0 >= cap:
                        continue
                    for d in self.rotations[v]:
                        ex, ey = sig[edge_of(d)]
                        s = 1 if d % 2 == 0 else -1
                        w = self.dart_tail[reverse(d)]
                        ns = (w, sx + s * ex, sy + s * ey)
                        if ns[0] == src and (ns[1], ns[2]) != (0, 0):
                            if best is None or d0 + 1 < best:
                                best = d0 + 1
                        if ns not in dist:
                            dist[ns] = d0 + 1
                            q.append(ns)

    # ------------------------------------------------------------------
    # 3-edge-coloring oracle

    def three_edge_color(self, timeout_nodes: int = 10_000_000):
        """A proper 3-edge-coloring, or None when exhaustive search proves
        there is none.  Raises BudgetExceeded on hitting the node budget."""
        if not self.is_cubic():
            raise IllegalContraction("three_edge_color needs a cubic graph")
        if any(self.is_loop(e) for e in self._edges):
            return None
        edges = sorted(self._edges)
        # order edges greedily so each new edge touches colored ones
        order = []
        placed = set()
        incident = {e: [] for e in edges}
        for e, (u, v) in self._edges.items():
            for w in (u, v):
                for d in self.rotations[w]:
                    e2 = edge_of(d)
                    if e2 != e:
                        incident[e].append(e2)
        frontier = [edges[0]]
        seen = {edges[0]}
        while frontier:
            e = frontier.pop()
            order.append(e)
            placed.add(e)
            for e2 in incident[e]:
                if e2 not in seen:
                    seen.add(e2)
                    frontier.append(e2)
        for e in edges:
            if e not in seen:
                # disconnected graph: just append remaining edges
                order.append(e)
        color = {}
        nodes = 0

        def ok(e, c):
            for e2 in incident[e]:
                if color.get(e2) == c:
                    return False
            return True

        def solve(i):
            nonlocal nodes
            if i == len(order):
                return True
            nodes += 1
            if nodes > timeout_nodes:
                raise BudgetExceeded(f"budget {timeout_nodes} hit")
            e = order[i]
            if i == 0:
                options = (0,)
            elif i == 1:
                options = (0, 1) if ok(e, 0) else (1,)
            else:
                options = (0, 1, 2)
            for c in options:
                if ok(e, c):
                    color[e] = c
                    if solve(i + 1):
                        return True
                    del color[e]
            return False

        if solve(0):
            return dict(color)
        return None

    def coloring_is_proper(self, coloring) -> bool:
        if set(coloring) != set(self._edges):
            return False
        for v in range(self.vertex_count):
            cs = [coloring[edge_of(d)] for d in self.rotations[v]]
            if len(cs) != len(set(cs)):
                return False
        return True

    # ------------------------------------------------------------------
    # cyclic edge cuts

    def _component_has_cycle(self, comp_vertices, skip_edges):
        vs = set(comp_vertices)
        n_e = 0
        for e, (u, v) in self._edges.items():
            if e in skip_edges:
                continue
            if u in vs and v in vs:
                n_e += 1
        return n_e >= len(vs)  # connected component has a cycle iff E >= V

    def cyclic_cut_scan(self, max_size: int) -> list[EdgeCut]:
        """All cyclic edge-cuts of size <= max_size, labeled by the
        homology of their dual curves."""
        if max_size > 5:
            raise ValueError("max_size must be <= 5")
        edges = sorted(self._edges)
        out = []
        sig = None
        fod = None
        if self.surface == TORUS:
            sig = self.homology_signatures()
            fod = self.face_of_dart()
        for size in range(2, max_size + 1):
            for F in itertools.combinations(edges, size):
                Fs = set(F)
                comps = self.components(skip_edges=Fs)
                if len(comps) < 2:
                    continue
                vcomp = {}
                for i, comp in enumerate(comps):
                    for v in comp:
                        vcomp[v] = i
                if any(vcomp[self._edges[e][0]] == vcomp[self._edges[e][1]]
                       for e in F):
                    continue  # not a minimal cut
                cyclic = sum(1 for comp in comps
                             if self._component_has_cycle(comp, Fs))
                if cyclic < 2:
                    continue
                out.append(EdgeCut(frozenset(F),
                                   self._classify_cut(Fs, sig, fod)))
        return out

    def _classify_cut(self, F, sig, fod) -> str:
        if self.surface != TORUS:
            return "disk"
        # group the dual edges of F into closed curves
        face_adj = {}
        for e in F:
            f1, f2 = fod[dart(e, 0)], fod[dart(e, 1)]
            face_adj.setdefault(f1, []).append((e, f2))
            face_adj.setdefault(f2, []).append((e, f1))
        if any(len(v) % 2 for v in face_adj.values()):
            return "unknown"
        remaining = set(F)
        curves = []
        while remaining:
            e0 = next(iter(remaining))
            # walk a closed dual curve starting at e0
            curve = []
            f = fod[dart(e0, 0)]
            e = e0
            sx = sy = 0
            while True:
                curve.append(e)
                remaining.discard(e)
                ex, ey = sig[e]
                d0, d1 = dart(e, 0), dart(e, 1)
                if fod[d0] == f:
                    sx, sy = sx + ex, sy + ey
                    f = fod[d1]
                else:
                    sx, sy = sx - ex, sy - ey
                    f = fod[d0]
                nxt = [e2 for (e2, f2) in face_adj.get(f, ())
                       if e2 in remaining]
                if not nxt:
                    break
                e = nxt[0]
            curves.append((curve, (sx, sy)))
        if len(curves) == 1 and curves[0][1] == (0, 0):
            return "disk"
        if len(curves) == 2:
            (c1, s1), (c2, s2) = curves
            if s1 != (0, 0) and (s1 == s2 or s1 == (-s2[0], -s2[1])):
                k, l = sorted((len(c1), len(c2)))
                return f"annulus({k},{l})"
        return "unknown"

    # ------------------------------------------------------------------
    # canonical form for embedded isomorphism

    def canonical_form(self):
        """A canonical code; equal codes == isomorphic as embedded graphs
        (up to reflection)."""
        key = "canon"
        if key not in self._canon:
            best = None
            for reflected in (False, True):
                g = self.mirror() if reflected else self
                for start in sorted(g.dart_tail):
                    code = g._bfs_code(start)
                    if best is None or code < best:
                        best = code
            self._canon[key] = (self.surface, self.vertex_count,
                                self.edge_count, best)
        return self._canon[key]

    def _bfs_code(self, start):
        order = {start: 0}
        queue = deque([start])
        seq = [start]
        while queue:
            d = queue.popleft()
            for nd in (self.rotation_successor(d), reverse(d)):
                if nd not in order:
                    order[nd] = len(order)
                    queue.append(nd)
                    seq.append(nd)
        return tuple((order[self.rotation_successor(d)], order[reverse(d)])
                     for d in seq)

    def is_embedded_isomorphic(self, other) -> bool:
        return self.canonical_form() == other.canonical_form()

    # ------------------------------------------------------------------

    def __repr__(self):
        return (f"RotationGraph({self.surface}, V={self.vertex_count}, "
                f"E={self.edge_count})")


class _Builder:
    """Mutable half-edge scratch structure for surgery operations."""

    def __init__(self, g: RotationGraph):
        # halves are keyed by original dart ints; partner map may be rewired
        self.vertex_halves = {v: list(rot) for v, rot in enumerate(g.rotations)}
        self.half_vertex = dict(g.dart_tail)
        self.partner = {}
        for d in g.dart_tail:
            self.partner[d] = reverse(d)
        # provenance: ordered tuple of original edge ids carried by a half
        self.sources = {}
        for d in g.dart_tail:
            e = edge_of(d)
            src = g.edge_sources.get(e, (e,))
            self.sources[d] = tuple(src) if d % 2 == 0 else tuple(reversed(src))

    # -- primitive edits ------------------------------------------------

    def delete_edge(self, e):
        self.remove_half_pair(dart(e, 0))

    def remove_half_pair(self, h):
        p = self.partner[h]
        for x in (h, p):
            v = self.half_vertex[x]
            self.vertex_halves[v].remove(x)
            del self.half_vertex[x]
            del self.partner[x]
            del self.sources[x]

    def suppress_vertex(self, v):
        h1, h2 = self.vertex_halves[v]
        p1, p2 = self.partner[h1], self.partner[h2]
        if p1 == h2:
            raise IllegalContraction(
                "suppression would create a free circle component")
        # merge: p1 ---(v)--- p2 becomes a single edge p1--p2
        self.partner[p1] = p2
        self.partner[p2] = p1
        self.sources[p1] = self.sources[p1] + tuple(reversed(self.sources[h1]))
        self.sources[p2] = self.sources[p2] + tuple(reversed(self.sources[h2]))
        for x in (h1, h2):
            del self.half_vertex[x]
            del self.partner[x]
            del self.sources[x]
        del self.vertex_halves[v]

    def suppress_all(self):
        changed = True
        while changed:
            changed = False
            for v in list(self.vertex_halves):
                hs = self.vertex_halves.get(v)
                if hs is None:
                    continue
                if len(hs) == 0:
                    del self.vertex_halves[v]
                    changed = True
                elif len(hs) == 2:
                    self.suppress_vertex(v)
                    changed = True

    def contract_edge(self, e):
        h = dart(e, 0)
        if h not in self.partner:
            raise IllegalContraction(f"edge {e} already gone")
        p = self.partner[h]
        u, v = self.half_vertex[h], self.half_vertex[p]
        if u == v:
            # became a loop: minor semantics, just delete
            self.remove_half_pair(h)
            return
        ru, rv = self.vertex_halves[u], self.vertex_halves[v]
        iu, iv = ru.index(h), rv.index(p)
        merged = (ru[:iu]
                  + [rv[(iv + 1 + k) % len(rv)] for k in range(len(rv) - 1)]
                  + ru[iu + 1:])
        self.vertex_halves[u] = merged
        for x in rv:
            if x != p:
                self.half_vertex[x] = u
        del self.vertex_halves[v]
        for x in (h, p):
            del self.half_vertex[x]
            del self.partner[x]
            del self.sources[x]

    # -- output ----------------------------------------------------------

    def finish(self, surface) -> RotationGraph:
        verts = sorted(self.vertex_halves)
        vmap = {v: i for i, v in enumerate(verts)}
        # pick stable edge ids: smallest original id carried by the pair
        pair_seen = {}
        half_new = {}
        sources_out = {}
        for h, p in self.partner.items():
            if h in half_new:
                continue
            src_h = self.sources[h]
            eid = min(min(src_h), min(self.sources[p]))
            if eid in pair_seen:
                raise IllegalContraction("edge id collision after surgery")
            pair_seen[eid] = True
            half_new[h] = dart(eid, 0)
            half_new[p] = dart(eid, 1)
            sources_out[eid] = src_h
        rotations = []
        for v in verts:
            rotations.append([half_new[h] for h in self.vertex_halves[v]])
        g = RotationGraph(surface, rotations, edge_sources=sources_out)
        # retag the surface if the surgery changed the Euler characteristic
        chi = g.euler_characteristic()
        if chi == 2 and surface == TORUS:
            g = RotationGraph(PLANE, rotations, edge_sources=sources_out)
        return g
