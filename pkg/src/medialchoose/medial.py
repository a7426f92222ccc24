"""Medial graphs, their black/white faces and the black-left orientation.

The medial edge for a host *corner* is indexed by the host dart ``d`` that
enters the corner: it joins host edges ``d >> 1`` and ``phi(d) >> 1``
where ``phi`` is the host face permutation.  Medial dart ``2d`` sits at the
first of these, ``2d + 1`` at the second.  With this numbering the even
medial darts trace the white faces (one per host face) and the odd ones
trace the black faces (one per host vertex).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .embed import RotationSystem, delete_edges
from .errors import ClaimViolation, EmptyGraphError, InputError, NotPlaneError

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class MedialGraph:
    graph: RotationSystem
    host: RotationSystem
    edge_provenance: tuple[int, ...]  # medial vertex -> host edge
    corner: tuple[int, ...]  # medial edge -> host dart entering the corner
    face_provenance: dict[int, tuple[str, int]] = field(repr=False)
    removed_loops: tuple[tuple[int, int], ...] = ()

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def loops(self) -> list[int]:
        return [e for e in range(self.graph.num_edges) if self.graph.is_loop(e)]


def medial(g: RotationSystem) -> MedialGraph:
    """Medial graph of ``g``, embedded on the same surface."""
    if g.num_edges == 0:
        raise EmptyGraphError("the medial graph of an edgeless graph is empty")
    n = g.num_darts
    phi = [g.face_next(d) for d in range(n)]
    phi_inv = [0] * n
    for d, x in enumerate(phi):
        phi_inv[x] = d
    origin = [0] * (2 * n)
    for d in range(n):
        origin[2 * d] = d >> 1
        origin[2 * d + 1] = phi[d] >> 1
    nxt = [0] * (2 * n)
    for e in range(g.num_edges):
        a, b = 2 * e, 2 * e + 1
        ring = (2 * phi_inv[b] + 1, 2 * b, 2 * phi_inv[a] + 1, 2 * a)
        for i in range(4):
            nxt[ring[i]] = ring[(i + 1) % 4]
    outer = None if g.outer_face_dart is None else 2 * g.outer_face_dart
    mg = RotationSystem(g.num_edges, n, tuple(origin), tuple(nxt), outer)
    prov = {}
    for f in mg.faces:
        kinds = {x & 1 for x in f.boundary_darts}
        if len(kinds) != 1:
            raise ClaimViolation("medial face mixes corner types", {"face": f.id})
        d = f.id >> 1
        if f.id & 1:
            prov[f.id] = (BLACK, g.dart_origin[d ^ 1])
        else:
            prov[f.id] = (WHITE, g.face_of_dart[d])
    return MedialGraph(mg, g, tuple(range(g.num_edges)), tuple(range(n)), prov)


def remove_loops(m: MedialGraph) -> MedialGraph:
    loops = m.loops()
    if not loops:
        return m
    log = list(m.removed_loops)
    for e in loops:
        v = m.graph.dart_origin[2 * e]
        white = [m.face_provenance[m.graph.face_of_dart[x]] for x in (2 * e, 2 * e + 1)]
        host_face = next((i for k, i in white if k == WHITE), -1)
        log.append((v, host_face))
    g2, _, emap = delete_edges(m.graph, loops)
    prov = {}
    for f in g2.faces:
        kinds = set()
        for nd in f.boundary_darts:
            old = 2 * emap[nd >> 1] + (nd & 1)
            kinds.add(m.face_provenance[m.graph.face_of_dart[old]])
        whites = sorted(k for k in kinds if k[0] == WHITE)
        blacks = sorted(k for k in kinds if k[0] == BLACK)
        if len(whites) > 1 or (not whites and len(blacks) > 1):
            prov[f.id] = ("mixed", -1)
        else:
            prov[f.id] = whites[0] if whites else blacks[0]
    return MedialGraph(
        g2, m.host, m.edge_provenance, tuple(m.corner[e] for e in emap), prov, tuple(log)
    )


@dataclass(frozen=True)
class FaceClassification:
    kind: dict[int, str]
    outer: int | None

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(sorted(f for f, k in self.kind.items() if k == BLACK))

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(sorted(f for f, k in self.kind.items() if k == WHITE))


def classify_faces(m: MedialGraph) -> FaceClassification:
    if m.num_vertices == 0:
        raise EmptyGraphError("medial graph has no vertices")
    g = m.graph
    kind = {}
    for f in g.faces:
        if f.id not in m.face_provenance:
            raise InputError(f"no provenance for medial face {f.id}")
        k = m.face_provenance[f.id][0]
        if k not in (BLACK, WHITE):
            raise InputError(f"medial face {f.id} has ambiguous provenance")
        kind[f.id] = k
    for e in range(g.num_edges):
        if kind[g.face_of_dart[2 * e]] == kind[g.face_of_dart[2 * e + 1]]:
            raise ClaimViolation(
                "black/white labels do not 2-colour the medial faces", {"edge": e}
            )
    return FaceClassification(kind, g.outer_face)


@dataclass(frozen=True)
class OrientedMedial:
    """A medial graph with each edge directed from ``forward[e]``'s origin."""

    medial: MedialGraph
    faces: FaceClassification
    forward: tuple[int, ...]

    @property
    def graph(self) -> RotationSystem:
        return self.medial.graph

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        o = self.graph.dart_origin
        return tuple((o[d], o[d ^ 1]) for d in self.forward)

    def is_out(self, d: int) -> bool:
        return self.forward[d >> 1] == d

    def left_face(self, e: int) -> int:
        return self.graph.face_of_dart[self.forward[e] ^ 1]

    def right_face(self, e: int) -> int:
        return self.graph.face_of_dart[self.forward[e]]

    def black_left_violations(self) -> list[int]:
        return [e for e in range(self.num_edges) if self.faces.kind[self.left_face(e)] != BLACK]

    def flipped(self, edges) -> OrientedMedial:
        fw = list(self.forward)
        for e in edges:
            fw[e] ^= 1
        return OrientedMedial(self.medial, self.faces, tuple(fw))


def orient_black_left(m: MedialGraph, faces: FaceClassification | None = None) -> OrientedMedial:
    """Direct every medial edge so that its black face is on the left."""
    if not m.graph.is_plane:
        raise NotPlaneError(f"medial graph has genus {m.graph.genus}")
    faces = faces or classify_faces(m)
    g = m.graph
    fw = []
    for e in range(g.num_edges):
        # black on the left of dart x means black on the right of x ^ 1
        fw.append(2 * e if faces.kind[g.face_of_dart[2 * e + 1]] == BLACK else 2 * e + 1)
    om = OrientedMedial(m, faces, tuple(fw))
    if om.black_left_violations():
        raise ClaimViolation("no black-left orientation", {"edges": om.black_left_violations()})
    if not facial_successor_check(om):
        raise ClaimViolation(
            "incoming edge facially adjacent to an incoming edge",
            {"forward": list(om.forward)},
        )
    return om


def facial_successor_check(om: OrientedMedial) -> bool:
    """In- and out-darts alternate around every vertex."""
    g = om.graph
    for rot in g.rotations:
        for i, d in enumerate(rot):
            if om.is_out(d) == om.is_out(rot[(i + 1) % len(rot)]):
                return False
    return True


def degrees(om: OrientedMedial) -> list[tuple[int, int]]:
    """``(indegree, outdegree)`` per vertex."""
    out = [[0, 0] for _ in range(om.num_vertices)]
    for u, v in om.arcs:
        out[u][1] += 1
        out[v][0] += 1
    return [tuple(x) for x in out]
