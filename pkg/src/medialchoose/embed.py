"""Dart-based embeddings of multigraphs on orientable surfaces.

Edge ``e`` owns the darts ``2e`` and ``2e + 1``; the twin of a dart is
``d ^ 1``.  ``rotation_next[d]`` is the next dart counterclockwise around
the origin of ``d`` and the face permutation is
``d -> rotation_next[d ^ 1]``, which keeps each face on the right of the
darts that bound it.  Loops and parallel edges are allowed everywhere.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DanglingDartError,
    DartRangeError,
    DuplicateDartError,
    MalformedLineError,
    NotEulerianError,
    NotPlaneError,
    OuterDartError,
    VertexOrderError,
)

GREEN = "green"
BLUE = "blue"


def twin(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True)
class Face:
    id: int
    boundary_darts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary_darts)


@dataclass(frozen=True)
class RotationSystem:
    """A multigraph embedded by counterclockwise dart rotations.

    ``outer_face_dart`` designates the outer face; it may be ``None`` for
    graphs on other surfaces or when no interior/exterior queries are made.
    """

    num_vertices: int
    num_edges: int
    dart_origin: tuple[int, ...]
    rotation_next: tuple[int, ...]
    outer_face_dart: int | None = None

    def __post_init__(self):
        n = 2 * self.num_edges
        if len(self.dart_origin) != n or len(self.rotation_next) != n:
            raise ValueError("dart tables must have length 2 * num_edges")
        if sorted(self.rotation_next) != list(range(n)):
            raise ValueError("rotation_next is not a permutation of the darts")
        for d in range(n):
            if not 0 <= self.dart_origin[d] < self.num_vertices:
                raise ValueError(f"dart {d} has an invalid origin")
            if self.dart_origin[self.rotation_next[d]] != self.dart_origin[d]:
                raise ValueError(f"rotation moves dart {d} off its vertex")
        if self.outer_face_dart is not None and not 0 <= self.outer_face_dart < n:
            raise ValueError("outer face dart out of range")

    # -- local structure ---------------------------------------------------

    @property
    def num_darts(self) -> int:
        return 2 * self.num_edges

    def face_next(self, d: int) -> int:
        return self.rotation_next[d ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.dart_origin[2 * e], self.dart_origin[2 * e + 1]

    def edges(self) -> list[tuple[int, int]]:
        return [self.endpoints(e) for e in range(self.num_edges)]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    @cached_property
    def rotations(self) -> tuple[tuple[int, ...], ...]:
        """Darts around each vertex, counterclockwise, smallest dart first."""
        out: list[tuple[int, ...]] = []
        first: list[int | None] = [None] * self.num_vertices
        for d in range(self.num_darts):
            v = self.dart_origin[d]
            if first[v] is None:
                first[v] = d
        for v in range(self.num_vertices):
            d0 = first[v]
            if d0 is None:
                out.append(())
                continue
            cyc = [d0]
            d = self.rotation_next[d0]
            while d != d0:
                cyc.append(d)
                d = self.rotation_next[d]
            out.append(tuple(cyc))
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.dart_origin[d ^ 1] for d in self.rotations[v]]

    # -- faces and topology ------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen = [False] * self.num_darts
        out = []
        for d0 in range(self.num_darts):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.face_next(d)
            out.append(Face(d0, tuple(orbit)))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        table = [0] * self.num_darts
        for f in self.faces:
            for d in f.boundary_darts:
                table[d] = f.id
        return tuple(table)

    @cached_property
    def face_by_id(self) -> dict[int, Face]:
        return {f.id: f for f in self.faces}

    @property
    def outer_face(self) -> int | None:
        if self.outer_face_dart is None:
            return None
        return self.face_of_dart[self.outer_face_dart]

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges():
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(g) for g in sorted(groups.values()))

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @cached_property
    def genus(self) -> int:
        """Sum of the genera of the components' surfaces."""
        comp_of = {}
        for i, comp in enumerate(self.components):
            for v in comp:
                comp_of[v] = i
        nv = [len(c) for c in self.components]
        ne = [0] * len(nv)
        nf = [0] * len(nv)
        for e in range(self.num_edges):
            ne[comp_of[self.dart_origin[2 * e]]] += 1
        for f in self.faces:
            nf[comp_of[self.dart_origin[f.id]]] += 1
        total = 0
        for v, e, f in zip(nv, ne, nf):
            if e == 0:
                continue
            chi = v - e + f
            if chi > 2 or chi % 2:
                raise ValueError(f"impossible Euler characteristic {chi}")
            total += (2 - chi) // 2
        return total

    @property
    def is_plane(self) -> bool:
        return self.genus == 0

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges():
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True


def faces(g: RotationSystem) -> list[Face]:
    return list(g.faces)


# -- construction helpers ----------------------------------------------------


def from_rotations(
    rotations: Sequence[Sequence[int]], outer: int | None = None
) -> RotationSystem:
    """Build a rotation system from per-vertex counterclockwise dart lists."""
    darts = [d for rot in rotations for d in rot]
    n = len(darts)
    if n % 2 or sorted(darts) != list(range(n)):
        raise ValueError("rotations must use every dart 0..2m-1 exactly once")
    origin = [0] * n
    nxt = [0] * n
    for v, rot in enumerate(rotations):
        for i, d in enumerate(rot):
            origin[d] = v
            nxt[d] = rot[(i + 1) % len(rot)]
    return RotationSystem(len(rotations), n // 2, tuple(origin), tuple(nxt), outer)


def from_drawing(
    positions: Sequence[tuple[float, float]],
    edges: Sequence[tuple[int, int]],
) -> RotationSystem:
    """Embed a straight-line plane drawing.

    Darts are sorted counterclockwise by angle.  The outer face is the one
    whose boundary polygon has the largest signed area (inner faces run
    clockwise, so they come out negative).
    """
    rot: list[list[tuple[float, int]]] = [[] for _ in positions]
    for e, (u, v) in enumerate(edges):
        if u == v:
            raise ValueError("straight-line drawings cannot contain loops")
        for d, a, b in ((2 * e, u, v), (2 * e + 1, v, u)):
            ax, ay = positions[a]
            bx, by = positions[b]
            rot[a].append((math.atan2(by - ay, bx - ax), d))
    rotations = [[d for _, d in sorted(r)] for r in rot]
    g = from_rotations(rotations)
    if g.num_edges == 0:
        return g
    best, best_area = None, -math.inf
    for f in g.faces:
        pts = [positions[g.dart_origin[d]] for d in f.boundary_darts]
        area = 0.0
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
            area += x1 * y2 - x2 * y1
        if area > best_area + 1e-9:
            best, best_area = f.id, area
    return RotationSystem(g.num_vertices, g.num_edges, g.dart_origin, g.rotation_next, best)


def with_outer(g: RotationSystem, dart: int | None) -> RotationSystem:
    return RotationSystem(g.num_vertices, g.num_edges, g.dart_origin, g.rotation_next, dart)


def _surviving_outer(g: RotationSystem, keep_edge: Sequence[bool]) -> int | None:
    """Smallest kept dart on the face that absorbs the old outer face."""
    if g.outer_face_dart is None:
        return None
    parent = {f.id: f.id for f in g.faces}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(g.num_edges):
        if not keep_edge[e]:
            a, b = find(g.face_of_dart[2 * e]), find(g.face_of_dart[2 * e + 1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    root = find(g.outer_face)
    for d in range(g.num_darts):
        if keep_edge[d >> 1] and find(g.face_of_dart[d]) == root:
            return d
    return None


def subgraph(
    g: RotationSystem, keep_vertices: Iterable[int], keep_edges: Iterable[int]
) -> tuple[RotationSystem, tuple[int, ...], tuple[int, ...]]:
    """Induced embedding on the kept vertices and edges.

    Returns the new rotation system plus the vertex map and the edge map,
    both from new ids to old ids.  Relative order of ids is preserved and
    surviving rotations are the induced cyclic suborders.
    """
    vmap = tuple(sorted(set(keep_vertices)))
    emap = tuple(sorted(set(keep_edges)))
    new_v = {v: i for i, v in enumerate(vmap)}
    keep = [False] * g.num_edges
    for e in emap:
        u, v = g.endpoints(e)
        if u not in new_v or v not in new_v:
            raise ValueError(f"edge {e} kept without both endpoints")
        keep[e] = True
    new_dart = {}
    for i, e in enumerate(emap):
        new_dart[2 * e] = 2 * i
        new_dart[2 * e + 1] = 2 * i + 1
    origin = [0] * (2 * len(emap))
    nxt = [0] * (2 * len(emap))
    for d, nd in new_dart.items():
        origin[nd] = new_v[g.dart_origin[d]]
        x = g.rotation_next[d]
        while not keep[x >> 1]:
            x = g.rotation_next[x]
        nxt[nd] = new_dart[x]
    outer = _surviving_outer(g, keep)
    h = RotationSystem(
        len(vmap), len(emap), tuple(origin), tuple(nxt),
        None if outer is None else new_dart[outer],
    )
    return h, vmap, emap


def delete_edges(g: RotationSystem, edges: Iterable[int]):
    drop = set(edges)
    return subgraph(g, range(g.num_vertices), [e for e in range(g.num_edges) if e not in drop])


# -- structural predicates -----------------------------------------------------


def is_bipartite(g: RotationSystem) -> tuple[bool, list[int] | None]:
    """Two-colour the underlying multigraph.

    On failure the second item is an odd closed walk given as edge ids.
    """
    for e in range(g.num_edges):
        if g.is_loop(e):
            return False, [e]
    side = [-1] * g.num_vertices
    via = [-1] * g.num_vertices  # tree edge used to reach a vertex
    parent = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for d in g.rotations[u]:
                w = g.dart_origin[d ^ 1]
                if side[w] < 0:
                    side[w], parent[w], via[w] = 1 - side[u], u, d >> 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return False, _odd_walk(parent, via, u, w, d >> 1)
    return True, None


def _odd_walk(parent, via, u, w, closing_edge):
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    cu, cw = chain(u), chain(w)
    common = set(cu) & set(cw)
    walk = []
    x = u
    while x not in common:
        walk.append(via[x])
        x = parent[x]
    lca = x
    back = []
    x = w
    while x != lca:
        back.append(via[x])
        x = parent[x]
    return walk + back[::-1] + [closing_edge]


@dataclass(frozen=True)
class PruneResult:
    graph: RotationSystem
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    # (removed vertex, edge removed with it or None), in removal order
    removed: tuple[tuple[int, int | None], ...]

    @property
    def removed_edges(self) -> list[int]:
        return [e for _, e in self.removed if e is not None]


def prune_low_degree(g: RotationSystem) -> PruneResult:
    """Repeatedly delete a vertex of degree at most one, smallest id first."""
    deg = [g.degree(v) for v in range(g.num_vertices)]
    alive_edge = [True] * g.num_edges
    alive = [True] * g.num_vertices
    heap = [v for v in range(g.num_vertices) if deg[v] <= 1]
    heapq.heapify(heap)
    removed = []
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or deg[v] > 1:
            continue
        alive[v] = False
        gone = None
        for d in g.rotations[v]:
            e = d >> 1
            if alive_edge[e]:
                alive_edge[e] = False
                gone = e
                w = g.dart_origin[d ^ 1]
                deg[w] -= 1
                deg[v] -= 1
                if alive[w] and deg[w] <= 1:
                    heapq.heappush(heap, w)
        removed.append((v, gone))
    h, vmap, emap = subgraph(
        g,
        [v for v in range(g.num_vertices) if alive[v]],
        [e for e in range(g.num_edges) if alive_edge[e]],
    )
    return PruneResult(h, vmap, emap, tuple(removed))


# -- interiors and exteriors of Eulerian subgraphs -------------------------------


@dataclass(frozen=True)
class EulerianFacePartition:
    """Faces of an even subgraph ``H`` of a plane host, coloured green/blue.

    A face of ``H`` is a region: a set of host faces glued across edges not
    in ``H``.  It is named by the smallest host face id it contains.
    """

    host: RotationSystem
    subgraph_edges: frozenset[int]
    region_of_face: dict[int, int] = field(repr=False)
    region_color: dict[int, str]
    interior_vertices: frozenset[int]
    exterior_vertices: frozenset[int]
    interior_edges: frozenset[int]
    exterior_edges: frozenset[int]

    @property
    def boundary(self) -> frozenset[int]:
        return self.subgraph_edges

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return self.interior_vertices & self.exterior_vertices

    @property
    def green_faces(self) -> tuple[int, ...]:
        return tuple(sorted(r for r, c in self.region_color.items() if c == GREEN))

    @property
    def blue_faces(self) -> tuple[int, ...]:
        return tuple(sorted(r for r, c in self.region_color.items() if c == BLUE))

    def host_faces_inside(self) -> list[int]:
        """Host faces lying in blue regions."""
        return sorted(f for f, r in self.region_of_face.items() if self.region_color[r] == BLUE)

    def side_of_dart(self, d: int) -> str:
        """Colour of the region on the right of host dart ``d``."""
        return self.region_color[self.region_of_face[self.host.face_of_dart[d]]]


def eulerian_face_partition(g: RotationSystem, edges: Iterable[int]) -> EulerianFacePartition:
    """Interior, exterior and boundary of the even subgraph on ``edges``.

    Edges of the host that are not in the subgraph are assigned to the side
    of the region they lie in; vertices of the subgraph belong to both
    sides.
    """
    h = frozenset(edges)
    if g.outer_face_dart is None:
        raise NotPlaneError("interior/exterior need a designated outer face")
    if not g.is_connected() or not g.is_plane:
        raise NotPlaneError("host must be a connected plane graph")
    deg = [0] * g.num_vertices
    for e in h:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    odd = [v for v in range(g.num_vertices) if deg[v] % 2]
    if odd:
        raise NotEulerianError(f"odd degree in subgraph at vertices {odd}")

    parent = {f.id: f.id for f in g.faces}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(g.num_edges):
        if e not in h:
            a, b = find(g.face_of_dart[2 * e]), find(g.face_of_dart[2 * e + 1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    region_of_face = {f: find(f) for f in parent}
    regions = sorted(set(region_of_face.values()))
    adj: dict[int, set[int]] = {r: set() for r in regions}
    for e in h:
        a = region_of_face[g.face_of_dart[2 * e]]
        b = region_of_face[g.face_of_dart[2 * e + 1]]
        if a == b:
            raise NotEulerianError(f"edge {e} has the same face on both sides")
        adj[a].add(b)
        adj[b].add(a)
    outer = region_of_face[g.outer_face]
    color = {outer: GREEN}
    queue = deque([outer])
    while queue:
        r = queue.popleft()
        for s in sorted(adj[r]):
            want = BLUE if color[r] == GREEN else GREEN
            if s not in color:
                color[s] = want
                queue.append(s)
            elif color[s] != want:
                raise NotEulerianError("faces of the subgraph are not 2-colourable")
    for r in regions:
        color.setdefault(r, GREEN)

    on_h = {v for e in h for v in g.endpoints(e)}
    inside, outside = set(on_h), set(on_h)
    for v in range(g.num_vertices):
        if v in on_h:
            continue
        rot = g.rotations[v]
        c = color[region_of_face[g.face_of_dart[rot[0]]]] if rot else GREEN
        (inside if c == BLUE else outside).add(v)
    int_e, ext_e = set(), set()
    for e in range(g.num_edges):
        if e in h:
            continue
        c = color[region_of_face[g.face_of_dart[2 * e]]]
        (int_e if c == BLUE else ext_e).add(e)
    return EulerianFacePartition(
        g, h, region_of_face, color,
        frozenset(inside), frozenset(outside), frozenset(int_e), frozenset(ext_e),
    )


def restrict(
    partition: EulerianFacePartition, x: Iterable[int]
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Boundary, interior and exterior parts of the edge set ``x``."""
    x = frozenset(x)
    return (
        partition.boundary & x,
        partition.interior_edges & x,
        partition.exterior_edges & x,
    )


# -- text format -------------------------------------------------------------------


def serialize(g: RotationSystem) -> str:
    lines = [f"planegraph {g.num_vertices} {g.num_edges}"]
    if g.outer_face_dart is not None:
        lines.append(f"outer {g.outer_face_dart}")
    for v, rot in enumerate(g.rotations):
        lines.append(f"v {v}: " + " ".join(map(str, rot)) if rot else f"v {v}:")
    return "\n".join(lines) + "\n"


def load(text: str) -> RotationSystem:
    """Parse the ``planegraph`` text format."""
    header = None
    outer = None
    rotations: list[list[int]] = []
    owner: dict[int, int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "planegraph" or len(tok) != 3:
                raise MalformedLineError("expected 'planegraph <vertices> <edges>'", lineno)
            try:
                nv, ne = int(tok[1]), int(tok[2])
            except ValueError:
                raise MalformedLineError("non-integer counts", lineno) from None
            if nv < 0 or ne < 0:
                raise MalformedLineError("negative counts", lineno)
            header = (nv, ne, lineno)
            continue
        if tok[0] == "outer":
            if outer is not None or rotations or len(tok) != 2:
                raise MalformedLineError("misplaced or malformed 'outer' line", lineno)
            try:
                outer = (int(tok[1]), lineno)
            except ValueError:
                raise MalformedLineError("non-integer outer dart", lineno) from None
            continue
        if tok[0] != "v" or len(tok) < 2 or not tok[1].endswith(":"):
            raise MalformedLineError(f"unrecognised line {raw.strip()!r}", lineno)
        try:
            vid = int(tok[1][:-1])
            darts = [int(t) for t in tok[2:]]
        except ValueError:
            raise MalformedLineError("non-integer vertex id or dart", lineno) from None
        if vid != len(rotations):
            raise VertexOrderError(f"expected vertex {len(rotations)}, got {vid}", lineno)
        if vid >= header[0]:
            raise VertexOrderError(f"vertex {vid} beyond declared count {header[0]}", lineno)
        for d in darts:
            if not 0 <= d < 2 * header[1]:
                raise DartRangeError(f"dart {d} out of range", lineno)
            if d in owner:
                raise DuplicateDartError(f"dart {d} already used on line {owner[d]}", lineno)
            owner[d] = lineno
        rotations.append(darts)
    if header is None:
        raise MalformedLineError("empty input", 1)
    nv, ne, hline = header
    if len(rotations) != nv:
        raise VertexOrderError(f"expected {nv} vertex lines, found {len(rotations)}", hline)
    missing = [d for d in range(2 * ne) if d not in owner]
    if missing:
        raise DanglingDartError(f"darts {missing} are not placed in any rotation", hline)
    if outer is not None and not 0 <= outer[0] < 2 * ne:
        raise OuterDartError(f"outer dart {outer[0]} out of range", outer[1])
    return from_rotations(rotations, None if outer is None else outer[0])


def read(path: str | Path) -> RotationSystem:
    return load(Path(path).read_text(encoding="ascii"))


def write(path: str | Path, g: RotationSystem) -> None:
    Path(path).write_text(serialize(g), encoding="ascii", newline="\n")
