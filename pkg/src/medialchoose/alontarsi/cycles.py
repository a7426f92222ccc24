"""Directed cycles of an oriented medial and their position in the plane."""

from __future__ import annotations

from dataclasses import dataclass

from ..embed import BLUE, GREEN, eulerian_face_partition
from ..errors import ClaimViolation, InputError, NotACycleError
from ..medial import BLACK, OrientedMedial
from .eulerian import EulerianSubgraph, edges_mask, is_eulerian

DEFAULT_CYCLE_LEN_CAP = 20


def directed_cycles(dg, max_len: int = DEFAULT_CYCLE_LEN_CAP) -> tuple[list[tuple[int, ...]], bool]:
    """All directed cycles with at most ``max_len`` edges.

    Each cycle is listed once, as an edge sequence starting at its smallest
    vertex.  Parallel edges give distinct cycles.  The flag reports whether
    some path was cut off by the length cap.
    """
    out_edges: list[list[int]] = [[] for _ in range(dg.num_vertices)]
    for e, (u, _) in enumerate(dg.arcs):
        out_edges[u].append(e)
    cycles: list[tuple[int, ...]] = []
    truncated = False
    for s in range(dg.num_vertices):
        on_path = {s}
        path: list[int] = []

        def rec(x):
            nonlocal truncated
            for e in out_edges[x]:
                w = dg.arcs[e][1]
                if w == s:
                    cycles.append(tuple(path + [e]))
                elif w > s and w not in on_path:
                    if len(path) + 1 >= max_len:
                        truncated = True
                        continue
                    on_path.add(w)
                    path.append(e)
                    rec(w)
                    path.pop()
                    on_path.discard(w)

        rec(s)
    return cycles, truncated


@dataclass(frozen=True)
class DirectedCycle:
    edges: tuple[int, ...]  # traversal order
    vertices: tuple[int, ...]  # vertices[i] is the tail of edges[i]
    kind: str
    mask: int
    interior: int  # edges strictly inside
    exterior: int
    faces_inside: int

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    def sort_key(self):
        return (self.faces_inside, tuple(sorted(self.edges)))


def _order_cycle(om: OrientedMedial, edges) -> tuple[tuple[int, ...], tuple[int, ...]]:
    edges = list(dict.fromkeys(edges))
    if not edges:
        raise NotACycleError("empty edge set")
    succ = {}
    for e in edges:
        u, _ = om.arcs[e]
        if u in succ:
            raise NotACycleError(f"vertex {u} has two outgoing cycle edges")
        succ[u] = e
    heads = [om.arcs[e][1] for e in edges]
    if sorted(heads) != sorted(succ):
        raise NotACycleError("edges do not close up into a directed cycle")
    start = min(succ)
    order, verts = [], []
    x = start
    while True:
        e = succ[x]
        order.append(e)
        verts.append(x)
        x = om.arcs[e][1]
        if x == start:
            break
    if len(order) != len(edges):
        raise NotACycleError("edges form more than one cycle")
    return tuple(order), tuple(verts)


def analyze_cycle(om: OrientedMedial, edges) -> DirectedCycle:
    """Locate a directed cycle and decide whether it is black or white.

    A cycle is black when the faces along its interior side are black,
    which under the black-left orientation means its interior is on its
    left; white when the interior is on its right.
    """
    order, verts = _order_cycle(om, edges)
    part = eulerian_face_partition(om.graph, order)
    left = {part.side_of_dart(om.forward[e] ^ 1) for e in order}
    if left == {BLUE}:
        inner = {om.faces.kind[om.left_face(e)] for e in order}
    elif left == {GREEN}:
        inner = {om.faces.kind[om.right_face(e)] for e in order}
    else:
        raise ClaimViolation("cycle has its interior on both sides", {"cycle": list(order)})
    if len(inner) != 1:
        raise ClaimViolation("cycle touches black and white faces inside",
                             {"cycle": list(order)})
    return DirectedCycle(
        order, verts, inner.pop(), edges_mask(order),
        edges_mask(part.interior_edges), edges_mask(part.exterior_edges),
        len(part.host_faces_inside()),
    )


@dataclass(frozen=True)
class OddBlackCycleSet:
    cycles: tuple[DirectedCycle, ...]
    truncated: bool  # some cycle may be missing because of the length cap

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def all_cycles(om: OrientedMedial, max_len: int = DEFAULT_CYCLE_LEN_CAP):
    raw, truncated = directed_cycles(om, max_len)
    return [analyze_cycle(om, c) for c in raw], truncated


def odd_black_cycles(om: OrientedMedial, max_len: int = DEFAULT_CYCLE_LEN_CAP,
                     cycles=None) -> OddBlackCycleSet:
    """Odd black cycles sorted by medial faces inside, then by edge set."""
    if cycles is None:
        cycles, truncated = all_cycles(om, max_len)
    else:
        cycles, truncated = cycles
    chosen = [c for c in cycles if c.kind == BLACK and c.is_odd]
    return OddBlackCycleSet(tuple(sorted(chosen, key=DirectedCycle.sort_key)), truncated)


def complement_mask(x: int, boundary: int, interior: int, exterior: int) -> int:
    """Keep ``x`` outside, take its complement on the boundary and inside."""
    return (x & exterior) | (interior & ~x) | (boundary & ~x)


def d_complement(x: EulerianSubgraph | int, d, om: OrientedMedial,
                 check: bool = True) -> EulerianSubgraph:
    """The ``d``-complement of ``x`` for a directed cycle ``d``.

    ``d`` is an edge list or an analysed cycle.  With ``check`` set the
    result must be Eulerian; a failure raises :class:`ClaimViolation`.
    """
    if not isinstance(d, DirectedCycle):
        d = analyze_cycle(om, d)
    mask = x.mask if isinstance(x, EulerianSubgraph) else x
    out = complement_mask(mask, d.mask, d.interior, d.exterior)
    if check and not is_eulerian(om, out):
        raise ClaimViolation(
            "D-complement is not Eulerian",
            {"x": list(EulerianSubgraph(mask, om.num_edges).edges), "d": list(d.edges)},
        )
    return EulerianSubgraph(out, om.num_edges)


def vi_ve_parity_check(om: OrientedMedial, c) -> tuple[int, int]:
    """Count cycle vertices whose other two edges lie inside / outside ``c``."""
    if not isinstance(c, DirectedCycle):
        c = analyze_cycle(om, c)
    if c.kind != BLACK:
        raise InputError("cycle is not black")
    on = set(c.edges)
    n_in = n_out = 0
    for v in c.vertices:
        rest = [d >> 1 for d in om.graph.rotations[v] if (d >> 1) not in on]
        if not rest:
            continue
        sides = {"in" if c.interior >> e & 1 else "out" for e in rest}
        if len(sides) != 1:
            raise ClaimViolation("cycle vertex with edges on both sides",
                                 {"cycle": list(c.edges), "vertex": v})
        if sides == {"in"}:
            n_in += 1
        else:
            n_out += 1
    if c.is_odd and (n_in % 2 or not n_out % 2):
        raise ClaimViolation(
            "odd black cycle with |V_i| odd or |V_e| even",
            {"cycle": list(c.edges), "V_i": n_in, "V_e": n_out},
        )
    return n_in, n_out
