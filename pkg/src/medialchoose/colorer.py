"""Exhaustive colouring oracles.

Everything here is plain backtracking: instances are desk-sized and the
answers serve as ground truth for the certificate machinery.  Loops make a
graph uncolourable and are rejected; parallel edges count once.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .embed import PruneResult, RotationSystem
from .errors import ClaimViolation, LoopError, MissingListError, ResourceGuardError
from .medial import MedialGraph, OrientedMedial

DEFAULT_VERTEX_CAP = 40


@dataclass(frozen=True)
class ListAssignment:
    lists: dict[int, frozenset[int]]

    @classmethod
    def uniform(cls, vertices: Iterable[int], colors: Iterable[int]) -> ListAssignment:
        colors = frozenset(colors)
        return cls({v: colors for v in vertices})

    def sizes(self) -> dict[int, int]:
        return {v: len(c) for v, c in self.lists.items()}


@dataclass(frozen=True)
class Coloring:
    colors: dict[int, int]
    backtracks: int = field(default=0, compare=False)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def adjacency(g) -> dict[int, set[int]]:
    """Simple-graph adjacency of a rotation system, medial graph or mapping."""
    if isinstance(g, OrientedMedial):
        g = g.graph
    if isinstance(g, MedialGraph):
        g = g.graph
    if isinstance(g, RotationSystem):
        adj: dict[int, set[int]] = {v: set() for v in range(g.num_vertices)}
        for u, v in g.edges():
            if u == v:
                raise LoopError(f"vertex {u} carries a loop and cannot be coloured")
            adj[u].add(v)
            adj[v].add(u)
        return adj
    if isinstance(g, Mapping):
        adj = {v: set() for v in g}
        for u, nbrs in g.items():
            for v in nbrs:
                if u == v:
                    raise LoopError(f"vertex {u} carries a loop and cannot be coloured")
                adj.setdefault(v, set()).add(u)
                adj[u].add(v)
        return adj
    raise TypeError(f"cannot read a graph from {type(g).__name__}")


def is_proper(adj: Mapping[int, Iterable[int]], coloring: Coloring) -> bool:
    c = coloring.colors
    if set(c) != set(adj):
        return False
    return all(c[u] != c[v] for u in adj for v in adj[u])


def respects(lists: ListAssignment, coloring: Coloring) -> bool:
    return all(coloring.colors[v] in lists.lists[v] for v in coloring.colors)


def _search(adj, lists, cap, break_symmetry=False):
    n = len(adj)
    if n > cap:
        raise ResourceGuardError(f"{n} vertices exceed the colouring cap {cap}")
    verts = sorted(adj)
    deg = {v: len(adj[v]) for v in verts}
    color: dict[int, int] = {}
    stats = [0]

    def options(v):
        used = {color[w] for w in adj[v] if w in color}
        return sorted(c for c in lists[v] if c not in used)

    def pick():
        best, best_key = None, None
        for v in verts:
            if v in color:
                continue
            key = (len(options(v)), -deg[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def rec(top):
        if len(color) == n:
            return True
        v = pick()
        for c in options(v):
            if break_symmetry and c > top + 1:
                break
            color[v] = c
            if rec(max(top, c)):
                return True
            del color[v]
            stats[0] += 1
        return False

    if rec(0):
        return Coloring(dict(sorted(color.items())), stats[0])
    return None


def chromatic_number_leq(g, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Coloring | None:
    """A proper ``k``-colouring with colours ``1..k``, or ``None`` if none exists."""
    adj = adjacency(g)
    return _search(adj, {v: range(1, k + 1) for v in adj}, cap, break_symmetry=True)


def chromatic_number(g, cap: int = DEFAULT_VERTEX_CAP) -> int:
    adj = adjacency(g)
    k = 0
    while _search(adj, {v: range(1, k + 1) for v in adj}, cap, True) is None:
        k += 1
    return k


def list_color(g, lists: ListAssignment, cap: int = DEFAULT_VERTEX_CAP) -> Coloring | None:
    adj = adjacency(g)
    missing = [v for v in adj if v not in lists.lists]
    if missing:
        raise MissingListError(f"no list for vertices {missing}")
    return _search(adj, lists.lists, cap)


def random_lists(vertices: Iterable[int], k: int, universe: int, rng: random.Random) -> ListAssignment:
    pool = range(1, universe + 1)
    return ListAssignment({v: frozenset(rng.sample(pool, k)) for v in vertices})


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    failing: ListAssignment | None
    checked: int
    exact: bool
    mode: str  # "exhaustive" or "sampled"


def _canonical_assignments(vertices, k, universe):
    """List assignments in which colours first appear in increasing order.

    Every assignment over ``1..universe`` is a renaming of one of these, so
    checking them all covers every renaming class (some more than once).
    """
    verts = list(vertices)
    chosen: list[frozenset[int]] = []

    def rec(i, top):
        if i == len(verts):
            yield dict(zip(verts, chosen))
            return
        for fresh in range(0, k + 1):
            if top + fresh > universe:
                break
            new = list(range(top + 1, top + fresh + 1))
            for old in combinations(range(1, top + 1), k - fresh):
                chosen.append(frozenset(old) | frozenset(new))
                yield from rec(i + 1, top + fresh)
                chosen.pop()

    yield from rec(0, 0)


def check_choosable(
    g,
    k: int,
    universe: int,
    *,
    samples: int | None = None,
    seed: int = 0,
    assignment_cap: int = 2_000_000,
    all_failures: bool = False,
) -> ChoosabilityResult | tuple[ChoosabilityResult, list[ListAssignment]]:
    """Try every ``k``-list assignment over colours ``1..universe``.

    Failure is conclusive.  Success is exact when ``universe >= k * |V|``;
    otherwise it is evidence for the bounded universe only.  With
    ``samples`` set, random assignments are drawn instead.
    """
    adj = adjacency(g)
    verts = sorted(adj)
    failures: list[ListAssignment] = []
    checked = 0
    if samples is not None:
        rng = random.Random(seed)
        for _ in range(samples):
            la = random_lists(verts, k, universe, rng)
            checked += 1
            if _search(adj, la.lists, DEFAULT_VERTEX_CAP) is None:
                failures.append(la)
                if not all_failures:
                    break
        res = ChoosabilityResult(not failures, failures[0] if failures else None,
                                 checked, False, "sampled")
        return (res, failures) if all_failures else res
    bound = math.comb(universe, k) ** len(verts)
    if bound > assignment_cap:
        raise ResourceGuardError(
            f"up to {bound} list assignments exceed the cap {assignment_cap}; use samples="
        )
    for lists in _canonical_assignments(verts, k, universe):
        checked += 1
        if _search(adj, lists, DEFAULT_VERTEX_CAP) is None:
            failures.append(ListAssignment(lists))
            if not all_failures:
                break
    res = ChoosabilityResult(not failures, failures[0] if failures else None, checked,
                             universe >= k * len(verts), "exhaustive")
    return (res, failures) if all_failures else res


@dataclass(frozen=True)
class ExtensionStep:
    vertex: int
    colored_neighbors: int
    color: int


def extend_to_unpruned(
    core_coloring: Coloring,
    full: MedialGraph,
    prune: PruneResult,
    lists: ListAssignment,
) -> tuple[Coloring, list[ExtensionStep]]:
    """Greedily colour the medial vertices of pruned host edges.

    ``core_coloring`` colours the medial graph of ``prune.graph`` (vertices
    are pruned-host edge ids), ``full`` is the loop-free medial of the
    original host.  Edges are coloured in reverse pruning order; each must
    see at most two coloured neighbours.
    """
    adj = adjacency(full)
    colors = {prune.edge_map[i]: c for i, c in core_coloring.colors.items()}
    steps = []
    for v in reversed(prune.removed_edges):
        seen = {colors[w] for w in adj[v] if w in colors}
        n_colored = sum(1 for w in adj[v] if w in colors)
        if n_colored > 2:
            raise ClaimViolation(
                "pruned edge sees more than two coloured neighbours",
                {"vertex": v, "colored_neighbors": n_colored},
            )
        free = sorted(c for c in lists.lists[v] if c not in seen)
        if not free:
            raise ClaimViolation("no free colour during extension", {"vertex": v})
        colors[v] = free[0]
        steps.append(ExtensionStep(v, n_colored, free[0]))
    result = Coloring(dict(sorted(colors.items())))
    if not (is_proper(adj, result) and respects(lists, result)):
        raise ClaimViolation("extended colouring is not a proper list colouring",
                             {"colors": result.colors})
    return result, steps
