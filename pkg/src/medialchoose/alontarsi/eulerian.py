"""Spanning Eulerian subdigraphs, their parity counts and the graph polynomial.

Subgraphs are edge bitmasks over the digraph's edge order.  Anything with
``num_vertices``, ``num_edges`` and ``arcs`` (tail, head per edge) can be
fed in, so tests can use bare digraphs as well as oriented medials.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import ResourceGuardError

DEFAULT_EDGE_CAP = 32
DEFAULT_MONOMIAL_CAP = 2_000_000


@dataclass(frozen=True)
class Digraph:
    num_vertices: int
    arcs: tuple[tuple[int, int], ...]

    @property
    def num_edges(self) -> int:
        return len(self.arcs)


def cycle_digraph(n: int) -> Digraph:
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class EulerianSubgraph:
    mask: int
    num_edges: int

    @property
    def edges(self) -> tuple[int, ...]:
        return mask_edges(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_even(self) -> bool:
        return self.size % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"


@dataclass(frozen=True)
class ParityCount:
    even_count: int
    odd_count: int

    @property
    def difference(self) -> int:
        return self.even_count - self.odd_count

    @property
    def certified(self) -> bool:
        return self.difference != 0


def mask_edges(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def edges_mask(edges) -> int:
    m = 0
    for e in edges:
        m |= 1 << e
    return m


def is_eulerian(dg, mask: int) -> bool:
    bal = [0] * dg.num_vertices
    for e in mask_edges(mask):
        u, v = dg.arcs[e]
        bal[u] += 1
        bal[v] -= 1
    return not any(bal)


def _check_cap(dg, edge_cap):
    if dg.num_edges > edge_cap:
        raise ResourceGuardError(
            f"{dg.num_edges} edges exceed the enumeration cap {edge_cap}; "
            "raise --edge-cap or use parity_count, which never stores subgraphs"
        )


def _enumerate_masks(dg, prefix: Sequence[bool] = ()) -> Iterator[int]:
    """Edge-by-edge branching (exclude before include) with balance pruning."""
    m = dg.num_edges
    arcs = dg.arcs
    bal = [0] * dg.num_vertices  # out - in among chosen edges
    rem_out = [0] * dg.num_vertices
    rem_in = [0] * dg.num_vertices
    for u, v in arcs:
        if u != v:
            rem_out[u] += 1
            rem_in[v] += 1

    def ok(x):
        return -rem_out[x] <= bal[x] <= rem_in[x]

    def rec(i, mask):
        if i == m:
            yield mask
            return
        u, v = arcs[i]
        choices = (False, True) if i >= len(prefix) else (prefix[i],)
        if u == v:
            for take in choices:
                yield from rec(i + 1, mask | (1 << i) if take else mask)
            return
        rem_out[u] -= 1
        rem_in[v] -= 1
        for take in choices:
            if take:
                bal[u] += 1
                bal[v] -= 1
            if ok(u) and ok(v):
                yield from rec(i + 1, mask | (1 << i) if take else mask)
            if take:
                bal[u] -= 1
                bal[v] += 1
        rem_out[u] += 1
        rem_in[v] += 1

    yield from rec(0, 0)


def enumerate_eulerian(
    dg, edge_cap: int = DEFAULT_EDGE_CAP, prefix: Sequence[bool] = ()
) -> Iterator[EulerianSubgraph]:
    """Every spanning Eulerian subgraph, once each, in branching order.

    ``prefix`` fixes the in/out decision for the first edges, so disjoint
    prefixes partition the stream.
    """
    _check_cap(dg, edge_cap)
    for mask in _enumerate_masks(dg, prefix):
        yield EulerianSubgraph(mask, dg.num_edges)


def eulerian_masks(dg, edge_cap: int = DEFAULT_EDGE_CAP) -> list[int]:
    _check_cap(dg, edge_cap)
    return list(_enumerate_masks(dg))


def parity_count(
    dg, edge_cap: int = DEFAULT_EDGE_CAP, prefix: Sequence[bool] = ()
) -> ParityCount:
    _check_cap(dg, edge_cap)
    even = odd = 0
    for mask in _enumerate_masks(dg, prefix):
        if mask.bit_count() & 1:
            odd += 1
        else:
            even += 1
    return ParityCount(even, odd)


def merge_counts(counts) -> ParityCount:
    counts = list(counts)
    return ParityCount(sum(c.even_count for c in counts), sum(c.odd_count for c in counts))


def _elimination_order(dg) -> list[int]:
    """Edge order that finishes vertices early, so monomials can be filtered."""
    inc = defaultdict(list)
    for e, (u, v) in enumerate(dg.arcs):
        inc[u].append(e)
        inc[v].append(e)
    order, placed, seen = [], set(), set()
    for s in range(dg.num_vertices):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop(0)
            for e in inc[x]:
                if e not in placed:
                    placed.add(e)
                    order.append(e)
                for w in dg.arcs[e]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
    return order


def polynomial_coefficient_oracle(dg, monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> int:
    """Coefficient of prod x_v^outdeg(v) in prod over arcs (u, v) of (x_u - x_v).

    Expands the product factor by factor, dropping monomials that overshoot
    a target exponent or that leave a finished vertex short of it.
    """
    n = dg.num_vertices
    target = [0] * n
    for u, _ in dg.arcs:
        target[u] += 1
    if any(u == v for u, v in dg.arcs):
        return 0
    order = _elimination_order(dg)
    last = {}
    for pos, e in enumerate(order):
        for x in dg.arcs[e]:
            last[x] = pos
    finishing = defaultdict(list)
    for x, pos in last.items():
        finishing[pos].append(x)
    poly = {tuple([0] * n): 1}
    for pos, e in enumerate(order):
        u, v = dg.arcs[e]
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for mono, c in poly.items():
            if mono[u] < target[u]:
                m2 = list(mono)
                m2[u] += 1
                nxt[tuple(m2)] += c
            if mono[v] < target[v]:
                m2 = list(mono)
                m2[v] += 1
                nxt[tuple(m2)] -= c
        done = finishing.get(pos, ())
        poly = {
            mono: c for mono, c in nxt.items()
            if c and all(mono[x] == target[x] for x in done)
        }
        if len(poly) > monomial_cap:
            raise ResourceGuardError(f"expansion passed {monomial_cap} monomials")
    return poly.get(tuple(target), 0)
