"""Executable checks of the injection from odd to even Eulerian subgraphs.

The pairing simulation removes subgraphs cycle by cycle and verifies that
each step is balanced; the witness is an even subgraph that no step can
remove.  Failures raise :class:`ClaimViolation` with the offending data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..colorer import chromatic_number_leq
from ..embed import eulerian_face_partition
from ..errors import ClaimViolation, ResourceGuardError
from ..medial import BLACK, WHITE, OrientedMedial
from .cycles import (
    DEFAULT_CYCLE_LEN_CAP,
    DirectedCycle,
    all_cycles,
    complement_mask,
    odd_black_cycles,
    vi_ve_parity_check,
)
from .eulerian import (
    DEFAULT_EDGE_CAP,
    EulerianSubgraph,
    edges_mask,
    eulerian_masks,
    is_eulerian,
    mask_edges,
)


@dataclass(frozen=True)
class PairingStep:
    index: int
    cycle: DirectedCycle
    removed_even: int
    removed_odd: int
    unpaired: tuple[int, ...]  # removed masks whose complement was already gone
    later_matches: int  # removed masks that a later cycle would also catch


@dataclass(frozen=True)
class PairingLog:
    steps: tuple[PairingStep, ...]
    total: int
    survivors: frozenset[int] = field(repr=False)

    @property
    def surviving_even(self) -> int:
        return sum(1 for x in self.survivors if x.bit_count() % 2 == 0)

    @property
    def surviving_odd(self) -> int:
        return len(self.survivors) - self.surviving_even

    def tsv(self) -> str:
        rows = ["step\tcycle_id\tremoved_even\tremoved_odd"]
        for s in self.steps:
            rows.append(f"{s.index}\t{','.join(map(str, s.cycle.edges))}\t"
                        f"{s.removed_even}\t{s.removed_odd}")
        return "\n".join(rows) + "\n"


def pairing_removal_simulation(
    om: OrientedMedial,
    edge_cap: int = DEFAULT_EDGE_CAP,
    cycle_len_cap: int = DEFAULT_CYCLE_LEN_CAP,
    strict: bool = True,
    odd_cycles=None,
) -> PairingLog:
    """Remove, for each odd black cycle in order, every surviving subgraph
    that contains all of its edges or none of them.

    A subgraph leaves at the first step that catches it.  With ``strict``
    set, an unbalanced step, an unpaired removal, an odd survivor or an
    empty survivor set raises :class:`ClaimViolation`.
    """
    if odd_cycles is None:
        odd_cycles = odd_black_cycles(om, cycle_len_cap)
    if odd_cycles.truncated:
        raise ResourceGuardError(
            f"cycle enumeration hit the length cap {cycle_len_cap}; "
            "the odd black cycle list may be incomplete"
        )
    everything = eulerian_masks(om, edge_cap)
    alive = set(everything)
    cycles = list(odd_cycles)
    steps = []
    for i, c in enumerate(cycles, start=1):
        caught = sorted(x for x in alive if (x & c.mask) in (0, c.mask))
        caught_set = set(caught)
        unpaired = tuple(
            x for x in caught
            if complement_mask(x, c.mask, c.interior, c.exterior) not in caught_set
        )
        later = sum(
            1 for x in caught
            if any((x & d.mask) in (0, d.mask) for d in cycles[i:])
        )
        odd = sum(1 for x in caught if x.bit_count() & 1)
        step = PairingStep(i, c, len(caught) - odd, odd, unpaired, later)
        steps.append(step)
        alive -= caught_set
        if strict and (unpaired or step.removed_even != step.removed_odd):
            raise ClaimViolation(
                f"pairing step {i} is unbalanced",
                {
                    "step": i,
                    "cycle": list(c.edges),
                    "removed_even": step.removed_even,
                    "removed_odd": step.removed_odd,
                    "unpaired": [list(mask_edges(x)) for x in unpaired],
                },
            )
    log = PairingLog(tuple(steps), len(everything), frozenset(alive))
    if strict and (log.surviving_odd or not log.surviving_even):
        raise ClaimViolation(
            "pairing left odd survivors or no even survivor",
            {"surviving_even": log.surviving_even, "surviving_odd": log.surviving_odd},
        )
    return log


@dataclass(frozen=True)
class Witness:
    subgraph: EulerianSubgraph
    face_colors: dict[int, int]  # white face -> 1..4
    red: tuple[int, ...]
    blue: tuple[int, ...]
    cycles_checked: int


def white_face_graph(om: OrientedMedial) -> dict[int, set[int]]:
    """White faces, adjacent when they share a medial vertex."""
    g = om.graph
    kind = om.faces.kind
    adj: dict[int, set[int]] = {f: set() for f in om.faces.white}
    for rot in g.rotations:
        whites = sorted({g.face_of_dart[d] for d in rot if kind[g.face_of_dart[d]] == WHITE})
        for a, b in combinations(whites, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def witness_even_subgraph(
    om: OrientedMedial,
    cycle_len_cap: int = DEFAULT_CYCLE_LEN_CAP,
    odd_cycles=None,
) -> Witness:
    """Union of the red white-face boundaries for a red/blue split of a
    4-colouring of the white-face graph (classes 1, 2 red; 3, 4 blue)."""
    adj = white_face_graph(om)
    col = chromatic_number_leq(adj, 4)
    if col is None:
        raise ClaimViolation("white-face graph is not 4-colourable",
                             {"adjacency": {k: sorted(v) for k, v in adj.items()}})
    red = tuple(f for f in sorted(adj) if col[f] <= 2)
    blue = tuple(f for f in sorted(adj) if col[f] > 2)
    g = om.graph
    red_set = set(red)
    mask = 0
    for e in range(g.num_edges):
        if g.face_of_dart[2 * e] in red_set or g.face_of_dart[2 * e + 1] in red_set:
            mask |= 1 << e
    sub = EulerianSubgraph(mask, g.num_edges)
    if not is_eulerian(om, mask) or not sub.is_even:
        raise ClaimViolation("red boundary union is not an even Eulerian subgraph",
                             {"edges": list(sub.edges)})
    if odd_cycles is None:
        odd_cycles = odd_black_cycles(om, cycle_len_cap)
    for c in odd_cycles:
        if (mask & c.mask) in (0, c.mask):
            raise ClaimViolation(
                "witness takes all or none of an odd black cycle",
                {"cycle": list(c.edges), "red": list(red), "blue": list(blue)},
            )
    return Witness(sub, dict(col.colors), red, blue, len(odd_cycles))


# -- further checks of the argument on concrete instances -----------------------


@dataclass
class ClaimReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_complement_claim(om: OrientedMedial, masks=None, odd_cycles=None,
                           only_all_or_none: bool = False) -> dict[str, ClaimReport]:
    """Parity flip, involution and Eulerian-ness of every D-complement.

    With ``only_all_or_none`` the pairs are restricted to subgraphs holding
    all or none of the cycle's edges.
    """
    masks = eulerian_masks(om) if masks is None else masks
    odd_cycles = odd_black_cycles(om) if odd_cycles is None else odd_cycles
    parity = ClaimReport("parity flips")
    involution = ClaimReport("involution")
    euler = ClaimReport("complement is Eulerian")
    for c in odd_cycles:
        for x in masks:
            if only_all_or_none and (x & c.mask) not in (0, c.mask):
                continue
            y = complement_mask(x, c.mask, c.interior, c.exterior)
            for rep in (parity, involution, euler):
                rep.checked += 1
            if (y.bit_count() - x.bit_count()) % 2 == 0:
                parity.failures.append((c.edges, mask_edges(x)))
            if complement_mask(y, c.mask, c.interior, c.exterior) != x:
                involution.failures.append((c.edges, mask_edges(x)))
            if not is_eulerian(om, y):
                euler.failures.append((c.edges, mask_edges(x), mask_edges(y)))
    return {"parity": parity, "involution": involution, "eulerian": euler}


def check_black_interiors_even(om: OrientedMedial, cycles=None) -> ClaimReport:
    cycles = all_cycles(om)[0] if cycles is None else cycles
    rep = ClaimReport("black interiors have an even number of edges")
    for c in cycles:
        if c.kind == BLACK:
            rep.checked += 1
            if c.interior.bit_count() % 2:
                rep.failures.append(c.edges)
    return rep


def check_vi_ve(om: OrientedMedial, odd_cycles=None) -> ClaimReport:
    odd_cycles = odd_black_cycles(om) if odd_cycles is None else odd_cycles
    rep = ClaimReport("|V_i| even and |V_e| odd")
    for c in odd_cycles:
        rep.checked += 1
        try:
            vi_ve_parity_check(om, c)
        except ClaimViolation as exc:
            rep.failures.append(exc.details)
    return rep


def check_crossing_cycles_share_edges(om: OrientedMedial, cycles=None) -> ClaimReport:
    """Two directed cycles where one has edges both inside and outside the
    other must share an edge."""
    cycles = all_cycles(om)[0] if cycles is None else cycles
    rep = ClaimReport("crossing cycles share an edge")
    for d1 in cycles:
        for d2 in cycles:
            if d1 is d2:
                continue
            if d2.mask & d1.interior and d2.mask & d1.exterior:
                rep.checked += 1
                if not d1.mask & d2.mask:
                    rep.failures.append((d1.edges, d2.edges))
    return rep


def white_eulerian_subgraphs(om: OrientedMedial, cycles=None, cap: int = 200_000) -> set[int]:
    """Nonempty unions of pairwise edge-disjoint white cycles."""
    cycles = all_cycles(om)[0] if cycles is None else cycles
    whites = sorted({c.mask for c in cycles if c.kind == WHITE})
    found: set[int] = set()

    def rec(start, used):
        for i in range(start, len(whites)):
            w = whites[i]
            if w & used:
                continue
            u = used | w
            found.add(u)
            if len(found) > cap:
                raise ResourceGuardError(f"more than {cap} white Eulerian subgraphs")
            rec(i + 1, u)

    rec(0, 0)
    return found


def check_odd_white_interiors(om: OrientedMedial, masks=None, cycles=None) -> ClaimReport:
    """For every Eulerian ``X`` and odd white Eulerian ``D`` inside it, the
    interior of ``D`` within ``X`` or within its ``D``-complement holds an
    odd black cycle."""
    cycles = all_cycles(om)[0] if cycles is None else cycles
    masks = eulerian_masks(om) if masks is None else masks
    odd_black = [c.mask for c in cycles if c.kind == BLACK and c.is_odd]
    rep = ClaimReport("odd white subgraphs enclose an odd black cycle")
    parts = {}
    for d in sorted(white_eulerian_subgraphs(om, cycles)):
        if d.bit_count() % 2 == 0:
            continue
        part = eulerian_face_partition(om.graph, mask_edges(d))
        parts[d] = (edges_mask(part.interior_edges), edges_mask(part.exterior_edges))
    for x in masks:
        for d, (inner, outer) in parts.items():
            if x & d != d:
                continue
            rep.checked += 1
            y = complement_mask(x, d, inner, outer)
            in_x, in_y = x & inner, y & inner
            if not any((c & in_x) == c or (c & in_y) == c for c in odd_black):
                rep.failures.append((mask_edges(x), mask_edges(d)))
    return rep
