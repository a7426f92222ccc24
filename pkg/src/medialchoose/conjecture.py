"""Counterexample search for 3-colourability of plane graphs whose faces
2-colour with one class made of even faces only."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .colorer import chromatic_number_leq
from .embed import RotationSystem, read
from .errors import NonSimpleGraphError, ResourceGuardError

CONSISTENT = "consistent"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
UNSATISFIED = "hypothesis-unsatisfied"
NOT_PLANE = "not-plane"
REJECTED = "rejected-nonsimple"


@dataclass(frozen=True)
class ConjectureCase:
    graph_id: str
    face_classes: tuple[tuple[int, ...], tuple[int, ...]] | None
    even_class: int | None  # index into face_classes of the all-even class
    three_colorable: bool | None
    verdict: str

    def row(self) -> str:
        classes = "-" if self.face_classes is None else "|".join(
            ",".join(map(str, c)) for c in self.face_classes)
        three = "-" if self.three_colorable is None else ("yes" if self.three_colorable else "no")
        even = "-" if self.even_class is None else str(self.even_class)
        return f"{self.graph_id}\t{classes}\t{even}\t{three}\t{self.verdict}"


TSV_HEADER = "graph\tface_classes\teven_class\tthree_colorable\tverdict"


def face_two_colorings(g: RotationSystem, cap: int = 10_000) -> list[dict[int, int]]:
    """Every proper 2-colouring of the faces (adjacent across an edge)."""
    adj: dict[int, set[int]] = {f.id: set() for f in g.faces}
    for e in range(g.num_edges):
        a, b = g.face_of_dart[2 * e], g.face_of_dart[2 * e + 1]
        if a == b:
            return []
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(adj)
    found: list[dict[int, int]] = []
    color: dict[int, int] = {}

    def rec(i):
        if len(found) > cap:
            raise ResourceGuardError(f"more than {cap} face 2-colourings")
        if i == len(order):
            found.append(dict(color))
            return
        f = order[i]
        for c in (0, 1):
            if all(color.get(h) != c for h in adj[f]):
                color[f] = c
                rec(i + 1)
                del color[f]

    rec(0)
    return found


def examine(g: RotationSystem, graph_id: str, skip_nonsimple: bool = False) -> ConjectureCase:
    if not g.is_simple():
        if skip_nonsimple:
            return ConjectureCase(graph_id, None, None, None, REJECTED)
        raise NonSimpleGraphError(f"{graph_id}: loops or parallel edges are not allowed")
    if not g.is_plane:
        return ConjectureCase(graph_id, None, None, None, NOT_PLANE)
    length = {f.id: f.length for f in g.faces}
    for coloring in face_two_colorings(g):
        classes = tuple(
            tuple(sorted(f for f, c in coloring.items() if c == k)) for k in (0, 1)
        )
        for k in (0, 1):
            if all(length[f] % 2 == 0 for f in classes[k]):
                three = chromatic_number_leq(g, 3) is not None
                verdict = CONSISTENT if three else COUNTEREXAMPLE
                return ConjectureCase(graph_id, classes, k, three, verdict)
    return ConjectureCase(graph_id, None, None, None, UNSATISFIED)


def search_conjecture(paths, skip_nonsimple: bool = False, stop_on_counterexample: bool = True):
    cases = []
    for p in sorted(Path(x) for x in paths):
        case = examine(read(p), p.stem, skip_nonsimple)
        cases.append(case)
        if case.verdict == COUNTEREXAMPLE and stop_on_counterexample:
            break
    return cases
