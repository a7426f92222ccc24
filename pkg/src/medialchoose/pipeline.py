"""End-to-end run: prune, build the medial, orient, certify, colour, extend."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .alontarsi import DEFAULT_EDGE_CAP, parity_count, polynomial_coefficient_oracle
from .colorer import (
    Coloring,
    ListAssignment,
    adjacency,
    chromatic_number_leq,
    extend_to_unpruned,
    is_proper,
    list_color,
    random_lists,
    respects,
)
from .embed import RotationSystem, is_bipartite, prune_low_degree
from .errors import ClaimViolation, InputError
from .medial import (
    classify_faces,
    facial_successor_check,
    medial,
    orient_black_left,
    remove_loops,
)


@dataclass
class PipelineReport:
    stages: list[tuple[str, list[tuple[str, str]]]] = field(default_factory=list)
    coloring: dict[int, int] | None = None

    def add(self, stage: str, **values) -> None:
        rows = []
        for k, v in values.items():
            if isinstance(v, bool):
                v = "yes" if v else "no"
            rows.append((k, str(v)))
        self.stages.append((stage, rows))

    def value(self, stage: str, key: str) -> str:
        for s, rows in self.stages:
            if s == stage:
                for k, v in rows:
                    if k == key:
                        return v
        raise KeyError((stage, key))

    def human(self) -> str:
        lines = []
        for stage, rows in self.stages:
            lines.append(f"[{stage}]")
            lines += [f"  {k}: {v}" for k, v in rows]
        if self.coloring is not None:
            lines.append("[coloring]")
            lines += [f"  v{v} -> {c}" for v, c in sorted(self.coloring.items())]
        return "\n".join(lines) + "\n"

    def tsv(self) -> str:
        lines = ["stage\tkey\tvalue"]
        for stage, rows in self.stages:
            lines += [f"{stage}\t{k}\t{v}" for k, v in rows]
        if self.coloring is not None:
            lines += [f"coloring\tv{v}\t{c}" for v, c in sorted(self.coloring.items())]
        return "\n".join(lines) + "\n"


def run_pipeline(
    host: RotationSystem,
    *,
    allow_nonbipartite: bool = False,
    edge_cap: int = DEFAULT_EDGE_CAP,
    oracle: bool = False,
    seed: int | None = None,
    universe: int = 5,
) -> PipelineReport:
    """Colour the loop-free medial of ``host`` from 3-lists.

    Lists are ``{1, 2, 3}`` everywhere unless ``seed`` is given, in which
    case random 3-subsets of ``1..universe`` are drawn.
    """
    rep = PipelineReport()
    bip, _ = is_bipartite(host)
    rep.add("input", vertices=host.num_vertices, edges=host.num_edges, genus=host.genus,
            bipartite=bip)
    if not bip and not allow_nonbipartite:
        raise InputError("host is not bipartite (pass allow_nonbipartite to continue)")
    if host.num_edges == 0:
        raise InputError("host has no edges")
    if not host.is_plane:
        raise InputError(f"host has genus {host.genus}; orientation needs a plane host")

    pr = prune_low_degree(host)
    core = pr.graph
    rep.add("prune", removed_vertices=len(pr.removed), removed_edges=len(pr.removed_edges),
            core_vertices=core.num_vertices, core_edges=core.num_edges)

    full = remove_loops(medial(host))
    rep.add("full_medial", vertices=full.num_vertices, edges=full.num_edges,
            loops_removed=len(full.removed_loops))

    if seed is None:
        lists = ListAssignment.uniform(range(host.num_edges), (1, 2, 3))
    else:
        lists = random_lists(range(host.num_edges), 3, universe, random.Random(seed))

    if core.num_edges == 0:
        rep.add("core", status="empty-core")
        core_coloring = Coloring({})
    else:
        m = medial(core)
        faces = classify_faces(m)
        lengths = {f.id: f.length for f in m.graph.faces}
        white_even = all(lengths[f] % 2 == 0 for f in faces.white)
        rep.add("medial", vertices=m.num_vertices, edges=m.num_edges,
                faces=len(m.graph.faces), loops=len(m.loops()))
        rep.add("faces", black=len(faces.black), white=len(faces.white),
                white_all_even=white_even)
        if bip and not white_even:
            raise ClaimViolation("white face of odd length over a bipartite host", {})
        om = orient_black_left(m, faces)
        rep.add("orient", facial_successor=facial_successor_check(om),
                black_left=not om.black_left_violations())
        pc = parity_count(om, edge_cap)
        rep.add("certify", E_even=pc.even_count, E_odd=pc.odd_count,
                difference=pc.difference, certified_3_choosable=pc.certified)
        if oracle:
            coef = polynomial_coefficient_oracle(om)
            rep.add("oracle", coefficient=coef, agrees=abs(coef) == abs(pc.difference))
            if abs(coef) != abs(pc.difference):
                raise ClaimViolation("polynomial coefficient disagrees with parity count",
                                     {"coefficient": coef, "difference": pc.difference})
        if bip and not pc.certified:
            raise ClaimViolation("bipartite host with equal even and odd counts",
                                 {"E_even": pc.even_count, "E_odd": pc.odd_count})
        if not bip:
            rep.add("chromatic", three_colorable=chromatic_number_leq(m, 3) is not None)
        core_lists = ListAssignment({i: lists.lists[old] for i, old in enumerate(pr.edge_map)})
        core_col = list_color(m, core_lists)
        rep.add("color", lists="uniform" if seed is None else f"random(seed={seed})",
                colored=core_col is not None)
        if core_col is None:
            if bip:
                raise ClaimViolation("certified medial failed to list-colour", {})
            return rep
        core_coloring = core_col
    col, steps = extend_to_unpruned(core_coloring, full, pr, lists)
    rep.add("extend", extended=len(steps),
            max_colored_neighbors=max((s.colored_neighbors for s in steps), default=0),
            proper=is_proper(adjacency(full), col) and respects(lists, col))
    rep.coloring = col.colors
    return rep

