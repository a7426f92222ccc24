"""DOT, SVG and TSV renderings of oriented medial graphs."""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

from .embed import RotationSystem
from .medial import BLACK, MedialGraph, OrientedMedial


def provenance_tsv(m: MedialGraph) -> str:
    rows = ["medial_vertex\thost_edge"]
    rows += [f"{v}\t{e}" for v, e in enumerate(m.edge_provenance)]
    return "\n".join(rows) + "\n"


def to_dot(om: OrientedMedial, name: str = "medial") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(om.num_vertices):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(om.arcs):
        lines.append(f"  {u} -> {v} [id={e}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tutte_layout(g: RotationSystem, outer_face: int | None = None) -> np.ndarray:
    """Barycentric layout with the outer face pinned to a regular polygon."""
    n = g.num_vertices
    pos = np.zeros((n, 2))
    if g.num_edges == 0:
        for v in range(n):
            pos[v] = (v, 0.0)
        return pos
    face = g.face_by_id[outer_face if outer_face is not None else (g.outer_face or 0)]
    ring = list(dict.fromkeys(g.dart_origin[d] for d in face.boundary_darts))
    fixed = {}
    for i, v in enumerate(ring):
        t = 2 * math.pi * i / len(ring)
        fixed[v] = (math.cos(t), math.sin(t))
    free = [v for v in range(n) if v not in fixed]
    if free:
        idx = {v: i for i, v in enumerate(free)}
        a = np.zeros((len(free), len(free)))
        b = np.zeros((len(free), 2))
        for v in free:
            i = idx[v]
            for w in g.neighbors(v):
                if w == v:
                    continue
                a[i, i] += 1
                if w in fixed:
                    b[i] += fixed[w]
                else:
                    a[i, idx[w]] -= 1
            if a[i, i] == 0:
                a[i, i] = 1
        sol = np.linalg.lstsq(a, b, rcond=None)[0]
        for v in free:
            pos[v] = sol[idx[v]]
    for v, p in fixed.items():
        pos[v] = p
    return pos


def to_svg(om: OrientedMedial, size: int = 480) -> str:
    """Black faces shaded, edges as arrows; parallel edges bow apart."""
    g = om.graph
    pos = tutte_layout(g)
    margin = 30
    scale = (size - 2 * margin) / 2

    def xy(v):
        x, y = pos[v]
        return margin + (x + 1) * scale, margin + (1 - y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="16" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#222"/></marker></defs>',
    ]
    for f in g.faces:
        if om.faces.kind[f.id] != BLACK:
            continue
        pts = " ".join("{:.2f},{:.2f}".format(*xy(g.dart_origin[d])) for d in f.boundary_darts)
        out.append(f'<polygon points="{pts}" fill="#bbb" stroke="none"/>')
    groups = defaultdict(list)
    for e, (u, v) in enumerate(om.arcs):
        groups[(min(u, v), max(u, v))].append(e)
    for (a, b), es in sorted(groups.items()):
        for k, e in enumerate(es):
            u, v = om.arcs[e]
            (x1, y1), (x2, y2) = xy(u), xy(v)
            bow = (k - (len(es) - 1) / 2) * 24
            if u != a:
                bow = -bow
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            dx, dy = x2 - x1, y2 - y1
            norm = math.hypot(dx, dy) or 1.0
            cx, cy = mx - dy / norm * bow, my + dx / norm * bow
            out.append(
                f'<path d="M {x1:.2f} {y1:.2f} Q {cx:.2f} {cy:.2f} {x2:.2f} {y2:.2f}" '
                f'fill="none" stroke="#222" stroke-width="1.5" marker-end="url(#arrow)"/>'
            )
    for v in range(g.num_vertices):
        x, y = xy(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="white" stroke="#222"/>')
        out.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
