"""Named plane graphs used by the tests, the acceptance suite and the CLI.

Every fixture is a straight-line drawing, so rotations come from angles and
the outer face from the signed area of the face polygons.
"""

from __future__ import annotations

import math
from pathlib import Path

from .embed import RotationSystem, from_drawing, from_rotations, write

FIXTURE_VERSION = 1


def _cycle(n: int, radius: float = 2.0) -> RotationSystem:
    pos = [(radius * math.cos(2 * math.pi * i / n), radius * math.sin(2 * math.pi * i / n))
           for i in range(n)]
    return from_drawing(pos, [(i, (i + 1) % n) for i in range(n)])


def c3() -> RotationSystem:
    return _cycle(3)


def c4() -> RotationSystem:
    return _cycle(4)


def k2() -> RotationSystem:
    return from_drawing([(0, 0), (1, 0)], [(0, 1)])


def k4() -> RotationSystem:
    pos = [(0, 0), (4, 0), (2, 4), (2, 1.5)]
    return from_drawing(pos, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


def k4_twisted() -> RotationSystem:
    """K4 with the rotation at vertex 3 reversed; lands on the torus."""
    g = k4()
    rots = [list(r) for r in g.rotations]
    rots[3] = rots[3][::-1]
    return from_rotations(rots)


def k4_subdivided() -> RotationSystem:
    pos = [(0, 0), (4, 0), (2, 4), (2, 1.5), (2, -1)]
    return from_drawing(pos, [(0, 4), (4, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


_Q3_POS = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 1), (3, 1), (3, 3), (1, 3)]
_Q3_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]


def q3() -> RotationSystem:
    return from_drawing(_Q3_POS, _Q3_EDGES)


def q3_minus_edge() -> RotationSystem:
    return from_drawing(_Q3_POS, _Q3_EDGES[:-1])


def q3_pendant_path() -> RotationSystem:
    """The cube with a path of length two hanging off an outer corner."""
    return from_drawing(_Q3_POS + [(5, 5), (6, 6)], _Q3_EDGES + [(2, 8), (8, 9)])


def k23() -> RotationSystem:
    pos = [(0, 2), (0, -2), (-2, 0), (0, 0), (2, 0)]
    return from_drawing(pos, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def theta_133() -> RotationSystem:
    """Two vertices joined by paths of lengths 1, 3 and 3."""
    pos = [(0, 0), (4, 0), (1, 2), (3, 2), (1, -2), (3, -2)]
    return from_drawing(pos, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])


def grid_2x3() -> RotationSystem:
    """Two rows of three vertices: a strip of two squares."""
    pos = [(x, y) for y in range(2) for x in range(3)]
    edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]
    return from_drawing(pos, edges)


def wheel(rim: int) -> RotationSystem:
    """Hub 0 joined to a rim cycle on ``rim`` vertices."""
    pos = [(0.0, 0.0)] + [(3 * math.cos(2 * math.pi * i / rim), 3 * math.sin(2 * math.pi * i / rim))
                          for i in range(rim)]
    edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)] + [(0, 1 + i) for i in range(rim)]
    return from_drawing(pos, edges)


def c4_pendant() -> RotationSystem:
    pos = [(0, 0), (2, 0), (2, 2), (0, 2), (3, 3)]
    return from_drawing(pos, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])


def triangle_pendant() -> RotationSystem:
    pos = [(0, 0), (2, 0), (1, 2), (1, 3)]
    return from_drawing(pos, [(0, 1), (1, 2), (2, 0), (2, 3)])


def star_k13() -> RotationSystem:
    pos = [(0, 0), (1, 0), (-1, 1), (-1, -1)]
    return from_drawing(pos, [(0, 1), (0, 2), (0, 3)])


def tree() -> RotationSystem:
    pos = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, -1)]
    return from_drawing(pos, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])


# Host with an even subgraph H whose four faces are the outer face, an
# annulus, the disc inside the annulus and a separate square: two green and
# two blue faces.  Edges 0..11 form H.
_FIG1_POS = [
    (0, 0), (6, 0), (6, 6), (0, 6),      # 0-3 big square
    (2, 2), (4, 2), (4, 4), (2, 4),      # 4-7 square inside it
    (8, 0), (10, 0), (10, 2), (8, 2),    # 8-11 separate square
    (3, 3), (1, 3), (9, 1), (7, 4),      # 12 centre, 13 annulus, 14 in square, 15 outside
]
_FIG1_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 0),
    (4, 5), (5, 6), (6, 7), (7, 4),
    (8, 9), (9, 10), (10, 11), (11, 8),
    (12, 4), (12, 6),
    (13, 0), (13, 4), (13, 7), (3, 7),
    (14, 8), (14, 10),
    (15, 2), (15, 1), (15, 11), (1, 8),
]
FIG1_SUBGRAPH = tuple(range(12))


def fig1() -> RotationSystem:
    return from_drawing(_FIG1_POS, _FIG1_EDGES)


FIXTURES = {
    "c3": c3,
    "c4": c4,
    "k2": k2,
    "k4": k4,
    "k4-twisted": k4_twisted,
    "k4-subdiv": k4_subdivided,
    "q3": q3,
    "q3-minus-edge": q3_minus_edge,
    "q3-pendant-path": q3_pendant_path,
    "k23": k23,
    "theta-133": theta_133,
    "grid-2x3": grid_2x3,
    "wheel-5": lambda: wheel(5),
    "wheel-6": lambda: wheel(6),
    "c4-pendant": c4_pendant,
    "triangle-pendant": triangle_pendant,
    "star-k13": star_k13,
    "tree": tree,
    "fig1": fig1,
}

# bipartite plane hosts with minimum degree two
BIPARTITE_CORE = ("q3", "c4", "grid-2x3", "k23", "theta-133", "q3-minus-edge")
# bipartite hosts that lose vertices to pruning
BIPARTITE_PRUNED = ("q3-pendant-path", "c4-pendant", "star-k13", "tree")


def fixture(name: str) -> RotationSystem:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None


def write_fixture(name: str, directory: str | Path) -> list[Path]:
    """Write ``<name>.pg`` (and a sidecar for fig1) into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.pg"
    write(path, fixture(name))
    out = [path]
    if name == "fig1":
        side = directory / "fig1.subgraph"
        side.write_text("edges " + " ".join(map(str, FIG1_SUBGRAPH)) + "\n", encoding="ascii")
        out.append(side)
    return out
