"""Property checks over random straight-line plane graphs."""

from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from medialchoose import alontarsi as at
from medialchoose.colorer import chromatic_number_leq
from medialchoose.embed import from_drawing, from_rotations, load, prune_low_degree, serialize
from medialchoose.medial import (
    classify_faces,
    degrees,
    facial_successor_check,
    medial,
    orient_black_left,
)

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a, b, p):
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _conflict(p, q, r, s, pts):
    """Segments pq and rs cross, overlap, or pq passes through another point."""
    if {p, q} & {r, s}:
        shared = ({p, q} & {r, s}).pop()
        a = q if shared == p else p
        b = s if shared == r else r
        return _orient(shared, a, b) == 0 and _on_segment(shared, a, b) or (
            _orient(shared, b, a) == 0 and _on_segment(shared, b, a))
    o1, o2, o3, o4 = _orient(p, q, r), _orient(p, q, s), _orient(r, s, p), _orient(r, s, q)
    if o1 != o2 and o3 != o4:
        return True
    return (o1 == 0 and _on_segment(p, q, r)) or (o2 == 0 and _on_segment(p, q, s)) or (
        o3 == 0 and _on_segment(r, s, p)) or (o4 == 0 and _on_segment(r, s, q))


@st.composite
def plane_graphs(draw, max_points=7, max_edges=12, bipartite=False):
    pts = draw(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)),
                        min_size=2, max_size=max_points, unique=True))
    side = [draw(st.booleans()) for _ in pts]
    cands = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))
             if not bipartite or side[i] != side[j]]
    order = draw(st.permutations(cands)) if cands else []
    edges = []
    for i, j in order:
        if len(edges) == max_edges:
            break
        p, q = pts[i], pts[j]
        if any(k not in (i, j) and _orient(p, q, x) == 0 and _on_segment(p, q, x)
               for k, x in enumerate(pts)):
            continue
        if any(_conflict(p, q, pts[a], pts[b], pts) for a, b in edges):
            continue
        edges.append((i, j))
    return from_drawing(pts, edges)


@st.composite
def rotation_systems(draw):
    m = draw(st.integers(1, 6))
    n = draw(st.integers(1, 4))
    darts = draw(st.permutations(list(range(2 * m))))
    cuts = sorted(draw(st.lists(st.integers(0, 2 * m), min_size=n - 1, max_size=n - 1)))
    bounds = [0] + cuts + [2 * m]
    return from_rotations([darts[bounds[i]:bounds[i + 1]] for i in range(n)])


@SETTINGS
@given(rotation_systems())
def test_round_trip_any_surface(g):
    assert load(serialize(g)) == g
    assert g.genus >= 0


@SETTINGS
@given(rotation_systems())
def test_euler_characteristic(g):
    active = [c for c in g.components if any(g.degree(v) for v in c)]
    v = sum(len(c) for c in active)
    assert v - g.num_edges + len(g.faces) == 2 * len(active) - 2 * g.genus


@SETTINGS
@given(plane_graphs())
def test_drawings_are_plane(g):
    assert g.is_plane
    assert load(serialize(g)) == g


@SETTINGS
@given(plane_graphs())
def test_prune_is_idempotent(g):
    core = prune_low_degree(g).graph
    again = prune_low_degree(core)
    assert not again.removed and again.graph == core
    assert all(core.degree(v) >= 2 for v in range(core.num_vertices))


@SETTINGS
@given(plane_graphs())
def test_medial_orientation(g):
    if g.num_edges == 0:
        return
    m = medial(g)
    assert m.graph.is_plane
    assert all(m.graph.degree(v) == 4 for v in range(m.num_vertices))
    fc = classify_faces(m)
    assert len(fc.black) + len(fc.white) == len(m.graph.faces)
    om = orient_black_left(m, fc)
    assert facial_successor_check(om) and not om.black_left_violations()
    assert all(d == (2, 2) for d in degrees(om))


@SETTINGS
@given(plane_graphs(max_points=6, max_edges=7))
def test_parity_engines_agree(g):
    if g.num_edges == 0:
        return
    om = orient_black_left(medial(g))
    pc = at.parity_count(om)
    assert abs(at.polynomial_coefficient_oracle(om)) == abs(pc.difference)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(plane_graphs(max_points=7, max_edges=10, bipartite=True))
def test_bipartite_cores_are_certified(g):
    core = prune_low_degree(g).graph
    if core.num_edges == 0:
        return
    om = orient_black_left(medial(core))
    assert at.parity_count(om).certified
    assert chromatic_number_leq(om, 3) is not None


@SETTINGS
@given(plane_graphs(max_points=6, max_edges=8))
def test_colorability_is_monotone_in_k(g):
    adj = {v: set() for v in range(g.num_vertices)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    ok = [chromatic_number_leq(adj, k) is not None for k in range(1, 6)]
    assert ok == sorted(ok)
