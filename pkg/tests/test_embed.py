from __future__ import annotations

import pytest

from medialchoose.embed import (
    BLUE,
    GREEN,
    eulerian_face_partition,
    faces,
    from_rotations,
    is_bipartite,
    load,
    prune_low_degree,
    restrict,
    serialize,
    twin,
)
from medialchoose.errors import (
    DanglingDartError,
    DartRangeError,
    DuplicateDartError,
    MalformedLineError,
    NotEulerianError,
    OuterDartError,
    ParseError,
    VertexOrderError,
)
from medialchoose.fixtures import FIG1_SUBGRAPH, FIXTURES, fixture

C4_TEXT = """\
# a 4-cycle
planegraph 4 4
outer 1
v 0: 0 7
v 1: 2 1
v 2: 4 3
v 3: 6 5
"""


def test_twin_flips_low_bit():
    assert [twin(d) for d in range(4)] == [1, 0, 3, 2]


def test_load_c4():
    g = load(C4_TEXT)
    assert (g.num_vertices, g.num_edges, g.genus, len(g.faces)) == (4, 4, 0, 2)
    assert g.is_plane
    assert sorted(f.length for f in faces(g)) == [4, 4]


def test_k4_plane_and_twisted():
    assert fixture("k4").genus == 0
    assert len(fixture("k4").faces) == 4
    t = fixture("k4-twisted")
    # Hand count of the face permutation after reversing vertex 3: two faces.
    assert len(t.faces) == 2
    assert t.genus == 1 and not t.is_plane


@pytest.mark.parametrize(
    "text, err",
    [
        ("graph 1 0\nv 0:\n", MalformedLineError),
        ("planegraph 2 1\nv 0: 0\nv 1: 0\n", DuplicateDartError),
        ("planegraph 2 1\nv 0: 0\nv 1:\n", DanglingDartError),
        ("planegraph 2 1\nv 0: 0\nv 1: 5\n", DartRangeError),
        ("planegraph 2 1\nv 1: 0\nv 0: 1\n", VertexOrderError),
        ("planegraph 2 1\nouter 9\nv 0: 0\nv 1: 1\n", OuterDartError),
        ("planegraph 2 1\nv 0: 0 x\nv 1: 1\n", MalformedLineError),
        ("", MalformedLineError),
    ],
)
def test_parse_errors_are_distinct_and_name_the_line(text, err):
    with pytest.raises(err) as info:
        load(text)
    assert isinstance(info.value, ParseError)
    assert info.value.line is not None


def test_duplicate_dart_reports_second_line():
    with pytest.raises(DuplicateDartError) as info:
        load("planegraph 2 1\nv 0: 0\nv 1: 0\n")
    assert info.value.line == 3


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_round_trip(name):
    g = fixture(name)
    assert load(serialize(g)) == g
    assert serialize(load(serialize(g))) == serialize(g)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_faces_partition_darts(name):
    g = fixture(name)
    darts = sorted(d for f in g.faces for d in f.boundary_darts)
    assert darts == list(range(2 * g.num_edges))
    ids = [f.id for f in g.faces]
    assert ids == sorted(ids) and all(f.id == min(f.boundary_darts) for f in g.faces)


def test_face_lengths():
    assert sorted(f.length for f in fixture("q3").faces) == [4] * 6
    k2 = fixture("k2")
    assert [f.length for f in k2.faces] == [2]


def test_is_bipartite():
    assert is_bipartite(fixture("q3")) == (True, None)
    ok, walk = is_bipartite(fixture("k4"))
    assert not ok and len(walk) == 3
    loop = from_rotations([[0, 1]])
    ok, walk = is_bipartite(loop)
    assert not ok and walk == [0]


def test_prune():
    assert prune_low_degree(fixture("tree")).graph.num_vertices == 0
    pr = prune_low_degree(fixture("c4-pendant"))
    assert (pr.graph.num_vertices, pr.graph.num_edges) == (4, 4)
    assert pr.removed == ((4, 4),) and pr.removed_edges == [4]
    q = prune_low_degree(fixture("q3"))
    assert q.graph == fixture("q3") and not q.removed


def test_prune_keeps_outer_face():
    pr = prune_low_degree(fixture("q3-pendant-path"))
    g = pr.graph
    assert g.outer_face is not None
    assert g.face_by_id[g.outer_face].length == 4


def test_partition_empty_subgraph():
    g = fixture("q3")
    p = eulerian_face_partition(g, [])
    assert p.green_faces == (0,) and p.blue_faces == ()
    assert p.interior_vertices == frozenset()
    assert p.exterior_vertices == frozenset(range(8))


def test_partition_single_inner_face():
    g = fixture("q3")
    inner = next(f for f in g.faces if f.id != g.outer_face)
    edges = sorted({d >> 1 for d in inner.boundary_darts})
    p = eulerian_face_partition(g, edges)
    on_face = {g.dart_origin[d] for d in inner.boundary_darts}
    assert p.interior_vertices == frozenset(on_face)
    assert p.exterior_vertices == frozenset(range(8))
    assert p.interior_vertices & p.exterior_vertices == p.boundary_vertices


def test_partition_rejects_odd_degree():
    with pytest.raises(NotEulerianError):
        eulerian_face_partition(fixture("q3"), [0])


def test_fig1_partition():
    g = fixture("fig1")
    p = eulerian_face_partition(g, FIG1_SUBGRAPH)
    assert len(p.green_faces) == 2 and len(p.blue_faces) == 2
    assert p.region_color[p.region_of_face[g.outer_face]] == GREEN
    h = frozenset(range(12))
    assert p.interior_vertices == h | {13, 14}
    assert p.exterior_vertices == h | {12, 15}
    b, inside, outside = restrict(p, range(g.num_edges))
    assert b == h
    assert inside == frozenset({14, 15, 16, 17, 18, 19})
    assert outside == frozenset({12, 13, 20, 21, 22, 23})


def test_restrict_trivial_cases():
    g = fixture("q3")
    p = eulerian_face_partition(g, [])
    assert restrict(p, range(12)) == (frozenset(), frozenset(), frozenset(range(12)))
    inner = next(f for f in g.faces if f.id != g.outer_face)
    edges = frozenset(d >> 1 for d in inner.boundary_darts)
    p = eulerian_face_partition(g, edges)
    assert restrict(p, edges) == (edges, frozenset(), frozenset())


def test_partition_colors_properly():
    g = fixture("fig1")
    p = eulerian_face_partition(g, FIG1_SUBGRAPH)
    for e in FIG1_SUBGRAPH:
        a = p.region_of_face[g.face_of_dart[2 * e]]
        b = p.region_of_face[g.face_of_dart[2 * e + 1]]
        assert {p.region_color[a], p.region_color[b]} == {GREEN, BLUE}
