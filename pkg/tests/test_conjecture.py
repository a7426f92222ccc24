from __future__ import annotations

import pytest

from medialchoose.conjecture import (
    CONSISTENT,
    COUNTEREXAMPLE,
    NOT_PLANE,
    REJECTED,
    UNSATISFIED,
    examine,
    face_two_colorings,
    search_conjecture,
)
from medialchoose.embed import write
from medialchoose.errors import NonSimpleGraphError
from medialchoose.fixtures import BIPARTITE_CORE, fixture
from medialchoose.medial import medial, remove_loops


def test_k4_hypothesis_unsatisfied():
    assert examine(fixture("k4"), "k4").verdict == UNSATISFIED


def test_even_cycle_consistent():
    case = examine(fixture("c4"), "c4")
    assert case.verdict == CONSISTENT and case.three_colorable


def test_grid_faces_need_three_colours():
    # two adjacent squares both touching the outer face
    assert face_two_colorings(fixture("grid-2x3")) == []
    assert examine(fixture("grid-2x3"), "grid").verdict == UNSATISFIED


def test_nonsimple_rejected_or_skipped():
    m = medial(fixture("c4")).graph
    with pytest.raises(NonSimpleGraphError):
        examine(m, "mc4")
    assert examine(m, "mc4", skip_nonsimple=True).verdict == REJECTED


def test_nonplane():
    assert examine(fixture("k4-twisted"), "t").verdict == NOT_PLANE


@pytest.mark.parametrize("name", BIPARTITE_CORE)
def test_simple_medials_of_bipartite_hosts_are_consistent(name):
    g = medial(fixture(name)).graph
    case = examine(g, name, skip_nonsimple=True)
    assert case.verdict == (CONSISTENT if g.is_simple() else REJECTED)


def test_loop_removal_can_break_the_hypothesis():
    # the star's medial minus its loops is a bare triangle
    g = remove_loops(medial(fixture("star-k13"))).graph
    assert examine(g, "star").verdict == UNSATISFIED


def test_search_over_files(tmp_path):
    write(tmp_path / "a.pg", fixture("q3"))
    write(tmp_path / "b.pg", remove_loops(medial(fixture("q3"))).graph)
    cases = search_conjecture(sorted(tmp_path.glob("*.pg")))
    assert [c.verdict for c in cases] == [UNSATISFIED, CONSISTENT]
    assert all(c.verdict != COUNTEREXAMPLE for c in cases)
    assert cases[1].row().split("\t")[2] == str(cases[1].even_class)
