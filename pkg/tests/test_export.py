from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from conftest import oriented
from medialchoose.export import provenance_tsv, to_dot, to_svg, tutte_layout
from medialchoose.fixtures import fixture


def test_dot_lists_every_arc():
    om = oriented("c4")
    dot = to_dot(om)
    assert dot.count(" -> ") == om.num_edges == 8


def test_provenance_rows():
    om = oriented("q3")
    rows = provenance_tsv(om.medial).splitlines()
    assert len(rows) == 13 and rows[1] == "0\t0"


def test_tutte_layout_places_inner_vertices_inside():
    g = fixture("q3")
    pos = tutte_layout(g)
    outer = {g.dart_origin[d] for d in g.face_by_id[g.outer_face].boundary_darts}
    for v in range(8):
        r = np.hypot(*pos[v])
        assert (abs(r - 1) < 1e-9) if v in outer else r < 1


def test_svg_is_well_formed():
    om = oriented("q3")
    root = ET.fromstring(to_svg(om))
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}polygon")) == 8
    assert len(root.findall(f"{ns}path")) == 24
