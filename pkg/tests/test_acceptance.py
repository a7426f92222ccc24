"""Acceptance gate: one PASS/FAIL line per criterion.

Every count is an exact integer; the only tolerances are wall-clock limits,
pinned below.  The lines are collected and printed in a summary section at
the end of any pytest run that includes this file.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from medialchoose import alontarsi as at
from medialchoose.colorer import (
    Coloring,
    ListAssignment,
    check_choosable,
    chromatic_number_leq,
    extend_to_unpruned,
    list_color,
    random_lists,
)
from medialchoose.embed import load, prune_low_degree, serialize, write
from medialchoose.fixtures import BIPARTITE_CORE, BIPARTITE_PRUNED, FIXTURES, fixture
from medialchoose.medial import (
    classify_faces,
    facial_successor_check,
    medial,
    orient_black_left,
    remove_loops,
)
from medialchoose.pipeline import run_pipeline

# pinned limits
Q3_STRUCTURE_SECONDS = 1.0
Q3_ENUMERATION_SECONDS = 120.0
SMALL_SECONDS = 1.0
RANDOM_LIST_TRIALS = 1000
RANDOM_LIST_UNIVERSE = 6
RANDOM_LIST_SEED = 20240601

BIPARTITE = BIPARTITE_CORE + BIPARTITE_PRUNED


def report(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def core_medial(name):
    core = prune_low_degree(fixture(name)).graph
    return orient_black_left(medial(core)) if core.num_edges else None


def bipartite_cores():
    for name in BIPARTITE:
        om = core_medial(name)
        if om is not None:
            yield name, om


def timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


def test_criterion_1_q3_medial_structure():
    def build():
        m = medial(fixture("q3"))
        fc = classify_faces(m)
        return m, fc, orient_black_left(m, fc)

    (m, fc, om), secs = timed(build)
    lengths = {f.id: f.length for f in m.graph.faces}
    got = (
        m.num_vertices,
        m.num_edges,
        len(m.graph.faces),
        sorted(lengths[f] for f in fc.black),
        sorted(lengths[f] for f in fc.white),
        facial_successor_check(om),
    )
    want = (12, 24, 14, [3] * 8, [4] * 6, True)
    ok = got == want and secs < Q3_STRUCTURE_SECONDS
    report(1, ok, f"V={got[0]} E={got[1]} F={got[2]} black={len(got[3])}x3 "
                  f"white={len(got[4])}x4 successor={got[5]} {secs:.3f}s")
    assert ok


def test_criterion_2_alon_tarsi_certificate():
    names = ["q3", "c4", "grid-2x3", "k23", "theta-133", "q3-minus-edge"]
    rows, ok = [], True
    for name in names:
        om = core_medial(name)
        loop_free = not om.medial.loops()
        pc, secs = timed(at.parity_count, om)
        coef = at.polynomial_coefficient_oracle(om)
        limit = Q3_ENUMERATION_SECONDS if name == "q3" else SMALL_SECONDS
        good = loop_free and pc.certified and abs(coef) == abs(pc.difference) and secs < limit
        ok &= good
        rows.append(f"{name}:{pc.even_count}-{pc.odd_count}={pc.difference}/coef{coef}")
    report(2, ok, " ".join(rows))
    assert ok


def test_criterion_3_negative_controls():
    def not3(name):
        return chromatic_number_leq(remove_loops(medial(fixture(name))), 3) is None

    k4s, t1 = timed(not3, "k4-subdiv")
    w5, t2 = timed(not3, "wheel-5")
    w6, t3 = timed(not3, "wheel-6")
    ok = k4s and (w5 or w6) and max(t1, t2, t3) < SMALL_SECONDS
    report(3, ok, f"M(K4 subdivided) not 3-colourable={k4s}; "
                  f"M(wheel 5 spokes)={w5}, M(wheel 6 spokes)={w6}")
    assert ok


def test_criterion_4_complement_claim():
    totals = {"parity": [0, 0], "involution": [0, 0], "eulerian": [0, 0]}
    first_bad = None
    restricted_bad = 0  # informational: X holding all or none of D
    for name, om in bipartite_cores():
        reps = at.check_complement_claim(om)
        restricted = at.check_complement_claim(om, only_all_or_none=True)
        restricted_bad += sum(len(r.failures) for r in restricted.values())
        for key, rep in reps.items():
            totals[key][0] += rep.checked
            totals[key][1] += len(rep.failures)
        if first_bad is None and reps["eulerian"].failures:
            d, x, y = reps["eulerian"].failures[0]
            first_bad = f"{name}: D={d} X={x}"
    ok = all(bad == 0 for _, bad in totals.values())
    detail = " ".join(f"{k}:{bad}/{n} failed" for k, (n, bad) in totals.items())
    if first_bad:
        detail += f"; first non-Eulerian complement {first_bad}"
    detail += f"; failures when X holds all or none of D: {restricted_bad}"
    report(4, ok, detail)
    assert ok


def test_criterion_5_pairing_simulation():
    rows, ok = [], True
    for name, om in bipartite_cores():
        log = at.pairing_removal_simulation(om, strict=False)
        good = (
            all(s.removed_even == s.removed_odd and not s.unpaired for s in log.steps)
            and log.surviving_odd == 0
            and log.surviving_even >= 1
        )
        ok &= good
        rows.append(f"{name}:{len(log.steps)}steps/{log.surviving_even}even-left")
    report(5, ok, " ".join(rows))
    assert ok


def test_criterion_6_witness():
    rows, ok = [], True
    for name, om in bipartite_cores():
        odd = at.odd_black_cycles(om)
        w = at.witness_even_subgraph(om, odd_cycles=odd)
        log = at.pairing_removal_simulation(om, odd_cycles=odd, strict=False)
        meets = all(0 < (w.subgraph.mask & c.mask).bit_count() < c.length for c in odd)
        parities = True
        for c in odd:
            vi, ve = at.vi_ve_parity_check(om, c)
            parities &= vi % 2 == 0 and ve % 2 == 1
        good = (
            at.is_eulerian(om, w.subgraph.mask)
            and w.subgraph.is_even
            and meets
            and w.subgraph.mask in log.survivors
            and parities
        )
        ok &= good
        rows.append(f"{name}:|W|={w.subgraph.size},{len(odd)}odd")
    report(6, ok, " ".join(rows))
    assert ok


def test_criterion_7_random_lists_and_extension():
    rows, ok = [], True
    for name in BIPARTITE:
        host = fixture(name)
        pr = prune_low_degree(host)
        full = remove_loops(medial(host))
        core = remove_loops(medial(pr.graph)) if pr.graph.num_edges else None
        rng = random.Random(f"{RANDOM_LIST_SEED}:{name}")
        colored = extended = 0
        for _ in range(RANDOM_LIST_TRIALS):
            lists = random_lists(range(host.num_edges), 3, RANDOM_LIST_UNIVERSE, rng)
            if core is None:
                core_col = Coloring({})
            else:
                core_lists = ListAssignment(
                    {i: lists.lists[o] for i, o in enumerate(pr.edge_map)})
                core_col = list_color(core, core_lists)
                if core_col is None:
                    continue
            colored += 1
            if pr.removed_edges:
                _, steps = extend_to_unpruned(core_col, full, pr, lists)
                extended += all(s.colored_neighbors <= 2 for s in steps)
        need_ext = RANDOM_LIST_TRIALS if pr.removed_edges else 0
        good = colored == RANDOM_LIST_TRIALS and extended == need_ext
        ok &= good
        rows.append(f"{name}:{colored}" + (f"+ext{extended}" if pr.removed_edges else ""))
    report(7, ok, f"{RANDOM_LIST_TRIALS} trials, universe {RANDOM_LIST_UNIVERSE}: "
                  + " ".join(rows))
    assert ok


def test_criterion_8_choosability_on_tiny_graphs():
    c3 = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    c4 = {0: {1, 3}, 1: {0, 2}, 2: {1, 3}, 3: {0, 2}}
    (r3, r4), secs = timed(lambda: (check_choosable(c3, 2, 3), check_choosable(c4, 2, 8)))
    named = ListAssignment({0: frozenset({1, 2}), 1: frozenset({2, 3}), 2: frozenset({1, 3})})
    named_fails = list_color(c3, named) is None
    found = sorted(tuple(sorted(s)) for s in r3.failing.lists.values()) if r3.failing else None
    ok = (not r3.choosable) and named_fails and r4.choosable and r4.exact and secs < SMALL_SECONDS
    report(8, ok, f"C3 not 2-choosable={not r3.choosable} (found {found}); "
                  f"lists {{1,2}},{{2,3}},{{1,3}} uncolourable={named_fails}; "
                  f"C4 2-choosable exact={r4.choosable and r4.exact}")
    assert ok


def test_criterion_9_round_trip_and_determinism(tmp_path):
    trip = all(load(serialize(fixture(n))) == fixture(n) for n in FIXTURES)
    same = True
    for name in BIPARTITE:
        a = run_pipeline(fixture(name), seed=3)
        b = run_pipeline(fixture(name), seed=3)
        same &= a.human() == b.human() and a.tsv() == b.tsv()
    # across processes with different hash seeds
    write(tmp_path / "q3p.pg", fixture("q3-pendant-path"))
    outs = set()
    for hashseed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        r = subprocess.run(
            [sys.executable, "-m", "medialchoose", "pipeline", str(tmp_path / "q3p.pg"),
             "--tsv", "--random-lists", "--seed", "9"],
            capture_output=True, env=env, check=True,
        )
        outs.add(r.stdout)
    ok = trip and same and len(outs) == 1
    report(9, ok, f"round-trip {len(FIXTURES)} fixtures={trip}; "
                  f"reports identical in-process={same}, across processes={len(outs) == 1}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
