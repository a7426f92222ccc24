"""Command line entry point: ``medialchoose <subcommand> ...``.

Exit codes: 0 success, 2 rejected input, 3 resource guard, 4 a guaranteed
property failed (a dump directory is written next to the output).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import alontarsi as at
from .colorer import ListAssignment, check_choosable, chromatic_number_leq, list_color
from .conjecture import COUNTEREXAMPLE, TSV_HEADER, search_conjecture
from .embed import RotationSystem, prune_low_degree, read, write
from .errors import ClaimViolation, InputError, MalformedLineError, MedialChooseError
from .export import provenance_tsv, to_dot, to_svg
from .fixtures import FIXTURES, write_fixture
from .medial import medial, orient_black_left, remove_loops
from .pipeline import run_pipeline

log = logging.getLogger("medialchoose")


def _emit(args, name: str, text: str) -> None:
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text, encoding="utf-8")
        log.info("wrote %s", out / name)
    else:
        sys.stdout.write(text)


def _oriented_core(path):
    host = read(path)
    core = prune_low_degree(host).graph
    if core.num_edges == 0:
        raise InputError("host prunes to nothing; there is no medial to orient")
    return orient_black_left(medial(core))


def _target_graph(args):
    g = read(args.file)
    if args.medial:
        return remove_loops(medial(g))
    return g


def read_lists(path) -> ListAssignment:
    lists = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        if not head.startswith("v") or not _:
            raise MalformedLineError("expected 'v<id>: c1 c2 ...'", lineno)
        try:
            lists[int(head[1:])] = frozenset(int(t) for t in rest.split())
        except ValueError:
            raise MalformedLineError("non-integer vertex or colour", lineno) from None
    return ListAssignment(lists)


def cmd_pipeline(args) -> int:
    rep = run_pipeline(
        read(args.file),
        allow_nonbipartite=args.allow_nonbipartite,
        edge_cap=args.edge_cap,
        oracle=args.oracle,
        seed=args.seed if args.random_lists else None,
    )
    stem = Path(args.file).stem
    if args.out:
        _emit(args, f"{stem}.report.txt", rep.human())
        _emit(args, f"{stem}.report.tsv", rep.tsv())
    else:
        sys.stdout.write(rep.tsv() if args.tsv else rep.human())
    return 0


def cmd_check_at(args) -> int:
    om = _oriented_core(args.file)
    pc = at.parity_count(om, args.edge_cap)
    lines = [
        f"E_even: {pc.even_count}",
        f"E_odd: {pc.odd_count}",
        f"difference: {pc.difference}",
        f"certified_3_choosable: {'yes' if pc.certified else 'no'}",
    ]
    if args.oracle:
        coef = at.polynomial_coefficient_oracle(om)
        lines.append(f"oracle_coefficient: {coef}")
        lines.append(f"oracle_agrees: {'yes' if abs(coef) == abs(pc.difference) else 'no'}")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.pair_sim:
        _emit(args, "pair-sim.tsv", _pair_sim(om, args).tsv())
    if args.witness:
        _emit(args, "witness.txt", _witness_text(om, args))
    return 0


def _pair_sim(om, args):
    odd = at.odd_black_cycles(om, args.cycle_len_cap)
    return at.pairing_removal_simulation(om, args.edge_cap, args.cycle_len_cap, odd_cycles=odd)


def _witness_text(om, args) -> str:
    w = at.witness_even_subgraph(om, args.cycle_len_cap)
    return (
        f"red: {' '.join(map(str, w.red))}\n"
        f"blue: {' '.join(map(str, w.blue))}\n"
        f"edges: {' '.join(map(str, w.subgraph.edges))}\n"
        f"size: {w.subgraph.size}\n"
        f"odd_black_cycles_checked: {w.cycles_checked}\n"
    )


def cmd_pair_sim(args) -> int:
    _emit(args, "pair-sim.tsv", _pair_sim(_oriented_core(args.file), args).tsv())
    return 0


def cmd_witness(args) -> int:
    _emit(args, "witness.txt", _witness_text(_oriented_core(args.file), args))
    return 0


def cmd_color(args) -> int:
    g = _target_graph(args)
    if args.lists:
        col = list_color(g, read_lists(args.lists))
    else:
        col = chromatic_number_leq(g, args.k)
    if col is None:
        text = "UNCOLORABLE\n"
    else:
        text = "".join(f"v{v} -> {c}\n" for v, c in col.colors.items())
    _emit(args, "coloring.txt", text)
    return 0


def cmd_choosable(args) -> int:
    g = _target_graph(args)
    res = check_choosable(g, args.k, args.universe, samples=args.samples, seed=args.seed)
    lines = [
        f"choosable: {'yes' if res.choosable else 'no'}",
        f"mode: {res.mode}",
        f"exact: {'yes' if res.exact else 'no'}",
        f"assignments_checked: {res.checked}",
    ]
    if res.failing is not None:
        for v, c in sorted(res.failing.lists.items()):
            lines.append(f"failing v{v}: {' '.join(map(str, sorted(c)))}")
    _emit(args, "choosable.txt", "\n".join(lines) + "\n")
    return 0


def cmd_search(args) -> int:
    paths = []
    for p in map(Path, args.paths):
        paths += sorted(p.glob("*.pg")) if p.is_dir() else [p]
    cases = search_conjecture(paths, skip_nonsimple=args.skip_nonsimple)
    text = TSV_HEADER + "\n" + "".join(c.row() + "\n" for c in cases)
    _emit(args, "search.tsv", text)
    bad = [c for c in cases if c.verdict == COUNTEREXAMPLE]
    if bad:
        raise ClaimViolation("conjecture counterexample found",
                             {"graph": bad[0].graph_id, "case": bad[0].row()})
    return 0


def cmd_fixtures(args) -> int:
    names = sorted(FIXTURES) if args.all else args.names
    if not names:
        raise InputError("name at least one fixture or pass --all")
    out = Path(args.out or ".")
    for name in names:
        if name not in FIXTURES:
            raise InputError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
        for p in write_fixture(name, out):
            print(p)
        if args.medial:
            m = remove_loops(medial(FIXTURES[name]()))
            p = out / f"{name}.medial.pg"
            write(p, m.graph)
            print(p)
    return 0


def cmd_export(args, fmt: str) -> int:
    om = _oriented_core(args.file)
    stem = Path(args.file).stem
    if fmt == "dot":
        _emit(args, f"{stem}.dot", to_dot(om, name=stem.replace("-", "_")))
    else:
        _emit(args, f"{stem}.svg", to_svg(om))
    if args.provenance:
        _emit(args, f"{stem}.provenance.tsv", provenance_tsv(om.medial))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--edge-cap", type=int, default=at.DEFAULT_EDGE_CAP)
    common.add_argument("--cycle-len-cap", type=int, default=at.DEFAULT_CYCLE_LEN_CAP)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write outputs into this directory")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="medialchoose", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pipeline", parents=[common])
    s.add_argument("file")
    s.add_argument("--allow-nonbipartite", action="store_true")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--random-lists", action="store_true",
                   help="draw seeded random 3-lists instead of {1,2,3}")
    s.add_argument("--tsv", action="store_true")
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("check-at", parents=[common])
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--pair-sim", action="store_true")
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_check_at)

    for name, func in (("pair-sim", cmd_pair_sim), ("witness", cmd_witness)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("color", parents=[common])
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--lists")
    s.add_argument("--medial", action="store_true", help="colour the loop-free medial")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("choosable", parents=[common])
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--universe", type=int, required=True)
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--medial", action="store_true")
    s.set_defaults(func=cmd_choosable)

    s = sub.add_parser("search", parents=[common])
    s.add_argument("paths", nargs="+")
    s.add_argument("--skip-nonsimple", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fixtures", parents=[common])
    s.add_argument("names", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--medial", action="store_true", help="also write each loop-free medial")
    s.set_defaults(func=cmd_fixtures)

    for name, fmt in (("export-dot", "dot"), ("export-svg", "svg")):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.add_argument("--provenance", action="store_true")
        s.set_defaults(func=lambda a, fmt=fmt: cmd_export(a, fmt))
    return p


def _dump(args, exc: ClaimViolation) -> Path:
    stem = Path(getattr(args, "file", None) or "run").stem
    d = Path(args.out or ".") / f"dump-{stem}"
    d.mkdir(parents=True, exist_ok=True)
    (d / "violation.json").write_text(
        json.dumps({"message": str(exc), "details": exc.details}, indent=2, sort_keys=True,
                   default=str),
        encoding="utf-8",
    )
    if getattr(args, "file", None):
        (d / "input.pg").write_text(Path(args.file).read_text())
    return d


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ClaimViolation as exc:
        d = _dump(args, exc)
        print(f"error: {exc} (dump: {d})", file=sys.stderr)
        return exc.exit_code
    except MedialChooseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
