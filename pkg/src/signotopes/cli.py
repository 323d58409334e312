"""Command-line front end.

One JSON manifest per run goes to stdout; human-readable notes go to
stderr, so scripts never parse prose.  Exit codes: 0 success, 1
verification failure, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .compositions import block_coloring, completions, zero_lower_bound
from .core import SignFunction, is_transitive, monotone_violation, read_file, write_file
from .enumeration import SEARCH_EDGE_CAP, count_monotone, project, ramsey_number
from .errors import (
    InvalidArgument,
    InvalidEdge,
    InvalidWiring,
    NoReduction,
    NotMonotone,
    NotRealizable,
    ParseError,
    SignotopeError,
    TooLarge,
)
from .geometry import render_svg, sweep_text, wiring_diagram
from .paths import longest_mono_paths
from .tower import TowerGroundSet

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def _manifest(subcommand: str, params: dict, result: dict, start: float,
              seed: int | None = None) -> dict:
    return {
        "subcommand": subcommand,
        "parameters": params,
        "seed": seed,
        "tool_version": __version__,
        "wall_time_s": round(time.perf_counter() - start, 6),
        "result": result,
    }


def _emit(manifest: dict) -> None:
    print(json.dumps(manifest, sort_keys=True))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _coloring_payload(c: SignFunction) -> dict:
    return {"r": c.r, "n": c.n, "colors": c.color_string()}


def _cmd_verify(args, start) -> int:
    c = read_file(args.infile)
    if not c.is_binary:
        _note("input has 0 entries; monotonicity is defined for binary colorings")
        return EXIT_USAGE
    witness = monotone_violation(c)
    result = {
        "monotone": witness is None,
        "witness": list(witness) if witness else None,
        "transitive": is_transitive(c),
    }
    _emit(_manifest("verify", {"in": args.infile}, result, start))
    if witness is not None:
        _note(f"not monotone: violating subset {witness}")
        return EXIT_VERIFY_FAILED
    _note("monotone")
    return EXIT_OK


def _cmd_path(args, start) -> int:
    c = read_file(args.infile)
    rep = longest_mono_paths(c)
    records = [
        {"color": "-", "length": rep.best_minus, "witness": list(rep.witness_minus)},
        {"color": "+", "length": rep.best_plus, "witness": list(rep.witness_plus)},
    ]
    if args.jsonl:
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
    else:
        _emit(_manifest("path", {"in": args.infile}, {"paths": records}, start))
    _note(f"longest minus path: {rep.best_minus} {rep.witness_minus}")
    _note(f"longest plus path:  {rep.best_plus} {rep.witness_plus}")
    return EXIT_OK


def _cmd_tower(args, start) -> int:
    build_cap = args.max_edges if args.max_edges is not None else 2 ** 21
    ground = TowerGroundSet(args.r, args.n, max_elements=args.max_elements)
    coloring = ground.coloring(max_edges=build_cap)
    result = {
        "sizes": ground.sizes[1:],
        "vertices": ground.size,
        "edges": coloring.edge_count,
    }
    failed = False
    if args.verify:
        witness = monotone_violation(coloring)
        rep = longest_mono_paths(coloring)
        bound = 2 * args.n + args.r - 2
        result["monotone"] = witness is None
        result["witness"] = list(witness) if witness else None
        result["longest_paths"] = [rep.best_minus, rep.best_plus]
        result["path_bound"] = bound
        result["path_bound_ok"] = rep.best <= bound
        failed = witness is not None or rep.best > bound
    if args.emit:
        write_file(coloring, args.emit)
        result["emitted"] = args.emit
    _emit(_manifest("tower", {"r": args.r, "n": args.n, "verify": args.verify},
                    result, start))
    _note(f"built coloring on {ground.size} vertices")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _parse_verify_mode(spec: str) -> tuple[str, int, int]:
    if spec == "all":
        return "all", 0, 0
    parts = spec.split(":")
    if len(parts) == 3 and parts[0] == "sample":
        return "sample", int(parts[1]), int(parts[2])
    raise InvalidArgument(f"bad verify mode {spec!r}; use all or sample:COUNT:SEED")


def _cmd_comp(args, start) -> int:
    build_cap = args.max_edges if args.max_edges is not None else 2 ** 21
    ternary = block_coloring(args.r, args.h, max_edges=build_cap)
    result = {
        "n": ternary.n,
        "zeros": len(ternary.zero_positions),
        "transversal_zeros": len(ternary.transversal_zero_positions()),
        "zero_lower_bound": (
            zero_lower_bound(args.r, args.h) if args.h >= 2 else None
        ),
    }
    seed = None
    failed = False
    if args.verify:
        mode, count, seed_val = _parse_verify_mode(args.verify)
        seed = seed_val if mode == "sample" else None
        checked = 0
        bad = 0
        stream = completions(ternary, mode=mode, count=count, seed=seed_val)
        for candidate in stream:
            checked += 1
            if monotone_violation(candidate) is not None:
                bad += 1
        result["completions_checked"] = checked
        result["completions_non_monotone"] = bad
        failed = bad > 0
    if args.emit:
        write_file(ternary.fun, args.emit)
        result["emitted"] = args.emit
    _emit(_manifest("comp", {"r": args.r, "h": args.h, "verify": args.verify},
                    result, start, seed=seed))
    _note(f"block coloring on {ternary.n} vertices, {result['zeros']} zeros")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _cmd_count(args, start) -> int:
    search_cap = args.max_edges if args.max_edges is not None else SEARCH_EDGE_CAP
    report = count_monotone(args.r, args.n, max_edges=search_cap,
                            workers=args.workers)
    result = {
        "count": report.count,
        "nodes": report.nodes,
        "lower_exponent": report.lower_exponent,
        "upper_exponent": report.upper_exponent,
        "lower_binding": report.lower_binding,
        "bounds_ok": report.bounds_ok,
    }
    _emit(_manifest("count", {"r": args.r, "n": args.n}, result, start))
    _note(f"{report.count} monotone colorings ({report.nodes} nodes)")
    return EXIT_OK if report.bounds_ok else EXIT_VERIFY_FAILED


def _cmd_ramsey(args, start) -> int:
    search_cap = args.max_edges if args.max_edges is not None else SEARCH_EDGE_CAP
    report = ramsey_number(args.r, args.path, args.max,
                           max_edges=search_cap, max_nodes=args.max_nodes)
    result = {
        "number": report.number,
        "lower_bound": report.lower_bound,
        "nodes": report.nodes,
        "witness": _coloring_payload(report.witness) if report.witness else None,
    }
    if args.witness and report.witness is not None:
        write_file(report.witness, args.witness)
        result["witness_file"] = args.witness
    _emit(_manifest("ramsey", {"r": args.r, "path": args.path, "max": args.max},
                    result, start))
    if report.number is None:
        _note(f"unresolved up to {args.max}: number is at least {report.lower_bound}")
    else:
        _note(f"number = {report.number}")
    return EXIT_OK


def _cmd_project(args, start) -> int:
    c = read_file(args.infile)
    p = project(c, args.i)
    write_file(p, args.out)
    _emit(_manifest("project", {"in": args.infile, "i": args.i, "out": args.out},
                    {"r": p.r, "n": p.n}, start))
    _note(f"projected onto vertex {args.i}: r={p.r}, n={p.n}")
    return EXIT_OK


def _cmd_wiring(args, start) -> int:
    c = read_file(args.infile)
    w = wiring_diagram(c)
    result = {"crossings": len(w.sweep)}
    if args.svg:
        with open(args.svg, "w", newline="\n") as fh:
            fh.write(render_svg(w))
        result["svg"] = args.svg
    if args.sweep:
        with open(args.sweep, "w", newline="\n") as fh:
            fh.write(sweep_text(w))
        result["sweep_file"] = args.sweep
    _emit(_manifest("wiring", {"in": args.infile}, result, start))
    _note(f"swept {len(w.sweep)} crossings")
    return EXIT_OK


def _cmd_selftest(args, start) -> int:
    from .acceptance import run_criteria

    results = run_criteria(only=args.only, log=_note)
    payload = [
        {"id": res.id, "title": res.title, "passed": res.passed, "details": res.details}
        for res in results
    ]
    _emit(_manifest("selftest", {"only": args.only},
                    {"criteria": payload, "all_passed": all(r.passed for r in results)},
                    start))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signotopes",
        description="Monotone colorings of ordered uniform hypergraphs",
        allow_abbrev=False,  # the ramsey --max flag must not clash with --max-*
    )
    parser.add_argument("--max-elements", type=int, default=2 ** 20,
                        help="ground-set element cap (exit 3 beyond)")
    parser.add_argument("--max-edges", type=int, default=None,
                        help="edge-count cap: built colorings default to 2^21, "
                             "searches to 64 (exit 3 beyond)")
    parser.add_argument("--max-nodes", type=int, default=None,
                        help="search node budget (exit 3 beyond)")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for counting")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring file for monotonicity")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("path", help="longest monochromatic monotone paths")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--jsonl", action="store_true", help="one JSON line per color")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("tower", help="build the tower coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--emit", default=None)
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("comp", help="build the block coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--verify", default=None, metavar="all|sample:K:SEED")
    p.add_argument("--emit", default=None)
    p.set_defaults(func=_cmd_comp)

    p = sub.add_parser("count", help="count monotone colorings exactly")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("ramsey", help="smallest N forcing a monochromatic path")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--path", type=int, required=True, help="path vertex count m")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--witness", default=None, help="persist the avoiding coloring")
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("project", help="project onto a vertex")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("wiring", help="wiring diagram and SVG export")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--svg", default=None)
    p.add_argument("--sweep", default=None)
    p.set_defaults(func=_cmd_wiring)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", type=int, default=None, help="run a single criterion")
    p.set_defaults(func=_cmd_selftest)

    return parser


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        return args.func(args, start)
    except TooLarge as exc:
        _note(f"resource cap: {exc}")
        return EXIT_TOO_LARGE
    except (ParseError, InvalidArgument, InvalidEdge, NoReduction,
            InvalidWiring) as exc:
        _note(f"usage error: {exc}")
        return EXIT_USAGE
    except (NotMonotone, NotRealizable) as exc:
        _note(f"verification failure: {exc}")
        return EXIT_VERIFY_FAILED
    except FileNotFoundError as exc:
        _note(f"usage error: {exc}")
        return EXIT_USAGE
    except SignotopeError as exc:
        _note(f"error: {exc}")
        return EXIT_VERIFY_FAILED


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
