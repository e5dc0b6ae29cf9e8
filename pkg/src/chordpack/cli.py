"""Command-line interface for solving, verifying, enumerating and auditing.

Exit codes: 0 clean, 1 violations found, 2 budget exceeded anywhere,
3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import ChordpackError
from .graph import Graph, parse_edgelist, parse_graph6, to_graph6
from .packing import (
    STATUS_BUDGET,
    SolveBudget,
    pack_chorded,
    pack_mixed,
)
from .extremal import gen_g1, gen_g2
from .prooflab import ALL_LEMMAS, audit_all, audit_lemma, optimal_collection
from .report import census_csv, render_census_figure
from .verify import (
    VERDICT_BUDGET,
    VERDICT_VIOLATION,
    check_corollaries,
    enumerate_verify,
    stream_verify,
    verify_instance,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2
EXIT_IO = 3


def _dump(obj, path: Optional[str]) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "))
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_graph(args) -> Graph:
    if getattr(args, "edges", None):
        with open(args.edges) as fh:
            return parse_edgelist(fh.read())
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    line = sys.stdin.readline()
    if not line.strip():
        raise ChordpackError("no graph given (argument, --edges, or stdin)")
    return parse_graph6(line)


def _budget(args) -> SolveBudget:
    if args.budget is None:
        return SolveBudget()
    return SolveBudget(max_nodes=args.budget)


def _cmd_solve(args) -> int:
    g = _load_graph(args)
    if args.r:
        result = pack_mixed(g, args.r, args.k, _budget(args))
    else:
        result = pack_chorded(g, args.k, _budget(args))
    _dump(result.to_json_obj(), args.json)
    return EXIT_BUDGET if result.status == STATUS_BUDGET else EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    report = verify_instance(g, args.k, _budget(args))
    _dump(report.to_json_obj(), args.json)
    if report.verdict == VERDICT_VIOLATION:
        return EXIT_VIOLATION
    if report.verdict == VERDICT_BUDGET:
        return EXIT_BUDGET
    return EXIT_OK


def _census_outputs(census, args) -> int:
    _dump(census.to_json_obj(), args.json)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(census_csv(census))
    if args.plot:
        render_census_figure(census, args.plot)
    if census.violations:
        return EXIT_VIOLATION
    if census.budget_stops:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    census = enumerate_verify(args.n, args.k, _budget(args))
    return _census_outputs(census, args)


def _cmd_stream(args) -> int:
    census = stream_verify(sys.stdin, args.k, workers=args.workers, budget=_budget(args))
    return _census_outputs(census, args)


def _cmd_gen_extremal(args) -> int:
    if args.family == "g1":
        if len(args.params) != 2:
            raise ChordpackError("g1 takes two parameters: N K")
        g = gen_g1(args.params[0], args.params[1])
    else:
        if len(args.params) != 1:
            raise ChordpackError("g2 takes one parameter: K")
        g = gen_g2(args.params[0])
    print(to_graph6(g))
    return EXIT_OK


def _cmd_audit(args) -> int:
    g = _load_graph(args)
    state = optimal_collection(g, args.k, _budget(args))
    if args.lemma:
        reports = [audit_lemma(state, args.lemma, strict=args.strict, seed=args.seed)]
    else:
        reports = audit_all(state, strict=args.strict, seed=args.seed)
    obj = {
        "graph6": to_graph6(g),
        "k": args.k,
        "metric": list(state.metric),
        "collection": [c.to_json_obj() for c in state.collection],
        "longest_path": state.longest_path.to_json_obj(),
        "audits": [rep.to_json_obj() for rep in reports],
    }
    _dump(obj, args.json)
    if any(rep.violations for rep in reports):
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_corollaries(args) -> int:
    g = _load_graph(args)
    verdicts = check_corollaries(g, args.k, r=args.r, budget=_budget(args))
    _dump(verdicts, args.json)
    failed = any(
        entry["applicable"] and entry["holds"] is False for entry in verdicts.values()
    )
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordpack",
        description="Exact disjoint chorded-cycle packing and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph_input=True):
        p.add_argument("--budget", type=int, default=None, help="search-node cap")
        p.add_argument("--json", metavar="FILE", help="write JSON output to FILE")
        if graph_input:
            p.add_argument("graph6", nargs="?", help="graph6 record (or stdin)")
            p.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then 'u v' lines")

    p = sub.add_parser("solve", help="find a (mixed) chorded-cycle packing")
    add_common(p)
    p.add_argument("-k", type=int, required=True, help="chorded cycles required")
    p.add_argument("-r", type=int, default=0, help="additional plain cycles")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="classify one graph per the characterization")
    add_common(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="verify all isomorphism classes at order n")
    add_common(p, graph_input=False)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--csv", metavar="FILE", help="write delimited census to FILE")
    p.add_argument("--plot", metavar="FILE", help="render census figure to FILE")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("stream", help="verify a graph6 stream from stdin")
    add_common(p, graph_input=False)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", metavar="FILE", help="write delimited census to FILE")
    p.add_argument("--plot", metavar="FILE", help="render census figure to FILE")
    p.set_defaults(func=_cmd_stream)

    p = sub.add_parser("gen-extremal", help="emit an extremal graph as graph6")
    p.add_argument("family", choices=["g1", "g2"])
    p.add_argument("params", type=int, nargs="+", help="N K for g1, K for g2")
    p.set_defaults(func=_cmd_gen_extremal)

    p = sub.add_parser("audit", help="audit structural lemmas on the optimal state")
    add_common(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--lemma", choices=ALL_LEMMAS, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true", help="refuse sampled audits")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("corollaries", help="check corollary conclusions via solvers")
    add_common(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, default=0)
    p.set_defaults(func=_cmd_corollaries)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChordpackError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
