import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from canonvec.core import bench
from canonvec.core.canonical import is_canonical
from canonvec.core.engine import build_config, resolve_group
from canonvec.core.errors import CanonvecError, ConfigError, ErrorBoundViolation
from canonvec.core.galois import assemble_primitive_polynomial, minimal_primitive_invariant
from canonvec.core.graphs import (
    bitstring,
    count_multigraphs,
    count_unlabeled_graphs,
    edge_list,
    enumerate_graphs,
)
from canonvec.core.history import RunHistoryDB
from canonvec.core.oracle import burnside_count
from canonvec.core.parser import ParseError, format_vector, parse_vector
from canonvec.core.polynomial import polynomial_stabilizer_bruteforce
from canonvec.core.tree import EnumStats, Mode, Strategy, count_canonicals, enumerate_canonicals

logger = logging.getLogger("canonvec")

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_CHECK = 0, 1, 2, 3


# --------------------------
# Argument parsing
# --------------------------

def _add_group_options(p: argparse.ArgumentParser):
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--group", metavar="FILE", help="group file: 'degree n' then one generator per line")
    source.add_argument("--named", metavar="NAME", help="catalog group, e.g. cyclic5, symmetric4, pairs5, frobenius20")


def _add_constraint_options(p: argparse.ArgumentParser):
    p.add_argument("--degree", type=int, help="only vectors of this degree")
    p.add_argument("--max-degree", type=int, help="vectors of degree 0..D")
    p.add_argument("--max-part", type=int, help="upper bound for every entry")
    p.add_argument("--staircase", action="store_true", help="v_i <= n-i, below (n-1,...,1,0)")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="bfs")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="canonvec", description="Integer vectors modulo permutation groups")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list canonical vectors")
    _add_group_options(p)
    _add_constraint_options(p)
    p.add_argument("--stats", action="store_true", help="append the statistics record")
    p.add_argument("--strict", action="store_true", help="fail when the relative-error bound is violated")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count canonical vectors")
    _add_group_options(p)
    _add_constraint_options(p)
    p.add_argument("--oracle", choices=["burnside"], help="cross-check against an independent count")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bench", help="staircase statistics for a set of groups")
    p.add_argument("--group-set", default="degree5", help="builtin set (degree5) or a file listing groups")
    p.add_argument("--problem", choices=["staircase"], default="staircase")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--record", action="store_true", help="log every row to the run history")
    p.add_argument("--progress", action="store_true", help="show a progress bar on standard error")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("canonical-test", help="read vectors from standard input, print true/false")
    _add_group_options(p)
    p.add_argument("--explored", action="store_true", help="also print the explored count")
    p.set_defaults(func=cmd_canonical_test)

    p = sub.add_parser("primitive-invariant", help="refinement chain and primitive invariant polynomial")
    _add_group_options(p)
    p.add_argument("--verify", action="store_true", help="check the stabilizer of the polynomial by brute force")
    p.set_defaults(func=cmd_primitive_invariant)

    p = sub.add_parser("graphs", help="graphs on unlabeled nodes")
    p.add_argument("--nodes", type=int, required=True)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--count", action="store_true", help="print the number of graphs (default)")
    what.add_argument("--list", action="store_true", help="print one edge bitstring per graph")
    p.add_argument("--edges", action="store_true", help="with --list, print edge lists 'i-j' instead")
    p.add_argument("--multigraph-edges", type=int, metavar="D", help="count multigraphs with D edges")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("history", help="recent recorded runs")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--export", metavar="FILE", help="write the whole history as JSON")
    p.set_defaults(func=cmd_history)
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _group(args):
    return resolve_group(args.group if args.group else args.named)


def _config(args):
    return build_config(
        _group(args),
        degree=args.degree,
        max_degree=args.max_degree,
        max_part=args.max_part,
        staircase=args.staircase,
        strategy=Strategy(args.strategy),
    )


# --------------------------
# Commands
# --------------------------

def cmd_enumerate(args) -> int:
    config = _config(args)
    stats = EnumStats(config.group.degree, config.group.order()) if args.stats else None
    vectors = enumerate_canonicals(config, stats, jobs=args.jobs, strict=args.strict)
    out = sys.stdout
    if args.format == "plain":
        for v in vectors:
            print(format_vector(v), file=out)
        if stats is not None:
            print(" ".join(f"{k}={v}" for k, v in stats.to_dict().items()), file=out)
    elif args.format == "json":
        record = {"vectors": [list(v) for v in vectors]}
        if stats is not None:
            record["stats"] = stats.to_dict()
        print(json.dumps(record), file=out)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["degree"] + [f"v{i + 1}" for i in range(config.group.degree)])
        for v in vectors:
            writer.writerow([sum(v)] + list(v))
        if stats is not None:
            record = stats.to_dict()
            out.write("\n")
            writer.writerow(list(record))
            writer.writerow(list(record.values()))
    return EXIT_OK


def _burnside(config) -> int:
    group = config.group
    if config.ceiling is not None:
        raise ConfigError("the Burnside oracle does not apply to the staircase")
    if config.mode is Mode.ALL:
        return burnside_count(group, config.max_part)
    part = config.max_part if config.max_part is not None else config.degree
    if config.mode is Mode.BY_DEGREE:
        return burnside_count(group, part, config.degree)
    return sum(burnside_count(group, part, d) for d in range(config.degree + 1))


def cmd_count(args) -> int:
    config = _config(args)
    total = count_canonicals(config, jobs=args.jobs)
    print(total)
    if args.oracle == "burnside":
        expected = _burnside(config)
        print(f"burnside {expected}")
        if expected != total:
            logger.error("count %d differs from the Burnside count %d", total, expected)
            return EXIT_CHECK
    return EXIT_OK


def cmd_bench(args) -> int:
    sources = bench.load_group_set(args.group_set)
    history = RunHistoryDB() if args.record else None
    rows, failures = bench.run_staircase_benchmark(sources, history=history, progress=args.progress)
    if args.format == "csv":
        bench.write_csv(rows, sys.stdout)
    else:
        print(json.dumps([row.to_dict() for row in rows], indent=2))
    for source, message in failures:
        print(f"canonvec: error: {source}: {message}", file=sys.stderr)
    return EXIT_CHECK if failures else EXIT_OK


def cmd_canonical_test(args) -> int:
    group = _group(args)
    for lineno, line in enumerate(sys.stdin, start=1):
        if not line.strip():
            continue
        try:
            v = parse_vector(line, group.degree)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if args.explored:
            outcome = is_canonical(v, group, with_explored=True)
            print(f"{str(outcome.canonical).lower()} {outcome.explored}")
        else:
            print(str(is_canonical(v, group)).lower())
    return EXIT_OK


def cmd_primitive_invariant(args) -> int:
    group = _group(args)
    chain = minimal_primitive_invariant(group)
    for line in chain.lines():
        print(line)
    polynomial = assemble_primitive_polynomial(chain)
    print(f"polynomial: {polynomial.render()}")
    if args.verify:
        stab = polynomial_stabilizer_bruteforce(polynomial)
        ok = stab.order() == group.order() and group.is_subgroup_of(stab)
        print(f"stabilizer order: {stab.order()}")
        if not ok:
            logger.error("stabilizer of order %d differs from the group of order %d", stab.order(), group.order())
            return EXIT_CHECK
    return EXIT_OK


def cmd_graphs(args) -> int:
    n = args.nodes
    if n < 0:
        raise ConfigError(f"--nodes must be non-negative, got {n}")
    if args.multigraph_edges is not None:
        print(count_multigraphs(n, args.multigraph_edges))
    elif args.list:
        for v in enumerate_graphs(n):
            print(" ".join(edge_list(v, n)) if args.edges else bitstring(v))
    else:
        print(count_unlabeled_graphs(n, jobs=args.jobs))
    return EXIT_OK


def cmd_history(args) -> int:
    db = RunHistoryDB()
    if args.export:
        count = db.export_to_json(Path(args.export))
        print(f"exported {count} runs to {args.export}")
        return EXIT_OK
    for row in db.get_recent(args.limit):
        entry = RunHistoryDB.as_dict(row)
        print(f"{entry['timestamp']}  {entry['command']:<10} {entry['group']:<14} {entry['result']}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except ErrorBoundViolation as exc:
        print(f"canonvec: error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ParseError, ConfigError) as exc:
        print(f"canonvec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CanonvecError, OSError) as exc:
        print(f"canonvec: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
