"""Command line interface.

Usage:

    swvm index --manifest docs.tsv --thesaurus syn.txt --out col.idx \\
        [--scheme btf-idf|tf-idf] [--boost title=18,meta=16,h1=14,url=18,other=1]
    swvm query --index col.idx --top 5 "optimize computer performance"
    swvm explain --index col.idx --doc d001
    swvm compare --index-a base.idx --index-b boosted.idx --top 5 "improve PC speed"

Query results are tab-separated ``rank score doc_id url`` lines with
four-decimal scores; compare output prefixes each such line with ``a``
or ``b`` for the first and second index.  Exit status is 0 on success,
1 on a usage error, and 2 on a data error (unreadable or malformed
files).  All diagnostics go to stderr with an ``error:`` prefix.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from .errors import SwvmError
from .html_zones import Zone
from .index_store import build_index, load_index, save_index
from .ingest import load_manifest
from .search import compare, explain, search
from .thesaurus import load_thesaurus
from .vectors import BTF_IDF_SCHEME, SCHEMES
from .weighting import DEFAULT_PROFILE, BoostProfile


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _boost_profile(text: str) -> BoostProfile:
    """Parse zone=value overrides on top of the default profile."""
    overrides = {}
    valid = {zone.value for zone in Zone}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or name not in valid:
            raise argparse.ArgumentTypeError(
                f"expected zone=value with zone one of {sorted(valid)}, got {part!r}"
            )
        try:
            overrides[name] = float(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {value!r}")
    try:
        return dataclasses.replace(DEFAULT_PROFILE, **overrides)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> _Parser:
    parser = _Parser(prog="swvm", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = commands.add_parser("index", help="build and save an index")
    p.add_argument("--manifest", required=True, help="collection manifest file")
    p.add_argument("--thesaurus", required=True, help="synonym file")
    p.add_argument("--out", required=True, help="index file to write")
    p.add_argument(
        "--scheme",
        choices=SCHEMES,
        default=BTF_IDF_SCHEME,
        help="weighting scheme (default: %(default)s)",
    )
    p.add_argument(
        "--boost",
        type=_boost_profile,
        default=DEFAULT_PROFILE,
        metavar="title=18,meta=16,h1=14,url=18,other=1",
        help="override zone boost multipliers",
    )
    p.set_defaults(func=_cmd_index)

    p = commands.add_parser("query", help="rank documents for a query")
    p.add_argument("--index", required=True, help="index file")
    p.add_argument("--top", required=True, type=_positive_int, help="result count")
    p.add_argument("query", help="query text")
    p.set_defaults(func=_cmd_query)

    p = commands.add_parser("explain", help="show a document's weight breakdown")
    p.add_argument("--index", required=True, help="index file")
    p.add_argument("--doc", required=True, help="document id")
    p.set_defaults(func=_cmd_explain)

    p = commands.add_parser("compare", help="run one query against two indexes")
    p.add_argument("--index-a", required=True, help="first index file")
    p.add_argument("--index-b", required=True, help="second index file")
    p.add_argument("--top", required=True, type=_positive_int, help="result count")
    p.add_argument("query", help="query text")
    p.set_defaults(func=_cmd_compare)
    return parser


def _print_results(results, prefix=""):
    for rank, result in enumerate(results, start=1):
        print(f"{prefix}{rank}\t{result.score:.4f}\t{result.doc_id}\t{result.url}")


def _cmd_index(args) -> int:
    entries = load_manifest(args.manifest)
    th = load_thesaurus(args.thesaurus)
    idx, skipped = build_index(entries, th, args.boost, args.scheme)
    for message in skipped:
        print(f"warning: skipped {message}", file=sys.stderr)
    save_index(idx, args.out)
    print(f"indexed {idx.stats.n} documents -> {args.out}")
    return 0


def _cmd_query(args) -> int:
    idx = load_index(args.index)
    _print_results(search(idx, args.query, args.top))
    return 0


def _zones_text(zone_counts) -> str:
    if zone_counts is None:
        return "-"
    pieces = [
        f"{zone.value}:{zone_counts[zone]}" for zone in Zone if zone_counts.get(zone, 0)
    ]
    return ",".join(pieces) if pieces else "-"


def _cmd_explain(args) -> int:
    idx = load_index(args.index)
    result = explain(idx, args.doc)
    print(f"doc\t{result.doc_id}")
    print(f"url\t{result.url}")
    print(f"scheme\t{result.scheme}")
    print(f"norm\t{result.norm:.4f}")
    print("term\tsynonyms\tzones\tbtf\tidf\tweight")
    for row in result.rows:
        synonyms = ",".join(row.synonyms) if row.synonyms else "-"
        print(
            f"{row.head}\t{synonyms}\t{_zones_text(row.zone_counts)}"
            f"\t{row.btf_text}\t{row.idf:.4f}\t{row.weight:.4f}"
        )
    return 0


def _cmd_compare(args) -> int:
    idx_a = load_index(args.index_a)
    idx_b = load_index(args.index_b)
    results_a, results_b = compare(idx_a, idx_b, args.query, args.top)
    _print_results(results_a, prefix="a\t")
    _print_results(results_b, prefix="b\t")
    return 0


def run(argv: list[str]) -> int:
    """Parse arguments and execute one subcommand, mapping errors to
    the documented exit codes instead of letting them escape."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SwvmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
