"""Command-line pipeline: records -> linkages -> matrix -> assignments -> reports.

Exit codes: 0 success, 1 I/O failure, 2 input format error, 3 invalid
configuration.  Data goes to output files only; progress goes to stderr and
the last stderr line holds ``key=value`` counts.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import matrix as mx
from .assignment import read_assignments, write_assignments
from .errors import ConfigError, FormatError, RecordError
from .gini import GiniConfig, assign_gini
from .kl import KlConfig, KlMode, assign_kl
from .linkage import StreamCounts, read_linkages, stream_extract, write_linkages
from .records import RecordReader, load_country_map
from .validate import evaluate, load_control, load_langmap, render_report

log = logging.getLogger("surnamegeo")

EXIT_OK, EXIT_IO, EXIT_FORMAT, EXIT_CONFIG = 0, 1, 2, 3


class UsageError(ConfigError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _summary(**counts):
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)


def cmd_ingest(args):
    norm = load_country_map(args.country_map)
    with open(args.input, encoding="utf-8", newline="\n") as fh:
        reader = RecordReader(fh, norm, strict=args.strict)
        counts = StreamCounts()
        n = write_linkages(stream_extract(reader, counts), args.output)
    _summary(records=reader.n_read, skipped=reader.n_skipped, linkages=n)


def cmd_matrix(args):
    m = mx.SurnameCountryMatrix()
    for path in args.inputs:
        m = mx.merge(m, mx.accumulate(read_linkages(path)))
    mx.save(m, args.output)
    _summary(
        surnames=mx.surname_count(m), countries=mx.country_count(m), total=m.grand_total
    )


def _percentile(text):
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"--percentile must be a number, got {text!r}") from None


def cmd_assign(args):
    # config first: nothing is read when the flags are invalid
    if args.method == "kl":
        cfg = KlConfig(_percentile(args.percentile), KlMode(args.kl_mode))
    else:
        cfg = GiniConfig(args.min_count)
    m = mx.load(args.matrix)
    aset = assign_kl(m, cfg) if args.method == "kl" else assign_gini(m, cfg)
    write_assignments(aset, args.output)
    _summary(surnames=len(m), assigned=len(aset), reliable=aset.n_reliable, skipped=aset.skipped)


def cmd_stats(args):
    if args.top_k < 1:
        raise ConfigError(f"--top-k must be positive, got {args.top_k}")
    m = mx.load(args.matrix)
    aset = read_assignments(args.assignments)
    ranked = mx.top_countries(m, aset, args.top_k, reliable_only=not args.all)
    mx.write_top_countries(ranked, args.output)
    assigned = sum(a.reliable or args.all for a in aset)
    countries = len({a.country for a in aset if a.reliable or args.all})
    _summary(
        surnames=mx.surname_count(m),
        countries=mx.country_count(m),
        assigned=assigned,
        assigned_countries=countries,
    )


def cmd_validate(args):
    norm = load_country_map(args.country_map)
    langmap = load_langmap(args.langmap, norm)
    control = load_control(args.control, langmap)
    aset = read_assignments(args.assignments)
    report = evaluate(aset, control, langmap)
    render_report(report, args.output)
    total = report.total
    _summary(
        control=len(control),
        matched=total.matched,
        unmatched=report.unmatched,
        covered=total.covered,
        correct=total.correct_count,
    )


def build_parser():
    p = _Parser(prog="surnamegeo", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ingest", help="publication records (JSONL) -> linkage TSV")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--country-map", help="two-column TSV of country aliases")
    s.add_argument("--strict", action="store_true", help="fail on the first bad record")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("matrix", help="linkage TSV(s) -> surname x country matrix TSV")
    s.add_argument("inputs", nargs="+")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("assign", help="matrix TSV -> assignment TSV")
    s.add_argument("matrix")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--method", choices=["kl", "gini"], default="kl")
    s.add_argument("--percentile", default="0.8")
    s.add_argument("--kl-mode", choices=[m.value for m in KlMode], default=KlMode.POINT_MASS.value)
    s.add_argument("--min-count", type=int, default=0)
    s.set_defaults(func=cmd_assign)

    s = sub.add_parser("stats", help="matrix + assignments -> top-k country report")
    s.add_argument("matrix")
    s.add_argument("assignments")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--top-k", type=int, default=36)
    s.add_argument("--all", action="store_true", help="count unreliable assignments too")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("validate", help="assignments + control list -> coverage/correctness report")
    s.add_argument("assignments")
    s.add_argument("--control", required=True)
    s.add_argument("--langmap", required=True)
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--country-map")
    s.set_defaults(func=cmd_validate)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (FormatError, RecordError) as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (OSError, UnicodeDecodeError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main():
    sys.exit(run())
