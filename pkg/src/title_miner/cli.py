"""Command-line interface.

Subcommands mirror the processing stages: ``ingest`` turns BibTeX into a
title stream, ``parse`` types titles into records, ``stats`` and ``eval``
report over records, and ``pipeline`` chains the stages. Data goes to
stdout (or the named output file); diagnostics go to stderr.

Exit codes: 0 success, 2 unreadable input, 3 lexicon failure, 4 malformed
records.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import analytics
from .concepts import CONCEPT_ORDER, ConceptType
from .ingest import BibtexSyntaxError, IngestStats, read_bibtex_corpus
from .lexicon import Lexicon, LexiconError, default_lexicon_dir, load_lexicon
from .pipeline import (
    RecordFormatError,
    parse_corpus,
    read_records,
    read_titles,
    write_records,
    write_titles,
)
from .templates import TemplateKind, rule_coverage

LEXICON_ENV_VAR = "TITLE_MINER_LEXICON"

EXIT_OK = 0
EXIT_UNREADABLE_INPUT = 2
EXIT_LEXICON_FAILURE = 3
EXIT_MALFORMED_RECORDS = 4


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_lexicon(path_arg: str | None) -> Lexicon:
    directory = path_arg or os.environ.get(LEXICON_ENV_VAR) or default_lexicon_dir()
    return load_lexicon(directory)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def cmd_ingest(args: argparse.Namespace) -> int:
    stats = IngestStats()
    try:
        titles = read_bibtex_corpus(args.bibtex, stats)
    except (OSError, BibtexSyntaxError) as exc:
        _err(f"error: cannot ingest {args.bibtex}: {exc}")
        return EXIT_UNREADABLE_INPUT
    out, close = _open_out(args.out)
    try:
        write_titles(titles, out)
    finally:
        if close:
            out.close()
    for warning in stats.warnings:
        _err(f"warning: {warning}")
    _err(
        f"entries={stats.entries_read} kept={len(titles)} "
        f"skipped={stats.skipped_entries} invalid={stats.dropped_invalid} "
        f"duplicates={stats.dropped_duplicates}"
    )
    return EXIT_OK


def cmd_parse(args: argparse.Namespace) -> int:
    try:
        lexicon = _resolve_lexicon(args.lexicon)
    except LexiconError as exc:
        _err(f"error: lexicon: {exc}")
        return EXIT_LEXICON_FAILURE
    try:
        if args.titles == "-":
            titles = read_titles(sys.stdin)
        else:
            titles = read_titles(args.titles)
    except OSError as exc:
        _err(f"error: cannot read titles: {exc}")
        return EXIT_UNREADABLE_INPUT
    except RecordFormatError as exc:
        _err(f"error: {exc}")
        return EXIT_MALFORMED_RECORDS
    records = parse_corpus(titles, lexicon, jobs=args.jobs)
    out, close = _open_out(args.out)
    try:
        write_records(records, out)
    finally:
        if close:
            out.close()
    failures = sum(1 for r in records if r.error is not None)
    totals = ", ".join(
        f"{c.value}={sum(len(r.expression.get(c)) for r in records)}"
        for c in CONCEPT_ORDER
    )
    _err(f"parsed={len(records)} failures={failures} ({totals})")
    return EXIT_OK


def _load_records(path: str):
    if path == "-":
        return read_records(sys.stdin)
    return read_records(path)


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        records = _load_records(args.records)
    except OSError as exc:
        _err(f"error: cannot read records: {exc}")
        return EXIT_UNREADABLE_INPUT
    except RecordFormatError as exc:
        _err(f"error: {exc}")
        return EXIT_MALFORMED_RECORDS
    frequencies = analytics.concept_frequencies(records)
    sections: list[str] = []
    ndjson_rows: list[str] = []
    if args.format == "text":
        sections.append(analytics.render_frequencies(frequencies, args.top))
    else:
        ndjson_rows.extend(analytics.frequency_rows(frequencies, args.top))
    coverage = None
    if args.coverage:
        coverage = {kind: 0 for kind in TemplateKind}
        for record in records:
            coverage[record.template] += 1
        if args.format == "text":
            sections.append(analytics.render_coverage(coverage))
        else:
            ndjson_rows.extend(analytics.coverage_rows(coverage))
    split = None
    if args.century:
        split = analytics.century_split(records)
        if args.format == "text":
            sections.append(analytics.render_century(split, args.top))
    out, close = _open_out(args.out)
    try:
        if args.format == "text":
            out.write("\n\n".join(sections))
            out.write("\n")
        else:
            for row in ndjson_rows:
                out.write(row + "\n")
    finally:
        if close:
            out.close()
    if args.figures:
        from . import figures

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        written = [
            figures.save_frequency_figure(frequencies, fig_dir / "top_terms.png", args.top)
        ]
        if coverage is not None:
            written.append(
                figures.save_coverage_figure(coverage, fig_dir / "rule_coverage.png")
            )
        if split is not None:
            written.append(
                figures.save_century_figure(split, fig_dir / "era_totals.png")
            )
        _err("figures: " + " ".join(str(p) for p in written))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        records = _load_records(args.records)
    except OSError as exc:
        _err(f"error: cannot read records: {exc}")
        return EXIT_UNREADABLE_INPUT
    except RecordFormatError as exc:
        _err(f"error: {exc}")
        return EXIT_MALFORMED_RECORDS
    gold_dir = Path(args.gold_dir)
    extracted = analytics.extracted_terms(records)
    gold = {}
    for concept in CONCEPT_ORDER:
        path = gold_dir / f"{concept.value}.txt"
        if path.exists():
            gold[concept] = analytics.load_gold_list(path, concept)
    if args.mode == "precision":
        metrics = analytics.precision_eval(extracted, gold)
    else:
        metrics: dict[ConceptType, float | None] = {}
        for concept in CONCEPT_ORDER:
            gold_list = gold.get(concept)
            if gold_list is None:
                metrics[concept] = None
            else:
                metrics[concept] = analytics.recall_eval(
                    extracted[concept], gold_list.terms
                )
    out, close = _open_out(args.out)
    try:
        if args.format == "text":
            out.write(analytics.render_metrics(metrics, args.mode))
            out.write("\n")
        else:
            for row in analytics.metric_rows(metrics, args.mode):
                out.write(row + "\n")
    finally:
        if close:
            out.close()
    if args.figures:
        from . import figures

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        path = figures.save_metrics_figure(
            metrics, fig_dir / f"{args.mode}.png", args.mode
        )
        _err(f"figures: {path}")
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stats = IngestStats()
    try:
        titles = read_bibtex_corpus(args.bibtex, stats)
    except (OSError, BibtexSyntaxError) as exc:
        _err(f"error: cannot ingest {args.bibtex}: {exc}")
        return EXIT_UNREADABLE_INPUT
    try:
        lexicon = _resolve_lexicon(args.lexicon)
    except LexiconError as exc:
        _err(f"error: lexicon: {exc}")
        return EXIT_LEXICON_FAILURE
    with open(out_dir / "titles.ndjson", "w", encoding="utf-8") as fp:
        write_titles(titles, fp)
    records = parse_corpus(titles, lexicon, jobs=args.jobs)
    with open(out_dir / "records.ndjson", "w", encoding="utf-8") as fp:
        write_records(records, fp)
    frequencies = analytics.concept_frequencies(records)
    coverage = rule_coverage(titles, lexicon)
    split = analytics.century_split(records)
    report = "\n\n".join(
        [
            analytics.render_frequencies(frequencies, args.top),
            analytics.render_coverage(coverage),
            analytics.render_century(split, args.top),
        ]
    )
    (out_dir / "report.txt").write_text(report + "\n", encoding="utf-8")
    if args.figures:
        from . import figures

        fig_dir = out_dir / "figures"
        fig_dir.mkdir(exist_ok=True)
        figures.save_frequency_figure(frequencies, fig_dir / "top_terms.png", args.top)
        figures.save_coverage_figure(coverage, fig_dir / "rule_coverage.png")
        figures.save_century_figure(split, fig_dir / "era_totals.png")
    _err(
        f"entries={stats.entries_read} titles={len(titles)} records={len(records)} "
        f"-> {out_dir}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="title-miner",
        description="Extract typed scientific concepts from article titles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="BibTeX file to title stream")
    p_ingest.add_argument("bibtex", help="input BibTeX file")
    p_ingest.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p_ingest.set_defaults(func=cmd_ingest)

    p_parse = sub.add_parser("parse", help="title stream to extraction records")
    p_parse.add_argument("titles", help="title stream path, or - for stdin")
    p_parse.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p_parse.add_argument(
        "--lexicon",
        default=None,
        help=f"lexicon directory (default: ${LEXICON_ENV_VAR} or bundled)",
    )
    p_parse.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_parse.set_defaults(func=cmd_parse)

    p_stats = sub.add_parser("stats", help="frequency and coverage reports")
    p_stats.add_argument("records", help="records path, or - for stdin")
    p_stats.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p_stats.add_argument("--top", type=int, default=5, help="terms per concept")
    p_stats.add_argument("--coverage", action="store_true", help="add template coverage")
    p_stats.add_argument("--century", action="store_true", help="add era split")
    p_stats.add_argument("--format", choices=("text", "ndjson"), default="text")
    p_stats.add_argument("--figures", default=None, help="directory for figure files")
    p_stats.set_defaults(func=cmd_stats)

    p_eval = sub.add_parser("eval", help="precision or recall against term lists")
    p_eval.add_argument("records", help="records path, or - for stdin")
    p_eval.add_argument("--gold-dir", required=True, help="directory of <concept>.txt lists")
    p_eval.add_argument("--mode", choices=("precision", "recall"), default="precision")
    p_eval.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p_eval.add_argument("--format", choices=("text", "ndjson"), default="text")
    p_eval.add_argument("--figures", default=None, help="directory for figure files")
    p_eval.set_defaults(func=cmd_eval)

    p_pipe = sub.add_parser("pipeline", help="ingest, parse, and report in one run")
    p_pipe.add_argument("bibtex", help="input BibTeX file")
    p_pipe.add_argument("out_dir", help="output directory")
    p_pipe.add_argument("--lexicon", default=None)
    p_pipe.add_argument("--jobs", type=int, default=1)
    p_pipe.add_argument("--top", type=int, default=5)
    p_pipe.add_argument("--figures", action="store_true", help="also render figures")
    p_pipe.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
