"""End-to-end title parsing and record serialization.

A record pairs the input title with the template that fired and the typed
concept lists. Serialization is newline-delimited JSON with a fixed key
order, so output bytes are stable across runs and worker counts.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .concepts import TitleExpression
from .ingest import Title
from .lexicon import Lexicon
from .sieves import type_template
from .templates import TemplateKind, classify


class RecordFormatError(Exception):
    """A serialized record line could not be decoded."""


@dataclass
class ExtractionRecord:
    title: Title
    template: TemplateKind
    expression: TitleExpression
    error: str | None = None


def parse_title(title: Title, lexicon: Lexicon) -> ExtractionRecord:
    """Classify and type one title."""
    template = classify(title, lexicon)
    expression = type_template(title, template, lexicon)
    return ExtractionRecord(title=title, template=template.kind, expression=expression)


def _parse_safely(title: Title, lexicon: Lexicon) -> ExtractionRecord:
    try:
        return parse_title(title, lexicon)
    except Exception as exc:  # one bad title must not abort a corpus run
        return ExtractionRecord(
            title=title,
            template=TemplateKind.DEFAULT,
            expression=TitleExpression(),
            error=f"{type(exc).__name__}: {exc}",
        )


_WORKER_LEXICON: Lexicon | None = None


def _init_worker(lexicon: Lexicon) -> None:
    global _WORKER_LEXICON
    _WORKER_LEXICON = lexicon


def _worker(title: Title) -> ExtractionRecord:
    assert _WORKER_LEXICON is not None
    return _parse_safely(title, _WORKER_LEXICON)


def parse_corpus(
    titles: Iterable[Title], lexicon: Lexicon, jobs: int = 1
) -> list[ExtractionRecord]:
    """Parse a corpus, optionally across processes.

    Output order follows input order and is identical for any job count.
    """
    titles = list(titles)
    if jobs <= 1 or len(titles) < 2:
        return [_parse_safely(t, lexicon) for t in titles]
    with multiprocessing.Pool(
        processes=jobs, initializer=_init_worker, initargs=(lexicon,)
    ) as pool:
        return pool.map(_worker, titles, chunksize=max(1, len(titles) // (jobs * 4)))


def record_to_dict(record: ExtractionRecord) -> dict:
    payload: dict = {
        "title": record.title.text,
        "year": record.title.year,
        "source_key": record.title.source_key,
        "template": record.template.value,
    }
    payload.update(record.expression.to_dict())
    if record.error is not None:
        payload["error"] = record.error
    return payload


def record_from_dict(payload: dict) -> ExtractionRecord:
    try:
        title = Title(
            text=str(payload["title"]),
            year=payload.get("year"),
            source_key=str(payload.get("source_key", "")),
        )
        template = TemplateKind(payload["template"])
        expression = TitleExpression.from_dict(payload)
    except (KeyError, ValueError, TypeError) as exc:
        raise RecordFormatError(f"malformed record: {exc}") from exc
    return ExtractionRecord(
        title=title,
        template=template,
        expression=expression,
        error=payload.get("error"),
    )


def serialize_record(record: ExtractionRecord) -> str:
    return json.dumps(record_to_dict(record), ensure_ascii=False)


def deserialize_record(line: str) -> ExtractionRecord:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise RecordFormatError("record line is not an object")
    return record_from_dict(payload)


def write_records(records: Iterable[ExtractionRecord], fp: IO[str]) -> None:
    for record in records:
        fp.write(serialize_record(record))
        fp.write("\n")


def read_records(source: str | Path | IO[str]) -> list[ExtractionRecord]:
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fp:
            return [deserialize_record(line) for line in fp if line.strip()]
    return [deserialize_record(line) for line in source if line.strip()]


def write_titles(titles: Iterable[Title], fp: IO[str]) -> None:
    for title in titles:
        fp.write(json.dumps(title.to_dict(), ensure_ascii=False))
        fp.write("\n")


def read_titles(source: str | Path | IO[str]) -> list[Title]:
    """Read a title stream: JSON objects or bare title lines, one per line."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fp:
            return read_titles(fp)
    titles: list[Title] = []
    for line in source:
        line = line.strip()
        if not line:
            continue
        if line.startswith("{"):
            try:
                payload = json.loads(line)
                titles.append(Title.from_dict(payload))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise RecordFormatError(f"invalid title line: {exc}") from exc
        else:
            titles.append(Title(text=line))
    return titles
