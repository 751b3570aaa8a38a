"""Corpus ingestion: a small BibTeX reader and title normalization.

Only the subset of BibTeX needed for title corpora is supported: entry
delimitation, the title and year fields, and brace or quote delimited
values. String macros and cross references are out of scope; entries
without a title are skipped and counted, while an entry whose braces never
balance is a hard error carrying the byte offset of the entry start.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable


@dataclass(frozen=True)
class RawRecord:
    """One bibliographic entry as read from the source."""

    entry_key: str
    title_raw: str
    year: int | None


@dataclass(frozen=True)
class Title:
    """A normalized title ready for template classification."""

    text: str
    year: int | None = None
    source_key: str = ""

    def to_dict(self) -> dict:
        return {"text": self.text, "year": self.year, "source_key": self.source_key}

    @classmethod
    def from_dict(cls, payload: dict) -> "Title":
        return cls(
            text=str(payload["text"]),
            year=payload.get("year"),
            source_key=str(payload.get("source_key", "")),
        )


@dataclass
class IngestStats:
    """Counters accumulated across an ingest run."""

    entries_read: int = 0
    skipped_entries: int = 0
    dropped_invalid: int = 0
    dropped_duplicates: int = 0
    warnings: list[str] = field(default_factory=list)

    def warn(self, message: str) -> None:
        self.warnings.append(message)


class BibtexSyntaxError(Exception):
    """An entry could not be delimited; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class InvalidTitleError(Exception):
    """A title normalized to nothing usable."""


_ENTRY_HEAD_RE = re.compile(r"@\s*([A-Za-z]+)\s*\{")
_NON_ENTRY_TYPES = {"comment", "string", "preamble"}
_FIELD_NAME_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9_-]*)\s*=\s*")
_YEAR_RE = re.compile(r"(1[5-9]\d{2}|20\d{2})")

# LaTeX accent commands mapped to combining marks, applied to the argument's
# first character and recomposed.
_ACCENTS = {
    "'": "\u0301", "`": "\u0300", "^": "\u0302", '"': "\u0308",
    "~": "\u0303", "=": "\u0304", ".": "\u0307", "u": "\u0306",
    "v": "\u030c", "H": "\u030b", "c": "\u0327", "k": "\u0328",
    "r": "\u030a",
}
_TEXT_COMMANDS = {
    "ss": "ß", "ae": "æ", "AE": "Æ", "oe": "œ", "OE": "Œ",
    "aa": "å", "AA": "Å", "o": "ø", "O": "Ø", "l": "ł", "L": "Ł",
    "i": "i", "j": "j",
}
_ACCENT_RE = re.compile(
    r"\\(['`^\"~=.uvHckr])\s*(?:\{\s*(\w{1,2})\s*\}|(\w))"
)
_TEXT_COMMAND_RE = re.compile(r"\\(ss|ae|AE|oe|OE|aa|AA|o|O|l|L|i|j)\b")
_DASHES = "\u2010\u2011\u2012\u2013\u2014\u2015\u2212"


def _skip_balanced(text: str, start: int) -> int:
    """Return the index just past the brace group opening at ``start``."""
    assert text[start] == "{"
    depth = 0
    i = start
    while i < len(text):
        c = text[i]
        if c == "\\" and i + 1 < len(text):
            i += 2
            continue
        if c == "{":
            depth += 1
        elif c == "}":
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    raise BibtexSyntaxError("unbalanced braces", start)


def _read_value(text: str, i: int) -> tuple[str, int]:
    """Read one field value starting at ``i``; returns (value, next index)."""
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    if i >= len(text):
        raise BibtexSyntaxError("unexpected end of input in field value", i)
    c = text[i]
    if c == "{":
        end = _skip_balanced(text, i)
        return text[i + 1:end - 1], end
    if c == '"':
        j = i + 1
        while j < len(text):
            if text[j] == "\\" and j + 1 < len(text):
                j += 2
                continue
            if text[j] == '"':
                return text[i + 1:j], j + 1
            j += 1
        raise BibtexSyntaxError("unterminated quoted value", i)
    m = re.match(r"[^,}\s]+", text[i:])
    if not m:
        raise BibtexSyntaxError("empty field value", i)
    return m.group(0), i + m.end()


def _parse_fields(body: str, stats: IngestStats | None, key: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    i = 0
    while i < len(body):
        m = _FIELD_NAME_RE.match(body, i)
        if not m:
            # tolerate trailing commas and stray separators
            if body[i] in ", \t\r\n":
                i += 1
                continue
            if stats is not None:
                stats.warn(f"entry {key!r}: unparseable field data ignored")
            break
        name = m.group(1).lower()
        value, i = _read_value(body, m.end())
        fields[name] = value
        while i < len(body) and body[i] in ", \t\r\n":
            i += 1
    return fields


def parse_bibtex(stream: bytes | str, stats: IngestStats | None = None) -> list[RawRecord]:
    """Extract title-bearing records from a BibTeX stream."""
    if isinstance(stream, bytes):
        try:
            text = stream.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise BibtexSyntaxError("input is not valid UTF-8", exc.start) from exc
    else:
        text = stream
    records: list[RawRecord] = []
    i = 0
    while True:
        at = text.find("@", i)
        if at == -1:
            break
        m = _ENTRY_HEAD_RE.match(text, at)
        if not m:
            i = at + 1
            continue
        entry_type = m.group(1).lower()
        brace = m.end() - 1
        end = _skip_balanced(text, brace)
        i = end
        if entry_type in _NON_ENTRY_TYPES:
            continue
        body = text[brace + 1:end - 1]
        key_match = re.match(r"\s*([^,{}\s]+)\s*,", body)
        if key_match:
            key = key_match.group(1)
            field_src = body[key_match.end():]
        else:
            key = ""
            field_src = body
        if stats is not None:
            stats.entries_read += 1
        try:
            fields = _parse_fields(field_src, stats, key)
        except BibtexSyntaxError:
            if stats is not None:
                stats.skipped_entries += 1
                stats.warn(f"entry {key!r}: unparseable fields, skipped")
            continue
        title = fields.get("title")
        if title is None or not title.strip():
            if stats is not None:
                stats.skipped_entries += 1
                stats.warn(f"entry {key!r}: no title, skipped")
            continue
        year: int | None = None
        if "year" in fields:
            ym = _YEAR_RE.search(fields["year"])
            if ym:
                year = int(ym.group(1))
        records.append(RawRecord(entry_key=key, title_raw=title, year=year))
    return records


def _apply_accents(text: str) -> str:
    def sub(m: re.Match[str]) -> str:
        mark = _ACCENTS[m.group(1)]
        arg = m.group(2) or m.group(3)
        return unicodedata.normalize("NFC", arg[0] + mark) + arg[1:]

    return _ACCENT_RE.sub(sub, text)


def normalize_title(record: RawRecord) -> Title:
    """Produce a clean Title from a raw record.

    Protective braces are stripped, recognized LaTeX accent and letter
    commands are resolved, dash variants become ASCII hyphens, and
    whitespace is collapsed. Raises InvalidTitleError when nothing usable
    remains.
    """
    s = record.title_raw
    s = _apply_accents(s)
    s = _TEXT_COMMAND_RE.sub(lambda m: _TEXT_COMMANDS[m.group(1)], s)
    s = re.sub(r"\\([&%$#_{}])", r"\1", s)
    s = re.sub(r"\\[A-Za-z]+\s*", "", s)
    s = s.replace("~", " ")
    s = s.replace("{", "").replace("}", "")
    for dash in _DASHES:
        s = s.replace(dash, "-")
    s = unicodedata.normalize("NFC", s)
    s = " ".join(s.split())
    if not s:
        raise InvalidTitleError(f"entry {record.entry_key!r}: empty title")
    return Title(text=s, year=record.year, source_key=record.entry_key)


def is_valid_title_text(text: str) -> bool:
    """A usable title has at least two characters and a letter in it."""
    return len(text) >= 2 and any(c.isalpha() for c in text)


def dedup_and_filter(
    titles: Iterable[Title], stats: IngestStats | None = None
) -> list[Title]:
    """Drop invalid titles and case-insensitive duplicates, keeping first."""
    seen: set[str] = set()
    kept: list[Title] = []
    for title in titles:
        if not is_valid_title_text(title.text):
            if stats is not None:
                stats.dropped_invalid += 1
            continue
        fingerprint = title.text.casefold()
        if fingerprint in seen:
            if stats is not None:
                stats.dropped_duplicates += 1
            continue
        seen.add(fingerprint)
        kept.append(title)
    return kept


def read_bibtex_corpus(path: str | Path, stats: IngestStats | None = None) -> list[Title]:
    """Parse, normalize, and dedup a BibTeX file into a title corpus."""
    data = Path(path).read_bytes()
    records = parse_bibtex(data, stats)
    titles: list[Title] = []
    for record in records:
        try:
            titles.append(normalize_title(record))
        except InvalidTitleError:
            if stats is not None:
                stats.dropped_invalid += 1
    return dedup_and_filter(titles, stats)
