"""Concept lexicon: language gazetteer, suffix families, marker lists.

The lexicon is loaded from seven plain-text files, one entry per line with
``#`` comment lines. Suffix entries are case-insensitive regular expression
fragments matched at the end of a phrase; language names are literal entries
used the same way, which is what lets modifier prefixes ("Ancient Accadian")
match through their head word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path

SUFFIX_FILES = {
    "languages": "languages.txt",
    "tool": "tool_suffixes.txt",
    "resource": "resource_suffixes.txt",
    "method": "method_suffixes.txt",
    "research_problem": "research_problem_suffixes.txt",
    "special": "special_markers.txt",
    "non_content": "non_content.txt",
}

# Competition-style task labels that always denote a research problem when
# they head a title.
SHARED_TASK_PATTERNS: tuple[str, ...] = (
    r"semeval[- ]?\d{4}\s+task\s+\d+",
    r"conll[- ]?\d{4}\s+shared\s+task(\s+\d+)?",
)

_SHARED_TASK_RE = re.compile(
    r"(?:" + "|".join(SHARED_TASK_PATTERNS) + r")", re.IGNORECASE
)


class LexiconError(Exception):
    """A lexicon file is missing, empty, or contains a bad pattern."""


@lru_cache(maxsize=128)
def _suffix_regex(patterns: tuple[str, ...]) -> re.Pattern[str]:
    alternation = "|".join(f"(?:{p})" for p in patterns)
    # Anchored at the end of the phrase; trailing punctuation is tolerated
    # so extracted phrases stay verbatim while still matching.
    return re.compile(rf"\b(?:{alternation})(?=\W*$)", re.IGNORECASE)


def ending(phrase: str, patterns: tuple[str, ...] | list[str]) -> bool:
    """True when ``phrase`` ends with a token matching any pattern."""
    if not phrase:
        raise ValueError("ending() requires a non-empty phrase")
    return _suffix_regex(tuple(patterns)).search(phrase) is not None


def _read_entries(path: Path) -> tuple[str, ...]:
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon file {path}: {exc}") from exc
    entries = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        try:
            re.compile(entry, re.IGNORECASE)
        except re.error as exc:
            raise LexiconError(
                f"{path.name}:{lineno}: bad pattern {entry!r}: {exc}"
            ) from exc
        entries.append(entry)
    if not entries:
        raise LexiconError(f"{path.name} contains no entries")
    return tuple(entries)


@dataclass(frozen=True)
class Lexicon:
    language_names: tuple[str, ...]
    tool_suffixes: tuple[str, ...]
    resource_suffixes: tuple[str, ...]
    method_suffixes: tuple[str, ...]
    research_problem_suffixes: tuple[str, ...]
    special_case_markers: tuple[str, ...]
    non_content_phrases: tuple[str, ...]

    @cached_property
    def _language_patterns(self) -> tuple[str, ...]:
        return tuple(re.escape(name) for name in self.language_names)

    @cached_property
    def _language_set(self) -> frozenset[str]:
        return frozenset(name.lower() for name in self.language_names)

    @cached_property
    def _special_marker_set(self) -> frozenset[str]:
        return frozenset(m.lower() for m in self.special_case_markers)

    @cached_property
    def _non_content_re(self) -> re.Pattern[str]:
        alternation = "|".join(f"(?:{p})" for p in self.non_content_phrases)
        return re.compile(rf"(?:{alternation})", re.IGNORECASE)

    # -- concept predicates -------------------------------------------------

    def is_language(self, phrase: str) -> bool:
        if phrase.strip().lower() in self._language_set:
            return True
        return ending(phrase, self._language_patterns)

    def is_tool(self, phrase: str) -> bool:
        return ending(phrase, self.tool_suffixes)

    def is_resource(self, phrase: str) -> bool:
        return ending(phrase, self.resource_suffixes)

    def is_method(self, phrase: str) -> bool:
        return ending(phrase, self.method_suffixes)

    def is_research_problem(self, phrase: str) -> bool:
        return ending(phrase, self.research_problem_suffixes)

    # -- marker checks ------------------------------------------------------

    def has_special_case_word(self, title: str) -> bool:
        """True when the text before a colon is a single system-name-like token.

        The token must carry a casing, digit, or internal-hyphen signal
        (SNOPAR, CIRCSIM-Tutor, MDWOZ) or be a listed marker word.
        """
        if ":" not in title:
            return False
        head = title.split(":", 1)[0].strip()
        if not head or " " in head or len(head) < 2:
            return False
        if not any(c.isalpha() for c in head):
            return False
        if head.lower() in self._special_marker_set:
            return True
        return (
            any(c.isupper() for c in head[1:])
            or head.isupper()
            or any(c.isdigit() for c in head)
            or "-" in head[1:-1]
        )

    def non_content_phrase(self, phrase: str) -> bool:
        """True when the whole phrase is publication boilerplate."""
        return (
            self._non_content_re.fullmatch(phrase.strip(" .!?")) is not None
        )

    @cached_property
    def _non_content_prefix_re(self) -> re.Pattern[str]:
        return re.compile(rf"(?:{self._non_content_re.pattern})\b", re.IGNORECASE)

    def non_content_prefix(self, title: str) -> re.Match[str] | None:
        """Match a boilerplate phrase at the start of the title, if any."""
        return self._non_content_prefix_re.match(title)

    @staticmethod
    def matches_shared_task(phrase: str) -> bool:
        return _SHARED_TASK_RE.search(phrase) is not None


def default_lexicon_dir() -> Path:
    return Path(__file__).parent / "data"


def load_lexicon(directory: str | Path) -> Lexicon:
    """Load all seven lexicon files from ``directory``.

    Raises LexiconError naming the offending file when anything is missing,
    empty, or fails to compile.
    """
    directory = Path(directory)
    entries = {
        key: _read_entries(directory / filename)
        for key, filename in SUFFIX_FILES.items()
    }
    return Lexicon(
        language_names=entries["languages"],
        tool_suffixes=entries["tool"],
        resource_suffixes=entries["resource"],
        method_suffixes=entries["method"],
        research_problem_suffixes=entries["research_problem"],
        special_case_markers=entries["special"],
        non_content_phrases=entries["non_content"],
    )


def load_default_lexicon() -> Lexicon:
    return load_lexicon(default_lexicon_dir())
