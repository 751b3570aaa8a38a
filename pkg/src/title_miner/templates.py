"""Precedence-ordered template classification for titles.

Nine template kinds are tested in a fixed order; the first match wins.
Split points are recorded at classification time so the typing stage never
has to re-locate colons or anchor phrases.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .lexicon import Lexicon


class TemplateKind(Enum):
    SPECIAL_WORD_COLON = "SpecialWordColon"
    USING_PREFIX = "UsingPrefix"
    COLON_CASE_STUDY = "ColonCaseStudy"
    CASE_STUDY_CONTAINED = "CaseStudyContained"
    COLON_GENERIC = "ColonGeneric"
    APPLIED_TO = "AppliedTo"
    NON_CONTENT_PREFIX = "NonContentPrefix"
    DESCRIPTION_OF = "DescriptionOf"
    DEFAULT = "Default"


# Precedence order; position is the rule number minus one.
TEMPLATE_PRECEDENCE: tuple[TemplateKind, ...] = tuple(TemplateKind)


@dataclass(frozen=True)
class TemplateClass:
    """A classified title: which template fired and where it splits."""

    kind: TemplateKind
    split_points: tuple[int, ...] = ()


_CASE_STUDY_RE = re.compile(r"\b(?:a\s+)?case\s+study\b", re.IGNORECASE)
_POST_COLON_CASE_STUDY_RE = re.compile(
    r"\s*(?:a\s+)?case\s+study\b", re.IGNORECASE
)
_APPLIED_TO_RE = re.compile(r"\bapplied\s+to\b", re.IGNORECASE)
_USING_PREFIX_RE = re.compile(r"using\s+", re.IGNORECASE)
_DESCRIPTION_OF_RE = re.compile(r"description\s+of\b", re.IGNORECASE)


def _title_text(title) -> str:
    return getattr(title, "text", title)


def classify(title, lexicon: Lexicon) -> TemplateClass:
    """Assign ``title`` to the first matching template kind."""
    text = _title_text(title)
    colon = text.find(":")

    if lexicon.has_special_case_word(text):
        return TemplateClass(TemplateKind.SPECIAL_WORD_COLON, (colon,))

    m = _USING_PREFIX_RE.match(text)
    if m:
        return TemplateClass(TemplateKind.USING_PREFIX, (m.end(),))

    if colon != -1:
        m = _POST_COLON_CASE_STUDY_RE.match(text[colon + 1:])
        if m:
            anchor = _CASE_STUDY_RE.search(text, colon + 1)
            assert anchor is not None
            return TemplateClass(
                TemplateKind.COLON_CASE_STUDY,
                (colon, anchor.start(), anchor.end()),
            )

    m = _CASE_STUDY_RE.search(text)
    if m:
        return TemplateClass(
            TemplateKind.CASE_STUDY_CONTAINED, (m.start(), m.end())
        )

    if colon != -1:
        return TemplateClass(TemplateKind.COLON_GENERIC, (colon,))

    m = _APPLIED_TO_RE.search(text)
    if m:
        return TemplateClass(TemplateKind.APPLIED_TO, (m.start(), m.end()))

    m = lexicon.non_content_prefix(text)
    if m:
        return TemplateClass(TemplateKind.NON_CONTENT_PREFIX, (m.end(),))

    m = _DESCRIPTION_OF_RE.match(text)
    if m:
        return TemplateClass(TemplateKind.DESCRIPTION_OF, (m.end(),))

    return TemplateClass(TemplateKind.DEFAULT)


def rule_coverage(corpus: Iterable, lexicon: Lexicon) -> dict[TemplateKind, int]:
    """Count titles per template kind; every kind is present in the result."""
    counts: Counter[TemplateKind] = Counter()
    total = 0
    for title in corpus:
        counts[classify(title, lexicon).kind] += 1
        total += 1
    result = {kind: counts.get(kind, 0) for kind in TEMPLATE_PRECEDENCE}
    assert sum(result.values()) == total
    return result
