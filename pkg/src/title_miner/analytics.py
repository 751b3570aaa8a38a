"""Corpus-level reporting over extraction records.

Covers term frequency rankings, a per-century trend split, template
coverage, and set-based precision and recall against curated term lists.
Rendering stays plain text here; figure output lives with the command-line
layer so this module carries no plotting dependency.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .concepts import CONCEPT_ORDER, ConceptType
from .pipeline import ExtractionRecord
from .templates import TEMPLATE_PRECEDENCE, TemplateKind

Ranking = list[tuple[str, int]]

# Year boundary between the two publication eras reported on.
CENTURY_BOUNDARY = 2000
ERA_LABELS = ("20th", "21st")


def normalize_term(term: str) -> str:
    return " ".join(term.lower().split())


@dataclass(frozen=True)
class GoldList:
    """Curated reference terms for one concept."""

    concept: ConceptType
    terms: frozenset[str]


def load_gold_list(path: str | Path, concept: ConceptType) -> GoldList:
    """Read a one-term-per-line file; ``#`` lines are comments."""
    terms = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        entry = line.strip()
        if entry and not entry.startswith("#"):
            terms.add(normalize_term(entry))
    return GoldList(concept=concept, terms=frozenset(terms))


def _ranked(counter: Counter[str]) -> Ranking:
    # count descending, then term ascending for stable ties
    return sorted(counter.items(), key=lambda item: (-item[1], item[0]))


def concept_frequencies(
    records: Iterable[ExtractionRecord],
) -> dict[ConceptType, Ranking]:
    """Rank lowercased extracted terms per concept by occurrence count."""
    counters: dict[ConceptType, Counter[str]] = {c: Counter() for c in CONCEPT_ORDER}
    for record in records:
        for concept, phrase in record.expression.items():
            counters[concept][normalize_term(phrase)] += 1
    return {concept: _ranked(counters[concept]) for concept in CONCEPT_ORDER}


@dataclass
class CenturySplit:
    """Frequency rankings per era, with era record counts and exclusions."""

    by_concept: dict[ConceptType, dict[str, Ranking]]
    era_records: dict[str, int] = field(default_factory=dict)
    excluded_records: int = 0


def century_split(records: Iterable[ExtractionRecord]) -> CenturySplit:
    """Split rankings at the century boundary; year-less records are counted
    separately rather than bucketed."""
    counters = {
        concept: {era: Counter() for era in ERA_LABELS} for concept in CONCEPT_ORDER
    }
    era_records = {era: 0 for era in ERA_LABELS}
    excluded = 0
    for record in records:
        year = record.title.year
        if year is None:
            excluded += 1
            continue
        era = ERA_LABELS[0] if year <= CENTURY_BOUNDARY else ERA_LABELS[1]
        era_records[era] += 1
        for concept, phrase in record.expression.items():
            counters[concept][era][normalize_term(phrase)] += 1
    by_concept = {
        concept: {era: _ranked(counters[concept][era]) for era in ERA_LABELS}
        for concept in CONCEPT_ORDER
    }
    return CenturySplit(
        by_concept=by_concept, era_records=era_records, excluded_records=excluded
    )


def extracted_terms(
    records: Iterable[ExtractionRecord],
) -> dict[ConceptType, list[str]]:
    """All extracted terms per concept, normalized, in corpus order."""
    terms: dict[ConceptType, list[str]] = {c: [] for c in CONCEPT_ORDER}
    for record in records:
        for concept, phrase in record.expression.items():
            terms[concept].append(normalize_term(phrase))
    return terms


def precision_eval(
    extracted: Mapping[ConceptType, Sequence[str]],
    gold: Mapping[ConceptType, GoldList],
) -> dict[ConceptType, float | None]:
    """Type-level precision: |distinct extracted ∩ gold| / |distinct extracted|.

    Concepts with nothing extracted or no gold list are undefined (None),
    never zero.
    """
    results: dict[ConceptType, float | None] = {}
    for concept in CONCEPT_ORDER:
        gold_list = gold.get(concept)
        distinct = {normalize_term(t) for t in extracted.get(concept, [])}
        if gold_list is None or not distinct:
            results[concept] = None
            continue
        results[concept] = len(distinct & gold_list.terms) / len(distinct)
    return results


def recall_eval(
    extracted: Iterable[str], oracle: Iterable[str]
) -> float | None:
    """Share of oracle terms found among the extracted terms."""
    oracle_set = {normalize_term(t) for t in oracle}
    if not oracle_set:
        return None
    found = {normalize_term(t) for t in extracted}
    return len(oracle_set & found) / len(oracle_set)


# -- rendering ----------------------------------------------------------------


def _table(rows: list[tuple[str, ...]], header: tuple[str, ...]) -> str:
    widths = [
        max(len(row[i]) for row in [header, *rows]) for i in range(len(header))
    ]
    lines = []
    for row in [header, tuple("-" * w for w in widths), *rows]:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_frequencies(
    frequencies: Mapping[ConceptType, Ranking], top_n: int = 5
) -> str:
    rows = []
    for concept in CONCEPT_ORDER:
        for term, count in frequencies.get(concept, [])[:top_n]:
            rows.append((concept.value, term, str(count)))
    return _table(rows, ("concept", "term", "count"))


def render_coverage(coverage: Mapping[TemplateKind, int]) -> str:
    rows = [
        (kind.value, str(coverage.get(kind, 0))) for kind in TEMPLATE_PRECEDENCE
    ]
    rows.append(("total", str(sum(coverage.values()))))
    return _table(rows, ("template", "titles"))


def render_century(split: CenturySplit, top_n: int = 5) -> str:
    rows = []
    for concept in CONCEPT_ORDER:
        for era in ERA_LABELS:
            for term, count in split.by_concept[concept][era][:top_n]:
                rows.append((concept.value, era, term, str(count)))
    table = _table(rows, ("concept", "era", "term", "count"))
    footer = (
        f"records: {ERA_LABELS[0]}={split.era_records.get(ERA_LABELS[0], 0)} "
        f"{ERA_LABELS[1]}={split.era_records.get(ERA_LABELS[1], 0)} "
        f"no-year={split.excluded_records}"
    )
    return f"{table}\n{footer}"


def render_metrics(
    metrics: Mapping[ConceptType, float | None], label: str = "precision"
) -> str:
    rows = []
    for concept in CONCEPT_ORDER:
        value = metrics.get(concept)
        rows.append(
            (concept.value, "n/a" if value is None else f"{value * 100:.2f}%")
        )
    return _table(rows, ("concept", label))


def frequency_rows(
    frequencies: Mapping[ConceptType, Ranking], top_n: int = 5
) -> list[str]:
    """Machine-readable frequency rows, one JSON object per line."""
    lines = []
    for concept in CONCEPT_ORDER:
        for rank, (term, count) in enumerate(frequencies.get(concept, [])[:top_n], 1):
            lines.append(
                json.dumps(
                    {
                        "concept": concept.value,
                        "rank": rank,
                        "term": term,
                        "count": count,
                    },
                    ensure_ascii=False,
                )
            )
    return lines


def coverage_rows(coverage: Mapping[TemplateKind, int]) -> list[str]:
    return [
        json.dumps({"template": kind.value, "titles": coverage.get(kind, 0)})
        for kind in TEMPLATE_PRECEDENCE
    ]


def metric_rows(
    metrics: Mapping[ConceptType, float | None], label: str = "precision"
) -> list[str]:
    return [
        json.dumps({"concept": concept.value, label: metrics.get(concept)})
        for concept in CONCEPT_ORDER
    ]
