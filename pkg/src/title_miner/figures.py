"""Figure rendering for the report path.

Kept separate from the analytics computations so the library core never
imports a plotting backend; only the command-line report path pulls this in.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .analytics import CenturySplit, ERA_LABELS, Ranking  # noqa: E402
from .concepts import CONCEPT_ORDER, ConceptType  # noqa: E402
from .templates import TEMPLATE_PRECEDENCE, TemplateKind  # noqa: E402


def save_frequency_figure(
    frequencies: Mapping[ConceptType, Ranking],
    path: str | Path,
    top_n: int = 5,
) -> Path:
    """One horizontal bar panel per concept with its top terms."""
    fig, axes = plt.subplots(2, 3, figsize=(15, 7))
    for ax, concept in zip(axes.flat, CONCEPT_ORDER):
        ranking = frequencies.get(concept, [])[:top_n]
        terms = [term for term, _ in ranking][::-1]
        counts = [count for _, count in ranking][::-1]
        ax.barh(range(len(terms)), counts, color="#4878a8")
        ax.set_yticks(range(len(terms)))
        ax.set_yticklabels(terms, fontsize=8)
        ax.set_title(concept.value)
    fig.suptitle("Top extracted terms per concept")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_coverage_figure(
    coverage: Mapping[TemplateKind, int], path: str | Path
) -> Path:
    """Bar chart of titles handled per template rule."""
    kinds = [kind.value for kind in TEMPLATE_PRECEDENCE]
    counts = [coverage.get(kind, 0) for kind in TEMPLATE_PRECEDENCE]
    fig, ax = plt.subplots(figsize=(10, 5))
    ax.bar(kinds, counts, color="#a85948")
    ax.set_ylabel("titles")
    ax.set_title("Template coverage")
    ax.tick_params(axis="x", rotation=45)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_century_figure(split: CenturySplit, path: str | Path) -> Path:
    """Total typed phrases per era and concept."""
    totals = {
        era: [
            sum(count for _, count in split.by_concept[concept][era])
            for concept in CONCEPT_ORDER
        ]
        for era in ERA_LABELS
    }
    x = range(len(CONCEPT_ORDER))
    width = 0.38
    fig, ax = plt.subplots(figsize=(10, 5))
    ax.bar([i - width / 2 for i in x], totals[ERA_LABELS[0]], width,
           label=ERA_LABELS[0], color="#4878a8")
    ax.bar([i + width / 2 for i in x], totals[ERA_LABELS[1]], width,
           label=ERA_LABELS[1], color="#a85948")
    ax.set_xticks(list(x))
    ax.set_xticklabels([c.value for c in CONCEPT_ORDER], rotation=30, fontsize=8)
    ax.set_ylabel("typed phrases")
    ax.set_title("Extracted phrases by era")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_metrics_figure(
    metrics: Mapping[ConceptType, float | None],
    path: str | Path,
    label: str = "precision",
) -> Path:
    """Bar chart of an evaluation metric per concept; undefined bars are empty."""
    values = [
        0.0 if metrics.get(c) is None else float(metrics[c]) * 100
        for c in CONCEPT_ORDER
    ]
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.bar([c.value for c in CONCEPT_ORDER], values, color="#5a8a50")
    ax.set_ylim(0, 100)
    ax.set_ylabel(f"{label} (%)")
    ax.set_title(f"Type-level {label}")
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
