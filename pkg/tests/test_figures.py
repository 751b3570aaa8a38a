"""Figure rendering writes real image files."""

from title_miner import analytics, figures
from title_miner.concepts import ConceptType, TitleExpression
from title_miner.ingest import Title
from title_miner.pipeline import ExtractionRecord
from title_miner.templates import TemplateKind

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def _records():
    expr = TitleExpression()
    expr.research_problem.append("Machine Translation")
    expr.resource.append("WordNet")
    return [
        ExtractionRecord(
            title=Title(text="t", year=1999),
            template=TemplateKind.DEFAULT,
            expression=expr,
        )
    ]


def test_all_figures_save_png(tmp_path):
    records = _records()
    frequencies = analytics.concept_frequencies(records)
    coverage = {kind: 0 for kind in TemplateKind}
    coverage[TemplateKind.DEFAULT] = 1
    split = analytics.century_split(records)
    metrics = {c: None for c in ConceptType}
    metrics[ConceptType.RESEARCH_PROBLEM] = 0.75

    written = [
        figures.save_frequency_figure(frequencies, tmp_path / "freq.png"),
        figures.save_coverage_figure(coverage, tmp_path / "cov.png"),
        figures.save_century_figure(split, tmp_path / "era.png"),
        figures.save_metrics_figure(metrics, tmp_path / "prec.png", "precision"),
    ]
    for path in written:
        assert path.exists()
        assert path.read_bytes()[:8] == PNG_MAGIC
