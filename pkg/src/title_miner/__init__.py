"""Rule-based extraction of typed concepts from scholarly article titles."""

from .concepts import CONCEPT_ORDER, TYPING_PRECEDENCE, ConceptType, TitleExpression
from .connectors import CONNECTORS, ChunkedPhrase, count_connectors, split_on_connectors
from .ingest import IngestStats, Title, normalize_title, read_bibtex_corpus
from .lexicon import Lexicon, LexiconError, load_default_lexicon, load_lexicon
from .pipeline import ExtractionRecord, parse_corpus, parse_title
from .sieves import (
    BRANCH_SIGNATURES,
    five_way_concept_typing,
    multi_connector_typing,
    one_connector_heuristics,
    type_template,
)
from .templates import TEMPLATE_PRECEDENCE, TemplateClass, TemplateKind, classify, rule_coverage

__version__ = "0.1.0"

__all__ = [
    "BRANCH_SIGNATURES",
    "CONCEPT_ORDER",
    "CONNECTORS",
    "ChunkedPhrase",
    "ConceptType",
    "ExtractionRecord",
    "IngestStats",
    "Lexicon",
    "LexiconError",
    "TEMPLATE_PRECEDENCE",
    "TYPING_PRECEDENCE",
    "TemplateClass",
    "TemplateKind",
    "Title",
    "TitleExpression",
    "classify",
    "count_connectors",
    "five_way_concept_typing",
    "load_default_lexicon",
    "load_lexicon",
    "multi_connector_typing",
    "normalize_title",
    "one_connector_heuristics",
    "parse_corpus",
    "parse_title",
    "read_bibtex_corpus",
    "rule_coverage",
    "split_on_connectors",
    "type_template",
    "__version__",
]
