"""Connector inventory and token-level phrase chunking.

Connectors are matched as whole whitespace-delimited tokens, so words that
merely contain one ("Information", "formalism") and hyphenated compounds
("Grapheme-to-Phoneme") never split a phrase.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

# 11 prepositions and 1 verb, in the order they are documented.
CONNECTORS: tuple[str, ...] = (
    "to", "of", "on", "for", "from", "with",
    "by", "via", "through", "using", "in", "as",
)

_CONNECTOR_SET = frozenset(CONNECTORS)
# Edge punctuation that may cling to a token; hyphens are kept so that a
# hyphen-joined token is never mistaken for a bare connector.
_EDGE_PUNCT = string.punctuation.replace("-", "") + "–—"


def connector_core(token: str) -> str | None:
    """Return the connector a token spells, or None.

    Only edge punctuation is stripped: "to," counts, "to-day" does not.
    """
    core = token.strip(_EDGE_PUNCT).lower()
    return core if core in _CONNECTOR_SET else None


def is_connector_token(token: str) -> bool:
    return connector_core(token) is not None


def count_connectors(phrase: str) -> int:
    return sum(1 for tok in phrase.split() if is_connector_token(tok))


@dataclass
class ChunkedPhrase:
    """A phrase split into connector-free segments.

    ``dropped`` holds connectors that carried no phrase on one side
    (leading, trailing, or doubled connectors) and were removed so that
    len(connectors) == len(segments) - 1 always holds for non-empty input.
    """

    segments: list[str] = field(default_factory=list)
    connectors: list[str] = field(default_factory=list)
    dropped: list[str] = field(default_factory=list)


def split_on_connectors(phrase: str) -> ChunkedPhrase:
    """Chunk ``phrase`` at connector tokens.

    Rejoining segments interleaved with connectors reproduces the phrase up
    to whitespace normalization, except for degenerate connectors which are
    reported via ``dropped`` instead.
    """
    chunk = ChunkedPhrase()
    current: list[str] = []
    for token in phrase.split():
        core = connector_core(token)
        if core is None:
            current.append(token)
            continue
        if not current:
            # no phrase to the left of this connector
            chunk.dropped.append(core)
            continue
        chunk.segments.append(" ".join(current))
        chunk.connectors.append(core)
        current = []
    if current:
        chunk.segments.append(" ".join(current))
    elif chunk.connectors:
        # trailing connector with no right-hand phrase
        chunk.dropped.append(chunk.connectors.pop())
    if not chunk.segments and phrase.split():
        # phrase made of connectors only; keep it whole rather than lose it
        chunk.segments.append(" ".join(phrase.split()))
        chunk.connectors.clear()
    return chunk
