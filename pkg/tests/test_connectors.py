"""Connector detection and phrase chunking."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from title_miner.connectors import (
    CONNECTORS,
    connector_core,
    count_connectors,
    is_connector_token,
    split_on_connectors,
)


def test_twelve_connectors():
    assert len(CONNECTORS) == 12
    assert set(CONNECTORS) == {
        "to", "of", "on", "for", "from", "with",
        "by", "via", "through", "using", "in", "as",
    }


@pytest.mark.parametrize("token", ["of", "Of", "OF", "of,", "(of)", "of."])
def test_connector_core_tolerates_case_and_edge_punctuation(token):
    assert connector_core(token) == "of"


@pytest.mark.parametrize(
    "token", ["often", "information", "formalism", "onto", "to-day", "in-depth"]
)
def test_connector_core_requires_whole_token(token):
    assert connector_core(token) is None


def test_hyphenated_compound_is_not_split():
    chunk = split_on_connectors("Grapheme-to-Phoneme Conversion")
    assert chunk.segments == ["Grapheme-to-Phoneme Conversion"]
    assert chunk.connectors == []


def test_count_connectors():
    assert count_connectors("Morphological Analysis") == 0
    assert count_connectors("Adding Pronunciation Information to Wordnets") == 1
    assert count_connectors("A of B for C in Tigrigna") == 3


def test_split_two_segments():
    chunk = split_on_connectors("Adding Pronunciation Information to Wordnets")
    assert chunk.segments == ["Adding Pronunciation Information", "Wordnets"]
    assert chunk.connectors == ["to"]
    assert chunk.dropped == []


def test_split_leading_connector_is_dropped():
    chunk = split_on_connectors("Using WordNet")
    assert chunk.segments == ["WordNet"]
    assert chunk.connectors == []
    assert chunk.dropped == ["using"]


def test_split_trailing_connector_is_dropped():
    chunk = split_on_connectors("Something to")
    assert chunk.segments == ["Something"]
    assert chunk.connectors == []
    assert chunk.dropped == ["to"]


def test_split_doubled_connectors():
    chunk = split_on_connectors("Translation of of Titles")
    assert chunk.segments == ["Translation", "Titles"]
    assert chunk.connectors == ["of"]
    assert chunk.dropped == ["of"]


def test_split_connector_only_phrase_kept_whole():
    chunk = split_on_connectors("of of")
    assert chunk.segments == ["of of"]
    assert chunk.connectors == []


def test_split_empty_phrase():
    chunk = split_on_connectors("   ")
    assert chunk.segments == []
    assert chunk.connectors == []
    assert chunk.dropped == []


_words = st.text(
    alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Nd")),
    min_size=1,
    max_size=10,
)
_tokens = st.lists(
    st.one_of(_words, st.sampled_from(CONNECTORS)), min_size=0, max_size=12
)


@given(_tokens)
def test_segment_connector_arity_invariant(tokens):
    """Non-empty splits always satisfy |connectors| == |segments| - 1."""
    chunk = split_on_connectors(" ".join(tokens))
    if chunk.segments:
        assert len(chunk.connectors) == len(chunk.segments) - 1
    else:
        assert chunk.connectors == []
    for segment in chunk.segments:
        # connector-only phrases are the one sanctioned exception
        if chunk.connectors or len(chunk.segments) > 1:
            assert all(
                not is_connector_token(tok) for tok in segment.split()
            )


@given(_tokens)
def test_segments_preserve_token_text(tokens):
    chunk = split_on_connectors(" ".join(tokens))
    rebuilt = " ".join(chunk.segments).split()
    original_non_connectors = [t for t in tokens if not is_connector_token(t)]
    if len(chunk.segments) == 1 and not chunk.connectors and not original_non_connectors:
        return  # connector-only phrase kept verbatim
    assert rebuilt == original_non_connectors
