"""Concept typing: the precedence sieve, branch heuristics, and templates."""

import pytest

from title_miner.concepts import ConceptType, TYPING_PRECEDENCE
from title_miner.connectors import CONNECTORS, split_on_connectors
from title_miner.lexicon import load_default_lexicon
from title_miner.sieves import (
    BRANCH_SIGNATURES,
    five_way_concept_typing,
    gerund_initial,
    multi_connector_typing,
    one_connector_heuristics,
    type_template,
)
from title_miner.templates import classify

LEX = load_default_lexicon()

RP = ConceptType.RESEARCH_PROBLEM
SOL = ConceptType.SOLUTION
RES = ConceptType.RESOURCE
LANG = ConceptType.LANGUAGE
TOOL = ConceptType.TOOL
METH = ConceptType.METHOD


def parse(title):
    return type_template(title, classify(title, LEX), LEX)


def nonempty(expr):
    return {c: v for c, v in expr.to_dict().items() if v}


# -- gerund detection ---------------------------------------------------------


@pytest.mark.parametrize("phrase", [
    "Building WordNets",
    "Adding Pronunciation Information",
    "Learning to Parse",
    "Extracting Entities",
])
def test_gerund_initial_positive(phrase):
    assert gerund_initial(phrase)


@pytest.mark.parametrize("phrase", [
    "String Matching",       # noun, excluded
    "Morning Sessions",      # noun, excluded
    "King Lear",             # too short
    "Sing Along",            # too short
    "WordNets",              # no -ing
    "",
])
def test_gerund_initial_negative(phrase):
    assert not gerund_initial(phrase)


# -- five-way sieve -----------------------------------------------------------


def test_sieve_precedence_order_constant():
    assert TYPING_PRECEDENCE == (LANG, TOOL, METH, RES, RP)


@pytest.mark.parametrize("phrase,concept", [
    ("Ancient Accadian", LANG),
    ("A Grammar Testing System", TOOL),
    ("Fine-Grained Sentiment Analysis", METH),
    ("Financial Microblogs and News", RES),
    ("Word Sense Discrimination", RP),
])
def test_sieve_assigns_single_concept(phrase, concept):
    expr = five_way_concept_typing(phrase, LEX)
    assert expr.get(concept) == [phrase]
    others = [c for c in ConceptType if c is not concept]
    assert all(not expr.get(c) for c in others)


def test_sieve_first_match_wins_on_overlap():
    # "analysis" sits in both the method and research-problem families
    expr = five_way_concept_typing("Morphological Analysis", LEX)
    assert expr.get(METH) == ["Morphological Analysis"]
    assert not expr.get(RP)
    # "wordnets" sits in both the tool and resource families
    expr = five_way_concept_typing("Wordnets", LEX)
    assert expr.get(TOOL) == ["Wordnets"]
    assert not expr.get(RES)


def test_sieve_never_assigns_solution():
    for phrase in ["Ancient Accadian", "Parsing", "Novel Contribution"]:
        assert not five_way_concept_typing(phrase, LEX).get(SOL)


def test_sieve_unmatched_phrase_stays_untyped():
    expr = five_way_concept_typing("Zyzzyva Floop", LEX)
    assert expr.is_empty()


def test_sieve_fallthrough_flag_targets_research_problem():
    expr = five_way_concept_typing(
        "Zyzzyva Floop", LEX, fallthrough_research_problem=True
    )
    assert expr.get(RP) == ["Zyzzyva Floop"]


def test_sieve_rejects_phrases_with_connectors():
    with pytest.raises(ValueError):
        five_way_concept_typing("Parsing of Titles", LEX)


def test_sieve_empty_phrase_gives_empty_expression():
    assert five_way_concept_typing("   ", LEX).is_empty()


# -- one-connector branches ---------------------------------------------------


def test_one_connector_requires_exactly_one():
    with pytest.raises(ValueError):
        one_connector_heuristics("No Connector Here", LEX)
    with pytest.raises(ValueError):
        one_connector_heuristics("A of B of C", LEX)


def test_to_branch():
    expr = one_connector_heuristics(
        "Adding Pronunciation Information to Wordnets", LEX
    )
    assert nonempty(expr) == {
        "solution": ["Adding Pronunciation Information"],
        "tool": ["Wordnets"],
    }


def test_for_branch_prefers_problem_over_resource_on_right():
    expr = one_connector_heuristics(
        "A Parallel Corpus for Machine Translation", LEX
    )
    assert expr.get(RES) == ["A Parallel Corpus"]
    assert expr.get(RP) == ["Machine Translation"]


def test_from_branch_is_unconditional():
    expr = one_connector_heuristics("Term Extraction from Zyzzyva", LEX)
    assert nonempty(expr) == {
        "solution": ["Term Extraction"],
        "resource": ["Zyzzyva"],
    }


def test_gerund_beats_suffix_family_on_the_right():
    expr = one_connector_heuristics("WordNet for Building WordNets", LEX)
    assert expr.get(SOL) == ["Building WordNets"]
    assert expr.get(RES) == ["WordNet"]


def test_degenerate_leading_connector_types_right_segment():
    expr = one_connector_heuristics("for Machine Translation", LEX)
    assert expr.get(RP) == ["Machine Translation"]


def test_degenerate_trailing_connector_types_left_segment():
    expr = one_connector_heuristics("Sentiment Analysis of", LEX)
    assert nonempty(expr) == {"research_problem": ["Sentiment Analysis"]}


@pytest.mark.parametrize("connector", sorted(BRANCH_SIGNATURES))
def test_branch_signature_closure_spot_checks(connector):
    probes = [
        f"Ancient Accadian {connector} Ancient Accadian",
        f"Treebanks {connector} Wordnets",
        f"Sentiment Analysis {connector} Machine Translation",
        f"Building Tools {connector} Parsing Systems",
        f"Zyzzyva {connector} Floop",
    ]
    allowed = BRANCH_SIGNATURES[connector]
    for phrase in probes:
        expr = one_connector_heuristics(phrase, LEX)
        populated = {c for c, _ in expr.items()}
        assert populated <= allowed, (phrase, populated)


# -- multi-connector folding --------------------------------------------------


def test_multi_connector_requires_two():
    with pytest.raises(ValueError):
        multi_connector_typing(split_on_connectors("A of B"), LEX)


def test_three_connector_fold_picks_up_language():
    chunk = split_on_connectors("A of B for C in Tigrigna")
    expr = multi_connector_typing(chunk, LEX)
    assert expr.get(LANG) == ["Tigrigna"]


def test_multi_connector_untyped_segments_stay_untyped():
    chunk = split_on_connectors("Zyzzyva of Floop for Blarg")
    expr = multi_connector_typing(chunk, LEX)
    assert expr.is_empty()


def test_multi_connector_gerund_fallback():
    chunk = split_on_connectors("Improving Zyzzyva for Floop via Blarg")
    expr = multi_connector_typing(chunk, LEX)
    assert expr.get(SOL) == ["Improving Zyzzyva"]


# -- template typing ----------------------------------------------------------


def test_special_word_colon_names_solution_twice():
    expr = parse("SNOPAR: A Grammar Testing System")
    assert nonempty(expr) == {
        "solution": ["SNOPAR", "A Grammar Testing System"]
    }


def test_special_word_colon_keeps_of_phrases_whole():
    expr = parse("MDWOZ: A Wizard of Oz Environment for Dialog Systems Development")
    assert nonempty(expr) == {
        "research_problem": ["Dialog Systems Development"],
        "solution": ["MDWOZ", "A Wizard of Oz Environment"],
    }


def test_special_word_colon_tail_connectors():
    expr = parse("GRAFON: A Grapheme-to-Phoneme Conversion System for Dutch")
    assert nonempty(expr) == {
        "solution": ["GRAFON", "A Grapheme-to-Phoneme Conversion System"],
        "language": ["Dutch"],
    }


def test_using_prefix_head_prefers_resource():
    expr = parse("Using WordNet for Building WordNets")
    assert nonempty(expr) == {
        "solution": ["Building WordNets"],
        "resource": ["WordNet"],
    }


def test_using_prefix_untypable_head_stays_untyped():
    expr = parse("Using Zyzzyva for Machine Translation")
    assert nonempty(expr) == {"research_problem": ["Machine Translation"]}


def test_case_study_after_part_language():
    expr = parse(
        "Finite-state Description of Semitic Morphology: A Case Study of Ancient Accadian"
    )
    assert expr.get(LANG) == ["Ancient Accadian"]


def test_case_study_after_part_research_problem():
    expr = parse("A Case Study on Named Entity Recognition")
    assert expr.get(RP) == ["Named Entity Recognition"]
    assert not expr.get(LANG)


def test_colon_generic_discards_non_content_tail():
    expr = parse("Working on the Italian Machine Dictionary: A Semantic Approach")
    assert nonempty(expr) == {
        "solution": ["Working"],
        "resource": ["the Italian Machine Dictionary"],
    }
    assert not expr.contains("A Semantic Approach")


def test_colon_generic_shared_task_head():
    expr = parse(
        "SemEval-2017 Task 5: Fine-Grained Sentiment Analysis on Financial Microblogs and News"
    )
    assert nonempty(expr) == {
        "research_problem": ["SemEval-2017 Task 5"],
        "resource": ["Financial Microblogs and News"],
        "method": ["Fine-Grained Sentiment Analysis"],
    }


def test_colon_generic_tool_head_with_discarded_tail():
    expr = parse(
        "The Lincoln Continuous Speech Recognition System: Recent Developments and Results"
    )
    assert nonempty(expr) == {
        "tool": ["The Lincoln Continuous Speech Recognition System"]
    }


def test_applied_to_right_side():
    expr = parse("Weighted Automata Applied to Morphological Tagging")
    assert expr.get(RP) == ["Morphological Tagging"]


def test_non_content_prefix_is_stripped():
    expr = parse("An Overview of Statistical Parsing")
    assert not expr.contains("An Overview")
    assert expr.get(RP) == ["Statistical Parsing"]


def test_description_of_head_is_solution_or_tool():
    expr = parse("Description of the UPenn Parser")
    assert expr.get(TOOL) == ["the UPenn Parser"]
    expr = parse("Description of the Zyzzyva Entry")
    assert expr.get(SOL) == ["the Zyzzyva Entry"]


def test_default_template_dispatches_by_connector_count():
    assert nonempty(parse("Morphological Tagging")) == {
        "research_problem": ["Morphological Tagging"]
    }
    assert nonempty(parse("Adding Pronunciation Information to Wordnets")) == {
        "solution": ["Adding Pronunciation Information"],
        "tool": ["Wordnets"],
    }
    expr = parse("Evaluation of Parsers for German in Newspapers")
    assert expr.get(LANG) == ["German"]


def test_phrases_are_verbatim_substrings():
    titles = [
        "PHINC: A Parallel Hinglish Social Media Code-Mixed Corpus for Machine Translation",
        "Using Multiple Knowledge Sources for Word Sense Discrimination",
        "An Overview of Statistical Parsing",
        "A of B for C in Tigrigna",
    ]
    for title in titles:
        expr = parse(title)
        for _, phrase in expr.items():
            assert phrase in title, (title, phrase)


def test_no_phrase_lands_in_two_lists():
    expr = parse("Treebanks for Treebanks")
    seen = [phrase for _, phrase in expr.items()]
    assert len(seen) == len(set(seen))
