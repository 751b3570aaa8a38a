"""Concept typing: precedence sieve, per-connector heuristics, templates.

A connector-free phrase is typed by trying the five concept predicates in a
fixed precedence order (language, tool, method, resource, research problem);
solution is never assigned by the sieve, only by positional rules. Phrases
containing connectors are chunked first, and each connector selects a branch
that may only populate a fixed subset of the six concepts.
"""

from __future__ import annotations

from .concepts import ConceptType, TYPING_PRECEDENCE, TitleExpression
from .connectors import (
    ChunkedPhrase,
    connector_core,
    count_connectors,
    split_on_connectors,
)
from .lexicon import Lexicon
from .templates import TemplateClass, TemplateKind

_RESEARCH_PROBLEM = ConceptType.RESEARCH_PROBLEM
_SOLUTION = ConceptType.SOLUTION
_RESOURCE = ConceptType.RESOURCE
_LANGUAGE = ConceptType.LANGUAGE
_TOOL = ConceptType.TOOL
_METHOD = ConceptType.METHOD

_PREDICATES = {
    _LANGUAGE: Lexicon.is_language,
    _TOOL: Lexicon.is_tool,
    _METHOD: Lexicon.is_method,
    _RESOURCE: Lexicon.is_resource,
    _RESEARCH_PROBLEM: Lexicon.is_research_problem,
}

# Words ending in -ing that head noun phrases rather than naming an activity.
_NON_GERUNDS = frozenset({
    "string", "spring", "sterling", "nothing", "something", "anything",
    "everything", "morning", "evening", "thing",
})

# Per-connector concept orders for the segment left of the connector.  Only
# concepts from the branch signature appear; relative precedence follows the
# global sieve except where a positional reading demands otherwise.
_LEFT_SIEVE: dict[str, tuple[ConceptType, ...]] = {
    "for": (_LANGUAGE, _RESOURCE, _RESEARCH_PROBLEM),
    "of": (_LANGUAGE, _TOOL, _RESOURCE, _RESEARCH_PROBLEM),
    "using": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "with": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "by": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "on": (_LANGUAGE, _RESOURCE, _RESEARCH_PROBLEM),
    "in": (_LANGUAGE, _TOOL, _RESOURCE, _RESEARCH_PROBLEM),
    "through": (_RESOURCE, _RESEARCH_PROBLEM),
    "via": (_RESOURCE, _RESEARCH_PROBLEM),
    "to": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE, _RESEARCH_PROBLEM),
    "as": (_RESOURCE, _RESEARCH_PROBLEM),
}

# The right-hand segment names a purpose, means, or setting; the problem
# reading outranks resource after "for".
_RIGHT_SIEVE: dict[str, tuple[ConceptType, ...]] = {
    "for": (_LANGUAGE, _RESEARCH_PROBLEM, _RESOURCE),
    "of": (_LANGUAGE, _TOOL, _RESOURCE, _RESEARCH_PROBLEM),
    "using": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "with": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "by": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE),
    "on": (_LANGUAGE, _RESOURCE, _RESEARCH_PROBLEM),
    "in": (_LANGUAGE, _TOOL, _RESOURCE, _RESEARCH_PROBLEM),
    "through": (_METHOD, _RESOURCE, _RESEARCH_PROBLEM),
    "via": (_METHOD, _RESOURCE, _RESEARCH_PROBLEM),
    "to": (_LANGUAGE, _TOOL, _METHOD, _RESOURCE, _RESEARCH_PROBLEM),
    "as": (_METHOD, _RESOURCE, _RESEARCH_PROBLEM),
}

# Branches where an otherwise untypable segment still reads as the
# contribution being presented.
_LEFT_DEFAULT_SOLUTION = frozenset(
    {"for", "using", "with", "by", "on", "in", "through", "via", "to", "as"}
)
_RIGHT_DEFAULT_SOLUTION = frozenset({"for"})

# Concepts each branch may populate, keyed by connector.
BRANCH_SIGNATURES: dict[str, frozenset[ConceptType]] = {
    "for": frozenset({_SOLUTION, _RESEARCH_PROBLEM, _RESOURCE, _LANGUAGE}),
    "of": frozenset({_SOLUTION, _RESEARCH_PROBLEM, _RESOURCE, _LANGUAGE, _TOOL}),
    "using": frozenset({_SOLUTION, _RESOURCE, _LANGUAGE, _TOOL, _METHOD}),
    "with": frozenset({_SOLUTION, _RESOURCE, _LANGUAGE, _TOOL, _METHOD}),
    "by": frozenset({_SOLUTION, _RESOURCE, _LANGUAGE, _TOOL, _METHOD}),
    "on": frozenset({_SOLUTION, _RESEARCH_PROBLEM, _RESOURCE, _LANGUAGE}),
    "from": frozenset({_SOLUTION, _RESOURCE}),
    "in": frozenset({_RESOURCE, _RESEARCH_PROBLEM, _SOLUTION, _LANGUAGE, _TOOL}),
    "through": frozenset({_SOLUTION, _RESEARCH_PROBLEM, _METHOD, _RESOURCE}),
    "via": frozenset({_SOLUTION, _RESEARCH_PROBLEM, _METHOD, _RESOURCE}),
    "to": frozenset(
        {_RESOURCE, _RESEARCH_PROBLEM, _SOLUTION, _LANGUAGE, _TOOL, _METHOD}
    ),
    "as": frozenset({_RESOURCE, _RESEARCH_PROBLEM, _SOLUTION, _METHOD}),
}


def gerund_initial(phrase: str) -> bool:
    """True when the phrase opens with an activity word ("Building ...")."""
    tokens = phrase.split()
    if not tokens:
        return False
    head = tokens[0].strip(".,;:!?()[]\"'").lower()
    return (
        len(head) > 4 and head.endswith("ing") and head not in _NON_GERUNDS
    )


def _sieve(
    phrase: str, lexicon: Lexicon, order: tuple[ConceptType, ...]
) -> ConceptType | None:
    for concept in order:
        if _PREDICATES[concept](lexicon, phrase):
            return concept
    return None


def five_way_concept_typing(
    phrase: str,
    lexicon: Lexicon,
    *,
    fallthrough_research_problem: bool = False,
) -> TitleExpression:
    """Type a connector-free phrase by the five-predicate precedence sieve.

    A phrase matching none of the predicates leaves every list empty unless
    ``fallthrough_research_problem`` is set, in which case it is recorded as
    a research problem.
    """
    if count_connectors(phrase) != 0:
        raise ValueError(
            f"five-way typing requires a connector-free phrase: {phrase!r}"
        )
    expr = TitleExpression()
    phrase = phrase.strip()
    if not phrase:
        return expr
    concept = _sieve(phrase, lexicon, TYPING_PRECEDENCE)
    if concept is None and fallthrough_research_problem:
        concept = _RESEARCH_PROBLEM
    if concept is not None:
        expr.assign(concept, phrase)
    return expr


def _type_left(phrase: str, lexicon: Lexicon, connector: str) -> ConceptType | None:
    if connector == "from":
        return _SOLUTION
    concept = _sieve(phrase, lexicon, _LEFT_SIEVE[connector])
    if concept is not None:
        return concept
    if gerund_initial(phrase):
        return _SOLUTION
    return _SOLUTION if connector in _LEFT_DEFAULT_SOLUTION else None


def _type_right(phrase: str, lexicon: Lexicon, connector: str) -> ConceptType | None:
    if connector == "from":
        return _RESOURCE
    # The activity reading wins on the right before any suffix family does,
    # so "for Building WordNets" stays a solution.
    if gerund_initial(phrase):
        return _SOLUTION
    concept = _sieve(phrase, lexicon, _RIGHT_SIEVE[connector])
    if concept is not None:
        return concept
    return _SOLUTION if connector in _RIGHT_DEFAULT_SOLUTION else None


def one_connector_heuristics(phrase: str, lexicon: Lexicon) -> TitleExpression:
    """Type a phrase containing exactly one connector via its branch rules."""
    if count_connectors(phrase) != 1:
        raise ValueError(
            f"one-connector typing requires exactly one connector: {phrase!r}"
        )
    chunk = split_on_connectors(phrase)
    expr = TitleExpression()
    if len(chunk.segments) == 2:
        connector = chunk.connectors[0]
        left = _type_left(chunk.segments[0], lexicon, connector)
        if left is not None:
            expr.assign(left, chunk.segments[0])
        right = _type_right(chunk.segments[1], lexicon, connector)
        if right is not None:
            expr.assign(right, chunk.segments[1])
    elif len(chunk.segments) == 1 and chunk.dropped:
        # Degenerate split: the connector had no phrase on one side.
        connector = chunk.dropped[0]
        segment = chunk.segments[0]
        leading = connector_core(phrase.split()[0]) is not None
        concept = (
            _type_right(segment, lexicon, connector)
            if leading
            else _type_left(segment, lexicon, connector)
        )
        if concept is not None:
            expr.assign(concept, segment)
    return expr


def multi_connector_typing(chunk: ChunkedPhrase, lexicon: Lexicon) -> TitleExpression:
    """Type a chunk with two or more connectors.

    Segments are resolved right to left: each is tried against the global
    sieve, with the activity reading as a fallback; segments that match
    nothing stay unassigned.
    """
    if len(chunk.connectors) + len(chunk.dropped) < 2:
        raise ValueError("multi-connector typing requires at least two connectors")
    expr = TitleExpression()
    for segment in reversed(chunk.segments):
        concept = _sieve(segment, lexicon, TYPING_PRECEDENCE)
        if concept is None and gerund_initial(segment):
            concept = _SOLUTION
        if concept is not None:
            expr.assign(concept, segment)
    return expr


def _left_fallback(segment: str, connector: str) -> ConceptType | None:
    if connector == "from":
        return _SOLUTION
    if gerund_initial(segment):
        return _SOLUTION
    return _SOLUTION if connector in _LEFT_DEFAULT_SOLUTION else None


def _right_fallback(segment: str, connector: str) -> ConceptType | None:
    if connector == "from":
        return _RESOURCE
    if gerund_initial(segment):
        return _SOLUTION
    return _SOLUTION if connector in _RIGHT_DEFAULT_SOLUTION else None


def _type_part(
    part: str,
    lexicon: Lexicon,
    expr: TitleExpression,
    *,
    pre_colon: bool = False,
) -> None:
    """Type one template part (a colon side, or the text before an anchor).

    Each connector-free segment goes through the global sieve; segments the
    sieve cannot type fall back to the positional reading their neighboring
    connector suggests. Competition task labels before a colon are research
    problems outright.
    """
    part = part.strip()
    if not part:
        return
    if pre_colon and lexicon.matches_shared_task(part):
        expr.assign(_RESEARCH_PROBLEM, part)
        return
    chunk = split_on_connectors(part)
    n = len(chunk.segments)
    if n == 1:
        segment = chunk.segments[0]
        concept = _sieve(segment, lexicon, TYPING_PRECEDENCE)
        if concept is None and gerund_initial(segment):
            concept = _SOLUTION
        if concept is not None:
            expr.assign(concept, segment)
    elif n == 2 and len(chunk.connectors) == 1:
        connector = chunk.connectors[0]
        for index, segment in enumerate(chunk.segments):
            concept = _sieve(segment, lexicon, TYPING_PRECEDENCE)
            if concept is None:
                fallback = _left_fallback if index == 0 else _right_fallback
                concept = fallback(segment, connector)
            if concept is not None:
                expr.assign(concept, segment)
    elif n >= 2:
        expr.merge(multi_connector_typing(chunk, lexicon))


def _right_chain(tokens: list[str], lexicon: Lexicon, expr: TitleExpression) -> None:
    """Type ``connector segment`` runs following an already-consumed head."""
    connector: str | None = None
    buffer: list[str] = []

    def flush() -> None:
        if connector is None or not buffer:
            return
        segment = " ".join(buffer)
        concept = _type_right(segment, lexicon, connector)
        if concept is not None:
            expr.assign(concept, segment)

    for token in tokens:
        core = connector_core(token)
        if core is not None:
            flush()
            connector, buffer = core, []
        else:
            buffer.append(token)
    flush()


def _split_head(tokens: list[str], *, keep_of: bool) -> int | None:
    """Index of the first connector token that ends the head segment.

    With ``keep_of`` the connector "of" stays inside the head, keeping noun
    phrases like "A Wizard of Oz Environment" in one piece.
    """
    for index, token in enumerate(tokens):
        core = connector_core(token)
        if core is None:
            continue
        if keep_of and core == "of":
            continue
        return index
    return None


def _dispatch(text: str, lexicon: Lexicon) -> TitleExpression:
    """Connector-count dispatch used by the default template."""
    n = count_connectors(text)
    if n == 0:
        return five_way_concept_typing(text, lexicon)
    if n == 1:
        return one_connector_heuristics(text, lexicon)
    return multi_connector_typing(split_on_connectors(text), lexicon)


def _strip_leading_connector(text: str) -> str:
    tokens = text.split()
    if tokens and connector_core(tokens[0]) is not None:
        tokens = tokens[1:]
    return " ".join(tokens)


def type_template(title, template: TemplateClass, lexicon: Lexicon) -> TitleExpression:
    """Type a classified title according to its template."""
    text = getattr(title, "text", title)
    kind = template.kind
    expr = TitleExpression()

    if kind is TemplateKind.SPECIAL_WORD_COLON:
        colon = template.split_points[0]
        expr.assign(_SOLUTION, text[:colon].strip())
        post = text[colon + 1:].strip()
        if post:
            tokens = post.split()
            cut = _split_head(tokens, keep_of=True)
            head = tokens if cut is None else tokens[:cut]
            if head:
                # The elaboration restates the named system, so it is a
                # solution regardless of its head word.
                expr.assign(_SOLUTION, " ".join(head))
            if cut is not None:
                _right_chain(tokens[cut:], lexicon, expr)
        return expr

    if kind is TemplateKind.USING_PREFIX:
        remainder = text[template.split_points[0]:].strip()
        tokens = remainder.split()
        cut = _split_head(tokens, keep_of=False)
        head = tokens if cut is None else tokens[:cut]
        if head:
            segment = " ".join(head)
            concept = _sieve(segment, lexicon, (_RESOURCE, _TOOL, _METHOD))
            if concept is not None:
                expr.assign(concept, segment)
        if cut is not None:
            _right_chain(tokens[cut:], lexicon, expr)
        return expr

    if kind in (TemplateKind.COLON_CASE_STUDY, TemplateKind.CASE_STUDY_CONTAINED):
        if kind is TemplateKind.COLON_CASE_STUDY:
            colon, _, anchor_end = template.split_points
            before = text[:colon]
        else:
            anchor_start, anchor_end = template.split_points
            before = text[:anchor_start]
        _type_part(
            before.strip(" -,;:"),
            lexicon,
            expr,
            pre_colon=kind is TemplateKind.COLON_CASE_STUDY,
        )
        after = _strip_leading_connector(text[anchor_end:].strip(" -,;."))
        if after:
            concept = _LANGUAGE if lexicon.is_language(after) else _RESEARCH_PROBLEM
            expr.assign(concept, after)
        return expr

    if kind is TemplateKind.COLON_GENERIC:
        colon = template.split_points[0]
        _type_part(text[:colon], lexicon, expr, pre_colon=True)
        post = text[colon + 1:].strip()
        if post and not lexicon.non_content_phrase(post):
            _type_part(post, lexicon, expr)
        return expr

    if kind is TemplateKind.APPLIED_TO:
        start, end = template.split_points
        _type_part(text[:start], lexicon, expr)
        right = text[end:].strip()
        if right:
            if lexicon.is_research_problem(right):
                expr.assign(_RESEARCH_PROBLEM, right)
            elif count_connectors(right) > 0:
                _type_part(right, lexicon, expr)
            else:
                concept = _sieve(right, lexicon, TYPING_PRECEDENCE)
                if concept is not None:
                    expr.assign(concept, right)
        return expr

    if kind is TemplateKind.NON_CONTENT_PREFIX:
        remainder = _strip_leading_connector(text[template.split_points[0]:].strip())
        if remainder:
            expr.merge(_dispatch(remainder, lexicon))
        return expr

    if kind is TemplateKind.DESCRIPTION_OF:
        remainder = text[template.split_points[0]:].strip()
        tokens = remainder.split()
        cut = _split_head(tokens, keep_of=False)
        head = tokens if cut is None else tokens[:cut]
        if head:
            segment = " ".join(head)
            concept = _TOOL if lexicon.is_tool(segment) else _SOLUTION
            expr.assign(concept, segment)
        if cut is not None:
            _right_chain(tokens[cut:], lexicon, expr)
        return expr

    expr.merge(_dispatch(text, lexicon))
    return expr
