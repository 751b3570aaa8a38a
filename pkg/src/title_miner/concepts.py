"""Concept vocabulary shared by the typing rules and the reporting layer."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class ConceptType(Enum):
    RESEARCH_PROBLEM = "research_problem"
    SOLUTION = "solution"
    RESOURCE = "resource"
    LANGUAGE = "language"
    TOOL = "tool"
    METHOD = "method"


# Order used everywhere a record is serialized or rendered.
CONCEPT_ORDER: tuple[ConceptType, ...] = (
    ConceptType.RESEARCH_PROBLEM,
    ConceptType.SOLUTION,
    ConceptType.RESOURCE,
    ConceptType.LANGUAGE,
    ConceptType.TOOL,
    ConceptType.METHOD,
)

# Sieve precedence for connector-free phrases; solution is deliberately absent,
# it is only ever assigned by positional rules.
TYPING_PRECEDENCE: tuple[ConceptType, ...] = (
    ConceptType.LANGUAGE,
    ConceptType.TOOL,
    ConceptType.METHOD,
    ConceptType.RESOURCE,
    ConceptType.RESEARCH_PROBLEM,
)


@dataclass
class TitleExpression:
    """Typed phrases extracted from a single title, one list per concept."""

    research_problem: list[str] = field(default_factory=list)
    solution: list[str] = field(default_factory=list)
    resource: list[str] = field(default_factory=list)
    language: list[str] = field(default_factory=list)
    tool: list[str] = field(default_factory=list)
    method: list[str] = field(default_factory=list)

    def get(self, concept: ConceptType) -> list[str]:
        return getattr(self, concept.value)

    def assign(self, concept: ConceptType, phrase: str) -> bool:
        """Record ``phrase`` under ``concept`` unless it is already typed.

        Earlier assignments win; a phrase never appears in two lists.
        Returns True when the phrase was added.
        """
        phrase = phrase.strip()
        if not phrase or self.contains(phrase):
            return False
        self.get(concept).append(phrase)
        return True

    def contains(self, phrase: str) -> bool:
        return any(phrase in self.get(c) for c in CONCEPT_ORDER)

    def merge(self, other: "TitleExpression") -> None:
        for concept, phrase in other.items():
            self.assign(concept, phrase)

    def items(self) -> Iterator[tuple[ConceptType, str]]:
        for concept in CONCEPT_ORDER:
            for phrase in self.get(concept):
                yield concept, phrase

    def is_empty(self) -> bool:
        return not any(self.get(c) for c in CONCEPT_ORDER)

    def to_dict(self) -> dict[str, list[str]]:
        return {c.value: list(self.get(c)) for c in CONCEPT_ORDER}

    @classmethod
    def from_dict(cls, payload: dict) -> "TitleExpression":
        expr = cls()
        for concept in CONCEPT_ORDER:
            values = payload.get(concept.value, [])
            if not isinstance(values, list):
                raise ValueError(f"concept field {concept.value!r} must be a list")
            getattr(expr, concept.value).extend(str(v) for v in values)
        return expr
