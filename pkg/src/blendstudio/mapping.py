"""Concept -> object -> attribute inference.

Wraps the oracle templates with knowledge-base context injection and a
belt-and-suspenders validation layer: the templates already forbid
activities, categories and abstract concepts, but a local heuristic check
keeps replayed fixtures honest and triggers one re-ask when violated.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field, replace

from .errors import (
    AttributeValidationFailed,
    CandidateValidationFailed,
    InvalidOracleResponse,
    PreconditionConflict,
    SchemaMismatch,
)
from .expression import Expression, normalize
from .knowledge import KnowledgeClient, RelatedTerm
from .oracle import Oracle
from .artifacts import ImageArtifact

log = logging.getLogger(__name__)

RELATED_CONCEPTS_CAP = 2000
ATTRIBUTE_CONTEXT_LIMIT = 10
PREVIEW_PROMPT = "A photo of a single {object} centered on a plain, solid-color background, no text."

GENERIC_ATTRIBUTES = {"size", "color", "shape"}

# single-word -ing nouns that are physical things, not activities
_ING_OBJECT_WHITELIST = {
    "ring", "spring", "string", "wing", "king", "swing", "painting",
    "building", "ceiling", "earring", "railing", "awning", "lightning",
}

_CATEGORY_WORDS = {
    "fruit", "fruits", "vegetable", "vegetables", "animal", "animals",
    "food", "foods", "plant", "plants", "tool", "tools", "object",
    "objects", "item", "items", "thing", "things", "furniture",
    "equipment", "machinery", "clothing", "vehicle", "vehicles",
}

_ABSTRACT_WORDS = {
    "exercise", "beauty", "love", "happiness", "joy", "freedom",
    "knowledge", "wisdom", "hope", "health", "time", "idea", "ideas",
    "concept", "concepts", "emotion", "emotions", "feeling", "feelings",
    "thought", "thoughts", "courage", "success", "failure", "peace",
    "truth", "energy", "strength",
}

_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class Theme:
    sentence: str

    def to_dict(self) -> dict:
        return {"sentence": self.sentence}

    @classmethod
    def from_dict(cls, d: dict) -> "Theme":
        return cls(d["sentence"])


@dataclass
class ObjectCandidate:
    name: str
    concept: str
    rationale: str
    attributes: list[str] = field(default_factory=list)
    iteration: int = 1
    preview_id: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "concept": self.concept,
            "rationale": self.rationale,
            "attributes": list(self.attributes),
            "iteration": self.iteration,
            "preview_id": self.preview_id,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ObjectCandidate":
        return cls(
            name=d["name"],
            concept=d["concept"],
            rationale=d["rationale"],
            attributes=list(d.get("attributes", [])),
            iteration=d.get("iteration", 1),
            preview_id=d.get("preview_id"),
        )


def candidate_rejection(name: str, concept: str, exclusions: set[str] | None = None) -> str | None:
    """Reason the name fails the banned-class rules, or None if it passes."""
    key = normalize(name)
    if not key:
        return "empty name"
    if key == normalize(concept):
        return "identical to the concept"
    words = key.split()
    if len(words) == 1 and key.endswith("ing") and len(key) > 4 and key not in _ING_OBJECT_WHITELIST:
        return "looks like an activity (gerund form)"
    if key in _CATEGORY_WORDS:
        return "a category, not a specific object"
    if key in _ABSTRACT_WORDS:
        return "an abstract concept, not a physical object"
    if exclusions and key in exclusions:
        return "already suggested for this concept"
    return None


def attribute_rejection(attributes: list[str]) -> str | None:
    cleaned = [normalize(a) for a in attributes]
    if any(not a for a in cleaned):
        return "empty attribute"
    if len(set(cleaned)) != len(cleaned):
        return "duplicate attributes"
    generic = sorted(set(cleaned) & GENERIC_ATTRIBUTES)
    if generic:
        return f"generic terms not allowed: {', '.join(generic)}"
    return None


def first_sentence(text: str) -> str:
    parts = [p.strip() for p in _SENTENCE_SPLIT.split(text.strip()) if p.strip()]
    sentence = parts[0] if parts else text.strip()
    if not sentence.endswith((".", "!", "?")):
        sentence += "."
    return sentence


def _sentence_count(text: str) -> int:
    return len([p for p in _SENTENCE_SPLIT.split(text.strip()) if p.strip()])


def serialize_terms(terms: list[RelatedTerm], cap: int = RELATED_CONCEPTS_CAP) -> str:
    out: list[str] = []
    total = 0
    for t in terms:
        extra = len(t.term) + (2 if out else 0)
        if total + extra > cap:
            break
        out.append(t.term)
        total += extra
    return ", ".join(out)


def exclusion_note(excluded: set[str]) -> str:
    return f"Do not suggest any of these objects again: {', '.join(sorted(excluded))}."


def rejection_note(rejected: list[tuple[str, str]], base: str | None = None) -> str:
    listed = "; ".join(f'"{name}" ({why})' for name, why in rejected)
    return (
        f"{base + ' ' if base else ''}These answers were invalid: {listed}. "
        "Replace them with specific physical objects."
    )


class Mapper:
    def __init__(self, oracle: Oracle, knowledge: KnowledgeClient, *, related_limit: int = 50):
        self.oracle = oracle
        self.knowledge = knowledge
        self.related_limit = related_limit

    # -- theme ---------------------------------------------------------------

    def infer_theme(self, expr: Expression) -> Theme:
        """One-sentence hidden meaning; reused verbatim downstream."""
        if not expr.raw.strip():
            raise PreconditionConflict("expression is empty")

        def single_sentence(payload: dict) -> None:
            if _sentence_count(payload["result"]) != 1:
                raise SchemaMismatch("theme must be a single sentence")

        try:
            resp = self.oracle.complete("theme", {"Input": expr.raw}, validator=single_sentence)
            sentence = first_sentence(resp.parsed["result"])
        except InvalidOracleResponse as exc:
            # persistent multi-sentence answers: keep the first sentence
            from .oracle import first_json_object

            try:
                payload = first_json_object(exc.last_text)
                result = payload.get("result") if isinstance(payload, dict) else None
            except Exception:
                result = None
            if not isinstance(result, str) or not result.strip():
                raise
            log.warning("theme was not a single sentence after retries; keeping the first")
            sentence = first_sentence(result)
        return Theme(sentence=sentence)

    # -- objects ---------------------------------------------------------------

    def suggest_objects(
        self,
        concept: str,
        expr: Expression,
        iteration: int = 1,
        exclusions: list[str] | None = None,
    ) -> list[ObjectCandidate]:
        """Exactly five fresh candidates for the concept (attributes empty)."""
        if normalize(concept) not in {normalize(t.surface) for t in expr.selected_tokens}:
            raise PreconditionConflict(f"concept {concept!r} is not a selected token")
        excl = {normalize(x) for x in (exclusions or [])}
        related = self.knowledge.related_objects(concept, self.related_limit)
        bindings = {"INPUT": concept, "Related_Concepts": serialize_terms(related)}
        extra = exclusion_note(excl) if excl else None

        rows = self.oracle.complete("objects", bindings, extra_instructions=extra).parsed["result"]
        valid, rejected = self._split_valid(rows, concept, excl)
        if rejected:
            retry_extra = rejection_note(rejected, extra)
            retry_rows = self.oracle.complete(
                "objects", bindings, extra_instructions=retry_extra
            ).parsed["result"]
            seen = {normalize(n) for n, _ in valid}
            retry_valid, _ = self._split_valid(retry_rows, concept, excl | seen)
            valid.extend(retry_valid)
        if len(valid) < 5:
            partial = [
                ObjectCandidate(name=n, concept=concept, rationale=r, iteration=iteration)
                for n, r in valid
            ]
            raise CandidateValidationFailed(
                f"only {len(valid)} valid candidates for {concept!r} after retry",
                partial=partial,
            )
        return [
            ObjectCandidate(name=n, concept=concept, rationale=r, iteration=iteration)
            for n, r in valid[:5]
        ]

    def _split_valid(
        self, rows: list, concept: str, exclusions: set[str]
    ) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
        valid: list[tuple[str, str]] = []
        rejected: list[tuple[str, str]] = []
        seen: set[str] = set()
        for name, rationale in rows:
            key = normalize(name)
            why = candidate_rejection(name, concept, exclusions)
            if why is None and key in seen:
                why = "duplicate within this batch"
            if why is None:
                valid.append((name, rationale))
                seen.add(key)
            else:
                rejected.append((name, why))
        return valid, rejected

    # -- attributes --------------------------------------------------------------

    def suggest_attributes(self, candidates: list[ObjectCandidate]) -> list[ObjectCandidate]:
        """Fill each candidate with exactly five visible physical attributes."""
        if not candidates:
            raise PreconditionConflict("no candidates to annotate")
        if any(not c.name.strip() for c in candidates):
            raise PreconditionConflict("candidate without a name")
        names = [c.name for c in candidates]
        rows = self._fetch_attribute_rows(names)

        filled: dict[str, list[str]] = {}
        offenders: list[tuple[str, str]] = []
        for row in rows:
            name, attrs = row[0], row[1:]
            why = attribute_rejection(attrs)
            if why is None:
                filled[normalize(name)] = list(attrs)
            else:
                offenders.append((name, why))
        if offenders:
            note = "; ".join(f'"{n}" ({why})' for n, why in offenders)
            retry_rows = self._fetch_attribute_rows(
                [n for n, _ in offenders],
                extra=f"The previous attributes were invalid: {note}. "
                "Answer with five concrete visible attributes per object.",
            )
            for row in retry_rows:
                name, attrs = row[0], row[1:]
                if attribute_rejection(attrs) is None:
                    filled[normalize(name)] = list(attrs)
        missing = [c.name for c in candidates if normalize(c.name) not in filled]
        if missing:
            raise AttributeValidationFailed(
                f"no valid attribute set for: {', '.join(missing)}"
            )
        return [replace(c, attributes=filled[normalize(c.name)]) for c in candidates]

    def _fetch_attribute_rows(self, names: list[str], extra: str | None = None) -> list[list[str]]:
        context_parts = []
        budget = RELATED_CONCEPTS_CAP
        for name in names:
            terms = self.knowledge.related_attributes(name, ATTRIBUTE_CONTEXT_LIMIT)
            part = f"{name}: {serialize_terms(terms, cap=200)}" if terms else name
            if budget - len(part) < 0:
                break
            context_parts.append(part)
            budget -= len(part) + 2
        bindings = {"INPUT": ", ".join(names), "Related_Concepts": "; ".join(context_parts)}
        wanted = {normalize(n) for n in names}

        def rows_cover_names(payload: dict) -> None:
            got = [normalize(row[0]) for row in payload["result"]]
            if sorted(got) != sorted(wanted):
                raise SchemaMismatch(
                    f"attribute rows must cover exactly the requested objects; got {got}"
                )

        resp = self.oracle.complete(
            "attributes", bindings, extra_instructions=extra, validator=rows_cover_names
        )
        return resp.parsed["result"]

    # -- previews --------------------------------------------------------------

    def preview_object(self, candidate: ObjectCandidate) -> ImageArtifact:
        """Single-object preview image; same name yields the same artifact."""
        if not candidate.name.strip():
            raise PreconditionConflict("candidate has no name")
        prompt = PREVIEW_PROMPT.format(object=candidate.name)
        return self.oracle.generate_image(prompt)

    # -- replacement support ------------------------------------------------------

    def describe_object(self, concept: str, name: str) -> str:
        """Rationale for a user-chosen object, via the objects template."""
        related = self.knowledge.related_objects(concept, self.related_limit)
        bindings = {"INPUT": concept, "Related_Concepts": serialize_terms(related)}
        extra = f'One of the five physical objects must be exactly "{name}".'
        rows = self.oracle.complete("objects", bindings, extra_instructions=extra).parsed["result"]
        for row_name, rationale in rows:
            if normalize(row_name) == normalize(name):
                return rationale
        log.warning("oracle did not echo %r; using a stock rationale", name)
        return f"Selected by the designer as a stand-in for {concept}."
