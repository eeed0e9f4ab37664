"""Expression parsing and concept selection.

Splits a raw expression into noun/verb/adjective tokens that the user can
pick concepts from. Tagging goes through a pluggable provider; the bundled
rule+lexicon tagger handles short English expressions without any model
download. Surface forms are kept as typed (no lemmatization); a lowercased
normal form is used for dedup and cache keys. Hyphenated compounds stay
single tokens. Auxiliaries, copulas and other closed-class words carry no
concept and are excluded.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Protocol

from .errors import EmptyExpression, IndexOutOfRange

NOUN = "noun"
VERB = "verb"
ADJECTIVE = "adjective"
POS_CLASSES = (NOUN, VERB, ADJECTIVE)

_WORD_RE = re.compile(r"[A-Za-z]+(?:[-'][A-Za-z]+)*")

_ADJ_SUFFIXES = ("al", "ful", "ous", "ive", "ible", "able", "less", "ic")


def normalize(text: str) -> str:
    """Lowercased normal form used for dedup and cache keys."""
    return " ".join(text.strip().lower().split())


@dataclass(frozen=True)
class ConceptToken:
    surface: str
    pos: str
    span: tuple[int, int]
    selected: bool = False

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "pos": self.pos,
            "span": list(self.span),
            "selected": self.selected,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ConceptToken":
        return cls(d["surface"], d["pos"], tuple(d["span"]), d.get("selected", False))


@dataclass
class Expression:
    raw: str
    tokens: list[ConceptToken] = field(default_factory=list)
    theme: str | None = None

    @property
    def selected_tokens(self) -> list[ConceptToken]:
        return [t for t in self.tokens if t.selected]

    @property
    def selected_concepts(self) -> list[str]:
        return [t.surface for t in self.selected_tokens]

    def to_dict(self) -> dict:
        return {
            "raw": self.raw,
            "tokens": [t.to_dict() for t in self.tokens],
            "theme": self.theme,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Expression":
        return cls(
            raw=d["raw"],
            tokens=[ConceptToken.from_dict(t) for t in d.get("tokens", [])],
            theme=d.get("theme"),
        )


class PosTagger(Protocol):
    def tag(self, text: str) -> list[tuple[str, str | None, tuple[int, int]]]:
        """Return (surface, pos-or-None, span) per word; None means excluded."""
        ...


def _load_lexicon() -> dict[str, frozenset[str]]:
    raw = json.loads(
        resources.files("blendstudio.data").joinpath("pos_lexicon.json").read_text("utf-8")
    )
    return {k: frozenset(v) for k, v in raw.items()}


class RuleLexiconTagger:
    """Deterministic fallback tagger for short English expressions.

    Resolution order: closed-class stoplist, lexicon lookup, then suffix
    heuristics with light left-context disambiguation (enough for the
    metaphorical one-liners this tool is fed; not a general tagger).
    """

    def __init__(self) -> None:
        lex = _load_lexicon()
        self._function = lex["function"]
        self._nouns = lex["noun"]
        self._verbs = lex["verb"]
        self._adjectives = lex["adjective"]
        self._skip = lex["skip"]

    def tag(self, text: str) -> list[tuple[str, str | None, tuple[int, int]]]:
        out: list[tuple[str, str | None, tuple[int, int]]] = []
        prev_word: str | None = None
        prev_pos: str | None = None
        for m in _WORD_RE.finditer(text):
            surface = m.group(0)
            pos = self._classify(surface.lower(), prev_word, prev_pos)
            out.append((surface, pos, (m.start(), m.end())))
            prev_word = surface.lower()
            prev_pos = pos
        return out

    def _classify(self, word: str, prev_word: str | None, prev_pos: str | None) -> str | None:
        if word in self._function:
            return None
        if word in self._skip:
            return None
        # adjective has priority over noun for words listed in both ("light")
        if word in self._adjectives and word not in self._nouns:
            return ADJECTIVE
        if word in self._nouns:
            return NOUN
        if word in self._verbs:
            return VERB
        if word in self._adjectives:
            return ADJECTIVE
        if word.endswith("ly") and len(word) > 4:
            return None  # adverb
        if word.endswith("ing") and len(word) > 5:
            # "global warming": gerund after an adjective/determiner reads as a noun
            if prev_pos == ADJECTIVE or prev_word in ("the", "a", "an") or prev_word is None:
                return NOUN
            return VERB
        if word.endswith("s") and not word.endswith("ss") and len(word) > 3:
            bases = [word[:-1]] + ([word[:-2]] if word.endswith("es") else [])
            if any(b in self._verbs for b in bases) and prev_pos == NOUN:
                return VERB  # "knowledge guides", "exercise fuels"
            return NOUN  # plural
        if word.endswith(_ADJ_SUFFIXES) and len(word) > 4:
            return ADJECTIVE
        return NOUN

    def __repr__(self) -> str:  # pragma: no cover
        return "RuleLexiconTagger()"


_default_tagger: RuleLexiconTagger | None = None


def default_tagger() -> RuleLexiconTagger:
    global _default_tagger
    if _default_tagger is None:
        _default_tagger = RuleLexiconTagger()
    return _default_tagger


def parse_expression(text: str, tagger: PosTagger | None = None) -> Expression:
    """Tokenize ``text`` into noun/verb/adjective concept tokens.

    Tokens appear in textual order, none selected. Other word classes are
    dropped entirely.
    """
    if not text or not text.strip():
        raise EmptyExpression("expression is empty")
    tagger = tagger or default_tagger()
    tokens: list[ConceptToken] = []
    seen: set[tuple[str, tuple[int, int]]] = set()
    for surface, pos, span in tagger.tag(text):
        if pos not in POS_CLASSES:
            continue
        key = (surface, span)
        if key in seen:
            continue
        seen.add(key)
        tokens.append(ConceptToken(surface=surface, pos=pos, span=span))
    return Expression(raw=text, tokens=tokens)


def select_concepts(expr: Expression, picks: list[int]) -> Expression:
    """Return a copy of ``expr`` with exactly ``picks`` selected."""
    for i in picks:
        if not (0 <= i < len(expr.tokens)):
            raise IndexOutOfRange(f"token index {i} out of range (have {len(expr.tokens)})")
    wanted = set(picks)
    tokens = [replace(t, selected=(i in wanted)) for i, t in enumerate(expr.tokens)]
    return Expression(raw=expr.raw, tokens=tokens, theme=expr.theme)
