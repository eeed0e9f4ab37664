"""Blending schemes and image-prompt composition.

The final prompt strings follow the four-module structure (objects,
attributes, scheme, considerations) and always end with the fixed
background/no-text constraint sentence. Multi-concept plans pick a primary
object pair by similarity (sentiment breaks ties) and append the remaining
concepts as ordered secondary elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InsufficientConcepts, SchemaMismatch, ValidationError
from .expression import normalize
from .mapping import Theme
from .oracle import Oracle, render_template
from .scoring import AnalysisDiagram

CONSIDERATIONS_MARKER = "The blended image symbolizes a "
CONSTRAINT_SENTENCE = "The image should have a plain, solid-color background and no text or words."
MAX_SCHEMES = 5


@dataclass(frozen=True)
class BlendPair:
    object_a: str
    attribute_a: str
    object_b: str
    attribute_b: str

    def __post_init__(self) -> None:
        if normalize(self.object_a) == normalize(self.object_b):
            raise ValidationError("a blend pair needs two distinct objects")

    def to_dict(self) -> dict:
        return {
            "object_a": self.object_a,
            "attribute_a": self.attribute_a,
            "object_b": self.object_b,
            "attribute_b": self.attribute_b,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BlendPair":
        return cls(d["object_a"], d["attribute_a"], d["object_b"], d["attribute_b"])


@dataclass(frozen=True)
class BlendScheme:
    scheme: str
    reason: str

    def __post_init__(self) -> None:
        if not self.scheme.strip() or not self.reason.strip():
            raise ValidationError("scheme and reason must be non-empty")

    def to_dict(self) -> dict:
        return {"scheme": self.scheme, "reason": self.reason}

    @classmethod
    def from_dict(cls, d: dict) -> "BlendScheme":
        return cls(d["scheme"], d["reason"])


@dataclass
class ImagePrompt:
    text: str
    pair: BlendPair
    scheme: BlendScheme
    theme: Theme
    secondary: list[tuple[str, str, str]] = field(default_factory=list)  # (concept, object, attribute)
    id: str | None = None
    retired: bool = False

    def mentions(self, object_name: str) -> bool:
        key = normalize(object_name)
        if key in (normalize(self.pair.object_a), normalize(self.pair.object_b)):
            return True
        return any(normalize(obj) == key for _, obj, _ in self.secondary)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "pair": self.pair.to_dict(),
            "scheme": self.scheme.to_dict(),
            "theme": self.theme.to_dict(),
            "secondary": [list(s) for s in self.secondary],
            "retired": self.retired,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ImagePrompt":
        return cls(
            text=d["text"],
            pair=BlendPair.from_dict(d["pair"]),
            scheme=BlendScheme.from_dict(d["scheme"]),
            theme=Theme.from_dict(d["theme"]),
            secondary=[tuple(s) for s in d.get("secondary", [])],
            id=d.get("id"),
            retired=d.get("retired", False),
        )


@dataclass
class BlendPlan:
    primary: BlendPair
    secondary: list[tuple[str, str, str]]  # (concept, object, attribute), ordered

    def to_dict(self) -> dict:
        return {"primary": self.primary.to_dict(), "secondary": [list(s) for s in self.secondary]}

    @classmethod
    def from_dict(cls, d: dict) -> "BlendPlan":
        return cls(
            primary=BlendPair.from_dict(d["primary"]),
            secondary=[tuple(s) for s in d.get("secondary", [])],
        )


def generate_schemes(oracle: Oracle, pair: BlendPair, n: int = 3) -> list[BlendScheme]:
    """Exactly n scheme/reason pairs for blending the two objects."""
    if not 1 <= n <= MAX_SCHEMES:
        raise ValidationError(f"scheme count must be in 1..{MAX_SCHEMES}, got {n}")
    bindings = {
        "Object A": pair.object_a,
        "Attribute 1": pair.attribute_a,
        "Object B": pair.object_b,
        "Attribute 2": pair.attribute_b,
        "NUM": n,
    }

    def at_least_n(payload: dict) -> None:
        if len(payload["result"]) < n:
            raise SchemaMismatch(f"need {n} schemes, got {len(payload['result'])}")

    resp = oracle.complete("schemes", bindings, validator=at_least_n)
    return [BlendScheme(scheme=s, reason=r) for s, r in resp.parsed["result"][:n]]


def compose_image_prompt(pair: BlendPair, scheme: BlendScheme, theme: Theme) -> ImagePrompt:
    text = render_template(
        "image",
        {
            "Object A": pair.object_a,
            "Object B": pair.object_b,
            "Attribute 1": pair.attribute_a,
            "Attribute 2": pair.attribute_b,
            "selectedScheme": scheme.scheme,
            "METAPHORICAL THEME": theme.sentence,
        },
    )
    return ImagePrompt(text=text, pair=pair, scheme=scheme, theme=theme)


def _article(word: str) -> str:
    return "an" if word[:1].lower() in "aeiou" else "a"


def secondary_sentence(concept: str, obj: str) -> str:
    return f"Include {_article(obj)} {obj} as a secondary element representing {concept}."


def compose_multi_prompt(plan: BlendPlan, scheme: BlendScheme, theme: Theme) -> ImagePrompt:
    """Primary blend clause, one sentence per secondary element, then the
    considerations clause last."""
    base = compose_image_prompt(plan.primary, scheme, theme)
    if not plan.secondary:
        return base
    idx = base.text.rindex(CONSIDERATIONS_MARKER)
    extras = " ".join(secondary_sentence(c, o) for c, o, _ in plan.secondary)
    text = base.text[:idx] + extras + " " + base.text[idx:]
    return ImagePrompt(
        text=text, pair=plan.primary, scheme=scheme, theme=theme, secondary=list(plan.secondary)
    )


def plan_multi_concept(
    selected_concepts: list[str],
    per_concept_choices: dict[str, tuple[str, str]],
    diagram: AnalysisDiagram,
) -> BlendPlan:
    """Pick the primary subject pair and order the remaining concepts.

    Primary: the cross-concept object pair with maximal normalized
    similarity (ties: higher mean normalized sentiment, then object names).
    Secondary: remaining concepts by descending similarity of their object
    to the primary pair's more-similar member (ties: concept name).
    """
    concepts = sorted({normalize(c) for c in selected_concepts})
    if len(concepts) < 3:
        raise InsufficientConcepts(
            f"multi-concept planning needs at least 3 concepts, got {len(concepts)}"
        )
    choices = {normalize(c): (obj, attr) for c, (obj, attr) in per_concept_choices.items()}
    missing = [c for c in concepts if c not in choices]
    if missing:
        raise ValidationError(f"no object/attribute choice for: {', '.join(missing)}")

    def link_for(obj_x: str, obj_y: str):
        link = diagram.link(obj_x, obj_y)
        if link is None or link.norm_sim is None:
            raise ValidationError(f"analysis diagram does not cover pair ({obj_x}, {obj_y})")
        return link

    best: tuple | None = None
    for ca, cb in combinations(concepts, 2):
        oa, ob = choices[ca][0], choices[cb][0]
        link = link_for(oa, ob)
        names = tuple(sorted((normalize(oa), normalize(ob))))
        rank = (-link.norm_sim, -(link.norm_sent or 0.0), names)
        if best is None or rank < best[0]:
            ordered = (ca, cb) if normalize(oa) <= normalize(ob) else (cb, ca)
            best = (rank, ordered)
    first, second = best[1]
    primary = BlendPair(
        object_a=choices[first][0],
        attribute_a=choices[first][1],
        object_b=choices[second][0],
        attribute_b=choices[second][1],
    )

    rest = [c for c in concepts if c not in (first, second)]

    def affinity(concept: str) -> tuple:
        obj = choices[concept][0]
        sim = max(
            link_for(obj, primary.object_a).norm_sim,
            link_for(obj, primary.object_b).norm_sim,
        )
        return (-sim, concept)

    ordered_rest = sorted(rest, key=affinity)
    secondary = [(c, choices[c][0], choices[c][1]) for c in ordered_rest]
    return BlendPlan(primary=primary, secondary=secondary)
