import json

import pytest

from blendstudio.blend import (
    CONSTRAINT_SENTENCE,
    BlendPair,
    BlendPlan,
    BlendScheme,
    compose_image_prompt,
    compose_multi_prompt,
    generate_schemes,
    plan_multi_concept,
    secondary_sentence,
)
from blendstudio.errors import InsufficientConcepts, InvalidOracleResponse, ValidationError
from blendstudio.mapping import Theme
from blendstudio.scoring import AnalysisDiagram, PairScore

from conftest import GOLDEN_DIR

PAIR = BlendPair("earth", "round", "fireplace", "flames")
THEME = Theme("Rising global temperatures are reshaping the planet.")
SCHEME = BlendScheme(
    "Merge the round shape of the earth with the flames of a fireplace.",
    "Because the earth's round form can rest among the flames like a glowing hearthstone.",
)


def test_pair_needs_distinct_objects():
    with pytest.raises(ValidationError):
        BlendPair("earth", "round", "Earth", "blue")


def test_scheme_rejects_empty_fields():
    with pytest.raises(ValidationError):
        BlendScheme("", "reason")


# --- scheme generation ---------------------------------------------------------

def test_generate_schemes_paper_example(make_oracle):
    paper_row = [
        "Merge the shapes of an orange and a dumbbell plate together.",
        "Because both the shape of an orange and a dumbbell plate are circular.",
    ]
    oracle = make_oracle([json.dumps({"result": [paper_row]})])
    pair = BlendPair("orange", "round shape", "dumbbell plate", "circular")
    schemes = generate_schemes(oracle, pair, n=1)
    assert schemes == [BlendScheme(*paper_row)]
    req = oracle.chat_provider.requests[0]
    assert req.bindings["NUM"] == 1


def test_generate_schemes_exactly_n(make_oracle):
    rows = [[f"scheme {i}", f"reason {i}"] for i in range(5)]
    oracle = make_oracle([json.dumps({"result": rows})])
    schemes = generate_schemes(oracle, PAIR, n=3)
    assert len(schemes) == 3
    assert len({s.scheme for s in schemes}) == 3


def test_generate_schemes_retries_on_shortfall(make_oracle):
    short = json.dumps({"result": [["only", "one"]]})
    full = json.dumps({"result": [["a", "b"], ["c", "d"], ["e", "f"]]})
    oracle = make_oracle([short, full])
    assert len(generate_schemes(oracle, PAIR, n=3)) == 3
    assert len(oracle.chat_provider.requests) == 2


def test_generate_schemes_malformed_after_retries(make_oracle):
    oracle = make_oracle(["not json"], max_attempts=2)
    with pytest.raises(InvalidOracleResponse):
        generate_schemes(oracle, PAIR, n=3)


def test_scheme_count_bounds(make_oracle):
    oracle = make_oracle(["unused"])
    with pytest.raises(ValidationError):
        generate_schemes(oracle, PAIR, n=0)
    with pytest.raises(ValidationError):
        generate_schemes(oracle, PAIR, n=6)


# --- prompt composition -----------------------------------------------------------

def test_compose_contains_required_clauses():
    prompt = compose_image_prompt(PAIR, SCHEME, THEME)
    assert "Generate an image that creatively blends earth with fireplace" in prompt.text
    assert "blended into a single object that has elements from both" in prompt.text
    assert "Highlight the results of blending round of earth with flames of fireplace" in prompt.text
    assert SCHEME.scheme in prompt.text
    assert prompt.text.endswith(CONSTRAINT_SENTENCE)
    assert prompt.text.count(CONSTRAINT_SENTENCE) == 1


def test_theme_verbatim_after_marker():
    prompt = compose_image_prompt(PAIR, SCHEME, THEME)
    assert f"The blended image symbolizes a {THEME.sentence}" in prompt.text


def test_compose_is_idempotent():
    a = compose_image_prompt(PAIR, SCHEME, THEME)
    b = compose_image_prompt(PAIR, SCHEME, THEME)
    assert a.text == b.text


def test_module_order_objects_attributes_scheme_considerations():
    text = compose_image_prompt(PAIR, SCHEME, THEME).text
    objects = text.index("Generate an image that creatively blends")
    attributes = text.index("Highlight the results of blending")
    scheme = text.index(SCHEME.scheme)
    considerations = text.index("The blended image symbolizes a")
    assert objects < attributes < scheme < considerations


# --- multi-concept plans ------------------------------------------------------------

def diagram_with(sims: dict[tuple[str, str], tuple[float, float]]) -> AnalysisDiagram:
    links = [
        PairScore(a=a, b=b, raw_sim=s, raw_sent=p, norm_sim=s, norm_sent=p)
        for (a, b), (s, p) in sims.items()
    ]
    names = sorted({n for pair in sims for n in pair})
    return AnalysisDiagram(
        kind="objects", left=names, right=names, links=links, palette=("#000000", "#ffffff")
    )


CHOICES = {
    "books": ("books", "rectangular pages"),
    "mirror": ("mirror", "reflective surface"),
    "soul": ("phoenix", "fiery wings"),
}


def books_diagram(bm=0.9, bp=0.4, mp=0.3):
    return diagram_with({
        ("books", "mirror"): (bm, 0.6),
        ("books", "phoenix"): (bp, 0.5),
        ("mirror", "phoenix"): (mp, 0.5),
    })


def test_plan_picks_most_similar_pair_as_primary():
    plan = plan_multi_concept(list(CHOICES), CHOICES, books_diagram())
    assert {plan.primary.object_a, plan.primary.object_b} == {"books", "mirror"}
    assert plan.secondary == [("soul", "phoenix", "fiery wings")]


def test_plan_is_permutation_invariant():
    orders = [
        ["books", "mirror", "soul"],
        ["soul", "books", "mirror"],
        ["mirror", "soul", "books"],
    ]
    plans = [plan_multi_concept(order, CHOICES, books_diagram()) for order in orders]
    assert all(p.to_dict() == plans[0].to_dict() for p in plans)


def test_plan_tie_breaks_by_sentiment_then_name():
    tie_sent = diagram_with({
        ("books", "mirror"): (0.9, 0.9),
        ("books", "phoenix"): (0.9, 0.5),
        ("mirror", "phoenix"): (0.9, 0.5),
    })
    plan = plan_multi_concept(list(CHOICES), CHOICES, tie_sent)
    assert {plan.primary.object_a, plan.primary.object_b} == {"books", "mirror"}

    all_tied = diagram_with({
        ("books", "mirror"): (0.9, 0.5),
        ("books", "phoenix"): (0.9, 0.5),
        ("mirror", "phoenix"): (0.9, 0.5),
    })
    plan2 = plan_multi_concept(list(CHOICES), CHOICES, all_tied)
    # lexicographically smallest object pair wins: (books, mirror) < (books, phoenix)
    assert {plan2.primary.object_a, plan2.primary.object_b} == {"books", "mirror"}


def test_plan_orders_secondary_by_affinity():
    choices = dict(CHOICES)
    choices["time"] = ("hourglass", "falling sand")
    diagram = diagram_with({
        ("books", "mirror"): (0.9, 0.6),
        ("books", "phoenix"): (0.2, 0.5),
        ("mirror", "phoenix"): (0.3, 0.5),
        ("books", "hourglass"): (0.7, 0.5),
        ("mirror", "hourglass"): (0.1, 0.5),
        ("phoenix", "hourglass"): (0.1, 0.5),
    })
    plan = plan_multi_concept(list(choices), choices, diagram)
    # hourglass is closer to the primary members than phoenix is
    assert [c for c, _, _ in plan.secondary] == ["time", "soul"]


def test_plan_requires_three_concepts():
    with pytest.raises(InsufficientConcepts):
        plan_multi_concept(["books", "mirror"], CHOICES, books_diagram())


def test_plan_requires_covered_pairs():
    missing = diagram_with({("books", "mirror"): (0.9, 0.6)})
    with pytest.raises(ValidationError):
        plan_multi_concept(list(CHOICES), CHOICES, missing)


# --- multi prompt ----------------------------------------------------------------------

MULTI_PLAN = BlendPlan(
    primary=BlendPair("books", "rectangular pages", "mirror", "reflective surface"),
    secondary=[("soul", "phoenix", "fiery wings")],
)
MULTI_SCHEME = BlendScheme(
    "Blend the reflective surface of a mirror into the rectangular pages of books.",
    "Because a page that reflects the reader makes the book a literal mirror.",
)
MULTI_THEME = Theme("Books reflect the depths of the human soul.")


def test_multi_prompt_matches_golden():
    prompt = compose_multi_prompt(MULTI_PLAN, MULTI_SCHEME, MULTI_THEME)
    golden = (GOLDEN_DIR / "multi_prompt.txt").read_text(encoding="utf-8")
    assert prompt.text == golden
    assert "Include a phoenix as a secondary element representing soul." in prompt.text


def test_multi_prompt_reduces_to_single_when_no_secondary():
    bare = BlendPlan(primary=MULTI_PLAN.primary, secondary=[])
    multi = compose_multi_prompt(bare, MULTI_SCHEME, MULTI_THEME)
    single = compose_image_prompt(MULTI_PLAN.primary, MULTI_SCHEME, MULTI_THEME)
    assert multi.text == single.text


def test_multi_prompt_keeps_constraint_last():
    plan = BlendPlan(
        primary=MULTI_PLAN.primary,
        secondary=[("soul", "phoenix", "fiery wings"), ("time", "hourglass", "sand")],
    )
    text = compose_multi_prompt(plan, MULTI_SCHEME, MULTI_THEME).text
    assert text.endswith(CONSTRAINT_SENTENCE)
    assert text.index("phoenix") < text.index("hourglass") < text.index(CONSTRAINT_SENTENCE)


def test_article_selection_by_leading_vowel():
    assert secondary_sentence("soul", "phoenix").startswith("Include a phoenix")
    assert secondary_sentence("sea", "anchor").startswith("Include an anchor")
