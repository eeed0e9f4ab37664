#!/usr/bin/env python3
"""Author the offline fixture set under tests/fixtures.

Fixture keys depend on the exact binding strings the pipeline computes, so
this script derives them through the same helpers the runtime uses
(serialize_terms, exclusion_note, fixture_key). After writing everything it
drives the offline engine through the full flows to prove the set is
complete and the crafted embeddings produce the intended top pairs.

Run from the repo root: python scripts/build_fixtures.py
"""

from __future__ import annotations

import json
import shutil
import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from blendstudio.knowledge import query_key, record_path  # noqa: E402
from blendstudio.mapping import exclusion_note, serialize_terms  # noqa: E402
from blendstudio.knowledge import RelatedTerm  # noqa: E402
from blendstudio.oracle import fixture_key, fixture_path  # noqa: E402

FIXTURES = REPO / "tests" / "fixtures"
STAMP = "2024-01-01T00:00:00+00:00"

# --------------------------------------------------------------------------
# scenario data
# --------------------------------------------------------------------------

KNOWLEDGE_OBJECTS = {
    "global": [
        "world", "planet", "earth", "international", "globe", "map",
        "continent", "ocean", "atlas", "hemisphere", "equator", "satellite",
        "network", "climate", "compass", "border", "worldwide", "sphere",
    ],
    "warming": [
        "heat", "fire", "sun", "fireplace", "blanket", "stove", "heater",
        "candle", "flame", "furnace", "radiator", "temperature", "thermos",
        "campfire", "hearth", "coal", "ember", "kettle",
    ],
    "vitamins": [
        "orange", "medicine", "egg", "fruit", "supplement", "capsule",
        "nutrition", "pill", "spinach", "carrot", "milk", "health",
    ],
    "Books": [
        "library", "page", "scroll", "bookshelf", "paper", "reading",
        "quill", "ink", "cover", "chapter", "novel", "encyclopedia",
    ],
    "mirror": [
        "glass", "reflection", "lake", "shield", "silver", "frame",
        "surface", "polish", "tray", "pane", "vanity", "gleam",
    ],
    "soul": [
        "spirit", "phoenix", "dove", "candle", "lantern", "feather",
        "light", "breath", "heart", "flame", "essence", "aura",
    ],
}

KNOWLEDGE_EXERCISE_3 = ["dumbbell", "gym", "running"]

KNOWLEDGE_ATTRIBUTES = {
    "earth": ["round", "blue", "vast", "rocky", "spherical"],
    "fireplace": ["warm", "brick", "burning", "cozy", "stone"],
    "orange": ["round", "juicy", "sweet", "citrus", "peelable"],
    "ice cream": ["cold", "creamy", "sweet", "frozen", "soft"],
}
# every other object gets an empty recorded attribute list
EMPTY_ATTRIBUTE_SEEDS = [
    "globe", "map", "satellite", "compass", "blanket", "sun", "heater",
    "candle", "open book", "scroll", "bookshelf", "quill", "library card",
    "hand mirror", "lake", "polished shield", "glass pane", "silver tray",
    "phoenix", "white dove", "candle flame", "lantern", "feather",
    "stove", "kettle", "thermos", "sauna", "greenhouse",
]

CANDIDATES = {
    "global": [
        ["earth", "Because the earth is the globe itself, the physical body that global issues touch"],
        ["globe", "Because a globe is the classic tabletop model of everything global"],
        ["map", "Because a world map lays out the global scale on a single sheet"],
        ["satellite", "Because satellites circle the whole planet and watch it as one system"],
        ["compass", "Because a compass points across the entire globe, linking every direction"],
    ],
    "warming": [
        ["fireplace", "Because a fireplace steadily raises the temperature of everything around it"],
        ["blanket", "Because a blanket traps heat and warms whatever it covers"],
        ["sun", "Because the sun is the primal source of warmth for the planet"],
        ["heater", "Because a heater exists to push temperatures upward"],
        ["candle", "Because a candle gives off a small, persistent warmth"],
    ],
    "warming-iter2": [
        ["stove", "Because a stove concentrates heat for cooking and warming a room"],
        ["kettle", "Because a kettle brings water to a rising boil"],
        ["thermos", "Because a thermos holds warmth inside its walls for hours"],
        ["sauna", "Because a sauna is a chamber built to hold intense heat"],
        ["greenhouse", "Because a greenhouse traps the sun's heat under glass"],
    ],
    "vitamins": [
        ["orange", "Because it contains vitamin C, which is essential for health and well-being"],
        ["medicine", "Because medicine restores the body the way vitamins maintain it"],
        ["egg", "Because an egg packs concentrated nourishment in a small shell"],
        ["capsule", "Because a capsule delivers a measured dose of nutrients"],
        ["spinach", "Because spinach leaves are dense with vitamins and minerals"],
    ],
    "Books": [
        ["open book", "Because an open book spreads knowledge like a pair of wings"],
        ["scroll", "Because a scroll carries written wisdom from another age"],
        ["bookshelf", "Because a bookshelf holds a whole world of stories in order"],
        ["quill", "Because a quill is the instrument that fills books with thought"],
        ["library card", "Because a library card unlocks endless shelves of books"],
    ],
    "mirror": [
        ["hand mirror", "Because a hand mirror returns a faithful image of whoever looks in"],
        ["lake", "Because a still lake mirrors the sky on its surface"],
        ["polished shield", "Because a polished shield reflects like armor-grade glass"],
        ["glass pane", "Because a glass pane throws back a faint reflection"],
        ["silver tray", "Because a silver tray gleams and mirrors nearby faces"],
    ],
    "soul": [
        ["phoenix", "Because the phoenix embodies a soul that renews itself in fire"],
        ["white dove", "Because a white dove stands for the soul taking flight"],
        ["candle flame", "Because a candle flame flickers like an inner spirit"],
        ["lantern", "Because a lantern carries a small guarded light within"],
        ["feather", "Because a feather is light enough to drift like a spirit"],
    ],
    "ice-cream-replacement": [
        ["ice cream", "Because ice cream melts away, showing how quickly warmth overwhelms the cold"],
        ["stove", "Because a stove concentrates heat for cooking and warming a room"],
        ["kettle", "Because a kettle brings water to a rising boil"],
        ["hearthstone", "Because a hearthstone stores the fire's warmth long after dark"],
        ["teapot", "Because a teapot keeps its contents steaming"],
    ],
}

ATTRIBUTES = {
    "earth": ["round", "blue oceans", "green continents", "vast", "rotating"],
    "globe": ["spherical", "smooth surface", "printed continents", "mounted stand", "glossy"],
    "map": ["flat", "colorful regions", "folded paper", "grid lines", "printed labels"],
    "satellite": ["metallic body", "solar panels", "antenna dishes", "boxy frame", "foil wrapping"],
    "compass": ["circular dial", "magnetic needle", "glass cover", "metal casing", "engraved markings"],
    "fireplace": ["flames", "brick frame", "warm glow", "chimney", "burning logs"],
    "blanket": ["soft fabric", "woven texture", "fringed edges", "plaid pattern", "thick layers"],
    "sun": ["glowing disk", "golden rays", "blinding brightness", "fiery surface", "immense sphere"],
    "heater": ["metal grille", "glowing coils", "compact box", "control dial", "power cord"],
    "candle": ["wax body", "burning wick", "soft flame", "cylindrical form", "dripping wax"],
    "orange": ["round", "orange color", "juicy", "dimpled peel", "citrus segments"],
    "ice cream": ["creamy texture", "waffle cone", "pastel colors", "melting drips", "frosted surface"],
    "open book": ["rectangular pages", "cream paper", "inked lines", "stitched spine", "soft covers"],
    "scroll": ["rolled parchment", "wooden rods", "aged edges", "ribbon tie", "faded script"],
    "bookshelf": ["wooden planks", "straight rows", "varnished finish", "tall frame", "packed spines"],
    "quill": ["white feather", "pointed nib", "curved shaft", "ink stains", "light weight"],
    "library card": ["stiff cardboard", "printed numbers", "worn corners", "stamped dates", "pocket size"],
    "hand mirror": ["reflective surface", "oval glass", "silver handle", "beveled rim", "polished back"],
    "lake": ["still water", "mirrored sky", "dark depths", "curved shoreline", "glassy sheen"],
    "polished shield": ["gleaming metal", "rounded boss", "riveted edge", "curved face", "battle scratches"],
    "glass pane": ["transparent sheet", "smooth finish", "straight edges", "faint reflection", "thin profile"],
    "silver tray": ["gleaming finish", "flat surface", "raised rim", "engraved center", "cool sheen"],
    "phoenix": ["fiery wings", "golden plumage", "long tail feathers", "sharp talons", "ember glow"],
    "white dove": ["white feathers", "rounded breast", "short beak", "folded wings", "pink feet"],
    "candle flame": ["teardrop glow", "orange tip", "blue base", "wavering outline", "soft halo"],
    "lantern": ["glass panels", "metal frame", "carry handle", "warm light", "hinged door"],
    "feather": ["downy barbs", "curved quill", "white vanes", "feather-light body", "tapered tip"],
}

THEMES = {
    "global warming": "Rising global temperatures are reshaping the planet.",
    "Books are the mirror to the soul": "Books reflect the depths of the human soul.",
    "Exercise fuels your body like vitamins": "Regular exercise nourishes the body as vitamins do.",
}

SCHEMES_EARTH_FIREPLACE = [
    ["Merge the round shape of the earth with the flames of a fireplace.",
     "Because the earth's round form can rest among the flames like a glowing hearthstone."],
    ["Wrap the earth in the warm glow of a fireplace.",
     "Because the glow shows heat enveloping the whole globe."],
    ["Set the earth burning like logs inside a fireplace.",
     "Because burning logs convey how the planet itself is being heated."],
]

SCHEMES_MIRROR_BOOK = [
    ["Blend the reflective surface of a hand mirror into the rectangular pages of an open book.",
     "Because a page that reflects the reader makes the book a literal mirror."],
    ["Frame an open book inside a hand mirror's oval glass.",
     "Because the mirror frame presents the book as a reflection."],
    ["Print mirrored pages that gleam like polished glass.",
     "Because gleaming pages fuse text with reflection."],
]

EMBEDDINGS = {
    # global-warming scenario: earth x fireplace must win the cross product
    "earth": [1.0, 0.6, 0.1, 0.0],
    "fireplace": [1.0, 0.55, 0.15, 0.0],
    "globe": [0.8, 0.1, 0.9, 0.2],
    "map": [0.2, 0.9, 0.3, 0.6],
    "satellite": [0.1, 0.3, 0.9, 0.8],
    "compass": [0.5, 0.2, 0.2, 0.9],
    "blanket": [0.3, 0.8, 0.5, 0.1],
    "sun": [0.7, 0.2, 0.6, 0.5],
    "heater": [0.2, 0.5, 0.8, 0.3],
    "candle": [0.4, 0.4, 0.1, 0.8],
    # attributes: round x flames must win earth x fireplace attributes
    "round": [1.0, 0.5, 0.0, 0.1],
    "flames": [1.0, 0.45, 0.05, 0.1],
    "blue oceans": [0.2, 0.9, 0.4, 0.3],
    "green continents": [0.1, 0.8, 0.6, 0.2],
    "vast": [0.4, 0.3, 0.9, 0.1],
    "rotating": [0.3, 0.2, 0.5, 0.9],
    "brick frame": [0.2, 0.7, 0.7, 0.4],
    "warm glow": [0.6, 0.3, 0.8, 0.2],
    "chimney": [0.1, 0.6, 0.3, 0.8],
    "burning logs": [0.5, 0.1, 0.6, 0.7],
    # books-mirror-soul planning: books x mirror maximal cross pair
    "books": [1.0, 0.3, 0.2, 0.0],
    "mirror": [0.95, 0.35, 0.2, 0.05],
    "open book": [1.0, 0.4, 0.1, 0.0],
    "hand mirror": [0.97, 0.42, 0.12, 0.02],
    "phoenix": [0.05, 0.2, 0.9, 0.6],
}


# --------------------------------------------------------------------------
# writers
# --------------------------------------------------------------------------

def write_knowledge(seed: str, kind: str, limit: int, terms: list[RelatedTerm]) -> None:
    path = record_path(FIXTURES, kind, query_key(seed, kind, limit))
    path.parent.mkdir(parents=True, exist_ok=True)
    from blendstudio.expression import normalize

    record = {
        "schema_version": 1,
        "query": {"seed": normalize(seed), "kind": kind, "limit": limit},
        "retrieved_at": STAMP,
        "terms": [t.to_dict() for t in terms],
    }
    path.write_text(json.dumps(record, ensure_ascii=False, indent=2), encoding="utf-8")


def object_terms(seed: str) -> list[RelatedTerm]:
    names = KNOWLEDGE_OBJECTS[seed]
    return [
        RelatedTerm(term=n, weight=round(0.9 - 0.02 * i, 3)) for i, n in enumerate(names)
    ]


def attribute_terms(seed: str) -> list[RelatedTerm]:
    names = KNOWLEDGE_ATTRIBUTES.get(seed, [])
    return [
        RelatedTerm(term=n, weight=round(0.8 - 0.03 * i, 3), relation="HasProperty")
        for i, n in enumerate(names)
    ]


def write_oracle(template_id: str, bindings: dict, extra: str | None, responses: list[str]) -> None:
    key = fixture_key(template_id, bindings, extra)
    path = fixture_path(FIXTURES, template_id, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    record = {
        "schema_version": 1,
        "template_id": template_id,
        "bindings": bindings,
        "extra": extra,
        "request": None,  # authored fixture, no live request captured
        "responses": responses,
    }
    path.write_text(json.dumps(record, ensure_ascii=False, indent=2), encoding="utf-8")


def objects_bindings(concept: str) -> dict:
    terms = object_terms(concept)
    return {"INPUT": concept, "Related_Concepts": serialize_terms(terms)}


def attributes_bindings(names: list[str]) -> dict:
    parts = []
    for name in names:
        terms = attribute_terms(name)
        parts.append(f"{name}: {serialize_terms(terms, cap=200)}" if terms else name)
    return {"INPUT": ", ".join(names), "Related_Concepts": "; ".join(parts)}


def rows_payload(rows: list[list[str]]) -> str:
    return json.dumps({"result": rows}, ensure_ascii=False)


def attribute_rows(names: list[str]) -> list[list[str]]:
    return [[n, *ATTRIBUTES[n]] for n in names]


# --------------------------------------------------------------------------
# build
# --------------------------------------------------------------------------

def build() -> None:
    if FIXTURES.exists():
        shutil.rmtree(FIXTURES)
    FIXTURES.mkdir(parents=True)

    # knowledge: related objects
    for seed in KNOWLEDGE_OBJECTS:
        write_knowledge(seed, "objects", 50, object_terms(seed))
    write_knowledge(
        "exercise", "objects", 3,
        [RelatedTerm(term=n, weight=round(0.9 - 0.1 * i, 3)) for i, n in enumerate(KNOWLEDGE_EXERCISE_3)],
    )
    write_knowledge("zzxqv-nonword", "objects", 50, [])

    # knowledge: related attributes (10 per object; empty lists are recorded too)
    for seed in list(KNOWLEDGE_ATTRIBUTES) + EMPTY_ATTRIBUTE_SEEDS:
        write_knowledge(seed, "attributes", 10, attribute_terms(seed))

    # oracle: themes
    for expression, sentence in THEMES.items():
        write_oracle("theme", {"Input": expression}, None, [json.dumps({"result": sentence})])

    # oracle: object suggestions
    write_oracle("objects", objects_bindings("global"), None, [rows_payload(CANDIDATES["global"])])
    write_oracle("objects", objects_bindings("warming"), None, [rows_payload(CANDIDATES["warming"])])
    excl = {c[0] for c in CANDIDATES["warming"]}
    write_oracle(
        "objects", objects_bindings("warming"), exclusion_note(excl),
        [rows_payload(CANDIDATES["warming-iter2"])],
    )
    write_oracle("objects", objects_bindings("vitamins"), None, [rows_payload(CANDIDATES["vitamins"])])
    for concept in ("Books", "mirror", "soul"):
        write_oracle("objects", objects_bindings(concept), None, [rows_payload(CANDIDATES[concept])])
    write_oracle(
        "objects", objects_bindings("warming"),
        'One of the five physical objects must be exactly "ice cream".',
        [rows_payload(CANDIDATES["ice-cream-replacement"])],
    )

    # oracle: attribute batches (one call per concept batch, plus singletons)
    batches = [
        [c[0] for c in CANDIDATES["global"]],
        [c[0] for c in CANDIDATES["warming"]],
        [c[0] for c in CANDIDATES["Books"]],
        [c[0] for c in CANDIDATES["mirror"]],
        [c[0] for c in CANDIDATES["soul"]],
        ["orange"],
        ["ice cream"],
    ]
    for names in batches:
        write_oracle(
            "attributes", attributes_bindings(names), None, [rows_payload(attribute_rows(names))]
        )

    # oracle: schemes
    write_oracle(
        "schemes",
        {"Object A": "earth", "Attribute 1": "round",
         "Object B": "fireplace", "Attribute 2": "flames", "NUM": 3},
        None,
        [rows_payload(SCHEMES_EARTH_FIREPLACE)],
    )
    write_oracle(
        "schemes",
        {"Object A": "hand mirror", "Attribute 1": "reflective surface",
         "Object B": "open book", "Attribute 2": "rectangular pages", "NUM": 3},
        None,
        [rows_payload(SCHEMES_MIRROR_BOOK)],
    )

    # embeddings
    (FIXTURES / "embeddings.json").write_text(
        json.dumps({"dim": 4, "tag": "fixture-v1", "vectors": EMBEDDINGS}, indent=2) + "\n",
        encoding="utf-8",
    )


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

def cos(a, b) -> float:
    a, b = np.asarray(a, float), np.asarray(b, float)
    return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))


def verify_embeddings() -> None:
    left = [c[0] for c in CANDIDATES["global"]]
    right = [c[0] for c in CANDIDATES["warming"]]
    sims = {(a, b): cos(EMBEDDINGS[a], EMBEDDINGS[b]) for a in left for b in right}
    top = max(sims, key=sims.get)
    assert top == ("earth", "fireplace"), f"object argmax is {top}"

    attrs_l, attrs_r = ATTRIBUTES["earth"], ATTRIBUTES["fireplace"]
    asims = {(a, b): cos(EMBEDDINGS[a], EMBEDDINGS[b]) for a in attrs_l for b in attrs_r}
    atop = max(asims, key=asims.get)
    assert atop == ("round", "flames"), f"attribute argmax is {atop}"

    cross = {
        ("books", "mirror"): cos(EMBEDDINGS["books"], EMBEDDINGS["mirror"]),
        ("books", "phoenix"): cos(EMBEDDINGS["books"], EMBEDDINGS["phoenix"]),
        ("mirror", "phoenix"): cos(EMBEDDINGS["mirror"], EMBEDDINGS["phoenix"]),
    }
    assert max(cross, key=cross.get) == ("books", "mirror"), cross
    cross2 = {
        ("open book", "hand mirror"): cos(EMBEDDINGS["open book"], EMBEDDINGS["hand mirror"]),
        ("open book", "phoenix"): cos(EMBEDDINGS["open book"], EMBEDDINGS["phoenix"]),
        ("hand mirror", "phoenix"): cos(EMBEDDINGS["hand mirror"], EMBEDDINGS["phoenix"]),
    }
    assert max(cross2, key=cross2.get) == ("open book", "hand mirror"), cross2


def verify_flows(tmp: Path) -> None:
    from blendstudio.config import Config
    from blendstudio.engine import Engine

    cfg = Config(offline=True, fixtures_dir=str(FIXTURES),
                 data_dir=str(tmp / "data"), cache_dir=str(tmp / "cache"))
    engine = Engine(cfg)

    # global warming flow
    s = engine.create_session("global warming")
    engine.select_concepts(s.id, [0, 1])
    engine.infer_theme(s.id)
    for concept in ("global", "warming"):
        batch = engine.suggest_objects(s.id, concept)
        engine.suggest_attributes(s.id, [c.name for c in batch])
    objects = engine.analysis_objects(s.id)
    top = sorted(objects.links, key=lambda l: (-l.norm_sim, l.a, l.b))[0]
    assert (top.a, top.b) == ("earth", "fireplace"), (top.a, top.b)
    attrs = engine.analysis_attributes(s.id, "earth", "fireplace")
    atop = sorted(attrs.links, key=lambda l: (-l.norm_sim, l.a, l.b))[0]
    assert (atop.a, atop.b) == ("round", "flames"), (atop.a, atop.b)

    from blendstudio.blend import BlendPair

    pair = BlendPair("earth", "round", "fireplace", "flames")
    engine.generate_schemes(s.id, pair)
    prompt = engine.compose_prompt(s.id, pair, 0)
    item = engine.generate_image(s.id, prompt.id)
    assert item.coords == (1.0, 1.0), item.coords

    # iteration 2 and replacement
    batch2 = engine.suggest_objects(s.id, "warming")
    assert {c.name for c in batch2} == {r[0] for r in CANDIDATES["warming-iter2"]}
    engine.replace_object(s.id, "warming", "fireplace", "ice cream")
    live = [c.name for c in engine.session(s.id).candidates_for("warming")]
    assert "ice cream" in live and "fireplace" not in live

    # books / mirror / soul multi-concept flow
    s2 = engine.create_session("Books are the mirror to the soul")
    engine.select_concepts(s2.id, [0, 1, 2])
    engine.infer_theme(s2.id)
    for concept in ("Books", "mirror", "soul"):
        batch = engine.suggest_objects(s2.id, concept)
        engine.suggest_attributes(s2.id, [c.name for c in batch])
    plan, _ = engine.plan_multi(
        s2.id,
        {
            "Books": ("open book", "rectangular pages"),
            "mirror": ("hand mirror", "reflective surface"),
            "soul": ("phoenix", "fiery wings"),
        },
    )
    names = {plan.primary.object_a, plan.primary.object_b}
    assert names == {"open book", "hand mirror"}, names
    assert plan.secondary == [("soul", "phoenix", "fiery wings")], plan.secondary

    # vitamins unit fixtures
    from blendstudio.expression import parse_expression, select_concepts

    expr = parse_expression("Exercise fuels your body like vitamins")
    expr = select_concepts(expr, [3])
    cands = engine.mapper.suggest_objects("vitamins", expr)
    assert cands[0].name == "orange" and "vitamin C" in cands[0].rationale
    filled = engine.mapper.suggest_attributes([cands[0]])
    assert "orange color" in filled[0].attributes


def main() -> None:
    build()
    verify_embeddings()
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        verify_flows(Path(tmp))
    count = sum(1 for _ in FIXTURES.rglob("*.json"))
    print(f"wrote {count} fixture files under {FIXTURES}")


if __name__ == "__main__":
    main()
