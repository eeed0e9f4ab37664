import json

import pytest

from blendstudio.errors import (
    ContentRejected,
    InvalidOracleResponse,
    MissingBinding,
    OracleUnavailable,
    ParseFailure,
    SchemaMismatch,
)
from blendstudio.oracle import (
    ChatRequest,
    FixtureChatProvider,
    RecordingChatProvider,
    extract_json_result,
    first_json_object,
    fixture_key,
    placeholders,
    render_template,
    solid_png,
    template_text,
)

from conftest import GOLDEN_DIR, StubChat

GOLDEN_BINDINGS = {
    "theme": {"Input": "global warming"},
    "objects": {"INPUT": "vitamins", "Related_Concepts": "orange, medicine, egg"},
    "attributes": {"INPUT": "orange", "Related_Concepts": "orange: round, juicy, sweet"},
    "schemes": {"Object A": "orange", "Attribute 1": "round shape",
                "Object B": "dumbbell plate", "Attribute 2": "circular", "NUM": 1},
    "image": {"Object A": "earth", "Object B": "fireplace", "Attribute 1": "round",
              "Attribute 2": "flames",
              "selectedScheme": "Merge the round shape of the earth with the flames of a fireplace.",
              "METAPHORICAL THEME": "Rising global temperatures are reshaping the planet."},
}


@pytest.mark.parametrize("template_id", sorted(GOLDEN_BINDINGS))
def test_rendered_templates_match_golden_files(template_id):
    rendered = render_template(template_id, GOLDEN_BINDINGS[template_id])
    golden = (GOLDEN_DIR / f"{template_id}.txt").read_text(encoding="utf-8")
    assert rendered == golden


# spot-checks that the stored scripts carry the source text verbatim,
# including its quirks of spacing and punctuation
TRANSCRIPTION_ANCHORS = {
    "theme": [
        "I hope to set you as an assistant with strong reasoning ability and creativity.",
        "Our task is to find the hidden meaning in the sentence ({Input}).",
        "Summarize the hidden meaning of the sentence ({Input}) in one sentence.",
        '        """    \n        Return the result of your calculation as a valid JSON object. \n',
        '{{\n        "result": xxx\n        }}',
    ],
    "objects": [
        '1. The content of the answer can not include activities, such as "running" and "swimming".',
        '2. The content of the answer can not include categories, such as "fruits" and "vegetables".',
        '3. The content of the answer can not include abstract concepts, such as "exercise" and "beauty".',
        'such as "hope is like seeds", and "knowledge is like books". \n',
        "External knowledge includes: ###{Related_Concepts}###.",
        '["Dumbbells", "Because they can be used for weightlifting exercises to enhance muscle strength"],',
    ],
    "attributes": [
        "receive a list of entities and then show the five most important visible physical attributes",
        'You cannot answer with general terms like "size", "color", or "shape". For example, you should answer with "red" or "round".',
        "For each object, return [1 object and  5 most important visible physical attributes, total 6 elements].",
        "###{Related_Concepts}###\n",
    ],
    "schemes": [
        "You are a creative assistant for a designer.",
        "The first object is {Object A}, the shared connecting attribute of {Object A} could be {Attribute 1}.",
        "First, thinking about how to merge {Object A} and {Object B} into one object by utilizing their commonalities: {Attribute 1} of {Object A} and {Attribute 2} of {Object B}.",
        "Third, iterate this process to produce (NUM) distinct combinations.",
        '["Merge the shapes of an orange and a dumbbell plate together.", "<Because both the shape of an orange and a dumbbell plate are circular.>"],',
    ],
    "image": [
        "Generate an image that creatively blends {Object A} with {Object B}, they should be blended into a single object that has elements from both.",
        "Highlight the results of blending {Attribute 1} of {Object A} with {Attribute 2} of {Object B} in the resulting blended image.",
        "The blended image symbolizes a {METAPHORICAL THEME}.The image should have a plain, solid-color background and no text or words.",
    ],
}


@pytest.mark.parametrize("template_id", sorted(TRANSCRIPTION_ANCHORS))
def test_template_resources_carry_source_text(template_id):
    text = template_text(template_id)
    for anchor in TRANSCRIPTION_ANCHORS[template_id]:
        assert anchor in text, f"missing anchor in {template_id}: {anchor!r}"


def test_placeholder_sets():
    assert placeholders("theme") == {"Input"}
    assert placeholders("objects") == {"INPUT", "Related_Concepts"}
    assert placeholders("attributes") == {"INPUT", "Related_Concepts"}
    assert placeholders("schemes") == {"Object A", "Attribute 1", "Object B", "Attribute 2", "NUM"}
    assert placeholders("image") == {
        "Object A", "Object B", "Attribute 1", "Attribute 2", "selectedScheme",
        "METAPHORICAL THEME",
    }


def test_render_fills_every_slot_and_unescapes_braces():
    out = render_template("theme", {"Input": "global warming"})
    assert "find the hidden meaning in the sentence (global warming)" in out
    assert "{Input}" not in out and "{{" not in out and "}}" not in out
    assert '{\n        "result": xxx\n        }' in out


def test_render_num_slot():
    out = render_template("schemes", GOLDEN_BINDINGS["schemes"] | {"NUM": 4})
    assert "produce (4) distinct combinations" in out
    assert "(NUM)" not in out


def test_missing_binding():
    with pytest.raises(MissingBinding) as err:
        render_template("objects", {"INPUT": "vitamins"})
    assert err.value.name == "Related_Concepts"


def test_image_template_starts_and_ends_right():
    out = render_template("image", GOLDEN_BINDINGS["image"])
    assert out.startswith("Generate an image that creatively blends")
    assert out.endswith("The image should have a plain, solid-color background and no text or words.")


def test_render_is_deterministic():
    a = render_template("image", GOLDEN_BINDINGS["image"])
    b = render_template("image", GOLDEN_BINDINGS["image"])
    assert a == b


# --- extraction ------------------------------------------------------------------

def test_extract_plain_and_wrapped():
    payload = '{"result": "X"}'
    assert extract_json_result(payload, "theme") == {"result": "X"}
    assert extract_json_result(f"prefix text {payload} suffix", "theme") == {"result": "X"}
    assert extract_json_result(f"```json\n{payload}\n```", "theme") == {"result": "X"}


def test_extract_handles_braces_inside_strings():
    text = 'note {"result": "curly {brace} inside"} done'
    assert extract_json_result(text, "theme")["result"] == "curly {brace} inside"


def test_extract_skips_unparseable_blobs():
    text = "{not json at all} then {\"result\": \"ok\"}"
    assert extract_json_result(text, "theme")["result"] == "ok"


def test_extract_parse_failure():
    with pytest.raises(ParseFailure):
        first_json_object("no objects here at all")
    with pytest.raises(ParseFailure):
        first_json_object("{unterminated")


def test_objects_schema_requires_five_pairs():
    good = {"result": [[f"o{i}", f"r{i}"] for i in range(5)]}
    assert extract_json_result(json.dumps(good), "objects") == good
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"result": [["a","b"]]}', "objects")
    with pytest.raises(SchemaMismatch):
        extract_json_result(json.dumps({"result": [["a", "b", "c"]] * 5}), "objects")


def test_attributes_schema_requires_six_cells():
    good = {"result": [["orange", "round", "orange color", "juicy", "dimpled", "citrus"]]}
    assert extract_json_result(json.dumps(good), "attributes") == good
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"result": [["orange", "round"]]}', "attributes")
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"result": []}', "attributes")


@pytest.mark.parametrize("template_id", ["objects", "attributes"])
def test_rendered_example_blocks_extract_and_validate(template_id):
    # the "For example, return" block inside the rendered script is itself a
    # schema-valid payload (the schemes example carries literal "..." rows,
    # so it is a format illustration rather than parseable JSON)
    rendered = render_template(template_id, GOLDEN_BINDINGS[template_id])
    example = rendered[rendered.index("For example, return"):]
    payload = extract_json_result(example, template_id)
    assert json.loads(json.dumps(payload)) == payload


def test_theme_schema():
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"result": 42}', "theme")
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"other": "x"}', "theme")


def test_schemes_schema():
    assert extract_json_result('{"result": [["s", "r"]]}', "schemes")["result"] == [["s", "r"]]
    with pytest.raises(SchemaMismatch):
        extract_json_result('{"result": [["s"]]}', "schemes")


# --- completion retries -----------------------------------------------------------------

def test_complete_parses_fenced_output(make_oracle):
    oracle = make_oracle(['```json\n{"result": "One sentence."}\n```'])
    resp = oracle.complete("theme", {"Input": "x"})
    assert resp.parsed == {"result": "One sentence."}
    assert resp.attempts == 1


def test_complete_retries_until_budget_exhausted(make_oracle):
    oracle = make_oracle(["sorry, I can't"], max_attempts=3)
    with pytest.raises(InvalidOracleResponse) as err:
        oracle.complete("theme", {"Input": "x"})
    assert err.value.attempts == 3
    assert "sorry" in err.value.last_text
    assert len(oracle.chat_provider.requests) == 3


def test_complete_recovers_on_second_attempt(make_oracle):
    oracle = make_oracle(["garbage", '{"result": "Fine."}'], max_attempts=3)
    resp = oracle.complete("theme", {"Input": "x"})
    assert resp.attempts == 2


def test_retry_temperature_never_increases(make_oracle):
    oracle = make_oracle(["junk"], max_attempts=4, temperature=0.8)
    with pytest.raises(InvalidOracleResponse):
        oracle.complete("theme", {"Input": "x"})
    temps = [r.temperature for r in oracle.chat_provider.requests]
    assert temps == sorted(temps, reverse=True)
    assert temps[0] == 0.8 and temps[-1] == 0.0


def test_validator_rejections_consume_attempts(make_oracle):
    oracle = make_oracle(['{"result": "Two. Sentences."}'], max_attempts=2)

    def single_sentence(payload):
        if "." in payload["result"].rstrip(".")[:-1]:
            raise SchemaMismatch("must be one sentence")

    with pytest.raises(InvalidOracleResponse):
        oracle.complete("theme", {"Input": "x"}, validator=single_sentence)
    assert len(oracle.chat_provider.requests) == 2


# --- fixture playback & recording -------------------------------------------------------

def test_record_then_playback_round_trip(tmp_path):
    live = StubChat(['{"result": "Recorded."}'])
    recorder = RecordingChatProvider(live, tmp_path)
    request = ChatRequest(
        template_id="theme",
        bindings={"Input": "x"},
        extra=None,
        messages=[{"role": "user", "content": "hi"}],
        temperature=0.5,
    )
    assert recorder.chat(request) == '{"result": "Recorded."}'

    playback = FixtureChatProvider(tmp_path)
    assert playback.chat(request) == '{"result": "Recorded."}'


def test_playback_replays_attempts_in_order(tmp_path):
    live = StubChat(["bad one", '{"result": "good"}'])
    recorder = RecordingChatProvider(live, tmp_path)
    req = ChatRequest("theme", {"Input": "x"}, None, [], 0.5, attempt=1)
    recorder.chat(req)
    recorder.chat(ChatRequest("theme", {"Input": "x"}, None, [], 0.25, attempt=2))

    playback = FixtureChatProvider(tmp_path)
    assert playback.chat(ChatRequest("theme", {"Input": "x"}, None, [], 0.5, attempt=1)) == "bad one"
    assert playback.chat(ChatRequest("theme", {"Input": "x"}, None, [], 0.25, attempt=2)) == '{"result": "good"}'
    # attempts beyond the recording repeat the last response
    assert playback.chat(ChatRequest("theme", {"Input": "x"}, None, [], 0.0, attempt=9)) == '{"result": "good"}'


def test_playback_missing_fixture_is_hard_error(tmp_path):
    playback = FixtureChatProvider(tmp_path)
    with pytest.raises(OracleUnavailable):
        playback.chat(ChatRequest("theme", {"Input": "nothing recorded"}, None, [], 0.5))


def test_fixture_key_depends_on_bindings_and_extra():
    a = fixture_key("objects", {"INPUT": "x"}, None)
    b = fixture_key("objects", {"INPUT": "y"}, None)
    c = fixture_key("objects", {"INPUT": "x"}, "exclude z")
    assert len({a, b, c}) == 3
    assert fixture_key("objects", {"INPUT": "x"}, None) == a


# --- images -----------------------------------------------------------------------------

def test_fixture_image_artifact_is_stable(make_oracle):
    oracle = make_oracle(["unused"])
    a1 = oracle.generate_image("a prompt")
    a2 = oracle.generate_image("a prompt")
    assert a1.id == a2.id
    assert a1.prompt == "a prompt"
    data = oracle.artifacts.open_bytes(a1.id)
    assert data.startswith(b"\x89PNG\r\n\x1a\n")


def test_empty_prompt_rejected(make_oracle):
    oracle = make_oracle(["unused"])
    with pytest.raises(ValueError):
        oracle.generate_image("   ")


def test_content_rejection_surfaces(tmp_path):
    from blendstudio.artifacts import ArtifactStore
    from blendstudio.oracle import Oracle
    from conftest import FailingImageProvider

    oracle = Oracle(
        StubChat(["x"]),
        FailingImageProvider(ContentRejected("policy refusal")),
        ArtifactStore(tmp_path),
    )
    with pytest.raises(ContentRejected):
        oracle.generate_image("something")


def test_solid_png_is_deterministic():
    assert solid_png(10, 20, 30) == solid_png(10, 20, 30)
    assert solid_png(10, 20, 30) != solid_png(11, 20, 30)
