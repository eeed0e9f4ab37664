import time

import pytest
from fastapi.testclient import TestClient

from blendstudio.engine import Engine
from blendstudio.service.app import create_app


@pytest.fixture
def client(offline_config):
    app = create_app(engine=Engine(offline_config))
    with TestClient(app) as c:
        yield c


PAIR = {"object_a": "earth", "attribute_a": "round",
        "object_b": "fireplace", "attribute_b": "flames"}


def start_global_warming(client):
    created = client.post("/sessions", json={"expression": "global warming"}).json()
    sid = created["id"]
    client.post(f"/sessions/{sid}/concepts", json={"indices": [0, 1]})
    return sid


def run_to_prompt(client, sid):
    client.post(f"/sessions/{sid}/theme")
    for concept in ("global", "warming"):
        batch = client.post(f"/sessions/{sid}/concepts/{concept}/objects", json={}).json()
        names = [c["name"] for c in batch["candidates"]]
        client.post(f"/sessions/{sid}/objects/attributes", json={"names": names})
    client.get(f"/sessions/{sid}/analysis/objects")
    client.get(f"/sessions/{sid}/analysis/attributes", params={"pair": "earth,fireplace"})
    client.post(f"/sessions/{sid}/schemes", json={"pair": PAIR})
    resp = client.post(f"/sessions/{sid}/prompts", json={"pair": PAIR, "scheme_index": 0})
    return resp.json()


def test_create_session_returns_tokens(client):
    resp = client.post("/sessions", json={"expression": "global warming"})
    assert resp.status_code == 200
    body = resp.json()
    assert [t["surface"] for t in body["tokens"]] == ["global", "warming"]
    assert [t["pos"] for t in body["tokens"]] == ["adjective", "noun"]


def test_blank_expression_is_400(client):
    resp = client.post("/sessions", json={"expression": "   "})
    assert resp.status_code == 400
    assert resp.json()["code"] == "empty_expression"


def test_unknown_session_is_404(client):
    assert client.get("/sessions/nope/canvas").status_code == 404
    assert client.post("/sessions/nope/theme").status_code == 404


def test_select_concepts_validates_indices(client):
    sid = client.post("/sessions", json={"expression": "global warming"}).json()["id"]
    resp = client.post(f"/sessions/{sid}/concepts", json={"indices": [9]})
    assert resp.status_code == 400
    assert resp.json()["code"] == "index_out_of_range"


def test_theme_endpoint(client):
    sid = start_global_warming(client)
    resp = client.post(f"/sessions/{sid}/theme")
    assert resp.status_code == 200
    assert resp.json()["sentence"].endswith(".")


def test_objects_and_attributes_flow(client):
    sid = start_global_warming(client)
    client.post(f"/sessions/{sid}/theme")
    batch = client.post(f"/sessions/{sid}/concepts/global/objects", json={}).json()
    names = [c["name"] for c in batch["candidates"]]
    assert len(names) == 5 and "earth" in names
    filled = client.post(
        f"/sessions/{sid}/objects/attributes", json={"names": names}
    ).json()["candidates"]
    assert all(len(c["attributes"]) == 5 for c in filled)


def test_analysis_before_objects_is_409(client):
    sid = start_global_warming(client)
    resp = client.get(f"/sessions/{sid}/analysis/objects")
    assert resp.status_code == 409
    assert resp.json()["code"] == "precondition_conflict"


def test_analysis_objects_has_full_cross_product(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    diagram = client.get(f"/sessions/{sid}/analysis/objects").json()
    assert len(diagram["links"]) == 25
    assert len(diagram["nodes"]) == 10
    widths = [l["width"] for l in diagram["links"]]
    assert max(widths) == 1.0 and min(widths) == 0.0
    assert diagram["palette"] == {"negative": "#7B61C4", "positive": "#E8963C"}


def test_analysis_attributes_needs_pair_param(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    assert client.get(f"/sessions/{sid}/analysis/attributes").status_code == 400
    resp = client.get(f"/sessions/{sid}/analysis/attributes", params={"pair": "earth"})
    assert resp.status_code == 400
    ok = client.get(f"/sessions/{sid}/analysis/attributes", params={"pair": "earth,fireplace"})
    assert ok.status_code == 200
    assert ok.json()["palette"] == {"negative": "#4CAF7D", "positive": "#D9A521"}


def test_schemes_validate_pair_membership(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    bad = dict(PAIR, attribute_a="nonexistent attr")
    resp = client.post(f"/sessions/{sid}/schemes", json={"pair": bad})
    assert resp.status_code == 400


def test_prompt_requires_schemes_first(client):
    sid = start_global_warming(client)
    client.post(f"/sessions/{sid}/theme")
    for concept in ("global", "warming"):
        batch = client.post(f"/sessions/{sid}/concepts/{concept}/objects", json={}).json()
        names = [c["name"] for c in batch["candidates"]]
        client.post(f"/sessions/{sid}/objects/attributes", json={"names": names})
    resp = client.post(f"/sessions/{sid}/prompts", json={"pair": PAIR, "scheme_index": 0})
    assert resp.status_code == 409


def test_full_flow_places_canvas_item(client):
    sid = start_global_warming(client)
    prompt = run_to_prompt(client, sid)
    assert prompt["text"].startswith("Generate an image that creatively blends")
    item = client.post(
        f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]}
    ).json()
    assert item["count"] == 1
    assert item["coords"] == [1.0, 1.0]  # the auto-picked pair is the max-similarity one

    again = client.post(f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]}).json()
    assert again["count"] == 2
    assert again["coords"] == item["coords"]

    canvas = client.get(f"/sessions/{sid}/canvas").json()["items"]
    assert len(canvas) == 1

    png = client.get(f"/images/{item['image_refs'][0]}")
    assert png.status_code == 200
    assert png.content.startswith(b"\x89PNG")


def test_unknown_prompt_is_404(client):
    sid = start_global_warming(client)
    resp = client.post(f"/sessions/{sid}/images", json={"prompt_id": "p77"})
    assert resp.status_code == 404
    assert resp.json()["code"] == "unknown_prompt"


def test_unknown_image_is_404(client):
    assert client.get("/images/ffffffffffffffff").status_code == 404


def test_async_image_job(client):
    sid = start_global_warming(client)
    prompt = run_to_prompt(client, sid)
    accepted = client.post(
        f"/sessions/{sid}/images", json={"prompt_id": prompt["id"], "mode": "async"}
    )
    assert accepted.status_code == 202
    poll_url = accepted.json()["poll_url"]
    for _ in range(100):
        status = client.get(poll_url).json()
        if status["status"] != "pending":
            break
        time.sleep(0.02)
    assert status["status"] == "done"
    assert status["item"]["count"] == 1


def test_replace_object_flow(client):
    sid = start_global_warming(client)
    prompt = run_to_prompt(client, sid)
    client.post(f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]})

    resp = client.post(
        f"/sessions/{sid}/objects/replace",
        json={"concept": "warming", "old": "fireplace", "new": "ice cream"},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["removed_items"] == 1
    names = [c["name"] for c in body["candidates"]]
    assert "ice cream" in names and "fireplace" not in names
    new_candidate = next(c for c in body["candidates"] if c["name"] == "ice cream")
    assert len(new_candidate["attributes"]) == 5

    canvas = client.get(f"/sessions/{sid}/canvas").json()["items"]
    assert canvas == []

    history = client.get(f"/sessions/{sid}/history").json()["events"]
    assert any(e["type"] == "canvas_item_removed" for e in history)

    # the stale prompt may not generate images any more
    stale = client.post(f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]})
    assert stale.status_code == 409


def test_replace_unknown_object_is_404(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    resp = client.post(
        f"/sessions/{sid}/objects/replace",
        json={"concept": "warming", "old": "toaster", "new": "ice cream"},
    )
    assert resp.status_code == 404


def test_replace_with_itself_is_noop(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    resp = client.post(
        f"/sessions/{sid}/objects/replace",
        json={"concept": "warming", "old": "fireplace", "new": "fireplace"},
    )
    assert resp.status_code == 200
    names = [c["name"] for c in resp.json()["candidates"]]
    assert "fireplace" in names


def test_preview_endpoint(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    resp = client.post(f"/sessions/{sid}/objects/preview", json={"name": "fireplace"})
    assert resp.status_code == 200
    body = resp.json()
    png = client.get(body["url"])
    assert png.status_code == 200 and png.content.startswith(b"\x89PNG")


def test_plan_multi_flow(client):
    created = client.post(
        "/sessions", json={"expression": "Books are the mirror to the soul"}
    ).json()
    sid = created["id"]
    client.post(f"/sessions/{sid}/concepts", json={"indices": [0, 1, 2]})
    client.post(f"/sessions/{sid}/theme")
    for concept in ("Books", "mirror", "soul"):
        batch = client.post(f"/sessions/{sid}/concepts/{concept}/objects", json={}).json()
        names = [c["name"] for c in batch["candidates"]]
        client.post(f"/sessions/{sid}/objects/attributes", json={"names": names})
    resp = client.post(
        f"/sessions/{sid}/plan-multi",
        json={"choices": {
            "Books": ["open book", "rectangular pages"],
            "mirror": ["hand mirror", "reflective surface"],
            "soul": ["phoenix", "fiery wings"],
        }},
    )
    assert resp.status_code == 200
    plan = resp.json()
    assert {plan["primary"]["object_a"], plan["primary"]["object_b"]} == {"open book", "hand mirror"}
    assert plan["secondary"] == [["soul", "phoenix", "fiery wings"]]

    # compose the multi prompt through the prompts endpoint
    pair = plan["primary"]
    client.post(f"/sessions/{sid}/schemes", json={"pair": pair})
    prompt = client.post(
        f"/sessions/{sid}/prompts",
        json={"pair": pair, "scheme_index": 0, "plan": plan},
    ).json()
    assert "Include a phoenix as a secondary element representing soul." in prompt["text"]


def test_plan_multi_requires_three_choices(client):
    sid = start_global_warming(client)
    run_to_prompt(client, sid)
    resp = client.post(
        f"/sessions/{sid}/plan-multi",
        json={"choices": {
            "global": ["earth", "round"],
            "warming": ["fireplace", "flames"],
        }},
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "insufficient_concepts"


def test_session_document_endpoint(client):
    sid = start_global_warming(client)
    doc = client.get(f"/sessions/{sid}").json()
    assert doc["id"] == sid
    assert doc["schema_version"] == 1
    assert doc["expression"]["raw"] == "global warming"


def test_healthz(client):
    body = client.get("/healthz").json()
    assert body["status"] == "ok" and body["offline"] is True
