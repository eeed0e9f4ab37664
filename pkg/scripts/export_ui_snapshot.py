#!/usr/bin/env python3
"""Capture the offline backend's API responses for the frontend mock.

Drives the same fixture-backed flow the CLI runs and records each
endpoint's exact JSON body into frontend/src/mock/snapshot.json, so the
browser studio's mock mode replays real service payloads.

Run from the repo root: python scripts/export_ui_snapshot.py
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from blendstudio.config import Config  # noqa: E402
from blendstudio.engine import Engine  # noqa: E402
from blendstudio.service.app import create_app  # noqa: E402

OUT = REPO / "frontend" / "src" / "mock" / "snapshot.json"


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        cfg = Config(
            offline=True,
            fixtures_dir=str(REPO / "tests" / "fixtures"),
            data_dir=f"{tmp}/data",
            cache_dir=f"{tmp}/cache",
        )
        app = create_app(engine=Engine(cfg))
        snap: dict = {}
        with TestClient(app) as client:
            created = client.post("/sessions", json={"expression": "global warming"}).json()
            sid = created["id"]
            snap["create_session"] = created
            snap["select_concepts"] = client.post(
                f"/sessions/{sid}/concepts", json={"indices": [0, 1]}
            ).json()
            snap["theme"] = client.post(f"/sessions/{sid}/theme").json()
            snap["objects"] = {}
            snap["attributes"] = {}
            for concept in ("global", "warming"):
                batch = client.post(
                    f"/sessions/{sid}/concepts/{concept}/objects", json={}
                ).json()
                snap["objects"][concept] = batch
                names = [c["name"] for c in batch["candidates"]]
                snap["attributes"][concept] = client.post(
                    f"/sessions/{sid}/objects/attributes", json={"names": names}
                ).json()
            snap["analysis_objects"] = client.get(f"/sessions/{sid}/analysis/objects").json()
            snap["analysis_attributes"] = client.get(
                f"/sessions/{sid}/analysis/attributes", params={"pair": "earth,fireplace"}
            ).json()
            pair = {"object_a": "earth", "attribute_a": "round",
                    "object_b": "fireplace", "attribute_b": "flames"}
            snap["schemes"] = client.post(f"/sessions/{sid}/schemes", json={"pair": pair}).json()
            snap["prompt"] = client.post(
                f"/sessions/{sid}/prompts", json={"pair": pair, "scheme_index": 0}
            ).json()
            item = client.post(
                f"/sessions/{sid}/images", json={"prompt_id": snap["prompt"]["id"]}
            ).json()
            client.post(f"/sessions/{sid}/images", json={"prompt_id": snap["prompt"]["id"]})
            snap["canvas"] = client.get(f"/sessions/{sid}/canvas").json()
            snap["preview"] = client.post(
                f"/sessions/{sid}/objects/preview", json={"name": "fireplace"}
            ).json()
            snap["replace"] = client.post(
                f"/sessions/{sid}/objects/replace",
                json={"concept": "warming", "old": "fireplace", "new": "ice cream"},
            ).json()
            snap["canvas_after_replace"] = client.get(f"/sessions/{sid}/canvas").json()
            snap["session_document"] = client.get(f"/sessions/{sid}").json()
        assert item["count"] == 1 and snap["canvas"]["items"][0]["count"] == 2
    OUT.parent.mkdir(parents=True, exist_ok=True)
    body = json.dumps(snap, ensure_ascii=False, indent=2)
    OUT.write_text(body + "\n", encoding="utf-8")
    ts = OUT.with_suffix(".ts")
    ts.write_text(
        "// Generated by scripts/export_ui_snapshot.py; do not edit by hand.\n"
        "// Recorded responses of the fixture-backed service, replayed by the mock client.\n"
        f"export const SNAPSHOT = {body} as const;\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT} and {ts}")


if __name__ == "__main__":
    main()
