import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from blendstudio.engine import Engine
from blendstudio.service.app import create_app
from blendstudio.service.cli import main

from conftest import FIXTURES_DIR


@pytest.fixture
def runner():
    return CliRunner()


def run_offline(runner, tmp_path, tag="run1", extra_args=()):
    out = tmp_path / tag / "out"
    data = tmp_path / tag / "data"
    result = runner.invoke(
        main,
        [
            "run",
            "--expression", "global warming",
            "--offline",
            "--fixtures", str(FIXTURES_DIR),
            "--out", str(out),
            "--data-dir", str(data),
            *extra_args,
        ],
        catch_exceptions=False,
    )
    return result, out


def test_offline_run_emits_artifacts(runner, tmp_path, no_network):
    result, out = run_offline(runner, tmp_path)
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output)
    assert summary["pair"]["object_a"] == "earth"
    assert summary["pair"]["object_b"] == "fireplace"
    assert summary["canvas_items"] == 1

    session = json.loads((out / "session.json").read_text())
    names = {c["name"] for cands in session["candidates"].values() for c in cands}
    assert {"earth", "fireplace"} <= names
    assert (out / "diagram_objects.json").exists()
    assert (out / "diagram_attributes.json").exists()
    prompt = (out / "prompt.txt").read_text()
    assert prompt.startswith("Generate an image that creatively blends")
    pngs = list((out / "images").glob("*.png"))
    assert len(pngs) == 1


def test_offline_run_is_byte_stable(runner, tmp_path, no_network):
    _, out1 = run_offline(runner, tmp_path, "run1")
    _, out2 = run_offline(runner, tmp_path, "run2")
    assert (out1 / "session.json").read_bytes() == (out2 / "session.json").read_bytes()
    assert (out1 / "diagram_objects.json").read_bytes() == (out2 / "diagram_objects.json").read_bytes()
    assert (out1 / "prompt.txt").read_bytes() == (out2 / "prompt.txt").read_bytes()


def test_run_requires_expression(runner):
    result = runner.invoke(main, ["run"])
    assert result.exit_code == 2


def test_offline_requires_fixtures(runner, tmp_path):
    result = runner.invoke(
        main, ["run", "--expression", "x y", "--offline", "--out", str(tmp_path / "o")]
    )
    assert result.exit_code == 2


def test_run_failure_emits_api_error_line(runner, tmp_path):
    # fixtures directory exists but holds nothing for this expression
    empty = tmp_path / "empty-fixtures"
    empty.mkdir()
    result = runner.invoke(
        main,
        [
            "run",
            "--expression", "sturdy bridges",
            "--offline",
            "--fixtures", str(empty),
            "--out", str(tmp_path / "out"),
            "--data-dir", str(tmp_path / "data"),
        ],
    )
    assert result.exit_code == 1
    err = json.loads(result.output.strip().splitlines()[-1])
    assert "code" in err and "message" in err


def test_session_show(runner, tmp_path, no_network):
    _, out = run_offline(runner, tmp_path)
    result = runner.invoke(main, ["session", "show", str(out / "session.json")])
    assert result.exit_code == 0
    assert "global warming" in result.output
    assert "candidates[global]" in result.output


def scripted_http_flow(offline_config, out_dir: Path) -> dict:
    """Mirror of the CLI auto flow, through TestClient, for equivalence."""
    app = create_app(engine=Engine(offline_config))
    with TestClient(app) as client:
        created = client.post("/sessions", json={"expression": "global warming"}).json()
        sid = created["id"]
        client.post(f"/sessions/{sid}/concepts", json={"indices": [0, 1]})
        client.post(f"/sessions/{sid}/theme")
        for concept in ("global", "warming"):
            batch = client.post(f"/sessions/{sid}/concepts/{concept}/objects", json={}).json()
            names = [c["name"] for c in batch["candidates"]]
            client.post(f"/sessions/{sid}/objects/attributes", json={"names": names})
        objects = client.get(f"/sessions/{sid}/analysis/objects").json()
        top = sorted(objects["links"], key=lambda l: (-l["width"], l["source"], l["target"]))[0]
        a, b = top["source"][2:], top["target"][2:]
        attrs = client.get(
            f"/sessions/{sid}/analysis/attributes", params={"pair": f"{a},{b}"}
        ).json()
        atop = sorted(attrs["links"], key=lambda l: (-l["width"], l["source"], l["target"]))[0]
        pair = {
            "object_a": a, "attribute_a": atop["source"][2:],
            "object_b": b, "attribute_b": atop["target"][2:],
        }
        client.post(f"/sessions/{sid}/schemes", json={"pair": pair})
        prompt = client.post(
            f"/sessions/{sid}/prompts", json={"pair": pair, "scheme_index": 0}
        ).json()
        client.post(f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]})
        document = client.get(f"/sessions/{sid}").json()
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "session.json").write_text(
        json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    return document


def test_cli_and_http_flows_are_equivalent(runner, tmp_path, offline_config, no_network):
    _, cli_out = run_offline(runner, tmp_path, "cli")
    http_doc = scripted_http_flow(offline_config, tmp_path / "http")
    cli_doc = json.loads((cli_out / "session.json").read_text())
    assert cli_doc == http_doc
    assert (cli_out / "session.json").read_bytes() == (tmp_path / "http" / "session.json").read_bytes()
