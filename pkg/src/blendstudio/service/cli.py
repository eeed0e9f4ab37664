"""Command-line client.

`serve` starts the HTTP service; `run` drives the full pipeline through
the same HTTP surface, either in-process (zero sockets, which is what
--offline relies on) or against a remote --server URL. `record` is a live
run that captures provider fixtures for later offline playback.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

from ..config import Config
from ..studio import load_session


def _fail(code: str, message: str, exit_code: int = 1) -> None:
    click.echo(json.dumps({"code": code, "message": message}), err=True)
    sys.exit(exit_code)


def _client(config: Config, server: str | None) -> httpx.AsyncClient:
    if server:
        return httpx.AsyncClient(base_url=server, timeout=300.0)
    from .app import create_app

    transport = httpx.ASGITransport(app=create_app(config))
    return httpx.AsyncClient(transport=transport, base_url="http://blendstudio.local", timeout=300.0)


async def _check(resp: httpx.Response) -> dict:
    if resp.status_code >= 400:
        try:
            err = resp.json()
        except Exception:
            err = {"code": f"http_{resp.status_code}", "message": resp.text[:200]}
        raise RuntimeError(json.dumps(err))
    return resp.json()


def _max_width_link(diagram: dict) -> dict:
    return sorted(
        diagram["links"], key=lambda l: (-l["width"], l["source"], l["target"])
    )[0]


def _label(node_id: str) -> str:
    return node_id[2:]  # strip the "L:"/"R:" side prefix


async def _run_flow(
    client: httpx.AsyncClient,
    expression: str,
    out_dir: Path,
    scheme_count: int | None,
    session_id: str | None,
    images: int,
) -> dict:
    created = await _check(
        await client.post("/sessions", json={"expression": expression, "session_id": session_id})
    )
    sid = created["id"]
    tokens = created["tokens"]
    if not tokens:
        raise RuntimeError(json.dumps({"code": "empty_expression", "message": "no concept tokens"}))

    await _check(
        await client.post(
            f"/sessions/{sid}/concepts", json={"indices": list(range(len(tokens)))}
        )
    )
    await _check(await client.post(f"/sessions/{sid}/theme"))

    selected = [t["surface"] for t in tokens]
    concepts = selected[:2]
    if len(concepts) < 2:
        raise RuntimeError(
            json.dumps({"code": "precondition_conflict", "message": "need at least two concepts"})
        )
    for concept in concepts:
        batch = await _check(
            await client.post(f"/sessions/{sid}/concepts/{concept}/objects", json={})
        )
        names = [c["name"] for c in batch["candidates"]]
        await _check(
            await client.post(f"/sessions/{sid}/objects/attributes", json={"names": names})
        )

    objects_diagram = await _check(await client.get(f"/sessions/{sid}/analysis/objects"))
    top = _max_width_link(objects_diagram)
    obj_a, obj_b = _label(top["source"]), _label(top["target"])

    attr_diagram = await _check(
        await client.get(
            f"/sessions/{sid}/analysis/attributes", params={"pair": f"{obj_a},{obj_b}"}
        )
    )
    top_attr = _max_width_link(attr_diagram)
    attr_a, attr_b = _label(top_attr["source"]), _label(top_attr["target"])

    pair = {"object_a": obj_a, "attribute_a": attr_a, "object_b": obj_b, "attribute_b": attr_b}
    schemes_body = {"pair": pair}
    if scheme_count:
        schemes_body["n"] = scheme_count
    schemes = await _check(await client.post(f"/sessions/{sid}/schemes", json=schemes_body))

    prompt = await _check(
        await client.post(
            f"/sessions/{sid}/prompts", json={"pair": pair, "scheme_index": 0}
        )
    )
    for _ in range(max(1, images)):
        await _check(
            await client.post(f"/sessions/{sid}/images", json={"prompt_id": prompt["id"]})
        )

    canvas = await _check(await client.get(f"/sessions/{sid}/canvas"))
    document = await _check(await client.get(f"/sessions/{sid}"))

    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "session.json").write_text(
        json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (out_dir / "diagram_objects.json").write_text(
        json.dumps(objects_diagram, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (out_dir / "diagram_attributes.json").write_text(
        json.dumps(attr_diagram, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (out_dir / "prompt.txt").write_text(prompt["text"] + "\n", encoding="utf-8")
    images_dir = out_dir / "images"
    images_dir.mkdir(exist_ok=True)
    for item in canvas["items"]:
        for ref in item["image_refs"]:
            resp = await client.get(f"/images/{ref}")
            if resp.status_code == 200:
                (images_dir / f"{ref}.png").write_bytes(resp.content)

    return {
        "session_id": sid,
        "pair": pair,
        "schemes": [s["scheme"] for s in schemes["schemes"]],
        "prompt_id": prompt["id"],
        "canvas_items": len(canvas["items"]),
        "out": str(out_dir),
    }


@click.group()
def main() -> None:
    """Visual blend ideation: metaphorical objects, scored pairings, and
    composed text-to-image prompts."""


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--config", "config_file", type=click.Path(exists=True), default=None)
@click.option("--offline", is_flag=True, help="serve with fixture providers only")
@click.option("--fixtures", type=click.Path(), default=None)
def serve(port: int, host: str, config_file: str | None, offline: bool, fixtures: str | None):
    """Start the HTTP service."""
    import uvicorn

    from .app import create_app

    overrides = {"offline": offline or None, "fixtures_dir": fixtures}
    config = Config.load(config_file, overrides)
    uvicorn.run(create_app(config), host=host, port=port)


def _run_options(f):
    f = click.option("--expression", required=True)(f)
    f = click.option("--out", "out_dir", type=click.Path(), default="out", show_default=True)(f)
    f = click.option("--config", "config_file", type=click.Path(exists=True), default=None)(f)
    f = click.option("--schemes", "scheme_count", type=click.IntRange(1, 5), default=None)(f)
    f = click.option("--session-id", default=None)(f)
    f = click.option("--images", default=1, show_default=True)(f)
    f = click.option("--data-dir", default=None, help="session/artifact storage directory")(f)
    return f


@main.command()
@_run_options
@click.option("--auto/--no-auto", default=True, show_default=True,
              help="auto-select all concepts and the top-similarity pair")
@click.option("--offline", is_flag=True, help="fixture playback only; no network I/O")
@click.option("--fixtures", type=click.Path(), default=None)
@click.option("--server", default=None, help="URL of a running service; default is in-process")
def run(expression, out_dir, config_file, scheme_count, session_id, images, data_dir, auto,
        offline, fixtures, server):
    """Run the full pipeline non-interactively and write artifacts to --out."""
    if not auto:
        _fail("validation", "interactive mode is not implemented; use --auto", 2)
    overrides = {"offline": offline or None, "fixtures_dir": fixtures, "data_dir": data_dir}
    config = Config.load(config_file, overrides)
    if offline and not (fixtures or config.fixtures_dir):
        _fail("validation", "--offline requires --fixtures DIR", 2)

    async def go():
        async with _client(config, server) as client:
            return await _run_flow(
                client, expression, Path(out_dir), scheme_count, session_id, images
            )

    try:
        summary = asyncio.run(go())
    except RuntimeError as exc:
        _fail_from(exc)
    except httpx.HTTPError as exc:
        _fail("transport", str(exc))
    else:
        click.echo(json.dumps(summary, ensure_ascii=False, indent=2))


@main.command()
@_run_options
@click.option("--fixtures", required=True, type=click.Path(),
              help="directory that captured fixtures are written to")
def record(expression, out_dir, config_file, scheme_count, session_id, images, data_dir, fixtures):
    """Live run that records provider responses as replayable fixtures."""
    config = Config.load(
        config_file, {"record": True, "fixtures_dir": fixtures, "data_dir": data_dir}
    )

    async def go():
        async with _client(config, None) as client:
            return await _run_flow(
                client, expression, Path(out_dir), scheme_count, session_id, images
            )

    try:
        summary = asyncio.run(go())
    except RuntimeError as exc:
        _fail_from(exc)
    except httpx.HTTPError as exc:
        _fail("transport", str(exc))
    else:
        click.echo(json.dumps(summary, ensure_ascii=False, indent=2))


def _fail_from(exc: RuntimeError) -> None:
    try:
        err = json.loads(str(exc))
    except json.JSONDecodeError:
        err = {"code": "internal_error", "message": str(exc)}
    click.echo(json.dumps(err), err=True)
    sys.exit(1)


@main.group()
def session() -> None:
    """Inspect saved session documents."""


@session.command("show")
@click.argument("file", type=click.Path(exists=True))
def session_show(file: str):
    """Summarize a session file."""
    s = load_session(file)
    lines = [
        f"session {s.id}",
        f"expression: {s.expression.raw}",
        "tokens: " + ", ".join(
            f"{t.surface}/{t.pos}{'*' if t.selected else ''}" for t in s.expression.tokens
        ),
        f"theme: {s.theme.sentence if s.theme else '-'}",
    ]
    for concept, cands in s.candidates.items():
        lines.append(f"candidates[{concept}]: " + ", ".join(c.name for c in cands))
    lines.append(f"prompts: {len(s.prompts)}")
    lines.append(f"canvas items: {len(s.canvas)}")
    lines.append(f"events: {len(s.event_log)}")
    click.echo("\n".join(lines))


if __name__ == "__main__":
    main()
