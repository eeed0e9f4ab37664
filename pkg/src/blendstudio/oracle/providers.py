"""Completion and image providers: live HTTP, fixture playback, recording.

Fixture files hold one record per (template_id, bindings, extra) key with
the raw request and an ordered list of raw responses, replayed attempt by
attempt so recorded retry behaviour reproduces exactly.
"""

from __future__ import annotations

import base64
import hashlib
import json
import struct
import time
import zlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from ..errors import ContentRejected, ImageProviderUnavailable, OracleUnavailable

FIXTURE_SCHEMA_VERSION = 1


@dataclass
class ChatRequest:
    template_id: str
    bindings: dict[str, object]
    extra: str | None
    messages: list[dict]
    temperature: float
    attempt: int = 1


class ChatProvider(Protocol):
    def chat(self, request: ChatRequest) -> str: ...


class ImageProvider(Protocol):
    def generate(self, prompt: str) -> bytes: ...


def fixture_key(template_id: str, bindings: dict[str, object], extra: str | None) -> str:
    canonical = json.dumps(
        {"template_id": template_id, "bindings": bindings, "extra": extra},
        sort_keys=True,
        ensure_ascii=False,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def fixture_path(root: Path, template_id: str, key: str) -> Path:
    return Path(root) / "oracle" / f"{template_id}-{key}.json"


class HttpChatProvider:
    """Chat-completions-style HTTP API client."""

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key: str = "",
        timeout: float = 30.0,
        retries: int = 3,
    ) -> None:
        self.base_url = base_url.rstrip("/")
        self.model = model
        self._api_key = api_key
        self._timeout = timeout
        self._retries = max(1, retries)

    def chat(self, request: ChatRequest) -> str:
        import httpx

        headers = {"Content-Type": "application/json"}
        if self._api_key:
            headers["Authorization"] = f"Bearer {self._api_key}"
        body = {
            "model": self.model,
            "messages": request.messages,
            "temperature": request.temperature,
        }
        last_exc: Exception | None = None
        for attempt in range(self._retries):
            try:
                resp = httpx.post(
                    f"{self.base_url}/chat/completions",
                    json=body,
                    headers=headers,
                    timeout=self._timeout,
                )
                if resp.status_code >= 500:
                    raise OracleUnavailable(f"provider returned {resp.status_code}")
                resp.raise_for_status()
                return resp.json()["choices"][0]["message"]["content"]
            except OracleUnavailable as exc:
                last_exc = exc
            except Exception as exc:  # transport, auth, shape
                last_exc = exc
                if getattr(getattr(exc, "response", None), "status_code", 500) < 500:
                    break  # 4xx will not heal on retry
            time.sleep(min(2.0, 0.25 * 2**attempt))
        raise OracleUnavailable(f"chat completion failed after {self._retries} attempts: {last_exc}")


class FixtureChatProvider:
    """Replays recorded completions; missing fixtures are a hard error."""

    def __init__(self, root: str | Path) -> None:
        self.root = Path(root)

    def chat(self, request: ChatRequest) -> str:
        key = fixture_key(request.template_id, request.bindings, request.extra)
        path = fixture_path(self.root, request.template_id, key)
        if not path.exists():
            raise OracleUnavailable(
                f"no recorded fixture for template={request.template_id} key={key} "
                f"(expected {path})"
            )
        record = json.loads(path.read_text(encoding="utf-8"))
        responses = record.get("responses", [])
        if not responses:
            raise OracleUnavailable(f"fixture {path} holds no responses")
        index = min(request.attempt - 1, len(responses) - 1)
        return responses[index]


class RecordingChatProvider:
    """Delegates to a live provider and appends responses to fixture files."""

    def __init__(self, live: ChatProvider, root: str | Path) -> None:
        self.live = live
        self.root = Path(root)

    def chat(self, request: ChatRequest) -> str:
        text = self.live.chat(request)
        key = fixture_key(request.template_id, request.bindings, request.extra)
        path = fixture_path(self.root, request.template_id, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.exists():
            record = json.loads(path.read_text(encoding="utf-8"))
        else:
            record = {
                "schema_version": FIXTURE_SCHEMA_VERSION,
                "template_id": request.template_id,
                "bindings": request.bindings,
                "extra": request.extra,
                "request": {"messages": request.messages, "temperature": request.temperature},
                "responses": [],
            }
        record["responses"].append(text)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(record, ensure_ascii=False, indent=2), encoding="utf-8")
        tmp.replace(path)
        return text


class HttpImageProvider:
    """Image-generation HTTP API client (b64 payload in, PNG bytes out)."""

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key: str = "",
        timeout: float = 120.0,
        retries: int = 3,
    ) -> None:
        self.base_url = base_url.rstrip("/")
        self.model = model
        self._api_key = api_key
        self._timeout = timeout
        self._retries = max(1, retries)

    def generate(self, prompt: str) -> bytes:
        import httpx

        headers = {"Content-Type": "application/json"}
        if self._api_key:
            headers["Authorization"] = f"Bearer {self._api_key}"
        body = {"model": self.model, "prompt": prompt, "n": 1, "response_format": "b64_json"}
        last_exc: Exception | None = None
        for attempt in range(self._retries):
            try:
                resp = httpx.post(
                    f"{self.base_url}/images/generations",
                    json=body,
                    headers=headers,
                    timeout=self._timeout,
                )
                if resp.status_code == 400 and "content_policy" in resp.text:
                    raise ContentRejected("image provider refused the prompt")
                if resp.status_code >= 500:
                    raise ImageProviderUnavailable(f"provider returned {resp.status_code}")
                resp.raise_for_status()
                payload = resp.json()
                return base64.b64decode(payload["data"][0]["b64_json"])
            except ContentRejected:
                raise
            except ImageProviderUnavailable as exc:
                last_exc = exc
            except Exception as exc:
                last_exc = exc
                if getattr(getattr(exc, "response", None), "status_code", 500) < 500:
                    break
            time.sleep(min(2.0, 0.25 * 2**attempt))
        raise ImageProviderUnavailable(
            f"image generation failed after {self._retries} attempts: {last_exc}"
        )


class PlaceholderImageProvider:
    """Fixture-mode images: a deterministic solid-color PNG per prompt."""

    def __init__(self, size: int = 64) -> None:
        self.size = size

    def generate(self, prompt: str) -> bytes:
        digest = hashlib.sha256(prompt.encode("utf-8")).digest()
        return solid_png(digest[0], digest[1], digest[2], self.size)


def solid_png(r: int, g: int, b: int, size: int = 64) -> bytes:
    """Minimal PNG encoder for a solid-color square; stdlib only, so the
    bytes are identical across environments."""

    def chunk(tag: bytes, data: bytes) -> bytes:
        return (
            struct.pack(">I", len(data))
            + tag
            + data
            + struct.pack(">I", zlib.crc32(tag + data) & 0xFFFFFFFF)
        )

    header = struct.pack(">IIBBBBB", size, size, 8, 2, 0, 0, 0)
    row = b"\x00" + bytes([r, g, b]) * size
    raw = row * size
    return (
        b"\x89PNG\r\n\x1a\n"
        + chunk(b"IHDR", header)
        + chunk(b"IDAT", zlib.compress(raw, 9))
        + chunk(b"IEND", b"")
    )
